from __future__ import annotations

import json
import math
from fractions import Fraction

import pytest

import _tables_m9 as tables
from zetacomb.numcore import Basis
from zetacomb.trimat import LowerTriMatrix
from zetacomb.zetadiff import (
    DEFAULT_SAMPLES,
    CoeffReport,
    ExpectedSign,
    Route,
    combination_matrix,
    compare_stirling2_matrix,
    hyper_poly,
    hyper_poly_coeffs,
    scan_sign_pattern,
    verify_combination,
    verify_polynomial_forms,
    zeta_diff,
    zeta_diff_coeffs,
)

SAMPLES = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3)]


# --- the two function families -------------------------------------------------


def test_zeta_diff_m0_is_constant_half():
    for x in SAMPLES:
        assert zeta_diff(0, x) == Fraction(1, 2)


def test_zeta_diff_point_values():
    assert zeta_diff(1, 0) == Fraction(1, 4)
    assert zeta_diff(2, 0) == 0
    assert zeta_diff(3, 0) == Fraction(-1, 8)


def test_hyper_poly_m0_is_one():
    for x in SAMPLES:
        assert hyper_poly(0, x) == 1


def test_hyper_poly_linear():
    # G(1, x) = 1 + 2x
    assert hyper_poly(1, 3) == 7
    assert hyper_poly(1, Fraction(1, 2)) == 2


def test_hyper_poly_at_zero_is_factorial():
    for m in range(13):
        assert hyper_poly(m, 0) == math.factorial(m)


# --- coefficient builders vs frozen tables --------------------------------------


def test_zeta_diff_coeffs_monomial_fixture():
    assert zeta_diff_coeffs(9, Basis.MONOMIAL) == tables.matrix(tables.A10)


def test_hyper_poly_coeffs_monomial_fixture():
    assert hyper_poly_coeffs(9, Basis.MONOMIAL) == tables.matrix(tables.B10)


def test_zeta_diff_coeffs_shifted_fixture():
    assert zeta_diff_coeffs(9, Basis.SHIFTED) == tables.matrix(tables.A10_SHIFTED)


def test_hyper_poly_coeffs_shifted_fixture():
    assert hyper_poly_coeffs(9, Basis.SHIFTED) == tables.matrix(tables.B10_SHIFTED)


def test_diagonal_laws():
    for m in range(13):
        a_mono = zeta_diff_coeffs(m, Basis.MONOMIAL)
        a_shift = zeta_diff_coeffs(m, Basis.SHIFTED)
        b_mono = hyper_poly_coeffs(m, Basis.MONOMIAL)
        b_shift = hyper_poly_coeffs(m, Basis.SHIFTED)
        for i in range(m + 1):
            assert a_mono.get(i, i) == Fraction(1, 2)
            assert a_shift.get(i, i) == Fraction(1, 2)
            assert b_mono.get(i, i) == 2**i
            assert b_shift.get(i, i) == 2**i


def test_hyper_poly_coeffs_first_column():
    # column 0 of the monomial table is G(i, 0) = i!
    b = hyper_poly_coeffs(12, Basis.MONOMIAL)
    for i in range(13):
        assert b.get(i, 0) == math.factorial(i)


def test_builders_expand_their_functions():
    # row i of each table must reproduce the function it encodes
    m = 7
    a = zeta_diff_coeffs(m, Basis.MONOMIAL)
    b = hyper_poly_coeffs(m, Basis.MONOMIAL)
    for i in range(m + 1):
        for x in SAMPLES:
            assert sum(a.get(i, j) * x**j for j in range(i + 1)) == zeta_diff(i, x)
            assert sum(b.get(i, j) * x**j for j in range(i + 1)) == hyper_poly(i, x)


# --- the combination matrix ------------------------------------------------------


def test_combination_matrix_m0():
    assert combination_matrix(0).matrix.rows() == [(Fraction(1, 2),)]


def test_combination_matrix_fixture_entries():
    mat = combination_matrix(9).matrix
    assert mat == tables.matrix(tables.PRODUCT10)
    assert mat.get(9, 1) == Fraction(691, 4)
    assert mat.get(8, 2) == Fraction(-55)


def test_combination_matrix_diagonal():
    mat = combination_matrix(11).matrix
    for i in range(12):
        assert mat.get(i, i) == Fraction(1, 2 ** (i + 1))


def test_routes_agree():
    for m in range(9):
        reports = [combination_matrix(m, route) for route in Route]
        assert all(r.matrix == reports[0].matrix for r in reports)
        assert {r.route for r in reports} == set(Route)


def test_coeff_report_json_round_trip():
    report = combination_matrix(5, Route.SHIFTED_SERIES)
    doc = json.loads(json.dumps(report.to_json_dict()))
    assert doc["m"] == 5
    assert doc["route"] == "shifted-series"
    assert CoeffReport.from_json_dict(doc) == report


def test_coeff_report_rejects_bad_diagonal():
    wrong = LowerTriMatrix.identity(3)
    with pytest.raises(ValueError):
        CoeffReport(m=2, route=Route.MONOMIAL, matrix=wrong)


# --- verification ------------------------------------------------------------------


def test_verify_combination_default_window():
    report = verify_combination(9)
    assert report.passed
    assert report.violations == ()
    assert report.samples == DEFAULT_SAMPLES


def test_verify_combination_m0_custom_sample():
    report = verify_combination(0, samples=[Fraction(17)])
    assert report.passed


def test_verify_combination_m1():
    assert verify_combination(1, samples=[Fraction(0)]).passed


def test_verify_combination_detects_tampering():
    good = combination_matrix(3).matrix
    rows = [list(r) for r in good.rows()]
    rows[2][0] += 1
    bad = LowerTriMatrix.from_rows(rows)
    report = verify_combination(3, matrix=bad)
    assert not report.passed
    assert report.violations
    assert all(v.row == 2 for v in report.violations)
    residual = report.violations[0].residual
    assert residual != 0


def test_verify_report_json_shape():
    doc = verify_combination(2).to_json_dict()
    assert set(doc) == {"m", "samples", "pass", "violations"}
    assert doc["pass"] is True
    assert doc["violations"] == []


def test_verify_polynomial_forms():
    assert verify_polynomial_forms(0)
    assert verify_polynomial_forms(3)
    assert verify_polynomial_forms(9)


def test_verify_polynomial_forms_fixture_matrices():
    mats = (
        tables.matrix(tables.A10),
        tables.matrix(tables.B10),
        tables.matrix(tables.A10_SHIFTED),
        tables.matrix(tables.B10_SHIFTED),
    )
    assert verify_polynomial_forms(9, matrices=mats)


def test_verify_polynomial_forms_rejects_wrong_table():
    rows = [list(r) for r in tables.matrix(tables.A10).rows()]
    rows[5][2] += Fraction(1, 3)
    mats = (
        tables.matrix(tables.A10),
        tables.matrix(tables.B10),
        tables.matrix(tables.A10_SHIFTED),
        tables.matrix(tables.B10_SHIFTED),
    )
    broken = (LowerTriMatrix.from_rows(rows),) + mats[1:]
    assert not verify_polynomial_forms(9, matrices=broken)


# --- sign pattern scan ----------------------------------------------------------------


def test_scan_sign_pattern_clean_to_9():
    finding = scan_sign_pattern(9)
    assert finding.max_m == 9
    assert finding.violations == ()
    assert finding.checked == sum(i for i in range(10))  # strictly-below-diagonal count


def test_scan_sign_pattern_m0():
    finding = scan_sign_pattern(0)
    assert finding.checked == 0
    assert finding.violations == ()


def test_scan_sign_pattern_flags_doctored_matrix():
    good = combination_matrix(4).matrix
    rows = [list(r) for r in good.rows()]
    rows[1][0] = Fraction(5)  # i-j odd: must be zero
    rows[2][0] = Fraction(5)  # i-j == 2 mod 4: must be negative
    rows[4][0] = Fraction(-5)  # i-j == 0 mod 4: must be positive
    bad = LowerTriMatrix.from_rows(rows)
    finding = scan_sign_pattern(4, matrix=bad)
    got = {(v.i, v.j): v.expected for v in finding.violations}
    assert got == {
        (1, 0): ExpectedSign.ZERO,
        (2, 0): ExpectedSign.NEGATIVE,
        (4, 0): ExpectedSign.POSITIVE,
    }


def test_sign_finding_json():
    doc = scan_sign_pattern(3).to_json_dict()
    assert doc == {"max_m": 3, "checked": 6, "violations": []}


# --- the near-miss comparison -----------------------------------------------------------


def test_compare_stirling2_m0_matches():
    assert compare_stirling2_matrix(0) is None


def test_compare_stirling2_first_difference():
    assert compare_stirling2_matrix(1) == (1, 0)
    assert compare_stirling2_matrix(2) == (1, 0)


def test_compare_stirling2_always_differs_for_positive_m():
    for m in range(1, 13):
        assert compare_stirling2_matrix(m) is not None
