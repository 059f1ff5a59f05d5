"""Tests for the pair registry, catalog, and Efros composition."""

import math

import pytest

from fltrans.pairs import (
    PAIR_IDS,
    ConstraintError,
    EdgeError,
    UnknownPairError,
    ValidityError,
    catalog_list,
    catalog_lookup,
    efros_compose,
    eval_fl,
    eval_spacetime,
    lookup,
    make_pair_15,
    registry_rows,
    registry_text,
    roots_tau,
)
from fltrans.laplace import forward_laplace
from fltrans.numerics import QuadratureSpec

SPEC = QuadratureSpec()
EXP1 = catalog_lookup("exp_decay:1")


# --- registry -----------------------------------------------------------------

def test_registry_has_exactly_nine_rows():
    rows = registry_rows()
    assert len(rows) == 9
    assert tuple(r.id for r in rows) == PAIR_IDS


def test_lookup_and_alias():
    assert lookup("2.1").fl_phi(1.0, 2.0) == pytest.approx(math.sqrt(5.0))
    assert lookup("2D-SDT").id == "2.1"
    assert lookup("1.4").st_argument(2.0, 7.0) == pytest.approx(3.0)


def test_lookup_unknown_id():
    with pytest.raises(UnknownPairError):
        lookup("9.9")


def test_type_indices_phi_shape():
    # type-1 rows multiply F(s); type-2 rows feed a k-dependent argument
    for row in registry_rows():
        phi_0 = row.fl_phi(0.0, 1.7)
        phi_k = row.fl_phi(2.0, 1.7)
        if row.type_one:
            assert phi_0 == phi_k == pytest.approx(1.7)
        else:
            assert abs(phi_k - phi_0) > 1e-12


def test_branch_sanity_real_positive_inputs():
    # real k >= 0 and real s > 0 give real positive psi and real phi
    for row in registry_rows():
        for d in (1, 2, 3):
            if not row.dim_constraint(d):
                continue
            for k in (0.0, 0.5, 2.0):
                for s in (0.3, 1.0, 4.0):
                    psi = row.fl_psi(k, complex(s), d)
                    phi = row.fl_phi(k, complex(s))
                    assert abs(psi.imag) < 1e-13 * abs(psi)
                    assert psi.real > 0.0
                    assert abs(phi.imag) < 1e-13 * max(1.0, abs(phi))
                    assert phi.real >= 0.0


def test_pair_15_with_a_zero_degenerates_to_12():
    p15 = make_pair_15(0.0)
    p12 = lookup("1.2")
    for d in (1, 2, 3):
        for r, t in ((0.5, 2.0), (1.0, 3.0)):
            assert p15.st_prefactor(r, t, d) == pytest.approx(
                p12.st_prefactor(r, t, d), rel=1e-12)
            assert p15.st_argument(r, t) == pytest.approx(p12.st_argument(r, t))
        for k, s in ((0.5, 1.0), (2.0, 0.7)):
            assert p15.fl_psi(k, complex(s), d) == pytest.approx(
                p12.fl_psi(k, complex(s), d), rel=1e-12)


# --- catalog ------------------------------------------------------------------

def test_catalog_contents():
    ids = [o.id for o in catalog_list()]
    for required in ("exp_decay:0.5", "exp_decay:1", "exp_decay:2",
                     "poly_exp:1,1", "poly_exp:2,1", "sine:1", "unit"):
        assert required in ids


def test_catalog_closed_form_values():
    assert catalog_lookup("exp_decay:1").f.eval(0.0) == 1.0
    assert catalog_lookup("exp_decay:1").fhat.eval(1.0) == pytest.approx(0.5)
    assert catalog_lookup("unit").fhat.eval(2.0) == pytest.approx(0.5)
    assert catalog_lookup("poly_exp:1,1").fhat.eval(1.0) == pytest.approx(0.25)


def test_catalog_images_match_numeric_transform():
    # TestOriginal invariant: forward_laplace(f, s) = fhat(s) to 1e-9
    for entry in catalog_list():
        for s in (0.5, 1.0, 3.0):
            if s <= entry.f.sigma0 + 0.1:
                continue
            got = forward_laplace(entry.f, s, SPEC)
            want = entry.fhat.eval(s)
            assert abs(got - want) <= 1e-9 * max(1.0, abs(want)), entry.id


def test_catalog_unknown():
    with pytest.raises(UnknownPairError):
        catalog_lookup("nope:1")


# --- eval_spacetime -------------------------------------------------------------

def test_eval_spacetime_21_value():
    got = eval_spacetime(lookup("2.1"), 2, EXP1, 3.0, 5.0)
    assert got == pytest.approx(math.exp(-4.0) / (8.0 * math.pi), rel=1e-12)


def test_eval_spacetime_21_outside_support():
    assert eval_spacetime(lookup("2.1"), 2, EXP1, 5.0, 3.0) == 0.0


def test_eval_spacetime_11_value():
    got = eval_spacetime(lookup("1.1"), 3, EXP1, 1.0, 2.0)
    assert got == pytest.approx(math.exp(-1.0) / (4.0 * math.pi), rel=1e-12)


def test_eval_spacetime_24_two_branches():
    # both roots t -+ sqrt(t^2-r^2) contribute
    r, t, d = 1.0, 2.0, 2
    q = math.sqrt(t * t - r * r)
    want = (math.exp(-(t - q)) + math.exp(-(t + q))) / (2 * math.pi * q)
    got = eval_spacetime(lookup("2.4"), d, EXP1, r, t)
    assert got == pytest.approx(want, rel=1e-12)


def test_eval_spacetime_dimension_constraint():
    with pytest.raises(ConstraintError):
        eval_spacetime(lookup("1.3"), 2, EXP1, 0.5, 2.0)
    with pytest.raises(ConstraintError):
        eval_spacetime(lookup("1.1"), 1, EXP1, 0.5, 2.0)


def test_eval_spacetime_edge_refused():
    with pytest.raises(EdgeError):
        eval_spacetime(lookup("2.1"), 2, EXP1, 2.0, 2.0)
    with pytest.raises(EdgeError):
        eval_spacetime(lookup("2.4"), 2, EXP1, 2.0, 2.0000001)


def test_eval_spacetime_23_reversed_support():
    # entry 2.3 lives at r > t
    pair = lookup("2.3")
    assert eval_spacetime(pair, 2, EXP1, 0.5, 2.0) == 0.0
    assert eval_spacetime(pair, 2, EXP1, 2.0, 0.5) > 0.0


# --- eval_fl ---------------------------------------------------------------------

def test_eval_fl_21():
    got = eval_fl(lookup("2.1"), 2, EXP1, 1.0, 1.0)
    want = 1.0 / (math.sqrt(2.0) * (math.sqrt(2.0) + 1.0))
    assert got.real == pytest.approx(want, rel=1e-12)
    assert abs(got.imag) < 1e-15


def test_eval_fl_22():
    got = eval_fl(lookup("2.2"), 2, EXP1, 2.0, 1.0)
    assert got.real == pytest.approx(0.2, rel=1e-12)


def test_eval_fl_11():
    got = eval_fl(lookup("1.1"), 3, EXP1, 1.0, 1.0)
    assert got.real == pytest.approx(0.25, rel=1e-12)


def test_eval_fl_validity_error():
    # left of the abscissa, Re phi < sigma0: the literal Laplace-integral
    # reading breaks down and eval_fl refuses unless asked to continue
    s = complex(-3.0, 0.5)
    with pytest.raises(ValidityError):
        eval_fl(lookup("2.1"), 2, EXP1, 1.0, s)
    val = eval_fl(lookup("2.1"), 2, EXP1, 1.0, s, check_validity=False)
    assert abs(val) > 0.0


# --- roots_tau / efros_compose -----------------------------------------------------

def test_roots_tau_values():
    pair = lookup("2.1")
    roots = roots_tau(pair, 3.0, 5.0)
    assert len(roots) == 1
    u1, jac = roots[0]
    assert u1 == pytest.approx(4.0, rel=1e-14)
    assert jac == pytest.approx(4.0 / 3.0, rel=1e-14)


def test_roots_tau_empty_outside_cone():
    pair = lookup("2.1")
    assert roots_tau(pair, 5.0, 3.0) == []
    assert roots_tau(pair, 3.0, 3.0) == []


def test_efros_compose_matches_row_21():
    # spec invariant: exact algebra, 1e-12, no quadrature
    composed = efros_compose(EXP1, 2)
    pair = lookup("2.1")
    for r, t in ((3.0, 5.0), (0.5, 1.0), (1.0, 4.0)):
        assert composed.spacetime_side(r, t) == pytest.approx(
            eval_spacetime(pair, 2, EXP1, r, t), rel=1e-12)
    for k, s in ((1.0, 1.0), (0.5, 2.0), (2.0, 0.8)):
        assert composed.fl_side(k, complex(s)) == pytest.approx(
            eval_fl(pair, 2, EXP1, k, complex(s)), rel=1e-12)


def test_efros_compose_spec_values():
    composed = efros_compose(EXP1, 2)
    assert composed.fl_side(1.0, 1.0).real == pytest.approx(
        1.0 / (math.sqrt(2.0) * (math.sqrt(2.0) + 1.0)), rel=1e-7)
    assert composed.spacetime_side(3.0, 5.0) == pytest.approx(
        math.exp(-4.0) / (8.0 * math.pi), rel=1e-6)
    unit = catalog_lookup("unit")
    assert efros_compose(unit, 2).fl_side(0.0, 1.0).real == pytest.approx(1.0)


def test_efros_compose_rejects_other_dimensions():
    with pytest.raises(ConstraintError):
        efros_compose(EXP1, 3)


def test_registry_text_lists_all_rows():
    text = registry_text()
    for pid in PAIR_IDS:
        assert pid in text
