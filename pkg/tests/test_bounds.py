import math

import numpy as np
import pytest
from conftest import complex_matrices
from hypothesis import given

from dwradius import bounds
from dwradius.builtins import builtin_matrix
from dwradius.errors import BadExponent, DimensionMismatch
from dwradius.properties import random_complex, random_normal
from dwradius.quantities import crawford, dw_radius, op_norm, w
from dwradius.report import catalog_violations

TOL = 5e-3


def by_id(results):
    return {b.id: b for b in results}


@pytest.fixture(scope="module")
def catalogs():
    names = ("t1", "t2", "t3", "t4", "diag-1-2", "diag1-1")
    return {name: by_id(bounds.full_catalog(builtin_matrix(name))) for name in names}


# (matrix, bound id, expected, scale) with scale "sq" for dw^2 and "dw" for dw
REFERENCE_VALUES = [
    ("diag-1-2", "thm2.6", 34.0, "sq"),
    ("diag-1-2", "zs2.1", 52.0, "sq"),
    ("diag1-1", "thm2.8upper", 4.0, "sq"),
    ("diag1-1", "thm2.8lower", 2.0, "sq"),
    ("t3", "zs2.1", 6.283, "sq"),
    ("t3", "zs2.7", 35.416, "sq"),
    ("t3", "zs2.13", 6.828, "sq"),
    ("t3", "zs2.14", 6.828, "sq"),
    ("t3", "zs2.16", 6.325, "sq"),
    ("t3", "zs2.17", 6.58, "sq"),
    ("t3", "thm2.16i", 6.0, "sq"),
    ("t3", "thm2.16ii", 5.6, "sq"),
    ("t2", "thm2.19", 4.123, "dw"),
    ("t2", "zs2.1", 5.0935, "dw"),
    ("t2", "zs2.2", 4.2426, "dw"),
    ("t2", "zs2.17", 4.6006, "dw"),
]


@pytest.mark.parametrize("name,bound_id,expected,scale", REFERENCE_VALUES,
                         ids=[f"{m}-{b}" for m, b, _, _ in REFERENCE_VALUES])
def test_reference_value(catalogs, name, bound_id, expected, scale):
    b = catalogs[name][bound_id]
    got = b.squared if scale == "sq" else b.value
    assert abs(got - expected) <= TOL, f"{bound_id} on {name}: {got:.6f} vs {expected}"


TABLE = {
    "t1": {"thm2.8upper": 21.357, "cor2.13ii": 18.5, "thm2.16i": 20, "thm2.16ii": 19, "thm2.19": 18.25},
    "t2": {"thm2.8upper": 17.944, "cor2.13ii": 18, "thm2.16i": 20, "thm2.16ii": 18, "thm2.19": 17},
    "t3": {"thm2.8upper": 5.4753, "cor2.13ii": 5.5495, "thm2.16i": 6, "thm2.16ii": 5.6, "thm2.19": 5.4568},
    "t4": {"thm2.8upper": 9.056, "cor2.13ii": 9.272, "thm2.16i": 9.472, "thm2.16ii": 9.162, "thm2.19": 9.104},
}


@pytest.mark.parametrize("name", sorted(TABLE))
def test_catalog_contains_table_column(catalogs, name):
    for bound_id, expected in TABLE[name].items():
        assert abs(catalogs[name][bound_id].squared - expected) <= TOL, bound_id


def test_zs27_formula_on_hermitian_unitary():
    # diag(1,-1): w = 1, c = 0, T^2 = I and |T|^2 + |T*|^2 = 2I,
    # so the bound squares to 1/2 + 1/2 + 4 * (2 + 2) = 17
    b = by_id(bounds.zs_reference_bounds(np.diag([1.0, -1.0])))["zs2.7"]
    assert b.squared == pytest.approx(17.0, abs=1e-9)


def test_classic_examples():
    lo, up = bounds.classic_bounds(np.eye(2))
    assert up.value == pytest.approx(math.sqrt(2))
    lo, _ = bounds.classic_bounds(np.array([[0, 1], [0, 0]]))
    assert lo.value == pytest.approx(1.0)
    lo, up = bounds.classic_bounds(np.zeros((2, 2)))
    assert lo.value == up.value == 0.0


def test_thm24_examples():
    i, ii = bounds.lower_thm24(np.eye(2))
    assert i.value == pytest.approx(math.sqrt(2))
    assert ii.value == pytest.approx(math.sqrt(2))
    assert all(b.value == 0.0 for b in bounds.lower_thm24(np.zeros((3, 3))))


def test_thm26_examples():
    assert bounds.upper_thm26(np.zeros((2, 2))).value == 0.0
    b = bounds.upper_thm26(np.diag([1.0, -1.0]))
    assert b.value >= math.sqrt(2) - 1e-9


def test_thm212_power_examples():
    assert bounds.upper_thm212_power(np.eye(2)).value == pytest.approx(math.sqrt(2))
    assert bounds.upper_thm212_power(np.zeros((2, 2))).value == 0.0
    with pytest.raises(BadExponent):
        bounds.upper_thm212_power(np.eye(2), alpha1=1.0)
    with pytest.raises(BadExponent):
        bounds.upper_thm212_power(np.eye(2), s=1.5)


def test_thm219_does_not_exceed_classic(rng):
    for n in (2, 3, 4):
        T = random_complex(rng, n)
        b = bounds.upper_thm219(T)
        classic = bounds.classic_bounds(T)[1].value
        assert b.value <= classic + 1e-9
        assert b.value >= dw_radius(T)[0] - 1e-6


def test_subadditivity_examples():
    I2 = np.eye(2)
    lhs, rhs = bounds.subadditivity_check(I2, I2)
    assert lhs == pytest.approx(math.sqrt(20))
    assert rhs == pytest.approx(2 * math.sqrt(2) + 2)
    T = builtin_matrix("t3")
    lhs, rhs = bounds.subadditivity_check(np.zeros((2, 2)), T)
    assert lhs == pytest.approx(rhs)
    A = np.array([[0, 1], [0, 1]])
    S = np.block([[np.zeros((2, 2)), A], [np.zeros((2, 2)), np.zeros((2, 2))]])
    Tt = np.block([[np.zeros((2, 2)), np.zeros((2, 2))], [A, np.zeros((2, 2))]])
    assert np.allclose(S.conj().T @ Tt + Tt.conj().T @ S, 0)
    lhs, rhs = bounds.subadditivity_check(S, Tt)
    assert lhs <= rhs + 1e-6
    with pytest.raises(DimensionMismatch):
        bounds.subadditivity_check(np.eye(2), np.eye(3))


def test_norm_gap_inf(rng):
    assert bounds.norm_gap_inf(random_normal(rng, 3))[0] == 0.0
    # here ||Tx|| = 2|x_2| and ||T*x|| = 2|x_1|, which agree whenever |x_1| = |x_2|
    val, x = bounds.norm_gap_inf(builtin_matrix("t2"))
    assert val <= 1e-12
    assert np.linalg.norm(x) == pytest.approx(1.0)


def test_equality_diagnostics():
    d = bounds.equality_diagnostics(np.zeros((2, 2)))
    assert d.dw_eq_w
    d = bounds.equality_diagnostics(np.eye(2))
    assert not d.dw_eq_w
    d = bounds.equality_diagnostics(builtin_matrix("counter3"))
    assert d.norm_witness_crawford_value == pytest.approx(0.0, abs=1e-12)
    assert not d.dw_eq_norm_sq
    assert dw_radius(builtin_matrix("counter3"))[0] >= 3 / 8 > 1 / 4
    d = bounds.equality_diagnostics(builtin_matrix("shift2"))
    assert d.dw_eq_norm_sq and d.dw_eq_norm_sq_consistent


def test_catalog_sort_order(catalogs):
    entries = bounds.full_catalog(builtin_matrix("t4"))
    kinds = [b.kind for b in entries]
    est = kinds.index(bounds.ESTIMATE)
    assert set(kinds[:est]) <= {bounds.LOWER}
    assert set(kinds[est + 1:]) <= {bounds.UPPER}
    lows = [b.value for b in entries[:est]]
    ups = [b.value for b in entries[est + 1:]]
    assert lows == sorted(lows, reverse=True)
    assert ups == sorted(ups)
    assert len({b.id for b in entries}) == len(entries)


def test_catalog_citations_are_formulas(catalogs):
    for b in catalogs["t1"].values():
        assert b.citation
        assert "Th" not in b.citation and "Cor" not in b.citation


@pytest.mark.parametrize("seed", range(12))
def test_catalog_is_valid_on_random_matrices(seed):
    rng = np.random.default_rng(1000 + seed)
    n = 2 + seed % 4
    T = random_complex(rng, n) * rng.uniform(0.2, 3.0)
    assert catalog_violations(bounds.full_catalog(T)) == []


@given(complex_matrices(2, 3, bound=2.0))
def test_catalog_is_valid_hypothesis(T):
    assert catalog_violations(bounds.full_catalog(T)) == []


def test_normaloid_makes_classic_upper_tight(rng):
    T = random_normal(rng, 3)
    cat = by_id(bounds.full_catalog(T))
    assert cat["classic.upper"].value == pytest.approx(cat["dw.est"].value, abs=1e-6)
    assert cat["dw.est"].value >= math.sqrt(w(T) ** 2 + op_norm(T) ** 4) - 1e-6


def test_catalog_on_gaussian_corpus():
    rng = np.random.default_rng(4242)
    bad = []
    for k in range(100):
        T = random_complex(rng, 2 + k % 5)
        bad += catalog_violations(bounds.full_catalog(T))
    assert bad == []


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_normal_matrices_make_four_uppers_exact(rng, n):
    T = random_normal(rng, n)
    cat = by_id(bounds.full_catalog(T))
    dw = cat["dw.est"].value
    for bid in ("cor2.13ii", "thm2.16i", "thm2.16ii", "thm2.19"):
        assert cat[bid].value == pytest.approx(dw, abs=1e-5), bid


def test_second_crawford_bound_dominates_when_field_is_far_from_origin(rng):
    # near-scalar matrices with scale in [1, 2) satisfy c > ||T||^2 / 2 and w <= ||T||^2
    tested = 0
    for _ in range(40):
        n = int(rng.integers(2, 5))
        a = rng.uniform(1.05, 1.9)
        T = a * (np.eye(n) + 0.05 * random_complex(rng, n))
        c, nrm, wv = crawford(T), op_norm(T), w(T)
        if not (c > nrm ** 2 / 2 + 1e-6 and wv <= nrm ** 2 - 1e-6):
            continue
        tested += 1
        part_ii = bounds.lower_thm24(T)[1].value
        assert part_ii >= bounds.classic_bounds(T)[0].value - 1e-9
    assert tested >= 10
