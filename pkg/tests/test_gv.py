from collections import Counter

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from gvindex.series import FR, TruncatedSeries, var_mono
from gvindex.series.expand import expand
from gvindex import gv
from gvindex import stringside as ss
from gvindex import symprod as sp

q, y = var_mono("q"), var_mono("y")
QS = {"t1": (1, q), "t2": (1, -q)}


def b(m, c=1, e=1):
    return FR.binomial(m, c, e)


# -- Moebius inversion -------------------------------------------------------

def test_mobius_values():
    assert [gv.mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_mobius_invert_examples():
    f = b(q, 1, -2)
    assert gv.mobius_invert({(1,): f}) == {(1,): f}
    G = gv.mobius_invert({(1,): f, (2,): f.adams(2).scale(mpq(1, 2))})
    assert (2,) not in G


def test_conifold_has_no_multicover_remainder():
    L = gv.ClassLattice(("Q",), (6,))
    G = gv.mobius_invert(gv.free_energy_by_class(ss.conifold_Z(6), L))
    assert set(G) == {(1,)}


# -- basis change ----------------------------------------------------------------

def test_basis_change_examples():
    assert gv.n_to_N({0: 1}) == {0: 1}
    assert gv.n_to_N({1: 1}) == {0: 2, 1: -1}
    assert gv.extract_gv({}) == {}


@given(st.dictionaries(st.integers(0, 5), st.integers(-9, 9).filter(bool), max_size=6))
def test_basis_change_round_trip(vec):
    assert gv.N_to_n(gv.n_to_N(vec)) == vec
    assert gv.n_to_N(gv.N_to_n(vec)) == vec


@given(st.dictionaries(st.tuples(st.integers(1, 3), st.integers(0, 3), st.integers(0, 2)),
                       st.integers(-4, 4).filter(bool), max_size=5))
def test_extract_inverts_free_energy(entries):
    table = {((r, s), g): v for (r, s, g), v in entries.items()}
    L = gv.ClassLattice(("Q", "Qm"), (3, 3), gradings=("Q",))
    F = gv.free_energy_from_n(table, L)
    assert gv.extract_gv(gv.mobius_invert(F, L)) == table


def test_non_integral_remainder_is_reported():
    with pytest.raises(gv.GVError):
        gv.extract_gv({(1,): b(q, 1, -1)})


# -- tables ------------------------------------------------------------------------

def test_conifold_table():
    L = gv.ClassLattice(("Q",), (6,))
    n, N = gv.gv_from_Z(ss.conifold_Z(6), L)
    assert n == {((1,), 0): 1} and N == {((1,), 0): 1}


def test_5d_table_both_conventions():
    L = gv.ClassLattice(("Q", "Qm"), (3, 6), gradings=("Q",))
    n, N = gv.gv_from_Z(ss.zhat_5d(3), L)
    N = {k: v for k, v in N.items() if k[0][1] <= 3}
    std = {}
    for r in range(1, 4):
        for s in range(4):
            if abs(r - s) == 1:
                std[((r, s), 0)] = 1
            if r == s:
                std[((r, s), 1)] = -1
    assert N == std
    assert gv.to_convention(N, "paper") == {k: abs(v) for k, v in std.items()}


# -- products -------------------------------------------------------------------------

def test_reconstruct_examples():
    L = gv.ClassLattice(("Q",), (5,))
    assert gv.reconstruct_Z({((1,), 0): 1}, L, (5,)) == ss.conifold_Z(5)
    assert gv.reconstruct_Z({}, L, (5,)) == TruncatedSeries.one(("Q",), (5,))
    printed = gv.reconstruct_Z({((1,), 0): 1}, L, (5,), orientation="printed")
    assert printed == ss.conifold_Z(5).inverse()


def test_5d_table_rebuilds_the_ruled_product():
    L = gv.ClassLattice(("Q", "Qm"), (4, 8), gradings=("Q",))
    n, N = gv.gv_from_Z(ss.zhat_5d(4), L)
    z = gv.reconstruct_Z(N, L, (4,))
    assert z == ss.zhat_5d(4)
    assert z == gv.product_series(gv.ruled_product_factors("Qm", 4), ("Q",), (4,))


def test_literal_product_matches_resummed_log():
    fac = gv.ruled_product_factors("Qm", 2)
    lit = gv.product_literal(fac, ("Q",), (2,), 8)
    ser = gv.product_series(fac, ("Q",), (2,))
    for k in range(3):
        # the literal product is exact up to q-degree m_max
        assert expand(FR(lit.get((k,), {})), ("q",), 6) == expand(ser.coefficient(k), ("q",), 6)


# -- C tables -----------------------------------------------------------------------------

def test_c_rows():
    C = gv.c_table(2)
    assert gv.c_row(C, 0) == gv.EQ35
    assert gv.c_row(C, 1) == gv.EQ36
    assert gv.check_c_symmetry(C)


def test_c_p2_row_against_display():
    row = gv.c_row(gv.c_table(2), 2)
    diff = {k for k in set(row) | set(gv.PRINTED_C2) if row.get(k, 0) != gv.PRINTED_C2.get(k, 0)}
    # the computed row differs from the display only at q^(+-1) y^0
    assert diff == {(1, 0), (-1, 0)}
    assert row[(1, 0)] == 2


def test_fold_examples():
    C = gv.c_table(1)
    Ct = gv.fold_to_ctilde(C)
    assert Ct == {(0, 0, 0): 1, (1, 1, 0): 2, (1, 1, 1): -1, (1, 1, -1): -1}
    assert gv.fold_to_ctilde({}) == {}
    assert gv.unfold(Ct) == C


def test_ctilde_product_equals_elliptic_series():
    Ct = gv.fold_to_ctilde(gv.c_table(4))
    se = sp.sym_series("elliptic", (2, 2)).substitute(QS)
    assert gv.product_from_ctilde(Ct, (2, 2)) == se
    with pytest.raises(ValueError):
        gv.product_from_ctilde(gv.fold_to_ctilde(gv.c_table(2)), (2, 2))


def test_a0_slice_matches_ruled_product():
    s = gv.product_from_ctilde({(0, 0, 0): 1}, (4, 0), check_depth=False).restrict("p")
    ruled = gv.product_series(gv.ruled_product_factors("y", 4), ("Q",), (4,))
    assert s == ruled.scale_grading("Q", FR.monomial(-y))


def _key(f):
    return (f.e, f.grade, f.key, f.s)


def test_a1_l1_slice_is_reciprocal_of_the_pair_displays():
    Ct = gv.fold_to_ctilde(gv.c_table(1))
    ours = Counter(_key(f) for f in gv.ctilde_factors(Ct, (1, 1)) if f.grade == (1, 1))
    shown = Counter()
    for bb, c, C in ((1, 0, 2), (-1, 0, 2), (1, 1, -1), (-1, 1, -1), (1, -1, -1), (-1, -1, -1)):
        # (1 - X q^(m+b+2) y^c)(1 - X q^(m+b) y^c) / ((1 - X q^(m+b+1) y^(c-1))(...y^(c+1)))
        for e, cc, s in ((C, c, bb + 2), (C, c, bb), (-C, c - 1, bb + 1), (-C, c + 1, bb + 1)):
            shown[(-e, (1, 1), cc * y, s)] += 1
    assert ours == shown


def test_6d_gv_table_matches_ctilde_prediction():
    se = sp.sym_series("elliptic", (2, 1)).substitute(QS)
    L = gv.ClassLattice(("Q", "p", "y"), (2, 1, 12), gradings=("Q", "p"), lower=(0, 0, -12))
    n, N = gv.gv_from_Z(se, L)
    assert N == gv.ctilde_gv_prediction(gv.fold_to_ctilde(gv.c_table(2)), (2, 1))
