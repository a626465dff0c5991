from gmpy2 import mpq
from hypothesis import given, strategies as st

from gvindex.partitions import enumerate_multipartitions
from gvindex.series import FR, mono, var_mono
from gvindex.series.expand import expand_partial
from gvindex import instanton as inst
from gvindex import stringside as ss

t1, t2, y, e1 = (var_mono(n) for n in ("t1", "t2", "y", "e1"))


def b(m, c=1, e=1):
    return FR.binomial(m, c, e)


def test_weight_examples():
    assert sorted(inst.tangent_weights([(1,)])) == sorted([t1, t2])
    want = [2 * t2, t2, t1 - t2, t1]
    assert sorted(inst.tangent_weights([(2,)])) == sorted(want)
    assert inst.tangent_weights([(), ()]) == []


def test_v_bundle_examples():
    ws, det = inst.v_bundle_weights([(2,)])
    assert sorted(ws) == sorted([e1, e1 - t2])
    assert det == -2 * e1 + t2
    assert inst.v_bundle_weights([(1,)])[1] == -e1
    assert inst.v_bundle_weights([()]) == ([], 0)


def test_genus_examples():
    chi0 = inst.genus_series(1, "chi0", 2)
    assert chi0.coefficient(1) == b(t1, 1, -1) * b(t2, 1, -1)
    chiy = inst.genus_series(1, "chiy", 1)
    assert chiy.coefficient(1) == b(t1 + y) * b(t2 + y) * b(t1, 1, -1) * b(t2, 1, -1)
    for flavor, cut in (("chi0", 2), ("chiy", 2), ("elliptic", (2, 1))):
        s = inst.genus_series(2, flavor, cut)
        assert s.coeffs[(0,) * len(s.gvars)] == 1


def test_twisted_index_examples():
    s0 = inst.twisted_index_series(1, 0, 1)
    half = lambda m: FR({m // 2: 1, -(m // 2): -1})  # w^(1/2) - w^(-1/2)
    assert s0.coefficient(1) == (half(t1) * half(t2)).inverse()
    s1 = inst.twisted_index_series(1, 1, 1)
    assert s1.coefficient(1) == s0.coefficient(1) * FR.monomial(-e1)
    assert inst.twisted_index_series(2, 1, 0).coefficient(0) == 1


def test_chiy_at_zero_is_chi0():
    a = inst.genus_series(2, "chiy", 2).map_coeffs(lambda c: expand_partial(c, ("y",), 0))
    assert a == inst.genus_series(2, "chi0", 2)


def test_elliptic_p0_is_normalized_chiy():
    for N in (1, 2):
        ell = inst.genus_series(N, "elliptic", (2, 0)).restrict("p")
        chiy = inst.genus_series(N, "chiy", 2)
        for k in range(3):
            assert ell.coefficient(k) == chiy.coefficient(k) * FR.monomial(-N * k * y)


def test_worker_count_does_not_matter():
    assert inst.genus_series(2, "chiy", 2, workers=3) == inst.genus_series(2, "chiy", 2)


def test_konishi_example_and_bounds():
    assert inst.konishi_check([(1,), ()])
    mus = [(2, 1), (1,)]
    L, T = inst.default_bounds(mus)
    assert inst.konishi_rhs(mus, L, T) == inst.konishi_rhs(mus, L + 3, T)


def test_sinh_form_examples():
    assert inst.sinh_form_series(1, 0, 0).coefficient(0) == 1
    idx = inst.twisted_index_series(1, 0, 2).substitute(inst.unrefined_substitution())
    assert inst.sinh_form_series(1, 0, 2) == idx


def test_prefactor_is_two_to_minus_2n():
    assert inst.derive_prefactor(1) == mpq(1, 4)
    assert inst.derive_prefactor(2) == mpq(1, 16)


def test_quarter_constant_fails_at_rank_two():
    idx = inst.twisted_index_series(2, 0, 1).substitute(inst.unrefined_substitution())
    assert inst.sinh_form_series(2, 0, 1, prefactor=mpq(1, 4)) != idx


def test_thm71_needs_dual_determinant():
    z = ss.zhat_rank(2, 1, 2)
    sub = ss.thm71_substitution()
    assert z == inst.twisted_index_series(2, 1, 2).substitute(sub)
    assert z != inst.twisted_index_series(2, -1, 2).substitute(sub)


def test_thm72_unit_normalization():
    z = ss.zhat_rank(3, 1, 1)
    idx = inst.twisted_index_series(3, -1, 1)
    assert z == idx.substitute(ss.rank_substitution(3, 1))
    # the literal choice e_{K1} = 1 and e_3 = 1 both fail
    assert z != idx.substitute(ss.rank_substitution(3, 1, unit=1))
    assert z != idx.substitute(ss.rank_substitution(3, 1, unit=3))
    assert z != inst.twisted_index_series(3, 1, 1).substitute(ss.rank_substitution(3, 1))


def test_thm72_unsplit_display_sign():
    z = ss.zhat_rank(3, 1, 1, form="unsplit")
    idx = inst.twisted_index_series(3, -1, 1).substitute(ss.rank_substitution(3, 1))
    # off by (-1)^(mk) at k = 1
    assert z.coefficient(1) == -idx.coefficient(1)


multipartitions = st.integers(1, 3).flatmap(
    lambda N: st.integers(0, 4).flatmap(
        lambda k: st.sampled_from(enumerate_multipartitions(N, k))))


@given(multipartitions)
def test_weights_count_and_symmetry(mp):
    N = len(mp)
    k = sum(sum(p) for p in mp)
    ws = inst.tangent_weights(inst.FixedPoint(mp))
    assert len(ws) == 2 * N * k
    t12 = mono(t1=1, t2=1)
    assert sorted(ws) == sorted(t12 - w for w in ws)
    # no weight is trivial at a fixed point
    assert 0 not in ws
