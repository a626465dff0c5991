from gmpy2 import mpq
from hypothesis import given, strategies as st

from gvindex.partitions import enumerate_partitions
from gvindex.series import FR, var_mono
from gvindex import stringside as ss
from gvindex.instanton import genus_series, twisted_index_series

q, Qm, y = var_mono("q"), var_mono("Qm"), var_mono("y")
QS = {"t1": (1, q), "t2": (1, -q)}


def b(m, c=1, e=1):
    return FR.binomial(m, c, e)


def test_schur_examples():
    ctx = ss.principal_context(4)
    assert ss.schur_at(ctx, ()) == 1
    assert ss.schur_at(ctx, (1,)) == b(q, 1, -1)
    p1, p2 = b(q, 1, -1), b(2 * q, 1, -1)
    assert ss.schur_at(ctx, (2,)) == (p1 * p1 + p2).scale(mpq(1, 2))


def test_conifold_low_orders():
    z = ss.conifold_Z(3)
    assert z.coefficient(0) == 1
    assert z.coefficient(1) == FR.monomial(q, -1) * b(q, 1, -2)
    assert z.coefficient(1) == b(q, 1, -1) * b(-q, 1, -1)


def test_conifold_forms_agree():
    base = ss.conifold_Z(5)
    for form in ss.CONIFOLD_FORMS[1:]:
        assert ss.conifold_Z(5, form) == base, form
    assert base == genus_series(1, "chi0", 5).substitute(QS)


def test_cauchy_identities():
    assert ss.two_variable_cauchy_check(0)
    assert ss.two_variable_cauchy_check(6)
    assert ss.dual_cauchy_orientation(4) == "numerator"


def test_zhat_5d():
    z = ss.zhat_5d(4)
    assert z.coefficient(0) == 1
    assert z.coefficient(1) == b(Qm + q) * b(Qm - q) * b(q, 1, -1) * b(-q, 1, -1)
    hy = genus_series(1, "chiy", 4).substitute(dict(QS, y=(1, Qm)))
    assert z == hy


def test_zhat_6d():
    z = ss.zhat_6d(2, 1)
    assert z.coefficient((0, 0)) == 1
    assert z.restrict("p") == ss.zhat_5d(2)
    he = genus_series(1, "elliptic", (2, 1)).substitute(dict(QS, y=(1, Qm)))
    assert z == he.scale_grading("Q", FR.monomial(Qm))


def test_zhat_rank_low_orders():
    assert ss.zhat_rank(2, 0, 0).coefficient(0) == 1
    z = ss.zhat_rank(2, 0, 1)
    idx = twisted_index_series(2, 0, 1).substitute(ss.thm71_substitution())
    assert z.coefficient(1) == idx.coefficient(1)


def test_split_points():
    assert ss.split_points(3, 1) == (1, 2)
    assert ss.split_points(2, 0) == (0, 1)


partitions = st.integers(0, 7).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


@given(partitions)
def test_hook_forms(mu):
    ctx = ss.principal_context(7)
    s = ss.schur_at(ctx, mu)
    assert s == ss.w_hook(mu)
    assert s == ss.w_symmetric_hook(mu) * ss.hook_relation(mu)
