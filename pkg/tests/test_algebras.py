"""Built-in Hopf algebras: relations, comultiplication, metadata."""
import pytest

from partial_hopf.exact_arith import CycNumber, zeta_pow
from partial_hopf.algebras import (
    InvalidOrder, dual_group_algebra_cyclic, group_algebra_cyclic, nichols,
    taft,
)
from partial_hopf.hopf_core import (
    TensorSquare, basis_element, comultiply, multiply, tensor_of,
    unit_element, validate_all,
)


@pytest.mark.parametrize("n", range(2, 6))
def test_taft_validates(n):
    rep = validate_all(taft(n))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("n", range(2, 5))
def test_nichols_validates(n):
    rep = validate_all(nichols(n))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("n", range(1, 9))
def test_group_algebras_validate(n):
    assert validate_all(group_algebra_cyclic(n)).ok
    assert validate_all(dual_group_algebra_cyclic(n)).ok


def test_bad_orders():
    for bad in (taft, nichols):
        with pytest.raises(InvalidOrder):
            bad(1)
    with pytest.raises(InvalidOrder):
        group_algebra_cyclic(0)


@pytest.mark.parametrize("n", range(2, 6))
def test_taft_relations(n):
    H = taft(n)
    g = basis_element(H, "g")
    x = basis_element(H, "x")
    q = zeta_pow(n, 1)
    # g^n = 1
    acc = g
    for _ in range(n - 1):
        acc = multiply(acc, g)
    assert acc == unit_element(H)
    # x^n = 0
    acc = x
    for _ in range(n - 1):
        acc = multiply(acc, x)
    assert all(c.is_zero() for c in acc.coords)
    # x g = q g x
    assert multiply(x, g) == multiply(g, x) * q


@pytest.mark.parametrize("n", range(2, 9))
def test_taft_comult_is_power_of_primitive_row(n):
    H = taft(n)
    x = basis_element(H, "x")
    dx = comultiply(x)
    acc = comultiply(unit_element(H))
    for j in range(n):
        xj = basis_element(H, j)  # index (0, j) = j
        assert comultiply(xj) == acc
        acc = acc * dx


def test_nichols_delta_of_x1x2():
    H = nichols(3)
    t = lambda a, b: tensor_of(basis_element(H, a), basis_element(H, b))
    want = t("x1x2", "1") - t("gx1", "x2") + t("gx2", "x1") + t("1", "x1x2")
    assert comultiply(basis_element(H, "x1x2")) == want


@pytest.mark.parametrize("n", [3, 4])
def test_nichols_relations(n):
    H = nichols(n)
    g = basis_element(H, "g")
    xs = [basis_element(H, 1 << i) for i in range(1, n)]
    assert multiply(g, g) == unit_element(H)
    for i, xi in enumerate(xs):
        assert all(c.is_zero() for c in multiply(xi, xi).coords)
        assert multiply(xi, g) == -multiply(g, xi)
        for xj in xs[i + 1:]:
            assert multiply(xi, xj) == -multiply(xj, xi)


def test_taft2_equals_nichols2_up_to_relabeling():
    T, N = taft(2), nichols(2)
    perm = {0: 0, 1: 2, 2: 1, 3: 3}  # 1, x, g, gx -> 1, x1, g, gx1
    for (i, j), row in T.mult.items():
        got = N.mult.get((perm[i], perm[j]), ())
        want = tuple(sorted((perm[k], c) for k, c in row))
        assert tuple(sorted(got)) == want
    for i in range(4):
        want = sorted((c, perm[j], perm[k]) for c, j, k in T.comult[i])
        assert sorted(N.comult[perm[i]]) == want
        assert N.counit[perm[i]] == T.counit[i]
        want_s = sorted((perm[j], c) for j, c in T.antipode[i])
        assert sorted(N.antipode[perm[i]]) == want_s


def test_group_algebra_tables():
    n = 6
    H = group_algebra_cyclic(n)
    one = CycNumber.one(n)
    for i in range(n):
        for j in range(n):
            assert H.mult[(i, j)] == (((i + j) % n, one),)
        assert H.comult[i] == ((one, i, i),)
        assert H.antipode[i] == (((-i) % n, one),)
    assert H.grouplikes == tuple(range(n))


def test_dual_group_algebra_characters_recorded():
    n = 4
    D = dual_group_algebra_cyclic(n)
    assert len(D.grouplike_vectors) == n
    for k, vec in enumerate(D.grouplike_vectors):
        assert vec == tuple(zeta_pow(n, i * k) for i in range(n))


def test_taft_metadata():
    n = 5
    H = taft(n)
    assert H.grouplikes == tuple(i * n for i in range(n))
    assert (1, 0, n) in H.skew_primitives
    assert H.basis_degrees == tuple(j for i in range(n) for j in range(n))


def test_nichols_degrees_are_popcounts():
    H = nichols(4)
    assert H.basis_degrees == tuple(bin(m >> 1).count("1") for m in range(16))
