import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergetools.field import GF, FiniteField, field_of_order, least_irreducible, norm, norm_map, prime_power, subfield_embedding


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        prime_power(12)


def test_even_characteristic_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, 3)


def test_least_irreducible_degree_two():
    # x^2 + 1 is irreducible over GF(3) and lexicographically least
    assert tuple(least_irreducible(3, 2)) == (1, 0, 1)


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (3, 2), (3, 3), (5, 2)])
def test_field_axioms_exhaustive(p, k):
    F = GF(p, k)
    q = p ** k
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    g = F.generator
    assert len({F.pow(g, e) for e in range(q - 1)}) == q - 1


@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26))
def test_distributive_gf27(a, b, c):
    F = GF(3, 3)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_element_operators():
    F = field_of_order(9)
    x = F(4)
    assert x * x.inverse() == F.one
    assert (x - x) == F.zero
    with pytest.raises(ValueError):
        F.zero.inverse()
    with pytest.raises(ValueError):
        x / F.zero


def test_subfield_embedding_is_a_homomorphism():
    small, big = GF(3, 1), GF(3, 2)
    emb = subfield_embedding(small, big)
    for a in range(3):
        for b in range(3):
            assert emb[small.mul(a, b)] == big.mul(emb[a], emb[b])
            assert emb[small.add(a, b)] == big.add(emb[a], emb[b])


@pytest.mark.parametrize("s,q", [(3, 3), (3, 5), (2, 5), (3, 9)])
def test_norm_fibres_and_multiplicativity(s, q):
    nm = norm_map(s, q)
    ext, base = nm.extension, nm.base
    fibres = [0] * q
    for x in range(ext.order):
        fibres[nm.table[x]] += 1
    assert fibres[0] == 1
    assert set(fibres[1:]) == {(q ** (s - 1) - 1) // (q - 1)}
    for x in range(0, ext.order, 3):
        for y in range(ext.order):
            assert nm.table[ext.mul(x, y)] == base.mul(nm.table[x], nm.table[y])


def test_norm_is_power_map():
    nm = norm_map(3, 3)
    X = nm.extension(5)
    assert norm(3, 3, X) == nm(X)
    assert nm.exponent == 4
