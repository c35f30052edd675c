"""Cyclotomic quotients: dimensions, nilpotency, and the ideal's closure."""

import pytest

from klrcrystal import RootVector, standard_datum
from klrcrystal.cartan import DominantWeight
from klrcrystal.errors import CapExceeded
from klrcrystal.klr.cyclotomic import Caps, cyclotomic_build, dot_nilpotency

from oracles import sl2_cyclotomic_dim

A1 = standard_datum("A1")
A2 = standard_datum("A2")


def sl2(lam, m):
    return cyclotomic_build(A1, RootVector({"1": m}), DominantWeight({"1": lam}))


class TestSl2:
    def test_truncated_polynomials(self):
        p = sl2(2, 1)
        assert p.dim == 2 and p.graded_dim == {0: 1, 2: 1}

    def test_vanishing(self):
        assert sl2(1, 2).dim == 0

    def test_two_strands(self):
        assert sl2(2, 2).dim == 4

    @pytest.mark.parametrize("lam", [0, 1, 2, 3])
    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_formula(self, lam, m):
        assert sl2(lam, m).dim == sl2_cyclotomic_dim(lam, m)

    def test_graded_dim_is_palindromic(self):
        g = sl2(3, 3).graded_dim
        assert g == {-k: v for k, v in g.items()}

    def test_nilpotency(self):
        assert dot_nilpotency(sl2(2, 1), 1) == 2
        assert dot_nilpotency(sl2(1, 1), 1) == 1


class TestA2:
    def test_fundamental(self):
        lam = A2.dominant_weight([1, 0])
        p = cyclotomic_build(A2, A2.root_vector([1, 1]), lam)
        assert p.dim == 1
        assert dot_nilpotency(p, 2) == 1

    def test_shapovalov_value(self):
        # (F v, F v) for F the sum over words of content 2a1+a2 in Sym^2 of C^3
        p = cyclotomic_build(A2, A2.root_vector([2, 1]), A2.dominant_weight([2, 0]))
        assert p.dim == 18

    def test_dots_nilpotent(self):
        for lam in ([1, 0], [1, 1], [2, 0]):
            for nu in ([1, 1], [2, 1], [1, 2]):
                p = cyclotomic_build(A2, A2.root_vector(nu), A2.dominant_weight(lam))
                for r in range(1, p.algebra.m + 1):
                    k = dot_nilpotency(p, r)
                    assert k <= p.witness
                    if p.dim and k:
                        # x_r^(k-1) survives on some idempotent
                        assert not all(p.in_ideal({((), _dots(p, r, k - 1), s): 1}) for s in p.algebra.sequences)


def _dots(p, r, k):
    v = [0] * p.algebra.m
    v[r - 1] = k
    return tuple(v)


def test_ideal_is_two_sided():
    """Every spanning vector of J stays in J after multiplying by generators on either side."""
    p = cyclotomic_build(A2, A2.root_vector([1, 1]), A2.dominant_weight([1, 1]))
    A = p.algebra
    gens = [A.generator("x", t) for t in (1, 2)] + [A.generator("psi", 1)]
    checked = 0
    for (src, dst, deg), space in list(p.builder.blocks.items()):
        for row in list(space.rows.values())[:4]:
            for g in gens:
                for prod in (A.multiply(g, row), A.multiply(row, g)):
                    if prod:
                        assert p.in_ideal(prod)
                        checked += 1
    assert checked > 20


def test_caps():
    with pytest.raises(CapExceeded):
        cyclotomic_build(A1, RootVector({"1": 3}), DominantWeight({"1": 3}), Caps(max_products=10))
    with pytest.raises(CapExceeded):
        cyclotomic_build(A1, RootVector({"1": 2}), DominantWeight({"1": 3}), Caps(max_dot=1))
