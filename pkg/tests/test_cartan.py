"""Cartan data, pairings, quantum integers and Laurent arithmetic."""

from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klrcrystal import LaurentPoly, RootVector, pairing, quantum_numbers, standard_datum, validate_datum
from klrcrystal.cartan import DominantWeight, datum_from_json, load_datum
from klrcrystal.errors import (
    DiagonalNotPositiveEven,
    DivisibilityFailure,
    NonSymmetric,
    NotDivisible,
    OffDiagonalPositive,
    UnknownVertex,
)
from klrcrystal.laurent import quantum_factorial, quantum_integer

q = LaurentPoly.q


class TestValidate:
    def test_a2(self):
        d = validate_datum([[2, -1], [-1, 2]], ["1", "2"])
        assert d.a("1", "2") == d.a("2", "1") == 1

    def test_b2_asymmetric_cartan(self):
        d = validate_datum([[2, -2], [-2, 4]], ["1", "2"])
        assert (d.a("1", "2"), d.a("2", "1")) == (2, 1)
        assert (d.d("1"), d.d("2")) == (1, 2)

    @pytest.mark.parametrize("b, err, pair", [
        ([[3]], DiagonalNotPositiveEven, ("1", "1")),
        ([[0]], DiagonalNotPositiveEven, ("1", "1")),
        ([[2, -1], [-2, 2]], NonSymmetric, ("1", "2")),
        ([[2, 1], [1, 2]], OffDiagonalPositive, ("1", "2")),
        ([[4, -1], [-1, 2]], DivisibilityFailure, ("1", "2")),
    ])
    def test_errors_name_the_pair(self, b, err, pair):
        labels = [str(k + 1) for k in range(len(b))]
        with pytest.raises(err) as info:
            validate_datum(b, labels)
        assert {info.value.i, info.value.j} == set(pair)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            validate_datum([[2, -1], [-1, 2]], ["1"])

    def test_default_labels_and_json(self, tmp_path):
        d = validate_datum([[2, -1], [-1, 2]])
        assert d.labels == ("1", "2")
        path = tmp_path / "d.json"
        path.write_text('{"labels": ["a", "b"], "bilinear": [[2, -1], [-1, 2]]}')
        e = load_datum(path)
        assert e.labels == ("a", "b")
        assert datum_from_json(e.to_json()) == e

    @pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A1_affine", "A3"])
    def test_zero_pattern_symmetric(self, name):
        d = standard_datum(name)
        for i in d.labels:
            for j in d.labels:
                if i != j:
                    assert d.a(i, j) >= 0
                    assert (d.a(i, j) == 0) == (d.a(j, i) == 0)


class TestPairing:
    def test_root_vector(self):
        d = standard_datum("A2")
        assert pairing(d, "1", RootVector({"1": 1, "2": 1})) == 1

    def test_fundamental_weight(self):
        d = standard_datum("A2")
        assert pairing(d, "1", DominantWeight({"2": 1})) == 0
        assert pairing(d, "2", DominantWeight({"2": 1})) == 1

    def test_zero(self):
        d = standard_datum("G2")
        assert pairing(d, "2", RootVector()) == 0

    def test_lambda_minus_nu(self):
        d = standard_datum("A2")
        lam = d.dominant_weight([1, 1])
        assert pairing(d, "1", RootVector({"1": 1, "2": 1}), lam) == 0

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            pairing(standard_datum("A2"), "7", RootVector())

    def test_negative_root_vector_rejected(self):
        with pytest.raises(ValueError):
            RootVector({"1": -1})


class TestQuantumNumbers:
    def test_d1(self):
        n2, f2 = quantum_numbers(standard_datum("A1"), "1", 2)
        assert n2 == f2 == q(1) + q(-1)

    def test_d2(self):
        n2, _ = quantum_numbers(standard_datum("B2"), "2", 2)
        assert n2 == q(2) + q(-2)

    def test_trivial_cases(self):
        d = standard_datum("G2")
        assert quantum_numbers(d, "2", 1) == (LaurentPoly(1), LaurentPoly(1))
        assert quantum_numbers(d, "2", 0) == (LaurentPoly(), LaurentPoly(1))

    @pytest.mark.parametrize("dd", [1, 2, 3])
    def test_bar_invariant_and_eval(self, dd):
        for n in range(13):
            assert quantum_integer(n, dd).bar() == quantum_integer(n, dd)
            assert quantum_factorial(n, dd).bar() == quantum_factorial(n, dd)
            assert quantum_integer(n, dd).eval1() == n
            assert quantum_factorial(n, dd).eval1() == factorial(n)


laurents = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)
nonzero_laurents = laurents.filter(lambda p: not p.is_zero())


class TestLaurent:
    def test_examples(self):
        assert (q(1) + q(-1)) * (q(1) + q(-1)) == q(2) + 2 + q(-2)
        assert (q(2) + 1).bar() == q(-2) + 1
        prod = quantum_integer(3) * quantum_integer(2)
        assert prod.divide_exact(q(1) + q(-1)) == q(2) + 1 + q(-2)

    def test_not_divisible_carries_remainder(self):
        with pytest.raises(NotDivisible) as info:
            (q(2) + 1).divide_exact(q(1) + 1)
        assert info.value.remainder is not None and not info.value.remainder.is_zero()

    def test_json_round_trip(self):
        p = q(1) + q(-1)
        assert p.to_json() == {"-1": 1, "1": 1}
        assert LaurentPoly.from_json(p.to_json()) == p

    @given(laurents, laurents, laurents)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == LaurentPoly()

    @given(laurents, laurents)
    def test_bar_is_ring_involution(self, a, b):
        assert a.bar().bar() == a
        assert (a * b).bar() == a.bar() * b.bar()
        assert (a * b).eval1() == a.eval1() * b.eval1()

    @settings(max_examples=200)
    @given(laurents, nonzero_laurents)
    def test_divide_exact_round_trip(self, a, b):
        assert (a * b).divide_exact(b) == a
