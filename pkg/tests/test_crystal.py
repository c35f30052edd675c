"""Elementary and tensor crystals, B(∞), B(Lambda), and the axiom suites."""

import json
import warnings

import pytest

from klrcrystal import RootVector, standard_datum
from klrcrystal.charcalc import char_simple_ci_j, char_stats
from klrcrystal.crystal import (
    NEG_INF,
    BInfinity,
    IncompleteCrystal,
    StringModel,
    TensorNode,
    b_node,
    binf_generate,
    binf_stats,
    blambda_generate,
    direct_phi_count,
    elem_crystal_ops,
    graph_to_json,
    multiplicities_csv,
    multiplicity,
    t_node,
    tensor_crystal_ops,
    tensor_window,
    to_dot,
    verify_axioms,
    weight_multiplicities,
)
from klrcrystal.errors import TruncationExceeded

from oracles import freudenthal, kostant_partitions

A1 = standard_datum("A1")
A2 = standard_datum("A2")
B2 = standard_datum("B2")
G2 = standard_datum("G2")
AFF = standard_datum("A1_affine")


class TestElementary:
    def test_b_i(self):
        ops = elem_crystal_ops(A2, b_node("1", -2), "1")
        assert ops.e == b_node("1", -1)
        assert ops.phi == -2 and ops.eps == 2
        assert ops.f == b_node("1", -3)
        assert ops.wt_i == -4

    def test_other_vertex(self):
        ops = elem_crystal_ops(A2, b_node("1", 0), "2")
        assert ops.e is None and ops.f is None
        assert ops.eps == ops.phi == NEG_INF

    def test_t_lambda(self):
        lam = A2.dominant_weight([2, 1])
        ops = elem_crystal_ops(A2, t_node(lam), "1")
        assert ops.f is None and ops.e is None
        assert ops.eps == ops.phi == NEG_INF
        assert ops.wt_i == 2


class TestTensorRule:
    def test_f_routes_right_on_tie(self):
        node = TensorNode(b_node("1", 0), b_node("1", 0))
        assert tensor_crystal_ops(A1, node, "1").f == TensorNode(b_node("1", 0), b_node("1", -1))

    def test_e_routes_right(self):
        node = TensorNode(b_node("1", 0), b_node("1", -1))
        assert tensor_crystal_ops(A1, node, "1").e == TensorNode(b_node("1", 0), b_node("1", 0))

    def test_eps(self):
        node = TensorNode(b_node("1", -1), b_node("1", -1))
        assert tensor_crystal_ops(A1, node, "1").eps == 3

    def test_zero_absorbs(self):
        node = TensorNode(t_node(A1.dominant_weight([1])), b_node("1", 0))
        ops = tensor_crystal_ops(A1, node, "1")
        # phi(t) = -inf < eps(b) = 0, so e goes right and succeeds; f goes right too
        assert ops.f == TensorNode(node.left, b_node("1", -1))
        node = TensorNode(b_node("2", 0), t_node(A2.dominant_weight([0, 0])))
        assert tensor_crystal_ops(A2, node, "1").f is None

    def test_window_satisfies_axioms(self):
        for d in (A1, B2):
            assert verify_axioms(tensor_window(d, "1"), "C").passed

    def test_corrupted_rule_is_caught(self):
        rep = verify_axioms(tensor_window(A1, "1", strict_f=False), "C")
        assert not rep.passed
        assert any(v.check == "C4" for v in rep.violations)


class TestBInfinity:
    def test_sl2_string(self):
        g = binf_generate(A1, 3)
        assert len(g) == 4
        for b in g.nodes.values():
            n = b.depth
            s = binf_stats(b, "1", model=g.model)
            assert s.eps == s.eps_vee == n
            assert s.jump == 0

    def test_a2_depth_two(self):
        g = binf_generate(A2, 2)
        assert len(g) == 7
        assert multiplicity(g, RootVector({"1": 1, "2": 1})) == 2

    @pytest.mark.parametrize("d", [A1, A2, B2, G2, AFF])
    def test_depth_zero(self, d):
        g = binf_generate(d, 0)
        assert list(g.nodes) == [()]
        for i in d.labels:
            assert g.model.eps(g.highest, i) == 0 and g.highest.eps_vee(i) == 0

    @pytest.mark.parametrize("d", [A2, B2, G2])
    def test_multiplicities_match_kostant(self, d):
        g = binf_generate(d, 5)
        for nu, count in weight_multiplicities(g).items():
            assert count == kostant_partitions([list(r) for r in d.bform], nu)
        # and every weight of height <= 5 appears
        total = sum(kostant_partitions([list(r) for r in d.bform], (a, b))
                    for a in range(6) for b in range(6) if a + b <= 5)
        assert total == len(g)

    def test_stats_example(self):
        g = binf_generate(A2, 1)
        b = g.model.f(g.highest, "1")
        s1, s2 = binf_stats(b, "1", model=g.model), binf_stats(b, "2", model=g.model)
        assert (s1.eps, s1.eps_vee, s1.wt, s1.jump) == (1, 1, -2, 0)
        assert (s2.eps, s2.eps_vee, s2.wt, s2.jump) == (0, 0, 1, 1)

    def test_phi_lambda_example(self):
        model = BInfinity(A1)
        b = model.f(model.f(model.highest(), "1"), "1")
        assert binf_stats(b, "1", A1.dominant_weight([2]), model=model).phi_lambda == 0

    def test_weight_from_coordinates_matches_path(self):
        g = binf_generate(B2, 5)
        for b in g.nodes.values():
            assert g.model.ref.nu(b.ref_coords) == b.nu == RootVector.from_word(b.path)

    def test_truncation_cap(self):
        model = BInfinity(A2, max_len=1)
        b = model.highest()
        with pytest.raises(TruncationExceeded):
            for i in ["1", "2"] * 5:
                b = model.f(b, i)

    def test_affine_weight_space(self):
        # affine sl2: dim U^-_{-delta} = 3 (two simple roots plus the imaginary root)
        g = binf_generate(AFF, 2)
        assert multiplicity(g, RootVector({"1": 1, "2": 1})) == 2


class TestBLambda:
    @pytest.mark.parametrize("lam", range(6))
    def test_sl2(self, lam):
        g = blambda_generate(A1, A1.dominant_weight([lam]))
        assert g.complete and len(g) == lam + 1

    def test_sl2_exclusion(self):
        g = blambda_generate(A1, A1.dominant_weight([2]))
        model = g.model
        b = g.highest
        for _ in range(3):
            b = model.f(b, "1")
        assert b.eps_vee("1") == 3 and not g.is_member(b)

    @pytest.mark.parametrize("d, lam", [(A2, [1, 0]), (A2, [0, 1]), (A2, [1, 1]), (A2, [2, 0]),
                                        (A2, [2, 1]), (B2, [1, 0]), (B2, [0, 1]), (B2, [1, 1]),
                                        (G2, [1, 0]), (G2, [0, 1])])
    def test_freudenthal(self, d, lam):
        g = blambda_generate(d, d.dominant_weight(lam))
        assert g.complete
        want = freudenthal([list(r) for r in d.bform], lam)
        assert weight_multiplicities(g) == dict(sorted(want.items(), key=lambda kv: (sum(kv[0]), kv[0])))

    def test_highest_weight_unique(self):
        g = blambda_generate(A2, A2.dominant_weight([1, 1]))
        assert multiplicity(g, RootVector()) == 1

    def test_incomplete_warns(self):
        with pytest.warns(IncompleteCrystal):
            g = blambda_generate(AFF, AFF.dominant_weight([1, 0]), depth_cap=4)
        assert not g.complete
        # multiplicities below the cap are exact: level-one affine sl2 has 1, 1, 2 at depth 0, 1, 2
        sizes = {}
        for b in g.nodes.values():
            sizes[b.depth] = sizes.get(b.depth, 0) + 1
        assert sizes[0] == 1 and sizes[1] == 1 and sizes[2] == 1

    def test_phi_three_ways(self):
        g = blambda_generate(B2, B2.dominant_weight([1, 1]))
        for b in g.nodes.values():
            for i in B2.labels:
                s = binf_stats(b, i, g.Lambda, model=g.model)
                assert s.phi_lambda == direct_phi_count(g, b, i) == g.phi(b, i)


SUITES_INF = ["C", "KS", "PSI", "JUMP", "EPSJUMP"]


class TestSuites:
    @pytest.mark.parametrize("suite", SUITES_INF)
    def test_a2_depth_four(self, suite):
        rep = verify_axioms(binf_generate(A2, 4), suite)
        assert rep.passed, rep.violations[:3]
        assert rep.checked > 0

    @pytest.mark.parametrize("suite", SUITES_INF + ["PHI"])
    def test_blambda(self, suite):
        rep = verify_axioms(blambda_generate(G2, G2.dominant_weight([1, 0])), suite)
        assert rep.passed, rep.violations[:3]

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            verify_axioms(binf_generate(A1, 1), "XYZ")

    def test_broken_tie_break_is_caught(self, monkeypatch):
        """f acting on the leftmost maximal factor breaks the crystal structure."""
        original = StringModel._phi_scan

        def leftmost(self, a, i):
            best, pos = original(self, a, i)
            cands = [k for k in range(len(a)) if self.label(k) == i]
            head, hit = 0, pos
            for k, x in enumerate(a):
                lab = self.label(k)
                if lab == i and -x - head == best:
                    hit = k
                head += x * self._h[i, lab]
            return best, hit if cands else pos

        monkeypatch.setattr(StringModel, "_phi_scan", leftmost)
        g = binf_generate(A2, 4)
        failures = [s for s in SUITES_INF if not verify_axioms(g, s).passed]
        assert "C" in failures or "PSI" in failures

    def test_broken_embedding_is_caught(self, monkeypatch):
        """Feeding the reference sequence into the i-first slots must fail PSI/KS."""
        orig_init = BInfinity.__init__

        def init(self, datum, max_len=4096):
            orig_init(self, datum, max_len)
            self.firsts = {i: StringModel(datum, None, max_len) for i in datum.labels}

        monkeypatch.setattr(BInfinity, "__init__", init)
        g = binf_generate(A2, 3)
        assert not verify_axioms(g, "PSI").passed or not verify_axioms(g, "KS").passed


class TestStructureTheorems:
    @pytest.mark.parametrize("d", [A2, B2, G2])
    def test_nodes_match_characters(self, d):
        for i, j in (("1", "2"), ("2", "1")):
            a = d.a(i, j)
            for c in range(a + 3):
                g = binf_generate(d, c + 1)
                nodes = [b for b in g.nodes.values() if b.nu == RootVector({i: c, j: 1})]
                assert len(nodes) == min(c, a) + 1
                got = sorted((g.model.eps(b, i), b.eps_vee(i), binf_stats(b, i, model=g.model).jump)
                             for b in nodes)
                want = []
                for n in range(max(0, c - a), c + 1):
                    s = char_stats(d, char_simple_ci_j(d, i, j, c, n))
                    want.append((s.eps[i], s.eps_vee[i], s.jump[i]))
                assert got == sorted(want)


class TestExport:
    def test_dot_sl2(self):
        text = to_dot(binf_generate(A1, 1))
        assert text.count("->") == 1 and 'label="1"' in text
        assert text.count("[label=") == 3

    def test_dot_depth_zero(self):
        text = to_dot(binf_generate(A2, 0))
        assert "->" not in text and text.count("[label=") == 1

    def test_dot_fundamental(self):
        text = to_dot(blambda_generate(A2, A2.dominant_weight([1, 0])))
        assert text.count("->") == 2

    def test_deterministic(self):
        assert to_dot(binf_generate(B2, 4)) == to_dot(binf_generate(B2, 4))

    def test_csv_and_json(self):
        g = blambda_generate(A2, A2.dominant_weight([1, 1]))
        rows = multiplicities_csv(g).splitlines()
        assert rows[0] == "weight_coords,count" and "1 1,2" in rows
        data = json.loads(json.dumps(graph_to_json(g)))
        assert len(data["nodes"]) == 8 and len(data["edges"]) == len(g.edges)
        top = data["nodes"][0]
        assert top["stats"]["1"]["phi_lambda"] == 1
