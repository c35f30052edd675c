"""Executable axiom suites for generated crystals.

Every suite walks the graph read-only and collects violations with the
offending node's f-path as witness; nothing is raised.

C        crystal axioms C1-C5, including e/f mutual inverses
KS       Kashiwara-Saito conditions B1-B7 on the truncation
PSI      Psi_i(b) = (rest) ⊗ b_i(-eps_i^vee) is a strict embedding
JUMP     jump_i >= 0, its recursion along f_i, and its definition via eps^vee
EPSJUMP  eps^vee steps along edges and the eps_i bound along f_j, i != j
PHI      three computations of phi_i^Lambda agree (B(Lambda) only)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..cartan import RootVector
from .binf import BInfNode, CrystalGraph, binf_stats, direct_phi_count
from .elementary import NEG_INF, Crystal, TensorNode, b_node, t_node

SUITES = ("C", "KS", "PSI", "JUMP", "EPSJUMP", "PHI")


@dataclass(frozen=True)
class Violation:
    check: str
    path: tuple
    detail: str

    def __str__(self):
        return f"{self.check} at path {self.path}: {self.detail}"


@dataclass
class Report:
    suite: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, check: str, node, detail: str) -> None:
        path = getattr(node, "path", None)
        self.violations.append(Violation(check, path if path is not None else (repr(node),), detail))

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return f"{self.suite}: {state} ({self.checked} checks, {len(self.violations)} violations)"


class FiniteCrystalGraph:
    """A finite window of a crystal given by explicit nodes and a :class:`Crystal`.

    Operators leaving the window are still evaluated; only the node list
    restricts where checks start.
    """

    kind = "Finite"

    def __init__(self, datum, nodes: Iterable, crystal: Crystal):
        self.datum = datum
        self.crystal = crystal
        self.node_list = list(nodes)

    @property
    def labels(self):
        return self.datum.labels

    def __iter__(self):
        return iter(self.node_list)

    def eps(self, b, i):
        return self.crystal.eps(b, i)

    def phi(self, b, i):
        return self.crystal.phi(b, i)

    def wt_i(self, b, i):
        return self.crystal.wt_i(b, i)

    def e(self, b, i):
        return self.crystal.e(b, i)

    def f(self, b, i):
        return self.crystal.f(b, i)


def tensor_window(datum, i: str, lo: int = -3, hi: int = 3, strict_f: bool = True) -> FiniteCrystalGraph:
    """All ``b_i(n1) ⊗ b_i(n2)`` with lo <= n1, n2 <= hi."""
    nodes = [TensorNode(b_node(i, x), b_node(i, y)) for x in range(lo, hi + 1) for y in range(lo, hi + 1)]
    return FiniteCrystalGraph(datum, nodes, Crystal(datum, strict_f=strict_f))


def _nodes(g):
    if isinstance(g, CrystalGraph):
        return list(g.nodes.values())
    return list(g)


def check_c(g) -> Report:
    rep = Report("C")
    d = g.datum
    labels = g.labels
    for b in _nodes(g):
        for i in labels:
            rep.checked += 1
            eps, phi, wt = g.eps(b, i), g.phi(b, i), g.wt_i(b, i)
            if phi != eps + wt:
                rep.fail("C1", b, f"phi_{i}={phi} != eps+wt = {eps}+{wt}")
            eb, fb = g.e(b, i), g.f(b, i)
            for tag, x, sgn in (("C2", eb, 1), ("C3", fb, -1)):
                if x is None:
                    continue
                if g.eps(x, i) != eps - sgn or g.phi(x, i) != phi + sgn:
                    rep.fail(tag, b, f"eps/phi of {tag} image wrong for {i}")
                for j in labels:
                    if g.wt_i(x, j) != g.wt_i(b, j) + sgn * d.cartan_entry(j, i):
                        rep.fail(tag, b, f"weight of {tag} image wrong on h_{j}")
                if isinstance(x, BInfNode) and x.nu != (b.nu - RootVector({i: 1}) if sgn > 0 else b.nu.add_vertex(i)):
                    rep.fail(tag, b, "root content of image wrong")
            if fb is not None and g.e(fb, i) != b:
                rep.fail("C4", b, f"e_{i} f_{i} b != b")
            if eb is not None and g.f(eb, i) != b:
                rep.fail("C4", b, f"f_{i} e_{i} b != b")
            if phi == NEG_INF and (eb is not None or fb is not None):
                rep.fail("C5", b, f"phi_{i} = -inf but e/f nonzero")
    return rep


def _psi(g: CrystalGraph, b: BInfNode, i: str):
    c = b.vee(i)
    if c is None:
        return None
    c = c or (0,)
    return TensorNode(g.model.bare(c[1:]), b_node(i, -c[0]))


def _same_tensor(x, y) -> bool:
    if x is None or y is None:
        return x is y
    return x.left.ref_coords == y.left.ref_coords and x.right == y.right


def check_psi(g: CrystalGraph, rep: Report | None = None) -> Report:
    """Psi_i commutes with e_j, f_j and preserves eps, phi, wt; it is injective."""
    rep = rep or Report("PSI")
    cr = Crystal(g.datum, binf=g.model)
    model = g.model
    for old_path, new_path in g.conflicts:
        rep.fail("lockstep", BInfNode((), path=new_path), f"coordinates disagree with {old_path}")
    for i in g.labels:
        seen: dict = {}
        for b in g.nodes.values():
            rep.checked += 1
            p = _psi(g, b, i)
            if p is None:
                rep.fail("Psi", b, f"{i}-first coordinates undefined")
                continue
            key = (p.left.ref_coords, p.right.n)
            if key in seen:
                rep.fail("injective", b, f"Psi_{i} collides with {seen[key]}")
            seen[key] = b.path
            for j in g.labels:
                if (cr.eps(p, j), cr.phi(p, j), cr.wt_i(p, j)) != (model.eps(b, j), model.phi(b, j), model.wt_i(b, j)):
                    rep.fail("morphism", b, f"Psi_{i} changes eps/phi/wt for {j}")
                fb = model.f(b, j)
                if not _same_tensor(_psi(g, fb, i), cr.f(p, j)):
                    rep.fail("strict-f", b, f"Psi_{i} f_{j} != f_{j} Psi_{i}")
                eb = model.e(b, j)
                want = None if eb is None else _psi(g, eb, i)
                if not _same_tensor(want, cr.e(p, j)):
                    rep.fail("strict-e", b, f"Psi_{i} e_{j} != e_{j} Psi_{i}")
    return rep


def check_ks(g: CrystalGraph) -> Report:
    rep = Report("KS")
    model = g.model
    tops = []
    for b in g.nodes.values():
        rep.checked += 1
        if any(x < 0 for x in b.ref_coords) or model.ref.nu(b.ref_coords) != b.nu:
            rep.fail("B1", b, "coordinates negative or weight inconsistent with path")
        if b.depth != b.nu.size or len(b.path) != b.depth:
            rep.fail("B1", b, "depth does not match weight")
        if not b.nu.items():
            tops.append(b)
        for i in g.labels:
            eps = model.eps(b, i)
            if not isinstance(eps, int):
                rep.fail("B4", b, f"eps_{i} = {eps} not an integer")
            c = b.vee(i)
            if c is None:
                continue
            if any(x < 0 for x in c):
                rep.fail("B6", b, f"{i}-first coordinates negative")
            rest = tuple(c[1:])
            if c and model.ref.nu(rest) != b.nu - RootVector({i: c[0]}):
                rep.fail("B6", b, f"Psi_{i} remainder {rest} has the wrong weight")
            # B(Lambda) is not closed under the remainder map, so only B(∞) is checked here
            if g.kind == "BInf" and rest and rest not in g.nodes:
                rep.fail("B6", b, f"Psi_{i} remainder {rest} not in the crystal")
        if b.nu.items() and all(b.eps_vee(i) == 0 for i in g.labels):
            rep.fail("B7", b, "no eps_vee is positive at a non-highest node")
    if len(tops) != 1 or tops[0].ref_coords != ():
        rep.fail("B2", g.highest, f"{len(tops)} nodes of weight 0")
    for i in g.labels:
        if model.eps(g.highest, i) != 0:
            rep.fail("B3", g.highest, f"eps_{i}(b0) != 0")
    # B5: strict embeddings
    psi = check_psi(g, Report("KS"))
    rep.checked += psi.checked
    rep.violations += [Violation("B5/" + v.check, v.path, v.detail) for v in psi.violations]
    return rep


def check_jump(g: CrystalGraph) -> Report:
    rep = Report("JUMP")
    model = g.model
    for b in g.nodes.values():
        for i in g.labels:
            rep.checked += 1
            jb = binf_stats(b, i, model=model).jump
            if jb < 0:
                rep.fail("nonneg", b, f"jump_{i} = {jb}")
                continue
            fb = g.f(b, i)
            if fb is not None and fb in g:
                jf = binf_stats(fb, i, model=model).jump
                if jf != max(0, jb - 1):
                    rep.fail("recursion", b, f"jump_{i}(f b) = {jf}, expected {max(0, jb - 1)}")
            # definition: largest J with eps^vee unchanged along f_i^J
            v0, cur, J = b.eps_vee(i), b, 0
            while J <= jb:
                cur = model.f(cur, i)
                if cur.eps_vee(i) != v0:
                    break
                J += 1
            if J != jb:
                rep.fail("definition", b, f"eps_vee_{i} constant for {J} steps, jump_{i} = {jb}")
    return rep


def check_epsjump(g: CrystalGraph) -> Report:
    rep = Report("EPSJUMP")
    d = g.datum
    model = g.model
    for src, j, dst in g.edges:
        b, t = g.nodes[src], g.nodes[dst]
        for i in g.labels:
            rep.checked += 1
            step = t.eps_vee(i) - b.eps_vee(i)
            if i != j and step != 0:
                rep.fail("vee-fixed", b, f"eps_vee_{i} changed along f_{j}")
            if i == j and step not in (0, 1):
                rep.fail("vee-step", b, f"eps_vee_{i} stepped by {step}")
            if i == j:
                continue
            a = d.a(i, j)
            drop = model.eps(b, i) - model.eps(t, i)
            if not 0 <= drop <= a:
                rep.fail("eps-bound", b, f"eps_{i} dropped by {drop} along f_{j}, a={a}")
            if g.kind == "BLambda":
                n = a - drop
                gain = direct_phi_count(g, t, i) - direct_phi_count(g, b, i)
                if gain != n:
                    rep.fail("phi-shift", b, f"phi^Lambda_{i} rose by {gain}, expected n={n}")
    return rep


def check_phi(g: CrystalGraph) -> Report:
    rep = Report("PHI")
    if g.kind != "BLambda":
        return rep
    cr = Crystal(g.datum, binf=g.model)
    tl = t_node(g.Lambda)
    for b in g.nodes.values():
        for i in g.labels:
            rep.checked += 1
            formula = binf_stats(b, i, g.Lambda, model=g.model).phi_lambda
            tensor = cr.phi(TensorNode(b, tl), i)
            direct = direct_phi_count(g, b, i)
            if not formula == tensor == direct:
                rep.fail("three-way", b, f"phi^Lambda_{i}: formula {formula}, tensor {tensor}, count {direct}")
            if g.phi(b, i) != formula:
                rep.fail("graph", b, f"graph phi_{i} disagrees with formula")
    return rep


_RUNNERS = {"C": check_c, "KS": check_ks, "PSI": check_psi, "JUMP": check_jump,
            "EPSJUMP": check_epsjump, "PHI": check_phi}


def verify_axioms(g, suite: str) -> Report:
    """Run one suite on a generated graph (or a :class:`FiniteCrystalGraph` for C)."""
    try:
        run = _RUNNERS[suite.upper()]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}") from None
    if not isinstance(g, CrystalGraph) and suite.upper() != "C":
        raise ValueError(f"suite {suite} needs a generated B(∞) or B(Lambda) graph")
    return run(g)


def verify_all(g: CrystalGraph, suites: Iterable[str] = SUITES) -> dict[str, Report]:
    return {s: verify_axioms(g, s) for s in suites}
