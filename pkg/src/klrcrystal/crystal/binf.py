"""B(∞) and B(Lambda) through iterated Kashiwara embeddings.

A node of B(∞) is stored by its string coordinates ``(a_1, a_2, ...)`` in
``B(∞) ⊗ ... ⊗ B_{j_2} ⊗ B_{j_1}``: the tuple index 0 is the rightmost factor
``b_{j_1}(-a_1)``, and trailing zeros are dropped.  Coordinates are kept for
the reference sequence (labels cycled in order) and, for every vertex i, for
the sequence that starts with i and then follows the reference.  The first
coordinate of the latter is epsilon_i^vee.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from ..cartan import CartanDatum, DominantWeight, RootVector, pairing
from ..errors import TruncationExceeded

DEFAULT_MAX_LEN = 4096


class IncompleteCrystal(UserWarning):
    """B(Lambda) generation stopped at the depth cap before closing."""


class StringModel:
    """Kashiwara operators on string coordinates for one embedding sequence."""

    def __init__(self, datum: CartanDatum, first: str | None = None, max_len: int = DEFAULT_MAX_LEN):
        self.datum = datum
        self.first = first
        self.max_len = max_len
        self._labels = datum.labels
        self._h = {(i, j): datum.cartan_entry(i, j) for i in datum.labels for j in datum.labels}

    def label(self, k: int) -> str:
        n = len(self._labels)
        if self.first is None:
            return self._labels[k % n]
        return self.first if k == 0 else self._labels[(k - 1) % n]

    def nu(self, a: tuple) -> RootVector:
        counts: dict[str, int] = {}
        for k, x in enumerate(a):
            if x:
                lab = self.label(k)
                counts[lab] = counts.get(lab, 0) + x
        return RootVector(counts)

    def wt_i(self, a: tuple, i: str) -> int:
        return -sum(x * self._h[i, self.label(k)] for k, x in enumerate(a))

    def _eps_scan(self, a: tuple, i: str) -> tuple[int, int | None]:
        # leftmost (largest index) argmax of the epsilon terms, u_inf gives 0
        best, pos, tail = 0, None, 0
        for k in range(len(a) - 1, -1, -1):
            lab = self.label(k)
            if lab == i:
                t = a[k] + tail
                if t > best:
                    best, pos = t, k
            tail += a[k] * self._h[i, lab]
        return best, pos

    def eps(self, a: tuple, i: str) -> int:
        return self._eps_scan(a, i)[0]

    def _phi_scan(self, a: tuple, i: str) -> tuple[int, int]:
        # rightmost (smallest index) argmax of the phi terms
        best, pos, head = None, None, 0
        for k, x in enumerate(a):
            lab = self.label(k)
            if lab == i:
                t = -x - head
                if best is None or t > best:
                    best, pos = t, k
            head += x * self._h[i, lab]
        k0 = len(a)
        while self.label(k0) != i:
            k0 += 1
        # first untouched i-factor; u_inf to its left has the same term
        if best is None or -head > best:
            best, pos = -head, k0
        return best, pos

    def phi(self, a: tuple, i: str) -> int:
        return self._phi_scan(a, i)[0]

    def e(self, a: tuple, i: str) -> tuple | None:
        best, pos = self._eps_scan(a, i)
        if pos is None:
            return None
        out = list(a)
        out[pos] -= 1
        return _strip(out)

    def f(self, a: tuple, i: str) -> tuple:
        _, pos = self._phi_scan(a, i)
        if pos >= self.max_len:
            raise TruncationExceeded(
                f"f_{i} needs coordinate {pos + 1} beyond hard cap {self.max_len}")
        out = list(a) + [0] * (pos + 1 - len(a))
        out[pos] += 1
        return tuple(out)


def _strip(a: list) -> tuple:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


@dataclass(frozen=True)
class BInfNode:
    ref_coords: tuple
    vee_coords: tuple = field(default=(), compare=False)  # ((label, coords), ...)
    nu: RootVector = field(default_factory=RootVector, compare=False)
    depth: int = field(default=0, compare=False)
    path: tuple = field(default=(), compare=False)  # f-labels, first applied first

    def vee(self, i: str) -> tuple | None:
        for lab, coords in self.vee_coords:
            if lab == i:
                return coords
        raise KeyError(i)

    def eps_vee(self, i: str) -> int:
        c = self.vee(i)
        if c is None:
            raise ValueError(f"inconsistent {i}-first coordinates at {self.ref_coords}")
        return c[0] if c else 0

    @property
    def per_vertex_first(self) -> dict:
        return {lab: (c[0] if c else 0) for lab, c in self.vee_coords if c is not None}

    def __repr__(self):
        return f"BInfNode{self.ref_coords}"


class BInfinity:
    """Crystal operations on B(∞) nodes, run in every embedding sequence at once."""

    def __init__(self, datum: CartanDatum, max_len: int = DEFAULT_MAX_LEN):
        self.datum = datum
        self.ref = StringModel(datum, None, max_len)
        self.firsts = {i: StringModel(datum, i, max_len) for i in datum.labels}

    def highest(self) -> BInfNode:
        return BInfNode((), tuple((i, ()) for i in self.datum.labels), RootVector(), 0, ())

    def bare(self, ref_coords: Iterable[int]) -> BInfNode:
        """Node known only by its reference coordinates."""
        a = _strip(list(ref_coords))
        return BInfNode(a, (), self.ref.nu(a), sum(a), ())

    def f(self, b: BInfNode, i: str) -> BInfNode:
        self.datum.check_vertex(i)
        vee = tuple((lab, None if c is None else self.firsts[lab].f(c, i))
                    for lab, c in b.vee_coords)
        return BInfNode(self.ref.f(b.ref_coords, i), vee, b.nu.add_vertex(i),
                        b.depth + 1, b.path + (i,))

    def e(self, b: BInfNode, i: str) -> BInfNode | None:
        self.datum.check_vertex(i)
        a = self.ref.e(b.ref_coords, i)
        if a is None:
            return None
        vee = tuple((lab, None if c is None else self.firsts[lab].e(c, i))
                    for lab, c in b.vee_coords)
        path = b.path[:-1] if b.path and b.path[-1] == i else ()
        return BInfNode(a, vee, b.nu - RootVector({i: 1}), b.depth - 1, path)

    def eps(self, b: BInfNode, i: str) -> int:
        return self.ref.eps(b.ref_coords, i)

    def phi(self, b: BInfNode, i: str) -> int:
        return self.ref.phi(b.ref_coords, i)

    def wt_i(self, b: BInfNode, i: str) -> int:
        return self.ref.wt_i(b.ref_coords, i)


@dataclass
class CrystalGraph:
    """A generated piece of B(∞) (kind "BInf") or B(Lambda) (kind "BLambda")."""

    datum: CartanDatum
    model: BInfinity
    kind: str
    depth: int
    nodes: dict = field(default_factory=dict)  # ref_coords -> BInfNode, BFS order
    edges: list = field(default_factory=list)  # (src ref, label, dst ref)
    Lambda: DominantWeight | None = None
    complete: bool = False
    conflicts: list = field(default_factory=list)

    @property
    def labels(self) -> tuple:
        return self.datum.labels

    @property
    def highest(self) -> BInfNode:
        return self.nodes[()]

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, b) -> bool:
        return b is not None and b.ref_coords in self.nodes

    def lam(self, i: str) -> int:
        return 0 if self.Lambda is None else self.Lambda.get(i)

    def is_member(self, b: BInfNode) -> bool:
        if self.kind != "BLambda":
            return True
        return all(b.eps_vee(i) <= self.lam(i) for i in self.labels)

    # crystal structure of the graph's crystal
    def wt_i(self, b, i):
        return self.model.wt_i(b, i) + self.lam(i)

    def eps(self, b, i):
        return self.model.eps(b, i)

    def phi(self, b, i):
        return self.eps(b, i) + self.wt_i(b, i) if self.kind == "BLambda" else self.model.phi(b, i)

    def e(self, b, i):
        return self.model.e(b, i)

    def f(self, b, i):
        t = self.model.f(b, i)
        return t if self.is_member(t) else None

    def in_window(self, b) -> bool:
        """Whether ``b`` lies in the region the graph claims to cover."""
        return b.ref_coords in self.nodes or b.depth > self.depth


def binf_generate(d: CartanDatum, depth: int, max_len: int = DEFAULT_MAX_LEN) -> CrystalGraph:
    """All nodes of B(∞) reachable by at most ``depth`` f-operators."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    model = BInfinity(d, max_len)
    g = CrystalGraph(d, model, "BInf", depth)
    _bfs(g, depth)
    return g


def blambda_generate(d: CartanDatum, lam: DominantWeight, depth_cap: int = 64,
                     max_len: int = DEFAULT_MAX_LEN) -> CrystalGraph:
    """The part of B(∞) with eps_i^vee <= lambda_i, shifted by Lambda."""
    for lab, _ in lam.items():
        d.check_vertex(lab)
    model = BInfinity(d, max_len)
    g = CrystalGraph(d, model, "BLambda", depth_cap, Lambda=lam)
    g.complete = _bfs(g, depth_cap)
    if not g.complete:
        warnings.warn(f"B(Lambda) not closed at depth {depth_cap}", IncompleteCrystal, stacklevel=2)
    return g


def _bfs(g: CrystalGraph, depth: int) -> bool:
    """Fill ``g``; return True when no member lies beyond ``depth``."""
    model = g.model
    top = model.highest()
    g.nodes[()] = top
    frontier = [top]
    for level in range(depth + 1):
        nxt = []
        for b in frontier:
            for i in g.labels:
                t = model.f(b, i)
                if not g.is_member(t):
                    continue
                if level == depth:
                    return False
                old = g.nodes.get(t.ref_coords)
                if old is None:
                    g.nodes[t.ref_coords] = t
                    nxt.append(t)
                elif old.vee_coords != t.vee_coords:
                    g.conflicts.append((old.path, t.path))
                g.edges.append((b.ref_coords, i, t.ref_coords))
        frontier = nxt
        if not frontier:
            return True
    return not frontier


@dataclass(frozen=True)
class NodeStats:
    eps: int
    eps_vee: int
    wt: int
    jump: int
    phi: int
    phi_lambda: int | None


def binf_stats(node: BInfNode, i: str, lam: DominantWeight | None = None,
               model: BInfinity | None = None, datum: CartanDatum | None = None) -> NodeStats:
    """epsilon, epsilon^vee, <h_i, wt>, jump, phi and (with Lambda) phi^Lambda at ``node``."""
    if model is None:
        if datum is None:
            raise ValueError("binf_stats needs a model or a datum")
        model = BInfinity(datum)
    eps = model.eps(node, i)
    vee = node.eps_vee(i)
    wt = model.wt_i(node, i)
    phi_lam = None
    if lam is not None:
        phi_lam = pairing(model.datum, i, lam) + eps + wt
    return NodeStats(eps, vee, wt, eps + vee + wt, eps + wt, phi_lam)


def weight_multiplicities(g: CrystalGraph) -> dict[tuple, int]:
    """Node counts keyed by the coordinates of nu (weight -nu, or Lambda - nu)."""
    cnt = Counter(g.datum.coords(b.nu) for b in g.nodes.values())
    return dict(sorted(cnt.items(), key=lambda kv: (sum(kv[0]), kv[0])))


def multiplicity(g: CrystalGraph, nu: RootVector) -> int:
    return sum(1 for b in g.nodes.values() if b.nu == nu)


def direct_phi_count(g: CrystalGraph, b: BInfNode, i: str, limit: int = 10_000) -> int:
    """max{k : f_i^k b stays in B(Lambda)} by applying f_i until it leaves."""
    k, cur = 0, b
    while k < limit:
        cur = g.model.f(cur, i)
        if not g.is_member(cur):
            return k
        k += 1
    raise TruncationExceeded(f"f_{i} string longer than {limit}")
