"""Elementary crystals B_i and T_Lambda, and the tensor product rule.

Crystal operators return ``None`` for the zero symbol.  Missing values of
epsilon and phi are ``NEG_INF``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from ..cartan import CartanDatum, DominantWeight, RootVector, pairing

NEG_INF = float("-inf")


@dataclass(frozen=True)
class ElementaryNode:
    """``b_i(n)`` (kind "B") or ``t_Lambda`` (kind "T")."""

    kind: str
    vertex: str | None = None
    n: int = 0
    Lambda: DominantWeight | None = None

    def __repr__(self):
        if self.kind == "B":
            return f"b_{self.vertex}({self.n})"
        return f"t_{self.Lambda!r}"


def b_node(i: str, n: int = 0) -> ElementaryNode:
    return ElementaryNode("B", i, n)


def t_node(lam: DominantWeight) -> ElementaryNode:
    return ElementaryNode("T", Lambda=lam)


@dataclass(frozen=True)
class TensorNode:
    left: object
    right: object

    def __repr__(self):
        return f"({self.left!r} ⊗ {self.right!r})"


Node = Union[ElementaryNode, TensorNode, object]


class CrystalOps(NamedTuple):
    eps: float
    phi: float
    wt_i: int
    e: object
    f: object


class Crystal:
    """Crystal structure on elementary nodes, tensor nodes and (optionally) B(∞) nodes.

    ``strict_f=False`` swaps ``>`` for ``>=`` in the f-routing of the tensor
    rule; it exists only so that tests can check the axiom suite catches it.
    """

    def __init__(self, datum: CartanDatum, binf=None, strict_f: bool = True):
        self.datum = datum
        self.binf = binf
        self.strict_f = strict_f

    # weight is reported through <h_i, wt>
    def wt_i(self, b, i: str) -> int:
        d = self.datum
        if isinstance(b, ElementaryNode):
            if b.kind == "B":
                return b.n * d.cartan_entry(i, b.vertex)
            return pairing(d, i, b.Lambda)
        if isinstance(b, TensorNode):
            return self.wt_i(b.left, i) + self.wt_i(b.right, i)
        return self.binf.wt_i(b, i)

    def wt_root(self, b) -> tuple[RootVector, DominantWeight]:
        """Weight as (Lambda, nu) meaning Lambda - nu, when expressible."""
        if isinstance(b, ElementaryNode):
            if b.kind == "T":
                return b.Lambda, RootVector()
            if b.n <= 0:
                return DominantWeight(), RootVector({b.vertex: -b.n})
            raise ValueError("positive multiples of simple roots are not in -N[I]")
        if isinstance(b, TensorNode):
            l1, n1 = self.wt_root(b.left)
            l2, n2 = self.wt_root(b.right)
            return l1 + l2, n1 + n2
        return DominantWeight(), b.nu

    def eps(self, b, i: str) -> float:
        if isinstance(b, ElementaryNode):
            if b.kind == "B":
                return -b.n if b.vertex == i else NEG_INF
            return NEG_INF
        if isinstance(b, TensorNode):
            return max(self.eps(b.left, i), self.eps(b.right, i) - self.wt_i(b.left, i))
        return self.binf.eps(b, i)

    def phi(self, b, i: str) -> float:
        if isinstance(b, ElementaryNode):
            if b.kind == "B":
                return b.n if b.vertex == i else NEG_INF
            return NEG_INF
        if isinstance(b, TensorNode):
            return max(self.phi(b.left, i) + self.wt_i(b.right, i), self.phi(b.right, i))
        return self.binf.phi(b, i)

    def e(self, b, i: str):
        if isinstance(b, ElementaryNode):
            if b.kind == "B" and b.vertex == i:
                return b_node(i, b.n + 1)
            return None
        if isinstance(b, TensorNode):
            if self.phi(b.left, i) >= self.eps(b.right, i):
                x = self.e(b.left, i)
                return None if x is None else TensorNode(x, b.right)
            x = self.e(b.right, i)
            return None if x is None else TensorNode(b.left, x)
        return self.binf.e(b, i)

    def f(self, b, i: str):
        if isinstance(b, ElementaryNode):
            if b.kind == "B" and b.vertex == i:
                return b_node(i, b.n - 1)
            return None
        if isinstance(b, TensorNode):
            lp, re = self.phi(b.left, i), self.eps(b.right, i)
            go_left = lp > re if self.strict_f else lp >= re
            if go_left:
                x = self.f(b.left, i)
                return None if x is None else TensorNode(x, b.right)
            x = self.f(b.right, i)
            return None if x is None else TensorNode(b.left, x)
        return self.binf.f(b, i)

    def ops(self, b, i: str) -> CrystalOps:
        return CrystalOps(self.eps(b, i), self.phi(b, i), self.wt_i(b, i), self.e(b, i), self.f(b, i))


def elem_crystal_ops(d: CartanDatum, node: ElementaryNode, i: str) -> CrystalOps:
    d.check_vertex(i)
    return Crystal(d).ops(node, i)


def tensor_crystal_ops(d: CartanDatum, node: TensorNode, i: str, strict_f: bool = True) -> CrystalOps:
    d.check_vertex(i)
    return Crystal(d, strict_f=strict_f).ops(node, i)
