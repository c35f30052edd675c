"""Cyclotomic quotients R^Lambda(nu) = R(nu) / J, J generated by x_1^{lambda_{i_1}} 1_i.

The ideal is graded and splits over pairs of idempotents, so it is computed
one (src, dst, degree) block at a time.  J is spanned by the products
psi_u * x_1^{lambda} 1_{w(i)} * psi_w x^a 1_i, which the engine puts in PBW
normal form before exact row reduction.

Degrees are bounded using a nilpotency witness: once x_r^N 1_i lies in J for
every r and i, every PBW monomial with some exponent >= N lies in J, so the
quotient vanishes above the largest degree of psi_w x^a with all a_r < N.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cartan import CartanDatum, DominantWeight, RootVector
from ..errors import CapExceeded
from . import perms
from .algebra import KlrAlgebra, _dot_vectors
from .linalg import EchelonBasis


@dataclass(frozen=True)
class Caps:
    max_dot: int = 16  # largest nilpotency exponent tried
    max_degree: int = 64  # largest degree for which the ideal is computed
    max_products: int = 2_000_000  # spanning products row-reduced in total


@dataclass
class CyclotomicPresentation:
    datum: CartanDatum
    nu: RootVector
    Lambda: DominantWeight
    algebra: KlrAlgebra
    witness: int
    degree_range: tuple[int, int]
    graded_dim: dict[int, int]
    basis: list = field(default_factory=list)
    builder: object = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return sum(self.graded_dim.values())

    def in_ideal(self, vec: dict) -> bool:
        """Membership of a homogeneous single-block element in J."""
        if not vec:
            return True
        if self.builder is None:
            return False
        k0 = next(iter(vec))
        return self.builder.contains(vec, k0[2], self.algebra.top(k0), self.algebra.degree(k0))


class _IdealBuilder:
    def __init__(self, algebra: KlrAlgebra, lam: DominantWeight, caps: Caps):
        self.A = algebra
        self.lam = lam
        self.caps = caps
        self.blocks: dict[tuple, EchelonBasis] = {}
        self.done: set[int] = set()
        self.products = 0
        d = algebra.datum
        self._perm_data = []
        for w in perms.all_perms(algebra.m):
            self._perm_data.append((w, perms.canonical_word(w)))
        self._deg_cache: dict = {}
        self._weights = {s: [d.b(x, x) for x in s] for s in algebra.sequences}

    def psi_degree(self, word, seq) -> int:
        key = (word, seq)
        hit = self._deg_cache.get(key)
        if hit is None:
            hit = self.A.degree((word, (0,) * self.A.m, seq))
            self._deg_cache[key] = hit
        return hit

    def ensure(self, deg: int) -> None:
        if deg in self.done:
            return
        if deg > self.caps.max_degree:
            raise CapExceeded(f"ideal closure needs degree {deg} > cap {self.caps.max_degree}")
        A = self.A
        d = A.datum
        m = A.m
        for s in A.sequences:
            for w, wword in self._perm_data:
                j = perms.act(w, s)
                g = self.lam.get(j[0])
                g_deg = g * d.b(j[0], j[0])
                base = self.psi_degree(wword, s) + g_deg
                for _u, uword in self._perm_data:
                    rem = deg - base - self.psi_degree(uword, j)
                    if rem < 0:
                        continue
                    for a in _dot_vectors(self._weights[s], rem):
                        self.products += 1
                        if self.products > self.caps.max_products:
                            raise CapExceeded(
                                f"ideal closure exceeded {self.caps.max_products} products")
                        gd = (g,) + (0,) * (m - 1)
                        vec = A.left_dots(gd, (wword, a, s))
                        vec = A.apply_gens([("psi", r) for r in uword], vec)
                        if not vec:
                            continue
                        blk = (s, perms.act_word(uword, j), deg)
                        self.blocks.setdefault(blk, EchelonBasis()).add(vec)
        self.done.add(deg)

    def contains(self, vec: dict, src, dst, deg: int) -> bool:
        if not vec:
            return True
        self.ensure(deg)
        space = self.blocks.get((tuple(src), tuple(dst), deg))
        return space is not None and space.contains(vec)

    def x_power_in_ideal(self, r: int, k: int, s: tuple) -> bool:
        dots = [0] * self.A.m
        dots[r - 1] = k
        key = ((), tuple(dots), s)
        return self.contains({key: 1}, s, s, self.A.degree(key))


def cyclotomic_build(d: CartanDatum, nu: RootVector, lam: DominantWeight,
                     caps: Caps | None = None) -> CyclotomicPresentation:
    """Basis and graded dimension of R^Lambda(nu)."""
    caps = caps or Caps()
    for lab, _ in lam.items():
        d.check_vertex(lab)
    A = KlrAlgebra(d, nu)
    if A.m == 0:
        key = ((), (), ())
        return CyclotomicPresentation(d, nu, lam, A, 0, (0, 0), {0: 1}, [key])
    builder = _IdealBuilder(A, lam, caps)
    witness = None
    for n in range(1, caps.max_dot + 1):
        if all(builder.x_power_in_ideal(r, n, s) for s in A.sequences for r in range(1, A.m + 1)):
            witness = n
            break
    if witness is None:
        raise CapExceeded(f"no nilpotency witness up to exponent {caps.max_dot}")
    lo = min(builder.psi_degree(wword, s) for s in A.sequences for _w, wword in builder._perm_data)
    hi = max(builder.psi_degree(wword, s) for s in A.sequences for _w, wword in builder._perm_data)
    hi += max(sum((witness - 1) * b for b in builder._weights[s]) for s in A.sequences)
    graded: dict[int, int] = {}
    basis = []
    for deg in range(lo, hi + 1):
        builder.ensure(deg)
        for s in A.sequences:
            for t in A.sequences:
                mons = A.basis_in_degree(deg, src=s, dst=t)
                if not mons:
                    continue
                space = builder.blocks.get((s, t, deg))
                piv = space.pivots() if space else set()
                free = [k for k in mons if k not in piv]
                if free:
                    graded[deg] = graded.get(deg, 0) + len(free)
                    basis += free
    return CyclotomicPresentation(d, nu, lam, A, witness, (lo, hi), graded, basis, builder)


def dot_nilpotency(p: CyclotomicPresentation, r: int) -> int:
    """Least k with x_r^k = 0 in R^Lambda(nu), maximised over idempotents."""
    A = p.algebra
    if not 1 <= r <= A.m:
        raise ValueError(f"strand index {r} outside 1..{A.m}")
    for k in range(0, p.witness + 1):
        ok = True
        for s in A.sequences:
            dots = [0] * A.m
            dots[r - 1] = k
            key = ((), tuple(dots), s)
            if not p.in_ideal({key: 1}):
                ok = False
                break
        if ok:
            return k
    return p.witness
