"""Polynomial representations used as independent oracles.

These act on polynomials directly and never touch the rewriting engine.
Polynomials are dicts ``{exponent tuple: Fraction}``.

* :func:`nilhecke_oracle` is the one-vertex case: x_r multiplies, psi_r acts
  by the divided difference (f - s_r f) / (x_r - x_{r+1}).
* :class:`PolynomialRepresentation` extends it to any content nu on
  ``⊕_i Q[x] 1_i``: between different labels psi_r swaps variables and, for
  sequences whose labels appear against the label order, multiplies by the
  quadratic polynomial of the target so that psi_r^2 is as required.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..cartan import CartanDatum
from . import perms

Poly = dict


def poly_add(f: Mapping, g: Mapping, scale=1) -> Poly:
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def poly_mul(f: Mapping, g: Mapping) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def monomial(exps: Iterable[int], coeff=1) -> Poly:
    return {tuple(exps): Fraction(coeff)}


def variable(m: int, t: int) -> Poly:
    """x_t (1-based) in m variables."""
    e = [0] * m
    e[t - 1] = 1
    return {tuple(e): Fraction(1)}


def swap_vars(f: Mapping, r: int) -> Poly:
    out: Poly = {}
    for e, c in f.items():
        e = list(e)
        e[r - 1], e[r] = e[r], e[r - 1]
        out[tuple(e)] = c
    return out


def divided_difference(f: Mapping, r: int) -> Poly:
    """(f - s_r f) / (x_r - x_{r+1}), termwise."""
    out: Poly = {}
    for e, c in f.items():
        p, q = e[r - 1], e[r]
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, hi = min(p, q), max(p, q)
        for k in range(hi - lo):
            v = list(e)
            v[r - 1] = hi - 1 - k
            v[r] = lo + k
            v = tuple(v)
            nv = out.get(v, 0) + sign * c
            if nv:
                out[v] = nv
            else:
                out.pop(v, None)
    return out


def nilhecke_oracle(m: int, poly: Mapping, gens: Iterable[tuple]) -> Poly:
    """Apply a product of generators (rightmost first) to ``poly`` in Q[x_1..x_m].

    Generators are ``("x", t)`` or ``("psi", r)``.
    """
    cur = {tuple(e): Fraction(c) for e, c in poly.items()}
    for kind, idx in reversed(list(gens)):
        if kind == "x":
            cur = poly_mul(cur, variable(m, idx))
        elif kind == "psi":
            cur = divided_difference(cur, idx)
        else:
            raise ValueError(f"unknown generator {kind!r}")
    return cur


class PolynomialRepresentation:
    """Faithful action of R(nu) on ⊕_i Q[x_1..x_m] 1_i (vectors are dicts seq -> Poly)."""

    def __init__(self, datum: CartanDatum, m: int):
        self.datum = datum
        self.m = m
        self._order = {lab: k for k, lab in enumerate(datum.labels)}

    def _quadratic_poly(self, r: int, seq: tuple) -> Poly:
        i, j = seq[r - 1], seq[r]
        d = self.datum
        if d.b(i, j) == 0:
            return monomial([0] * self.m)
        e1 = [0] * self.m
        e1[r - 1] = d.a(i, j)
        e2 = [0] * self.m
        e2[r] = d.a(j, i)
        return poly_add(monomial(e1), monomial(e2))

    def psi(self, r: int, seq: tuple, f: Mapping) -> tuple[tuple, Poly]:
        i, j = seq[r - 1], seq[r]
        target = perms.act_simple(r, seq)
        if i == j:
            return target, divided_difference(f, r)
        g = swap_vars(f, r)
        if self._order[i] > self._order[j]:
            g = poly_mul(self._quadratic_poly(r, target), g)
        return target, g

    def apply(self, gens: Iterable[tuple], vec: Mapping[tuple, Mapping]) -> dict:
        cur = {s: dict(f) for s, f in vec.items()}
        for kind, idx in reversed(list(gens)):
            nxt: dict = {}
            for s, f in cur.items():
                if kind == "x":
                    t, g = s, poly_mul(f, variable(self.m, idx))
                elif kind == "psi":
                    t, g = self.psi(idx, s, f)
                elif kind == "idem":
                    if s != idx:
                        continue
                    t, g = s, f
                else:
                    raise ValueError(f"unknown generator {kind!r}")
                nxt[t] = poly_add(nxt.get(t, {}), g)
                if not nxt[t]:
                    del nxt[t]
            cur = nxt
        return cur

    def apply_basis(self, key: tuple, vec: Mapping[tuple, Mapping]) -> dict:
        """Action of the PBW monomial ``(perm_word, dots, idem)``."""
        perm_word, dots, idem = key
        gens = [("psi", r) for r in perm_word]
        for t, e in enumerate(dots):
            gens += [("x", t + 1)] * e
        gens.append(("idem", tuple(idem)))
        return self.apply(gens, vec)

    def apply_element(self, terms: Mapping, vec: Mapping[tuple, Mapping]) -> dict:
        out: dict = {}
        for key, c in terms.items():
            for s, f in self.apply_basis(key, vec).items():
                out[s] = poly_add(out.get(s, {}), f, c)
                if not out[s]:
                    del out[s]
        return out
