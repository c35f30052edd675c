"""The KLR algebra R(nu) in its PBW basis.

Basis monomials are triples ``(perm_word, dots, idem)`` standing for
``psi_perm_word * x_1^dots[0] ... x_m^dots[m-1] * 1_idem`` where
``perm_word`` is the canonical (lexicographically least) reduced word and
``idem`` is the bottom sequence.  Products are computed by left-multiplying
single generators onto basis monomials and rewriting with the defining
relations; every generator-times-monomial product is memoized.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _itperms
from typing import Iterable, Mapping

from ..cartan import CartanDatum, RootVector
from ..errors import ContentMismatch
from . import perms

Key = tuple  # (perm_word, dots, idem)


@dataclass(frozen=True, order=True)
class PbwMonomial:
    word: tuple  # bottom idempotent 1_i
    perm: tuple  # canonical reduced word
    dots: tuple

    @property
    def key(self) -> Key:
        return (self.perm, self.dots, self.word)

    @classmethod
    def from_key(cls, key: Key) -> PbwMonomial:
        return cls(key[2], key[0], key[1])


def _add_into(acc: dict, elem: Mapping, scale=1) -> None:
    get = acc.get
    for k, c in elem.items():
        v = get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _shift(elem: Mapping, dots: tuple) -> dict:
    """Right multiplication by x^dots: every PBW term gains the same dots."""
    return {(w, tuple(a + b for a, b in zip(dv, dots)), i): c for (w, dv, i), c in elem.items()}


def _divided_difference(dv: tuple, r: int) -> dict:
    """(x^dv - s_r x^dv) / (x_r - x_{r+1}) as {dot vector: coefficient}."""
    a, b = dv[r - 1], dv[r]
    out = {}
    lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
    for k in range(hi - lo):
        v = list(dv)
        if sign > 0:
            v[r - 1], v[r] = a - 1 - k, b + k
        else:
            v[r - 1], v[r] = a + k, b - 1 - k
        out[tuple(v)] = sign
    return out


class KlrAlgebra:
    """Structure of R(nu) for a fixed Cartan datum and content ``nu``."""

    def __init__(self, datum: CartanDatum, nu: RootVector):
        for lab, _ in nu.items():
            datum.check_vertex(lab)
        self.datum = datum
        self.nu = nu
        self.m = nu.size
        letters = []
        for lab in datum.labels:
            letters += [lab] * nu.get(lab)
        self.sequences = sorted(set(_itperms(letters)))
        self._xmemo: dict = {}
        self._pmemo: dict = {}
        self._rwmemo: dict = {}
        self._mulmemo: dict = {}
        self._dmemo: dict = {}
        self._zero = (0,) * self.m
        self._lock = threading.Lock()

    # helpers -------------------------------------------------------------

    def _store(self, memo: dict, key, value):
        # idempotent insert: concurrent writers compute identical values
        with self._lock:
            return memo.setdefault(key, value)

    def top(self, key: Key) -> tuple:
        return perms.act_word(key[0], key[2])

    def basis_key(self, perm_word: Iterable[int], dots: Iterable[int], idem: Iterable[str]) -> Key:
        return (tuple(perm_word), tuple(dots), tuple(idem))

    def idempotent(self, idem) -> dict:
        return {((), (0,) * self.m, tuple(idem)): 1}

    def one(self) -> dict:
        return {((), (0,) * self.m, s): 1 for s in self.sequences}

    def degree(self, key: Key) -> int:
        perm_word, dots, idem = key
        d = self.datum
        deg = sum(a * d.b(lab, lab) for a, lab in zip(dots, idem))
        seq = idem
        for r in reversed(perm_word):
            deg -= d.b(seq[r - 1], seq[r])
            seq = perms.act_simple(r, seq)
        return deg

    def quadratic(self, r: int, seq: tuple) -> dict:
        """psi_r psi_r 1_seq as {dot vector: coefficient}."""
        i, j = seq[r - 1], seq[r]
        d = self.datum
        zero = (0,) * self.m
        if i == j:
            return {}
        if d.b(i, j) == 0:
            return {zero: 1}
        out: dict = {}
        for pos, e in ((r - 1, d.a(i, j)), (r, d.a(j, i))):
            v = list(zero)
            v[pos] = e
            out[tuple(v)] = out.get(tuple(v), 0) + 1
        return out

    def braid_correction(self, r: int, seq: tuple) -> dict:
        """(psi_r psi_{r+1} psi_r - psi_{r+1} psi_r psi_{r+1}) 1_seq as dots."""
        i, j, k = seq[r - 1], seq[r], seq[r + 1]
        d = self.datum
        if i != k or i == j or d.b(i, j) == 0:
            return {}
        a = d.a(i, j)
        out = {}
        for t in range(a):
            v = [0] * self.m
            v[r - 1] = t
            v[r + 1] = a - 1 - t
            out[tuple(v)] = out.get(tuple(v), 0) + 1
        return out

    # generator actions ---------------------------------------------------

    def left_x(self, t: int, key: Key) -> dict:
        """x_t * (basis monomial)."""
        perm_word, dots, idem = key
        if perm_word and any(dots):
            return _shift(self.left_x(t, (perm_word, self._zero, idem)), dots)
        memo_key = (t, key)
        hit = self._xmemo.get(memo_key)
        if hit is not None:
            return hit
        if not perm_word:
            v = list(dots)
            v[t - 1] += 1
            res = {((), tuple(v), idem): 1}
        else:
            r = perm_word[0]
            rest = (perm_word[1:], dots, idem)
            j = self.top(rest)
            st = t + 1 if t == r else t - 1 if t == r + 1 else t
            res: dict = {}
            for k2, c in self.left_x(st, rest).items():
                _add_into(res, self.left_psi(r, k2), c)
            if j[r - 1] == j[r]:
                if t == r:
                    _add_into(res, {rest: 1})
                elif t == r + 1:
                    _add_into(res, {rest: -1})
        return self._store(self._xmemo, memo_key, res)

    def left_psi(self, r: int, key: Key) -> dict:
        """psi_r * (basis monomial)."""
        perm_word, dots, idem = key
        if any(dots):
            return _shift(self.left_psi(r, (perm_word, self._zero, idem)), dots)
        memo_key = (r, key)
        hit = self._pmemo.get(memo_key)
        if hit is not None:
            return hit
        w = perms.from_word(self.m, perm_word)
        if not perms.is_left_descent(r, w):
            res = self.rewrite((r,) + perm_word, dots, idem)
        else:
            shorter = perms.left_mul_simple(r, w)
            u_rest = perms.canonical_word(shorter)
            u = (r,) + u_rest
            res = {}
            if u == perm_word:
                lower = {}
            else:
                lower = self._rewrite_to(perm_word, u, dots, idem)
            # psi_r psi_u = Q(x) psi_{u_rest}
            seq = perms.act_word(u_rest, idem)
            base = (u_rest, dots, idem)
            for dv, c in self.quadratic(r, seq).items():
                _add_into(res, self.left_dots(dv, base), c)
            for k2, c in lower.items():
                _add_into(res, self.left_psi(r, k2), c)
        return self._store(self._pmemo, memo_key, res)

    def left_dots(self, dv: tuple, key: Key) -> dict:
        """x^dv * (basis monomial).

        Moves the whole monomial past the first crossing at once:
        f psi_r = psi_r (s_r f) + d_r(f) on equal labels.
        """
        if not any(dv):
            return {key: 1}
        perm_word, dots, idem = key
        if perm_word and any(dots):
            return _shift(self.left_dots(dv, (perm_word, self._zero, idem)), dots)
        memo_key = (dv, key)
        hit = self._dmemo.get(memo_key)
        if hit is not None:
            return hit
        if not perm_word:
            res = {((), tuple(a + b for a, b in zip(dots, dv)), idem): 1}
        else:
            r = perm_word[0]
            rest = (perm_word[1:], dots, idem)
            swapped = list(dv)
            swapped[r - 1], swapped[r] = dv[r], dv[r - 1]
            res = {}
            for k2, c in self.left_dots(tuple(swapped), rest).items():
                _add_into(res, self.left_psi(r, k2), c)
            j = self.top(rest)
            if j[r - 1] == j[r]:
                for mono, c in _divided_difference(dv, r).items():
                    _add_into(res, self.left_dots(mono, rest), c)
        return self._store(self._dmemo, memo_key, res)

    def apply_gens(self, gens: Iterable[tuple], elem: Mapping) -> dict:
        """Left-multiply ``elem`` by the product of ``gens`` (rightmost acts first).

        Each generator is ``("psi", r)`` or ``("x", t)``.
        """
        cur = dict(elem)
        for kind, idx in reversed(list(gens)):
            nxt: dict = {}
            for k2, c in cur.items():
                part = self.left_psi(idx, k2) if kind == "psi" else self.left_x(idx, k2)
                _add_into(nxt, part, c)
            cur = nxt
        return cur

    def rewrite(self, word: tuple, dots: tuple, idem: tuple) -> dict:
        """Normal form of psi_word x^dots 1_idem for a reduced ``word``."""
        w = perms.from_word(self.m, word)
        target = perms.canonical_word(w)
        out = {(target, dots, idem): 1}
        if word != target:
            _add_into(out, self._rewrite_to(word, target, dots, idem))
        return out

    def _rewrite_to(self, word: tuple, target: tuple, dots: tuple, idem: tuple) -> dict:
        """psi_word x^dots 1_idem - psi_target x^dots 1_idem, in normal form.

        ``word`` and ``target`` are reduced words of one permutation; only
        braid moves contribute, each adding prefix * correction * suffix.
        """
        if any(dots):
            return _shift(self._rewrite_to(word, target, self._zero, idem), dots)
        memo_key = (word, target, dots, idem)
        hit = self._rwmemo.get(memo_key)
        if hit is not None:
            return hit
        out: dict = {}
        cur = word
        start = ((), dots, idem)
        for pos, kind in perms.move_path(word, target):
            if kind == "comm":
                a, b = cur[pos], cur[pos + 1]
                cur = cur[:pos] + (b, a) + cur[pos + 2:]
                continue
            a, b = cur[pos], cur[pos + 1]
            prefix, suffix = cur[:pos], cur[pos + 3:]
            seq = perms.act_word(suffix, idem)
            r = min(a, b)
            corr = self.braid_correction(r, seq)
            # psi_a psi_b psi_a = psi_b psi_a psi_b + sign * correction
            sign = 1 if a == r else -1
            if corr:
                tail = self.apply_gens([("psi", s) for s in suffix], {start: 1})
                mid: dict = {}
                for dv, c in corr.items():
                    for k2, c2 in tail.items():
                        _add_into(mid, self.left_dots(dv, k2), c * c2)
                full = self.apply_gens([("psi", s) for s in prefix], mid)
                _add_into(out, full, sign)
            cur = prefix + (b, a, b) + suffix
        return self._store(self._rwmemo, memo_key, out)

    # algebra operations --------------------------------------------------

    def mul_basis(self, ka: Key, kb: Key) -> dict:
        if any(kb[1]):
            return _shift(self.mul_basis(ka, (kb[0], self._zero, kb[2])), kb[1])
        hit = self._mulmemo.get((ka, kb))
        if hit is not None:
            return hit
        perm_word, dots, idem = ka
        if self.top(kb) != idem:
            return {}
        cur = self.left_dots(dots, kb)
        res = self.apply_gens([("psi", s) for s in perm_word], cur)
        return self._store(self._mulmemo, (ka, kb), res)

    def multiply(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                _add_into(out, self.mul_basis(ka, kb), ca * cb)
        return out

    def sigma_basis(self, key: Key) -> dict:
        perm_word, dots, idem = key
        m = self.m
        sign = 1
        seq = idem
        for r in reversed(perm_word):
            if seq[r - 1] == seq[r]:
                sign = -sign
            seq = perms.act_simple(r, seq)
        start = ((), tuple(reversed(dots)), tuple(reversed(idem)))
        res = self.apply_gens([("psi", m - r) for r in perm_word], {start: 1})
        return {k: sign * c for k, c in res.items()} if sign != 1 else res

    def sigma(self, a: Mapping) -> dict:
        out: dict = {}
        for k, c in a.items():
            _add_into(out, self.sigma_basis(k), c)
        return out

    def generator(self, kind: str, idx: int | None = None) -> dict:
        """x_t = sum_i x_t 1_i, psi_r = sum_i psi_r 1_i, or 1."""
        if kind == "one":
            return self.one()
        return self.apply_gens([(kind, idx)], self.one())

    def basis_in_degree(self, deg: int, src=None, dst=None) -> list[Key]:
        """All PBW monomials of degree ``deg`` (optionally restricted to 1_dst R 1_src)."""
        out = []
        d = self.datum
        for s in self.sequences if src is None else [tuple(src)]:
            for w in perms.all_perms(self.m):
                if dst is not None and perms.act(w, s) != tuple(dst):
                    continue
                pw = perms.canonical_word(w)
                base = self.degree((pw, (0,) * self.m, s))
                rem = deg - base
                if rem < 0:
                    continue
                weights = [d.b(lab, lab) for lab in s]
                for dv in _dot_vectors(weights, rem):
                    out.append((pw, dv, s))
        return sorted(out)


def _dot_vectors(weights: list[int], total: int):
    """Exponent vectors a with sum a_k * weights[k] == total."""
    if not weights:
        if total == 0:
            yield ()
        return
    w0 = weights[0]
    for a in range(total // w0 + 1):
        for rest in _dot_vectors(weights[1:], total - a * w0):
            yield (a,) + rest


class KlrElement:
    """Exact rational combination of PBW monomials of one content ``nu``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: KlrAlgebra, terms: Mapping | None = None):
        self.algebra = algebra
        acc: dict = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                acc[k] = c
        self.terms = acc

    @property
    def nu(self) -> RootVector:
        return self.algebra.nu

    def _check(self, other: KlrElement) -> None:
        if other.algebra.nu != self.algebra.nu or other.algebra.datum != self.algebra.datum:
            raise ContentMismatch(f"contents differ: {self.nu} vs {other.nu}")

    def __mul__(self, other: KlrElement) -> KlrElement:
        self._check(other)
        return KlrElement(self.algebra, self.algebra.multiply(self.terms, other.terms))

    def __add__(self, other: KlrElement) -> KlrElement:
        self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return KlrElement(self.algebra, acc)

    def __sub__(self, other: KlrElement) -> KlrElement:
        self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms, -1)
        return KlrElement(self.algebra, acc)

    def __rmul__(self, scalar) -> KlrElement:
        return KlrElement(self.algebra, {k: scalar * c for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, KlrElement):
            return NotImplemented
        return self.nu == other.nu and self.terms == other.terms

    def __hash__(self):
        return hash((self.nu, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sigma(self) -> KlrElement:
        return KlrElement(self.algebra, self.algebra.sigma(self.terms))

    def degrees(self) -> set[int]:
        return {self.algebra.degree(k) for k in self.terms}

    def monomials(self) -> list[PbwMonomial]:
        return [PbwMonomial.from_key(k) for k in sorted(self.terms)]

    def to_json(self) -> dict:
        return {
            "nu": self.nu.to_json(),
            "terms": [
                {"word": list(k[2]), "perm": list(k[0]), "dots": list(k[1]), "coeff": str(c)}
                for k, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, algebra: KlrAlgebra, data: Mapping) -> KlrElement:
        nu = RootVector.from_json(data["nu"])
        if nu != algebra.nu:
            raise ContentMismatch(f"element content {nu} does not match algebra {algebra.nu}")
        acc: dict = {}
        for t in data["terms"]:
            word, dots, idem = tuple(t["perm"]), tuple(t["dots"]), tuple(t["word"])
            pw = perms.canonical_word(perms.from_word(algebra.m, word))
            if pw != word:
                nf = algebra.rewrite(word, dots, idem)
            else:
                nf = {(word, dots, idem): 1}
            _add_into(acc, nf, Fraction(t["coeff"]))
        return cls(algebra, acc)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{_fmt(k)}" for k, c in sorted(self.terms.items()))


def _fmt(key: Key) -> str:
    perm_word, dots, idem = key
    parts = [f"psi{r}" for r in perm_word]
    parts += [f"x{t + 1}^{e}" if e > 1 else f"x{t + 1}" for t, e in enumerate(dots) if e]
    parts.append("1_(" + ",".join(idem) + ")")
    return "*".join(parts)


def multiply(a: KlrElement, b: KlrElement) -> KlrElement:
    return a * b


def sigma(a: KlrElement) -> KlrElement:
    return a.sigma()


def degree(algebra: KlrAlgebra, m: PbwMonomial) -> int:
    return algebra.degree(m.key)
