"""Characters of graded R(nu)-modules and operators acting on them.

A character is a finite Z[q, q^-1]-combination of words of one fixed content.
Words are tuples of vertex labels.  The quantum shuffle product computes the
character of an induced module, and ``e_char`` strips letters from the right
end of words (restriction to the last strands).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .cartan import CartanDatum, DominantWeight, RootVector, pairing, quantum_numbers
from .errors import ContentMismatch, IndexOutOfRange, NotDivisible, ZeroCharacter
from .laurent import ONE, LaurentPoly

Word = tuple  # tuple[str, ...]


class Character:
    """Immutable map word -> LaurentPoly with all words of content ``nu``."""

    __slots__ = ("nu", "_terms", "_hash")

    def __init__(self, nu: RootVector, terms: Mapping[Word, LaurentPoly] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, LaurentPoly] = {}
        for w, c in items:
            w = tuple(w)
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly(c)
            if RootVector.from_word(w) != nu:
                raise ContentMismatch(f"word {w} does not have content {nu}")
            acc[w] = acc[w] + c if w in acc else c
        self.nu = nu
        self._terms = {w: acc[w] for w in sorted(acc) if acc[w]}
        self._hash = None

    @classmethod
    def word(cls, w: Iterable[str], coeff: LaurentPoly | int = 1) -> Character:
        w = tuple(w)
        return cls(RootVector.from_word(w), {w: coeff})

    @classmethod
    def zero(cls, nu: RootVector) -> Character:
        return cls(nu)

    @classmethod
    def unit(cls) -> Character:
        return cls(RootVector(), {(): ONE})

    @property
    def terms(self) -> dict[Word, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, w) -> LaurentPoly:
        return self._terms.get(tuple(w), LaurentPoly())

    def words(self) -> list[Word]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _same_content(self, other: Character) -> None:
        if other.nu != self.nu:
            raise ContentMismatch(f"contents differ: {self.nu} vs {other.nu}")

    def __add__(self, other: Character) -> Character:
        self._same_content(other)
        return Character(self.nu, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> Character:
        return Character(self.nu, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: Character) -> Character:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> Character:
        return Character(self.nu, {w: v * c for w, v in self._terms.items()})

    def shift(self, r: int) -> Character:
        return Character(self.nu, {w: v.shift(r) for w, v in self._terms.items()})

    def bar(self) -> Character:
        return Character(self.nu, {w: v.bar() for w, v in self._terms.items()})

    def eval1(self) -> dict[Word, int]:
        """Specialization q = 1; words whose coefficient vanishes there are dropped."""
        out = {}
        for w, v in self._terms.items():
            c = v.eval1()
            if c:
                out[w] = c
        return out

    def reverse(self) -> Character:
        """Twist by the flip involution (reverses every word)."""
        return Character(self.nu, {w[::-1]: c for w, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.nu == other.nu and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nu, tuple(self._terms.items())))
        return self._hash

    def to_json(self) -> dict:
        return {
            "nu": self.nu.to_json(),
            "terms": [{"word": list(w), "coeff": c.to_json()} for w, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Character:
        nu = RootVector.from_json(data["nu"])
        return cls(nu, [(tuple(t["word"]), LaurentPoly.from_json(t["coeff"])) for t in data["terms"]])

    def __repr__(self):
        if not self._terms:
            return f"Character(0, nu={self.nu})"
        body = " + ".join(f"({c})*[{','.join(w)}]" for w, c in self._terms.items())
        return f"Character({body})"


def _crossing_degree(d: CartanDatum, left: Word, right: Word, right_positions) -> int:
    """Degree of the shuffle placing ``right`` at ``right_positions``.

    A pair (letter of ``left``, letter of ``right``) crosses when the right
    letter lands before the left one; each crossing contributes -(a, b).
    """
    deg = 0
    pos = set(right_positions)
    m = len(left) + len(right)
    li = 0
    ri = 0
    seen_right: list[str] = []
    for p in range(m):
        if p in pos:
            seen_right.append(right[ri])
            ri += 1
        else:
            a = left[li]
            li += 1
            for b in seen_right:
                deg -= d.b(a, b)
    return deg


def shuffle_words(d: CartanDatum, left: Word, right: Word) -> dict[Word, LaurentPoly]:
    m = len(left) + len(right)
    out: dict[Word, LaurentPoly] = {}
    for pos in combinations(range(m), len(right)):
        pset = set(pos)
        word = []
        li = ri = 0
        for p in range(m):
            if p in pset:
                word.append(right[ri])
                ri += 1
            else:
                word.append(left[li])
                li += 1
        w = tuple(word)
        c = LaurentPoly.q(_crossing_degree(d, left, right, pos))
        out[w] = out[w] + c if w in out else c
    return out


def shuffle(d: CartanDatum, f: Character, g: Character) -> Character:
    """Quantum shuffle product f ⧢ g (character of the induced module)."""
    acc: dict[Word, LaurentPoly] = {}
    for u, cu in f.items():
        for v, cv in g.items():
            cc = cu * cv
            for w, c in shuffle_words(d, u, v).items():
                t = c * cc
                acc[w] = acc[w] + t if w in acc else t
    return Character(f.nu + g.nu, acc)


def e_char(d: CartanDatum, ch: Character, i: str, r: int = 1, divided: bool = False) -> Character:
    """Keep words ending in i^r and strip that suffix.

    With ``divided`` the coefficients are divided exactly by [r]_i!, giving
    the divided power e_i^(r).
    """
    d.check_vertex(i)
    if r < 1:
        raise ValueError("r must be >= 1")
    if ch.nu.get(i) < r:
        return _zero_after_strip(ch.nu, i, r)
    suffix = (i,) * r
    fact = quantum_numbers(d, i, r)[1] if divided else None
    acc = {}
    for w, c in ch.items():
        if w[len(w) - r:] == suffix:
            if fact is not None:
                try:
                    c = c.divide_exact(fact)
                except NotDivisible as exc:
                    raise NotDivisible(
                        f"coefficient {c} of {list(w)} is not divisible by [{r}]_{i}!",
                        remainder=exc.remainder) from None
            acc[w[:-r]] = c
    return Character(ch.nu - RootVector({i: r}), acc)


def _strip_content(nu: RootVector, i: str, r: int) -> RootVector:
    # clamped at zero so that zero characters still compose in pipelines
    acc = dict(nu.items())
    acc[i] = max(0, acc.get(i, 0) - r)
    return RootVector(acc)


def _zero_after_strip(nu: RootVector, i: str, r: int) -> Character:
    return Character.zero(_strip_content(nu, i, r))


def e_char_left(d: CartanDatum, ch: Character, i: str, r: int = 1, divided: bool = False) -> Character:
    """Prefix version of :func:`e_char`, obtained through word reversal."""
    return e_char(d, ch.reverse(), i, r, divided).reverse()


@dataclass(frozen=True)
class CharStats:
    eps: dict
    eps_vee: dict
    wt: dict
    jump: dict
    phi_lambda: dict | None


def _max_power(words: Iterable[Word], i: str, from_end: bool) -> int:
    best = 0
    for w in words:
        seq = reversed(w) if from_end else iter(w)
        n = 0
        for x in seq:
            if x != i:
                break
            n += 1
        best = max(best, n)
    return best


def char_stats(d: CartanDatum, ch: Character, lam: DominantWeight | None = None) -> CharStats:
    """epsilon, epsilon-vee, wt_i, jump and (optionally) phi^Lambda read off a simple character."""
    if ch.is_zero():
        raise ZeroCharacter("statistics are undefined on the zero character")
    eps, eps_vee, wt, jump = {}, {}, {}, {}
    phi = {} if lam is not None else None
    words = ch.words()
    for i in d.labels:
        eps[i] = _max_power(words, i, from_end=True)
        eps_vee[i] = _max_power(words, i, from_end=False)
        wt[i] = -pairing(d, i, ch.nu)
        jump[i] = eps[i] + eps_vee[i] + wt[i]
        if phi is not None:
            phi[i] = lam.get(i) + eps[i] + wt[i]
    return CharStats(eps, eps_vee, wt, jump, phi)


def char_L_im(d: CartanDatum, i: str, m: int) -> Character:
    """Character [m]_i! * i^m of the simple module L(i^m)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    d.check_vertex(i)
    return Character.word((i,) * m, quantum_numbers(d, i, m)[1])


def normalize_bar_symmetric(ch: Character) -> Character:
    """Shift by a power of q so that the character is bar-invariant.

    Raises ValueError if no shift makes it bar-invariant.
    """
    if ch.is_zero():
        return ch
    lo = min(c.min_exp() for _, c in ch.items())
    hi = max(c.max_exp() for _, c in ch.items())
    if (lo + hi) % 2:
        raise ValueError("character is not bar-symmetric up to shift")
    out = ch.shift(-(lo + hi) // 2)
    if out.bar() != out:
        raise ValueError("character is not bar-symmetric up to shift")
    return out


def equal_up_to_q_power(f: Character, g: Character) -> bool:
    """True if f = q^r g for some integer r."""
    if f.nu != g.nu or set(f.words()) != set(g.words()):
        return False
    if f.is_zero():
        return True
    w = f.words()[0]
    r = f[w].min_exp() - g[w].min_exp()
    return f == g.shift(r)


def char_simple_ci_j(d: CartanDatum, i: str, j: str, c: int, n: int) -> Character:
    """Character of the simple R(ci+j)-module with epsilon_i = n.

    For c <= a_ij this is [c-n]_i! [n]_i! i^{c-n} j i^n.  For c > a_ij it is
    the shuffle of the c = a_ij character with index n-(c-a) and L(i^{c-a}),
    shifted to be bar-symmetric.
    """
    d.check_vertex(i)
    d.check_vertex(j)
    if i == j:
        raise ValueError("i and j must be distinct")
    if c < 0:
        raise IndexOutOfRange(f"c = {c} must be nonnegative")
    a = d.a(i, j)
    lo = max(0, c - a)
    if not lo <= n <= c:
        raise IndexOutOfRange(f"n = {n} outside [{lo}, {c}] for c = {c}, a = {a}")
    if c <= a:
        coeff = quantum_numbers(d, i, c - n)[1] * quantum_numbers(d, i, n)[1]
        return Character.word((i,) * (c - n) + (j,) + (i,) * n, coeff)
    circ = char_simple_ci_j(d, i, j, a, n - (c - a))
    return normalize_bar_symmetric(shuffle(d, circ, char_L_im(d, i, c - a)))


def serre_apply(d: CartanDatum, ch: Character, i: str, j: str, c: int) -> Character:
    """Apply sum_{r=0}^{c} (-1)^r e_i^{(c-r)} e_j e_i^{(r)} to ``ch``."""
    d.check_vertex(i)
    d.check_vertex(j)
    if i == j:
        raise ValueError("i and j must be distinct")
    if c < 0:
        raise ValueError("c must be nonnegative")
    target = _strip_content(_strip_content(ch.nu, i, c), j, 1)
    total = Character.zero(target)
    for r in range(c + 1):
        x = ch
        if r:
            x = e_char(d, x, i, r, divided=True)
        x = e_char(d, x, j, 1)
        if c - r:
            x = e_char(d, x, i, c - r, divided=True)
        if x.is_zero():
            continue
        total = total + (x if r % 2 == 0 else -x)
    return total
