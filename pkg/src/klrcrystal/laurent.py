"""Integer Laurent polynomials in one variable ``q``."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import NotDivisible


class LaurentPoly:
    """An element of Z[q, q^-1], stored as ``{exponent: coefficient}``.

    Instances are immutable and hashable.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(terms, int):
            terms = {0: terms}
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def q(cls, power: int = 1) -> LaurentPoly:
        return cls({power: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentPoly(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, r: int) -> LaurentPoly:
        """Multiply by ``q**r``."""
        return LaurentPoly({e + r: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """The involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def eval1(self) -> int:
        return sum(self._terms.values())

    def substitute_power(self, d: int) -> LaurentPoly:
        """Replace q by q**d."""
        return LaurentPoly({e * d: c for e, c in self._terms.items()})

    def divide_exact(self, other: LaurentPoly | int) -> LaurentPoly:
        """Return ``self / other`` if the division is exact in Z[q, q^-1].

        Raises :class:`NotDivisible` carrying the remainder otherwise.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return LaurentPoly()
        # shift both to honest polynomials with nonzero constant term
        lo_a, lo_b = self.min_exp(), other.min_exp()
        rem = {e - lo_a: c for e, c in self._terms.items()}
        div = {e - lo_b: c for e, c in other._terms.items()}
        top_b = max(div)
        lead_b = div[top_b]
        quot: dict[int, int] = {}
        while rem and max(rem) >= top_b:
            top = max(rem)
            c = rem[top]
            if c % lead_b:
                break
            k = c // lead_b
            quot[top - top_b] = k
            for e, cb in div.items():
                e2 = e + top - top_b
                v = rem.get(e2, 0) - k * cb
                if v:
                    rem[e2] = v
                else:
                    rem.pop(e2, None)
        if rem:
            remainder = LaurentPoly(rem).shift(lo_a)
            raise NotDivisible(f"{self} is not divisible by {other}", remainder=remainder)
        return LaurentPoly(quot).shift(lo_a - lo_b)

    # comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # serialization -------------------------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in data.items()})

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly(1)


def quantum_integer(n: int, d: int = 1) -> LaurentPoly:
    """[n] in the variable q**d: q^{d(n-1)} + q^{d(n-3)} + ... + q^{d(1-n)}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentPoly({d * (n - 1 - 2 * k): 1 for k in range(n)})


def quantum_factorial(n: int, d: int = 1) -> LaurentPoly:
    out = ONE
    for k in range(1, n + 1):
        out = out * quantum_integer(k, d)
    return out
