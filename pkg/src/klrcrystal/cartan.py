"""Cartan data, root vectors, dominant weights and quantum integers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    DiagonalNotPositiveEven,
    DivisibilityFailure,
    NonSymmetric,
    OffDiagonalPositive,
    UnknownVertex,
    DatumError,
)
from .laurent import LaurentPoly, quantum_factorial, quantum_integer


class _Coefficients:
    """Finitely supported map label -> nonnegative int, hashable."""

    __slots__ = ("_items", "_hash")

    def __init__(self, coeffs: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[str, int] = {}
        for k, v in items:
            acc[str(k)] = acc.get(str(k), 0) + int(v)
        for k, v in acc.items():
            if v < 0:
                raise ValueError(f"negative coefficient {v} at vertex {k}")
        self._items = tuple(sorted((k, v) for k, v in acc.items() if v))
        self._hash = hash((type(self).__name__, self._items))

    def __getitem__(self, label: str) -> int:
        for k, v in self._items:
            if k == label:
                return v
        return 0

    get = __getitem__

    def items(self):
        return self._items

    def support(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self._items)

    def is_zero(self) -> bool:
        return not self._items

    def __eq__(self, other):
        return type(other) is type(self) and other._items == self._items

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self._items) + list(other._items))

    def to_json(self) -> dict[str, int]:
        return dict(self._items)

    @classmethod
    def from_json(cls, data: Mapping[str, int]):
        return cls(data)

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in self._items)
        return f"{type(self).__name__}({{{inner}}})"


class RootVector(_Coefficients):
    """An element nu = sum nu_i * i of N[I]."""

    __slots__ = ()

    @classmethod
    def from_word(cls, word: Iterable[str]) -> RootVector:
        acc: dict[str, int] = {}
        for x in word:
            acc[x] = acc.get(x, 0) + 1
        return cls(acc)

    @property
    def size(self) -> int:
        return sum(v for _, v in self._items)

    def __sub__(self, other: RootVector) -> RootVector:
        acc = dict(self._items)
        for k, v in other.items():
            acc[k] = acc.get(k, 0) - v
        return RootVector(acc)

    def add_vertex(self, label: str, times: int = 1) -> RootVector:
        return RootVector(list(self._items) + [(label, times)])


class DominantWeight(_Coefficients):
    """Lambda = sum lambda_i Lambda_i with all lambda_i >= 0."""

    __slots__ = ()


@dataclass(frozen=True)
class CartanDatum:
    """Index set with the symmetric bilinear form (alpha_i, alpha_j).

    Use :func:`validate_datum` to construct; the constructor itself also
    validates.
    """

    labels: tuple[str, ...]
    bform: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "bform", tuple(tuple(int(v) for v in row) for row in self.bform))
        _check(self.labels, self.bform)
        object.__setattr__(self, "_index", {lab: k for k, lab in enumerate(self.labels)})

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {label!r}") from None

    def check_vertex(self, label: str) -> str:
        self.index(label)
        return label

    def b(self, i: str, j: str) -> int:
        """(alpha_i, alpha_j)."""
        return self.bform[self.index(i)][self.index(j)]

    def d(self, i: str) -> int:
        """Symmetrizer d_i = (alpha_i, alpha_i)/2, so q_i = q**d_i."""
        return self.b(i, i) // 2

    @cached_property
    def hpair(self) -> dict[tuple[str, str], int]:
        """Table of <h_i, alpha_j>."""
        out = {}
        for i in self.labels:
            for j in self.labels:
                out[i, j] = 2 * self.b(i, j) // self.b(i, i)
        return out

    def cartan_entry(self, i: str, j: str) -> int:
        """<h_i, alpha_j>."""
        self.index(i)
        self.index(j)
        return self.hpair[i, j]

    def a(self, i: str, j: str) -> int:
        """a_ij = -<h_i, alpha_j>."""
        return -self.cartan_entry(i, j)

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "bilinear": [list(r) for r in self.bform]}

    def root_vector(self, coeffs: Sequence[int]) -> RootVector:
        """Root vector from a coefficient list aligned with ``labels``."""
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return RootVector(zip(self.labels, coeffs))

    def dominant_weight(self, coeffs: Sequence[int]) -> DominantWeight:
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return DominantWeight(zip(self.labels, coeffs))

    def coords(self, x: _Coefficients) -> tuple[int, ...]:
        return tuple(x.get(lab) for lab in self.labels)


def _check(labels: Sequence[str], b: Sequence[Sequence[int]]) -> None:
    n = len(labels)
    if len(set(labels)) != n:
        raise DatumError("duplicate vertex labels")
    if len(b) != n or any(len(row) != n for row in b):
        raise DatumError(f"bilinear form must be a {n}x{n} matrix")
    for p in range(n):
        if b[p][p] <= 0 or b[p][p] % 2:
            raise DiagonalNotPositiveEven(
                f"(alpha_{labels[p]}, alpha_{labels[p]}) = {b[p][p]} is not a positive even integer",
                labels[p], labels[p])
    for p in range(n):
        for r in range(n):
            if b[p][r] != b[r][p]:
                raise NonSymmetric(
                    f"form is not symmetric at ({labels[p]}, {labels[r]})", labels[p], labels[r])
            if p != r and b[p][r] > 0:
                raise OffDiagonalPositive(
                    f"(alpha_{labels[p]}, alpha_{labels[r]}) = {b[p][r]} > 0", labels[p], labels[r])
            if (2 * b[p][r]) % b[p][p]:
                raise DivisibilityFailure(
                    f"2*(alpha_{labels[p]}, alpha_{labels[r]}) not divisible by "
                    f"(alpha_{labels[p]}, alpha_{labels[p]})", labels[p], labels[r])


def validate_datum(bilinear: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> CartanDatum:
    if labels is None:
        labels = [str(k + 1) for k in range(len(bilinear))]
    return CartanDatum(tuple(labels), tuple(tuple(r) for r in bilinear))


def load_datum(path: str | Path) -> CartanDatum:
    data = json.loads(Path(path).read_text())
    return datum_from_json(data)


def datum_from_json(data: Mapping) -> CartanDatum:
    try:
        return validate_datum(data["bilinear"], data["labels"])
    except KeyError as exc:
        raise DatumError(f"datum file lacks field {exc}") from None


def pairing(d: CartanDatum, i: str, x: RootVector | DominantWeight | None = None,
            lam: DominantWeight | None = None) -> int:
    """<h_i, x>.

    ``x`` may be a root vector nu (giving <h_i, nu>) or a dominant weight.
    Passing both a root vector and ``lam`` evaluates <h_i, Lambda - nu>.
    """
    d.check_vertex(i)
    total = 0
    if isinstance(x, DominantWeight):
        for k, v in x.items():
            d.check_vertex(k)
            total += v if k == i else 0
    elif x is not None:
        for k, v in x.items():
            total += v * d.cartan_entry(i, k)
    if lam is not None:
        for k, v in lam.items():
            d.check_vertex(k)
        total = lam.get(i) - total
    return total


def quantum_numbers(d: CartanDatum, i: str, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """([n]_i, [n]_i!)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    di = d.d(i)
    return quantum_integer(n, di), quantum_factorial(n, di)


# standard data used by tests, docs and the CLI
STANDARD_DATA = {
    "A1": (["1"], [[2]]),
    "A2": (["1", "2"], [[2, -1], [-1, 2]]),
    "B2": (["1", "2"], [[2, -2], [-2, 4]]),
    "G2": (["1", "2"], [[2, -3], [-3, 6]]),
    "A1_affine": (["1", "2"], [[2, -2], [-2, 2]]),
    "A3": (["1", "2", "3"], [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]),
}


def standard_datum(name: str) -> CartanDatum:
    labels, b = STANDARD_DATA[name]
    return validate_datum(b, labels)
