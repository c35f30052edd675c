"""Incremental exact row reduction over Q on sparse vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class EchelonBasis:
    """Fully reduced echelon basis of a growing subspace.

    Vectors are dicts ``{column key: coefficient}``.  Each stored row has a
    pivot column with coefficient 1 that no other row uses.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        for piv in [k for k in v if k in self.rows]:
            c = v.get(piv)
            if not c:
                continue
            for k, rc in self.rows[piv].items():
                nv = v.get(k, 0) - c * rc
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True if the rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        c = v[piv]
        v = {k: x / c for k, x in v.items()}
        for p, row in self.rows.items():
            rc = row.get(piv)
            if rc:
                for k, x in v.items():
                    nv = row.get(k, 0) - rc * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[piv] = v
        return True

    def pivots(self) -> set:
        return set(self.rows)
