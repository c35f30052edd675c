"""Graded dimensions of idempotent pieces 1_dst R(nu) 1_src."""

from __future__ import annotations

from ..cartan import CartanDatum, RootVector
from . import perms
from .algebra import KlrAlgebra
from .linalg import EchelonBasis


def graded_dim_series(d: CartanDatum, nu: RootVector, src, dst, max_deg: int) -> dict[int, int]:
    """Closed-form PBW count, truncated at ``max_deg``.

    Sums q^{deg psi_w 1_src} over permutations taking src to dst, times
    prod_r 1/(1 - q^{(alpha_{i_r}, alpha_{i_r})}).
    """
    src, dst = tuple(src), tuple(dst)
    if RootVector.from_word(src) != nu or RootVector.from_word(dst) != nu:
        raise ValueError("src and dst must be sequences of content nu")
    m = len(src)
    # series of the polynomial part
    dot_series = {0: 1}
    for lab in src:
        step = d.b(lab, lab)
        nxt: dict[int, int] = {}
        for e, c in dot_series.items():
            k = 0
            while e + k * step <= max_deg + _max_neg(d, src):
                nxt[e + k * step] = nxt.get(e + k * step, 0) + c
                k += 1
        dot_series = nxt
    out: dict[int, int] = {}
    for w in perms.all_perms(m):
        if perms.act(w, src) != dst:
            continue
        base = _perm_degree(d, perms.canonical_word(w), src)
        for e, c in dot_series.items():
            if base + e <= max_deg:
                out[base + e] = out.get(base + e, 0) + c
    return dict(sorted(out.items()))


def _max_neg(d: CartanDatum, src) -> int:
    m = len(src)
    worst = max(d.b(a, a) for a in src) if src else 0
    return worst * m * (m - 1) // 2


def _perm_degree(d: CartanDatum, word, seq) -> int:
    deg = 0
    for r in reversed(word):
        deg -= d.b(seq[r - 1], seq[r])
        seq = perms.act_simple(r, seq)
    return deg


def engine_graded_dims(algebra: KlrAlgebra, src, dst, max_deg: int) -> dict[int, int]:
    """Graded dimensions of 1_dst R 1_src as spanned by products of generators.

    Starts from 1_src and closes under left multiplication by every x_t and
    psi_r inside a degree window wide enough to allow detours through higher
    degrees, keeping an echelon basis per (idempotent, degree).  Reports the
    ranks for 1_dst through ``max_deg``.
    """
    src, dst = tuple(src), tuple(dst)
    m = algebra.m
    d = algebra.datum
    slack = _max_neg(d, src)
    top_deg = max_deg + slack
    spaces: dict[tuple, EchelonBasis] = {}
    start = ((), (0,) * m, src)
    frontier = [(src, 0, {start: 1})]
    spaces[(src, 0)] = EchelonBasis()
    spaces[(src, 0)].add({start: 1})
    gens = [("x", t) for t in range(1, m + 1)] + [("psi", r) for r in range(1, m)]
    while frontier:
        nxt = []
        for _seq, _deg, vec in frontier:
            for g in gens:
                out = algebra.apply_gens([g], vec)
                if not out:
                    continue
                k0 = next(iter(out))
                tseq = algebra.top(k0)
                tdeg = algebra.degree(k0)
                if tdeg > top_deg:
                    continue
                space = spaces.setdefault((tseq, tdeg), EchelonBasis())
                if space.add(out):
                    nxt.append((tseq, tdeg, out))
        frontier = nxt
    res: dict[int, int] = {}
    for (seq, deg), space in spaces.items():
        if seq == dst and deg <= max_deg and space.rank:
            res[deg] = space.rank
    return dict(sorted(res.items()))
