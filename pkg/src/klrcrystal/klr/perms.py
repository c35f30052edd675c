"""Permutations of {1..m}, canonical reduced words, and braid-move paths.

A permutation is a tuple ``w`` of 0-based images, ``w[k] = w(k)``.  A reduced
word ``(r_1, ..., r_t)`` (1-based simple transpositions) denotes the product
``s_{r_1} ... s_{r_t}``.  Sequences are acted on by
``w(i)_k = i_{w^{-1}(k)}``.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations as _itperms


def identity(m: int) -> tuple[int, ...]:
    return tuple(range(m))


def compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """u∘v."""
    return tuple(u[v[k]] for k in range(len(v)))


def inverse(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for k, x in enumerate(w):
        inv[x] = k
    return tuple(inv)


def simple(m: int, r: int) -> tuple[int, ...]:
    w = list(range(m))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def length(w: tuple[int, ...]) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


@lru_cache(maxsize=None)
def from_word(m: int, word: tuple[int, ...]) -> tuple[int, ...]:
    w = list(range(m))
    for r in word:
        w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def left_mul_simple(r: int, w: tuple[int, ...]) -> tuple[int, ...]:
    """s_r∘w: swaps the values r-1 and r (0-based) in the image tuple."""
    a, b = r - 1, r
    return tuple(b if x == a else a if x == b else x for x in w)


def is_left_descent(r: int, w: tuple[int, ...]) -> bool:
    """True when l(s_r w) < l(w)."""
    return w.index(r - 1) > w.index(r)


@lru_cache(maxsize=None)
def canonical_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least reduced word of ``w``.

    Greedy on the smallest left descent; suffixes of canonical words are
    canonical.
    """
    m = len(w)
    for r in range(1, m):
        if is_left_descent(r, w):
            return (r,) + canonical_word(left_mul_simple(r, w))
    return ()


def act(w: tuple[int, ...], seq: tuple) -> tuple:
    """w(i)_k = i_{w^{-1}(k)}."""
    inv = inverse(w)
    return tuple(seq[inv[k]] for k in range(len(seq)))


def act_simple(r: int, seq: tuple) -> tuple:
    s = list(seq)
    s[r - 1], s[r] = s[r], s[r - 1]
    return tuple(s)


def act_word(word: tuple[int, ...], seq: tuple) -> tuple:
    """Sequence reached by applying ψ_word to 1_seq (rightmost letter first)."""
    for r in reversed(word):
        seq = act_simple(r, seq)
    return seq


def all_perms(m: int):
    return [tuple(p) for p in _itperms(range(m))]


def longest(m: int) -> tuple[int, ...]:
    return tuple(range(m - 1, -1, -1))


@lru_cache(maxsize=None)
def move_path(source: tuple[int, ...], target: tuple[int, ...]) -> tuple:
    """Braid/commutation moves turning reduced word ``source`` into ``target``.

    Returns a tuple of ``(position, kind)`` steps where kind is ``"comm"`` or
    ``"braid"``; each step is applied to the word produced by the previous
    steps.  Both words must be reduced words of the same permutation.
    """
    if source == target:
        return ()
    prev: dict[tuple, tuple] = {source: None}
    queue = deque([source])
    while queue:
        word = queue.popleft()
        for nxt, step in _neighbours(word):
            if nxt in prev:
                continue
            prev[nxt] = (word, step)
            if nxt == target:
                steps = []
                cur = nxt
                while prev[cur] is not None:
                    cur, st = prev[cur]
                    steps.append(st)
                return tuple(reversed(steps))
            queue.append(nxt)
    raise ValueError(f"{source} and {target} are not reduced words of the same permutation")


def _neighbours(word: tuple[int, ...]):
    n = len(word)
    for p in range(n - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) > 1:
            yield word[:p] + (b, a) + word[p + 2:], (p, "comm")
    for p in range(n - 2):
        a, b, c = word[p], word[p + 1], word[p + 2]
        if a == c and abs(a - b) == 1:
            yield word[:p] + (b, a, b) + word[p + 3:], (p, "braid")
