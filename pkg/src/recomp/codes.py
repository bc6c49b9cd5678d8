"""Vectorized tables over the labeled-graph code space of small orders.

A labeled graph on n vertices is a code in [0, 2^C(n,2)): bit r holds the
pair of colex rank r.  Relabeling by a permutation is a bit permutation of
codes, so canonical forms, edge counts, parities, 3-homogeneous data and
similar per-graph quantities become numpy gathers over the whole space.
That is what makes exhaustive order-6 sweeps (156 canonical graphs against
all 32768 labeled graphs) run in seconds.

Canonical codes are defined as the minimum over all n! relabelings of the
code, and the up-to-complementation variant additionally minimizes over
the complement's relabelings.  Only n <= 8 is supported; that is all the
atlas and the k-subset profiling ever need.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb, factorial

import numpy as np

from .errors import OrderTooLarge
from .graphs import Graph, pair_rank

CANON_MAX_ORDER = 8

_perm_src: dict[int, np.ndarray] = {}
_canon_tables: dict[int, np.ndarray] = {}
_canon_utc_tables: dict[int, np.ndarray] = {}
_popcount_tables: dict[int, np.ndarray] = {}
_h3_count_tables: dict[int, np.ndarray] = {}
_h3_set_tables: dict[int, np.ndarray] = {}
_clawfree_both_tables: dict[int, np.ndarray] = {}


def n_pairs(n: int) -> int:
    return comb(n, 2)


def full_code(n: int) -> int:
    return (1 << n_pairs(n)) - 1


def perm_bit_sources(n: int) -> np.ndarray:
    """(n!, C(n,2)) array: row p, column d holds the source bit index that
    relabeling by permutation p moves to destination bit d."""
    if n > CANON_MAX_ORDER:
        raise OrderTooLarge(f"canonical codes support n <= {CANON_MAX_ORDER}")
    if n not in _perm_src:
        m = n_pairs(n)
        dest_pairs = [divmod_pair(d) for d in range(m)]
        src = np.empty((factorial(n), m), dtype=np.int64)
        for pi, p in enumerate(permutations(range(n))):
            for d, (a, b) in enumerate(dest_pairs):
                src[pi, d] = pair_rank(p[a], p[b])
        _perm_src[n] = src
    return _perm_src[n]


def divmod_pair(r: int) -> tuple[int, int]:
    j = 1
    while comb(j + 1, 2) <= r:
        j += 1
    return r - comb(j, 2), j


def canonical_code(n: int, code: int) -> int:
    """Minimum code over all relabelings of one graph."""
    src = perm_bit_sources(n)
    m = src.shape[1]
    bits = (code >> np.arange(m, dtype=np.int64)) & 1
    weights = np.int64(1) << np.arange(m, dtype=np.int64)
    return int((bits[src] * weights).sum(axis=1).min())


def canonical_codes_batch(n: int, codes: np.ndarray) -> np.ndarray:
    """Canonical code of every entry of `codes`, chunked to bound memory."""
    src = perm_bit_sources(n)
    m = src.shape[1]
    weights = np.int64(1) << np.arange(m, dtype=np.int64)
    out = np.empty(len(codes), dtype=np.int64)
    chunk = max(1, 30_000_000 // (src.shape[0] * m))
    for lo in range(0, len(codes), chunk):
        part = codes[lo : lo + chunk]
        bits = ((part[:, None] >> np.arange(m, dtype=np.int64)[None, :]) & 1).astype(
            np.int64
        )
        relabeled = (bits[:, src] * weights[None, None, :]).sum(axis=2)
        out[lo : lo + chunk] = relabeled.min(axis=1)
    return out


def all_codes(n: int) -> np.ndarray:
    return np.arange(1 << n_pairs(n), dtype=np.int64)


def canonical_table(n: int) -> np.ndarray:
    """Canonical code of every labeled graph of order n (n <= 6)."""
    if n > 6:
        raise OrderTooLarge("full canonical tables are built only for n <= 6")
    if n not in _canon_tables:
        m = n_pairs(n)
        codes = all_codes(n)
        bits = [(codes >> b) & 1 for b in range(m)]
        best = codes.copy()
        for row in perm_bit_sources(n):
            relabeled = np.zeros_like(codes)
            for d in range(m):
                relabeled |= bits[row[d]] << d
            np.minimum(best, relabeled, out=best)
        _canon_tables[n] = best
    return _canon_tables[n]


def canonical_utc_table(n: int) -> np.ndarray:
    """Canonical code up to complementation of every labeled graph."""
    if n not in _canon_utc_tables:
        t = canonical_table(n)
        comp = np.arange(len(t))[::-1]  # code -> full_code ^ code
        _canon_utc_tables[n] = np.minimum(t, t[comp])
    return _canon_utc_tables[n]


def popcount_table(nbits: int) -> np.ndarray:
    if nbits not in _popcount_tables:
        codes = np.arange(1 << nbits, dtype=np.int64)
        cnt = np.zeros(1 << nbits, dtype=np.int16)
        for b in range(nbits):
            cnt += ((codes >> b) & 1).astype(np.int16)
        _popcount_tables[nbits] = cnt
    return _popcount_tables[nbits]


def edge_count_table(n: int) -> np.ndarray:
    return popcount_table(n_pairs(n))


def h3_count_table(n: int) -> np.ndarray:
    """Number of 3-homogeneous subsets, per code."""
    if n not in _h3_count_tables:
        codes = all_codes(n)
        cnt = np.zeros(len(codes), dtype=np.int16)
        for a, b, c in combinations(range(n), 3):
            s = (
                ((codes >> pair_rank(a, b)) & 1)
                + ((codes >> pair_rank(a, c)) & 1)
                + ((codes >> pair_rank(b, c)) & 1)
            )
            cnt += ((s == 0) | (s == 3)).astype(np.int16)
        _h3_count_tables[n] = cnt
    return _h3_count_tables[n]


def h3_set_table(n: int) -> np.ndarray:
    """Bitmask over triples (lex order) marking the 3-homogeneous ones."""
    if n not in _h3_set_tables:
        codes = all_codes(n)
        mask = np.zeros(len(codes), dtype=np.int64)
        for t, (a, b, c) in enumerate(combinations(range(n), 3)):
            s = (
                ((codes >> pair_rank(a, b)) & 1)
                + ((codes >> pair_rank(a, c)) & 1)
                + ((codes >> pair_rank(b, c)) & 1)
            )
            mask |= (((s == 0) | (s == 3)).astype(np.int64)) << t
        _h3_set_tables[n] = mask
    return _h3_set_tables[n]


def clawfree_both_table(n: int) -> np.ndarray:
    """Per code: the graph and its complement are both claw-free."""
    from .graphs import complement, is_claw_free

    if n not in _clawfree_both_tables:
        out = np.zeros(1 << n_pairs(n), dtype=bool)
        for c in range(1 << n_pairs(n)):
            g = Graph.from_code(n, c)
            out[c] = is_claw_free(g) and is_claw_free(complement(g))
        _clawfree_both_tables[n] = out
    return _clawfree_both_tables[n]


def restriction_bit_sources(subset: tuple[int, ...]) -> list[int]:
    """Global pair ranks feeding each local pair bit of the restriction to
    `subset` (subset sorted ascending, matching induced() relabeling)."""
    k = len(subset)
    return [
        pair_rank(subset[a], subset[b]) for a, b in (divmod_pair(d) for d in range(comb(k, 2)))
    ]


def extract_restriction_codes(codes: np.ndarray, subset: tuple[int, ...]) -> np.ndarray:
    """Restriction code of every entry of `codes` for one vertex subset."""
    out = np.zeros(len(codes), dtype=np.int64)
    for d, src in enumerate(restriction_bit_sources(subset)):
        out |= ((codes >> src) & 1) << d
    return out


def restriction_code(g: Graph, subset: tuple[int, ...]) -> int:
    """Code of the restriction of one graph to a sorted vertex subset."""
    c = 0
    d = 0
    for b in range(1, len(subset)):
        jb = subset[b]
        for a in range(b):
            c |= (g.adj[subset[a]] >> jb & 1) << d
            d += 1
    return c
