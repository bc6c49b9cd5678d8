"""Inclusion matrices, Kneser adjacency matrices, and their rank theorems.

W(t, k) over a v-set has rows indexed by t-subsets and columns by
k-subsets (both in colexicographic order), entry 1 iff the row subset is
contained in the column subset.  Dotting a graph's edge-indicator row
vector with W(2, k) produces the per-k-subset restriction edge counts,
which is what ties these matrices to hypomorphy questions.

Verifiers here compute both sides of each rank statement independently:
the expected rank from the closed formula, the actual rank by exact or
modular elimination on the materialized matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, IndexOutOfRange, KernelTooLarge
from .graphs import Graph, mask_of
from .linalg import ModMatrix, binomial, is_prime, rank_exact, rank_mod, kernel_basis_mod

BUILD_MAX_V = 16
MOD_RANK_MAX_V = 12
KERNEL_DIM_CAP = 20


def subset_rank(s: Iterable[int] | int) -> int:
    """Colex rank of a subset among all subsets of its size."""
    if isinstance(s, int):
        elems = [i for i in range(s.bit_length()) if s >> i & 1]
    else:
        elems = sorted(s)
    return sum(comb(c, i + 1) for i, c in enumerate(elems))


def subset_unrank(r: int, size: int, v: int) -> tuple[int, ...]:
    """Inverse of subset_rank for `size`-subsets of {0..v-1}."""
    if not 0 <= r < comb(v, size):
        raise IndexOutOfRange(f"rank {r} outside [0, C({v},{size}))")
    out = []
    rem = r
    for pos in range(size, 0, -1):
        c = pos - 1
        while comb(c + 1, pos) <= rem:
            c += 1
        out.append(c)
        rem -= comb(c, pos)
    return tuple(reversed(out))


def colex_subsets(v: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {0..v-1} in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, v):
        for rest in colex_subsets(top, k - 1):
            yield rest + (top,)


def _subset_masks(v: int, k: int) -> np.ndarray:
    return np.array([mask_of(s) for s in colex_subsets(v, k)], dtype=np.int64)


@dataclass(frozen=True)
class InclusionMatrix:
    t: int
    k: int
    v: int
    array: np.ndarray  # uint8, C(v,t) x C(v,k)

    def exact(self) -> "ExactMatrix":
        from .linalg import ExactMatrix

        return ExactMatrix([[int(x) for x in row] for row in self.array])

    def exact_rank(self) -> int:
        return rank_exact(self.array)

    def mod(self, p: int) -> ModMatrix:
        return _mod_from_numpy(self.array, p)

    def row_subset(self, i: int) -> tuple[int, ...]:
        return subset_unrank(i, self.t, self.v)

    def col_subset(self, j: int) -> tuple[int, ...]:
        return subset_unrank(j, self.k, self.v)


@dataclass(frozen=True)
class KneserMatrix:
    t: int
    v: int
    array: np.ndarray  # uint8, square of order C(v,t)

    def exact_rank(self) -> int:
        return rank_exact(self.array)


def _mod_from_numpy(arr: np.ndarray, p: int) -> ModMatrix:
    m = object.__new__(ModMatrix)
    if not is_prime(p):
        from .errors import NonPrimeModulus

        raise NonPrimeModulus(f"{p} is not prime")
    m.p = p
    m.nrows, m.ncols = arr.shape
    reduced = (arr.astype(np.int64)) % p
    if p == 2:
        m.rows = [
            int.from_bytes(
                np.packbits(reduced[i].astype(np.uint8), bitorder="little").tobytes(),
                "little",
            )
            for i in range(m.nrows)
        ]
    else:
        m.rows = reduced.tolist()
    return m


def build_w(t: int, k: int, v: int) -> InclusionMatrix:
    """Materialize W(t, k) densely: entry(T, K) = 1 iff T is a subset of K."""
    if not 0 <= t <= k <= v <= BUILD_MAX_V:
        raise DomainError(f"need 0 <= t <= k <= v <= {BUILD_MAX_V}")
    tmasks = _subset_masks(v, t)
    kmasks = _subset_masks(v, k)
    out = np.empty((len(tmasks), len(kmasks)), dtype=np.uint8)
    chunk = max(1, 4_000_000 // max(1, len(tmasks)))
    for lo in range(0, len(kmasks), chunk):
        block = kmasks[lo : lo + chunk]
        out[:, lo : lo + len(block)] = (
            (tmasks[:, None] & block[None, :]) == tmasks[:, None]
        ).astype(np.uint8)
    return InclusionMatrix(t, k, v, out)


def build_kneser(t: int, v: int) -> KneserMatrix:
    """Adjacency matrix of the Kneser graph: t-subsets, adjacent iff disjoint."""
    if not 0 <= t <= v <= BUILD_MAX_V:
        raise DomainError(f"need 0 <= t <= v <= {BUILD_MAX_V}")
    tmasks = _subset_masks(v, t)
    arr = ((tmasks[:, None] & tmasks[None, :]) == 0).astype(np.uint8)
    return KneserMatrix(t, v, arr)


def verify_gottlieb_kantor(t: int, k: int, v: int) -> bool:
    """Full row rank of W(t, k) over the rationals for t <= min(k, v-k)."""
    if t > min(k, v - k):
        raise DomainError(f"need t <= min(k, v-k), got t={t}, k={k}, v={v}")
    return build_w(t, k, v).exact_rank() == comb(v, t)


def verify_kneser_nonsingular(t: int, v: int) -> bool:
    """The Kneser adjacency matrix is nonsingular for t <= v/2."""
    if 2 * t > v:
        raise DomainError(f"need t <= v/2, got t={t}, v={v}")
    return build_kneser(t, v).exact_rank() == comb(v, t)


def wilson_rank_expected(t: int, k: int, v: int, p: int) -> int:
    """Rank of W(t, k) mod p from the closed formula: sum of
    C(v,i) - C(v,i-1) over the i in 0..t with p not dividing C(k-i, t-i)."""
    if t > min(k, v - k):
        raise DomainError(f"need t <= min(k, v-k), got t={t}, k={k}, v={v}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    total = 0
    for i in range(t + 1):
        if comb(k - i, t - i) % p != 0:
            total += binomial(v, i) - binomial(v, i - 1)
    return total


def verify_wilson(t: int, k: int, v: int, p: int) -> bool:
    """Modular rank of the materialized W(t, k) matches the formula."""
    if v > MOD_RANK_MAX_V:
        raise DomainError(f"modular rank checks capped at v <= {MOD_RANK_MAX_V}")
    expected = wilson_rank_expected(t, k, v, p)
    return rank_mod(build_w(t, k, v).mod(p)) == expected


def kernel_graphs_mod2(k: int, v: int) -> list[Graph]:
    """All graphs whose edge-indicator vector lies in the kernel of the
    transpose of W(2, k) over GF(2), sorted by code."""
    if not (2 <= k <= v - 2 and v <= MOD_RANK_MAX_V):
        raise DomainError(f"need 2 <= k <= v-2 and v <= {MOD_RANK_MAX_V}")
    wt = np.ascontiguousarray(build_w(2, k, v).array.T)
    basis = kernel_basis_mod(_mod_from_numpy(wt, 2))
    if len(basis) > KERNEL_DIM_CAP:
        raise KernelTooLarge(f"kernel dimension {len(basis)} exceeds {KERNEL_DIM_CAP}")
    basis_codes = [sum(bit << c for c, bit in enumerate(vec)) for vec in basis]
    codes = [0]
    for b in basis_codes:
        codes += [c ^ b for c in codes]
    return [Graph.from_code(v, c) for c in sorted(codes)]


def restriction_edge_counts_via_matrix(g: Graph, k: int) -> list[int]:
    """Per-k-subset restriction edge counts computed as the product of the
    graph's edge row vector with W(2, k), colex column order."""
    w = build_w(2, k, g.n)
    edge_row = np.array(
        [g.has_edge(*pair) for pair in colex_subsets(g.n, 2)], dtype=np.int64
    )
    return (edge_row @ w.array.astype(np.int64)).tolist()


def rank_report(t: int, k: int, v: int, p: int | None = None) -> dict:
    """One verification row: expected vs computed rank, rational or mod p."""
    if p is None:
        expected = comb(v, t)
        computed = build_w(t, k, v).exact_rank()
        field = "Q"
    else:
        expected = wilson_rank_expected(t, k, v, p)
        computed = rank_mod(build_w(t, k, v).mod(p))
        field = p
    return {
        "t": t,
        "k": k,
        "v": v,
        "field": field,
        "expected_rank": expected,
        "computed_rank": computed,
        "pass": expected == computed,
    }
