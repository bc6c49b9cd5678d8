"""Pairwise decision procedures and executable theorem verifiers.

Two graphs on the same vertex set are k-hypomorphic when every
k-element restriction pair is isomorphic, k-hypomorphic up to
complementation when every restriction pair is isomorphic up to
complementation, and so on down a ladder of weaker per-subset
conditions (equal edge counts up to complementation, equal parity,
equal 3-homogeneous data).

Subset lanes: restrictions of size k <= 6 compare canonical-code table
entries (O(1) per subset after a one-time table build); larger
restrictions run a pairwise backtracking isomorphism per subset with a
memo on the restriction code pair.  Subsets are always scanned in
colexicographic order, so witnesses are deterministic.

Every theorem verifier computes both sides of its statement
independently and reports whether the claimed implication or
equivalence held on the given pair; a failed equivalence is either an
implementation bug or a genuine falsification, never assumed away.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from . import codes as codetables
from .errors import DomainError, HypothesisNotMet, KTooLarge, OrderMismatch
from .graphs import (
    Graph,
    boolean_sum,
    complement,
    invariants,
    is_claw_free,
    mask_of,
    subgraph_edge_count,
)
from .incidence import colex_subsets
from .isomorphism import (
    ISO_MAX_ORDER,
    find_isomorphism,
    isomorphic_up_to_complementation,
)

TABLE_MAX_K = 6

_iso_memo: dict[tuple[int, int, int], bool] = {}
_iso_utc_memo: dict[tuple[int, int, int], bool] = {}


@dataclass(frozen=True)
class HypoVerdict:
    """Outcome of a per-subset condition; witness is a failing subset."""

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness_subset": list(self.witness) if self.witness else None}


@dataclass(frozen=True)
class VerifierResult:
    """Outcome of a theorem check with the independently computed sides."""

    ok: bool
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PairProfile:
    """Per-k-subset record for a pair, colex subset order: restriction
    edge counts, canonical codes up to complementation, h3 counts."""

    k: int
    e_g: tuple[int, ...]
    e_h: tuple[int, ...]
    utc_code_g: tuple[int, ...]
    utc_code_h: tuple[int, ...]
    h3_g: tuple[int, ...]
    h3_h: tuple[int, ...]


def _check_pair(g: Graph, h: Graph, k: int) -> None:
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    if not 1 <= k <= g.n:
        raise DomainError(f"need 1 <= k <= {g.n}, got k={k}")


def _subsets_with_masks(v: int, k: int) -> list[tuple[tuple[int, ...], int]]:
    return [(s, mask_of(s)) for s in colex_subsets(v, k)]


def _pair_iso(k: int, cg: int, ch: int) -> bool:
    if cg == ch:
        return True
    key = (k, cg, ch) if cg <= ch else (k, ch, cg)
    if key not in _iso_memo:
        a = Graph.from_code(k, key[1])
        b = Graph.from_code(k, key[2])
        _iso_memo[key] = find_isomorphism(a, b) is not None
    return _iso_memo[key]


def _pair_iso_utc(k: int, cg: int, ch: int) -> bool:
    full = codetables.full_code(k)
    if ch in (cg, full ^ cg):
        return True
    key = (k, min(cg, full ^ cg), min(ch, full ^ ch))
    if key not in _iso_utc_memo:
        a = Graph.from_code(k, key[1])
        b = Graph.from_code(k, key[2])
        _iso_utc_memo[key] = bool(isomorphic_up_to_complementation(a, b))
    return _iso_utc_memo[key]


def k_hypomorphic(g: Graph, h: Graph, k: int) -> HypoVerdict:
    """Every k-element restriction pair isomorphic."""
    _check_pair(g, h, k)
    if k > ISO_MAX_ORDER:
        raise KTooLarge(f"restriction isomorphism supports k <= {ISO_MAX_ORDER}")
    if k <= TABLE_MAX_K:
        table = codetables.canonical_table(k)
        for s, _ in _subsets_with_masks(g.n, k):
            if table[codetables.restriction_code(g, s)] != table[codetables.restriction_code(h, s)]:
                return HypoVerdict(False, s)
        return HypoVerdict(True)
    for s, m in _subsets_with_masks(g.n, k):
        if subgraph_edge_count(g, m) != subgraph_edge_count(h, m):
            return HypoVerdict(False, s)
        if not _pair_iso(k, codetables.restriction_code(g, s), codetables.restriction_code(h, s)):
            return HypoVerdict(False, s)
    return HypoVerdict(True)


def k_hypomorphic_utc(g: Graph, h: Graph, k: int) -> HypoVerdict:
    """Every k-element restriction pair isomorphic up to complementation."""
    _check_pair(g, h, k)
    if k > ISO_MAX_ORDER:
        raise KTooLarge(f"restriction isomorphism supports k <= {ISO_MAX_ORDER}")
    if k <= TABLE_MAX_K:
        table = codetables.canonical_utc_table(k)
        for s, _ in _subsets_with_masks(g.n, k):
            if table[codetables.restriction_code(g, s)] != table[codetables.restriction_code(h, s)]:
                return HypoVerdict(False, s)
        return HypoVerdict(True)
    kk = comb(k, 2)
    for s, m in _subsets_with_masks(g.n, k):
        eg = subgraph_edge_count(g, m)
        if subgraph_edge_count(h, m) not in (eg, kk - eg):
            return HypoVerdict(False, s)
        if not _pair_iso_utc(k, codetables.restriction_code(g, s), codetables.restriction_code(h, s)):
            return HypoVerdict(False, s)
    return HypoVerdict(True)


def same_edge_counts_utc(g: Graph, h: Graph, k: int) -> HypoVerdict:
    """e(h|K) equals e(g|K) or C(k,2) - e(g|K) for every K."""
    _check_pair(g, h, k)
    kk = comb(k, 2)
    for s, m in _subsets_with_masks(g.n, k):
        eg = subgraph_edge_count(g, m)
        if subgraph_edge_count(h, m) not in (eg, kk - eg):
            return HypoVerdict(False, s)
    return HypoVerdict(True)


def same_parity(g: Graph, h: Graph, k: int) -> HypoVerdict:
    """e(g|K) and e(h|K) share parity for every K."""
    _check_pair(g, h, k)
    for s, m in _subsets_with_masks(g.n, k):
        if (subgraph_edge_count(g, m) - subgraph_edge_count(h, m)) % 2:
            return HypoVerdict(False, s)
    return HypoVerdict(True)


def same_parity_utc(g: Graph, h: Graph, k: int) -> HypoVerdict:
    """e(g|K) shares parity with e(h|K) or with C(k,2) - e(h|K)."""
    _check_pair(g, h, k)
    kk = comb(k, 2)
    for s, m in _subsets_with_masks(g.n, k):
        eg = subgraph_edge_count(g, m)
        eh = subgraph_edge_count(h, m)
        if (eg - eh) % 2 and (eg - (kk - eh)) % 2:
            return HypoVerdict(False, s)
    return HypoVerdict(True)


def _is_homogeneous(g: Graph, mask: int) -> bool:
    e = subgraph_edge_count(g, mask)
    return e == 0 or e == 3


def same_3_homogeneous(g: Graph, h: Graph) -> HypoVerdict:
    """The two graphs have identical sets of 3-homogeneous subsets."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    for trip in combinations(range(g.n), 3):
        m = mask_of(trip)
        if _is_homogeneous(g, m) != _is_homogeneous(h, m):
            return HypoVerdict(False, trip)
    return HypoVerdict(True)


def restriction_h3_count(g: Graph, subset: tuple[int, ...]) -> int:
    return sum(1 for t in combinations(subset, 3) if _is_homogeneous(g, mask_of(t)))


def same_h3_counts(g: Graph, h: Graph, k: int) -> HypoVerdict:
    """h3(g|K) = h3(h|K) for every k-subset K (counts, not sets)."""
    _check_pair(g, h, k)
    if k <= TABLE_MAX_K:
        table = codetables.h3_count_table(k)
        for s, _ in _subsets_with_masks(g.n, k):
            if table[codetables.restriction_code(g, s)] != table[codetables.restriction_code(h, s)]:
                return HypoVerdict(False, s)
        return HypoVerdict(True)
    for s, _ in _subsets_with_masks(g.n, k):
        if restriction_h3_count(g, s) != restriction_h3_count(h, s):
            return HypoVerdict(False, s)
    return HypoVerdict(True)


def _restriction_a_counts(g: Graph, subset: tuple[int, ...], mask: int) -> tuple[int, int, int]:
    """(a0, a1, a2) of the restriction, from edge counts and degrees."""
    k = len(subset)
    e = subgraph_edge_count(g, mask)
    ebar = comb(k, 2) - e
    a1 = 0
    for x in subset:
        d = (g.adj[x] & mask).bit_count()
        a1 += d * (k - 1 - d)
    a2 = e * ebar
    return a2 - a1, a1, a2


def same_a0_counts(g: Graph, h: Graph, k: int) -> HypoVerdict:
    """a0(g|K) = a0(h|K) for every k-subset K."""
    _check_pair(g, h, k)
    for s, m in _subsets_with_masks(g.n, k):
        if _restriction_a_counts(g, s, m)[0] != _restriction_a_counts(h, s, m)[0]:
            return HypoVerdict(False, s)
    return HypoVerdict(True)


def equal_up_to_complementation(g: Graph, h: Graph) -> bool:
    """h equals g or the complement of g, as labeled edge sets."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    return h.adj == g.adj or h.adj == complement(g).adj


def pair_profile(g: Graph, h: Graph, k: int) -> PairProfile:
    """Full per-subset census for one pair (k <= 8 for canonical codes)."""
    _check_pair(g, h, k)
    if k > codetables.CANON_MAX_ORDER:
        raise KTooLarge(f"profiles carry canonical codes, k <= {codetables.CANON_MAX_ORDER}")
    e_g, e_h, cg, ch, h3g, h3h = [], [], [], [], [], []
    full = codetables.full_code(k)
    for s, m in _subsets_with_masks(g.n, k):
        rg = codetables.restriction_code(g, s)
        rh = codetables.restriction_code(h, s)
        e_g.append(subgraph_edge_count(g, m))
        e_h.append(subgraph_edge_count(h, m))
        cg.append(min(codetables.canonical_code(k, rg), codetables.canonical_code(k, full ^ rg)))
        ch.append(min(codetables.canonical_code(k, rh), codetables.canonical_code(k, full ^ rh)))
        h3g.append(restriction_h3_count(g, s))
        h3h.append(restriction_h3_count(h, s))
    return PairProfile(k, tuple(e_g), tuple(e_h), tuple(cg), tuple(ch), tuple(h3g), tuple(h3h))


# -- counting-identity and theorem verifiers -----------------------------


def verify_mixed_pair_identities(g: Graph, k: int) -> VerifierResult:
    """Subset-averaging identities for the {edge, non-edge} pair counts.

    a) C(v-4+i, k-4+i) * a_i(G) = sum over k-subsets of a_i(G|K), for
       i in {0, 1} with 4-i <= k <= v.
    b) a0(G) and a1(G) recovered from sum over k-subsets of
       e(G|K)*e_bar(G|K) with the Cramer coefficients, 3 <= k <= v-1.

    The left sides come from direct pair enumeration on G, the right
    sides from subset summation; both exact.
    """
    v = g.n
    applicable_a = [i for i in (0, 1) if 4 - i <= k <= v]
    applicable_b = 3 <= k <= v - 1
    if not applicable_a and not applicable_b:
        raise DomainError(f"no identity applies for k={k}, v={v}")
    bundle = invariants(g)
    left = {0: bundle.a0, 1: bundle.a1}
    checks: dict[str, bool] = {}

    subs = _subsets_with_masks(v, k)
    if applicable_a:
        sums = {0: 0, 1: 0}
        for s, m in subs:
            a0, a1, _ = _restriction_a_counts(g, s, m)
            sums[0] += a0
            sums[1] += a1
        for i in applicable_a:
            checks[f"a{i}_subset_sum"] = comb(v - 4 + i, k - 4 + i) * left[i] == sums[i]

    if applicable_b:
        prod_sum = 0
        for s, m in subs:
            e = subgraph_edge_count(g, m)
            prod_sum += e * (comb(k, 2) - e)
        ee = bundle.e * bundle.e_bar
        coeff = Fraction(1, comb(v - 4, k - 3))
        rhs_a0 = Fraction(v - 3, v - k) * ee - coeff * prod_sum
        rhs_a1 = coeff * prod_sum - Fraction(k - 3, v - k) * ee
        checks["a0_cramer"] = Fraction(left[0]) == rhs_a0
        checks["a1_cramer"] = Fraction(left[1]) == rhs_a1

    return VerifierResult(all(checks.values()), {"v": v, "k": k, "checks": checks})


def verify_edge_product_criterion(g: Graph, h: Graph) -> VerifierResult:
    """e(h) in {e(g), e_bar(g)} holds iff e(g)e_bar(g) = e(h)e_bar(h);
    both directions evaluated on the given pair."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    total = comb(g.n, 2)
    eg, eh = g.edge_count, h.edge_count
    lhs = eh in (eg, total - eg)
    rhs = eg * (total - eg) == eh * (total - eh)
    return VerifierResult(lhs == rhs, {"edge_match_utc": lhs, "product_match": rhs})


def verify_downward_hypomorphy(g: Graph, h: Graph, k: int, t: int) -> VerifierResult:
    """k-hypomorphy up to complementation transfers down to t-subsets.

    Requires t <= min(k, v-k), the bound the inclusion-matrix rank
    argument needs (a looser printed bound exists; this one is enforced).
    """
    v = g.n
    if not 1 <= t <= min(k, v - k):
        raise DomainError(f"need 1 <= t <= min(k, v-k) = {min(k, v - k)}, got t={t}")
    hyp = k_hypomorphic_utc(g, h, k)
    if not hyp:
        raise HypothesisNotMet(f"pair is not {k}-hypomorphic up to complementation")
    concl = k_hypomorphic_utc(g, h, t)
    return VerifierResult(concl.holds, {"k": k, "t": t, "witness": concl.witness})


def verify_theorem_k0mod4(g: Graph, h: Graph, k: int) -> VerifierResult:
    """For k = 0 (mod 4): equal restriction parities at k hold iff the
    graphs are equal up to complementation."""
    v = g.n
    if not (4 <= k <= v - 2 and k % 4 == 0):
        raise DomainError(f"need 4 <= k <= v-2 with k = 0 (mod 4), got k={k}, v={v}")
    parity = same_parity(g, h, k)
    equal = equal_up_to_complementation(g, h)
    return VerifierResult(
        parity.holds == equal,
        {"parity_holds": parity.holds, "equal_utc": equal, "witness": parity.witness},
    )


def verify_theorem_k1mod4(g: Graph, h: Graph, k: int) -> VerifierResult:
    """For k = 1 (mod 4): equal parities at k plus identical
    3-homogeneous sets hold iff equal up to complementation."""
    v = g.n
    if not (5 <= k <= v - 2 and k % 4 == 1):
        raise DomainError(f"need 5 <= k <= v-2 with k = 1 (mod 4), got k={k}, v={v}")
    parity = same_parity(g, h, k)
    homog = same_3_homogeneous(g, h)
    left = parity.holds and homog.holds
    equal = equal_up_to_complementation(g, h)
    return VerifierResult(
        left == equal,
        {
            "parity_holds": parity.holds,
            "same_3_homogeneous": homog.holds,
            "equal_utc": equal,
            "witness": parity.witness or homog.witness,
        },
    )


def verify_boolean_sum_clawfree(g: Graph, h: Graph) -> VerifierResult:
    """Pairs with the same 3-homogeneous sets have a claw-free boolean
    sum with claw-free complement."""
    hyp = same_3_homogeneous(g, h)
    if not hyp:
        raise HypothesisNotMet(f"3-homogeneous sets differ, witness {hyp.witness}")
    u = boolean_sum(g, h)
    cf_u = is_claw_free(u)
    cf_uc = is_claw_free(complement(u))
    return VerifierResult(cf_u and cf_uc, {"u_claw_free": cf_u, "u_complement_claw_free": cf_uc})


def dense_subset_edge_bound(k: int) -> Fraction:
    """min((k^2 + 7k - 12)/4, k(k-1)/2), the density hypothesis bound."""
    return min(Fraction(k * k + 7 * k - 12, 4), Fraction(k * (k - 1), 2))


def verify_dense_subset_equality(g: Graph, h: Graph, k: int) -> VerifierResult:
    """Equal edge counts up to complementation at k, plus one k-subset of
    density at least the bound, force equality up to complementation.
    The statement excludes k = 7; called at k = 7 the check still runs
    but carries no claim (applies = False)."""
    v = g.n
    if k < 4 or k > v:
        raise DomainError(f"need 4 <= k <= v, got k={k}, v={v}")
    ell = dense_subset_edge_bound(k)
    hyp1 = same_edge_counts_utc(g, h, k)
    if not hyp1:
        raise HypothesisNotMet(f"edge counts differ up to complementation at {hyp1.witness}")
    kk = comb(k, 2)
    dense = any(
        max(e, kk - e) >= ell
        for e in (subgraph_edge_count(g, m) for _, m in _subsets_with_masks(v, k))
    )
    if not dense:
        raise HypothesisNotMet(f"no k-subset reaches {ell} edges in g or its complement")
    conclusion = equal_up_to_complementation(g, h)
    applies = k != 7
    return VerifierResult(
        conclusion or not applies,
        {"applies": applies, "conclusion": conclusion, "edge_bound": float(ell)},
    )


def verify_profile_implications(g: Graph, h: Graph, k: int, k_prime: int) -> VerifierResult:
    """Implication chain between per-subset profile conditions:

    (i)   equal edge counts utc and equal h3 counts at k;
    (ii)  equal edge counts utc at k and at k_prime;
    (iii) equal edge counts utc and equal h3 counts at every l, k <= l <= v.

    Checks (ii) -> (i) and (i) -> (iii) on the pair.
    """
    v = g.n
    if not (4 <= k <= v and 3 <= k_prime < k):
        raise DomainError(f"need 4 <= k <= v and 3 <= k' < k, got k={k}, k'={k_prime}")
    edges_k = same_edge_counts_utc(g, h, k).holds
    cond_i = edges_k and same_h3_counts(g, h, k).holds
    cond_ii = edges_k and same_edge_counts_utc(g, h, k_prime).holds
    cond_iii = all(
        same_edge_counts_utc(g, h, l).holds and same_h3_counts(g, h, l).holds
        for l in range(k, v + 1)
    )
    ok = ((not cond_ii) or cond_i) and ((not cond_i) or cond_iii)
    return VerifierResult(ok, {"i": cond_i, "ii": cond_ii, "iii": cond_iii})


def verify_complementary_size_transfer(g: Graph, h: Graph, k: int, mode: str) -> VerifierResult:
    """Per-subset equality of h3 counts (mode 'h3', 3 <= k <= v-3) or a0
    counts (mode 'a0', 4 <= k <= v-4) at size k transfers to size v-k."""
    v = g.n
    if mode == "h3":
        if not 3 <= k <= v - 3:
            raise DomainError(f"h3 mode needs 3 <= k <= v-3, got k={k}, v={v}")
        hyp, concl_fn = same_h3_counts(g, h, k), same_h3_counts
    elif mode == "a0":
        if not 4 <= k <= v - 4:
            raise DomainError(f"a0 mode needs 4 <= k <= v-4, got k={k}, v={v}")
        hyp, concl_fn = same_a0_counts(g, h, k), same_a0_counts
    else:
        raise DomainError(f"mode must be 'h3' or 'a0', got {mode!r}")
    if not hyp:
        raise HypothesisNotMet(f"{mode} counts differ at {hyp.witness}")
    concl = concl_fn(g, h, v - k)
    return VerifierResult(concl.holds, {"mode": mode, "k": k, "witness": concl.witness})


def verify_order4_classification() -> VerifierResult:
    """On at most 4 vertices the pair (e * e_bar, h3) separates graphs
    exactly up to isomorphism and complementation."""
    by_utc: dict[int, set[tuple[int, int]]] = {}
    pair_to_utc: dict[tuple[int, int], set[int]] = {}
    iso_codes = set()
    utc_table = codetables.canonical_utc_table(4)
    iso_table = codetables.canonical_table(4)
    ee = codetables.edge_count_table(4)
    h3 = codetables.h3_count_table(4)
    total = comb(4, 2)
    for c in range(1 << total):
        iso_codes.add(int(iso_table[c]))
        key = (int(ee[c]) * (total - int(ee[c])), int(h3[c]))
        by_utc.setdefault(int(utc_table[c]), set()).add(key)
        pair_to_utc.setdefault(key, set()).add(int(utc_table[c]))
    constant_on_classes = all(len(v) == 1 for v in by_utc.values())
    separating = all(len(v) == 1 for v in pair_to_utc.values())
    return VerifierResult(
        constant_on_classes and separating and len(by_utc) == 6 and len(iso_codes) == 11,
        {
            "iso_classes": len(iso_codes),
            "utc_classes": len(by_utc),
            "distinct_pairs": len(pair_to_utc),
        },
    )


def equality_threshold(v: int) -> int:
    """Piecewise threshold: 4l for v in {4l+2, 4l+3}, 4l-3 for v in
    {4l, 4l+1}.  Largest k proven to put (v, k) in the equality set."""
    if v < 4:
        raise DomainError(f"threshold defined for v >= 4, got {v}")
    l = v // 4
    return 4 * l if v % 4 in (2, 3) else 4 * l - 3


def verify_principal_theorem(g: Graph, h: Graph, k: int) -> VerifierResult:
    """For v >= 6 and 4 <= k <= threshold(v), four conditions are
    equivalent: (i) k-hypomorphic utc; (ii) equal edge counts utc and
    equal h3 counts at k; (iii) equal edge counts utc at k and at every
    k' with 3 <= k' < k; (iv) equal up to complementation.

    (iii) is checked over all k'; the per-k' bits are reported so the
    weakest single-k' variant can be read off.
    """
    v = g.n
    if v < 6 or not 4 <= k <= equality_threshold(v):
        raise DomainError(f"need v >= 6 and 4 <= k <= {equality_threshold(v) if v >= 4 else '?'}")
    cond_i = k_hypomorphic_utc(g, h, k).holds
    edges_k = same_edge_counts_utc(g, h, k).holds
    cond_ii = edges_k and same_h3_counts(g, h, k).holds
    by_kprime = {
        kp: same_edge_counts_utc(g, h, kp).holds for kp in range(3, k)
    }
    cond_iii = edges_k and all(by_kprime.values())
    cond_iv = equal_up_to_complementation(g, h)
    ok = cond_i == cond_ii == cond_iii == cond_iv
    return VerifierResult(
        ok,
        {
            "i_hypomorphic_utc": cond_i,
            "ii_edges_h3": cond_ii,
            "iii_edges_all_kprime": cond_iii,
            "iii_by_kprime": {str(kp): val for kp, val in by_kprime.items()},
            "iii_weakest_single_kprime": edges_k and any(by_kprime.values()),
            "iv_equal_utc": cond_iv,
        },
    )
