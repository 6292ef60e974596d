"""Exhaustive enumeration of Williamson quadruples of a given order.

Strategy: enumerate symmetric candidates for the first three slots, then
scan symmetric candidates for the fourth slot against the PAF deficit the
first three leave behind (a candidate completes the quadruple iff its PAF
vector cancels theirs at every shift in 1..n//2).  Three optional filters
prune fully assigned candidates before the PAF test, in fixed order:

  rowsum   - the four row sums must have squares summing to 4n;
  product  - the parity-appropriate entrywise product condition;
  mod4     - the four 2-compressions must sum to 0 mod 4 entrywise.

Filters are necessary conditions only, so enabling any combination never
changes the result set; the report records how much each one pruned.
Candidates are accounted exactly: examined + pruned equals the number of
symmetric quadruples.

The candidate space is statically partitioned into first-slot index blocks
processed by independent workers; per-block results are merged, counters
summed, and the output sorted by text form, so the result is identical for
any worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass, field

from .seqcore import (
    PmOneSequence,
    WilliamsonQuadruple,
    parse_quadruple,
    quadruple_to_text,
    sequence_to_text,
)
from .theorems import product_condition

# Exhaustive-mode order cap; 2^(n//2 + 1) symmetric sequences per slot keeps
# the full product tractable on a desktop up to here.  The CLI can override
# it through WKIT_MAX_N.
ORDER_CAP = 14


@dataclass(frozen=True)
class SearchConfig:
    n: int
    use_product_filter: bool = True
    use_mod4_filter: bool = True
    use_rowsum_prefilter: bool = True
    canonical_only: bool = False
    worker_count: int = 1


@dataclass
class SearchReport:
    raw_count: int = 0
    canonical_count: int = 0
    candidates_examined: int = 0
    candidates_pruned_by_filter: dict[str, int] = field(
        default_factory=lambda: {"rowsum": 0, "product": 0, "mod4": 0}
    )
    elapsed: float = 0.0


def enumerate_symmetric(n: int):
    """Yield every symmetric ±1 sequence of length n exactly once.

    Free entries are the indices 0..n//2; the rest mirror them.  Order is
    lexicographic over the free entries with +1 before -1, matching the
    '+' < '-' text ordering.
    """
    if n < 1:
        raise ValueError("order must be positive")
    free = n // 2 + 1
    for bits in itertools.product((1, -1), repeat=free):
        entries = list(bits) + [0] * (n - free)
        for i in range(free, n):
            entries[i] = entries[n - i]
        yield PmOneSequence(tuple(entries))


def rowsum_prefilter(n: int) -> set[tuple[int, int, int, int]]:
    """All row-sum quadruples (s_A, s_B, s_C, s_D) a Williamson quadruple
    of order n could have: each |s| <= n with s = n (mod 2), squares
    summing to 4n.
    """
    vals = [s for s in range(-n, n + 1) if (s - n) % 2 == 0]
    roots: dict[int, list[int]] = {}
    for s in vals:
        roots.setdefault(s * s, []).append(s)
    target = 4 * n
    out: set[tuple[int, int, int, int]] = set()
    for sa in vals:
        for sb in vals:
            ab = sa * sa + sb * sb
            if ab > target:
                continue
            for sc in vals:
                rem = target - ab - sc * sc
                if rem < 0:
                    continue
                for sd in roots.get(rem, ()):
                    out.add((sa, sb, sc, sd))
    return out


def _blocks(count: int, workers: int) -> list[tuple[int, int]]:
    """Split range(count) into at most `workers` contiguous nonempty blocks."""
    workers = min(workers, count)
    base, rem = divmod(count, workers)
    blocks = []
    lo = 0
    for w in range(workers):
        hi = lo + base + (1 if w < rem else 0)
        blocks.append((lo, hi))
        lo = hi
    return blocks


def _search_block(args: tuple) -> tuple[list[tuple[int, int, int, int]], int, int, int, int]:
    """Scan first-slot indices [lo, hi) of the symmetric candidate space.

    Rebuilds the per-order tables locally so worker processes share no
    state.  Returns found index quadruples plus exact accounting.
    """
    n, lo, hi, use_rowsum, use_product, use_mod4 = args
    seqs = [s.entries for s in enumerate_symmetric(n)]
    count = len(seqs)
    half = n // 2
    shifts = range(half)
    pafs = [
        tuple(sum(s[i] * s[(i + k) % n] for i in range(n)) for k in range(1, half + 1))
        for s in seqs
    ]
    masks = [sum(1 << i for i, v in enumerate(s) if v < 0) for s in seqs]
    rowsums = [sum(s) for s in seqs]

    even = n % 2 == 0
    apply_mod4 = use_mod4 and even
    m = n // 2
    folds = [tuple(s[i] + s[i + m] for i in range(m)) for s in seqs] if apply_mod4 else None

    ptable = None
    if use_product:
        # product filter keyed on the xor of the four sign masks: bit i set
        # means the entrywise product at i is -1
        ptable = [
            product_condition([-1 if x >> i & 1 else 1 for i in range(n)])
            for x in range(1 << n)
        ]

    adm3: dict[tuple[int, int, int], set[int]] | None = None
    if use_rowsum:
        adm3 = {}
        for sa, sb, sc, sd in rowsum_prefilter(n):
            adm3.setdefault((sa, sb, sc), set()).add(sd)

    found: list[tuple[int, int, int, int]] = []
    examined = 0
    pr_rowsum = pr_product = pr_mod4 = 0
    no_sums: set[int] = set()
    rng = range(count)

    for ia in range(lo, hi):
        pa, ma, ra = pafs[ia], masks[ia], rowsums[ia]
        fa = folds[ia] if apply_mod4 else None
        for ib in rng:
            pb, rb = pafs[ib], rowsums[ib]
            mab = ma ^ masks[ib]
            fab = [x + y for x, y in zip(fa, folds[ib])] if apply_mod4 else None
            for ic in rng:
                pc = pafs[ic]
                need = tuple(-(pa[k] + pb[k] + pc[k]) for k in shifts)
                mabc = mab ^ masks[ic]
                allowed = adm3.get((ra, rb, rowsums[ic]), no_sums) if use_rowsum else None
                fabc = [x + y for x, y in zip(fab, folds[ic])] if apply_mod4 else None
                for idx in rng:
                    if use_rowsum and rowsums[idx] not in allowed:
                        pr_rowsum += 1
                        continue
                    if use_product and not ptable[mabc ^ masks[idx]]:
                        pr_product += 1
                        continue
                    if apply_mod4:
                        fd = folds[idx]
                        ok = True
                        for i in range(m):
                            if (fabc[i] + fd[i]) % 4:
                                ok = False
                                break
                        if not ok:
                            pr_mod4 += 1
                            continue
                    examined += 1
                    if pafs[idx] == need:
                        found.append((ia, ib, ic, idx))
    return found, examined, pr_rowsum, pr_product, pr_mod4


def search(cfg: SearchConfig, order_cap: int | None = None) -> tuple[list[WilliamsonQuadruple], SearchReport]:
    """Find every Williamson quadruple of order cfg.n.

    Returns the raw ordered quadruples (or canonical representatives if
    cfg.canonical_only), sorted by text form, plus a report.  The result
    set does not depend on which filters are enabled or on worker_count.
    """
    cap = ORDER_CAP if order_cap is None else order_cap
    if not 1 <= cfg.n <= cap:
        raise ValueError(f"order {cfg.n} outside supported range 1..{cap}")
    if cfg.worker_count < 1:
        raise ValueError("worker_count must be positive")

    start = time.perf_counter()
    seq_objs = list(enumerate_symmetric(cfg.n))
    jobs = [
        (cfg.n, lo, hi, cfg.use_rowsum_prefilter, cfg.use_product_filter, cfg.use_mod4_filter)
        for lo, hi in _blocks(len(seq_objs), cfg.worker_count)
    ]
    if len(jobs) == 1:
        outcomes = [_search_block(jobs[0])]
    else:
        with multiprocessing.Pool(processes=len(jobs)) as pool:
            outcomes = pool.map(_search_block, jobs)

    report = SearchReport()
    found_idx: list[tuple[int, int, int, int]] = []
    for block_found, examined, pr_rowsum, pr_product, pr_mod4 in outcomes:
        found_idx.extend(block_found)
        report.candidates_examined += examined
        report.candidates_pruned_by_filter["rowsum"] += pr_rowsum
        report.candidates_pruned_by_filter["product"] += pr_product
        report.candidates_pruned_by_filter["mod4"] += pr_mod4

    quads = [
        WilliamsonQuadruple(seq_objs[i], seq_objs[j], seq_objs[k], seq_objs[l])
        for i, j, k, l in found_idx
    ]
    quads.sort(key=quadruple_to_text)
    canonical_texts = sorted({_canonical_text(q) for q in quads})
    report.raw_count = len(quads)
    report.canonical_count = len(canonical_texts)
    result = [parse_quadruple(t) for t in canonical_texts] if cfg.canonical_only else quads
    report.elapsed = time.perf_counter() - start
    return result, report


def _canonical_text(q: WilliamsonQuadruple) -> str:
    # Negations act per slot independently and permutations realize any
    # arrangement, so the orbit minimum is: minimize each sequence against
    # its negation, then sort.  Sequences share one length, so joined-text
    # comparison never straddles a ';' asymmetrically.
    best = sorted(
        min(sequence_to_text(s), sequence_to_text(s.negated())) for s in q.sequences()
    )
    return ";".join(best)


def canonicalize(q: WilliamsonQuadruple) -> WilliamsonQuadruple:
    """Smallest text-form representative of q under sequence negations and
    slot permutations.  Idempotent; preserves the Williamson property.
    """
    return parse_quadruple(_canonical_text(q))


def format_results(quads: list[WilliamsonQuadruple], report: SearchReport) -> str:
    """Results file: one quadruple text per line, then a '#' report block."""
    pruned = report.candidates_pruned_by_filter
    lines = [quadruple_to_text(q) for q in quads]
    lines += [
        f"# raw_count {report.raw_count}",
        f"# canonical_count {report.canonical_count}",
        f"# candidates_examined {report.candidates_examined}",
        f"# pruned_rowsum {pruned['rowsum']}",
        f"# pruned_product {pruned['product']}",
        f"# pruned_mod4 {pruned['mod4']}",
        f"# elapsed_seconds {report.elapsed:.6f}",
    ]
    return "\n".join(lines) + "\n"
