"""Verification campaigns: closed-form claims checked against brute-force oracles.

Each campaign produces a :class:`VerificationReport` whose records compare
a claimed value/attaining set against an independently enumerated one.
Attaining sets are compared as canonical-code sets, so two descriptions of
the same tree never cause a spurious mismatch.

Reports are deterministic: per-n work may fan out across processes, but
records are merged back in n order.
"""

from __future__ import annotations

import heapq
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import closed_forms, enumeration, transforms
from .errors import UnknownTheorem
from .families import Diam4Spec, DoubleStarSpec, build, diam4, double_star, star
from .invariants import reverse_wiener
from .tree import Tree, canonical_code, diameter_and_centers, from_edge_list

SCHEMA_VERSION = "revwiener-report/1"

THEOREM_IDS = (
    "smallest",
    "second-smallest",
    "third-smallest",
    "prop-d3",
    "prop-f4",
    "prop-g4",
    "lemmas",
)


@dataclass(frozen=True)
class Record:
    n: int
    claimed_value: int
    oracle_value: int
    claimed_set: tuple[str, ...]
    oracle_set: tuple[str, ...]
    match: bool
    note: str = ""


@dataclass
class VerificationReport:
    theorem: str
    records: list[Record] = field(default_factory=list)
    wall_time: float = 0.0
    schema_version: str = SCHEMA_VERSION

    @property
    def checked(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.match)

    @property
    def failed(self) -> int:
        return self.checked - self.passed

    @property
    def all_match(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "theorem": self.theorem,
            "records": [
                {
                    "n": r.n,
                    "claimed_value": r.claimed_value,
                    "oracle_value": r.oracle_value,
                    "claimed_set": list(r.claimed_set),
                    "oracle_set": list(r.oracle_set),
                    "match": r.match,
                    "note": r.note,
                }
                for r in self.records
            ],
            "summary": {
                "checked": self.checked,
                "passed": self.passed,
                "failed": self.failed,
            },
            "wall_time": self.wall_time,
        }


def attaining_codes(result: closed_forms.ExtremalResult) -> tuple[str, ...]:
    """Canonical-code set for an extremal result, materializing specs on demand."""
    codes = set()
    for item in result.attaining:
        if isinstance(item, str):
            codes.add(item)
        else:
            codes.add(canonical_code(build(item)))
    return tuple(sorted(codes))


def describe_attaining(result: closed_forms.ExtremalResult) -> tuple[str, ...]:
    """Human-oriented descriptor strings for an extremal result."""
    return tuple(sorted(str(item) for item in result.attaining))


def _record(n, claimed_value, oracle_value, claimed_codes, oracle_codes, note="") -> Record:
    claimed = tuple(sorted(set(claimed_codes)))
    oracle = tuple(sorted(set(oracle_codes)))
    match = claimed_value == oracle_value and claimed == oracle
    if not match and claimed_value == oracle_value and not note:
        note = "value matches; attaining sets differ"
    return Record(
        n=n,
        claimed_value=claimed_value,
        oracle_value=oracle_value,
        claimed_set=claimed,
        oracle_set=oracle,
        match=match,
        note=note,
    )


# --- per-theorem, per-n record builders -----------------------------------------


def _records_smallest(n: int, bounds: dict) -> list[Record]:
    entries = enumeration.rank_trees(n, 1, max_n=bounds["max_n_free"])
    s = star(n)
    return [
        _record(
            n,
            reverse_wiener(s),
            entries[0].value,
            [canonical_code(s)],
            entries[0].trees,
        )
    ]


def _records_second_smallest(n: int, bounds: dict) -> list[Record]:
    entries = enumeration.rank_trees(n, 2, max_n=bounds["max_n_free"])
    claimed = closed_forms.second_smallest(n)
    return [
        _record(
            n,
            claimed.value,
            entries[1].value,
            attaining_codes(claimed),
            entries[1].trees,
        )
    ]


def _records_third_smallest(n: int, bounds: dict) -> list[Record]:
    entries = enumeration.rank_trees(n, 3, max_n=bounds["max_n_free"])
    claimed = closed_forms.third_smallest(n)
    return [
        _record(
            n,
            claimed.value,
            entries[2].value,
            attaining_codes(claimed),
            entries[2].trees,
        )
    ]


def _min2_double_stars(n: int):
    """Exhaustive sweep over double stars: the two smallest values with tie sets."""
    best: list[list] = []
    for a in range(2, n // 2 + 1):
        t = double_star(DoubleStarSpec(n=n, a=a))
        lam = reverse_wiener(t)
        for entry in best:
            if entry[0] == lam:
                entry[1].append(t)
                break
        else:
            best.append([lam, [t]])
            best.sort(key=lambda e: e[0])
            del best[2:]
    return best


def _records_prop_d3(n: int, bounds: dict) -> list[Record]:
    best = _min2_double_stars(n)
    records = [
        _record(
            n,
            closed_forms.f_n3(n),
            best[0][0],
            [canonical_code(double_star(DoubleStarSpec(n=n, a=n // 2)))],
            [canonical_code(t) for t in best[0][1]],
            note="f(n,3)",
        )
    ]
    if n >= 6:
        records.append(
            _record(
                n,
                closed_forms.g_n3(n),
                best[1][0],
                [canonical_code(double_star(DoubleStarSpec(n=n, a=n // 2 - 1)))],
                [canonical_code(t) for t in best[1][1]],
                note="g(n,3)",
            )
        )
    return records


def _records_prop_f4(n: int, bounds: dict) -> list[Record]:
    claimed = closed_forms.f_n4(n)
    oracle = enumeration.min_lambda_diam(n, 4, max_n_diam4=bounds["max_n_diam4"])
    note = "; ".join(claimed.notes)
    return [
        _record(
            n,
            claimed.value,
            oracle.value,
            attaining_codes(claimed),
            attaining_codes(oracle),
            note=note,
        )
    ]


def _records_prop_g4(n: int, bounds: dict) -> list[Record]:
    claimed = closed_forms.g_n4(n)
    oracle = enumeration.second_min_lambda_diam(n, 4, max_n_diam4=bounds["max_n_diam4"])
    rec = _record(
        n,
        claimed.value,
        oracle.value,
        attaining_codes(claimed),
        attaining_codes(oracle),
        note="; ".join(claimed.notes),
    )
    if not rec.match and rec.claimed_value == rec.oracle_value:
        extra = "suspected erratum in the published attaining table; oracle is authoritative"
        note = f"{rec.note}; {extra}" if rec.note else extra
        rec = Record(
            n=rec.n,
            claimed_value=rec.claimed_value,
            oracle_value=rec.oracle_value,
            claimed_set=rec.claimed_set,
            oracle_set=rec.oracle_set,
            match=rec.match,
            note=note,
        )
    return [rec]


# --- transform battery ----------------------------------------------------------


def _random_labeled_tree(rng: random.Random, n: int) -> Tree:
    if n <= 2:
        return from_edge_list(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return from_edge_list(n, edges)


def random_diam4_spec(rng: random.Random, max_n: int = 40, min_pendants: int = 0) -> Diam4Spec:
    """Random valid diameter-4 spec with n <= max_n."""
    while True:
        k = rng.randint(2, 6)
        n0 = rng.randint(min_pendants, 3) if min_pendants or rng.random() < 0.5 else 0
        values = [rng.randint(1, 5) for _ in range(k)]
        counts: dict[int, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        spec = Diam4Spec(n0=n0, parts=tuple(sorted(counts.items())))
        if spec.n <= max_n:
            return spec


def _has_center_pendant(t: Tree) -> bool:
    _, centers = diameter_and_centers(t)
    return any(t.degree(u) == 1 for v in centers for u in t.adj[v])


def random_lemma_input(rng: random.Random, lemma: str, max_n: int = 40):
    """A random tree or spec satisfying the given transform's precondition."""
    if lemma == "lemma1":
        # Rejection-sample general trees for diameter variety; fall back to
        # a diameter-4 tree with hub pendants, which always qualifies.
        for _ in range(20):
            t = _random_labeled_tree(rng, rng.randint(5, max_n))
            d, _ = diameter_and_centers(t)
            if d >= 4 and _has_center_pendant(t):
                return t
        return diam4(random_diam4_spec(rng, max_n=max_n, min_pendants=1))
    if lemma == "lemma2":
        while True:
            t = _random_labeled_tree(rng, rng.randint(5, max_n))
            d, _ = diameter_and_centers(t)
            if d >= 4 and not _has_center_pendant(t):
                return t
    if lemma == "lemma3":
        while True:
            spec = random_diam4_spec(rng, max_n=max_n)
            pairs = [
                (i, j)
                for i in range(spec.s)
                for j in range(spec.s)
                if spec.parts[i][0] - spec.parts[j][0] >= 2
            ]
            if pairs:
                return spec, rng.choice(pairs)
    if lemma == "lemma5":
        # Two hubs joined by an edge, each hub's spokes all carrying leaves:
        # diameter exactly 5 with no center pendant.
        while True:
            halves = []
            for _ in range(2):
                k = rng.randint(1, 4)
                halves.append([rng.randint(1, 4) for _ in range(k)])
            n = 2 + sum(len(h) + sum(h) for h in halves)
            if n > max_n:
                continue
            edges = [(0, 1)]
            nxt = 2
            for hub, half in zip((0, 1), halves):
                for leaves in half:
                    spoke = nxt
                    nxt += 1
                    edges.append((hub, spoke))
                    for _ in range(leaves):
                        edges.append((spoke, nxt))
                        nxt += 1
            t = from_edge_list(n, edges)
            d, _ = diameter_and_centers(t)
            assert d == 5
            return t
    raise UnknownTheorem(f"unknown lemma {lemma!r}")


def run_lemma_battery(trials: int = 1000, max_n: int = 40, seed: int = 0) -> VerificationReport:
    """Apply each transform to random valid inputs and check its delta claim.

    For every trial, the formula delta must be strictly negative and equal
    the independently recomputed reverse-Wiener difference.  Structural
    claims (diameter preserved / reduced) are checked as well.
    """
    start = time.monotonic()
    report = VerificationReport(theorem="lemmas")
    rng = random.Random(seed)
    for lemma in ("lemma1", "lemma2", "lemma3", "lemma5"):
        failures = 0
        for _ in range(trials):
            if lemma == "lemma1":
                t = random_lemma_input(rng, lemma, max_n)
                d_in, _ = diameter_and_centers(t)
                out, delta = transforms.lemma1_pendant_shift(t)
                d_out, _ = diameter_and_centers(out)
                ok = delta < 0 and delta == reverse_wiener(out) - reverse_wiener(t)
                ok = ok and d_out == d_in
            elif lemma == "lemma2":
                t = random_lemma_input(rng, lemma, max_n)
                d_in, _ = diameter_and_centers(t)
                out, delta = transforms.lemma2_collapse(t)
                d_out, _ = diameter_and_centers(out)
                ok = delta < 0 and delta == reverse_wiener(out) - reverse_wiener(t)
                # An even diameter always drops by exactly 2; an odd one may
                # bottom out at d - 1 around both centers.
                if d_in % 2 == 0:
                    ok = ok and d_out == d_in - 2
                else:
                    ok = ok and d_out in (d_in - 2, d_in - 1)
            elif lemma == "lemma3":
                spec, (i, j) = random_lemma_input(rng, lemma, max_n)
                out_spec, delta = transforms.lemma3_rebalance(spec, i, j)
                gap = spec.parts[i][0] - spec.parts[j][0]
                recomputed = reverse_wiener(diam4(out_spec)) - reverse_wiener(diam4(spec))
                ok = delta < 0 and delta == recomputed and delta == -2 * (gap - 1)
            else:
                t = random_lemma_input(rng, lemma, max_n)
                out, delta = transforms.lemma5_contract(t)
                d_out, _ = diameter_and_centers(out)
                ok = delta < 0 and delta == reverse_wiener(out) - reverse_wiener(t)
                ok = ok and d_out == 4 and _has_center_pendant(out)
            if not ok:
                failures += 1
        report.records.append(
            Record(
                n=trials,
                claimed_value=0,
                oracle_value=failures,
                claimed_set=(),
                oracle_set=(),
                match=failures == 0,
                note=f"{lemma}: {trials} random valid inputs, n <= {max_n}",
            )
        )
    report.wall_time = time.monotonic() - start
    return report


# --- campaign driver --------------------------------------------------------------


_BUILDERS = {
    "smallest": _records_smallest,
    "second-smallest": _records_second_smallest,
    "third-smallest": _records_third_smallest,
    "prop-d3": _records_prop_d3,
    "prop-f4": _records_prop_f4,
    "prop-g4": _records_prop_g4,
}


def _worker(args) -> list[Record]:
    theorem, n, bounds = args
    return _BUILDERS[theorem](n, bounds)


def run_verification(
    theorem: str,
    n_from: int,
    n_to: int,
    jobs: int = 1,
    max_n_free: int = enumeration.DEFAULT_MAX_N_FREE,
    max_n_diam4: int = enumeration.DEFAULT_MAX_N_DIAM4,
    trials: int = 1000,
    seed: int = 0,
) -> VerificationReport:
    """Run one theorem-verification campaign over an n range."""
    if theorem not in THEOREM_IDS:
        raise UnknownTheorem(f"unknown theorem id {theorem!r}; known: {', '.join(THEOREM_IDS)}")
    if theorem == "lemmas":
        return run_lemma_battery(trials=trials, max_n=min(n_to, 40), seed=seed)
    start = time.monotonic()
    bounds = {"max_n_free": max_n_free, "max_n_diam4": max_n_diam4}
    ns = list(range(n_from, n_to + 1))
    tasks = [(theorem, n, bounds) for n in ns]
    report = VerificationReport(theorem=theorem)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for recs in pool.map(_worker, tasks):
                report.records.extend(recs)
    else:
        for task in tasks:
            report.records.extend(_worker(task))
    report.wall_time = time.monotonic() - start
    return report
