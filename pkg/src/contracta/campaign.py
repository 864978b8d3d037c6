"""Exhaustive campaigns: theorem verification, lemma audits, catalog derivation.

Work is split into independent subtrees of the generation tree.  Each unit
returns a ``Tally``; tallies are merged by summation and every list is
sorted before it reaches a report, so the output does not depend on the
number of workers or the order in which units finish.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb
from multiprocessing import Pool

from .canon import canonical_form
from .connectivity import three_cut_masks
from .contraction import contractible_pair_mask
from .generation import MAX_ORDER, Leaf, walk_unit, work_units
from .graph import Graph, bits, components, mask_of
from .graph6 import emit_graph6, parse_graph6
from .structure import minimum_fan, reduced_structure

SCHEMA = "contracta/1"
MIN_CAMPAIGN_ORDER = 6
WITNESS_LIMIT = 20

# how many exceptional graphs of each catalog a dichotomy names
NAMED_EXCEPTIONS = {
    "three-component-dichotomy": {"zero": 4, "one": 0},
    "two-component-spanning": {"zero": 1, "one": 2},
    "two-component-mixed-small": {"zero": 3, "one": 2},
    "two-component-mixed-large": {"zero": 3, "one": 2},
}
# catalog sizes asserted by the classification theorems
ZERO_CATALOG_SIZE = 10
ONE_CATALOG_SIZE = 4

AUDIT_CHECKS = (
    "fan-dichotomy",
    "fan-order-size",
    "many-components-bound",
    "three-component-non-spanning-bound",
    "three-component-dichotomy",
    "fragment-inequality",
    "two-component-non-spanning",
    "two-component-spanning",
    "two-component-mixed-small",
    "two-component-mixed-large",
)


class CampaignError(ValueError):
    pass


def default_threads() -> int:
    raw = os.environ.get("CONTRACTA_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def canonical_g6(g: Graph) -> str:
    return canonical_form(g).bytes.decode()


# -- per-graph facts ------------------------------------------------------------


def contractible_count(leaf: Leaf) -> int:
    return contractible_pair_mask(leaf.adj, leaf.n, leaf.cuts).bit_count()


def family_of(leaf: Leaf) -> str | None:
    """'complete', 'complete-minus-edge', 'wheel' or None, for 3-connected leaves."""
    n = leaf.n
    degs = [row.bit_count() for row in leaf.adj]
    m = sum(degs) // 2
    if m == n * (n - 1) // 2:
        return "complete"
    if m == n * (n - 1) // 2 - 1:
        return "complete-minus-edge"
    # a hub plus cubic rim; 3-connectivity forces the rim to be one cycle
    if degs.count(n - 1) == 1 and degs.count(3) == n - 1:
        return "wheel"
    return None


def exception_kind(count: int, family: str | None) -> str | None:
    if count == 0 and family not in ("complete", "wheel"):
        return "zero"
    if count == 1 and family != "complete-minus-edge":
        return "one"
    return None


# -- tallies --------------------------------------------------------------------


@dataclass
class CheckTally:
    instances: int = 0
    failures: int = 0
    witnesses: list[dict] = field(default_factory=list)
    hits: dict[str, set[str]] = field(default_factory=lambda: {"zero": set(), "one": set()})

    def record(self, ok: bool, witness: dict) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            self.witnesses.append(witness)

    def merge(self, other: CheckTally) -> None:
        self.instances += other.instances
        self.failures += other.failures
        self.witnesses.extend(other.witnesses)
        for k, v in other.hits.items():
            self.hits[k] |= v


@dataclass
class Tally:
    counts: dict[int, int] = field(default_factory=dict)
    histogram: dict[int, dict[int, int]] = field(default_factory=dict)
    exceptions: dict[str, dict[str, int]] = field(default_factory=lambda: {"zero": {}, "one": {}})
    bound_violations: list[dict] = field(default_factory=list)
    extremal: dict[int, list[dict]] = field(default_factory=dict)
    family_counts: dict[str, dict[int, set[int]]] = field(default_factory=dict)
    checks: dict[str, CheckTally] = field(default_factory=dict)
    uncovered: int = 0

    def check(self, name: str) -> CheckTally:
        t = self.checks.get(name)
        if t is None:
            t = self.checks[name] = CheckTally()
        return t

    def merge(self, other: Tally) -> None:
        for n, c in other.counts.items():
            self.counts[n] = self.counts.get(n, 0) + c
        for n, hist in other.histogram.items():
            mine = self.histogram.setdefault(n, {})
            for k, c in hist.items():
                mine[k] = mine.get(k, 0) + c
        for kind, table in other.exceptions.items():
            self.exceptions[kind].update(table)
        self.bound_violations.extend(other.bound_violations)
        for n, rows in other.extremal.items():
            self.extremal.setdefault(n, []).extend(rows)
        for fam, table in other.family_counts.items():
            mine = self.family_counts.setdefault(fam, {})
            for n, vals in table.items():
                mine.setdefault(n, set()).update(vals)
        for name, t in other.checks.items():
            self.check(name).merge(t)
        self.uncovered += other.uncovered


def _bound(n: int) -> int:
    return n * (n - 5) // 2


def _tally_leaf(t: Tally, leaf: Leaf, audit_max: int) -> None:
    n = leaf.n
    count = contractible_count(leaf)
    family = family_of(leaf)
    t.counts[n] = t.counts.get(n, 0) + 1
    hist = t.histogram.setdefault(n, {})
    hist[count] = hist.get(count, 0) + 1
    if family is not None:
        t.family_counts.setdefault(family, {}).setdefault(n, set()).add(count)
    kind = exception_kind(count, family)
    g6 = None
    if kind is not None:
        g6 = canonical_g6(leaf.graph())
        t.exceptions[kind][g6] = n
    if n >= 6:
        bound = _bound(n)
        if count > bound:
            g6 = g6 or canonical_g6(leaf.graph())
            t.bound_violations.append({"g6": g6, "n": n, "count": count})
        elif count == bound:
            g6 = g6 or canonical_g6(leaf.graph())
            degs = {row.bit_count() for row in leaf.adj}
            t.extremal.setdefault(n, []).append(
                {"g6": g6, "fourConnected": not leaf.cuts, "fourRegular": degs == {4}}
            )
    if n <= audit_max and leaf.cuts:
        _audit_leaf(t, leaf, count, family, kind)


# -- lemma audit ------------------------------------------------------------------


def _fragment_masks(cut: int, comps: list[int]) -> list[tuple[int, int, int]]:
    """(cut, fragment, complement fragment) for every union of a proper subset of components."""
    union = 0
    for c in comps:
        union |= c
    out = []
    k = len(comps)
    for pick in range(1, (1 << k) - 1):
        f = 0
        for i in range(k):
            if pick >> i & 1:
                f |= comps[i]
        out.append((cut, f, union & ~f))
    return out


def _audit_leaf(t: Tally, leaf: Leaf, count: int, family: str | None, kind: str | None) -> None:
    g = leaf.graph()
    full = g.vertex_mask
    witness_g6 = None

    def witness(cut: int, **extra) -> dict:
        nonlocal witness_g6
        if witness_g6 is None:
            witness_g6 = emit_graph6(g).decode()
        return {"g6": witness_g6, "cut": list(bits(cut)), **extra}

    def dichotomy(name: str, allowed: tuple[str, ...], extra_ok: bool = False) -> None:
        ok = count >= 2 or extra_ok or kind in allowed
        if count < 2 and kind in allowed:
            t.check(name).hits[kind].add(canonical_g6(g))
        t.check(name).record(ok, witness(cm, count=count))

    fragments = []
    for cm in leaf.cuts:
        s = tuple(bits(cm))
        comps = components(g.adj, full & ~cm)
        fragments.extend(_fragment_masks(cm, comps))
        spanning = []
        for comp in comps:
            fan, _ = minimum_fan(g, s, list(bits(comp)))
            t.check("fan-order-size").record(fan.order == fan.size + 1, witness(cm, apex=fan.apex))
            spans = mask_of(fan.vertices) == comp | cm
            spanning.append(spans)
            if spans:
                report = reduced_structure(g, fan, s)
                ok = report.kind is not None and report.boundary == s
                t.check("fan-dichotomy").record(ok, witness(cm, apex=fan.apex))
        k = len(comps)
        if k >= 4:
            t.check("many-components-bound").record(count >= comb(k, 2), witness(cm, components=k, count=count))
        elif k == 3:
            if not all(spanning):
                t.check("three-component-non-spanning-bound").record(count >= 2, witness(cm, count=count))
            dichotomy("three-component-dichotomy", ("zero",))
        elif all(spanning):
            is_k5_minus = family == "complete-minus-edge" and leaf.n == 5
            dichotomy("two-component-spanning", ("zero", "one"), is_k5_minus or family == "wheel")
        elif not any(spanning):
            t.check("two-component-non-spanning").record(count >= 2, witness(cm, count=count))
        else:
            size = comps[spanning.index(True)].bit_count()
            if size == 1:
                t.uncovered += 1
            else:
                name = "two-component-mixed-small" if size == 2 else "two-component-mixed-large"
                dichotomy(name, ("zero", "one"))
    check = t.check("fragment-inequality")
    for cut, f, _ in fragments:
        for cut2, f2, co2 in fragments:
            if f & f2:
                ok = (f & cut2).bit_count() >= (co2 & cut).bit_count()
                check.record(ok, witness(cut, other=list(bits(cut2))))
            else:
                check.instances += 1


# -- running --------------------------------------------------------------------


def _run_unit(args) -> Tally:
    root, n_min, n_max, audit_max = args
    t = Tally()
    for leaf in walk_unit(root, n_min, n_max):
        if leaf.n >= n_min:
            _tally_leaf(t, leaf, audit_max)
    return t


def run_campaign(n_max: int, audit_max: int = 0, threads: int | None = None, n_min: int = 4) -> Tally:
    """Tally every 3-connected graph with n_min <= n <= n_max; audit those up to audit_max."""
    if not 4 <= n_min <= n_max <= MAX_ORDER:
        raise CampaignError(f"order range {n_min}..{n_max} outside 4..{MAX_ORDER}")
    threads = default_threads() if threads is None else max(1, threads)
    top, roots = work_units(n_min, n_max)
    total = Tally()
    for leaf in top:
        if leaf.n >= n_min:
            _tally_leaf(total, leaf, audit_max)
    jobs = [(root, n_min, n_max, audit_max) for root in roots]
    if threads == 1:
        parts = map(_run_unit, jobs)
        for part in parts:
            total.merge(part)
    else:
        with Pool(threads) as pool:
            for part in pool.imap(_run_unit, jobs):
                total.merge(part)
    return total


def _witnesses(rows: list[dict]) -> list[dict]:
    return sorted(rows, key=lambda r: (r["g6"], r.get("cut", []), str(sorted(r.items()))))[:WITNESS_LIMIT]


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# -- theorem verification ---------------------------------------------------------


def theorem_section(t: Tally, n_max: int) -> dict:
    zero = t.exceptions["zero"]
    one = t.exceptions["one"]
    wheels = t.family_counts.get("wheel", {})
    kminus = t.family_counts.get("complete-minus-edge", {})

    wheel_bad = sorted(n for n, vals in wheels.items() if n >= 5 and vals != {0})
    wheel_missing = sorted(n for n in range(5, n_max + 1) if n not in wheels)
    zero_ok = len(zero) <= ZERO_CATALOG_SIZE and not wheel_bad and not wheel_missing
    zero_orders = sorted(zero.values())

    kminus_bad = sorted(n for n, vals in kminus.items() if n >= 5 and vals != {1})
    kminus_missing = sorted(n for n in range(5, n_max + 1) if n not in kminus)
    one_ok = len(one) <= ONE_CATALOG_SIZE and not kminus_bad and not kminus_missing
    one_orders = sorted(one.values())

    max_by_order = {str(n): max(h) for n, h in sorted(t.histogram.items())}
    extremal_bad = [
        row
        for n, rows in t.extremal.items()
        if n >= 7
        for row in rows
        if not (row["fourConnected"] and row["fourRegular"])
    ]
    bound_ok = not t.bound_violations and not extremal_bad
    return {
        "zero-contractible": {
            "status": _status(zero_ok),
            "exceptional": sorted(zero, key=lambda g: (zero[g], g)),
            "exceptionalCount": len(zero),
            "largestOrder": zero_orders[-1] if zero_orders else None,
            "stable": not zero_orders or zero_orders[-1] < n_max,
            "wheelsWithContractible": wheel_bad,
            "wheelsMissing": wheel_missing,
        },
        "exactly-one-contractible": {
            "status": _status(one_ok),
            "exceptional": sorted(one, key=lambda g: (one[g], g)),
            "exceptionalCount": len(one),
            "largestOrder": one_orders[-1] if one_orders else None,
            "stable": not one_orders or one_orders[-1] < n_max,
            "completeMinusEdgeWrong": kminus_bad,
            "completeMinusEdgeMissing": kminus_missing,
        },
        "contractible-bound": {
            "status": _status(bound_ok),
            "maxByOrder": max_by_order,
            "boundByOrder": {str(n): _bound(n) for n in sorted(t.counts) if n >= 6},
            "extremalByOrder": {
                str(n): sorted(r["g6"] for r in rows) for n, rows in sorted(t.extremal.items())
            },
            "violations": _witnesses(t.bound_violations + extremal_bad),
        },
    }


def audit_section(t: Tally) -> dict:
    out = {}
    for name in AUDIT_CHECKS:
        c = t.checks.get(name, CheckTally())
        ok = c.failures == 0
        entry = {"instances": c.instances, "failures": c.failures}
        limits = NAMED_EXCEPTIONS.get(name)
        if limits is not None:
            hits = {k: sorted(v) for k, v in c.hits.items()}
            over = {k: len(hits[k]) for k in hits if len(hits[k]) > limits[k]}
            ok = ok and not over
            entry["exceptionsHit"] = hits
            entry["exceptionsAllowed"] = limits
        entry["witnesses"] = _witnesses(c.witnesses)
        out[name] = {"status": _status(ok), **entry}
    out["_uncoveredMixedSingleton"] = t.uncovered
    return out


def build_report(t: Tally, n_max: int, audit_max: int) -> dict:
    theorems = theorem_section(t, n_max)
    audit = audit_section(t) if audit_max >= 4 else {}
    checks = [v["status"] for v in theorems.values()]
    checks += [v["status"] for k, v in audit.items() if not k.startswith("_")]
    return {
        "schema": SCHEMA,
        "nRange": [4, n_max],
        "auditRange": [4, audit_max] if audit_max >= 4 else None,
        "graphsProcessed": sum(t.counts.values()),
        "countsByOrder": {str(n): c for n, c in sorted(t.counts.items())},
        "contractibleHistogram": {
            str(n): {str(k): c for k, c in sorted(h.items())} for n, h in sorted(t.histogram.items())
        },
        "theorems": theorems,
        "audit": audit,
        "status": _status(all(s == "PASS" for s in checks)),
    }


def _check_campaign_order(n_max: int) -> None:
    if not MIN_CAMPAIGN_ORDER <= n_max <= MAX_ORDER:
        raise CampaignError(f"n_max must lie in {MIN_CAMPAIGN_ORDER}..{MAX_ORDER}, got {n_max}")


def verify_theorems(n_max: int, threads: int | None = None) -> dict:
    _check_campaign_order(n_max)
    return build_report(run_campaign(n_max, 0, threads), n_max, 0)


def lemma_audit(n_max: int, threads: int | None = None) -> dict:
    _check_campaign_order(n_max)
    return build_report(run_campaign(n_max, n_max, threads), n_max, n_max)


# -- catalogs -------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    g6: str
    n: int
    kappa: int
    contractible_count: int
    tags: tuple[str, ...]
    annotations: tuple[str, ...]


def describe(g: Graph) -> list[str]:
    """Structural notes: cuts, component sizes and the shapes of minimum fans."""
    cuts = three_cut_masks(g.adj, g.n)
    count = contractible_pair_mask(g.adj, g.n, cuts).bit_count()
    degs = sorted(g.degrees(), reverse=True)
    notes = [
        f"n={g.n} edges={g.num_edges} kappa={3 if cuts else '>=4'} contractible={count}",
        f"degrees={','.join(map(str, degs))} 3-cuts={len(cuts)}",
    ]
    full = g.vertex_mask
    for cm in cuts:
        s = tuple(bits(cm))
        comps = components(g.adj, full & ~cm)
        shapes = []
        for comp in comps:
            fan, _ = minimum_fan(g, s, list(bits(comp)))
            if mask_of(fan.vertices) == comp | cm:
                r = reduced_structure(g, fan, s)
                shapes.append("SPr" if r.kind == "semi-prism" else f"SW{r.order}" if r.kind else "?")
            else:
                shapes.append("non-spanning")
        inside = sum(1 for a, b in ((s[0], s[1]), (s[0], s[2]), (s[1], s[2])) if g.has_edge(a, b))
        notes.append(
            f"cut {','.join(map(str, s))}: {len(comps)} components sizes "
            f"{','.join(str(c.bit_count()) for c in comps)} fans {'+'.join(shapes)} "
            f"{'S independent' if inside == 0 else f'S has {inside} edges'}"
        )
    return notes


def catalog_entry(g6: str, n: int, count: int) -> CatalogEntry:
    g = parse_graph6(g6)
    cuts = three_cut_masks(g.adj, g.n)
    return CatalogEntry(g6, n, 3 if cuts else 4, count, ("other",), tuple(describe(g)))


def derive_catalogs(n_max: int, threads: int | None = None) -> tuple[list[CatalogEntry], list[CatalogEntry]]:
    _check_campaign_order(n_max)
    t = run_campaign(n_max, 0, threads)
    return catalogs_from_tally(t)


def catalogs_from_tally(t: Tally) -> tuple[list[CatalogEntry], list[CatalogEntry]]:
    out = []
    for kind, count in (("zero", 0), ("one", 1)):
        table = t.exceptions[kind]
        out.append([catalog_entry(g6, n, count) for g6, n in sorted(table.items(), key=lambda kv: (kv[1], kv[0]))])
    return out[0], out[1]


def format_catalog(entries: list[CatalogEntry]) -> str:
    lines = []
    for e in entries:
        lines.extend(f"# {note}" for note in e.annotations)
        lines.append(e.g6)
    return "\n".join(lines) + ("\n" if lines else "")


def read_catalog(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]


def write_catalogs(directory: str, zero: list[CatalogEntry], one: list[CatalogEntry]) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name, entries in (("zero.g6", zero), ("one.g6", one)):
        path = os.path.join(directory, name)
        with open(path, "w") as fh:
            fh.write(format_catalog(entries))
        paths.append(path)
    return paths

