"""Batch verification of the quotient and separator results over the
whole catalog of small semigroups.

Every catalog instance is pushed through the lemma checks (all subsets),
both directions of the commutative-monoid quotient theorem, the
separator corollary, and, when a permutation identity is found within
the configured bound, the permutative strengthenings.  Output is a
stream of one-line records ordered by instance, byte-stable across runs
and across worker counts.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Sequence

from .catalog import catalog_line, enumerate_semigroups
from .congruences import (
    enumerate_congruences,
    verify_corollary1,
    verify_theorem1_converse,
    verify_theorem1_forward,
)
from .core import ElementSet, FiniteSemigroup, all_subsets, validate
from .permutative import (
    find_permutation_identity,
    format_permutation,
    lemma4_minimal_k,
    verify_corollary2,
    verify_theorem2_converse,
    verify_theorem2_forward,
)
from .reports import CheckReport, failed, passed, unmet
from .subsets import format_subset, is_subsemigroup, is_unitary, separator

__all__ = [
    "SweepConfig",
    "SweepReport",
    "check_lemma1",
    "check_lemma2",
    "check_lemma3",
    "run_sweep",
]

FAMILY_MODES = ("default", "singletons-and-all-subsets", "congruence-classes", "explicit")
THEOREM_GROUPS = ("all", "1", "2", "cor1", "cor2", "lemmas")


@dataclass(frozen=True)
class SweepConfig:
    """Knobs for one catalog sweep.

    min_order/max_order bound the catalog; family_mode picks how
    theorem families are built (the default combines every single-subset
    family with every family of congruence classes); random_families
    adds that many seeded multi-set families per permutative instance.
    """

    min_order: int = 1
    max_order: int = 4
    n_max_permutation: int = 4
    family_mode: str = "default"
    explicit_families: tuple[tuple[frozenset, ...], ...] = ()
    random_families: int = 20
    seed: int = 0
    parallelism: int = 1
    theorem: str = "all"

    def __post_init__(self):
        if not 1 <= self.min_order <= self.max_order:
            raise ValueError("need 1 <= min_order <= max_order")
        if self.n_max_permutation < 2:
            raise ValueError("n_max_permutation must be at least 2")
        if self.family_mode not in FAMILY_MODES:
            raise ValueError(f"family_mode must be one of {FAMILY_MODES}")
        if self.theorem not in THEOREM_GROUPS:
            raise ValueError(f"theorem must be one of {THEOREM_GROUPS}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.random_families < 0:
            raise ValueError("random_families cannot be negative")


@dataclass
class SweepReport:
    instances: int
    records: tuple[str, ...]
    fails: tuple[str, ...]
    counts: dict[tuple[str, str], int]

    def summary_lines(self) -> list[str]:
        n_pass = sum(v for (_, st), v in self.counts.items() if st == "pass")
        n_unmet = sum(v for (_, st), v in self.counts.items() if st == "precondition-unmet")
        n_fail = len(self.fails)
        lines = [
            f"instances: {self.instances}",
            f"checks: pass={n_pass} precondition-unmet={n_unmet} fail={n_fail}",
        ]
        for (check, status), v in sorted(self.counts.items()):
            lines.append(f"  {check}: {status}={v}")
        return lines


def check_lemma1(S: FiniteSemigroup, A: ElementSet) -> CheckReport:
    """Separators are empty or closed under the product."""
    T = separator(S, A)
    if len(T) == 0:
        return passed("lemma1", "separator empty")
    ok, w = is_subsemigroup(S, T)
    if not ok:
        return failed("lemma1", tuple(zip("ab", w)), "separator not closed")
    return passed("lemma1", f"separator {format_subset(T)}")


def check_lemma2(S: FiniteSemigroup, A: ElementSet) -> CheckReport:
    """A nonempty separator sits wholly inside A or wholly outside it."""
    T = separator(S, A)
    if len(T) == 0:
        return unmet("lemma2", "separator empty")
    inside = T.members & A.members
    outside = T.members - A.members
    if inside and outside:
        return failed(
            "lemma2",
            (("a", min(inside)), ("b", min(outside))),
            "separator straddles the subset boundary",
        )
    side = "subset" if inside else "complement"
    return passed("lemma2", f"separator within {side}")


def check_lemma3(S: FiniteSemigroup, A: ElementSet) -> CheckReport:
    """A subsemigroup is two-sided unitary exactly when it equals its
    own separator."""
    ok, _ = is_subsemigroup(S, A)
    if not ok:
        return unmet("lemma3", "not a subsemigroup")
    T = separator(S, A)
    unitary, w = is_unitary(S, A, "both")
    fixed = T.members == A.members
    if unitary and not fixed:
        x = min(T.members ^ A.members)
        return failed("lemma3", (("x", x),), f"unitary but separator is {format_subset(T)}")
    if fixed and not unitary:
        return failed("lemma3", tuple(zip("ab", w)), "equals its separator but not unitary")
    return passed("lemma3", "unitary and fixed" if unitary else "neither side holds")


def _table_hash(S: FiniteSemigroup) -> str:
    return hashlib.sha256(catalog_line(S).encode()).hexdigest()[:12]


def _family_literal(family: Sequence[ElementSet]) -> str:
    return ";".join(format_subset(X) for X in family) if family else "(empty)"


def _wants(cfg: SweepConfig, group: str) -> bool:
    return cfg.theorem in ("all", group)


def _random_families(
    cfg: SweepConfig, order: int, idx: int
) -> list[tuple[ElementSet, ...]]:
    # One generator per instance, keyed by seed, order, and catalog
    # position, so results never depend on worker scheduling.
    rng = random.Random(f"{cfg.seed}:{order}:{idx}")
    out = []
    for _ in range(cfg.random_families):
        size = rng.randint(2, 3)
        fam = tuple(
            ElementSet.of(order, (e for e in range(order) if mask >> e & 1))
            for mask in (rng.randrange(1 << order) for _ in range(size))
        )
        out.append(fam)
    return out


def _instance_checks(
    cfg: SweepConfig, order: int, idx: int, S: FiniteSemigroup
) -> list[tuple[str, CheckReport]]:
    """All (case, report) pairs for one catalog instance, in a fixed order."""
    out: list[tuple[str, CheckReport]] = []
    subsets = list(all_subsets(order))

    if _wants(cfg, "lemmas"):
        for A in subsets:
            case = format_subset(A)
            out.append((case, check_lemma1(S, A)))
            out.append((case, check_lemma2(S, A)))
            out.append((case, check_lemma3(S, A)))

    if _wants(cfg, "cor1"):
        for A in subsets:
            out.append((format_subset(A), verify_corollary1(S, A)))

    congruences = None
    if _wants(cfg, "1") or _wants(cfg, "2"):
        congruences = enumerate_congruences(S, order_bound=max(order, 6))

    if _wants(cfg, "1"):
        if cfg.family_mode in ("default", "singletons-and-all-subsets"):
            for A in subsets:
                out.append((format_subset(A), verify_theorem1_forward(S, [A])))
        if cfg.family_mode in ("default", "congruence-classes"):
            for sigma in congruences:
                fam = sigma.classes()
                out.append((_family_literal(fam), verify_theorem1_forward(S, fam)))
        if cfg.family_mode == "explicit":
            for raw in cfg.explicit_families:
                if any(max(part, default=-1) >= order for part in raw):
                    continue
                fam = tuple(ElementSet(order, part) for part in raw)
                out.append((_family_literal(fam), verify_theorem1_forward(S, fam)))
        for sigma in congruences:
            out.append((_family_literal(sigma.classes()), verify_theorem1_converse(S, sigma)))

    if _wants(cfg, "2") or _wants(cfg, "cor2"):
        witness = find_permutation_identity(S, cfg.n_max_permutation)
        if witness is None:
            out.append(
                (
                    "-",
                    unmet(
                        "permutation-identity",
                        f"no identity found up to length {cfg.n_max_permutation}",
                    ),
                )
            )
        else:
            out.append(
                ("-", passed("permutation-identity", f"n={witness.length} "
                             f"{format_permutation(witness)}"))
            )
        if witness is not None and _wants(cfg, "2"):
            res = lemma4_minimal_k(S)
            if res.k is not None:
                out.append(("-", passed("lemma4", f"k={res.k}")))
            else:
                k, (u, x, y, v) = res.counterexamples[0]
                out.append(
                    (
                        "-",
                        failed(
                            "lemma4",
                            (("k", k), ("u", u), ("x", x), ("y", y), ("v", v)),
                            "no exponent works along the whole power chain",
                        ),
                    )
                )
            if cfg.family_mode in ("default", "singletons-and-all-subsets"):
                for A in subsets:
                    out.append(
                        (format_subset(A), verify_theorem2_forward(S, [A], witness))
                    )
            if cfg.family_mode in ("default", "congruence-classes"):
                for sigma in congruences:
                    fam = sigma.classes()
                    out.append((_family_literal(fam), verify_theorem2_forward(S, fam, witness)))
            for fam in _random_families(cfg, order, idx):
                out.append((_family_literal(fam), verify_theorem2_forward(S, fam, witness)))
            for sigma in congruences:
                out.append(
                    (
                        _family_literal(sigma.classes()),
                        verify_theorem2_converse(S, sigma, witness),
                    )
                )
        if witness is not None and _wants(cfg, "cor2"):
            for A in subsets:
                out.append((format_subset(A), verify_corollary2(S, A, witness)))

    return out


def _instance_worker(
    item: tuple[SweepConfig, int, int, tuple[tuple[int, ...], ...]]
) -> list[tuple[str, str, str]]:
    cfg, order, idx, table = item
    S = validate(table)
    h = _table_hash(S)
    rows = []
    for case, rep in _instance_checks(cfg, order, idx, S):
        line = f"order={order} table={h} case={case} {rep.record()}"
        rows.append((line, rep.check, rep.status))
    return rows


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """Run every configured check over the catalog and aggregate.

    Work is split per instance; records keep catalog order regardless of
    parallelism, so two sweeps with the same config are byte-identical.
    """
    items = []
    for order in range(cfg.min_order, cfg.max_order + 1):
        for idx, S in enumerate(enumerate_semigroups(order, order_bound=cfg.max_order)):
            items.append((cfg, order, idx, S.table))
    if cfg.parallelism > 1:
        with Pool(cfg.parallelism) as pool:
            per_instance = pool.map(_instance_worker, items, chunksize=8)
    else:
        per_instance = [_instance_worker(item) for item in items]
    records: list[str] = []
    fails: list[str] = []
    counts: dict[tuple[str, str], int] = {}
    for rows in per_instance:
        for line, check, status in rows:
            records.append(line)
            counts[(check, status)] = counts.get((check, status), 0) + 1
            if status == "fail":
                fails.append(line)
    return SweepReport(len(items), tuple(records), tuple(fails), counts)
