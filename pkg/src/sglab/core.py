"""Finite semigroups as validated Cayley tables, plus element subsets.

Elements are the indices 0..n-1; ``table[a][b]`` is the product a*b
(left factor selects the row).  Labels are display-only.  Every
construction path runs the full associativity check, so all other code
may assume it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    DuplicateLabel,
    EmptyWord,
    IndexOutOfRange,
    NotAssociative,
    OutOfRangeEntry,
    SgFormatError,
)

__all__ = [
    "FiniteSemigroup",
    "ElementSet",
    "PowerChain",
    "validate",
    "word_product",
    "power_set_chain",
    "is_commutative",
    "identity_element",
    "all_subsets",
    "parse_sg",
    "read_sg",
    "format_sg",
]


@dataclass(frozen=True)
class FiniteSemigroup:
    """An order-n semigroup given by its n x n Cayley table.

    Validation is eager: range errors and the lexicographically first
    associativity violation are raised at construction time.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n < 1:
            raise ValueError("a semigroup needs at least one element")
        if any(len(row) != n for row in rows):
            raise ValueError("table must be square")
        object.__setattr__(self, "table", rows)
        for a in range(n):
            for b in range(n):
                if not 0 <= rows[a][b] < n:
                    raise OutOfRangeEntry(a, b, rows[a][b])
        for a in range(n):
            ra = rows[a]
            for b in range(n):
                ab = ra[b]
                rab = rows[ab]
                rb = rows[b]
                for c in range(n):
                    if rab[c] != rows[a][rb[c]]:
                        raise NotAssociative(a, b, c)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            seen: set[str] = set()
            for s in labels:
                if s in seen:
                    raise DuplicateLabel(s)
                seen.add(s)
            object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return len(self.table)

    def product(self, a: int, b: int) -> int:
        return self.table[a][b]

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, table={self.table!r})"

    @cached_property
    def np_table(self) -> np.ndarray:
        return np.array(self.table, dtype=np.intp)

    @cached_property
    def _word_tensors(self) -> dict[int, np.ndarray]:
        return {1: np.arange(self.order, dtype=np.intp)}

    def word_tensor(self, k: int) -> np.ndarray:
        """k-dimensional array of all left-to-right products of k elements.

        ``word_tensor(k)[x1, ..., xk] == x1*x2*...*xk``.  Memory grows as
        n**k; callers stay at small k (the harness never needs k > 5).
        """
        cache = self._word_tensors
        if k not in cache:
            cache[k] = self.np_table[self.word_tensor(k - 1)]
        return cache[k]


def validate(
    table: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> FiniteSemigroup:
    """Construct a semigroup, raising on the first axiom violation.

    Errors carry witnesses: OutOfRangeEntry the first bad cell,
    NotAssociative the lexicographically first bad triple (a, b, c).
    """
    return FiniteSemigroup(
        tuple(tuple(row) for row in table),
        None if labels is None else tuple(labels),
    )


def word_product(S: FiniteSemigroup, w: Sequence[int]) -> int:
    """Left-to-right product of a nonempty word of element indices."""
    if len(w) == 0:
        raise EmptyWord()
    n = S.order
    for x in w:
        if not isinstance(x, (int, np.integer)) or not 0 <= x < n:
            raise IndexOutOfRange(x, n)
    t = S.table
    acc = w[0]
    for x in w[1:]:
        acc = t[acc][x]
    return acc


@dataclass(frozen=True)
class ElementSet:
    """A subset of the elements of an order-``ambient`` semigroup.

    Iteration is always in ascending index order, so every scan that
    walks a subset is deterministic.
    """

    ambient: int
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(int(x) for x in self.members)
        if self.ambient < 1:
            raise ValueError("ambient order must be positive")
        for x in members:
            if not 0 <= x < self.ambient:
                raise IndexOutOfRange(x, self.ambient)
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, ambient: int, members: Iterable[int]) -> "ElementSet":
        return cls(ambient, frozenset(members))

    @classmethod
    def empty(cls, ambient: int) -> "ElementSet":
        return cls(ambient, frozenset())

    @classmethod
    def full(cls, ambient: int) -> "ElementSet":
        return cls(ambient, frozenset(range(ambient)))

    @cached_property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ambient, dtype=bool)
        m[list(self.members)] = True
        return m

    def complement(self) -> "ElementSet":
        return ElementSet(self.ambient, frozenset(range(self.ambient)) - self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.members)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        if self.ambient != other.ambient:
            raise ValueError("ambient orders differ")
        return ElementSet(self.ambient, self.members & other.members)

    def __le__(self, other: "ElementSet") -> bool:
        return self.members <= other.members

    def __repr__(self):
        body = ",".join(str(i) for i in self.indices)
        return f"ElementSet({self.ambient}, {{{body}}})"


def all_subsets(ambient: int) -> Iterator[ElementSet]:
    """All 2**ambient subsets, in ascending bitmask order (bit e = element e)."""
    for mask in range(1 << ambient):
        yield ElementSet.of(ambient, (e for e in range(ambient) if mask >> e & 1))


class PowerChain(NamedTuple):
    """The sequence S^1, S^2, ... up to its first repetition.

    ``sets[k-1]`` is S^k; the set that would follow the last entry equals
    ``sets[cycle_start]``.
    """

    sets: tuple[ElementSet, ...]
    cycle_start: int


def power_set_chain(S: FiniteSemigroup) -> PowerChain:
    """Compute S^k = S . S^(k-1) until the subset sequence repeats."""
    n = S.order
    t = S.table
    cur = frozenset(range(n))
    chain = [cur]
    seen = {cur: 0}
    while True:
        nxt = frozenset(t[s][w] for s in range(n) for w in cur)
        if nxt in seen:
            cycle_start = seen[nxt]
            break
        seen[nxt] = len(chain)
        chain.append(nxt)
        cur = nxt
    return PowerChain(tuple(ElementSet(n, c) for c in chain), cycle_start)


def is_commutative(S: FiniteSemigroup) -> tuple[bool, tuple[int, int] | None]:
    """True iff a*b == b*a everywhere; else the first (a, b) violating it."""
    t = S.table
    n = S.order
    for a in range(n):
        for b in range(n):
            if t[a][b] != t[b][a]:
                return False, (a, b)
    return True, None


def identity_element(S: FiniteSemigroup) -> int | None:
    """The two-sided identity, if one exists (it is then unique)."""
    t = S.table
    n = S.order
    for e in range(n):
        if all(t[e][x] == x == t[x][e] for x in range(n)):
            return e
    return None


# --- .sg text format ------------------------------------------------------
#
# Optional '#' comment lines; first payload line is n; then n rows of n
# whitespace-separated integers in [0, n); optionally one final line
# "labels: s0 s1 ... s{n-1}".  Ragged rows and out-of-range entries are
# rejected at parse time.


def parse_sg(text: str) -> FiniteSemigroup:
    payload: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        payload.append((lineno, line))
    if not payload:
        raise SgFormatError(1, "no content")
    lineno, head = payload[0]
    try:
        n = int(head)
    except ValueError:
        raise SgFormatError(lineno, f"expected the order, got {head!r}") from None
    if n < 1:
        raise SgFormatError(lineno, f"order must be positive, got {n}")
    if len(payload) < 1 + n:
        raise SgFormatError(payload[-1][0], f"expected {n} table rows")
    rows: list[tuple[int, ...]] = []
    for lineno, line in payload[1 : 1 + n]:
        parts = line.split()
        if len(parts) != n:
            raise SgFormatError(lineno, f"expected {n} entries, got {len(parts)}")
        try:
            row = tuple(int(p) for p in parts)
        except ValueError:
            raise SgFormatError(lineno, f"non-integer entry in {line!r}") from None
        for v in row:
            if not 0 <= v < n:
                raise SgFormatError(lineno, f"entry {v} out of range [0, {n})")
        rows.append(row)
    labels: tuple[str, ...] | None = None
    rest = payload[1 + n :]
    if rest:
        lineno, line = rest[0]
        if not line.startswith("labels:"):
            raise SgFormatError(lineno, f"unexpected trailing content {line!r}")
        labels = tuple(line[len("labels:") :].split())
        if len(labels) != n:
            raise SgFormatError(lineno, f"expected {n} labels, got {len(labels)}")
        if len(rest) > 1:
            raise SgFormatError(rest[1][0], "content after the labels line")
    return validate(rows, labels)


def read_sg(path) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        return parse_sg(fh.read())


def format_sg(S: FiniteSemigroup) -> str:
    lines = [str(S.order)]
    lines.extend(" ".join(str(v) for v in row) for row in S.table)
    if S.labels is not None:
        lines.append("labels: " + " ".join(S.labels))
    return "\n".join(lines) + "\n"
