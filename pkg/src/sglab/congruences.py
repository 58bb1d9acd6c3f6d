"""Congruences induced by subset families, quotients, and their checks.

The central construction: a family of subsets A_i induces the relation
a ~ b iff for every i and every two-sided context x, y drawn from the
semigroup itself, x*a*y lands in A_i exactly when x*b*y does.  That
relation is always a congruence.  When the A_i are medial and the
intersection of their separators is nonempty, the quotient is a
commutative monoid whose identity class is that intersection; and every
commutative monoid congruence arises from its own classes this way.
Both directions are checked here, stage by stage, on concrete tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .core import ElementSet, FiniteSemigroup, identity_element, is_commutative, validate
from .errors import AmbientMismatch, NotACongruence, OrderTooLarge
from .reports import CheckReport, failed, passed, unmet
from .subsets import format_subset, is_medial, is_reflexive, is_subsemigroup, is_unitary, separator

__all__ = [
    "Congruence",
    "QuotientSemigroup",
    "QuotientKind",
    "identity_congruence",
    "universal_congruence",
    "p_congruence",
    "p_congruence_pairwise",
    "is_congruence",
    "quotient",
    "classify_quotient",
    "enumerate_congruences",
    "verify_theorem1_forward",
    "verify_theorem1_converse",
    "verify_corollary1",
]


@dataclass(frozen=True)
class Congruence:
    """A partition of [0, n) in canonical class-id form.

    Class ids are assigned in order of first appearance by ascending
    element index, so equal partitions compare equal as plain tuples.
    verified marks partitions that passed a compatibility check against
    some semigroup; it never participates in equality.
    """

    ambient: int
    class_of: tuple[int, ...]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.ambient < 1:
            raise ValueError("ambient order must be positive")
        if len(self.class_of) != self.ambient:
            raise ValueError(f"expected {self.ambient} class assignments")
        relabel: dict[int, int] = {}
        canon = []
        for v in self.class_of:
            if v not in relabel:
                relabel[v] = len(relabel)
            canon.append(relabel[v])
        object.__setattr__(self, "class_of", tuple(canon))

    @classmethod
    def from_classes(cls, ambient: int, parts: Iterable[Iterable[int]]) -> "Congruence":
        assign = [-1] * ambient
        for pid, part in enumerate(parts):
            for x in part:
                if not 0 <= x < ambient:
                    raise ValueError(f"element {x} outside [0, {ambient})")
                if assign[x] != -1:
                    raise ValueError(f"element {x} appears in two classes")
                assign[x] = pid
        if -1 in assign:
            raise ValueError(f"element {assign.index(-1)} missing from the partition")
        return cls(ambient, tuple(assign))

    @property
    def n_classes(self) -> int:
        return max(self.class_of) + 1

    def classes(self) -> tuple[ElementSet, ...]:
        """Class contents indexed by class id."""
        buckets: list[list[int]] = [[] for _ in range(self.n_classes)]
        for x, c in enumerate(self.class_of):
            buckets[c].append(x)
        return tuple(ElementSet.of(self.ambient, b) for b in buckets)

    def __repr__(self):
        body = ";".join(format_subset(c) for c in self.classes())
        return f"Congruence({self.ambient}, {body})"


def identity_congruence(n: int) -> Congruence:
    return Congruence(n, tuple(range(n)), verified=True)


def universal_congruence(n: int) -> Congruence:
    return Congruence(n, (0,) * n, verified=True)


class QuotientKind(NamedTuple):
    is_monoid: bool
    is_commutative: bool
    identity_class: int | None


@dataclass(frozen=True)
class QuotientSemigroup:
    """A quotient table together with the projection that produced it."""

    quotient: FiniteSemigroup
    projection: tuple[int, ...]
    source_order: int


def _check_family(S: FiniteSemigroup, family: Sequence[ElementSet]) -> None:
    for A in family:
        if A.ambient != S.order:
            raise AmbientMismatch(S.order, A.ambient)


def _context_partition(S: FiniteSemigroup, family: Sequence[ElementSet]) -> Congruence:
    # Profile route: element a is fingerprinted by the boolean cube
    # slice {(i, x, y) : x*a*y in A_i}; equal fingerprints = one class.
    w3 = S.word_tensor(3)
    per_set = [A.mask[w3] for A in family]
    keys = [b"".join(m[:, a, :].tobytes() for m in per_set) for a in range(S.order)]
    ids: dict[bytes, int] = {}
    class_of = []
    for key in keys:
        if key not in ids:
            ids[key] = len(ids)
        class_of.append(ids[key])
    return Congruence(S.order, tuple(class_of))


def p_congruence(S: FiniteSemigroup, family: Sequence[ElementSet]) -> Congruence:
    """The congruence induced by a family of subsets via two-sided contexts.

    a ~ b iff for every A_i and every x, y in S: x*a*y in A_i exactly
    when x*b*y in A_i.  Contexts range over S itself.  The empty family,
    and families containing the empty or full set, degenerate to the
    universal relation.  The result is re-checked for compatibility
    before being flagged verified.
    """
    _check_family(S, family)
    part = _context_partition(S, family)
    ok, w = is_congruence(S, part)
    if not ok:
        raise NotACongruence(f"induced relation broke compatibility at {w}")
    return Congruence(part.ambient, part.class_of, verified=True)


def p_congruence_pairwise(S: FiniteSemigroup, family: Sequence[ElementSet]) -> Congruence:
    """Independent slow-route reimplementation of p_congruence.

    Tests every element pair directly against the defining biconditional
    with plain table folds; exists solely to cross-check the profile
    route, so it deliberately shares no code with it.
    """
    _check_family(S, family)
    n = S.order
    t = S.table
    members = [A.members for A in family]

    def related(a: int, b: int) -> bool:
        for ms in members:
            for x in range(n):
                xa = t[x][a]
                xb = t[x][b]
                for y in range(n):
                    if (t[xa][y] in ms) != (t[xb][y] in ms):
                        return False
        return True

    class_of = [-1] * n
    next_id = 0
    for a in range(n):
        if class_of[a] != -1:
            continue
        class_of[a] = next_id
        for b in range(a + 1, n):
            if class_of[b] == -1 and related(a, b):
                class_of[b] = next_id
        next_id += 1
    # Defining condition is an equality of profiles, so the relation
    # must come out transitive; greedy grouping relies on that.
    for a in range(n):
        for b in range(n):
            if (class_of[a] == class_of[b]) != related(a, b):
                raise NotACongruence(f"pairwise relation not transitive at ({a},{b})")
    return Congruence(n, tuple(class_of), verified=True)


def is_congruence(
    S: FiniteSemigroup, part: Congruence
) -> tuple[bool, tuple[int, int, int] | None]:
    """Compatibility of a partition with the product, on both sides.

    Witness (a, b, c): a and b share a class but c*a vs c*b or a*c vs
    b*c do not; lexicographically first such triple.
    """
    if part.ambient != S.order:
        raise AmbientMismatch(S.order, part.ambient)
    cls = part.class_of
    t = S.table
    n = S.order
    for a in range(n):
        for b in range(n):
            if a == b or cls[a] != cls[b]:
                continue
            for c in range(n):
                if cls[t[a][c]] != cls[t[b][c]] or cls[t[c][a]] != cls[t[c][b]]:
                    return False, (a, b, c)
    return True, None


def quotient(S: FiniteSemigroup, c: Congruence) -> QuotientSemigroup:
    """Quotient table over class ids, with a well-definedness sweep.

    Representatives are the first element of each class; the sweep then
    confirms every other choice agrees, so NotACongruence is raised for
    any partition that merely pretends to be compatible.
    """
    if c.ambient != S.order:
        raise AmbientMismatch(S.order, c.ambient)
    cls = c.class_of
    k = c.n_classes
    reps = [cls.index(i) for i in range(k)]
    t = S.table
    qtable = [[cls[t[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    for a in range(S.order):
        for b in range(S.order):
            if cls[t[a][b]] != qtable[cls[a]][cls[b]]:
                raise NotACongruence(
                    f"product of classes {cls[a]},{cls[b]} depends on representatives"
                )
    return QuotientSemigroup(validate(qtable), cls, S.order)


def classify_quotient(Q: QuotientSemigroup) -> QuotientKind:
    e = identity_element(Q.quotient)
    comm, _ = is_commutative(Q.quotient)
    return QuotientKind(e is not None, comm, e)


def _rgs_strings(n: int) -> Iterator[tuple[int, ...]]:
    # Restricted growth strings in lexicographic order: a[0]=0 and
    # a[i] <= max(a[:i]) + 1.  One string per set partition of [0, n).
    cur = [0] * n

    def rec(pos: int, mx: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(cur)
            return
        for v in range(mx + 2):
            cur[pos] = v
            yield from rec(pos + 1, max(mx, v))

    yield from rec(1, 0)


def enumerate_congruences(S: FiniteSemigroup, order_bound: int = 6) -> list[Congruence]:
    """All congruences of S, by filtering every set partition of [0, n).

    Partitions are generated as restricted growth strings in
    lexicographic order, which the output inherits.  Bounded because
    partition counts grow fast; the bound guards cost, not correctness.
    """
    if S.order > order_bound:
        raise OrderTooLarge(S.order, order_bound)
    out = []
    for rgs in _rgs_strings(S.order):
        part = Congruence(S.order, rgs)
        ok, _ = is_congruence(S, part)
        if ok:
            out.append(Congruence(S.order, rgs, verified=True))
    return out


def _sep_intersection(S: FiniteSemigroup, family: Sequence[ElementSet]) -> ElementSet:
    A = ElementSet.full(S.order)
    for X in family:
        A = A & separator(S, X)
    return A


def _medial_names(w: tuple[int, int, int, int]) -> tuple[tuple[str, int], ...]:
    return tuple(zip(("x", "a", "b", "y"), w))


def verify_theorem1_forward(S: FiniteSemigroup, family: Sequence[ElementSet]) -> CheckReport:
    """Medial family with jointly nonempty separators induces a
    commutative monoid congruence whose identity class is that
    intersection.

    Stages: (i) every set medial, (ii) intersection of separators
    nonempty — both are hypotheses, reported precondition-unmet when
    missing; then (iii) induced relation is a congruence, (iv) quotient
    is a commutative monoid, (v) the intersection is exactly the
    identity class, (vi) every set in the family is a union of classes.
    """
    check = "theorem1-forward"
    _check_family(S, family)
    for i, X in enumerate(family):
        ok, w = is_medial(S, X)
        if not ok:
            return unmet(check, f"set {i} not medial", _medial_names(w))
    A = _sep_intersection(S, family)
    if len(A) == 0:
        return unmet(check, "intersection of separators is empty")
    P = _context_partition(S, family)
    ok, w = is_congruence(S, P)
    if not ok:
        return failed(check, tuple(zip("abc", w)), "induced relation is not a congruence")
    Q = quotient(S, Congruence(P.ambient, P.class_of, verified=True))
    kind = classify_quotient(Q)
    if not kind.is_monoid:
        return failed(check, None, "quotient has no identity element")
    if not kind.is_commutative:
        a, b = is_commutative(Q.quotient)[1]
        return failed(check, (("a", a), ("b", b)), "quotient not commutative (class ids)")
    ident = P.classes()[kind.identity_class]
    if ident.members != A.members:
        x = min(ident.members ^ A.members)
        return failed(
            check,
            (("x", x),),
            f"separator intersection {format_subset(A)} is not the identity class "
            f"{format_subset(ident)}",
        )
    for i, X in enumerate(family):
        for a in X:
            for b in range(S.order):
                if P.class_of[a] == P.class_of[b] and b not in X:
                    return failed(
                        check,
                        (("i", i), ("a", a), ("b", b)),
                        f"set {i} splits a congruence class",
                    )
    detail = f"identity class {format_subset(A)}"
    if not family:
        detail += "; empty family induces the universal relation"
    return passed(check, detail)


def verify_theorem1_converse(S: FiniteSemigroup, sigma: Congruence) -> CheckReport:
    """Every commutative monoid congruence arises from its own classes.

    Qualifying sigma (a congruence with commutative monoid quotient)
    must have medial classes, separator intersection equal to the
    identity class, and induce itself back via p_congruence.
    """
    check = "theorem1-converse"
    if sigma.ambient != S.order:
        raise AmbientMismatch(S.order, sigma.ambient)
    ok, w = is_congruence(S, sigma)
    if not ok:
        return unmet(check, "not a congruence", tuple(zip("abc", w)))
    Q = quotient(S, sigma)
    kind = classify_quotient(Q)
    if not kind.is_monoid:
        return unmet(check, "quotient is not a monoid")
    if not kind.is_commutative:
        return unmet(check, "quotient is not commutative")
    classes = sigma.classes()
    for i, X in enumerate(classes):
        ok, w = is_medial(S, X)
        if not ok:
            return failed(check, (("i", i),) + _medial_names(w), f"class {i} not medial")
    A = _sep_intersection(S, classes)
    ident = classes[kind.identity_class]
    if A.members != ident.members:
        return failed(
            check,
            None,
            f"separator intersection {format_subset(A)} differs from identity class "
            f"{format_subset(ident)}",
        )
    P = _context_partition(S, classes)
    if P.class_of != sigma.class_of:
        a, b = _first_disagreement(P.class_of, sigma.class_of)
        return failed(check, (("a", a), ("b", b)), "induced congruence differs from input")
    return passed(check)


def _first_disagreement(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, int]:
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if (p[a] == p[b]) != (q[a] == q[b]):
                return a, b
    raise ValueError("partitions are equal")


def verify_corollary1(S: FiniteSemigroup, A: ElementSet) -> CheckReport:
    """The separator of a medial subset is empty or a reflexive unitary
    subsemigroup, and separating twice changes nothing."""
    check = "corollary1"
    ok, w = is_medial(S, A)
    if not ok:
        return unmet(check, "subset not medial", _medial_names(w))
    T = separator(S, A)
    if len(T) == 0:
        return passed(check, "separator empty")
    ok, w = is_subsemigroup(S, T)
    if not ok:
        return failed(check, tuple(zip("ab", w)), "separator not closed under product")
    ok, w = is_reflexive(S, T)
    if not ok:
        return failed(check, tuple(zip("ab", w)), "separator not reflexive")
    ok, w = is_unitary(S, T, "both")
    if not ok:
        return failed(check, tuple(zip("ab", w)), "separator not unitary")
    T2 = separator(S, T)
    if T2.members != T.members:
        x = min(T2.members ^ T.members)
        return failed(
            check,
            (("x", x),),
            f"separator of {format_subset(T)} is {format_subset(T2)}, not itself",
        )
    return passed(check, f"separator {format_subset(T)}")
