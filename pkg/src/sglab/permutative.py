"""Permutation identities and the stronger quotient results they unlock.

A semigroup satisfying any nontrivial permutation identity (all words of
some length n are invariant under a fixed shuffle of their letters) gets
monoid congruences from arbitrary subset families: mediality comes for
free once a separator is nonempty.  This module finds such identities by
bounded search, computes the exponent k that makes middles commute
between long prefixes and suffixes, and verifies the permutative
variants of the quotient theorem and the separator corollary.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple, Sequence

import numpy as np

from .congruences import (
    Congruence,
    _context_partition,
    _first_disagreement,
    _medial_names,
    _sep_intersection,
    classify_quotient,
    is_congruence,
    quotient,
)
from .core import ElementSet, FiniteSemigroup, PowerChain, power_set_chain
from .errors import AmbientMismatch
from .reports import CheckReport, failed, passed, unmet
from .subsets import format_subset, is_medial, is_reflexive, is_subsemigroup, is_unitary, separator

__all__ = [
    "PermutationIdentity",
    "Lemma4Result",
    "satisfies_identity",
    "find_permutation_identity",
    "lemma4_minimal_k",
    "verify_theorem2_forward",
    "verify_theorem2_converse",
    "verify_corollary2",
    "parse_permutation",
    "format_permutation",
]


@dataclass(frozen=True)
class PermutationIdentity:
    """The identity x_1...x_n = x_{perm(1)}...x_{perm(n)}.

    perm holds 1-based images; it must be a non-identity bijection of
    {1..n} with n >= 2.
    """

    length: int
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        if self.length < 2:
            raise ValueError("identities need length at least 2")
        if len(self.perm) != self.length:
            raise ValueError(f"expected {self.length} images, got {len(self.perm)}")
        if sorted(self.perm) != list(range(1, self.length + 1)):
            raise ValueError(f"{self.perm} is not a bijection of 1..{self.length}")
        if self.perm == tuple(range(1, self.length + 1)):
            raise ValueError("the identity permutation gives a trivial identity")

    @classmethod
    def of(cls, perm: Sequence[int]) -> "PermutationIdentity":
        return cls(len(perm), tuple(perm))


def satisfies_identity(
    S: FiniteSemigroup, ident: PermutationIdentity
) -> tuple[bool, tuple[int, ...] | None]:
    """Whole-tensor comparison of both sides over all n-tuples.

    The right-hand side is the product tensor with its axes shuffled by
    the permutation, so no second fold is ever computed.  Witness is the
    lexicographically first tuple (x_1..x_n) where the sides differ.
    """
    w = S.word_tensor(ident.length)
    rhs = w.transpose(tuple(p - 1 for p in ident.perm))
    bad = w != rhs
    if not bad.any():
        return True, None
    return False, tuple(int(v) for v in np.argwhere(bad)[0])


def find_permutation_identity(
    S: FiniteSemigroup, n_max: int = 4
) -> PermutationIdentity | None:
    """First satisfied identity, n ascending then permutations in lex
    order; absence only means nothing was found up to n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    for n in range(2, n_max + 1):
        w = S.word_tensor(n)
        for perm in permutations(range(1, n + 1)):
            if perm == tuple(range(1, n + 1)):
                continue
            if np.array_equal(w, w.transpose(tuple(p - 1 for p in perm))):
                return PermutationIdentity(n, perm)
    return None


class Lemma4Result(NamedTuple):
    """Outcome of the middle-swap search along the power chain.

    k is the least exponent with u*x*y*v = u*y*x*v for all u, v in S^k
    and x, y in S, or None when no chain entry qualifies;
    counterexamples holds the first violating (u, x, y, v) per failed k,
    in ascending k order.
    """

    k: int | None
    chain: PowerChain
    counterexamples: tuple[tuple[int, tuple[int, int, int, int]], ...]


def lemma4_minimal_k(S: FiniteSemigroup) -> Lemma4Result:
    """Search k = 1, 2, ... for the middle-swap property.

    The property depends on k only through the set S^k, so scanning the
    power chain until its first repeated set covers every distinct case;
    past the cycle the outcomes repeat.
    """
    chain = power_set_chain(S)
    w4 = S.word_tensor(4)
    all_idx = np.arange(S.order)
    counterexamples = []
    for k, sk in enumerate(chain.sets, start=1):
        idx = np.array(sk.indices, dtype=np.intp)
        sub = w4[np.ix_(idx, all_idx, all_idx, idx)]
        bad = sub != sub.swapaxes(1, 2)
        if not bad.any():
            return Lemma4Result(k, chain, tuple(counterexamples))
        ui, x, y, vi = np.argwhere(bad)[0]
        counterexamples.append((k, (int(idx[ui]), int(x), int(y), int(idx[vi]))))
    return Lemma4Result(None, chain, tuple(counterexamples))


def _witness_holds(
    S: FiniteSemigroup, ident: PermutationIdentity, check: str
) -> CheckReport | None:
    ok, w = satisfies_identity(S, ident)
    if ok:
        return None
    names = tuple((f"x{i + 1}", v) for i, v in enumerate(w))
    return unmet(check, f"claimed identity {format_permutation(ident)} does not hold", names)


def verify_theorem2_forward(
    S: FiniteSemigroup,
    family: Sequence[ElementSet],
    permutation_witness: PermutationIdentity,
) -> CheckReport:
    """Under a verified permutation identity, any family with jointly
    nonempty separators induces a monoid congruence with the
    intersection as identity class.

    Mediality of each separated set is asserted as a consequence, not
    assumed.  Commutativity of the quotient is asserted on top of the
    monoid claim and flagged in its own detail string, since it arrives
    by a different route than the monoid structure itself.
    """
    check = "theorem2-forward"
    for X in family:
        if X.ambient != S.order:
            raise AmbientMismatch(S.order, X.ambient)
    bad = _witness_holds(S, permutation_witness, check)
    if bad is not None:
        return bad
    A = _sep_intersection(S, family)
    if len(A) == 0:
        return unmet(check, "intersection of separators is empty")
    for i, X in enumerate(family):
        if len(separator(S, X)) == 0:
            continue
        ok, w = is_medial(S, X)
        if not ok:
            return failed(
                check,
                (("i", i),) + _medial_names(w),
                f"set {i} has a nonempty separator but is not medial",
            )
    P = _context_partition(S, family)
    ok, w = is_congruence(S, P)
    if not ok:
        return failed(check, tuple(zip("abc", w)), "induced relation is not a congruence")
    Q = quotient(S, Congruence(P.ambient, P.class_of, verified=True))
    kind = classify_quotient(Q)
    if not kind.is_monoid:
        return failed(check, None, "quotient has no identity element")
    if not kind.is_commutative:
        return failed(
            check,
            None,
            "quotient monoid not commutative; commutativity asserted beyond the monoid claim",
        )
    ident = P.classes()[kind.identity_class]
    if ident.members != A.members:
        x = min(ident.members ^ A.members)
        return failed(
            check,
            (("x", x),),
            f"separator intersection {format_subset(A)} is not the identity class "
            f"{format_subset(ident)}",
        )
    return passed(check, f"identity class {format_subset(A)}")


def verify_theorem2_converse(
    S: FiniteSemigroup, sigma: Congruence, permutation_witness: PermutationIdentity
) -> CheckReport:
    """Every monoid congruence of a permutative semigroup comes from its
    own classes: separators intersect in the identity class and the
    induced congruence is the original."""
    check = "theorem2-converse"
    if sigma.ambient != S.order:
        raise AmbientMismatch(S.order, sigma.ambient)
    bad = _witness_holds(S, permutation_witness, check)
    if bad is not None:
        return bad
    ok, w = is_congruence(S, sigma)
    if not ok:
        return unmet(check, "not a congruence", tuple(zip("abc", w)))
    Q = quotient(S, sigma)
    kind = classify_quotient(Q)
    if not kind.is_monoid:
        return unmet(check, "quotient is not a monoid")
    classes = sigma.classes()
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


def verify_corollary2(
    S: FiniteSemigroup, A: ElementSet, permutation_witness: PermutationIdentity
) -> CheckReport:
    """Under a verified permutation identity, the separator of any
    subset (no mediality needed) is empty or a reflexive unitary
    subsemigroup."""
    check = "corollary2"
    if A.ambient != S.order:
        raise AmbientMismatch(S.order, A.ambient)
    bad = _witness_holds(S, permutation_witness, check)
    if bad is not None:
        return bad
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
    return passed(check, f"separator {format_subset(T)}")


def parse_permutation(text: str) -> PermutationIdentity:
    """Parse the one-line literal "perm 1 3 2" (1-based images)."""
    parts = text.split()
    if not parts or parts[0] != "perm":
        raise ValueError(f"expected 'perm i1 i2 ...', got {text!r}")
    try:
        images = [int(p) for p in parts[1:]]
    except ValueError:
        raise ValueError(f"non-integer image in {text!r}") from None
    return PermutationIdentity.of(images)


def format_permutation(ident: PermutationIdentity) -> str:
    return "perm " + " ".join(str(p) for p in ident.perm)
