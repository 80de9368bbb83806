#!/usr/bin/env python3
"""
Discussion-Based Ranking

The discussion count of an argument x is the vector whose i-th entry is the
number of walks of length i ending in x, negated for odd i. Arguments are
ranked by comparing these vectors lexicographically, larger first.

Two arguments whose counts agree for every length up to 2|A| - 1 agree for
every length, so all decisions below scan at most that many powers of the
adjacency matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from .aaf import ArgFramework, is_acyclic
from .exceptions import UnknownArgumentError
from .logging_config import get_logger
from .walks import column_sum_sequence, iter_column_sums

logger = get_logger(__name__)


class Relation(str, enum.Enum):
    STRICTLY_STRONGER = "strictly-stronger"
    EQUIVALENT = "equivalent"
    STRICTLY_WEAKER = "strictly-weaker"

    def mirrored(self) -> "Relation":
        if self is Relation.STRICTLY_STRONGER:
            return Relation.STRICTLY_WEAKER
        if self is Relation.STRICTLY_WEAKER:
            return Relation.STRICTLY_STRONGER
        return self


@dataclass(frozen=True)
class DisPrefix:
    """First ``length`` entries of the discussion count of ``argument``."""
    argument: str
    values: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.values)

    def sign_pattern_holds(self) -> bool:
        """Odd lengths are <= 0, even lengths >= 0 (values are 1-based)."""
        return all((v <= 0) if i % 2 else (v >= 0) for i, v in enumerate(self.values, 1))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class CompareOutcome:
    """
    Result of comparing two arguments.

    ``deciding_index`` is the smallest length at which the walk counts
    differ; it is None exactly when the arguments are equivalent.
    """
    relation: Relation
    deciding_index: Optional[int] = None

    def mirrored(self) -> "CompareOutcome":
        return CompareOutcome(self.relation.mirrored(), self.deciding_index)


@dataclass(frozen=True)
class RankResult:
    """Equivalence classes, strongest first; ties keep the stored argument order."""
    classes: Tuple[Tuple[str, ...], ...]
    prefixes: Mapping[str, DisPrefix] = field(default_factory=dict, compare=False)

    def position(self, x: str) -> int:
        """Index of the class containing ``x`` (0 is the strongest)."""
        for i, members in enumerate(self.classes):
            if x in members:
                return i
        raise UnknownArgumentError(x)

    def class_of(self, x: str) -> Tuple[str, ...]:
        return self.classes[self.position(x)]

    def relation(self, a: str, b: str) -> Relation:
        pa, pb = self.position(a), self.position(b)
        if pa < pb:
            return Relation.STRICTLY_STRONGER
        if pa > pb:
            return Relation.STRICTLY_WEAKER
        return Relation.EQUIVALENT

    def arguments(self) -> List[str]:
        return [x for members in self.classes for x in members]

    def render(self) -> str:
        """Text form such as ``a > g > c > {b,d,e} > f``."""
        parts = [members[0] if len(members) == 1 else "{" + ",".join(members) + "}" for members in self.classes]
        return " > ".join(parts)

    def __str__(self) -> str:
        return self.render()


def prefix_bound(f: ArgFramework) -> int:
    """Number of lengths that decide every comparison in ``f``: 2|A| - 1."""
    return max(2 * len(f) - 1, 0)


def _signed(i: int, count: int) -> int:
    return -count if i % 2 else count


def dis_prefix(f: ArgFramework, x: str, k: int) -> DisPrefix:
    """
    Discussion count of ``x`` up to length ``k``, from matrix column sums.

    Raises:
        UnknownArgumentError: if ``x`` is not an argument of ``f``
    """
    col = f.index(x)
    if k < 1:
        raise ValueError(f"prefix length must be at least 1, got {k}")
    sums = column_sum_sequence(f, k)
    return DisPrefix(x, tuple(_signed(i, level[col]) for i, level in enumerate(sums, 1)))


def _column_sums(f: ArgFramework) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    """(i, column sums of M^i) for i = 1 .. prefix_bound(f)."""
    return enumerate(iter_column_sums(f, prefix_bound(f)), 1)


def compare(f: ArgFramework, a: str, b: str) -> CompareOutcome:
    """
    Compare ``a`` with ``b`` in a single scan over M, M^2, ..., M^(2|A|-1).

    At the first length i where the column sums differ, an odd i favours the
    smaller sum and an even i the larger one.

    Raises:
        UnknownArgumentError: if ``a`` or ``b`` is not an argument of ``f``
    """
    ia, ib = f.index(a), f.index(b)
    if ia == ib:
        return CompareOutcome(Relation.EQUIVALENT)
    for i, sums in _column_sums(f):
        sa, sb = sums[ia], sums[ib]
        if sa != sb:
            a_wins = sa < sb if i % 2 else sa > sb
            logger.debug(f"{a} vs {b} decided at length {i}: {sa} vs {sb}")
            relation = Relation.STRICTLY_STRONGER if a_wins else Relation.STRICTLY_WEAKER
            return CompareOutcome(relation, i)
    return CompareOutcome(Relation.EQUIVALENT)


def stronger_dis(f: ArgFramework, a: str, b: str) -> bool:
    """
    True iff ``a`` is at least as strong as ``b``.

    Iterates i = 1 .. 2|A| - 1; the first length with differing column sums
    decides by parity, and if none differs the arguments are equivalent.
    """
    return compare(f, a, b).relation is not Relation.STRICTLY_WEAKER


def equiv_dis(f: ArgFramework, a: str, b: str) -> bool:
    """True iff M^i[a] = M^i[b] for every 1 <= i <= 2|A| - 1."""
    ia, ib = f.index(a), f.index(b)
    return all(sums[ia] == sums[ib] for _, sums in _column_sums(f))


def full_ranking(f: ArgFramework) -> RankResult:
    """
    Rank every argument of ``f``.

    All discussion-count prefixes of length 2|A| - 1 come from one shared
    sequence of column-sum vectors; arguments are sorted by descending
    prefix and equal prefixes form a class.
    """
    if len(f) == 0:
        return RankResult(())
    k = prefix_bound(f)
    sums = column_sum_sequence(f, k)
    prefixes: Dict[str, DisPrefix] = {
        x: DisPrefix(x, tuple(_signed(i, level[col]) for i, level in enumerate(sums, 1)))
        for col, x in enumerate(f.arguments)
    }
    # sorted() is stable with reverse=True, so ties keep the stored order
    ordered = sorted(f.arguments, key=lambda x: prefixes[x].values, reverse=True)
    classes: List[List[str]] = []
    for x in ordered:
        if classes and prefixes[classes[-1][0]].values == prefixes[x].values:
            classes[-1].append(x)
        else:
            classes.append([x])
    logger.debug(f"Ranked {len(f)} arguments into {len(classes)} classes using prefixes of length {k}")
    return RankResult(tuple(tuple(c) for c in classes), prefixes)


def finite_dis_vector(f: ArgFramework, x: str) -> DisPrefix:
    """
    The complete discussion count of ``x`` in an acyclic framework.

    Without cycles no walk is longer than |A| - 1, so the vector is zero from
    length |A| on and the prefix of length |A| holds all of it.

    Raises:
        ValueError: if ``f`` has a cycle
    """
    if not is_acyclic(f):
        raise ValueError("the discussion count is only finitely supported for acyclic frameworks")
    return dis_prefix(f, x, len(f))
