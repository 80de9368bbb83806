#!/usr/bin/env python3
"""
Walk Counting Module

Three independent ways of counting the walks of length i that end in an
argument:

- enumerate_walks: materializes every walk (test oracle, capped)
- count_recurrence: T_1(v) = |N(v)|, T_{i+1}(v) = sum of T_i over N(v)
- count_matrix: column sum of the v-column of M^i

Walks are vertex sequences (z_1, ..., y, x); edges are implicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .aaf import ArgFramework, adjacency_matrix
from .config.settings import get_settings
from .exceptions import EnumerationCapError, UnknownArgumentError
from .linalg import ONE, RatVector, column_sum, column_sums, mat_mul, mat_pow, vec_mat
from .logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertices; a walk of length i has i + 1 vertices."""
    vertices: Tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoint(self) -> str:
        return self.vertices[-1]

    def __str__(self) -> str:
        return "(" + ",".join(self.vertices) + ")"


@dataclass(frozen=True)
class WalkCountTable:
    """
    Walk counts per argument and length.

    ``counts[j][i - 1]`` is the number of walks of length ``i`` ending in
    ``arguments[j]``, for 1 <= i <= max_length.
    """
    arguments: Tuple[str, ...]
    max_length: int
    counts: Tuple[Tuple[int, ...], ...]

    def row(self, v: str) -> Tuple[int, ...]:
        return self.counts[self._position(v)]

    def count(self, v: str, i: int) -> int:
        if not 1 <= i <= self.max_length:
            raise IndexError(f"length {i} outside 1..{self.max_length}")
        return self.counts[self._position(v)][i - 1]

    def _position(self, v: str) -> int:
        try:
            return self.arguments.index(v)
        except ValueError:
            raise UnknownArgumentError(v) from None


def _in_neighbours(f: ArgFramework) -> List[List[int]]:
    """Attacker indices of every argument, in stored order."""
    preds: List[List[int]] = [[] for _ in f.arguments]
    for attacker, target in f.sorted_attacks():
        preds[f.index(target)].append(f.index(attacker))
    return preds


def count_recurrence(f: ArgFramework, up_to: int) -> WalkCountTable:
    """
    Walk counts for all arguments and lengths 1..up_to via the T_i recurrence.

    One vector of counts is kept per level; level i + 1 is the sum of level i
    over the in-neighbours.
    """
    if up_to < 1:
        raise ValueError(f"walk length bound must be at least 1, got {up_to}")
    preds = _in_neighbours(f)
    level = [len(p) for p in preds]
    levels = [level]
    for _ in range(up_to - 1):
        level = [sum(level[y] for y in p) for p in preds]
        levels.append(level)
    counts = tuple(tuple(levels[i][j] for i in range(up_to)) for j in range(len(f)))
    logger.debug(f"Computed walk counts up to length {up_to} for {len(f)} arguments")
    return WalkCountTable(f.arguments, up_to, counts)


def count_matrix(f: ArgFramework, v: str, i: int) -> int:
    """Number of walks of length i ending in v, read off as M^i[v]."""
    col = f.index(v)
    if i < 1:
        raise ValueError(f"walk length must be at least 1, got {i}")
    total = column_sum(mat_pow(adjacency_matrix(f), i), col)
    return total.numerator


def iter_column_sums(f: ArgFramework, k: int) -> Iterator[Tuple[int, ...]]:
    """
    Column sums of M, M^2, ..., M^k in stored argument order, one level at a time.

    Only the vector of column sums is carried from one power to the next: the
    column sums of M^i are the all-ones row times M^i, so each level costs one
    vector-matrix product.
    """
    if k < 1 or len(f) == 0:
        return
    m = adjacency_matrix(f)
    sums = RatVector.row([ONE] * len(f))
    for _ in range(k):
        sums = vec_mat(sums, m)
        yield tuple(x.numerator for x in sums)


def column_sum_sequence(f: ArgFramework, k: int) -> List[Tuple[int, ...]]:
    """
    Column sums of M, M^2, ..., M^k in stored argument order.

    Entry ``[i - 1][j]`` equals the number of walks of length i ending in
    argument j.
    """
    return list(iter_column_sums(f, k))


def column_sum_sequence_by_powers(f: ArgFramework, k: int) -> List[Tuple[int, ...]]:
    """Same as column_sum_sequence, but materializing M^i by matrix products."""
    if k < 1 or len(f) == 0:
        return []
    m = adjacency_matrix(f)
    power = m
    sequence = [tuple(x.numerator for x in column_sums(power))]
    for _ in range(k - 1):
        power = mat_mul(power, m)
        sequence.append(tuple(x.numerator for x in column_sums(power)))
    return sequence


def enumerate_walks(f: ArgFramework, v: str, i: int, cap: Optional[int] = None) -> List[Walk]:
    """
    Every walk of length i ending in v.

    The walks are materialized, so the result may be exponential in i. The
    number of walks is computed first; if it exceeds ``cap`` (default from
    settings) nothing is built.

    Raises:
        UnknownArgumentError: if v is not an argument of f
        EnumerationCapError: if there are more than ``cap`` walks
    """
    target = f.index(v)
    if i < 1:
        raise ValueError(f"walk length must be at least 1, got {i}")
    if cap is None:
        cap = get_settings().walk_enumeration_cap

    required = count_recurrence(f, i).counts[target][i - 1]
    if required > cap:
        logger.warning(f"Refusing to enumerate {required} walks of length {i} ending in {v} (cap {cap})")
        raise EnumerationCapError(cap, required)

    preds = _in_neighbours(f)
    names = f.arguments
    frontier: List[Tuple[int, ...]] = [(target,)]
    for _ in range(i):
        frontier = [(y,) + walk for walk in frontier for y in preds[walk[0]]]
    logger.debug(f"Enumerated {len(frontier)} walks of length {i} ending in {v}")
    return [Walk(tuple(names[x] for x in walk)) for walk in frontier]


def enumerate_walks_up_to(f: ArgFramework, v: str, k: int, cap: Optional[int] = None) -> List[Walk]:
    """
    Every walk of length 1..k ending in v, shortest first.

    ``cap`` bounds the total over all lengths.

    Raises:
        UnknownArgumentError: if v is not an argument of f
        EnumerationCapError: if there are more than ``cap`` walks in total
    """
    target = f.index(v)
    if k < 1:
        raise ValueError(f"walk length must be at least 1, got {k}")
    if cap is None:
        cap = get_settings().walk_enumeration_cap

    required = sum(count_recurrence(f, k).counts[target])
    if required > cap:
        logger.warning(f"Refusing to enumerate {required} walks of length at most {k} ending in {v} (cap {cap})")
        raise EnumerationCapError(cap, required)
    return [w for i in range(1, k + 1) for w in enumerate_walks(f, v, i, cap=cap)]


def matrix_counts(f: ArgFramework, v: str, k: int) -> Sequence[int]:
    """Matrix back-end counts of v for lengths 1..k."""
    col = f.index(v)
    return [sums[col] for sums in column_sum_sequence(f, k)]
