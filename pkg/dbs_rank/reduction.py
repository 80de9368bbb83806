#!/usr/bin/env python3
"""
Walk Counting as Automata Equivalence

For a vertex v of a digraph, the automaton built by graph_to_automaton has
one state per vertex, a single symbol ``s`` whose transitions are the edges,
initial weight 1 everywhere and final weight 1 on v alone. Its value on s^i
is the number of walks of length i ending in v, so two vertices have equal
walk counts at every length iff their automata are equivalent, and the
witness word of a failed check names the first length where they differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx

from .aaf import ArgFramework, to_digraph
from .config.settings import get_settings
from .linalg import ONE
from .logging_config import get_logger
from .qautomaton import QAutomaton, equivalent
from .ranking import CompareOutcome, Relation

logger = get_logger(__name__)

WALK_SYMBOL = "s"


@dataclass(frozen=True)
class WalkCountVerdict:
    """
    Whether two vertices have the same number of walks at every length.

    On disagreement ``first_differing_length`` is the smallest such length
    and ``counts`` holds the two walk counts there.
    """
    agree: bool
    first_differing_length: Optional[int] = None
    counts: Optional[Tuple[int, int]] = None


def restrict_to_ancestors(g: ArgFramework, v: str) -> ArgFramework:
    """
    Sub-framework induced by ``v`` and every vertex with a directed path to it.

    Vertices that cannot reach ``v`` never lie on a walk ending in ``v``, so
    walk counts of ``v`` are unchanged. The stored order is preserved.
    """
    g.index(v)
    keep = nx.ancestors(to_digraph(g), v) | {v}
    arguments = tuple(x for x in g.arguments if x in keep)
    attacks = frozenset((a, b) for a, b in g.attacks if a in keep and b in keep)
    return ArgFramework(arguments, attacks)


def graph_to_automaton(g: ArgFramework, v: str, restrict: Optional[bool] = None) -> QAutomaton:
    """
    Automaton over the single symbol ``s`` counting the walks that end in ``v``.

    Args:
        restrict: build the automaton on restrict_to_ancestors(g, v) instead of
            the whole graph; defaults to the ``restrict_to_ancestors`` setting

    Raises:
        UnknownArgumentError: if ``v`` is not a vertex of ``g``
    """
    g.index(v)
    if restrict is None:
        restrict = get_settings().restrict_to_ancestors
    if restrict:
        g = restrict_to_ancestors(g, v)
    return QAutomaton(
        states=g.arguments,
        alphabet=(WALK_SYMBOL,),
        transitions={(a, WALK_SYMBOL, b): ONE for a, b in g.attacks},
        initial={q: ONE for q in g.arguments},
        final={v: ONE},
    )


def equal_walk_count(g: ArgFramework, v: str, u: str, restrict: Optional[bool] = None) -> WalkCountVerdict:
    """
    Decide whether ``v`` and ``u`` have equal walk counts at every length.

    Raises:
        UnknownArgumentError: if ``v`` or ``u`` is not a vertex of ``g``
    """
    result = equivalent(graph_to_automaton(g, v, restrict), graph_to_automaton(g, u, restrict))
    if result.is_equivalent:
        return WalkCountVerdict(True)
    length = len(result.witness)
    count_v, count_u = (x.numerator for x in result.values)
    logger.debug(f"Walk counts of {v} and {u} differ at length {length}: {count_v} vs {count_u}")
    return WalkCountVerdict(False, length, (count_v, count_u))


def compare_via_automata(g: ArgFramework, a: str, b: str, restrict: Optional[bool] = None) -> CompareOutcome:
    """
    Compare ``a`` with ``b`` using automata equivalence instead of matrix powers.

    Equal walk counts mean equivalence; otherwise the parity of the first
    differing length decides which count is the better one.
    """
    verdict = equal_walk_count(g, a, b, restrict)
    if verdict.agree:
        return CompareOutcome(Relation.EQUIVALENT)
    i = verdict.first_differing_length
    count_a, count_b = verdict.counts
    a_wins = count_a < count_b if i % 2 else count_a > count_b
    return CompareOutcome(Relation.STRICTLY_STRONGER if a_wins else Relation.STRICTLY_WEAKER, i)
