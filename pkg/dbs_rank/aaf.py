#!/usr/bin/env python3
"""
Argumentation Framework Module

Data model for abstract argumentation frameworks F = (A, R), readers and
writers for the APX and TGF exchange formats, and the basic graph accessors
(attackers, adjacency matrix) the ranking back-ends are built on.

The stored argument order is the order of first declaration in the input and
fixes the row/column index of every argument in all matrices and reports.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple, Union

import networkx as nx

from .exceptions import FrameworkParseError, UnknownArgumentError
from .linalg import ONE, ZERO, RatMatrix
from .logging_config import get_logger

logger = get_logger(__name__)

Attack = Tuple[str, str]


@dataclass(frozen=True)
class ArgIndex:
    """Position of an argument in the stored order."""
    name: str
    index: int


@dataclass(frozen=True)
class ArgFramework:
    """
    Finite digraph of named arguments and attacks.

    Attributes:
        arguments: distinct, non-empty argument names in stored order
        attacks: set of (attacker, target) pairs over ``arguments``
    """
    arguments: Tuple[str, ...] = ()
    attacks: FrozenSet[Attack] = frozenset()
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        arguments = tuple(self.arguments)
        attacks = frozenset((a, b) for a, b in self.attacks)
        index: Dict[str, int] = {}
        for position, name in enumerate(arguments):
            if not isinstance(name, str) or not name:
                raise ValueError(f"argument names must be non-empty strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate argument {name!r}")
            index[name] = position
        for attacker, target in attacks:
            if attacker not in index:
                raise UnknownArgumentError(attacker)
            if target not in index:
                raise UnknownArgumentError(target)
        object.__setattr__(self, "arguments", arguments)
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        """Zero-based position of ``name`` in the stored order."""
        try:
            return self._index[name]
        except KeyError:
            raise UnknownArgumentError(name) from None

    def indices(self) -> List[ArgIndex]:
        return [ArgIndex(name, i) for i, name in enumerate(self.arguments)]

    def sorted_attacks(self) -> List[Attack]:
        """Attacks ordered by (attacker index, target index)."""
        return sorted(self.attacks, key=lambda ab: (self._index[ab[0]], self._index[ab[1]]))


# APX: facts arg(x). and att(x,y). ; '%' starts a comment
_NAME = r"[^\s(),.%]+"
APX_FACT_RE = re.compile(
    rf"\s*(?P<predicate>arg|att)\s*\(\s*(?P<first>{_NAME})\s*(?:,\s*(?P<second>{_NAME})\s*)?\)\s*\.\s*"
)


def parse_apx(text: str) -> ArgFramework:
    """
    Parse an APX document.

    Lines hold facts ``arg(<name>).`` and ``att(<a>,<b>).`` (several facts per
    line are allowed), ``%`` starts a comment, blank lines are skipped.
    Attacks may mention arguments declared further down the document.

    Raises:
        FrameworkParseError: on a syntax error, a duplicate ``arg`` declaration
            or an attack naming an undeclared argument.
    """
    arguments: List[str] = []
    declared: Set[str] = set()
    attacks: Dict[Attack, int] = {}

    for ln_no, line in enumerate(text.splitlines(), 1):
        content = line.split("%", 1)[0]
        if not content.strip():
            continue
        pos = 0
        while pos < len(content):
            if not content[pos:].strip():
                break
            m = APX_FACT_RE.match(content, pos)
            if not m:
                raise FrameworkParseError(f"cannot parse {content[pos:].strip()!r}", ln_no)
            predicate, first, second = m.group("predicate", "first", "second")
            if predicate == "arg":
                if second is not None:
                    raise FrameworkParseError(f"arg/1 takes one argument: {m.group(0).strip()!r}", ln_no)
                if first in declared:
                    raise FrameworkParseError(f"duplicate argument {first!r}", ln_no)
                declared.add(first)
                arguments.append(first)
            else:
                if second is None:
                    raise FrameworkParseError(f"att/2 takes two arguments: {m.group(0).strip()!r}", ln_no)
                if (first, second) in attacks:
                    logger.debug(f"Ignoring duplicate attack ({first},{second}) on line {ln_no}")
                else:
                    attacks[(first, second)] = ln_no
            pos = m.end()

    for (attacker, target), ln_no in attacks.items():
        for name in (attacker, target):
            if name not in declared:
                raise FrameworkParseError(f"attack ({attacker},{target}) names undeclared argument {name!r}", ln_no)

    logger.debug(f"Parsed APX framework with {len(arguments)} arguments and {len(attacks)} attacks")
    return ArgFramework(tuple(arguments), frozenset(attacks))


def parse_tgf(text: str) -> ArgFramework:
    """
    Parse a Trivial Graph Format document.

    Vertex lines (``<id> [label]``) come first, then a line ``#``, then edge
    lines (``<id> <id> [label]``). Vertex ids are the argument names; labels
    are ignored. A document without any content is the empty framework.

    Raises:
        FrameworkParseError: on a missing ``#`` separator, a malformed line, a
            duplicate vertex id or an edge with an unknown vertex id.
    """
    arguments: List[str] = []
    declared: Set[str] = set()
    attacks: Dict[Attack, None] = {}
    seen_separator = False
    seen_content = False

    for ln_no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        seen_content = True
        if stripped == "#":
            if seen_separator:
                raise FrameworkParseError("second '#' separator", ln_no)
            seen_separator = True
            continue
        tokens = stripped.split()
        if not seen_separator:
            name = tokens[0]
            if name in declared:
                raise FrameworkParseError(f"duplicate vertex id {name!r}", ln_no)
            declared.add(name)
            arguments.append(name)
        else:
            if len(tokens) < 2:
                raise FrameworkParseError(f"edge line needs two vertex ids: {stripped!r}", ln_no)
            attacker, target = tokens[0], tokens[1]
            for name in (attacker, target):
                if name not in declared:
                    raise FrameworkParseError(f"edge ({attacker},{target}) names unknown vertex id {name!r}", ln_no)
            attacks[(attacker, target)] = None

    if seen_content and not seen_separator:
        raise FrameworkParseError("missing '#' separator between vertices and edges")

    logger.debug(f"Parsed TGF framework with {len(arguments)} arguments and {len(attacks)} attacks")
    return ArgFramework(tuple(arguments), frozenset(attacks))


def to_apx(f: ArgFramework) -> str:
    """Serialize to APX: all ``arg`` facts in stored order, then the attacks."""
    lines = [f"arg({name})." for name in f.arguments]
    lines += [f"att({a},{b})." for a, b in f.sorted_attacks()]
    return "\n".join(lines) + ("\n" if lines else "")


def to_tgf(f: ArgFramework) -> str:
    """Serialize to TGF with argument names as vertex ids."""
    lines = list(f.arguments) + ["#"] + [f"{a} {b}" for a, b in f.sorted_attacks()]
    return "\n".join(lines) + "\n"


def load_framework(path: Union[str, Path]) -> ArgFramework:
    """
    Read a framework file, choosing the parser by suffix (``.tgf`` or APX otherwise).

    Raises:
        FrameworkParseError: if the file is not UTF-8 or does not parse.
        OSError: if the file cannot be read.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise FrameworkParseError(f"{path.name} is not valid UTF-8: {e.reason} at byte {e.start}") from None
    if path.suffix.lower() == ".tgf":
        return parse_tgf(text)
    return parse_apx(text)


def union(f1: ArgFramework, f2: ArgFramework) -> ArgFramework:
    """
    Name-union of two frameworks: f1's arguments first, then f2's new ones.

    Identical names denote the same argument.
    """
    seen = set(f1.arguments)
    arguments = list(f1.arguments) + [x for x in f2.arguments if x not in seen]
    return ArgFramework(tuple(arguments), f1.attacks | f2.attacks)


def union_all(frameworks: Iterable[ArgFramework]) -> ArgFramework:
    result = ArgFramework()
    for f in frameworks:
        result = union(result, f)
    return result


def index_of(f: ArgFramework, x: str) -> ArgIndex:
    return ArgIndex(x, f.index(x))


def attackers(f: ArgFramework, x: str) -> Set[str]:
    """The in-neighbours N(x) = { y | (y, x) is an attack }."""
    f.index(x)
    return {a for a, b in f.attacks if b == x}


def adjacency_matrix(f: ArgFramework) -> RatMatrix:
    """0/1 matrix M with M[i, j] = 1 iff (argument i, argument j) is an attack."""
    n = len(f)
    entries = [ZERO] * (n * n)
    for attacker, target in f.attacks:
        entries[f.index(attacker) * n + f.index(target)] = ONE
    return RatMatrix(n, n, tuple(entries))


def to_digraph(f: ArgFramework) -> nx.DiGraph:
    """networkx view of the framework with nodes inserted in stored order."""
    graph = nx.DiGraph()
    graph.add_nodes_from(f.arguments)
    graph.add_edges_from(f.sorted_attacks())
    return graph


def is_acyclic(f: ArgFramework) -> bool:
    """True iff the attack graph has no cycle (self-attacks count as cycles)."""
    return nx.is_directed_acyclic_graph(to_digraph(f))
