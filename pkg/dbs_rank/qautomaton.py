#!/usr/bin/env python3
"""
Weighted Automata over the Rationals

A QAutomaton assigns every word over its alphabet an exact rational value:
the sum, over all runs, of initial weight times transition weights times
final weight. The module turns automata into linear representations
<alpha, M, eta>, computes a basis of the forward space
span{ alpha · M(w) | w a word }, and decides emptiness and equivalence with
a witness word on failure.

Automata are read from and written to a small TOML document:

    states = ["a", "b"]
    alphabet = ["s"]

    [initial]
    a = "1"
    b = "1"

    [final]
    a = "1"

    [[transitions]]
    from = "b"
    symbol = "s"
    to = "a"
    weight = "1"
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Deque, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import toml

from .exceptions import AlphabetMismatchError, AutomatonFormatError, DimensionError, UnknownSymbolError
from .linalg import (
    ZERO,
    EchelonSpan,
    Orientation,
    RatMatrix,
    RatVector,
    dot,
    format_rational,
    to_rational,
    vec_mat,
)
from .logging_config import get_logger

logger = get_logger(__name__)

Word = Tuple[str, ...]
Transition = Tuple[str, str, str]

EPSILON_TEXT = "ε"


def word_to_text(word: Sequence[str], empty: str = EPSILON_TEXT) -> str:
    """Concatenated symbols; the empty word is rendered as ``empty``."""
    return "".join(word) if word else empty


@dataclass(frozen=True)
class QAutomaton:
    """
    A finite automaton with rational initial, transition and final weights.

    Absent entries of ``transitions``, ``initial`` and ``final`` weigh 0;
    explicit zero weights are dropped on construction so that two automata
    with the same weights compare equal.
    """
    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    transitions: Mapping[Transition, Fraction] = field(default_factory=dict)
    initial: Mapping[str, Fraction] = field(default_factory=dict)
    final: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        states = tuple(self.states)
        alphabet = tuple(self.alphabet)
        if len(set(states)) != len(states):
            raise AutomatonFormatError("duplicate state name")
        if len(set(alphabet)) != len(alphabet):
            raise AutomatonFormatError("duplicate alphabet symbol")
        if any(not s for s in alphabet):
            raise AutomatonFormatError("alphabet symbols must be non-empty")

        known_states = set(states)
        known_symbols = set(alphabet)

        def weights(table: Mapping[str, object], what: str) -> Dict[str, Fraction]:
            out: Dict[str, Fraction] = {}
            for state, weight in table.items():
                if state not in known_states:
                    raise AutomatonFormatError(f"{what} weight for undeclared state {state!r}")
                value = _weight(weight, f"{what} weight of {state!r}")
                if value:
                    out[state] = value
            return out

        transitions: Dict[Transition, Fraction] = {}
        for (source, symbol, target), weight in self.transitions.items():
            for state in (source, target):
                if state not in known_states:
                    raise AutomatonFormatError(f"transition names undeclared state {state!r}")
            if symbol not in known_symbols:
                raise AutomatonFormatError(f"transition uses symbol {symbol!r} outside the alphabet")
            value = _weight(weight, f"weight of transition ({source},{symbol},{target})")
            if value:
                transitions[(source, symbol, target)] = value

        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "initial", weights(self.initial, "initial"))
        object.__setattr__(self, "final", weights(self.final, "final"))

    def __len__(self) -> int:
        return len(self.states)

    def weight(self, source: str, symbol: str, target: str) -> Fraction:
        return self.transitions.get((source, symbol, target), ZERO)


def _weight(value: object, what: str) -> Fraction:
    try:
        return to_rational(value)  # type: ignore[arg-type]
    except ValueError as e:
        raise AutomatonFormatError(f"{what}: {e}") from None


@dataclass(frozen=True)
class LinearRep:
    """
    Linear representation <alpha, M, eta> of an automaton with n states.

    Attributes:
        alpha: initial row vector of length n
        matrices: one n x n transition matrix per alphabet symbol
        eta: final column vector of length n
        alphabet: symbol order used by the forward-space worklist
    """
    alpha: RatVector
    matrices: Mapping[str, RatMatrix]
    eta: RatVector
    alphabet: Tuple[str, ...]

    def __post_init__(self):
        n = len(self.alpha)
        if self.alpha.orientation is not Orientation.ROW:
            raise DimensionError("alpha must be a row vector")
        if self.eta.orientation is not Orientation.COLUMN:
            raise DimensionError("eta must be a column vector")
        if len(self.eta) != n:
            raise DimensionError(f"alpha has length {n} but eta has length {len(self.eta)}")
        if set(self.matrices) != set(self.alphabet):
            raise DimensionError("transition matrices must be given for exactly the alphabet symbols")
        for symbol, m in self.matrices.items():
            if m.shape != (n, n):
                raise DimensionError(f"matrix of {symbol!r} is {m.rows}x{m.cols}, expected {n}x{n}")

    @property
    def size(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class ForwardBasis:
    """Basis vectors of the forward space and the words generating them."""
    vectors: Tuple[RatVector, ...]
    words: Tuple[Word, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @property
    def max_word_length(self) -> int:
        return max((len(w) for w in self.words), default=0)


class EquivalenceVerdict(str, enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent"


@dataclass(frozen=True)
class EquivalenceResult:
    """
    Outcome of an equivalence check.

    On NOT_EQUIVALENT, ``witness`` is a word on which the two automata differ
    and ``values`` holds their two values on it.
    """
    verdict: EquivalenceVerdict
    witness: Optional[Word] = None
    values: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def is_equivalent(self) -> bool:
        return self.verdict is EquivalenceVerdict.EQUIVALENT


def to_linear_rep(a: QAutomaton) -> LinearRep:
    """alpha[i] = I(q_i), M(s)[i, j] = delta(q_i, s, q_j), eta[i] = F(q_i) in declared state order."""
    n = len(a.states)
    position = {q: i for i, q in enumerate(a.states)}
    entries: Dict[str, List[Fraction]] = {s: [ZERO] * (n * n) for s in a.alphabet}
    for (source, symbol, target), weight in a.transitions.items():
        entries[symbol][position[source] * n + position[target]] = weight
    return LinearRep(
        alpha=RatVector.row(a.initial.get(q, ZERO) for q in a.states),
        matrices={s: RatMatrix(n, n, tuple(entries[s])) for s in a.alphabet},
        eta=RatVector.column(a.final.get(q, ZERO) for q in a.states),
        alphabet=a.alphabet,
    )


def _check_word(alphabet: Sequence[str], w: Sequence[str]) -> Word:
    word = tuple(w)
    known = set(alphabet)
    for symbol in word:
        if symbol not in known:
            raise UnknownSymbolError(symbol)
    return word


def eval_word(r: LinearRep, w: Sequence[str]) -> Fraction:
    """
    The value alpha · M(w) · eta of word ``w``; the empty word gives alpha · eta.

    Raises:
        UnknownSymbolError: if ``w`` contains a symbol outside the alphabet
    """
    word = _check_word(r.alphabet, w)
    v = r.alpha
    for symbol in word:
        v = vec_mat(v, r.matrices[symbol])
    return dot(v, r.eta)


def eval_word_automaton(a: QAutomaton, w: Sequence[str]) -> Fraction:
    """
    The value of ``w`` computed from the runs of ``a`` directly.

    Keeps, per state, the summed weight of all runs on the prefix read so far
    that end in that state, then weighs the end states with F.
    """
    word = _check_word(a.alphabet, w)
    reach: Dict[str, Fraction] = dict(a.initial)
    for symbol in word:
        step: Dict[str, Fraction] = {}
        for (source, s, target), weight in a.transitions.items():
            if s == symbol and source in reach:
                step[target] = step.get(target, ZERO) + reach[source] * weight
        reach = {q: x for q, x in step.items() if x}
    return sum((x * a.final.get(q, ZERO) for q, x in reach.items()), ZERO)


def forward_basis(r: LinearRep) -> ForwardBasis:
    """
    Basis of span{ alpha · M(w) } with the word generating each vector.

    The worklist is FIFO, seeded with the empty word; every time a candidate
    is independent of the basis so far it is appended (unreduced) and its
    one-symbol extensions are queued in alphabet order. Candidates are
    computed from the stored parent vector with a single vector-matrix
    product.
    """
    span = EchelonSpan(r.size)
    vectors: List[RatVector] = []
    words: List[Word] = []
    pending: Deque[int] = deque()

    if span.add(r.alpha):
        vectors.append(r.alpha)
        words.append(())
        pending.append(0)

    while pending:
        parent = pending.popleft()
        for symbol in r.alphabet:
            candidate = vec_mat(vectors[parent], r.matrices[symbol])
            if span.add(candidate):
                vectors.append(candidate)
                words.append(words[parent] + (symbol,))
                pending.append(len(vectors) - 1)

    logger.debug(f"Forward basis of dimension {len(vectors)} for {r.size} states")
    return ForwardBasis(tuple(vectors), tuple(words))


def is_empty(r: LinearRep) -> bool:
    """True iff every word evaluates to 0, i.e. the forward basis is orthogonal to eta."""
    return all(dot(b, r.eta) == 0 for b in forward_basis(r).vectors)


def _block_diagonal(m1: RatMatrix, m2: RatMatrix) -> RatMatrix:
    n1, n2 = m1.rows, m2.rows
    n = n1 + n2
    entries = [ZERO] * (n * n)
    for i in range(n1):
        entries[i * n:i * n + n1] = m1.row(i)
    for i in range(n2):
        start = (n1 + i) * n + n1
        entries[start:start + n2] = m2.row(i)
    return RatMatrix(n, n, tuple(entries))


def difference(r1: LinearRep, r2: LinearRep) -> LinearRep:
    """
    Representation of the series of r1 minus the series of r2.

    alpha = [alpha1, -alpha2], M(s) = diag(M1(s), M2(s)), eta = [eta1; eta2].
    The result uses r1's symbol order.

    Raises:
        AlphabetMismatchError: if the alphabets differ as sets
    """
    if set(r1.alphabet) != set(r2.alphabet):
        raise AlphabetMismatchError(
            f"alphabets differ: {sorted(r1.alphabet)} vs {sorted(r2.alphabet)}"
        )
    return LinearRep(
        alpha=RatVector.row(tuple(r1.alpha) + tuple(r2.alpha.negated())),
        matrices={s: _block_diagonal(r1.matrices[s], r2.matrices[s]) for s in r1.alphabet},
        eta=RatVector.column(tuple(r1.eta) + tuple(r2.eta)),
        alphabet=r1.alphabet,
    )


def _as_rep(a: Union[QAutomaton, LinearRep]) -> LinearRep:
    return a if isinstance(a, LinearRep) else to_linear_rep(a)


def equivalent(a1: Union[QAutomaton, LinearRep], a2: Union[QAutomaton, LinearRep]) -> EquivalenceResult:
    """
    Decide whether both automata assign every word the same value.

    On failure the witness is the word generating the first forward-basis
    vector of the difference that is not orthogonal to its final vector; its
    length is at most the total number of states minus one.

    Raises:
        AlphabetMismatchError: if the alphabets differ
    """
    r1, r2 = _as_rep(a1), _as_rep(a2)
    diff = difference(r1, r2)
    basis = forward_basis(diff)
    for vector, word in zip(basis.vectors, basis.words):
        if dot(vector, diff.eta) != 0:
            values = (eval_word(r1, word), eval_word(r2, word))
            logger.debug(f"Not equivalent: witness {word_to_text(word)!r} with values {values[0]} and {values[1]}")
            return EquivalenceResult(EquivalenceVerdict.NOT_EQUIVALENT, word, values)
    logger.debug(f"Equivalent after a forward basis of dimension {basis.dimension}")
    return EquivalenceResult(EquivalenceVerdict.EQUIVALENT)


def _require_list_of_str(doc: Mapping[str, object], key: str) -> List[str]:
    value = doc.get(key)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise AutomatonFormatError(f"'{key}' must be a list of strings")
    return value


def parse_automaton(text: str) -> QAutomaton:
    """
    Read an automaton from its TOML document.

    Raises:
        AutomatonFormatError: on invalid TOML, missing or mistyped fields,
            undeclared states or symbols and non-rational weights
    """
    try:
        doc = toml.loads(text)
    except (toml.TomlDecodeError, IndexError, ValueError) as e:
        raise AutomatonFormatError(f"invalid TOML: {e}") from None

    states = _require_list_of_str(doc, "states")
    alphabet = _require_list_of_str(doc, "alphabet")

    tables = {}
    for key in ("initial", "final"):
        table = doc.get(key, {})
        if not isinstance(table, dict):
            raise AutomatonFormatError(f"'{key}' must be a table of state weights")
        tables[key] = table

    raw_transitions = doc.get("transitions", [])
    if not isinstance(raw_transitions, list):
        raise AutomatonFormatError("'transitions' must be an array of tables")
    transitions: Dict[Transition, Fraction] = {}
    for position, entry in enumerate(raw_transitions, 1):
        if not isinstance(entry, dict):
            raise AutomatonFormatError(f"transition {position} is not a table")
        missing = [k for k in ("from", "symbol", "to", "weight") if k not in entry]
        if missing:
            raise AutomatonFormatError(f"transition {position} lacks {', '.join(missing)}")
        key = (str(entry["from"]), str(entry["symbol"]), str(entry["to"]))
        weight = _weight(entry["weight"], f"weight of transition {position}")
        if key in transitions:
            raise AutomatonFormatError(f"transition {position} repeats ({key[0]},{key[1]},{key[2]})")
        transitions[key] = weight

    automaton = QAutomaton(tuple(states), tuple(alphabet), transitions, tables["initial"], tables["final"])
    logger.debug(f"Parsed automaton with {len(states)} states and {len(transitions)} transitions")
    return automaton


def dump_automaton(a: QAutomaton) -> str:
    """TOML document for ``a``; zero weights are omitted, weights written as ``p/q`` strings."""
    doc = {
        "states": list(a.states),
        "alphabet": list(a.alphabet),
        "initial": {q: format_rational(a.initial[q]) for q in a.states if q in a.initial},
        "final": {q: format_rational(a.final[q]) for q in a.states if q in a.final},
    }
    position = {q: i for i, q in enumerate(a.states)}
    symbol_position = {s: i for i, s in enumerate(a.alphabet)}
    ordered = sorted(
        a.transitions.items(),
        key=lambda kv: (position[kv[0][0]], symbol_position[kv[0][1]], position[kv[0][2]]),
    )
    if ordered:
        doc["transitions"] = [
            {"from": p, "symbol": s, "to": q, "weight": format_rational(w)} for (p, s, q), w in ordered
        ]
    return toml.dumps(doc)


def load_automaton(path: Union[str, Path]) -> QAutomaton:
    """
    Read an automaton file (UTF-8 TOML).

    Raises:
        AutomatonFormatError: if the document is not UTF-8 or is malformed
        OSError: if the file cannot be read
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise AutomatonFormatError(f"{path.name} is not valid UTF-8: {e.reason} at byte {e.start}") from None
    return parse_automaton(text)
