"""Error types raised by dbs_rank."""

from typing import Optional


class DbsError(Exception):
    """Base class for all dbs_rank errors."""


class FrameworkParseError(DbsError, ValueError):
    """An APX or TGF document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownArgumentError(DbsError, KeyError):
    """An argument (vertex) name is not part of the framework."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self) -> str:
        return f"unknown argument {self.name!r}"


class DimensionError(DbsError, ValueError):
    """Operand shapes of a matrix or vector operation do not fit."""


class EnumerationCapError(DbsError):
    """Walk enumeration would materialize more walks than allowed."""

    def __init__(self, cap: int, required: int):
        self.cap = cap
        self.required = required
        super().__init__(f"enumeration needs {required} walks, cap is {cap}")


class AlphabetMismatchError(DbsError, ValueError):
    """Two automata are combined but do not share their alphabet."""


class AutomatonFormatError(DbsError, ValueError):
    """An automaton document is malformed."""


class UnknownSymbolError(DbsError, KeyError):
    """A word contains a symbol outside the automaton's alphabet."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(symbol)

    def __str__(self) -> str:
        return f"unknown symbol {self.symbol!r}"


class BackendMismatchError(DbsError):
    """The matrix and automata back-ends returned different verdicts."""
