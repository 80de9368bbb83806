from pydantic import BaseModel
from typing import Dict, List, Optional


class Query(BaseModel):
    files: List[str]
    arguments: List[str] = []
    via: Optional[str] = None
    max_length: Optional[int] = None
    mode: Optional[str] = None


class BackendVerdict(BaseModel):
    backend: str
    verdict: str
    deciding_index: Optional[int] = None


class WalkCounts(BaseModel):
    argument: str
    recurrence: List[int]
    matrix: List[int]


class Report(BaseModel):
    """
    Machine-readable result of one CLI command.

    Rationals (automaton values) are carried as ``p/q`` strings; the witness
    word is its list of symbols, so the empty word is ``[]``.
    """
    command: str
    query: Query
    verdict: Optional[str] = None
    deciding_index: Optional[int] = None
    witness: Optional[List[str]] = None
    values: Optional[List[str]] = None
    classes: Optional[List[List[str]]] = None
    prefixes: Optional[Dict[str, List[int]]] = None
    walk_counts: Optional[WalkCounts] = None
    walks: Optional[List[List[str]]] = None
    backends: Optional[List[BackendVerdict]] = None
    elapsed_seconds: float
    version: str
