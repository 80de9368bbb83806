"""
dbs_rank: discussion-based ranking of abstract argumentation frameworks.

Arguments are compared by the number of walks of each length that end in
them. Two exact back-ends decide the comparisons: bounded powering of the
adjacency matrix, and equivalence of weighted automata over the rationals.
"""

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "aaf",
    "linalg",
    "walks",
    "qautomaton",
    "reduction",
    "ranking",
]
