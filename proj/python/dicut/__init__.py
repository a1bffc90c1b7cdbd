"""Directed cut covers of digraphs.

Constructive covers (antichain codes over a greedy coloring, the degeneracy
split, the five-cut good-coloring algorithm), exact minimization by
backtracking search, DIMACS CNF export, and the witness instance builders.
"""

from ._dicut import *  # noqa: F401,F403
from ._dicut import __doc__ as _core_doc  # noqa: F401
