"""GroupRank.

Betti number, co-rank and rank of finitely presented groups: abelianization by
Smith normal form, a rule-based calculus for free products of abelian and free
groups, explicit realizations of admissible (corank, betti, rank) triples, and
a homomorphism-counting oracle. Also served as MCP tools.
"""

# Import local modules
from grouprank_mcp.__version__ import __version__
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.errors import ParseError

# Core types and operations
from grouprank_mcp.presentation import Presentation
from grouprank_mcp.presentation import Word
from grouprank_mcp.presentation import direct_product
from grouprank_mcp.presentation import format_presentation
from grouprank_mcp.presentation import free_product
from grouprank_mcp.exact_linalg import IntMatrix
from grouprank_mcp.exact_linalg import SnfResult
from grouprank_mcp.exact_linalg import int_rank
from grouprank_mcp.exact_linalg import snf
from grouprank_mcp.abelian import AbelianInvariants
from grouprank_mcp.abelian import abelianize
from grouprank_mcp.abelian import relation_matrix
from grouprank_mcp.calculus import DirectProduct
from grouprank_mcp.calculus import FiniteAbelian
from grouprank_mcp.calculus import Free
from grouprank_mcp.calculus import FreeAbelian
from grouprank_mcp.calculus import FreeProduct
from grouprank_mcp.calculus import GroupExpr
from grouprank_mcp.calculus import InvariantTriple
from grouprank_mcp.calculus import invariants
from grouprank_mcp.calculus import is_torsion_free
from grouprank_mcp.calculus import isotropy_bounds
from grouprank_mcp.calculus import to_presentation
from grouprank_mcp.parser import parse_expression
from grouprank_mcp.parser import parse_presentation
from grouprank_mcp.realize import TripleRequest
from grouprank_mcp.realize import realize
from grouprank_mcp.realize import realize_presentation
from grouprank_mcp.realize import validate
from grouprank_mcp.oracle import HomCount
from grouprank_mcp.oracle import betti_oracle
from grouprank_mcp.oracle import count_homs

__all__ = [
    "__version__",
    "ErrorCode",
    "GroupRankError",
    "ParseError",
    "Presentation",
    "Word",
    "direct_product",
    "format_presentation",
    "free_product",
    "IntMatrix",
    "SnfResult",
    "int_rank",
    "snf",
    "AbelianInvariants",
    "abelianize",
    "relation_matrix",
    "DirectProduct",
    "FiniteAbelian",
    "Free",
    "FreeAbelian",
    "FreeProduct",
    "GroupExpr",
    "InvariantTriple",
    "invariants",
    "is_torsion_free",
    "isotropy_bounds",
    "to_presentation",
    "parse_expression",
    "parse_presentation",
    "TripleRequest",
    "realize",
    "realize_presentation",
    "validate",
    "HomCount",
    "betti_oracle",
    "count_homs",
]
