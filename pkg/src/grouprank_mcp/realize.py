#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Explicit groups with prescribed co-rank, Betti number and rank.

A triple (c, b, r) is realized by some finitely presented group exactly when
c = b = 0, or 1 <= c <= b <= r. The witness is

    Z^{b_1} * ... * Z^{b_c} * C(2) * ... * C(2)      (r - b copies of C(2))

with b_1 + ... + b_c = b and every b_i >= 1. It is torsion-free iff b = r.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from grouprank_mcp.abelian import abelianize
from grouprank_mcp.calculus import FiniteAbelian
from grouprank_mcp.calculus import FreeAbelian
from grouprank_mcp.calculus import GroupExpr
from grouprank_mcp.calculus import free_product_of
from grouprank_mcp.calculus import invariants
from grouprank_mcp.calculus import is_torsion_free
from grouprank_mcp.calculus import to_presentation
from grouprank_mcp.config import DEFAULT_GENERATOR_PREFIX
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.errors import InadmissibleTripleError
from grouprank_mcp.errors import VerificationError
from grouprank_mcp.presentation import Presentation


@dataclass(frozen=True)
class TripleRequest:
    """Requested (corank, betti, rank)."""

    c: int
    b: int
    r: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.c, self.b, self.r

    def to_dict(self) -> Dict[str, int]:
        return {"c": self.c, "b": self.b, "r": self.r}


def violations(t: TripleRequest) -> List[str]:
    """
    Inequalities the triple breaks, in a fixed order; empty when admissible.
    """
    found = []
    if min(t.c, t.b, t.r) < 0:
        found.append("corank, b and r must be nonnegative")
        return found
    if t.c == 0 and t.b == 0:
        return found
    if t.c == 0:
        found.append("b ≥ 1 requires corank ≥ 1")
    if t.c > t.b:
        found.append("corank ≤ b")
    if t.b > t.r:
        found.append("b ≤ r")
    return found


def validate(t: TripleRequest) -> bool:
    """True exactly when c = b = 0 or 1 <= c <= b <= r."""
    return not violations(t)


def canonical_parts(c: int, b: int) -> List[int]:
    """b - c + 1 followed by c - 1 ones."""
    if c == 0:
        return []
    return [b - c + 1] + [1] * (c - 1)


def _check_parts(t: TripleRequest, parts: Sequence[int]) -> List[int]:
    parts = list(parts)
    if len(parts) != t.c or sum(parts) != t.b or any(p < 1 for p in parts):
        raise GroupRankError(
            f"parts {parts} must be {t.c} positive integers summing to {t.b}",
            ErrorCode.VALIDATION_ERROR,
        )
    return parts


def realize(t: TripleRequest, parts: Optional[Sequence[int]] = None) -> GroupExpr:
    """
    Witness expression for an admissible triple.

    Args:
        t: The requested triple.
        parts: Optional split of b into c positive ranks for the free abelian
            factors; defaults to ``canonical_parts``.

    Returns:
        GroupExpr: Z^{b_1} * ... * Z^{b_c} followed by r - b copies of C(2);
        the trivial group for (0, 0, 0).

    Raises:
        InadmissibleTripleError: If the triple violates the constraints.
    """
    problems = violations(t)
    if problems:
        raise InadmissibleTripleError(problems)
    parts = canonical_parts(t.c, t.b) if parts is None else _check_parts(t, parts)
    atoms = [FreeAbelian(p) for p in parts] + [FiniteAbelian((2,))] * (t.r - t.b)
    expr = free_product_of(*atoms)
    logger.debug(f"Realized {t.as_tuple()} as {expr}")
    return expr


def realize_presentation(
    t: TripleRequest,
    parts: Optional[Sequence[int]] = None,
    prefix: str = DEFAULT_GENERATOR_PREFIX,
) -> Presentation:
    """Finite presentation of the witness, generators g1, g2, ... in atom order."""
    return to_presentation(realize(t, parts), prefix)


def verify_realization(t: TripleRequest, parts: Optional[Sequence[int]] = None) -> Dict[str, Any]:
    """
    Re-derive the triple of the witness two ways and compare with the request.

    The calculus gives (corank, betti, rank); Smith normal form of the emitted
    presentation gives betti, the generator count and the torsion.

    Returns:
        Dict[str, Any]: Both computations and the agreement flag.

    Raises:
        VerificationError: If any recomputed value differs from the request.
    """
    expr = realize(t, parts)
    presentation = to_presentation(expr)
    triple = invariants(expr)
    abelian = abelianize(presentation)
    torsion_free = is_torsion_free(expr)

    expected_torsion = [2] * (t.r - t.b)
    checks = {
        "calculus_triple": triple.as_tuple() == t.as_tuple(),
        "snf_betti": abelian.betti == t.b,
        "generator_count": presentation.generator_count == t.r,
        "torsion": list(abelian.torsion) == expected_torsion,
        "torsion_free": torsion_free == (t.b == t.r),
    }
    report = {
        "calculus": triple.to_dict(),
        "snf": {
            "betti": abelian.betti,
            "generators": presentation.generator_count,
            "torsion": list(abelian.torsion),
        },
        "torsion_free": torsion_free,
        "checks": checks,
        "verified": all(checks.values()),
    }
    if not report["verified"]:
        failed = [name for name, ok in checks.items() if not ok]
        raise VerificationError(f"realization of {t.as_tuple()} failed checks: {', '.join(failed)}", report)
    return report
