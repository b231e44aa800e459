#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Report builders shared by the command line and the MCP server.

Every report is a plain dict of ints, bools, strings and lists, built in a
fixed key order so that identical inputs serialize identically.
"""

from typing import Any, Dict, Optional, Sequence

from loguru import logger

from grouprank_mcp.abelian import abelianize
from grouprank_mcp.abelian import torsion_primes_avoided
from grouprank_mcp.calculus import abelian_type
from grouprank_mcp.calculus import format_expression
from grouprank_mcp.calculus import invariants
from grouprank_mcp.calculus import is_torsion_free
from grouprank_mcp.calculus import isotropy_bounds
from grouprank_mcp.calculus import to_presentation
from grouprank_mcp.config import DEFAULT_BUDGET
from grouprank_mcp.config import DEFAULT_PRIMES
from grouprank_mcp.errors import VerificationError
from grouprank_mcp.oracle import agreement_primes
from grouprank_mcp.oracle import count_homs_table
from grouprank_mcp.parser import parse_expression
from grouprank_mcp.parser import parse_presentation
from grouprank_mcp.presentation import format_presentation
from grouprank_mcp.realize import TripleRequest
from grouprank_mcp.realize import canonical_parts
from grouprank_mcp.realize import realize
from grouprank_mcp.realize import verify_realization
from grouprank_mcp.realize import violations

NO_AVOIDING_PRIME = "no supplied prime avoids torsion"


def betti_report(text: str) -> Dict[str, Any]:
    """
    Betti number, torsion and rank bounds of a presented group.

    The rank of an arbitrary presented group is not computable, so only the
    interval [betti, generators] is reported.
    """
    presentation = parse_presentation(text)
    abelian = abelianize(presentation)
    return {
        "command": "betti",
        "input": text.strip(),
        "generators": presentation.generator_count,
        "relators": presentation.relator_count,
        "betti": abelian.betti,
        "torsion": list(abelian.torsion),
        "abelianization": abelian.describe(),
        "rank_bounds": [abelian.betti, presentation.generator_count],
    }


def check_report(text: str, expression: bool = False) -> Dict[str, Any]:
    """Parse-only validation of a presentation or, with expression=True, an expression."""
    if expression:
        expr = parse_expression(text)
        return {
            "command": "check",
            "kind": "expression",
            "input": text.strip(),
            "valid": True,
            "normalized": format_expression(expr),
        }
    presentation = parse_presentation(text)
    return {
        "command": "check",
        "kind": "presentation",
        "input": text.strip(),
        "valid": True,
        "generators": presentation.generator_count,
        "relators": presentation.relator_count,
        "normalized": format_presentation(presentation),
    }


def expression_report(text: str) -> Dict[str, Any]:
    """Co-rank, Betti number, rank, isotropy interval and torsion-freeness of an expression."""
    expr = parse_expression(text)
    triple = invariants(expr)
    low, high = isotropy_bounds(expr)
    return {
        "command": "expr",
        "input": text.strip(),
        "expression": format_expression(expr),
        "corank": triple.corank,
        "betti": triple.betti,
        "rank": triple.rank,
        "torsion": list(abelian_type(expr).torsion),
        "isotropy": [low, high],
        "torsion_free": is_torsion_free(expr),
    }


def realize_report(
    c: int,
    b: int,
    r: int,
    parts: Optional[Sequence[int]] = None,
    emit_expression: bool = True,
    emit_presentation: bool = True,
    verify: bool = False,
) -> Dict[str, Any]:
    """
    Witness for (c, b, r), or a rejection listing the violated inequalities.

    Raises:
        VerificationError: With verify=True, if the witness does not check out.
    """
    request = TripleRequest(c, b, r)
    problems = violations(request)
    report: Dict[str, Any] = {
        "command": "realize",
        "request": request.to_dict(),
        "admissible": not problems,
    }
    if problems:
        report["violations"] = problems
        logger.info(f"Rejected {request.as_tuple()}: {problems}")
        return report

    expr = realize(request, parts)
    report["parts"] = list(parts) if parts is not None else canonical_parts(c, b)
    if emit_expression:
        report["expression"] = format_expression(expr)
    if emit_presentation:
        report["presentation"] = format_presentation(to_presentation(expr))
    report["torsion_free"] = is_torsion_free(expr)
    if verify:
        report["verification"] = verify_realization(request, parts)
    return report


def oracle_report(
    text: str,
    primes: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
    verify: bool = False,
) -> Dict[str, Any]:
    """
    Homomorphism counts per prime, the oracle Betti number and its agreement
    with Smith normal form.

    Without primes, the default primes 2..13 whose enumeration fits the budget
    are used (2 at least), extended by successive primes until one divides no
    torsion coefficient. The extension stops at that first avoiding prime
    rather than passing every torsion coefficient, which already makes the
    oracle exact and keeps the enumeration small.

    Raises:
        BudgetExceededError: If some prime needs more than budget assignments.
        VerificationError: With verify=True, if the oracle and SNF disagree.
    """
    presentation = parse_presentation(text)
    abelian = abelianize(presentation)
    if not primes:
        n = presentation.generator_count
        base = [p for p in DEFAULT_PRIMES if p**n <= budget] or [DEFAULT_PRIMES[0]]
        primes = agreement_primes(abelian.torsion, base=base)
    primes = list(primes)
    counts = count_homs_table(presentation, primes, budget)
    oracle_betti = min(h.log_dim for h in counts)
    exact = bool(torsion_primes_avoided(abelian, primes))
    report = {
        "command": "oracle",
        "input": text.strip(),
        "primes": primes,
        "budget": budget,
        "counts": [h.to_dict() for h in counts],
        "oracle_betti": oracle_betti,
        "oracle_kind": "exact" if exact else "upper_bound",
        "snf_betti": abelian.betti,
        "torsion": list(abelian.torsion),
        "agrees": oracle_betti == abelian.betti,
        "warnings": [] if exact else [NO_AVOIDING_PRIME],
    }
    if verify and not report["agrees"]:
        raise VerificationError(
            f"oracle betti {oracle_betti} disagrees with SNF betti {abelian.betti}",
            report,
        )
    return report
