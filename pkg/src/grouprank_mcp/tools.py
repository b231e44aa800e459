#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
MCP tools for GroupRank.
This module exposes the report builders as FastMCP tools.
"""

# Import built-in modules
from typing import Any, Callable, Dict, List, Optional

# Import third-party modules
from loguru import logger
from mcp.server.fastmcp import Context

# Import local modules
from grouprank_mcp.app import mcp
from grouprank_mcp.config import DEFAULT_BUDGET
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp import report as reports


async def _run_tool(name: str, build: Callable[[], Dict[str, Any]], ctx: Optional[Context]) -> Dict[str, Any]:
    try:
        if ctx:
            await ctx.report_progress(0.1)
            await ctx.info(f"Running {name}")

        result = build()

        if ctx:
            await ctx.report_progress(1.0)
            await ctx.info(f"{name} complete")
        return result

    except Exception as e:
        error_msg = f"Error in {name}: {str(e)}"
        logger.error(error_msg)
        if ctx:
            await ctx.error(error_msg)
        if isinstance(e, GroupRankError):
            raise
        raise GroupRankError(error_msg, ErrorCode.UNKNOWN_ERROR) from e


@mcp.tool()
async def compute_betti(presentation: str, ctx: Context = None) -> Dict[str, Any]:
    """
    Compute the Betti number and torsion coefficients of a finitely presented group.

    Args:
        presentation: Presentation text such as "< a, b | a b a^-1 b^-1 >".
        ctx: FastMCP context.

    Returns:
        Dict[str, Any]: betti, torsion, abelianization and rank bounds.

    Raises:
        GroupRankError: If the presentation cannot be parsed.
    """
    return await _run_tool("compute_betti", lambda: reports.betti_report(presentation), ctx)


@mcp.tool()
async def evaluate_expression(expression: str, ctx: Context = None) -> Dict[str, Any]:
    """
    Compute co-rank, Betti number and rank of a group expression.

    Args:
        expression: Expression such as "Z^2 * Z * C(2) * C(2)"; "*" is the free
            product, "x" the direct product of abelian groups.
        ctx: FastMCP context.

    Returns:
        Dict[str, Any]: corank, betti, rank, torsion, isotropy interval and torsion_free flag.

    Raises:
        GroupRankError: If the expression is malformed or outside the calculus.
    """
    return await _run_tool("evaluate_expression", lambda: reports.expression_report(expression), ctx)


@mcp.tool()
async def realize_triple(
    corank: int,
    betti: int,
    rank: int,
    parts: Optional[List[int]] = None,
    verify: bool = True,
    ctx: Context = None,
) -> Dict[str, Any]:
    """
    Build a finitely presented group with the given co-rank, Betti number and rank.

    Args:
        corank: Target co-rank c.
        betti: Target Betti number b.
        rank: Target rank r.
        parts: Optional split of b into c positive ranks.
        verify: Whether to recompute the triple from the witness.
        ctx: FastMCP context.

    Returns:
        Dict[str, Any]: Witness expression and presentation, or the violated constraints.
    """
    return await _run_tool(
        "realize_triple",
        lambda: reports.realize_report(corank, betti, rank, parts=parts, verify=verify),
        ctx,
    )


@mcp.tool()
async def oracle_check(
    presentation: str,
    primes: Optional[List[int]] = None,
    budget: int = DEFAULT_BUDGET,
    ctx: Context = None,
) -> Dict[str, Any]:
    """
    Cross-check the Betti number by counting homomorphisms to Z/p.

    Args:
        presentation: Presentation text.
        primes: Primes to count against; by default ascending primes up to one avoiding all torsion.
        budget: Largest number of assignments enumerated per prime.
        ctx: FastMCP context.

    Returns:
        Dict[str, Any]: Per-prime counts, oracle Betti number and agreement with SNF.
    """
    return await _run_tool(
        "oracle_check",
        lambda: reports.oracle_report(presentation, primes=primes, budget=budget),
        ctx,
    )
