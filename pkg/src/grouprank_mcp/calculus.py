#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Rule-based invariants for a structured class of groups.

Expressions are built from free abelian groups Z^n, finite abelian groups
C(m_1, ..., m_k) in invariant-factor form, and free groups F(k), combined by
free product and by direct product of abelian operands. On this class co-rank,
Betti number and rank are exact:

- an abelian group has co-rank 1 when it is infinite, else 0, and Betti
  number equal to its free rank;
- F(k) has co-rank, Betti number and rank all equal to k;
- co-rank, Betti number and rank all add under free product (co-rank by
  Lyndon's additivity, Betti number through the abelianization, rank by
  Grushko-Neumann).

Direct products with a non-abelian operand have no co-rank rule and are refused.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from loguru import logger

from grouprank_mcp.abelian import AbelianInvariants
from grouprank_mcp.abelian import invariant_factor_form
from grouprank_mcp.abelian import is_divisibility_chain
from grouprank_mcp.config import DEFAULT_GENERATOR_PREFIX
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.errors import UnsupportedExpressionError
from grouprank_mcp.presentation import Presentation
from grouprank_mcp.presentation import Word
from grouprank_mcp.presentation import direct_product_all
from grouprank_mcp.presentation import free_product_all
from grouprank_mcp.presentation import indexed_names


class GroupExpr:
    """Base class of group expressions."""

    def __str__(self) -> str:
        return format_expression(self)


@dataclass(frozen=True, repr=False)
class FreeAbelian(GroupExpr):
    """Z^n; n = 0 is the trivial group."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise GroupRankError(f"Z^{self.n}: rank must be nonnegative", ErrorCode.VALIDATION_ERROR)

    def __repr__(self) -> str:
        return f"FreeAbelian({self.n})"


@dataclass(frozen=True, repr=False)
class FiniteAbelian(GroupExpr):
    """Z/m_1 x ... x Z/m_k with m_1 | ... | m_k, each m_i >= 2."""

    factors: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not is_divisibility_chain(self.factors):
            raise GroupRankError(
                f"C{self.factors}: factors must be integers >= 2 each dividing the next",
                ErrorCode.VALIDATION_ERROR,
            )

    def __repr__(self) -> str:
        return f"FiniteAbelian({list(self.factors)})"


@dataclass(frozen=True, repr=False)
class Free(GroupExpr):
    """The free group F(k)."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise GroupRankError(f"F({self.k}): rank must be nonnegative", ErrorCode.VALIDATION_ERROR)

    def __repr__(self) -> str:
        return f"Free({self.k})"


@dataclass(frozen=True, repr=False)
class FreeProduct(GroupExpr):
    left: GroupExpr
    right: GroupExpr

    def __repr__(self) -> str:
        return f"FreeProduct({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class DirectProduct(GroupExpr):
    """Direct product; the calculus accepts abelian operands only."""

    left: GroupExpr
    right: GroupExpr

    def __repr__(self) -> str:
        return f"DirectProduct({self.left!r}, {self.right!r})"


TRIVIAL = FreeAbelian(0)


@dataclass(frozen=True)
class InvariantTriple:
    """(co-rank, Betti number, rank) of a group."""

    corank: int
    betti: int
    rank: int

    def __post_init__(self):
        if not satisfies_constraints(self.corank, self.betti, self.rank):
            raise GroupRankError(
                f"triple {self.as_tuple()} violates corank = betti = 0 or 1 <= corank <= betti <= rank",
                ErrorCode.VALIDATION_ERROR,
            )

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.corank, self.betti, self.rank

    def __add__(self, other: "InvariantTriple") -> "InvariantTriple":
        return InvariantTriple(self.corank + other.corank, self.betti + other.betti, self.rank + other.rank)

    def to_dict(self) -> Dict[str, Any]:
        return {"corank": self.corank, "betti": self.betti, "rank": self.rank}


def satisfies_constraints(corank: int, betti: int, rank: int) -> bool:
    if min(corank, betti, rank) < 0:
        return False
    return (corank == 0 and betti == 0) or 1 <= corank <= betti <= rank


def free_product_of(*exprs: GroupExpr) -> GroupExpr:
    """Left-nested free product of the operands; the trivial group when empty."""
    if not exprs:
        return TRIVIAL
    result = exprs[0]
    for expr in exprs[1:]:
        result = FreeProduct(result, expr)
    return result


def direct_product_of(*exprs: GroupExpr) -> GroupExpr:
    if not exprs:
        return TRIVIAL
    result = exprs[0]
    for expr in exprs[1:]:
        result = DirectProduct(result, expr)
    return result


def _operands(expr: GroupExpr, kind) -> List[GroupExpr]:
    """Operands of a chain of ``kind`` products, left to right, however deep the nesting."""
    found = []
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, kind):
            stack.append(node.right)
            stack.append(node.left)
        else:
            found.append(node)
    return found


def atoms(expr: GroupExpr) -> List[GroupExpr]:
    """Atoms in left-to-right order."""
    return _operands(expr, (FreeProduct, DirectProduct))


def is_abelian(expr: GroupExpr) -> bool:
    """Whether the expression is syntactically abelian (F(0) and F(1) count)."""
    if isinstance(expr, (FreeAbelian, FiniteAbelian)):
        return True
    if isinstance(expr, Free):
        return expr.k <= 1
    if isinstance(expr, DirectProduct):
        return all(is_abelian(operand) for operand in _operands(expr, DirectProduct))
    return False


def abelian_type(expr: GroupExpr) -> AbelianInvariants:
    """
    Abelianization of the expression, computed structurally.

    Both products abelianize to the direct sum of the operands' abelianizations,
    so only the atoms matter.

    Args:
        expr: Any expression, including non-abelian direct products.

    Returns:
        AbelianInvariants: Free rank and invariant factors.
    """
    betti = 0
    torsion: List[int] = []
    for atom in atoms(expr):
        if isinstance(atom, FreeAbelian):
            betti += atom.n
        elif isinstance(atom, FiniteAbelian):
            torsion.extend(atom.factors)
        elif isinstance(atom, Free):
            betti += atom.k
        else:
            raise GroupRankError(f"not a group expression: {atom!r}", ErrorCode.VALIDATION_ERROR)
    return AbelianInvariants(betti, invariant_factor_form(torsion))


def _abelian_triple(group: AbelianInvariants) -> InvariantTriple:
    # Quotients of abelian groups are abelian, and a free group is abelian only in rank <= 1.
    return InvariantTriple(1 if group.betti >= 1 else 0, group.betti, group.rank)


def invariants(expr: GroupExpr) -> InvariantTriple:
    """
    Co-rank, Betti number and rank of the expression's group.

    Args:
        expr: An expression whose direct products have abelian operands only.

    Returns:
        InvariantTriple: The exact (corank, betti, rank).

    Raises:
        UnsupportedExpressionError: For a direct product with a non-abelian operand.
    """
    if isinstance(expr, FreeAbelian):
        return InvariantTriple(1 if expr.n >= 1 else 0, expr.n, expr.n)
    if isinstance(expr, FiniteAbelian):
        return InvariantTriple(0, 0, len(expr.factors))
    if isinstance(expr, Free):
        return InvariantTriple(expr.k, expr.k, expr.k)
    if isinstance(expr, FreeProduct):
        total = InvariantTriple(0, 0, 0)
        for operand in _operands(expr, FreeProduct):
            total = total + invariants(operand)
        return total
    if isinstance(expr, DirectProduct):
        for operand in _operands(expr, DirectProduct):
            if not is_abelian(operand):
                raise UnsupportedExpressionError(
                    f"direct product with non-abelian operand {format_expression(operand)} "
                    "is unsupported by the co-rank calculus"
                )
        return _abelian_triple(abelian_type(expr))
    raise GroupRankError(f"not a group expression: {expr!r}", ErrorCode.VALIDATION_ERROR)


def isotropy_bounds(expr: GroupExpr) -> Tuple[int, int]:
    """Interval [corank, betti] that contains the isotropy index."""
    triple = invariants(expr)
    return triple.corank, triple.betti


def is_torsion_free(expr: GroupExpr) -> bool:
    """
    True when no nontrivial finite abelian atom occurs. Free and direct
    products of torsion-free groups are torsion-free, so on this class the
    criterion is exact.
    """
    return not any(isinstance(atom, FiniteAbelian) and atom.factors for atom in atoms(expr))


def _commutators(count: int) -> List[Word]:
    return [Word.commutator(i, j) for i in range(count) for j in range(i + 1, count)]


def _lower(expr: GroupExpr, start: int = 0) -> Presentation:
    # Generators are named x{start+1}, x{start+2}, ... so products never rename.
    if isinstance(expr, FreeAbelian):
        return Presentation(indexed_names(expr.n, "x", start), tuple(_commutators(expr.n)))
    if isinstance(expr, FiniteAbelian):
        k = len(expr.factors)
        powers = [Word(((i, m),)) for i, m in enumerate(expr.factors)]
        return Presentation(indexed_names(k, "x", start), tuple(powers + _commutators(k)))
    if isinstance(expr, Free):
        return Presentation(indexed_names(expr.k, "x", start))
    if isinstance(expr, (FreeProduct, DirectProduct)):
        kind = type(expr)
        parts = []
        offset = start
        for operand in _operands(expr, kind):
            part = _lower(operand, offset)
            offset += part.generator_count
            parts.append(part)
        return free_product_all(parts) if kind is FreeProduct else direct_product_all(parts)
    raise GroupRankError(f"not a group expression: {expr!r}", ErrorCode.VALIDATION_ERROR)


def to_presentation(expr: GroupExpr, prefix: str = DEFAULT_GENERATOR_PREFIX) -> Presentation:
    """
    Lower an expression to a finite presentation.

    Z^n gets n generators and all pairwise commutators; C(m_1..m_k) gets k
    generators, the power relators and all pairwise commutators; F(k) gets k
    free generators; products use the n-ary presentation constructors.

    Args:
        expr: Any expression.
        prefix: Generators are named prefix1, prefix2, ... in atom order.

    Returns:
        Presentation: The lowered presentation.
    """
    presentation = _lower(expr)
    logger.debug(f"Lowered {format_expression(expr)} to {presentation.generator_count} generators")
    return presentation.rename(indexed_names(presentation.generator_count, prefix))


def format_expression(expr: GroupExpr) -> str:
    """
    Canonical text: ``Z^2 * Z * C(2) * (C(2) x Z)``. Nested products of the
    same kind are flattened; ``x`` binds tighter than ``*``.
    """
    if isinstance(expr, FreeAbelian):
        return "Z" if expr.n == 1 else f"Z^{expr.n}"
    if isinstance(expr, FiniteAbelian):
        return "C(" + ",".join(str(m) for m in expr.factors) + ")"
    if isinstance(expr, Free):
        return f"F({expr.k})"
    if isinstance(expr, FreeProduct):
        return " * ".join(format_expression(e) for e in _operands(expr, FreeProduct))
    if isinstance(expr, DirectProduct):
        parts = []
        for operand in _operands(expr, DirectProduct):
            text = format_expression(operand)
            parts.append(f"({text})" if isinstance(operand, FreeProduct) else text)
        return " x ".join(parts)
    raise GroupRankError(f"not a group expression: {expr!r}", ErrorCode.VALIDATION_ERROR)
