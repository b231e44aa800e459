#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Abelianization of finite presentations.

The abelianization of < X | R > is the cokernel of the relation matrix, whose
row for a relator holds the exponent sum of each generator. Its Smith normal
form gives the Betti number (the count of generators minus the rank) and the
torsion coefficients (the diagonal entries above 1).
"""

from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Iterable, List, Tuple

from loguru import logger

from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.exact_linalg import IntMatrix
from grouprank_mcp.exact_linalg import snf
from grouprank_mcp.presentation import Presentation


@dataclass(frozen=True)
class AbelianInvariants:
    """
    A finitely generated abelian group Z^betti + Z/t_1 + ... + Z/t_k with
    t_1 | t_2 | ... | t_k and every t_i >= 2.
    """

    betti: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise GroupRankError(f"negative Betti number {self.betti}", ErrorCode.VALIDATION_ERROR)
        if not is_divisibility_chain(self.torsion):
            raise GroupRankError(
                f"torsion {list(self.torsion)} is not a divisibility chain of integers >= 2",
                ErrorCode.VALIDATION_ERROR,
            )

    @property
    def rank(self) -> int:
        """Minimal number of generators of the abelian group."""
        return self.betti + len(self.torsion)

    def direct_sum(self, other: "AbelianInvariants") -> "AbelianInvariants":
        return AbelianInvariants(
            self.betti + other.betti,
            invariant_factor_form(self.torsion + other.torsion),
        )

    def describe(self) -> str:
        """Render as ``Z^2 x C2 x C4``; the trivial group is ``1``."""
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"C{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "1"

    def to_dict(self) -> Dict[str, Any]:
        return {"betti": self.betti, "torsion": list(self.torsion)}


def is_divisibility_chain(factors: Iterable[int]) -> bool:
    factors = list(factors)
    if any(f < 2 for f in factors):
        return False
    return all(b % a == 0 for a, b in zip(factors, factors[1:]))


def invariant_factor_form(factors: Iterable[int]) -> Tuple[int, ...]:
    """
    Normalize cyclic orders into invariant factors.

    Z/a + Z/b is isomorphic to Z/gcd(a,b) + Z/lcm(a,b); applying that to any
    pair that does not divide the other terminates in a divisibility chain.

    Args:
        factors: Positive orders of cyclic groups, in any order.

    Returns:
        Tuple[int, ...]: The divisibility chain, with trivial factors dropped.
    """
    chain = sorted(f for f in factors if f != 1)
    if any(f < 1 for f in chain):
        raise GroupRankError(f"cyclic orders must be positive, got {chain}", ErrorCode.VALIDATION_ERROR)
    changed = not is_divisibility_chain(chain)
    while changed:
        changed = False
        for i in range(len(chain)):
            for j in range(i + 1, len(chain)):
                a, b = chain[i], chain[j]
                if b % a:
                    g = gcd(a, b)
                    chain[i], chain[j] = g, a // g * b
                    changed = True
        chain = sorted(f for f in chain if f != 1)
    return tuple(chain)


def relation_matrix(presentation: Presentation) -> IntMatrix:
    """
    Exponent-sum matrix: one row per relator, one column per generator.

    Args:
        presentation: The presentation to abelianize.

    Returns:
        IntMatrix: relators x generators matrix of exponent sums.
    """
    n = presentation.generator_count
    rows = [relator.exponent_sums(n) for relator in presentation.relators]
    return IntMatrix.from_rows(rows, n)


def abelianize(presentation: Presentation) -> AbelianInvariants:
    """
    Betti number and torsion coefficients of the presented group's abelianization.

    Args:
        presentation: Any finite presentation.

    Returns:
        AbelianInvariants: betti = generators - rank, torsion = diagonal entries > 1.
    """
    result = snf(relation_matrix(presentation))
    betti = presentation.generator_count - result.rank
    torsion = tuple(d for d in result.diag if d > 1)
    logger.debug(f"Abelianized {presentation.generator_count} generators: betti={betti}, torsion={list(torsion)}")
    return AbelianInvariants(betti, torsion)


def torsion_primes_avoided(invariants: AbelianInvariants, primes: Iterable[int]) -> List[int]:
    """Primes from the list that divide no torsion coefficient."""
    return [p for p in primes if all(t % p for t in invariants.torsion)]
