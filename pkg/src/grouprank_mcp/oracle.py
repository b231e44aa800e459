#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Brute-force Betti numbers from homomorphism counts.

Homomorphisms from < X | R > to Z/p are the assignments X -> Z/p under which
every relator's exponent image vanishes mod p. There are p^d of them with
d = betti + #{torsion coefficients divisible by p}, so the least d over primes
is an upper bound on betti that is exact once some prime divides no torsion
coefficient. Relators are traversed syllable by syllable; nothing here goes
through the relation matrix.
"""

from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterable, List, Sequence

from loguru import logger
from sympy import isprime
from sympy import nextprime

from grouprank_mcp.config import DEFAULT_BUDGET
from grouprank_mcp.config import DEFAULT_PRIMES
from grouprank_mcp.errors import BudgetExceededError
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.presentation import Presentation


@dataclass(frozen=True)
class HomCount:
    """Number of homomorphisms to Z/prime, with count = prime ** log_dim."""

    prime: int
    count: int
    log_dim: int

    def to_dict(self) -> Dict[str, Any]:
        return {"prime": self.prime, "count": self.count, "log_dim": self.log_dim}


def _exact_log(count: int, prime: int) -> int:
    d, rest = 0, count
    while rest % prime == 0 and rest > 1:
        rest //= prime
        d += 1
    if rest != 1:
        raise GroupRankError(f"count {count} is not a power of {prime}", ErrorCode.VERIFICATION_FAILED)
    return d


def check_budget(presentation: Presentation, prime: int, budget: int = DEFAULT_BUDGET):
    """
    Raises:
        GroupRankError: If prime is not a prime number.
        BudgetExceededError: If prime ** generators exceeds budget.
    """
    if not isprime(prime):
        raise GroupRankError(f"modulus {prime} is not prime", ErrorCode.NOT_PRIME)
    n = presentation.generator_count
    if prime ** n > budget:
        raise BudgetExceededError(prime, n, budget)


def count_homs(presentation: Presentation, prime: int, budget: int = DEFAULT_BUDGET) -> HomCount:
    """
    Count homomorphisms to Z/prime by enumerating every generator assignment.

    Args:
        presentation: The presented group.
        prime: Order of the cyclic target.
        budget: Largest number of assignments to enumerate.

    Returns:
        HomCount: The exact count and its base-prime logarithm.
    """
    check_budget(presentation, prime, budget)
    relators = [[(g, e % prime) for g, e in word] for word in presentation.relators]
    count = 0
    for values in product(range(prime), repeat=presentation.generator_count):
        for relator in relators:
            total = 0
            for generator, exponent in relator:
                total += exponent * values[generator]
            if total % prime:
                break
        else:
            count += 1
    log_dim = _exact_log(count, prime)
    logger.debug(f"{count} homomorphisms to Z/{prime} (log_dim {log_dim})")
    return HomCount(prime, count, log_dim)


def count_homs_table(presentation: Presentation, primes: Iterable[int], budget: int = DEFAULT_BUDGET) -> List[HomCount]:
    primes = list(primes)
    for prime in primes:
        check_budget(presentation, prime, budget)
    return [count_homs(presentation, prime, budget) for prime in primes]


def betti_oracle(presentation: Presentation, primes: Sequence[int], budget: int = DEFAULT_BUDGET) -> int:
    """
    Least log_dim over the given primes: an upper bound on betti, and exact
    when one of the primes divides no torsion coefficient.

    Raises:
        GroupRankError: If primes is empty or contains a non-prime.
        BudgetExceededError: If any prime needs more than budget assignments.
    """
    if not primes:
        raise GroupRankError("betti_oracle needs at least one prime", ErrorCode.VALIDATION_ERROR)
    return min(h.log_dim for h in count_homs_table(presentation, primes, budget))


def agreement_primes(torsion: Iterable[int], base: Sequence[int] = DEFAULT_PRIMES) -> List[int]:
    """
    The base primes, extended by successive primes until the list holds one
    that divides no torsion coefficient.
    """
    torsion = list(torsion)
    primes = list(base)

    def avoids(p: int) -> bool:
        return all(t % p for t in torsion)

    while not any(avoids(p) for p in primes):
        primes.append(int(nextprime(primes[-1] if primes else 1)))
    return primes
