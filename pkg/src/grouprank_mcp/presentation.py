#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Finite group presentations.
This module provides the Word and Presentation value types, the canonical text
form of a presentation, and the free and direct product constructors.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError

Syllable = Tuple[int, int]


@dataclass(frozen=True)
class Word:
    """
    A freely reduced word, stored as syllables (generator index, nonzero exponent).
    Adjacent syllables never share a generator. Build words with ``Word.reduce``.
    """

    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        previous = None
        for generator, exponent in self.syllables:
            if exponent == 0:
                raise GroupRankError(f"zero exponent in word {self.syllables}", ErrorCode.VALIDATION_ERROR)
            if generator == previous:
                raise GroupRankError(f"unmerged syllables in word {self.syllables}", ErrorCode.VALIDATION_ERROR)
            previous = generator

    @classmethod
    def reduce(cls, syllables: Iterable[Syllable]) -> "Word":
        """
        Freely reduce a syllable sequence: merge neighbours on the same generator
        and drop zero exponents, cascading as cancellations expose new neighbours.

        Args:
            syllables: Any sequence of (generator index, exponent) pairs.

        Returns:
            Word: The reduced word.
        """
        stack: List[Syllable] = []
        for generator, exponent in syllables:
            if stack and stack[-1][0] == generator:
                exponent += stack.pop()[1]
            if exponent != 0:
                stack.append((generator, exponent))
        return cls(tuple(stack))

    @classmethod
    def commutator(cls, x: int, y: int) -> "Word":
        """Return x y x^-1 y^-1."""
        return cls.reduce([(x, 1), (y, 1), (x, -1), (y, -1)])

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def is_empty(self) -> bool:
        return not self.syllables

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def conjugate(self, generator: int, exponent: int = 1) -> "Word":
        """Return g w g^-1 for g = generator^exponent."""
        return Word.reduce([(generator, exponent), *self.syllables, (generator, -exponent)])

    def shifted(self, offset: int) -> "Word":
        """Return the same word with every generator index moved by offset."""
        return Word(tuple((g + offset, e) for g, e in self.syllables))

    def exponent_sums(self, n: int) -> List[int]:
        """Total exponent of each of the n generators in this word."""
        sums = [0] * n
        for generator, exponent in self.syllables:
            sums[generator] += exponent
        return sums


@dataclass(frozen=True)
class Presentation:
    """
    A finite presentation: distinct generator names and relator words over them.
    The trivial group is the presentation with no generators and no relators.
    """

    generators: Tuple[str, ...] = ()
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        seen = set()
        for name in self.generators:
            if not name:
                raise GroupRankError("empty generator name", ErrorCode.VALIDATION_ERROR)
            if name in seen:
                raise GroupRankError(f"duplicate generator name {name!r}", ErrorCode.VALIDATION_ERROR)
            seen.add(name)
        n = len(self.generators)
        for relator in self.relators:
            for generator, _ in relator:
                if not 0 <= generator < n:
                    raise GroupRankError(
                        f"generator index {generator} out of range for {n} generators",
                        ErrorCode.VALIDATION_ERROR,
                    )

    @classmethod
    def build(cls, generators: Sequence[str], relators: Iterable[Iterable[Syllable]] = ()) -> "Presentation":
        """
        Build a presentation from raw syllable lists, reducing every relator and
        dropping the ones that reduce to the empty word.
        """
        words = tuple(w for w in (Word.reduce(r) for r in relators) if not w.is_empty())
        return cls(tuple(generators), words)

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    def rename(self, names: Sequence[str]) -> "Presentation":
        """Return the same presentation with generators renamed positionally."""
        if len(names) != len(self.generators):
            raise GroupRankError(
                f"expected {len(self.generators)} names, got {len(names)}",
                ErrorCode.VALIDATION_ERROR,
            )
        return Presentation(tuple(names), self.relators)

    def with_relator_replaced(self, index: int, word: Word) -> "Presentation":
        relators = list(self.relators)
        relators[index] = word
        return Presentation(self.generators, tuple(r for r in relators if not r.is_empty()))

    def format_word(self, word: Word) -> str:
        parts = []
        for generator, exponent in word:
            name = self.generators[generator]
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return " ".join(parts)

    def __str__(self) -> str:
        return format_presentation(self)


TRIVIAL = Presentation()


def format_presentation(presentation: Presentation) -> str:
    """
    Render a presentation in the text grammar accepted by the parser.

    Args:
        presentation: The presentation to render.

    Returns:
        str: Text such as ``< a, b | a b a^-1 b^-1 >``; the trivial group is ``< | >``.
    """
    generators = ", ".join(presentation.generators)
    relators = ", ".join(presentation.format_word(w) for w in presentation.relators)
    head = f"< {generators} " if generators else "< "
    tail = f"| {relators} >" if relators else "| >"
    return head + tail


def _disjoint_names(taken: Set[str], names: Sequence[str]) -> List[str]:
    # Names already in taken get primes appended until unique; taken grows in place.
    local = set(names)
    renamed = []
    for name in names:
        if name in taken:
            candidate = name + "'"
            while candidate in taken or candidate in local:
                candidate += "'"
            name = candidate
        taken.add(name)
        renamed.append(name)
    return renamed


def _product(presentations: Iterable[Presentation], commute: bool) -> Presentation:
    # Single pass, so long chains cost time linear in their output.
    taken: Set[str] = set()
    generators: List[str] = []
    relators: List[Word] = []
    for presentation in presentations:
        offset = len(generators)
        generators.extend(_disjoint_names(taken, presentation.generators))
        relators.extend(w.shifted(offset) for w in presentation.relators)
        if commute:
            relators.extend(
                Word.commutator(x, offset + y)
                for x in range(offset)
                for y in range(presentation.generator_count)
            )
    return Presentation(tuple(generators), tuple(relators))


def free_product(p1: Presentation, p2: Presentation) -> Presentation:
    """
    Presentation of the free product: generators and relators side by side.

    Args:
        p1: Left factor.
        p2: Right factor; its generators are renamed on collision.

    Returns:
        Presentation: The free product presentation.
    """
    return _product((p1, p2), commute=False)


def direct_product(p1: Presentation, p2: Presentation) -> Presentation:
    """
    Presentation of the direct product: the free product plus the commutator
    [x, y] = x y x^-1 y^-1 for every generator x of p1 and y of p2.
    """
    return _product((p1, p2), commute=True)


def free_product_all(presentations: Iterable[Presentation]) -> Presentation:
    return _product(presentations, commute=False)


def direct_product_all(presentations: Iterable[Presentation]) -> Presentation:
    """Direct product of any number of factors; every pair of factors commutes."""
    return _product(presentations, commute=True)


def indexed_names(count: int, prefix: str = "g", start: int = 0) -> Tuple[str, ...]:
    """Names prefix{start+1} .. prefix{start+count}."""
    return tuple(f"{prefix}{i}" for i in range(start + 1, start + count + 1))
