#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Presentation parser module.
This module parses the presentation grammar:

    presentation := "<" gen-list "|" rel-list ">"
    gen-list     := empty | name ("," name)*
    rel-list     := empty | word ("," word)*
    word         := syllable+
    syllable     := name ("^" integer)?
    name         := [A-Za-z][A-Za-z0-9_']*

Syllables are separated by whitespace. Relators are freely reduced; relators
that reduce to the empty word are dropped.
"""

from typing import Dict, List, Tuple

from loguru import logger

from grouprank_mcp.parser.base_parser import BaseParser
from grouprank_mcp.presentation import Presentation
from grouprank_mcp.presentation import Word


class PresentationParser(BaseParser):
    """
    Parser for group presentations such as ``< a, b | a b a^-1 b^-1 >``.
    """

    TOKEN_SPEC = (
        ("LANGLE", r"<"),
        ("RANGLE", r">"),
        ("BAR", r"\|"),
        ("COMMA", r","),
        ("CARET", r"\^"),
        ("INT", r"[+-]?\d+"),
        ("NAME", r"[A-Za-z][A-Za-z0-9_']*"),
    )

    def parse(self) -> Presentation:
        """
        Parse the text into a Presentation.

        Returns:
            Presentation: Generators in order of declaration, reduced relators.

        Raises:
            ParseError: On syntax errors, unknown or duplicate generator names.
        """
        self._expect("LANGLE", "'<'")
        generators = self._generator_list()
        self._expect("BAR", "'|' or ','")
        lookup = {name: i for i, name in enumerate(generators)}
        relators = self._relator_list(lookup)
        self._expect("RANGLE", "'>' or ','")
        self._expect_end()

        words = tuple(w for w in relators if not w.is_empty())
        logger.debug(f"Parsed presentation with {len(generators)} generators and {len(words)} relators")
        return Presentation(tuple(generators), words)

    def _generator_list(self) -> List[str]:
        generators: List[str] = []
        if not self._at("NAME"):
            return generators
        while True:
            token = self._expect("NAME", "generator name")
            if token.value in generators:
                self._fail(f"duplicate generator name {token.value!r}", token)
            generators.append(token.value)
            if not self._accept("COMMA"):
                return generators

    def _relator_list(self, lookup: Dict[str, int]) -> List[Word]:
        relators: List[Word] = []
        if not self._at("NAME"):
            return relators
        while True:
            relators.append(self._word(lookup))
            if not self._accept("COMMA"):
                return relators

    def _word(self, lookup: Dict[str, int]) -> Word:
        syllables: List[Tuple[int, int]] = [self._syllable(lookup)]
        while self._at("NAME"):
            syllables.append(self._syllable(lookup))
        return Word.reduce(syllables)

    def _syllable(self, lookup: Dict[str, int]) -> Tuple[int, int]:
        token = self._expect("NAME", "generator name")
        if token.value not in lookup:
            self._fail(f"unknown generator {token.value!r} in relator", token)
        exponent = 1
        if self._accept("CARET"):
            number = self._expect("INT", "integer exponent")
            exponent = int(number.value)
            if exponent == 0:
                self._fail("exponent must be nonzero", number)
        return lookup[token.value], exponent


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text."""
    return PresentationParser(text).parse()


def parse_presentation_file(file_path: str) -> Presentation:
    """Parse a UTF-8 file holding one presentation."""
    return PresentationParser.from_file(file_path).parse()
