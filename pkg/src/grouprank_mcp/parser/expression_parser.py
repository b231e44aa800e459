#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Expression parser module.
This module parses group expressions:

    expr   := dterm ("*" dterm)*
    dterm  := atom ("x" atom)*
    atom   := "Z" ("^" integer)? | "C" "(" [integer ("," integer)*] ")"
            | "F" "(" integer ")" | "(" expr ")"

``*`` is the free product and ``x`` the direct product; ``x`` binds tighter
and both associate to the left. ``Z`` alone is ``Z^1``.
"""

from typing import List

from loguru import logger

from grouprank_mcp.calculus import DirectProduct
from grouprank_mcp.calculus import FiniteAbelian
from grouprank_mcp.calculus import Free
from grouprank_mcp.calculus import FreeAbelian
from grouprank_mcp.calculus import FreeProduct
from grouprank_mcp.calculus import GroupExpr
from grouprank_mcp.calculus import format_expression
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.errors import ParseError
from grouprank_mcp.parser.base_parser import BaseParser


class ExpressionParser(BaseParser):
    """
    Parser for group expressions such as ``Z^2 * Z * C(2) * C(2)``.
    """

    TOKEN_SPEC = (
        ("STAR", r"\*"),
        ("TIMES", r"[x×]"),
        ("ZED", r"Z"),
        ("CYCLIC", r"C"),
        ("FREE", r"F"),
        ("CARET", r"\^"),
        ("LPAREN", r"\("),
        ("RPAREN", r"\)"),
        ("COMMA", r","),
        ("INT", r"\d+"),
    )

    def parse(self) -> GroupExpr:
        """
        Parse the text into a GroupExpr.

        Returns:
            GroupExpr: The expression tree.

        Raises:
            ParseError: On syntax errors or invalid atoms such as C(2,3).
        """
        expr = self._expr()
        self._expect_end()
        logger.debug(f"Parsed expression {format_expression(expr)}")
        return expr

    def _expr(self) -> GroupExpr:
        expr = self._dterm()
        while self._accept("STAR"):
            expr = FreeProduct(expr, self._dterm())
        return expr

    def _dterm(self) -> GroupExpr:
        expr = self._atom()
        while self._accept("TIMES"):
            expr = DirectProduct(expr, self._atom())
        return expr

    def _atom(self) -> GroupExpr:
        token = self._peek()
        try:
            if self._accept("ZED"):
                n = 1
                if self._accept("CARET"):
                    n = int(self._expect("INT", "integer rank").value)
                return FreeAbelian(n)
            if self._accept("CYCLIC"):
                return FiniteAbelian(tuple(self._int_list()))
            if self._accept("FREE"):
                self._expect("LPAREN", "'('")
                k = int(self._expect("INT", "integer rank").value)
                self._expect("RPAREN", "')'")
                return Free(k)
        except ParseError:
            raise
        except GroupRankError as e:
            raise ParseError(e.message, self.text, token.position) from e
        if self._accept("LPAREN"):
            expr = self._expr()
            self._expect("RPAREN", "')'")
            return expr
        self._fail("expected Z, C(...), F(...) or '('")

    def _int_list(self) -> List[int]:
        self._expect("LPAREN", "'('")
        values: List[int] = []
        if not self._at("RPAREN"):
            values.append(int(self._expect("INT", "integer").value))
            while self._accept("COMMA"):
                values.append(int(self._expect("INT", "integer").value))
        self._expect("RPAREN", "')'")
        return values


def parse_expression(text: str) -> GroupExpr:
    """Parse expression text."""
    return ExpressionParser(text).parse()
