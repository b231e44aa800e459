"""Text parsers for presentations and group expressions."""

from grouprank_mcp.parser.base_parser import BaseParser
from grouprank_mcp.parser.expression_parser import ExpressionParser
from grouprank_mcp.parser.expression_parser import parse_expression
from grouprank_mcp.parser.presentation_parser import PresentationParser
from grouprank_mcp.parser.presentation_parser import parse_presentation
from grouprank_mcp.parser.presentation_parser import parse_presentation_file

__all__ = [
    "BaseParser",
    "ExpressionParser",
    "PresentationParser",
    "parse_expression",
    "parse_presentation",
    "parse_presentation_file",
]
