"""Human-readable renderers for report dictionaries."""

from grouprank_mcp.generator.text_generator import TextGenerator

__all__ = ["TextGenerator"]
