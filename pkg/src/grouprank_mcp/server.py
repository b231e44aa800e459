"""GroupRank MCP Server.

This module provides a FastMCP server for group invariant computations.
It exposes Betti number, co-rank calculus, realization and oracle tools.
"""

# Import third-party modules
from loguru import logger

# Import local modules
from grouprank_mcp.__version__ import __version__
from grouprank_mcp.app import mcp
from grouprank_mcp.config import APP_NAME
from grouprank_mcp.log_config import setup_logging

# Registers the tools on the server.
from grouprank_mcp import tools  # noqa: F401


def main() -> None:
    """Start the MCP server."""
    # Setup logging
    setup_logging()

    logger.info(f"Starting {APP_NAME} v{__version__}")

    # Run the MCP server
    mcp.run()


if __name__ == "__main__":
    main()
