"""Main entry point for GroupRank."""

# Import local modules
from grouprank_mcp.cli import main

if __name__ == "__main__":
    main()
