"""Application configuration for the GroupRank MCP Server."""

# Import third-party modules
from mcp.server.fastmcp import FastMCP

# Import local modules
from grouprank_mcp.config import APP_DESCRIPTION
from grouprank_mcp.config import APP_NAME

APP_DEPENDENCIES = [
    "mcp>=1.4.1",
    "loguru>=0.7.2",
    "platformdirs>=4.2.0",
    "regex>=2022.10.31",
    "jinja2>=3.1.2",
    "sympy>=1.12",
]

# Initialize FastMCP server
mcp = FastMCP(
    name=APP_NAME,
    instructions=APP_DESCRIPTION,
    dependencies=APP_DEPENDENCIES,
)
