"""Tests for the MCP tools."""

# Import built-in modules
import asyncio

# Import third-party modules
import pytest

# Import local modules
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.tools import compute_betti
from grouprank_mcp.tools import evaluate_expression
from grouprank_mcp.tools import oracle_check
from grouprank_mcp.tools import realize_triple


def test_compute_betti():
    result = asyncio.run(compute_betti("< a, b | a b a^-1 b >"))
    assert result["betti"] == 1
    assert result["torsion"] == [2]


def test_evaluate_expression():
    result = asyncio.run(evaluate_expression("Z^2 * Z * C(2) * C(2)"))
    assert (result["corank"], result["betti"], result["rank"]) == (2, 3, 5)


def test_realize_triple_verifies_by_default():
    result = asyncio.run(realize_triple(1, 2, 3))
    assert result["presentation"] == "< g1, g2, g3 | g1 g2 g1^-1 g2^-1, g3^2 >"
    assert result["verification"]["verified"] is True


def test_realize_triple_rejection():
    result = asyncio.run(realize_triple(0, 1, 1))
    assert result["admissible"] is False
    assert result["violations"] == ["b ≥ 1 requires corank ≥ 1"]


def test_oracle_check():
    result = asyncio.run(oracle_check("< a | a^6 >", primes=[2, 3, 5]))
    assert result["oracle_betti"] == 0
    assert result["agrees"] is True


def test_errors_are_group_rank_errors():
    with pytest.raises(GroupRankError) as info:
        asyncio.run(compute_betti("< a | "))
    assert info.value.code is ErrorCode.PARSING_ERROR


def test_registered_tools():
    from grouprank_mcp.app import mcp

    names = {tool.name for tool in asyncio.run(mcp.list_tools())}
    assert {"compute_betti", "evaluate_expression", "realize_triple", "oracle_check"} <= names
