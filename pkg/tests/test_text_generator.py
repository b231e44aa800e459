"""Tests for the Markdown report renderer."""

# Import local modules
from grouprank_mcp.errors import InadmissibleTripleError
from grouprank_mcp.generator.text_generator import TextGenerator
from grouprank_mcp.report import betti_report
from grouprank_mcp.report import check_report
from grouprank_mcp.report import expression_report
from grouprank_mcp.report import oracle_report
from grouprank_mcp.report import realize_report


def render(report):
    return TextGenerator().generate(report)


def test_betti():
    text = render(betti_report("< a, b | a b a^-1 b >"))
    assert text.startswith("# Presentation")
    assert "abelianization: Z x C2" in text
    assert "1 ≤ rank ≤ 2" in text


def test_check():
    text = render(check_report("< a | a^2 >"))
    assert "# Check (presentation)" in text
    assert "generators: 1, relators: 1" in text
    text = render(check_report("Z * Z", expression=True))
    assert "# Check (expression)" in text
    assert "generators" not in text


def test_expression():
    text = render(expression_report("Z^2 * C(2)"))
    assert "| 1 | 2 | 3 |" in text
    assert "torsion-free: no" in text
    assert "isotropy index between 1 and 2" in text


def test_realize_with_verification():
    text = render(realize_report(2, 3, 5, verify=True))
    assert "- parts: 2, 1" in text
    assert "`Z^2 * Z * C(2) * C(2)`" in text
    assert "verified: yes" in text
    assert "| SNF | | 3 | 5 | 2 | 2 |" in text


def test_realize_trivial():
    text = render(realize_report(0, 0, 0))
    assert "- parts: none" in text


def test_realize_rejection():
    text = render(realize_report(3, 2, 1))
    assert "Inadmissible:" in text
    assert "- corank ≤ b" in text
    assert "- b ≤ r" in text


def test_oracle_warning():
    text = render(oracle_report("< a | a^2 >", primes=[2]))
    assert "(upper bound)" in text
    assert "warning: no supplied prime avoids torsion" in text


def test_error():
    error = InadmissibleTripleError(["corank ≤ b"])
    text = render({"command": "realize", "error": error.to_dict()})
    assert text.startswith("# Error")
    assert "INADMISSIBLE_TRIPLE: inadmissible triple: corank ≤ b" in text
    assert "- corank ≤ b" in text
