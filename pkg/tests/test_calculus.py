"""Tests for the co-rank calculus and the expression language."""

# Import third-party modules
import pytest
from hypothesis import given
from hypothesis import settings

# Import local modules
from grouprank_mcp.abelian import AbelianInvariants
from grouprank_mcp.abelian import abelianize
from grouprank_mcp.calculus import TRIVIAL
from grouprank_mcp.calculus import DirectProduct
from grouprank_mcp.calculus import FiniteAbelian
from grouprank_mcp.calculus import Free
from grouprank_mcp.calculus import FreeAbelian
from grouprank_mcp.calculus import FreeProduct
from grouprank_mcp.calculus import InvariantTriple
from grouprank_mcp.calculus import abelian_type
from grouprank_mcp.calculus import atoms
from grouprank_mcp.calculus import direct_product_of
from grouprank_mcp.calculus import format_expression
from grouprank_mcp.calculus import free_product_of
from grouprank_mcp.calculus import invariants
from grouprank_mcp.calculus import is_abelian
from grouprank_mcp.calculus import is_torsion_free
from grouprank_mcp.calculus import isotropy_bounds
from grouprank_mcp.calculus import satisfies_constraints
from grouprank_mcp.calculus import to_presentation
from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError
from grouprank_mcp.errors import ParseError
from grouprank_mcp.errors import UnsupportedExpressionError
from grouprank_mcp.parser import parse_expression
from grouprank_mcp.presentation import format_presentation

from conftest import group_exprs


@pytest.mark.parametrize(
    "expr, expected",
    [
        (FreeAbelian(3), (1, 3, 3)),
        (FreeAbelian(0), (0, 0, 0)),
        (FiniteAbelian((2, 4)), (0, 0, 2)),
        (Free(2), (2, 2, 2)),
        (Free(0), (0, 0, 0)),
        (FreeProduct(FreeAbelian(2), FreeAbelian(1)), (2, 3, 3)),
        (free_product_of(FreeAbelian(2), FreeAbelian(1), FiniteAbelian((2,)), FiniteAbelian((2,))), (2, 3, 5)),
        (DirectProduct(FreeAbelian(2), FiniteAbelian((2,))), (1, 2, 3)),
        (DirectProduct(FiniteAbelian((2,)), FiniteAbelian((3,))), (0, 0, 1)),
        (DirectProduct(Free(1), FreeAbelian(1)), (1, 2, 2)),
    ],
)
def test_invariants(expr, expected):
    assert invariants(expr).as_tuple() == expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Z^3", (1, 3, 3)),
        ("F(2)", (2, 2, 2)),
        ("Z^2 * Z", (2, 3, 3)),
        ("Z^2 * Z * C(2) * C(2)", (2, 3, 5)),
        ("C(2,4)", (0, 0, 2)),
        ("C(2) x C(3)", (0, 0, 1)),
        ("Z x Z x C(6)", (1, 2, 3)),
        ("(Z x C(2)) * F(3)", (4, 4, 5)),
        ("Z^0", (0, 0, 0)),
        ("C(2) * C(2) * C(2)", (0, 0, 3)),
    ],
)
def test_invariants_of_parsed_expressions(text, expected):
    assert invariants(parse_expression(text)).as_tuple() == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_free_abelian_triple_and_lowering(n):
    assert invariants(FreeAbelian(n)).as_tuple() == (1, n, n)
    presentation = to_presentation(FreeAbelian(n))
    assert presentation.relator_count == n * (n - 1) // 2
    assert abelianize(presentation) == AbelianInvariants(n)


def test_non_abelian_direct_product_is_unsupported():
    with pytest.raises(UnsupportedExpressionError) as info:
        invariants(parse_expression("F(2) x Z"))
    assert info.value.code is ErrorCode.UNSUPPORTED_EXPRESSION
    assert "F(2)" in info.value.message
    with pytest.raises(UnsupportedExpressionError):
        invariants(DirectProduct(FreeAbelian(1), FreeProduct(FreeAbelian(1), FreeAbelian(1))))


def test_unsupported_direct_product_still_abelianizes():
    expr = parse_expression("F(2) x C(2)")
    assert abelian_type(expr) == AbelianInvariants(2, (2,))


def test_triple_rejects_impossible_values():
    with pytest.raises(GroupRankError):
        InvariantTriple(2, 1, 1)
    with pytest.raises(GroupRankError):
        InvariantTriple(0, 1, 1)
    assert InvariantTriple(1, 2, 3) + InvariantTriple(0, 0, 1) == InvariantTriple(1, 2, 4)


def test_satisfies_constraints():
    assert satisfies_constraints(0, 0, 0)
    assert satisfies_constraints(0, 0, 5)
    assert satisfies_constraints(1, 1, 1)
    assert not satisfies_constraints(0, 1, 1)
    assert not satisfies_constraints(2, 1, 3)
    assert not satisfies_constraints(1, 3, 2)
    assert not satisfies_constraints(-1, 0, 0)


@pytest.mark.parametrize(
    "expr, expected",
    [
        (FreeAbelian(4), True),
        (Free(1), True),
        (Free(2), False),
        (DirectProduct(FiniteAbelian((2,)), FreeAbelian(1)), True),
        (FreeProduct(FreeAbelian(1), FreeAbelian(0)), False),
    ],
)
def test_is_abelian(expr, expected):
    assert is_abelian(expr) is expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Z^3", True),
        ("F(4) * Z", True),
        ("Z * C(2)", False),
        ("Z x C(3)", False),
        ("C()", True),
    ],
)
def test_is_torsion_free(text, expected):
    assert is_torsion_free(parse_expression(text)) is expected


def test_isotropy_bounds():
    assert isotropy_bounds(parse_expression("Z^2 * Z")) == (2, 3)
    assert isotropy_bounds(FiniteAbelian((5,))) == (0, 0)


def test_atoms_and_products():
    expr = free_product_of(FreeAbelian(2), Free(1), FiniteAbelian((2,)))
    assert atoms(expr) == [FreeAbelian(2), Free(1), FiniteAbelian((2,))]
    assert free_product_of() == TRIVIAL
    assert direct_product_of(FreeAbelian(1)) == FreeAbelian(1)


def test_finite_abelian_requires_chain():
    with pytest.raises(GroupRankError):
        FiniteAbelian((2, 3))
    with pytest.raises(GroupRankError):
        FiniteAbelian((1,))
    assert FiniteAbelian([2, 4]).factors == (2, 4)


class TestExpressionText:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("Z^2 * Z * C(2) * C(2)", "Z^2 * Z * C(2) * C(2)"),
            ("Z^1", "Z"),
            ("Z ×Z", "Z x Z"),
            ("(Z * Z) x C(2)", "(Z * Z) x C(2)"),
            ("Z * (Z * Z)", "Z * Z * Z"),
            ("C( 2 , 4 )", "C(2,4)"),
            ("F(0)", "F(0)"),
        ],
    )
    def test_normalized_text(self, text, expected):
        assert format_expression(parse_expression(text)) == expected

    def test_precedence(self):
        expr = parse_expression("Z * Z x C(2)")
        assert expr == FreeProduct(FreeAbelian(1), DirectProduct(FreeAbelian(1), FiniteAbelian((2,))))

    def test_left_associative(self):
        expr = parse_expression("Z * F(2) * C(3)")
        assert expr == FreeProduct(FreeProduct(FreeAbelian(1), Free(2)), FiniteAbelian((3,)))

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("C(2,3)", "dividing the next"),
            ("Z^", "expected integer rank"),
            ("Z *", "expected Z, C(...), F(...) or '('"),
            ("(Z", "expected ')'"),
            ("Q", "unexpected character 'Q'"),
            ("Z Z", "expected end of input"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as info:
            parse_expression(text)
        assert fragment in info.value.message

    @settings(max_examples=300)
    @given(group_exprs)
    def test_text_is_stable(self, expr):
        text = format_expression(expr)
        assert format_expression(parse_expression(text)) == text
        assert str(expr) == text


class TestLowering:
    @pytest.mark.parametrize(
        "text, presentation",
        [
            ("Z^2", "< g1, g2 | g1 g2 g1^-1 g2^-1 >"),
            ("C(2,4)", "< g1, g2 | g1^2, g2^4, g1 g2 g1^-1 g2^-1 >"),
            ("F(2)", "< g1, g2 | >"),
            ("Z^0", "< | >"),
            ("Z^2 * Z * C(2) * C(2)", "< g1, g2, g3, g4, g5 | g1 g2 g1^-1 g2^-1, g4^2, g5^2 >"),
            ("Z x C(2)", "< g1, g2 | g2^2, g1 g2 g1^-1 g2^-1 >"),
        ],
    )
    def test_to_presentation(self, text, presentation):
        assert format_presentation(to_presentation(parse_expression(text))) == presentation

    def test_prefix(self):
        assert to_presentation(FreeAbelian(1), prefix="t").generators == ("t1",)


@settings(max_examples=500)
@given(group_exprs)
def test_supported_triples_satisfy_constraints(expr):
    triple = invariants(expr)
    assert satisfies_constraints(*triple.as_tuple())
    low, high = isotropy_bounds(expr)
    assert triple.corank == low <= high == triple.betti <= triple.rank


@settings(max_examples=300)
@given(group_exprs, group_exprs, group_exprs)
def test_free_product_is_associative_and_commutative(a, b, c):
    assert invariants(FreeProduct(FreeProduct(a, b), c)) == invariants(FreeProduct(a, FreeProduct(b, c)))
    assert invariants(FreeProduct(a, b)) == invariants(FreeProduct(b, a))


@settings(max_examples=200)
@given(group_exprs)
def test_betti_agrees_with_smith_normal_form(expr):
    presentation = to_presentation(expr)
    abelian = abelianize(presentation)
    assert abelian.betti == invariants(expr).betti
    assert abelian == abelian_type(expr)


class TestLongChains:
    def test_parsed_free_product(self):
        text = " * ".join(["C(2)"] * 2500)
        expr = parse_expression(text)
        assert invariants(expr).as_tuple() == (0, 0, 2500)
        assert abelian_type(expr) == AbelianInvariants(0, (2,) * 2500)
        assert is_torsion_free(expr) is False
        assert len(atoms(expr)) == 2500
        assert format_expression(expr) == text

    def test_parsed_direct_product(self):
        expr = parse_expression(" x ".join(["Z"] * 2500))
        assert is_abelian(expr)
        assert invariants(expr).as_tuple() == (1, 2500, 2500)

    def test_lowered_free_product(self):
        expr = free_product_of(*[FreeAbelian(1)] * 2000, Free(2))
        assert invariants(expr).as_tuple() == (2002, 2002, 2002)
        presentation = to_presentation(expr)
        assert presentation.generator_count == 2002
        assert presentation.generators[-1] == "g2002"
        assert presentation.relator_count == 0
