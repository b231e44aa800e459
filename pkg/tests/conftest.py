"""Shared fixtures and hypothesis strategies."""

# Import third-party modules
import hypothesis
import hypothesis.strategies as st
import pytest

# Import local modules
from grouprank_mcp.calculus import DirectProduct
from grouprank_mcp.calculus import FiniteAbelian
from grouprank_mcp.calculus import Free
from grouprank_mcp.calculus import FreeAbelian
from grouprank_mcp.calculus import FreeProduct
from grouprank_mcp.exact_linalg import IntMatrix
from grouprank_mcp.presentation import Presentation

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

NAMES = ("a", "b", "c", "d", "e", "f", "g", "h")

# (text, betti, torsion)
CORPUS = [
    ("< | >", 0, []),
    ("< a | >", 1, []),
    ("< a, b | >", 2, []),
    ("< a, b | a b a^-1 b^-1 >", 2, []),
    ("< a, b, c | a b a^-1 b^-1, a c a^-1 c^-1, b c b^-1 c^-1 >", 3, []),
    ("< a, b, c, d | a b a^-1 b^-1, a c a^-1 c^-1, a d a^-1 d^-1, b c b^-1 c^-1, b d b^-1 d^-1, c d c^-1 d^-1 >", 4, []),
    ("< a | a^2 >", 0, [2]),
    ("< a | a^6 >", 0, [6]),
    ("< a, b, c | a^2, b^2, c^2 >", 0, [2, 2, 2]),
    ("< a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1 >", 4, []),
    ("< a, b | a^2 b^-3 >", 1, []),
    ("< a, b | a b a^-1 b >", 1, [2]),
    ("< a, b | a^2, b^4, a b a^-1 b^-1 >", 0, [2, 4]),
    ("< a, b | a^2, b^3 >", 0, [6]),
    ("< a, b | b a b^-1 a^-2 >", 1, []),
    ("< a, b | a^3 b^3, a^-3 b^6 >", 0, [3, 9]),
    ("< x, y, z | x y z, x^2 y^2 z^2 >", 2, []),
]


@pytest.fixture(autouse=True)
def isolated_log_dir(tmp_path, monkeypatch):
    """Keep log files out of the user's log directory."""
    monkeypatch.setenv("GROUPRANK_LOG_DIR", str(tmp_path / "logs"))


@pytest.fixture(params=CORPUS, ids=[text for text, _, _ in CORPUS])
def corpus_entry(request):
    return request.param


@st.composite
def presentations(draw, max_generators=4, max_relators=4, max_length=6, max_exponent=3):
    n = draw(st.integers(0, max_generators))
    if n == 0:
        return Presentation()
    syllable = st.tuples(
        st.integers(0, n - 1),
        st.integers(-max_exponent, max_exponent).filter(lambda e: e != 0),
    )
    relators = draw(st.lists(st.lists(syllable, min_size=1, max_size=max_length), max_size=max_relators))
    return Presentation.build(NAMES[:n], relators)


@st.composite
def int_matrices(draw, max_dim=8, bound=9):
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=rows * cols, max_size=rows * cols))
    return IntMatrix(rows, cols, tuple(entries))


@st.composite
def square_matrices(draw, min_dim=0, max_dim=8, bound=9):
    n = draw(st.integers(min_dim, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=n * n, max_size=n * n))
    return IntMatrix(n, n, tuple(entries))


@st.composite
def divisibility_chains(draw, max_length=3):
    length = draw(st.integers(0, max_length))
    if length == 0:
        return ()
    chain = [draw(st.integers(2, 6))]
    for _ in range(length - 1):
        chain.append(chain[-1] * draw(st.integers(1, 3)))
    return tuple(chain)


abelian_atoms = st.one_of(
    st.builds(FreeAbelian, st.integers(0, 4)),
    st.builds(FiniteAbelian, divisibility_chains()),
    st.builds(Free, st.integers(0, 1)),
)

abelian_exprs = st.recursive(
    abelian_atoms,
    lambda children: st.builds(DirectProduct, children, children),
    max_leaves=3,
)

group_exprs = st.recursive(
    st.one_of(abelian_exprs, st.builds(Free, st.integers(0, 3))),
    lambda children: st.builds(FreeProduct, children, children),
    max_leaves=6,
)
