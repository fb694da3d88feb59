"""Hypothesis strategies for exact symbols, maps and operators."""
from gmpy2 import mpq
from hypothesis import strategies as st

from hardy_toeplitz import PolySelfMap, QQi, SphereSymbol
from hardy_toeplitz.basis import multi_indices_of_degree

small_rationals = st.builds(lambda p, q: mpq(p, q), st.integers(-4, 4), st.integers(1, 5))
gaussian_rationals = st.builds(QQi, small_rationals, small_rationals)


def multi_indices(n, max_degree):
    pool = [a for d in range(max_degree + 1) for a in multi_indices_of_degree(n, d)]
    return st.sampled_from(pool)


@st.composite
def symbols(draw, n, max_degree=2, max_terms=4):
    terms = draw(st.lists(
        st.tuples(multi_indices(n, max_degree), multi_indices(n, max_degree), gaussian_rationals),
        min_size=0, max_size=max_terms))
    coeffs = {}
    for mu, nu, c in terms:
        coeffs[(mu, nu)] = coeffs.get((mu, nu), QQi(0)) + c
    return SphereSymbol(n, coeffs)


@st.composite
def contractions(draw, n):
    """Rational linear maps with entries of size <= 1/4, so ||A|| <= n/4 < 1 for n <= 3."""
    rows = []
    for _ in range(n):
        row = [draw(st.builds(lambda p: mpq(p, 4 * n), st.integers(-n, n))) for _ in range(n)]
        rows.append(row)
    return PolySelfMap.linear(rows)


@st.composite
def poly_maps(draw, n, max_degree=2):
    """Polynomial maps with small coefficients (not necessarily self-maps; fine for algebra)."""
    comps = []
    for _ in range(n):
        terms = draw(st.lists(st.tuples(multi_indices(n, max_degree), small_rationals),
                              min_size=0, max_size=3))
        p = {}
        for a, c in terms:
            p[a] = p.get(a, 0) + c
        comps.append(p)
    return PolySelfMap(n, comps)
