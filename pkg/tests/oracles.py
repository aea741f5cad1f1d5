"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the package's Groebner/normal-form
path: class membership is decided by dense linear algebra on graded
slices over Fractions/CycNum, products of roots of unity are expanded by
exponent arithmetic, and determinants are expanded by hand.  The tests
compare the engine against these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from lgorb import linalg
from lgorb.exactnum import CycNum
from lgorb.polyring import Poly, partial_derivative


def root_product_coeffs(a: dict[int, int], b: dict[int, int], n: int) -> list[int]:
    """Coefficients of (sum a_e zeta^e)(sum b_e zeta^e) over exponents 0..n-1."""
    out = [0] * n
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[(e1 + e2) % n] += c1 * c2
    return out


def reduce_prime_conductor(coeffs: list[int], p: int) -> list[Fraction]:
    """Reduce exponent-0..p-1 coefficients to the power basis for prime p,
    using only 1 + zeta + ... + zeta^(p-1) = 0."""
    top = coeffs[p - 1]
    return [Fraction(c - top) for c in coeffs[: p - 1]]


def monomials_of_degree(arity: int, degree: int):
    if degree < 0:
        return []
    if arity == 0:
        return [()] if degree == 0 else []
    out = []
    for combo in combinations_with_replacement(range(arity), degree):
        mon = [0] * arity
        for i in combo:
            mon[i] += 1
        out.append(tuple(mon))
    return sorted(out)


def slice_reduce(p: Poly, f: Poly, degree: int, basis_monomials) -> dict:
    """Express the class of a homogeneous p over the given degree-`degree`
    monomial classes by solving a dense linear system in the graded slice.

    Columns are [m * df/dx_i for suitable m] + basis monomials; solving
    J y + B c = p gives the coefficients c.  Returns {monomial: CycNum}.
    Raises if p is not homogeneous of the stated degree or the system is
    inconsistent (basis classes do not span).
    """
    arity, conductor = f.arity, f.conductor
    if any(sum(m) != degree for m in p.terms):
        raise ValueError("polynomial is not homogeneous of the stated degree")
    slice_mons = monomials_of_degree(arity, degree)
    index = {m: i for i, m in enumerate(slice_mons)}
    zero = CycNum.zero(conductor)
    columns = []
    for i in range(arity):
        dp = partial_derivative(f, i)
        for m in monomials_of_degree(arity, degree - (f.total_degree() - 1)):
            col = [zero] * len(slice_mons)
            for mm, cc in dp.terms.items():
                col[index[tuple(a + b for a, b in zip(m, mm))]] = cc
            columns.append(col)
    njac = len(columns)
    for m in basis_monomials:
        col = [zero] * len(slice_mons)
        col[index[m]] = CycNum.one(conductor)
        columns.append(col)
    rhs = [zero] * len(slice_mons)
    for m, c in p.terms.items():
        rhs[index[m]] = c
    matrix = [[columns[j][i] for j in range(len(columns))] for i in range(len(slice_mons))]
    solution = linalg.solve(matrix, rhs)
    if solution is None:
        raise ValueError("class is not a combination of ideal and basis monomials")
    return {m: solution[njac + k] for k, m in enumerate(basis_monomials)}


def dense_normal_form_klein(p: Poly, f: Poly, basis_family) -> dict:
    """Class coordinates of a (possibly inhomogeneous) p over a graded basis
    family {degree: [monomials]} via per-degree slice reduction."""
    out = {}
    by_degree: dict[int, dict] = {}
    for m, c in p.terms.items():
        by_degree.setdefault(sum(m), {})[m] = c
    for degree, terms in sorted(by_degree.items()):
        homog = Poly(p.arity, terms, p.conductor)
        mons = basis_family.get(degree, [])
        coords = slice_reduce(homog, f, degree, mons)
        for m, c in coords.items():
            if c:
                out[m] = out.get(m, CycNum.zero(p.conductor)) + c
    return {m: c for m, c in out.items() if c}


def hessian_by_cofactors(f: Poly) -> Poly:
    """3x3 Hessian determinant expanded with the explicit cofactor formula,
    independently of the package determinant code."""
    assert f.arity == 3
    d = [partial_derivative(f, i) for i in range(3)]
    h = [[partial_derivative(d[i], j) for j in range(3)] for i in range(3)]
    return (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )


def grevlex_reference(m1, m2) -> int:
    """Reference comparator: +1 if m1 > m2 in grevlex, -1 if smaller, 0 equal."""
    if m1 == m2:
        return 0
    d1, d2 = sum(m1), sum(m2)
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for a, b in zip(reversed(m1), reversed(m2)):
        if a != b:
            return 1 if a - b < 0 else -1
    return 0
