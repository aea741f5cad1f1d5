"""Groebner bases, Jacobian algebras and the residue pairing.

The monomial order is graded reverse lexicographic throughout, which is
degree-compatible, so graded dimensions of a quotient read directly off
the standard monomials.  Buchberger runs with the normal selection
strategy (smallest lcm first) plus the coprimality and chain criteria;
generators are kept monic, so reduction needs no divisions.
"""

from __future__ import annotations

from itertools import product as iter_product

from lgorb.errors import NonIsolatedSingularityError, ShapeError
from lgorb.exactnum import CycNum
from lgorb.polyring import (
    Monomial,
    Poly,
    WeightSystem,
    grevlex_key,
    hessian,
    is_quasihomogeneous,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
    partial_derivative,
)


class GroebnerBasis:
    """A reduced Groebner basis under grevlex; generators monic."""

    __slots__ = ("arity", "conductor", "generators", "leading")

    order = "grevlex"

    def __init__(self, generators: list[Poly]):
        gens = sorted(
            (g for g in generators if g),
            key=lambda g: grevlex_key(g.leading_monomial()),
        )
        if not gens:
            raise ValueError("empty generating set")
        self.arity = gens[0].arity
        self.conductor = gens[0].conductor
        self.generators = tuple(gens)
        self.leading = tuple(g.leading_monomial() for g in gens)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.generators == other.generators

    def __repr__(self):
        return f"GroebnerBasis({list(self.generators)!r})"

    def reducer_for(self, mon: Monomial) -> int | None:
        for i, lm in enumerate(self.leading):
            if mon_divides(lm, mon):
                return i
        return None


def normal_form(p: Poly, basis: GroebnerBasis) -> Poly:
    """Unique remainder of p modulo the basis; linear and idempotent."""
    if p.arity != basis.arity:
        raise ShapeError("ring mismatch between polynomial and basis")
    work = dict(p.terms)
    remainder: dict[Monomial, CycNum] = {}
    while work:
        mon = max(work, key=grevlex_key)
        coeff = work.pop(mon)
        i = basis.reducer_for(mon)
        if i is None:
            remainder[mon] = coeff
            continue
        g = basis.generators[i]
        shift = mon_div(mon, basis.leading[i])
        factor = -coeff
        for gm, gc in g.terms.items():
            if gm == basis.leading[i]:
                continue
            target = mon_mul(gm, shift)
            acc = work.get(target)
            s = factor * gc if acc is None else acc.addmul(factor, gc)
            if s:
                work[target] = s
            elif acc is not None:
                del work[target]
    return Poly(p.arity, remainder, p.conductor)


def _spoly(f: Poly, g: Poly) -> Poly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = mon_lcm(lf, lg)
    # both monic, so the S-polynomial needs no coefficient scaling
    uf = Poly(f.arity, {mon_div(lcm, lf): CycNum.one(f.conductor)}, f.conductor)
    ug = Poly(g.arity, {mon_div(lcm, lg): CycNum.one(g.conductor)}, g.conductor)
    return uf * f - ug * g


def buchberger(generators) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by the inputs."""
    gens: list[Poly] = []
    for g in generators:
        if g:
            gens.append(g.scale(g.leading_coeff().inverse()))
    if not gens:
        raise ValueError("cannot take a Groebner basis of the zero ideal")
    gens.sort(key=lambda g: grevlex_key(g.leading_monomial()))
    basis = list(gens)

    def lm(i):
        return basis[i].leading_monomial()

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done: set[tuple[int, int]] = set()
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (grevlex_key(mon_lcm(lm(ij[0]), lm(ij[1]))), ij),
        )
        pairs.discard((i, j))
        done.add((i, j))
        lcm = mon_lcm(lm(i), lm(j))
        if lcm == mon_mul(lm(i), lm(j)):
            continue  # coprime leading monomials
        if any(
            k != i
            and k != j
            and mon_divides(lm(k), lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        ):
            continue  # chain criterion
        remainder = normal_form(_spoly(basis[i], basis[j]), GroebnerBasis(basis))
        if remainder:
            remainder = remainder.scale(remainder.leading_coeff().inverse())
            basis.append(remainder)
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    # drop generators with redundant leading monomials
    lms = [g.leading_monomial() for g in basis]
    kept = [
        g
        for i, g in enumerate(basis)
        if not any(
            j != i and mon_divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i)
            for j in range(len(basis))
        )
    ]
    # tail-reduce to a fixpoint: the reduced basis is unique
    changed = len(kept) > 1
    while changed:
        changed = False
        for i in range(len(kept)):
            others = GroebnerBasis([h for j, h in enumerate(kept) if j != i])
            tail = normal_form(kept[i], others)
            tail = tail.scale(tail.leading_coeff().inverse())
            if tail != kept[i]:
                kept[i] = tail
                changed = True
    return GroebnerBasis(kept)


def quotient_basis(basis: GroebnerBasis) -> list[Monomial]:
    """Monomials not divisible by any leading monomial, in graded order.

    Raises NonIsolatedSingularityError if the quotient is infinite
    dimensional, i.e. some variable has no pure power among the leading
    monomials.
    """
    n = basis.arity
    if n == 0:
        return [()]
    bounds = []
    for i in range(n):
        bound = None
        for lm in basis.leading:
            if lm[i] and all(e == 0 for k, e in enumerate(lm) if k != i):
                bound = lm[i] if bound is None else min(bound, lm[i])
        if bound is None:
            raise NonIsolatedSingularityError(
                f"no pure power of variable {i + 1} among leading monomials; "
                "the quotient is infinite-dimensional"
            )
        bounds.append(bound)
    mons = [
        mon
        for mon in iter_product(*(range(b) for b in bounds))
        if basis.reducer_for(mon) is None
    ]
    mons.sort(key=grevlex_key)
    return mons


class JacobianAlgebra:
    """The quotient by the ideal of partial derivatives, with basis data."""

    __slots__ = (
        "source",
        "weights",
        "gb",
        "basis",
        "basis_index",
        "graded_dims",
        "milnor",
        "hessian_class",
        "top_monomial",
    )

    def __init__(self, source, weights, gb, basis, graded_dims, hessian_class):
        self.source = source
        self.weights = weights
        self.gb = gb
        self.basis = tuple(basis)
        self.basis_index = {m: i for i, m in enumerate(self.basis)}
        self.graded_dims = tuple(graded_dims)
        self.milnor = len(self.basis)
        self.hessian_class = tuple(hessian_class)
        self.top_monomial = self.basis[-1] if self.basis else None

    @property
    def arity(self) -> int:
        return self.source.arity

    @property
    def conductor(self) -> int:
        return self.source.conductor

    def top_degree(self) -> int:
        return len(self.graded_dims) - 1

    def nf(self, p: Poly) -> Poly:
        return normal_form(p, self.gb) if self.gb is not None else p

    def vector(self, p: Poly) -> tuple[CycNum, ...]:
        """Coordinates of the class of p over the standard monomial basis."""
        reduced = self.nf(p)
        zero = CycNum.zero(self.conductor)
        out = [zero] * self.milnor
        for mon, coeff in reduced.terms.items():
            out[self.basis_index[mon]] = coeff
        return tuple(out)

    def poly_from_vector(self, vec) -> Poly:
        terms = {m: c for m, c in zip(self.basis, vec) if c}
        return Poly(self.arity, terms, self.conductor)

    def degree_slices(self) -> list[range]:
        """Index ranges of the basis grouped by weighted degree."""
        slices = []
        start = 0
        for dim in self.graded_dims:
            slices.append(range(start, start + dim))
            start += dim
        return slices

    def to_dict(self) -> dict:
        return {
            "basis": [list(m) for m in self.basis],
            "graded_dims": list(self.graded_dims),
            "milnor": self.milnor,
            "hessian_class": [c.to_dict() for c in self.hessian_class],
        }


_ALGEBRA_CACHE: dict = {}


def jacobian_algebra(f: Poly, w: WeightSystem | None = None) -> JacobianAlgebra:
    """Basis, graded dimensions, Milnor number and Hessian class of Jac(f).

    Results are memoized per polynomial (construction is pure).
    """
    if w is None:
        w = WeightSystem([1] * f.arity, f.total_degree() or 1) if f.arity else WeightSystem([1], 1)
    key = (f.cache_key(), w.weights, w.total)
    cached = _ALGEBRA_CACHE.get(key)
    if cached is not None:
        return cached
    if f.arity == 0:
        one = CycNum.one(f.conductor)
        algebra = JacobianAlgebra(f, w, None, [()], [1], [one])
        _ALGEBRA_CACHE[key] = algebra
        return algebra
    if not is_quasihomogeneous(f, w):
        raise ValueError("polynomial is not quasihomogeneous for the given weights")
    partials = [partial_derivative(f, i) for i in range(f.arity)]
    if any(p.is_zero() for p in partials):
        raise NonIsolatedSingularityError("a partial derivative vanishes identically")
    gb = buchberger(partials)
    basis = quotient_basis(gb)
    degrees = [w.weighted_degree(m) for m in basis]
    top = max(degrees)
    dims = [degrees.count(d) for d in range(top + 1)]
    basis.sort(key=lambda m: (w.weighted_degree(m), grevlex_key(m)))
    hess_vec_poly = normal_form(hessian(f), gb)
    zero = CycNum.zero(f.conductor)
    index = {m: i for i, m in enumerate(basis)}
    hess_class = [zero] * len(basis)
    for mon, coeff in hess_vec_poly.terms.items():
        hess_class[index[mon]] = coeff
    if not any(hess_class):
        raise NonIsolatedSingularityError("Hessian class vanishes in the quotient")
    algebra = JacobianAlgebra(f, w, gb, basis, dims, hess_class)
    _ALGEBRA_CACHE[key] = algebra
    return algebra


def residue_pairing(u: Poly, v: Poly, algebra: JacobianAlgebra) -> CycNum:
    """The bilinear form with eta([1], [hess f]) = 1.

    Projects the product class onto the top-degree graded piece, which is
    one-dimensional for the quasihomogeneous isolated singularities handled
    here (guarded).
    """
    if algebra.graded_dims[-1] != 1:
        raise ValueError("top graded piece is not one-dimensional")
    top_index = algebra.milnor - 1
    hess_top = algebra.hessian_class[top_index]
    product_vec = algebra.vector(u * v)
    return product_vec[top_index] / hess_top
