"""Finite matrix groups over cyclotomic fields.

Groups are materialized as explicit element lists with structural
deduplication (exact arithmetic makes hashing sound).  Closure is a
breadth-first walk from the identity, so element order is deterministic:
index 0 is the identity and indices follow generation order.
"""

from __future__ import annotations

import warnings
from typing import Optional, Sequence

from lgorb import linalg
from lgorb.errors import (
    ClosureCapExceededError,
    OrderCapExceededError,
    ShapeError,
    SingularMatrixError,
)
from lgorb.exactnum import CycNum

DEFAULT_CLOSURE_CAP = 2048
DEFAULT_ORDER_CAP = 1024


class GMatrix:
    """An invertible square matrix of CycNum entries, immutable.

    The determinant is computed on first access and cached; products of
    group elements are never singular, so construction stays cheap.
    Explicit inputs are validated where they enter (generate_closure,
    inverse).
    """

    __slots__ = ("n", "conductor", "rows", "_det", "_hash")

    def __init__(self, rows: Sequence[Sequence[CycNum]], _det: CycNum | None = None):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ShapeError("matrix must be square")
        if n == 0:
            raise ShapeError("empty matrix")
        conductor = rows[0][0].conductor
        if any(e.conductor != conductor for row in rows for e in row):
            raise ShapeError("mixed conductors in one matrix")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_det", _det)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("GMatrix is immutable")

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> "GMatrix":
        one, zero = CycNum.one(conductor), CycNum.zero(conductor)
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)],
            _det=one,
        )

    @classmethod
    def diagonal(cls, entries: Sequence[CycNum]) -> "GMatrix":
        zero = CycNum.zero(entries[0].conductor)
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def det(self) -> CycNum:
        d = self._det
        if d is None:
            d = linalg.det(self.rows)
            object.__setattr__(self, "_det", d)
        return d

    def is_identity(self) -> bool:
        return all(
            (self.rows[i][j].is_one() if i == j else self.rows[i][j].is_zero())
            for i in range(self.n)
            for j in range(self.n)
        )

    def __mul__(self, other: "GMatrix") -> "GMatrix":
        if not isinstance(other, GMatrix):
            return NotImplemented
        if self.n != other.n or self.conductor != other.conductor:
            raise ShapeError("incompatible matrices")
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row_i = self.rows[i]
            out_row = []
            for j in range(n):
                col_j = cols[j]
                acc = row_i[0] * col_j[0]
                for k in range(1, n):
                    acc = acc.addmul(row_i[k], col_j[k])
                out_row.append(acc)
            out.append(out_row)
        return GMatrix(out)

    def __neg__(self) -> "GMatrix":
        return GMatrix([[-e for e in row] for row in self.rows])

    def require_invertible(self) -> "GMatrix":
        if not self.det:
            raise SingularMatrixError("matrix is singular")
        return self

    def inverse(self) -> "GMatrix":
        return GMatrix(linalg.invert(self.rows))

    def __pow__(self, k: int) -> "GMatrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = GMatrix.identity(self.n, self.conductor)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def order(self, cap: int = DEFAULT_ORDER_CAP) -> int:
        power = self
        for k in range(1, cap + 1):
            if power.is_identity():
                return k
            power = power * self
        raise OrderCapExceededError(f"element order exceeds cap {cap}")

    def apply(self, vec: Sequence[CycNum]) -> tuple[CycNum, ...]:
        return tuple(
            sum((self.rows[i][k] * vec[k] for k in range(1, self.n)), self.rows[i][0] * vec[0])
            for i in range(self.n)
        )

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"GMatrix[{body}]"

    def to_lists(self) -> list[list[dict]]:
        return [[e.to_dict() for e in row] for row in self.rows]

    @classmethod
    def from_lists(cls, data) -> "GMatrix":
        return cls([[CycNum.from_dict(e) for e in row] for row in data])


def fixed_space_with_free(g: GMatrix) -> tuple[tuple[tuple[CycNum, ...], ...], tuple[int, ...]]:
    """Columns spanning ker(g - id) plus their free row indices.

    The rows of the column matrix at the free indices form an identity
    block, which makes restricting a commuting matrix to the fixed space a
    plain row selection.
    """
    one = CycNum.one(g.conductor)
    rows = [
        [g.rows[i][j] - one if i == j else g.rows[i][j] for j in range(g.n)]
        for i in range(g.n)
    ]
    basis, free = linalg.kernel_basis_with_free(rows, g.conductor)
    return tuple(basis), tuple(free)


def fixed_space(g: GMatrix) -> tuple[tuple[CycNum, ...], ...]:
    """Columns spanning ker(g - id), in the deterministic reduced-row-echelon
    kernel convention; may be empty."""
    return fixed_space_with_free(g)[0]


def element_order(g: GMatrix, cap: int = DEFAULT_ORDER_CAP) -> int:
    return g.order(cap)


def det(g: GMatrix) -> CycNum:
    return g.det


class ConjugacyData:
    """Conjugacy classes and centralizers of a finite matrix group."""

    __slots__ = ("classes", "centralizers")

    def __init__(self, classes, centralizers):
        self.classes = tuple((rep, tuple(sorted(members))) for rep, members in classes)
        self.centralizers = {rep: tuple(sorted(z)) for rep, z in centralizers.items()}

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(rep for rep, _ in self.classes)

    def class_of(self, index: int) -> tuple[int, ...]:
        for rep, members in self.classes:
            if index in members:
                return members
        raise KeyError(index)


class FiniteMatrixGroup:
    """An explicitly enumerated finite group of invertible matrices."""

    def __init__(
        self,
        elements: Sequence[GMatrix],
        generator_indices: Sequence[int],
        words: Optional[Sequence[str]] = None,
    ):
        self.elements = tuple(elements)
        if not self.elements or not self.elements[0].is_identity():
            raise ValueError("element 0 must be the identity")
        self.index = {m: i for i, m in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        self.order = len(self.elements)
        self.generator_indices = tuple(generator_indices)
        self.words = tuple(words) if words is not None else None
        self.n = self.elements[0].n
        self.conductor = self.elements[0].conductor
        self._inverse_index: Optional[tuple[int, ...]] = None
        self._conjugacy: Optional[ConjugacyData] = None
        self._mul_cache: dict[tuple[int, int], int] = {}

    # -- basic structure ---------------------------------------------------

    @property
    def generators(self) -> tuple[GMatrix, ...]:
        return tuple(self.elements[i] for i in self.generator_indices)

    def __len__(self):
        return self.order

    def __contains__(self, m: GMatrix) -> bool:
        return m in self.index

    def __iter__(self):
        return iter(self.elements)

    def word_for(self, i: int) -> Optional[str]:
        return self.words[i] if self.words is not None else None

    def element_set(self) -> frozenset:
        return frozenset(self.index)

    def inverse_index(self) -> tuple[int, ...]:
        if self._inverse_index is None:
            self._inverse_index = tuple(
                self.index[m.inverse()] for m in self.elements
            )
        return self._inverse_index

    def mul_index(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j]; products are cached so group
        structure queries amortize the matrix arithmetic."""
        if i == 0:
            return j
        if j == 0:
            return i
        cached = self._mul_cache.get((i, j))
        if cached is None:
            cached = self.index[self.elements[i] * self.elements[j]]
            self._mul_cache[(i, j)] = cached
        return cached

    def determinants(self) -> tuple[CycNum, ...]:
        return tuple(m.det for m in self.elements)

    def is_admissible(self) -> bool:
        """True iff every determinant is 1 or -1."""
        one = CycNum.one(self.conductor)
        return all(d == one or d == -one for d in self.determinants())

    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(a * b == b * a for a in gens for b in gens)

    def subgroup_generator_indices(self, indices: Sequence[int]) -> list[int]:
        """Greedy small generating set (by index order) for a subgroup given
        as an element index set."""
        have = {0}
        gens: list[int] = []
        for i in sorted(indices):
            if i in have:
                continue
            gens.append(i)
            seen = set(have)
            queue = list(have)
            while queue:
                j = queue.pop()
                for gi in gens:
                    k = self.mul_index(j, gi)
                    if k not in seen:
                        seen.add(k)
                        queue.append(k)
            have = seen
        return gens

    # -- conjugacy ---------------------------------------------------------

    def conjugacy(self) -> ConjugacyData:
        if self._conjugacy is None:
            gens = list(self.generator_indices) or list(range(self.order))
            inv = self.inverse_index()
            gen_pairs = [(i, inv[i]) for i in gens]
            seen = [False] * self.order
            classes = []
            for start in range(self.order):
                if seen[start]:
                    continue
                orbit = {start}
                queue = [start]
                seen[start] = True
                while queue:
                    j = queue.pop()
                    for gi, gii in gen_pairs:
                        k = self.mul_index(self.mul_index(gi, j), gii)
                        if not seen[k]:
                            seen[k] = True
                            orbit.add(k)
                            queue.append(k)
                classes.append((start, orbit))
            centralizers = {rep: self.centralizer(rep) for rep, _ in classes}
            self._conjugacy = ConjugacyData(classes, centralizers)
        return self._conjugacy

    def centralizer(self, i: int) -> tuple[int, ...]:
        return tuple(
            j for j in range(self.order)
            if self.mul_index(j, i) == self.mul_index(i, j)
        )

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "matrices": [m.to_lists() for m in self.elements],
            "generator_indices": list(self.generator_indices),
            "words": list(self.words) if self.words is not None else None,
        }


def generate_closure(
    generators: Sequence[GMatrix],
    cap: int = DEFAULT_CLOSURE_CAP,
    words: Optional[Sequence[str]] = None,
) -> FiniteMatrixGroup:
    """Breadth-first closure of the generators under multiplication.

    Element 0 is the identity; the rest appear in generation order.  When
    generator words are supplied, a word is tracked for every element.
    """
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    conductor = generators[0].conductor
    if any(g.n != n or g.conductor != conductor for g in generators):
        raise ShapeError("generators must share dimension and conductor")
    for g in generators:
        g.require_invertible()
    identity = GMatrix.identity(n, conductor)
    track_words = words is not None
    if track_words and len(words) != len(generators):
        raise ValueError("need one word per generator")
    elements = [identity]
    elem_words = ["id"] if track_words else None
    index = {identity: 0}
    queue = [0]
    while queue:
        current = queue.pop(0)
        m = elements[current]
        for gi, g in enumerate(generators):
            p = m * g
            if p not in index:
                if len(elements) >= cap:
                    raise ClosureCapExceededError(
                        f"closure exceeded cap {cap}; group not finite or cap too low"
                    )
                index[p] = len(elements)
                elements.append(p)
                if track_words:
                    prefix = "" if elem_words[current] == "id" else elem_words[current]
                    elem_words.append(prefix + words[gi])
                queue.append(index[p])
    generator_indices = [index[g] for g in generators]
    return FiniteMatrixGroup(elements, generator_indices, elem_words)


def from_elements(
    elements: Sequence[GMatrix], generator_indices: Optional[Sequence[int]] = None
) -> FiniteMatrixGroup:
    """Wrap an already-closed element list (identity moved to the front)."""
    elems = list(dict.fromkeys(elements))
    identity_pos = next((i for i, m in enumerate(elems) if m.is_identity()), None)
    if identity_pos is None:
        raise ValueError("element list does not contain the identity")
    if identity_pos != 0:
        elems.insert(0, elems.pop(identity_pos))
    group = FiniteMatrixGroup(elems, generator_indices or [])
    if not group.generator_indices:
        gens = group.subgroup_generator_indices(range(group.order))
        group.generator_indices = tuple(gens)
    return group


def conjugacy_classes(group: FiniteMatrixGroup) -> ConjugacyData:
    return group.conjugacy()


def centralizer(group: FiniteMatrixGroup, i: int) -> tuple[int, ...]:
    return group.centralizer(i)


def hat_extend(group: FiniteMatrixGroup) -> FiniteMatrixGroup:
    """The central extension {+g, -g}; warns and returns the input unchanged
    if -id is already present."""
    minus_id = -GMatrix.identity(group.n, group.conductor)
    if minus_id in group.index:
        warnings.warn("-id already present; group returned unchanged")
        return group
    gens = list(group.generators) + [minus_id]
    gen_words = None
    if group.words is not None:
        gen_words = [group.words[i] for i in group.generator_indices] + ["-I"]
    return generate_closure(gens, cap=2 * group.order + 1, words=gen_words)


def groups_conjugate(
    g1: FiniteMatrixGroup, g2: FiniteMatrixGroup, ambient: FiniteMatrixGroup
) -> Optional[GMatrix]:
    """Some h in the ambient group with h G1 h^-1 = G2 (as sets), or None.

    Brute force over the ambient elements; the ambient groups here have at
    most a few hundred elements.
    """
    if g1.order != g2.order:
        return None
    target = g2.element_set()
    for h in ambient.elements:
        hinv = h.inverse()
        if all(h * m * hinv in target for m in g1.elements):
            return h
    return None
