"""Exact rational sparse linear algebra: linear combinations of diagrams,
row reduction, quotient spaces and linear functionals on them.

Everything here is over Fraction; there is no floating point anywhere.
Rows are sparse dicts column -> Fraction.  Reduced row echelon form is
unique for a given row space, so quotient bases do not depend on the
order in which relations are fed in.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator


class UnknownKeyError(KeyError):
    """A linear combination mentions a diagram key outside the ambient space."""

    def __init__(self, key):
        super().__init__(key)
        self.key = key

    def __str__(self):
        return "unknown diagram key: %r" % (self.key,)


class InconsistentSystemError(ValueError):
    """Constraint system has no solution.

    ``certificate`` maps constraint indices to rational multipliers; the
    corresponding combination of constraint vectors vanishes while the same
    combination of right-hand sides does not.
    """

    def __init__(self, certificate, value):
        super().__init__("inconsistent constraints")
        self.certificate = certificate
        self.value = value

    def __str__(self):
        return (
            "inconsistent constraints: combination %r of the constraint rows "
            "vanishes but requires value %s" % (self.certificate, self.value)
        )


class UnderdeterminedSystemError(ValueError):
    def __init__(self, free_directions):
        super().__init__("underdetermined system")
        self.free_directions = free_directions

    def __str__(self):
        return "underdetermined system; free directions: %s" % (
            ", ".join(repr(d) for d in self.free_directions),
        )


class LinComb:
    """Formal rational linear combination keyed by canonical diagram encodings.

    Immutable in spirit: arithmetic returns fresh objects and zero
    coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                acc = data.get(key)
                if acc is None:
                    data[key] = coeff
                else:
                    acc = acc + coeff
                    if acc:
                        data[key] = acc
                    else:
                        del data[key]
        self.terms = data

    @classmethod
    def single(cls, key, coeff=1) -> "LinComb":
        return cls([(key, coeff)])

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = data.get(key, 0) + coeff
            if acc:
                data[key] = acc
            else:
                data.pop(key, None)
        out = LinComb.__new__(LinComb)
        out.terms = data
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        out = LinComb.__new__(LinComb)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def scale(self, factor) -> "LinComb":
        factor = Fraction(factor)
        out = LinComb.__new__(LinComb)
        out.terms = {} if not factor else {k: c * factor for k, c in self.terms.items()}
        return out

    def __rmul__(self, factor):
        return self.scale(factor)

    def map_keys(self, fn) -> "LinComb":
        """Apply ``fn`` to every key, merging collisions."""
        return LinComb((fn(k), c) for k, c in self.terms.items())

    def keys(self):
        return self.terms.keys()

    def __repr__(self):
        if not self.terms:
            return "LinComb(0)"
        bits = ["%s*%r" % (c, k) for k, c in sorted(self.terms.items())]
        return "LinComb(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# sparse RREF


def _reduce_row(row: dict, pivots: dict) -> dict:
    """Eliminate all pivot columns from ``row`` (returns a new dict).

    Columns are processed in ascending order; eliminating with the pivot at
    column c only fills in columns > c, so a min-heap worklist suffices.
    """
    row = {c: v for c, v in row.items() if v}
    heap = list(row)
    heapq.heapify(heap)
    seen = set()
    while heap:
        col = heapq.heappop(heap)
        if col in seen or col not in row:
            continue
        seen.add(col)
        pivot_row = pivots.get(col)
        if pivot_row is None:
            continue
        coeff = row.pop(col)
        for c2, v2 in pivot_row.items():
            if c2 == col:
                continue
            acc = row.get(c2, 0) - coeff * v2
            if acc:
                if c2 not in row and c2 not in seen:
                    heapq.heappush(heap, c2)
                row[c2] = acc
            else:
                row.pop(c2, None)
    return row


class RowReducer:
    """Incremental Gauss-Jordan elimination over sparse rational rows.

    Maintains a full reduced row echelon form: every stored row has a
    unit leading entry in its pivot column and zeros in all other pivot
    columns.  The resulting RREF is the canonical one for the row space,
    independent of insertion order.
    """

    def __init__(self):
        self.pivots: dict = {}  # pivot column -> normalized row

    def residual(self, row: dict) -> dict:
        return _reduce_row(row, self.pivots)

    def add(self, row: dict) -> dict:
        """Insert a row; return its residual (empty if dependent)."""
        row = self.residual(row)
        if not row:
            return row
        lead = min(row)
        inv = Fraction(1) / row[lead]
        row = {c: v * inv for c, v in row.items()}
        # back-substitute into existing pivot rows
        for prow in self.pivots.values():
            coeff = prow.get(lead)
            if coeff:
                for c2, v2 in row.items():
                    acc = prow.get(c2, 0) - coeff * v2
                    if acc:
                        prow[c2] = acc
                    else:
                        prow.pop(c2, None)
        self.pivots[lead] = row
        return row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> list:
        return sorted(self.pivots)

    def rows(self) -> list[dict]:
        return [dict(self.pivots[c]) for c in sorted(self.pivots)]


def rref(rows: Iterable[dict], ncols: int | None = None):
    """Reduced row echelon form of a sparse rational matrix.

    Pivot choice is deterministic: leftmost column first, and the unique
    RREF of the row space is returned regardless of row order.

    Returns ``(reduced_rows, pivot_columns)``.
    """
    reducer = RowReducer()
    for row in rows:
        reducer.add(row)
    return reducer.rows(), reducer.pivot_columns()


def solve_particular(equations) -> dict | None:
    """A particular solution of sparse equations ``(coeffs, rhs)``.

    ``coeffs`` maps variable index -> Fraction.  Free variables are set to
    zero.  Returns None when the system is inconsistent.
    """
    reducer = RowReducer()
    rhs_col = -1
    maxvar = -1
    for coeffs, rhs in equations:
        if coeffs:
            maxvar = max(maxvar, max(coeffs))
    rhs_col = maxvar + 1
    for coeffs, rhs in equations:
        row = dict(coeffs)
        rhs = Fraction(rhs)
        if rhs:
            row[rhs_col] = rhs
        reducer.add(row)
    solution = {}
    for col, row in reducer.pivots.items():
        if col == rhs_col:
            return None
        solution[col] = row.get(rhs_col, Fraction(0))
    return solution


def dump_matrix(rows: Iterable[dict]) -> str:
    """Plain text triplet dump ``row col num/den`` for debugging."""
    lines = []
    for i, row in enumerate(rows):
        for col in sorted(row):
            lines.append("%d %d %s" % (i, col, row[col]))
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# quotient spaces


@dataclass
class QuotientSpace:
    """A space spanned by ``ambient`` diagram keys modulo a list of relations.

    ``reduce`` rewrites any combination of ambient keys into coordinates
    against the chosen basis (the non-pivot ambient keys).
    """

    ambient: tuple
    reducer: RowReducer
    index: dict = field(repr=False)
    basis: tuple

    @classmethod
    def build(cls, ambient: Iterable, relations: Iterable[LinComb]) -> "QuotientSpace":
        ambient = tuple(sorted(set(ambient)))
        index = {key: i for i, key in enumerate(ambient)}
        reducer = RowReducer()
        for rel in relations:
            row = {}
            for key, coeff in rel.terms.items():
                if key not in index:
                    raise UnknownKeyError(key)
                row[index[key]] = coeff
            reducer.add(row)
        pivot_cols = set(reducer.pivots)
        basis = tuple(k for i, k in enumerate(ambient) if i not in pivot_cols)
        return cls(ambient=ambient, reducer=reducer, index=index, basis=basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: LinComb) -> dict:
        """Coordinates of the class of ``v`` as a dict basis key -> Fraction."""
        row = {}
        for key, coeff in v.terms.items():
            col = self.index.get(key)
            if col is None:
                raise UnknownKeyError(key)
            row[col] = row.get(col, 0) + coeff
        residual = self.reducer.residual(row)
        return {self.ambient[col]: coeff for col, coeff in residual.items() if coeff}

    def reduce_vector(self, v: LinComb) -> tuple:
        coords = self.reduce(v)
        return tuple(coords.get(b, Fraction(0)) for b in self.basis)

    def is_zero(self, v: LinComb) -> bool:
        return not self.reduce(v)

    def same_class(self, v: LinComb, w: LinComb) -> bool:
        return self.is_zero(v - w)


@dataclass
class Functional:
    """A linear functional on a QuotientSpace, stored against its basis."""

    space: QuotientSpace
    values: dict  # basis key -> Fraction
    name: str = ""

    def __call__(self, v: LinComb) -> Fraction:
        coords = self.space.reduce(v)
        total = Fraction(0)
        for key, coeff in coords.items():
            val = self.values.get(key)
            if val:
                total += coeff * val
        return total

    def value_vector(self) -> tuple:
        return tuple(self.values.get(b, Fraction(0)) for b in self.space.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Functional)
            and self.space.basis == other.space.basis
            and self.value_vector() == other.value_vector()
        )


def solve_functional(space: QuotientSpace, constraints, name: str = "") -> Functional:
    """Solve for the unique functional F with F(v) = c for each (v, c).

    Raises :class:`InconsistentSystemError` with a certificate (a vanishing
    combination of constraints whose required value is nonzero) or
    :class:`UnderdeterminedSystemError` listing free basis directions.
    """
    constraints = list(constraints)
    nbasis = len(space.basis)
    position = {key: j for j, key in enumerate(space.basis)}
    reducer = RowReducer()
    # columns 0..nbasis-1: unknown values of F on basis keys
    # column nbasis: right-hand side
    # columns nbasis+1+i: provenance (identity block) for certificates
    rhs_col = nbasis
    for i, (v, value) in enumerate(constraints):
        row = {position[k]: c for k, c in space.reduce(v).items()}
        value = Fraction(value)
        if value:
            row[rhs_col] = value
        row[rhs_col + 1 + i] = Fraction(1)
        reducer.add(row)
    solution = {}
    for col, row in sorted(reducer.pivots.items()):
        if col == rhs_col:
            certificate = {
                i - rhs_col - 1: c for i, c in row.items() if i > rhs_col
            }
            raise InconsistentSystemError(certificate, Fraction(1))
        if col > rhs_col:
            continue
        solution[col] = row.get(rhs_col, Fraction(0))
    missing = [space.basis[j] for j in range(nbasis) if j not in solution]
    if missing:
        raise UnderdeterminedSystemError(missing)
    values = {space.basis[j]: solution[j] for j in solution if solution[j]}
    return Functional(space=space, values=values, name=name)
