"""Highest-weight evaluation of enveloping-algebra images.

For an algebra with triangular data, the image of a diagram acts on the
generic highest-weight module spanned by lowering-operator words applied
to a highest vector; the scalar it acts by is a polynomial in the weight
coordinates.  The module is truncated at a configurable depth (twice the
diagram degree always suffices: a degree-n diagram contributes words of at
most 2n generators, each moving the weight by at most one root step).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraSpec
from .diagrams import CCD, DEFAULT_CAP, canonical_key, enumerate_ccds
from .hopf import build_A, expand_cc
from .linalg import Functional, LinComb, RowReducer
from .poly import Poly
from .statesum import evaluate_diagram


class TruncationError(RuntimeError):
    def __init__(self, depth):
        super().__init__(
            "a word escaped the depth-%d module truncation; "
            "re-run with a larger depth" % depth
        )
        self.depth = depth


class HighestWeightModule:
    """Generic-weight module with basis indexed by normal-ordered words of
    lowering generators (exact polynomial coefficients in the weight)."""

    def __init__(self, spec: AlgebraSpec, depth: int):
        if spec.triangular is None:
            raise ValueError("algebra spec carries no triangular data")
        self.spec = spec
        self.depth = depth
        tri = spec.triangular
        self.cartan = tri.cartan
        self.nvars = len(tri.cartan)
        self.y_letters = {r.y_index for r in tri.roots}
        self.x_letters = {r.x_index for r in tri.roots}
        covered = self.y_letters | self.x_letters | set(tri.cartan)
        if len(covered) != spec.dim:
            raise ValueError("triangular data does not cover the basis")
        self._lambda = [
            Poly.variable(self.nvars, i) for i in range(self.nvars)
        ]

    def _zero(self):
        return {}

    def highest_vector(self):
        return {(): Poly.constant(self.nvars, 1)}

    def _add(self, element, word, coeff):
        if len(word) > self.depth:
            raise TruncationError(self.depth)
        acc = element.get(word)
        acc = coeff if acc is None else acc + coeff
        if acc:
            element[word] = acc
        else:
            element.pop(word, None)

    def act_letter(self, letter: int, element: dict) -> dict:
        """Action of one basis generator, computed by commuting it through
        the lowering word down to the highest vector."""
        from .algebra import normal_order

        spec = self.spec
        out = self._zero()
        for word, coeff in element.items():
            if letter in self.y_letters:
                for w2, c2 in normal_order(spec, (letter,) + word).items():
                    self._add(out, w2, coeff * c2)
                continue
            if not word:
                if letter in self.cartan:
                    pos = self.cartan.index(letter)
                    self._add(out, (), coeff * self._lambda[pos])
                # raising letters kill the highest vector
                continue
            head, rest = word[0], word[1:]
            sign = -1 if spec.parity[letter] and spec.parity[head] else 1
            # letter * head = sign * head * letter + [letter, head]
            for w2, c2 in self.act_letter(
                letter, {rest: coeff * sign}
            ).items():
                for w3, c3 in normal_order(spec, (head,) + w2).items():
                    self._add(out, w3, c2 * c3)
            for k, c in spec.bracket(letter, head).items():
                for w2, c2 in self.act_letter(k, {rest: coeff * c}).items():
                    self._add(out, w2, c2)
        return out

    def act_word(self, word, element: dict) -> dict:
        for letter in reversed(word):
            element = self.act_letter(letter, element)
            if not element:
                break
        return element


def highest_weight_poly(
    d: CCD, spec: AlgebraSpec, depth: int | None = None
) -> Poly:
    """The polynomial k(weight) by which the image of ``d`` acts on the
    generic highest-weight module.

    The image is central, so it acts on the highest vector by a scalar; the
    off-highest components of ``image * v0`` must cancel, which is asserted
    as an internal consistency check.
    """
    if depth is None:
        depth = 2 * d.degree
    module = HighestWeightModule(spec, depth)
    pbw = evaluate_diagram(d, spec)
    total = {}
    v0 = module.highest_vector()
    for word, coeff in pbw.terms.items():
        result = module.act_word(word, v0)
        for w2, c2 in result.items():
            acc = total.get(w2)
            acc = c2 * coeff if acc is None else acc + c2 * coeff
            if acc:
                total[w2] = acc
            else:
                total.pop(w2, None)
    leftovers = {w for w in total if w}
    if leftovers:
        raise RuntimeError(
            "image does not act as a scalar on the highest vector "
            "(non-scalar words: %s)" % sorted(leftovers)
        )
    return total.get((), Poly(module.nvars))


def k_poly_lincomb(v: LinComb, spec: AlgebraSpec,
                   depth: int | None = None) -> Poly:
    from .diagrams import diagram_from_key

    total = None
    for key, coeff in v.terms.items():
        piece = highest_weight_poly(diagram_from_key(key), spec, depth) * coeff
        total = piece if total is None else total + piece
    if total is None:
        nvars = len(spec.triangular.cartan)
        return Poly(nvars)
    return total


def top_coefficient(p: Poly, n: int) -> Fraction:
    """Coefficient of the degree-n part for a one-variable polynomial."""
    if p.nvars != 1:
        raise ValueError("top_coefficient needs a one-dimensional Cartan")
    return p.coefficient((n,))


def deframed_weight_poly(n: int, v: LinComb, spec: AlgebraSpec,
                         depth: int | None = None) -> Poly:
    """Highest-weight polynomial of the deframed image of v.

    The degree bound (at most the diagram degree) and the top-coefficient
    extraction below concern the deframed system: the raw polynomial of a
    diagram with isolated chords exceeds the bound (the single chord
    already has a quadratic polynomial in degree one).
    """
    from .deframe import phi

    return k_poly_lincomb(phi(n, v), spec, depth)


@lru_cache(maxsize=None)
def knn(n: int, spec: AlgebraSpec, cap: int | None = DEFAULT_CAP):
    """The functional taking a degree-n class to the degree-n coefficient of
    its deframed highest-weight polynomial (one-dimensional Cartan)."""
    from .conway import WeightSystem
    from .diagrams import diagram_from_key

    space = build_A(n, cap=cap)
    values = {}
    for key in space.basis:
        poly = deframed_weight_poly(n, LinComb.single(key, 1), spec)
        c = top_coefficient(poly, n)
        if c:
            values[key] = c
    # membership in the span of diagram values is linear, so defining the
    # functional on the basis extends it by reduction
    functional = Functional(space=space, values=values,
                            name="k%d%d[%s]" % (n, n, spec.name))
    return WeightSystem(degree=n, functional=functional,
                        name="knn-%s" % spec.name)


def lambda_degree_bound_violations(
    n: int, spec: AlgebraSpec, cap: int | None = DEFAULT_CAP
) -> list:
    """Diagrams whose deframed polynomial exceeds degree n (must be none)."""
    out = []
    for d in enumerate_ccds(n, cap=cap):
        poly = deframed_weight_poly(n, LinComb.single(canonical_key(d), 1),
                                    spec)
        if poly.degree() > n:
            out.append((canonical_key(d), poly))
    return out


def classical_wheel_formula(spec: AlgebraSpec, partition) -> Poly:
    """Product over parts of sum over positive roots of
    (-1)**parity * 2 * <weight, root>**part."""
    from .algebra import pairing_with_root

    tri = spec.triangular
    nvars = len(tri.cartan)
    lam = [Poly.variable(nvars, i) for i in range(nvars)]
    total = Poly.constant(nvars, 1)
    for part in partition:
        piece = Poly(nvars)
        for root in tri.roots:
            pairing = pairing_with_root(spec, root, lam)
            power = Poly.constant(nvars, 1)
            for _ in range(part):
                power = power * pairing
            sign = -2 if root.parity else 2
            piece = piece + power * sign
        total = total * piece
    return total


def classical_theorem_violations(spec: AlgebraSpec, n: int) -> list:
    """Check the wheel values of the top weight coefficient against the
    root-sum product formula, for every even partition of n."""
    from .deframe import even_partitions, tau
    from .hopf import e_set
    from .diagrams import diagram_from_key

    out = []
    for P in even_partitions(n):
        expected = classical_wheel_formula(spec, P).homogeneous_part(n)
        for key in e_set(tau(P)):
            poly = highest_weight_poly(diagram_from_key(key), spec)
            got = poly.homogeneous_part(n)
            if got != expected:
                out.append((P, key, got, expected))
    return out


def wheel_rank_certificate(n: int) -> int:
    """Exact lower bound for the rank of the wheel classes of degree n.

    Each class is sent to its full enveloping-algebra coefficient vector
    under the three built-in algebras; these evaluations factor through
    the relation quotient (the state sum annihilates the local three-term
    relations), so the rank of the value matrix bounds the rank of the
    classes from below.  Combined with the trivial upper bound (one vector
    per even partition) a full-rank certificate is exact.  One rank-one
    algebra alone cannot separate the wheel classes (its values follow a
    single multiplicative pattern in the partition), hence the trio.
    """
    from .algebra import gl11, osp12, sl2
    from .deframe import even_partitions, tau
    from .statesum import evaluate_lincomb

    parts = even_partitions(n)
    if not parts:
        return 0
    rows = []
    for P in parts:
        v = expand_cc(tau(P))
        row = {}
        for si, spec in enumerate((sl2(), gl11(), osp12())):
            image = evaluate_lincomb(v, spec)
            for word, coeff in image.terms.items():
                row[(si,) + word] = coeff
        rows.append(row)
    columns = sorted({c for row in rows for c in row})
    colpos = {c: i for i, c in enumerate(columns)}
    reducer = RowReducer()
    for row in rows:
        reducer.add({colpos[c]: v for c, v in row.items()})
    return reducer.rank
