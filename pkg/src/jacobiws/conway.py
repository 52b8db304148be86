"""The Alexander-Conway family of weight systems, its convolution inverse,
the counit, and products of weight systems through the component coproduct."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .deframe import even_partitions, phi, tau
from .diagrams import (
    DEFAULT_CAP,
    canonical_key,
    diagram_from_key,
    enumerate_ccds,
    enumerate_chinese_characters,
)
from .hopf import build_A, coproduct, e_set, expand_cc
from .linalg import Functional, LinComb, solve_functional


@dataclass
class WeightSystem:
    """A named linear functional on the degree-n quotient space."""

    degree: int
    functional: Functional
    name: str = ""

    def __call__(self, v: LinComb) -> Fraction:
        return self.functional(v)

    def on_key(self, key: str) -> Fraction:
        return self.functional(LinComb.single(key, 1))

    def value_vector(self):
        return self.functional.value_vector()


def _projector_constraints(n, cap):
    """F(D) = F(phi(D)) for every spanning diagram D."""
    out = []
    for d in enumerate_ccds(n, cap=cap):
        v = LinComb.single(canonical_key(d), 1)
        out.append((v - phi(n, v), 0))
    return out


def _low_leg_constraints(n, cap):
    """F vanishes on chordless characters with fewer than n legs."""
    out = []
    for cc in enumerate_chinese_characters(n, chordless=True, cap=cap):
        if len(cc.legs) < n:
            out.append((expand_cc(cc), 0))
    return out


def _wheel_constraints(n, cap, base):
    """F(D) = base**(number of parts) on each arrangement of each wheel."""
    out = []
    for partition in even_partitions(n):
        value = Fraction(base) ** len(partition)
        for key in e_set(tau(partition)):
            out.append((LinComb.single(key, 1), value))
    return out


def _solve_ws(n, cap, base, name) -> WeightSystem:
    space = build_A(n, cap=cap)
    if n == 0:
        empty = space.ambient[0]
        functional = solve_functional(
            space, [(LinComb.single(empty, 1), 1)], name=name
        )
        return WeightSystem(degree=0, functional=functional, name=name)
    constraints = []
    constraints.extend(_projector_constraints(n, cap))
    constraints.extend(_low_leg_constraints(n, cap))
    constraints.extend(_wheel_constraints(n, cap, base))
    functional = solve_functional(space, constraints, name=name)
    return WeightSystem(degree=n, functional=functional, name=name)


@lru_cache(maxsize=None)
def conway(n: int, cap: int | None = DEFAULT_CAP) -> WeightSystem:
    """Degree-n Alexander-Conway weight system.

    Pinned by: vanishing on the projector kernel, vanishing on chordless
    classes with fewer than n legs, and the value (-2)**parts on every
    arrangement of the wheel family of each even partition.  The linear
    solve doubles as a consistency check of those prescriptions: it fails
    loudly if they are contradictory or leave directions undetermined.
    """
    return _solve_ws(n, cap, -2, "conway")


@lru_cache(maxsize=None)
def conway_bar(n: int, cap: int | None = DEFAULT_CAP) -> WeightSystem:
    """The convolution inverse family: +2**parts on the wheel classes."""
    return _solve_ws(n, cap, 2, "conway-bar")


@lru_cache(maxsize=None)
def counit(n: int, cap: int | None = DEFAULT_CAP) -> WeightSystem:
    """1 on the degree-0 empty diagram, 0 in every positive degree."""
    space = build_A(n, cap=cap)
    if n == 0:
        empty = space.ambient[0]
        functional = solve_functional(
            space, [(LinComb.single(empty, 1), 1)], name="counit"
        )
    else:
        functional = Functional(space=space, values={}, name="counit")
    return WeightSystem(degree=n, functional=functional, name="counit")


def by_name(name: str, n: int, cap: int | None = DEFAULT_CAP) -> WeightSystem:
    builders = {"conway": conway, "conway-bar": conway_bar, "counit": counit}
    if name not in builders:
        raise ValueError(
            "unknown weight system %r (choose from %s)"
            % (name, ", ".join(sorted(builders)))
        )
    return builders[name](n, cap)


# ---------------------------------------------------------------------------
# products via the coproduct


def pair_eval(X: WeightSystem, Y: WeightSystem, v: LinComb) -> Fraction:
    """(X x Y) applied to the coproduct of v, respecting the grading."""
    total = Fraction(0)
    for key, coeff in v.terms.items():
        for (left, right), mult in coproduct(diagram_from_key(key)).items():
            if diagram_from_key(left).degree != X.degree:
                continue
            if diagram_from_key(right).degree != Y.degree:
                continue
            xval = X.on_key(left)
            if not xval:
                continue
            yval = Y.on_key(right)
            if yval:
                total += coeff * mult * xval * yval
    return total


def ws_product(X: WeightSystem, Y: WeightSystem,
               cap: int | None = DEFAULT_CAP) -> WeightSystem:
    """The product weight system of degree deg(X) + deg(Y)."""
    n = X.degree + Y.degree
    space = build_A(n, cap=cap)
    name = "%s*%s" % (X.name or "?", Y.name or "?")
    constraints = []
    for d in enumerate_ccds(n, cap=cap):
        v = LinComb.single(canonical_key(d), 1)
        constraints.append((v, pair_eval(X, Y, v)))
    functional = solve_functional(space, constraints, name=name)
    return WeightSystem(degree=n, functional=functional, name=name)


def check_convolution_identity(n: int, cap: int | None = DEFAULT_CAP) -> dict:
    """Values of sum(c_i . cbar_(n-i)) on every basis class of degree n.

    All values must be 0 for n >= 1; for n = 0 the single value is 1.
    """
    space = build_A(n, cap=cap)
    lower_c = [conway(i, cap) for i in range(n + 1)]
    lower_cbar = [conway_bar(i, cap) for i in range(n + 1)]
    report = {}
    for key in space.basis:
        v = LinComb.single(key, 1)
        total = Fraction(0)
        for i in range(n + 1):
            total += pair_eval(lower_c[i], lower_cbar[n - i], v)
        report[key] = total
    return report
