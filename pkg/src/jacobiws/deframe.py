"""Chord deletion, the deframing projector, the graded invariant subspace,
and the wheel characters indexed by partitions of the degree."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .diagrams import (
    CCD,
    DEFAULT_CAP,
    ChineseCharacter,
    canonical_key,
    diagram_from_key,
    enumerate_chinese_characters,
    internal_components,
    is_chord_component,
)
from .hopf import build_A, expand_cc, product, theta_power
from .linalg import LinComb, RowReducer


class NotHomogeneousError(ValueError):
    pass


def degree_of(v: LinComb) -> int:
    """Common degree of all keys; raises when mixed or empty."""
    degrees = {diagram_from_key(k).degree for k in v.keys()}
    if len(degrees) != 1:
        raise NotHomogeneousError(
            "expected a homogeneous combination, found degrees %s"
            % sorted(degrees)
        )
    return degrees.pop()


def _delete_component(d: CCD, comp: ChineseCharacter) -> CCD:
    gone = set(comp.darts())
    return CCD(
        tuple(x for x in d.wilson if x not in gone),
        tuple(t for t in d.triples if t[0] not in gone),
        tuple(e for e in d.edges if e[0] not in gone),
    )


def s_single(d: CCD) -> LinComb:
    """Sum over deletions of one chord component."""
    out = LinComb.zero()
    for comp in internal_components(d):
        if is_chord_component(comp):
            out = out + LinComb.single(
                canonical_key(_delete_component(d, comp)), 1
            )
    return out


def s_map(v: LinComb) -> LinComb:
    """Linear extension of chord deletion; drops the degree by one."""
    if v:
        if degree_of(v) < 1:
            raise NotHomogeneousError("chord deletion needs degree >= 1")
    out = LinComb.zero()
    for key, coeff in v.terms.items():
        out = out + s_single(diagram_from_key(key)).scale(coeff)
    return out


def phi(n: int, v: LinComb) -> LinComb:
    """Deframing projector: alternating sum of chord reinsertions.

    phi_n = Id - t.s + t^2 s^2/2! - ... + (-1)^n t^n s^n/n!  with t the
    single-chord diagram multiplied in by connect sum at the base point.
    """
    if v and degree_of(v) != n:
        raise NotHomogeneousError("combination is not of degree %d" % n)
    total = LinComb.zero()
    current = v
    for i in range(n + 1):
        if i == 0:
            term = current
        else:
            current = s_map(current)
            if not current:
                break
            term = product(
                LinComb.single(canonical_key(theta_power(i)), 1), current
            )
        total = total + term.scale(Fraction((-1) ** i, factorial(i)))
    return total


def even_partitions(n: int) -> list:
    """Partitions of n into even positive parts, descending lexicographic."""
    out = []

    def rec(remaining, maximum, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        first = min(remaining, maximum)
        if first % 2:
            first -= 1
        for part in range(first, 1, -2):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return out


def tau(partition) -> ChineseCharacter:
    """Disjoint union of wheels: for each part, a cycle of that many
    trivalent vertices with one radial leg per vertex.

    All vertices carry the same cyclic orientation, which for even parts
    is the planar wheel class (an even number of flips relates the two
    consistent orientations).  A part of 1 degenerates to the tadpole;
    a part of 2 is the double edge with two legs.
    """
    legs = []
    triples = []
    edges = []
    base = 0
    for part in partition:
        if part < 1:
            raise ValueError("partition parts must be positive")
        for v in range(part):
            prev_d = base + 4 * v
            next_d = base + 4 * v + 1
            slot = base + 4 * v + 2
            leg = base + 4 * v + 3
            triples.append((prev_d, next_d, slot))
            edges.append(tuple(sorted((slot, leg))))
            legs.append(leg)
            w = (v + 1) % part
            edges.append(tuple(sorted((next_d, base + 4 * w))))
        base += 4 * part
    return ChineseCharacter(tuple(sorted(legs)), tuple(triples),
                            tuple(sorted(set(edges))))


@dataclass
class DeframedDecomposition:
    kernel_part: LinComb
    invariant_parts: dict  # leg count -> LinComb

    def resum(self) -> LinComb:
        total = self.kernel_part
        for part in self.invariant_parts.values():
            total = total + part
        return total


from functools import lru_cache


@lru_cache(maxsize=None)
def _chordless_solver(n: int):
    """Factorized rewrite of degree-n classes through chordless characters.

    Returns (spanners, position, solve) where ``solve`` maps a reduced
    coordinate dict {basis position: coefficient} to spanner coefficients,
    or None when the target is outside the span.  The elimination runs
    once; provenance columns replay it on new right-hand sides.
    """
    space = build_A(n)
    position = {key: i for i, key in enumerate(space.basis)}
    spanners = enumerate_chinese_characters(n, chordless=True)
    nspan = len(spanners)
    rows = {}
    for j, cc in enumerate(spanners):
        coords = space.reduce(expand_cc(cc))
        for key, c in coords.items():
            rows.setdefault(position[key], {})[j] = c
    reducer = RowReducer()
    for i in sorted(rows):
        row = dict(rows[i])
        row[nspan + i] = Fraction(1)  # provenance: which target coord
        reducer.add(row)

    def solve(target: dict):
        solution = {}
        for col, row in reducer.pivots.items():
            value = Fraction(0)
            for c, coeff in row.items():
                if c >= nspan:
                    value += coeff * target.get(c - nspan, 0)
            if col >= nspan:
                # a vanishing combination of spanners: target must vanish too
                if value:
                    return None
            elif value:
                solution[col] = value
        # coordinates not touched by any spanner must be absent from target
        for i in target:
            if target[i] and i not in rows:
                return None
        return solution

    return spanners, position, solve


def decompose(n: int, v: LinComb) -> DeframedDecomposition:
    """Split v into its projector kernel part and leg-graded invariant parts.

    The projected image is rewritten through the chordless characters
    (they span the invariant subspace), then regrouped by leg count.
    Legless chordless classes land in invariant_parts[0].
    """
    if v and degree_of(v) != n:
        raise NotHomogeneousError("combination is not of degree %d" % n)
    space = build_A(n)
    image = phi(n, v)
    kernel_part = v - image

    spanners, position, solve = _chordless_solver(n)
    target = {position[k]: c for k, c in space.reduce(image).items()}
    solution = solve(target)
    if solution is None:
        raise RuntimeError(
            "projected image not in the span of chordless characters; "
            "this contradicts the invariant-subspace lemma"
        )

    parts = {}
    for j, coeff in solution.items():
        if not coeff:
            continue
        cc = spanners[j]
        p = len(cc.legs)
        parts[p] = parts.get(p, LinComb.zero()) + expand_cc(cc).scale(coeff)
    parts = {p: w for p, w in parts.items() if w}

    resummed = kernel_part
    for part in parts.values():
        resummed = resummed + part
    if not space.is_zero(resummed - v):
        raise RuntimeError("decomposition does not re-sum to the input class")
    return DeframedDecomposition(kernel_part=kernel_part, invariant_parts=parts)


def tau_classes(n: int) -> list:
    """reduce-ready expansions of the wheel characters, one per even partition."""
    return [expand_cc(tau(P)) for P in even_partitions(n)]


def dim_Inn(n: int, cap: int | None = DEFAULT_CAP, method: str = "auto") -> int:
    """Rank of the wheel classes indexed by even partitions of n.

    ``quotient`` reduces against the full degree-n relation quotient;
    ``certificate`` lower-bounds the rank with exact relation-invariant
    state-sum functionals (and the trivial upper bound), which stays
    feasible at n = 6 where the full quotient does not.
    """
    parts = even_partitions(n)
    if not parts:
        return 0
    if method == "auto":
        method = "quotient" if n <= 4 else "certificate"
    if method == "quotient":
        space = build_A(n, cap=cap)
        position = {key: i for i, key in enumerate(space.basis)}
        reducer = RowReducer()
        for w in tau_classes(n):
            coords = space.reduce(w)
            reducer.add({position[k]: c for k, c in coords.items()})
        rank = reducer.rank
    elif method == "certificate":
        from .verma import wheel_rank_certificate

        rank = wheel_rank_certificate(n)
    else:
        raise ValueError("unknown method %r" % method)
    if rank != len(parts):
        raise RuntimeError(
            "wheel classes of degree %d have rank %d, expected %d"
            % (n, rank, len(parts))
        )
    return rank
