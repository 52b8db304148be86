"""The graded diagram algebra: three-term relations, quotient spaces,
connect-sum product, component coproduct, and leg expansion of loop-free
characters (with the antisymmetry / rerouting consistency sweep).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagrams import (
    CCD,
    DEFAULT_CAP,
    ChineseCharacter,
    canonical_key,
    diagram_from_key,
    enumerate_ccds,
    enumerate_chinese_characters,
    internal_components,
    leg_placements,
    relabel,
)
from .linalg import LinComb, QuotientSpace

THETA = CCD(wilson=(0, 1), triples=(), edges=((0, 1),))
THETA_KEY = canonical_key(THETA)
EMPTY_KEY = canonical_key(CCD((), (), ()))


@dataclass(frozen=True)
class STURelation:
    """One local relation: s_term - t_term + u_term = 0 in the quotient."""

    s_term: str
    t_term: str
    u_term: str

    def lincomb(self) -> LinComb:
        return LinComb([(self.s_term, 1), (self.t_term, -1), (self.u_term, 1)])


def _fresh_darts(d: CCD, count: int):
    top = max(d.darts(), default=-1)
    return [top + 1 + i for i in range(count)]


def stu_terms(d: CCD, position: int) -> STURelation:
    """The relation obtained by fusing the legs at ``position`` and the next
    Wilson position into an internal vertex.

    The fused vertex triple is (toward the earlier leg's far end, toward the
    later leg's far end, new leg), so that resolving it back with the bracket
    tensor reproduces the transposition difference of the two legs.
    """
    p = len(d.wilson)
    if p < 2:
        raise ValueError("need at least two legs")
    i = position % p
    j = (i + 1) % p
    li, lj = d.wilson[i], d.wilson[j]

    # U: the two adjacent legs transposed on the loop
    wilson_u = list(d.wilson)
    wilson_u[i], wilson_u[j] = wilson_u[j], wilson_u[i]
    u = CCD(tuple(wilson_u), d.triples, d.edges)

    # S: legs fused into one internal vertex hanging off a single new leg
    partner = {}
    for a, b in d.edges:
        partner[a] = b
        partner[b] = a
    qa, qb, qm, m = _fresh_darts(d, 4)
    edges = [e for e in d.edges if li not in e and lj not in e]
    if partner[li] == lj:
        edges.append((qa, qb))  # the chord closes into a loop at the vertex
    else:
        edges.append(tuple(sorted((qa, partner[li]))))
        edges.append(tuple(sorted((qb, partner[lj]))))
    edges.append((qm, m))
    wilson_s = [x for x in d.wilson if x not in (li, lj)]
    wilson_s.insert(i if i < j else i - 1, m)
    s = CCD(
        tuple(wilson_s),
        d.triples + ((qa, qb, qm),),
        tuple(sorted(edges)),
    )
    return STURelation(
        s_term=canonical_key(s),
        t_term=canonical_key(d),
        u_term=canonical_key(u),
    )


def generate_stu(n: int, cap: int | None = DEFAULT_CAP) -> list[STURelation]:
    """All relations from every adjacent leg pair of every degree-n diagram."""
    out = []
    for d in enumerate_ccds(n, cap=cap):
        p = len(d.wilson)
        if p < 2:
            continue
        for i in range(p):
            out.append(stu_terms(d, i))
    return out


@lru_cache(maxsize=None)
def build_A(n: int, cap: int | None = DEFAULT_CAP) -> QuotientSpace:
    """The degree-n quotient space over all enumerated diagram classes."""
    from . import cache

    def producer():
        ambient = [canonical_key(d) for d in enumerate_ccds(n, cap=cap)]
        relations = [rel.lincomb() for rel in generate_stu(n, cap=cap)]
        return QuotientSpace.build(ambient, relations)

    return cache.cached_quotient("A-n%d" % n, producer)


# ---------------------------------------------------------------------------
# product and coproduct


def connect_sum_at(x: CCD, y: CCD, position: int) -> CCD:
    """Splice y's Wilson loop into x's at the given leg position of x."""
    offset = max(x.darts(), default=-1) + 1
    y2 = relabel(y, offset)
    wx = list(x.wilson)
    wilson = tuple(wx[:position]) + tuple(y2.wilson) + tuple(wx[position:])
    return CCD(wilson, x.triples + y2.triples,
               tuple(sorted(x.edges + y2.edges)))


def connect_sum(x: CCD, y: CCD) -> CCD:
    """Product representative: cut both loops just before wilson[0]."""
    return connect_sum_at(x, y, 0)


def product(v: LinComb, w: LinComb) -> LinComb:
    out = LinComb.zero()
    for kx, cx in v.terms.items():
        dx = diagram_from_key(kx)
        for ky, cy in w.terms.items():
            dy = diagram_from_key(ky)
            out = out + LinComb.single(
                canonical_key(connect_sum(dx, dy)), cx * cy
            )
    return out


def theta_power(i: int) -> CCD:
    d = CCD((), (), ())
    for _ in range(i):
        d = connect_sum(THETA, d)
    return d


def _subdiagram(d: CCD, comps, chosen) -> CCD:
    keep_darts = set()
    for idx in chosen:
        keep_darts.update(comps[idx].darts())
    wilson = tuple(x for x in d.wilson if x in keep_darts)
    triples = tuple(t for t in d.triples if t[0] in keep_darts)
    edges = tuple(e for e in d.edges if e[0] in keep_darts)
    return CCD(wilson, triples, edges)


def coproduct(d: CCD) -> dict:
    """Sum over splittings of the internal components into two groups.

    Returns a dict (left key, right key) -> coefficient; there are
    2**(number of components) terms before merging.
    """
    comps = internal_components(d)
    k = len(comps)
    out = {}
    for mask in range(1 << k):
        chosen = [i for i in range(k) if mask & (1 << i)]
        rest = [i for i in range(k) if not mask & (1 << i)]
        left = canonical_key(_subdiagram(d, comps, chosen))
        right = canonical_key(_subdiagram(d, comps, rest))
        out[(left, right)] = out.get((left, right), 0) + Fraction(1)
    return out


def coproduct_lincomb(v: LinComb) -> dict:
    out = {}
    for key, coeff in v.terms.items():
        for pair, mult in coproduct(diagram_from_key(key)).items():
            acc = out.get(pair, 0) + coeff * mult
            if acc:
                out[pair] = acc
            else:
                out.pop(pair, None)
    return out


# ---------------------------------------------------------------------------
# leg expansion of loop-free characters


def expand_cc(v: ChineseCharacter) -> LinComb:
    """Sum with unit coefficients over the (p-1)! cyclic leg arrangements."""
    out = LinComb.zero()
    for d in leg_placements(v):
        out = out + LinComb.single(canonical_key(d), 1)
    return out


def e_set(v: ChineseCharacter) -> tuple:
    """The distinct diagram classes occurring in expand_cc(v)."""
    return tuple(sorted(expand_cc(v).keys()))


def planar_wheel_diagram(cc: ChineseCharacter) -> CCD:
    """The leg placement that keeps each component's legs consecutive and in
    rim order (for wheel characters this is the planar representative)."""
    comps = internal_components(cc)
    wilson = []
    for comp in comps:
        wilson.extend(_rim_ordered_legs(comp))
    return CCD(tuple(wilson), cc.triples, cc.edges)


def _rim_ordered_legs(comp: ChineseCharacter):
    if not comp.triples:
        return list(comp.legs)
    partner = {}
    for a, b in comp.edges:
        partner[a] = b
        partner[b] = a
    vertex_of = {}
    for vi, t in enumerate(comp.triples):
        for x in t:
            vertex_of[x] = vi
    legset = set(comp.legs)
    # walk the rim: from a vertex, exit through the next non-leg dart
    start = vertex_of[partner[comp.legs[0]]]
    order = []
    v = start
    entry = partner[comp.legs[0]]
    for _ in range(len(comp.triples)):
        t = comp.triples[v]
        leg_dart = next(x for x in t if partner[x] in legset)
        order.append(partner[leg_dart])
        k = t.index(entry)
        exit_dart = t[(k + 1) % 3]
        if exit_dart == leg_dart:
            exit_dart = t[(k + 2) % 3]
        entry = partner[exit_dart]
        v = vertex_of[entry]
    return order


# ---------------------------------------------------------------------------
# antisymmetry and rerouting sweep


def as_variant(cc: ChineseCharacter, vertex: int) -> ChineseCharacter:
    """Reverse the cyclic order at one vertex."""
    triples = list(cc.triples)
    a, b, c = triples[vertex]
    triples[vertex] = (a, c, b)
    return ChineseCharacter(cc.legs, tuple(triples), cc.edges)


def ihx_variants(cc: ChineseCharacter, edge) -> tuple:
    """The two re-pairings of an internal edge between distinct vertices.

    For the edge m between u = (a, b, m) and w = (m, c, d) (triples rotated
    so the edge dart sits last resp. first) the companions are
    H: u = (b, c, m), w = (m, d, a)  and  X: u = (a, c, m), w = (m, d, b);
    the original minus H plus X expands to zero in the quotient.
    """
    d1, d2 = edge
    vertex_of = {}
    for vi, t in enumerate(cc.triples):
        for x in t:
            vertex_of[x] = vi
    u, w = vertex_of[d1], vertex_of[d2]
    if u == w:
        raise ValueError("edge is a loop at one vertex")
    tu, tw = cc.triples[u], cc.triples[w]
    ku, kw = tu.index(d1), tw.index(d2)
    a, b = tu[(ku + 1) % 3], tu[(ku + 2) % 3]
    c, dd = tw[(kw + 1) % 3], tw[(kw + 2) % 3]

    def rebuilt(tu2, tw2):
        triples = list(cc.triples)
        triples[u] = tu2
        triples[w] = tw2
        return ChineseCharacter(cc.legs, tuple(triples), cc.edges)

    h = rebuilt((b, c, d1), (d2, dd, a))
    x = rebuilt((a, c, d1), (d2, dd, b))
    return h, x


def check_ihx_as(n: int, cap: int | None = DEFAULT_CAP) -> list:
    """Sweep every vertex (antisymmetry) and internal edge (rerouting) of
    every degree-n character; returns the list of violations (should be []).

    Only instances inside components carrying at least one leg are swept:
    the three-term relations act through legs, so legless components are
    inert in the quotient and cannot satisfy these identities there.
    """
    space = build_A(n, cap=cap)
    violations = []
    for cc in enumerate_chinese_characters(n, cap=cap):
        vertex_of = {}
        for vi, t in enumerate(cc.triples):
            for x in t:
                vertex_of[x] = vi
        legged = set()
        for comp in internal_components(cc):
            if comp.legs:
                for t in comp.triples:
                    legged.add(vertex_of[t[0]])
        expanded = expand_cc(cc)
        for vi in range(len(cc.triples)):
            if vi not in legged:
                continue
            rel = expanded + expand_cc(as_variant(cc, vi))
            if not space.is_zero(rel):
                violations.append(("AS", canonical_key(cc), vi))
        for a, b in cc.edges:
            if (
                a in vertex_of
                and b in vertex_of
                and vertex_of[a] != vertex_of[b]
                and vertex_of[a] in legged
            ):
                h, x = ihx_variants(cc, (a, b))
                rel = expanded - expand_cc(h) + expand_cc(x)
                if not space.is_zero(rel):
                    violations.append(("IHX", canonical_key(cc), (a, b)))
    return violations


def spanning_defect(n: int, cap: int | None = DEFAULT_CAP) -> int:
    """dim A_n minus the rank of the expanded characters (0 if they span)."""
    from .linalg import RowReducer

    space = build_A(n, cap=cap)
    pos = {key: i for i, key in enumerate(space.basis)}
    reducer = RowReducer()
    for cc in enumerate_chinese_characters(n, cap=cap):
        coords = space.reduce(expand_cc(cc))
        reducer.add({pos[k]: c for k, c in coords.items()})
    return space.dim - reducer.rank
