"""Trivalent chord diagrams on a Wilson loop and their loop-free cousins.

A diagram is stored as a set of darts (half-edge ends, plain ints):

* ``wilson`` -- leg darts in cyclic order on the Wilson loop (CCD only);
* ``legs``   -- unordered leg darts (loop-free characters);
* ``triples`` -- one dart triple per internal trivalent vertex, in cyclic
  order (the triple is significant up to rotation, not reversal);
* ``edges``  -- a fixed-point-free involution pairing all darts.

Canonical forms are computed by a deterministic trace of the diagram from
every admissible starting choice (Wilson rotation, or component roots),
taking the minimal resulting certificate.  The canonical key of a diagram
is the serialization of its canonical relabeling, so keys double as a
complete, parseable description of the diagram.

Enumeration is isomorph-free: connected loop-free components are generated
with discovery-ordered vertex labels, deduplicated by invariant bucketing
plus exact isomorphism tests, and assembled into full diagrams whose leg
arrangements on the Wilson loop are then bucketed by canonical key.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_CAP = 6

FORMAT_VERSION = "v1"


class DiagramError(ValueError):
    pass


class DiagramSyntaxError(DiagramError):
    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class DiagramValidationError(DiagramError):
    def __init__(self, message, dart=None):
        super().__init__(message)
        self.dart = dart


class CapExceededError(DiagramError):
    def __init__(self, n, cap):
        super().__init__("degree %d exceeds enumeration cap %d" % (n, cap))
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class CCD:
    """Diagram with legs cyclically ordered on a Wilson loop."""

    wilson: tuple
    triples: tuple
    edges: tuple

    @property
    def degree(self) -> int:
        return (len(self.wilson) + len(self.triples)) // 2

    def darts(self):
        out = list(self.wilson)
        for t in self.triples:
            out.extend(t)
        return out


@dataclass(frozen=True)
class ChineseCharacter:
    """Loop-free diagram; legs are unordered univalent vertices."""

    legs: tuple
    triples: tuple
    edges: tuple

    @property
    def degree(self) -> int:
        return (len(self.legs) + len(self.triples)) // 2

    def darts(self):
        out = list(self.legs)
        for t in self.triples:
            out.extend(t)
        return out


EMPTY_CCD = CCD((), (), ())
EMPTY_CC = ChineseCharacter((), (), ())


# ---------------------------------------------------------------------------
# validation


def _partner_dict(edges, all_darts):
    partner = {}
    for a, b in edges:
        if a == b:
            raise DiagramValidationError(
                "edge pairs dart %r with itself" % (a,), dart=a
            )
        for x, y in ((a, b), (b, a)):
            if x in partner:
                raise DiagramValidationError(
                    "dart %r appears in more than one edge" % (x,), dart=x
                )
            partner[x] = y
    for d in all_darts:
        if d not in partner:
            raise DiagramValidationError("dangling dart %r" % (d,), dart=d)
    for d in partner:
        if d not in all_darts:
            raise DiagramValidationError(
                "edge references undeclared dart %r" % (d,), dart=d
            )
    return partner


def validate_diagram(d):
    """Check the structural invariants; raises DiagramValidationError."""
    legs = d.wilson if isinstance(d, CCD) else d.legs
    seen = set()
    for dart in itertools.chain(legs, *d.triples):
        if dart in seen:
            raise DiagramValidationError(
                "dart %r appears at more than one vertex" % (dart,), dart=dart
            )
        seen.add(dart)
    _partner_dict(d.edges, seen)
    if isinstance(d, ChineseCharacter) and tuple(d.legs) != tuple(sorted(d.legs)):
        raise DiagramValidationError("legs of a character must be sorted")
    return True


# ---------------------------------------------------------------------------
# canonical forms
#
# Internally darts are renumbered 0..D-1 so traces run on flat lists.
# Certificate tokens: j >= 0 closes an edge back to the dart traced at
# position j; NEW_VERTEX appends an oriented dart triple; NEW_LEG appends
# a single leg dart (rooted traces of loop-free characters only).

NEW_VERTEX = -1
NEW_LEG = -2


class _Graph:
    __slots__ = ("n", "partner", "vertex_of", "triples", "legflag", "darts")

    def __init__(self, diagram):
        legs = diagram.wilson if isinstance(diagram, CCD) else diagram.legs
        darts = list(legs)
        for t in diagram.triples:
            darts.extend(t)
        index = {d: i for i, d in enumerate(darts)}
        n = len(darts)
        self.n = n
        self.darts = darts
        self.partner = [0] * n
        for a, b in diagram.edges:
            ia, ib = index[a], index[b]
            self.partner[ia] = ib
            self.partner[ib] = ia
        self.vertex_of = [-1] * n
        self.triples = [
            (index[a], index[b], index[c]) for a, b, c in diagram.triples
        ]
        for v, t in enumerate(self.triples):
            for x in t:
                self.vertex_of[x] = v
        self.legflag = [False] * n
        for leg in legs:
            self.legflag[index[leg]] = True


def _trace(g: _Graph, seeds):
    """Deterministic trace; returns (records, dart_order, vertex_order)."""
    loc = [-1] * g.n
    order = []
    records = []
    vertex_order = []
    partner = g.partner
    vertex_of = g.vertex_of
    triples = g.triples
    for s in seeds:
        loc[s] = len(order)
        order.append(s)
    i = 0
    while i < len(order):
        b = partner[order[i]]
        i += 1
        j = loc[b]
        if j >= 0:
            records.append(j)
            continue
        v = vertex_of[b]
        if v < 0:
            records.append(NEW_LEG)
            loc[b] = len(order)
            order.append(b)
        else:
            records.append(NEW_VERTEX)
            vertex_order.append(v)
            t = triples[v]
            k = t.index(b)
            for dd in (t[k], t[(k + 1) % 3], t[(k + 2) % 3]):
                loc[dd] = len(order)
                order.append(dd)
    return records, order, vertex_order


def _closed_component_cert(g: _Graph, comp_vertices):
    """Minimal certificate of a legless component over all rooted traces."""
    best = None
    for root in comp_vertices:
        t = g.triples[root]
        for r in range(3):
            seeds = (t[r], t[(r + 1) % 3], t[(r + 2) % 3])
            records, order, vorder = _trace(g, seeds)
            if best is None or records < best[0]:
                best = (records, order, [root] + vorder)
    return best


def _vertex_components(g: _Graph, skip):
    """Components of the internal graph on vertices not in ``skip``."""
    remaining = set(range(len(g.triples))) - set(skip)
    comps = []
    while remaining:
        root = min(remaining)
        comp = {root}
        queue = [root]
        while queue:
            v = queue.pop()
            for dart in g.triples[v]:
                w = g.vertex_of[g.partner[dart]]
                if w >= 0 and w in remaining and w not in comp:
                    comp.add(w)
                    queue.append(w)
        remaining -= comp
        comps.append(sorted(comp))
    return comps


def _relabeled(diagram, g: _Graph, order, vorder):
    label = [-1] * g.n
    for pos, dart in enumerate(order):
        label[dart] = pos
    triples = []
    for v in vorder:
        t = g.triples[v]
        k = min(range(3), key=lambda i: label[t[i]])
        triples.append((label[t[k]], label[t[(k + 1) % 3]], label[t[(k + 2) % 3]]))
    edges = set()
    for a in range(g.n):
        b = g.partner[a]
        la, lb = label[a], label[b]
        edges.add((la, lb) if la < lb else (lb, la))
    if isinstance(diagram, CCD):
        p = len(diagram.wilson)
        return CCD(tuple(range(p)), tuple(triples), tuple(sorted(edges)))
    legs = tuple(sorted(label[i] for i in range(g.n) if g.legflag[i]))
    return ChineseCharacter(legs, tuple(triples), tuple(sorted(edges)))


def _canonical_ccd(d: CCD) -> CCD:
    g = _Graph(d)
    p = len(d.wilson)
    best = None
    if p == 0:
        best = ([], [], [])
    else:
        for r in range(p):
            seeds = [r + i if r + i < p else r + i - p for i in range(p)]
            records, order, vorder = _trace(g, seeds)
            if best is None or records < best[0]:
                best = (records, order, vorder)
    _, order, vorder = best
    closed = [
        _closed_component_cert(g, comp) for comp in _vertex_components(g, vorder)
    ]
    closed.sort(key=lambda item: item[0])
    order = list(order)
    vorder = list(vorder)
    for _, corder, cvorder in closed:
        order.extend(corder)
        vorder.extend(cvorder)
    return _relabeled(d, g, order, vorder)


def _canonical_cc(d: ChineseCharacter) -> ChineseCharacter:
    g = _Graph(d)
    nlegs = len(d.legs)
    comp_certs = []
    used_vertices = []
    assigned = [False] * g.n
    for leg in range(nlegs):
        if assigned[leg]:
            continue
        records, order, vorder = _trace(g, (leg,))
        comp_legs = [x for x in order if g.legflag[x]]
        for x in comp_legs:
            assigned[x] = True
        best = (records, order, vorder)
        for root in comp_legs:
            if root == leg:
                continue
            cand = _trace(g, (root,))
            if cand[0] < best[0]:
                best = cand
        comp_certs.append(((0,) + tuple(best[0]), best[1], best[2]))
        used_vertices.extend(vorder)
    for comp in _vertex_components(g, used_vertices):
        records, order, vorder = _closed_component_cert(g, comp)
        comp_certs.append(((1,) + tuple(records), order, vorder))
    comp_certs.sort(key=lambda item: item[0])
    order = []
    vorder = []
    for _, corder, cvorder in comp_certs:
        order.extend(corder)
        vorder.extend(cvorder)
    return _relabeled(d, g, order, vorder)


def canonical_form(d):
    """The canonical representative of the isomorphism class of ``d``."""
    validate_diagram(d)
    if isinstance(d, CCD):
        return _canonical_ccd(d)
    return _canonical_cc(d)


@lru_cache(maxsize=1 << 18)
def canonical_key(d) -> str:
    """Serialized canonical form; equal keys iff isomorphic diagrams."""
    return _serialize(canonical_form(d))


# ---------------------------------------------------------------------------
# text format


def _dart_names(n):
    width = max(2, len(str(max(n - 1, 0))))
    return ["d%0*d" % (width, i) for i in range(n)]


def _serialize(c) -> str:
    ndarts = len(c.darts())
    names = _dart_names(ndarts)
    lines = []
    if isinstance(c, CCD):
        lines.append("ccd " + FORMAT_VERSION)
        lines.append("degree %d" % c.degree)
        lines.append(("wilson " + " ".join(names[x] for x in c.wilson)).rstrip())
    else:
        lines.append("cc " + FORMAT_VERSION)
        lines.append("degree %d" % c.degree)
        lines.append(("legs " + " ".join(names[x] for x in c.legs)).rstrip())
    for v, t in enumerate(c.triples):
        lines.append("vertex v%d %s" % (v, " ".join(names[x] for x in t)))
    for a, b in c.edges:
        lines.append("edge %s %s" % (names[a], names[b]))
    return "\n".join(lines) + "\n"


def serialize_diagram(d) -> str:
    """Bit-exact serialization of the canonical form of ``d``.

    Line order: header, degree, wilson/legs, vertex lines in canonical
    vertex order, then edge lines sorted; single spaces, trailing newline.
    """
    return canonical_key(d)


def parse_diagram(text: str):
    """Parse the line-oriented diagram format (';' also separates statements)."""
    statements = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        raw = raw.split("#", 1)[0]
        for piece in raw.split(";"):
            piece = piece.strip()
            if piece:
                statements.append((lineno, piece.split()))
    if not statements:
        raise DiagramSyntaxError("empty diagram text")

    lineno, head = statements[0]
    kind = head[0].lower()
    if kind not in ("ccd", "cc"):
        raise DiagramSyntaxError("expected 'ccd' or 'cc' header", line=lineno)
    if len(head) > 2 or (len(head) == 2 and head[1] != FORMAT_VERSION):
        raise DiagramSyntaxError(
            "bad header %r (supported version: %s)" % (" ".join(head), FORMAT_VERSION),
            line=lineno,
        )

    declared_degree = None
    wilson = None
    legs = None
    triples = []
    edge_tokens = []
    ids = {}

    def dart_id(token, declare, lineno):
        if declare:
            if token in ids:
                raise DiagramSyntaxError(
                    "dart %r declared twice" % token, line=lineno
                )
            ids[token] = len(ids)
        elif token not in ids:
            raise DiagramSyntaxError(
                "edge references undeclared dart %r" % token, line=lineno
            )
        return ids[token]

    for lineno, stmt in statements[1:]:
        word = stmt[0].lower()
        args = stmt[1:]
        if word == "degree":
            if len(args) != 1 or not args[0].isdigit():
                raise DiagramSyntaxError("degree wants one integer", line=lineno)
            declared_degree = int(args[0])
        elif word == "wilson":
            if kind != "ccd" or wilson is not None:
                raise DiagramSyntaxError("unexpected wilson statement", line=lineno)
            wilson = tuple(dart_id(tok, True, lineno) for tok in args)
        elif word == "legs":
            if kind != "cc" or legs is not None:
                raise DiagramSyntaxError("unexpected legs statement", line=lineno)
            legs = tuple(dart_id(tok, True, lineno) for tok in args)
        elif word == "vertex":
            if len(args) != 4:
                raise DiagramSyntaxError(
                    "vertex wants a name and three darts", line=lineno
                )
            triples.append(tuple(dart_id(tok, True, lineno) for tok in args[1:]))
        elif word == "edge":
            if len(args) != 2:
                raise DiagramSyntaxError("edge wants two darts", line=lineno)
            edge_tokens.append((lineno, args[0], args[1]))
        else:
            raise DiagramSyntaxError("unknown statement %r" % word, line=lineno)

    edges = []
    for lineno, ta, tb in edge_tokens:
        a = dart_id(ta, False, lineno)
        b = dart_id(tb, False, lineno)
        edges.append(tuple(sorted((a, b))))

    if kind == "ccd":
        d = CCD(
            wilson=wilson if wilson is not None else (),
            triples=tuple(triples),
            edges=tuple(sorted(edges)),
        )
    else:
        d = ChineseCharacter(
            legs=tuple(sorted(legs)) if legs is not None else (),
            triples=tuple(triples),
            edges=tuple(sorted(edges)),
        )
    validate_diagram(d)
    if declared_degree is not None and declared_degree != d.degree:
        raise DiagramValidationError(
            "declared degree %d but diagram has degree %d"
            % (declared_degree, d.degree)
        )
    return d


@lru_cache(maxsize=None)
def diagram_from_key(key: str):
    """Parse a canonical key back into its diagram."""
    return parse_diagram(key)


def relabel(d, offset: int):
    """Shift every dart id by ``offset`` (used for disjoint unions)."""
    shift = lambda t: tuple(x + offset for x in t)
    if isinstance(d, CCD):
        return CCD(shift(d.wilson), tuple(map(shift, d.triples)),
                   tuple(map(shift, d.edges)))
    return ChineseCharacter(shift(d.legs), tuple(map(shift, d.triples)),
                            tuple(map(shift, d.edges)))


# ---------------------------------------------------------------------------
# components


def internal_components(d):
    """Connected components of the internal graph (legs included).

    Returns a list of ChineseCharacter values, one per component, with the
    original dart ids kept.  For a CCD the Wilson loop itself is not part
    of the graph; legs belong to the component of their edge.
    """
    legset = set(d.wilson) if isinstance(d, CCD) else set(d.legs)
    partner = {}
    for a, b in d.edges:
        partner[a] = b
        partner[b] = a
    vertex_of = {}
    for v, t in enumerate(d.triples):
        for dart in t:
            vertex_of[dart] = v
    seen = set()
    comps = []
    for dart in sorted(partner):
        if dart in seen:
            continue
        queue = [dart]
        comp_darts = set()
        while queue:
            x = queue.pop()
            if x in comp_darts:
                continue
            comp_darts.add(x)
            queue.append(partner[x])
            v = vertex_of.get(x)
            if v is not None:
                queue.extend(d.triples[v])
        seen |= comp_darts
        comp_legs = tuple(sorted(x for x in comp_darts if x in legset))
        comp_triples = tuple(t for t in d.triples if t[0] in comp_darts)
        comp_edges = tuple(sorted(e for e in d.edges if e[0] in comp_darts))
        comps.append(ChineseCharacter(comp_legs, comp_triples, comp_edges))
    return comps


def is_chord_component(comp: ChineseCharacter) -> bool:
    """A chord is a component with no trivalent vertices."""
    return not comp.triples


def has_isolated_chord(d: CCD) -> bool:
    """True if some chord component spans two adjacent Wilson positions."""
    p = len(d.wilson)
    if p < 2:
        return False
    pos = {dart: i for i, dart in enumerate(d.wilson)}
    for comp in internal_components(d):
        if is_chord_component(comp):
            a, b = comp.legs
            if (pos[a] - pos[b]) % p in (1, p - 1):
                return True
    return False


def cc_from_ccd(d: CCD) -> ChineseCharacter:
    """Forget the Wilson loop, keeping the internal graph."""
    return ChineseCharacter(tuple(sorted(d.wilson)), d.triples, d.edges)


def leg_placements(cc: ChineseCharacter):
    """All CCDs obtained by arranging the character's legs on a Wilson loop.

    Yields one CCD per cyclic order: the first leg is pinned at position 0
    and the remaining legs are permuted, giving (p-1)! arrangements (one
    arrangement when p <= 1).  Duplicates up to isomorphism are NOT merged.
    """
    legs = tuple(sorted(cc.legs))
    if not legs:
        yield CCD((), cc.triples, cc.edges)
        return
    first, rest = legs[0], legs[1:]
    for perm in itertools.permutations(rest):
        yield CCD((first,) + perm, cc.triples, cc.edges)


# ---------------------------------------------------------------------------
# enumeration


def _check_cap(n, cap):
    if n < 0:
        raise DiagramError("degree must be >= 0")
    if cap is not None and n > cap:
        raise CapExceededError(n, cap)


def _matchings(darts):
    """All perfect matchings of a list (fixed-point-free involutions)."""
    if not darts:
        yield []
        return
    first = darts[0]
    for i in range(1, len(darts)):
        rest = darts[1:i] + darts[i + 1:]
        for sub in _matchings(rest):
            yield [(first, darts[i])] + sub


@lru_cache(maxsize=None)
def enumerate_chord_diagrams(n: int, cap: int | None = DEFAULT_CAP):
    """Chord diagrams of degree n: matchings of 2n circle points mod rotation."""
    _check_cap(n, cap)
    points = tuple(range(2 * n))
    seen = {}
    for matching in _matchings(list(points)):
        d = CCD(wilson=points, triples=(), edges=tuple(sorted(matching)))
        key = canonical_key(d)
        seen.setdefault(key, diagram_from_key(key))
    return tuple(seen[k] for k in sorted(seen))


# -- connected loop-free components ----------------------------------------
#
# A connected component with t >= 1 trivalent vertices is encoded by its
# internal multigraph (vertices 0..t-1, loops allowed) plus per-vertex leg
# counts.  Generation forces vertices to appear in discovery order, which
# removes most labeling redundancy; exact isomorphism tests inside
# invariant buckets remove the rest.


def _component_codes(t: int, p: int):
    """Connected (multigraph, legcounts) codes with t vertices and p legs."""
    if t == 1:
        if p == 3:
            return [((), (3,))]
        if p == 1:
            return [(((0, 0),), (1,))]
        return []
    out = []
    edges = []
    cap = [0] * t
    ell = [0] * t

    def rec(i, min_j, used, legs_left):
        while i < used and cap[i] == 0:
            i += 1
            min_j = i
        if i == used:
            if used == t and legs_left == 0:
                out.append((tuple(edges), tuple(ell)))
            return
        for j in range(max(min_j, i), min(used + 1, t)):
            if j == i:
                if cap[i] >= 2:
                    cap[i] -= 2
                    edges.append((i, i))
                    rec(i, j, used, legs_left)
                    edges.pop()
                    cap[i] += 2
            elif j < used:
                if cap[j] >= 1:
                    cap[i] -= 1
                    cap[j] -= 1
                    edges.append((i, j))
                    rec(i, j, used, legs_left)
                    edges.pop()
                    cap[i] += 1
                    cap[j] += 1
            else:
                # fresh vertex: pick its leg count now
                for lj in range(0, 3):
                    if lj > legs_left:
                        break
                    cap[i] -= 1
                    cap[j] = 2 - lj
                    ell[j] = lj
                    edges.append((i, j))
                    rec(i, j, used + 1, legs_left - lj)
                    edges.pop()
                    cap[i] += 1
                    cap[j] = 0
                    ell[j] = 0

    for ell0 in range(0, min(p, 2) + 1):
        cap[0] = 3 - ell0
        ell[0] = ell0
        rec(0, 0, 1, p - ell0)
    return out


def _code_invariant(t, edges, ell):
    mult = {}
    loops = [0] * t
    for a, b in edges:
        if a == b:
            loops[a] += 1
        else:
            mult[(a, b)] = mult.get((a, b), 0) + 1
            mult[(b, a)] = mult.get((b, a), 0) + 1
    col = [(ell[i], loops[i]) for i in range(t)]
    for _ in range(2):
        prof = [
            tuple(sorted((col[j], m) for (a, j), m in mult.items() if a == i))
            for i in range(t)
        ]
        col = [(col[i], prof[i]) for i in range(t)]
    return tuple(sorted(col)), mult, loops


def _code_isomorphic(t, multA, loopsA, ellA, multB, loopsB, ellB):
    """Backtracking isomorphism test for small vertex-colored multigraphs."""
    sigA = sorted((ellA[i], loopsA[i]) for i in range(t))
    sigB = sorted((ellB[i], loopsB[i]) for i in range(t))
    if sigA != sigB:
        return False
    mapping = [-1] * t
    used = [False] * t

    def extend(i):
        if i == t:
            return True
        for j in range(t):
            if used[j] or ellA[i] != ellB[j] or loopsA[i] != loopsB[j]:
                continue
            ok = True
            for k in range(i):
                if multA.get((i, k), 0) != multB.get((j, mapping[k]), 0):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                used[j] = False
                mapping[i] = -1
        return False

    return extend(0)


def _dedupe_codes(t, codes):
    buckets = {}
    for edges, ell in codes:
        inv, mult, loops = _code_invariant(t, edges, ell)
        bucket = buckets.setdefault(inv, [])
        for _, multB, loopsB, ellB in bucket:
            if _code_isomorphic(t, mult, loops, ell, multB, loopsB, ellB):
                break
        else:
            bucket.append((edges, mult, loops, ell))
    for bucket in buckets.values():
        for edges, mult, loops, ell in bucket:
            yield edges, ell, loops


def _assemble_component(t, ell, edges, chirality):
    """Build a character from a multigraph code and vertex orientation bits."""
    vertex_darts = [[3 * v, 3 * v + 1, 3 * v + 2] for v in range(t)]
    next_slot = [0] * t
    pairs = []
    for a, b in edges:
        da = vertex_darts[a][next_slot[a]]
        next_slot[a] += 1
        db = vertex_darts[b][next_slot[b]]
        next_slot[b] += 1
        pairs.append((da, db))
    leg_darts = []
    next_leg = 3 * t
    for v in range(t):
        for _ in range(ell[v]):
            dv = vertex_darts[v][next_slot[v]]
            next_slot[v] += 1
            pairs.append((dv, next_leg))
            leg_darts.append(next_leg)
            next_leg += 1
    triples = []
    for v in range(t):
        a, b, c = vertex_darts[v]
        triples.append((a, b, c) if chirality.get(v, 0) == 0 else (a, c, b))
    return ChineseCharacter(
        legs=tuple(leg_darts),
        triples=tuple(triples),
        edges=tuple(sorted(tuple(sorted(e)) for e in pairs)),
    )


def _component_classes_raw(d: int):
    classes = {}

    def register(cc):
        key = canonical_key(cc)
        if key not in classes:
            classes[key] = diagram_from_key(key)

    if d == 1:
        register(ChineseCharacter(legs=(0, 1), triples=(), edges=((0, 1),)))

    for t in range(1, 2 * d + 1):
        p = 2 * d - t
        if p < 0:
            continue
        codes = _component_codes(t, p)
        for edges, ell, loops in _dedupe_codes(t, codes):
            # swapping two legs, or the two ends of a loop, at a vertex is
            # an isomorphism, so such vertices carry no chirality bit
            chiral = [
                v for v in range(t) if ell[v] < 2 and loops[v] == 0
            ]
            for bits in itertools.product((0, 1), repeat=len(chiral)):
                register(
                    _assemble_component(t, ell, edges, dict(zip(chiral, bits)))
                )
    return tuple(classes[k] for k in sorted(classes))


_connected_cache_hook = None  # set by jacobiws.cache to enable disk caching


@lru_cache(maxsize=None)
def connected_characters(d: int):
    """Connected loop-free characters of degree d (canonical representatives)."""
    if d < 1:
        return ()
    if _connected_cache_hook is not None:
        return _connected_cache_hook(d, _component_classes_raw)
    return _component_classes_raw(d)


def _partitions(n, maximum=None):
    if maximum is None:
        maximum = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maximum), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_chinese_characters(
    n: int, chordless: bool = False, cap: int | None = DEFAULT_CAP
):
    """Characters of degree n, one per iso class, sorted by canonical key.

    With ``chordless`` no class contains a trivalent-free component.
    """
    _check_cap(n, cap)
    if n == 0:
        return (EMPTY_CC,)
    out = {}
    for partition in _partitions(n):
        counts = {}
        for part in partition:
            counts[part] = counts.get(part, 0) + 1
        pools = []
        for part, k in sorted(counts.items()):
            comps = connected_characters(part)
            if chordless:
                comps = tuple(c for c in comps if c.triples)
            pools.append(list(itertools.combinations_with_replacement(comps, k)))
        for chosen in itertools.product(*pools):
            pieces = [c for group in chosen for c in group]
            cc = _disjoint_union(pieces)
            key = canonical_key(cc)
            out.setdefault(key, diagram_from_key(key))
    return tuple(out[k] for k in sorted(out))


def _disjoint_union(pieces):
    legs = []
    triples = []
    edges = []
    offset = 0
    for piece in pieces:
        shifted = relabel(piece, offset)
        legs.extend(shifted.legs)
        triples.extend(shifted.triples)
        edges.extend(shifted.edges)
        offset += len(piece.darts())
    return ChineseCharacter(tuple(sorted(legs)), tuple(triples),
                            tuple(sorted(edges)))


_ccd_cache_hook = None  # set by jacobiws.cache


def _enumerate_ccds_raw(n: int, cap):
    out = {}
    for cc in enumerate_chinese_characters(n, cap=cap):
        for d in leg_placements(cc):
            key = canonical_key(d)
            out.setdefault(key, diagram_from_key(key))
    return tuple(out[k] for k in sorted(out))


@lru_cache(maxsize=None)
def enumerate_ccds(n: int, cap: int | None = DEFAULT_CAP):
    """All CCD classes of degree n (every leg count, closed components kept)."""
    _check_cap(n, cap)
    if _ccd_cache_hook is not None:
        return _ccd_cache_hook(n, lambda k: _enumerate_ccds_raw(k, cap))
    return _enumerate_ccds_raw(n, cap)
