"""Compilation of diagrams into layered words of elementary tensors and
their state-sum evaluation into the enveloping algebra.

A layer word is read top to bottom.  Events act on an ordered list of
strands:

* ``("cup", p, dl, dr)``    create two strands at position p (tensor b;
  first index colors the left strand); the strands head to darts dl, dr;
* ``("cross", p)``          swap strands p, p+1 with the Koszul sign;
* ``("vertex", p, out)``    consume strands p, p+1 into the bracket tensor
  (first index = left strand), emitting one strand toward dart ``out``;
* ``("cap", p)``            contract strands p, p+1 with the form kappa
  (first index = left strand).

After the last event every remaining strand ends on a Wilson leg, already
in Wilson order starting after wilson[0]; the leg colors are multiplied
left to right into the enveloping algebra and normal ordered.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraSpec,
    PBWElement,
    is_central,
    normal_order,
)
from .diagrams import CCD, DEFAULT_CAP, canonical_key, diagram_from_key
from .hopf import generate_stu
from .linalg import LinComb


@dataclass(frozen=True)
class LayerWord:
    events: tuple
    legs: tuple  # leg darts left-to-right at the bottom boundary


class CompileError(ValueError):
    pass


def wilson_word(d: CCD) -> tuple:
    """Leg darts in reading order: the loop is broken just after wilson[0]."""
    if not d.wilson:
        return ()
    return d.wilson[1:] + d.wilson[:1]


def compile_diagram(d: CCD, rng: random.Random | None = None) -> LayerWord:
    """Lay the diagram out as a layer word.

    Vertices are processed in a (seedable) order; every vertex consumes two
    input strands and emits one, caps appear only where a component closes
    up, and crossings do all the routing.  Any processing order yields the
    same evaluation; randomized orders are exercised by the property tests.
    """
    partner = {}
    for a, b in d.edges:
        partner[a] = b
        partner[b] = a
    vertex_of = {}
    for v, t in enumerate(d.triples):
        for x in t:
            vertex_of[x] = v
    legset = set(d.wilson)

    vertex_order = list(range(len(d.triples)))
    if rng is not None:
        rng.shuffle(vertex_order)

    events = []
    strands = []  # dart each live strand is heading to

    def cross(p):
        events.append(("cross", p))
        strands[p], strands[p + 1] = strands[p + 1], strands[p]

    def insert_cup(edge_a, edge_b, pos=None):
        if pos is None:
            pos = rng.randrange(len(strands) + 1) if rng else len(strands)
        if rng and rng.random() < 0.5:
            edge_a, edge_b = edge_b, edge_a
        events.append(("cup", pos, edge_a, edge_b))
        strands.insert(pos, edge_a)
        strands.insert(pos + 1, edge_b)

    def bring_adjacent(i, j):
        """Make strand i immediately left of strand j; returns i's position."""
        if j > i:
            for p in range(j - 1, i, -1):
                cross(p)
            return i
        for p in range(j, i):
            cross(p)
        return i - 1

    for v in vertex_order:
        triple = d.triples[v]
        rotations = []
        for k in range(3):
            ins = (triple[k], triple[(k + 1) % 3])
            out = triple[(k + 2) % 3]
            # a loop edge between an input and the output cannot be laid out
            if partner[out] in ins:
                continue
            rotations.append((ins, out))
        if not rotations:
            raise CompileError("no admissible rotation at vertex %d" % v)
        ins, out = rng.choice(rotations) if rng else rotations[0]
        out_live = out in strands
        missing = [x for x in ins if x not in strands]
        if len(missing) == 2 and partner[missing[0]] == missing[1]:
            # a loop edge supplies both inputs at once
            insert_cup(missing[0], missing[1])
        else:
            for x in missing:
                insert_cup(x, partner[x])
        i = bring_adjacent(strands.index(ins[0]), strands.index(ins[1]))
        events.append(("vertex", i, out))
        strands.pop(i + 1)
        strands[i] = partner[out]
        if out_live:
            # both halves of the output edge now run downward: join them
            i2 = bring_adjacent(strands.index(out),
                                strands.index(partner[out]))
            events.append(("cap", i2))
            strands.pop(i2 + 1)
            strands.pop(i2)

    # remaining chords (leg-to-leg edges)
    done = set(strands)
    for a, b in d.edges:
        if a in legset and b in legset and a not in done and b not in done:
            insert_cup(a, b)
            done.add(a)
            done.add(b)

    # route to the Wilson order
    target = wilson_word(d)
    if sorted(strands) != sorted(target):
        raise CompileError("compiled strands do not match the Wilson legs")
    for i, want in enumerate(target):
        j = strands.index(want, i)
        while j > i:
            events.append(("cross", j - 1))
            strands[j - 1], strands[j] = strands[j], strands[j - 1]
            j -= 1
    return LayerWord(events=tuple(events), legs=target)


# ---------------------------------------------------------------------------
# evaluation


def evaluate(word: LayerWord, a: AlgebraSpec) -> PBWElement:
    """Sum over strand colorings of the tensor weights, normal ordered."""
    parity = a.parity
    states = {(): Fraction(1)}
    for event in word.events:
        kind = event[0]
        pos = event[1]
        new_states = {}
        if kind == "cup":
            for colors, w in states.items():
                head, tail = colors[:pos], colors[pos:]
                for (i, j), c in a.b.items():
                    key = head + (i, j) + tail
                    new_states[key] = new_states.get(key, 0) + w * c
        elif kind == "cross":
            for colors, w in states.items():
                i, j = colors[pos], colors[pos + 1]
                sign = -1 if parity[i] and parity[j] else 1
                key = colors[:pos] + (j, i) + colors[pos + 2:]
                new_states[key] = new_states.get(key, 0) + w * sign
        elif kind == "vertex":
            for colors, w in states.items():
                i, j = colors[pos], colors[pos + 1]
                comp = a.f.get((i, j))
                if not comp:
                    continue
                for k, c in comp.items():
                    key = colors[:pos] + (k,) + colors[pos + 2:]
                    new_states[key] = new_states.get(key, 0) + w * c
        elif kind == "cap":
            for colors, w in states.items():
                i, j = colors[pos], colors[pos + 1]
                c = a.kappa.get((i, j))
                if not c:
                    continue
                key = colors[:pos] + colors[pos + 2:]
                new_states[key] = new_states.get(key, 0) + w * c
        else:
            raise ValueError("unknown event %r" % (kind,))
        states = {k: v for k, v in new_states.items() if v}

    out = {}
    for colors, w in states.items():
        for word2, c in normal_order(a, colors).items():
            acc = out.get(word2, 0) + w * c
            if acc:
                out[word2] = acc
            else:
                del out[word2]
    return PBWElement(a, out)


def evaluate_diagram(d: CCD, a: AlgebraSpec,
                     rng: random.Random | None = None) -> PBWElement:
    return evaluate(compile_diagram(d, rng=rng), a)


def evaluate_lincomb(v: LinComb, a: AlgebraSpec) -> PBWElement:
    out = PBWElement(a)
    for key, coeff in v.terms.items():
        out = out + evaluate_diagram(diagram_from_key(key), a).scale(coeff)
    return out


def enumerate_colorings(word: LayerWord, a: AlgebraSpec):
    """Exhaustive state sum: yields (segment colors, leg colors, weight).

    Segments are identified by the dart their strand heads to.  This is the
    slow per-coloring route used for audits and as an oracle for
    :func:`evaluate`.
    """
    creations = [e for e in word.events if e[0] == "cup"]
    n_choices = []
    for e in creations:
        n_choices.append([(i, j) for (i, j) in a.b])
    for combo in itertools.product(*n_choices):
        # replay the word with fixed cup colors, branching only at vertices
        stack = [(0, (), {}, Fraction(1), 0)]
        while stack:
            idx, colors, segments, weight, cup_i = stack.pop()
            if idx == len(word.events):
                yield segments, colors, weight
                continue
            event = word.events[idx]
            kind, pos = event[0], event[1]
            if kind == "cup":
                i, j = combo[cup_i]
                segs = dict(segments)
                segs[event[2]] = i
                segs[event[3]] = j
                stack.append(
                    (idx + 1, colors[:pos] + (i, j) + colors[pos:], segs,
                     weight * a.b[(i, j)], cup_i + 1)
                )
            elif kind == "cross":
                i, j = colors[pos], colors[pos + 1]
                sign = -1 if a.parity[i] and a.parity[j] else 1
                stack.append(
                    (idx + 1, colors[:pos] + (j, i) + colors[pos + 2:],
                     segments, weight * sign, cup_i)
                )
            elif kind == "vertex":
                i, j = colors[pos], colors[pos + 1]
                for k, c in a.f.get((i, j), {}).items():
                    segs = dict(segments)
                    segs[event[2]] = k
                    stack.append(
                        (idx + 1, colors[:pos] + (k,) + colors[pos + 2:],
                         segs, weight * c, cup_i)
                    )
            elif kind == "cap":
                i, j = colors[pos], colors[pos + 1]
                c = a.kappa.get((i, j), Fraction(0))
                if c:
                    stack.append(
                        (idx + 1, colors[:pos] + colors[pos + 2:],
                         segments, weight * c, cup_i)
                    )


# ---------------------------------------------------------------------------
# checks


def check_stu_invariance(a: AlgebraSpec, n: int,
                         cap: int | None = DEFAULT_CAP) -> list:
    """Evaluate every degree-n three-term relation; nonzero images are
    returned as violations (must be empty)."""
    violations = []
    seen = set()
    for rel in generate_stu(n, cap=cap):
        key = (rel.s_term, rel.t_term, rel.u_term)
        if key in seen:
            continue
        seen.add(key)
        total = evaluate_lincomb(rel.lincomb(), a)
        if total:
            violations.append((key, total))
    return violations


def check_central(e: PBWElement) -> bool:
    return is_central(e)


def check_compilation_independence(
    d: CCD, a: AlgebraSpec, trials: int = 10, seed: int = 0
) -> bool:
    """Evaluate randomized layouts of the same diagram; all must agree."""
    reference = evaluate_diagram(d, a)
    rng = random.Random(seed)
    for _ in range(trials):
        if evaluate_diagram(d, a, rng=rng) != reference:
            return False
    return True


def casimir(a: AlgebraSpec) -> PBWElement:
    """The image of the single-chord diagram: the quadratic Casimir."""
    from .hopf import THETA

    return evaluate_diagram(THETA, a)


# ---------------------------------------------------------------------------
# the gl(1|1) limit


def gl11_deframed(n: int, v: LinComb) -> PBWElement:
    """Deframed gl(1|1) image: evaluate after applying the projector."""
    from .algebra import gl11
    from .deframe import phi

    return evaluate_lincomb(phi(n, v), gl11())


def gl11_theorem_violations(n: int, cap: int | None = DEFAULT_CAP) -> list:
    """Compare the deframed gl(1|1) image with (conway value) * H^n on every
    basis class of degree n; returns mismatches (must be empty)."""
    from .algebra import gl11
    from .conway import conway
    from .hopf import build_A

    spec = gl11()
    cn = conway(n, cap)
    space = build_A(n, cap=cap)
    h_index = spec.basis_names.index("H")
    out = []
    for key in space.basis:
        v = LinComb.single(key, 1)
        got = gl11_deframed(n, v)
        expected = PBWElement(
            spec, {(h_index,) * n: cn(v)}
        )
        if got != expected:
            out.append((key, got, expected))
    return out


def check_gl11_vanishing(n: int, cap: int | None = DEFAULT_CAP) -> dict:
    """The two vanishing statements behind the gl(1|1) limit.

    (i) per-coloring audit on the degree-n wheel: any coloring giving an
        internal vertex-to-vertex edge segment the color G or H has weight
        zero;
    (ii) the image of every chordless character with fewer than n legs
        normal-orders to zero.

    Returns {"coloring_violations": [...], "low_leg_violations": [...]}.
    """
    from .algebra import gl11
    from .deframe import tau
    from .diagrams import enumerate_chinese_characters
    from .hopf import expand_cc, planar_wheel_diagram

    spec = gl11()
    g_index = spec.basis_names.index("G")
    h_index = spec.basis_names.index("H")

    coloring_violations = []
    wheel = planar_wheel_diagram(tau((n,)))
    vertex_darts = {x for t in wheel.triples for x in t}
    internal = [
        e for e in wheel.edges if e[0] in vertex_darts and e[1] in vertex_darts
    ]
    word = compile_diagram(wheel)
    for segments, colors, weight in enumerate_colorings(word, spec):
        if not weight:
            continue
        for a, b in internal:
            for dart in (a, b):
                if segments.get(dart) in (g_index, h_index):
                    coloring_violations.append((dict(segments), weight))
                    break
            else:
                continue
            break

    low_leg_violations = []
    for cc in enumerate_chinese_characters(n, chordless=True, cap=cap):
        if len(cc.legs) < n:
            image = evaluate_lincomb(expand_cc(cc), spec)
            if image:
                low_leg_violations.append((cc, image))
    return {
        "coloring_violations": coloring_violations,
        "low_leg_violations": low_leg_violations,
    }


def multiplicativity_violations(a: AlgebraSpec, max_degree: int = 2,
                                cap: int | None = DEFAULT_CAP) -> list:
    """W(x.y) = W(x) W(y) for enumerated diagrams with degrees adding to at
    most max_degree."""
    from .diagrams import enumerate_ccds
    from .hopf import connect_sum

    out = []
    for na in range(0, max_degree + 1):
        for nb in range(0, max_degree + 1 - na):
            for x in enumerate_ccds(na, cap=cap):
                wx = evaluate_diagram(x, a)
                for y in enumerate_ccds(nb, cap=cap):
                    wy = evaluate_diagram(y, a)
                    joined = evaluate_diagram(connect_sum(x, y), a)
                    if joined != wx * wy:
                        out.append((canonical_key(x), canonical_key(y)))
    return out
