import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobiws.diagrams import (
    CCD,
    ChineseCharacter,
    DiagramSyntaxError,
    DiagramValidationError,
    canonical_key,
    cc_from_ccd,
    connected_characters,
    diagram_from_key,
    enumerate_ccds,
    enumerate_chinese_characters,
    enumerate_chord_diagrams,
    has_isolated_chord,
    internal_components,
    leg_placements,
    parse_diagram,
    serialize_diagram,
    validate_diagram,
)

THETA = CCD(wilson=(0, 1), triples=(), edges=((0, 1),))
TADPOLE = CCD(wilson=(0,), triples=((1, 2, 3),), edges=((0, 1), (2, 3)))


# ---------------------------------------------------------------------------
# canonical keys


def test_theta_rotation_invariance():
    rotated = CCD(wilson=(1, 0), triples=(), edges=((0, 1),))
    assert canonical_key(THETA) == canonical_key(rotated)


def test_vertex_relabel_invariance():
    # two presentations of the same two-vertex diagram with permuted ids
    a = CCD(
        wilson=(0, 1),
        triples=((2, 3, 4), (5, 6, 7)),
        edges=((0, 2), (1, 5), (3, 6), (4, 7)),
    )
    b = CCD(
        wilson=(10, 11),
        triples=((25, 26, 27), (22, 23, 24)),
        edges=((10, 22), (11, 25), (23, 26), (24, 27)),
    )
    assert canonical_key(a) == canonical_key(b)


def test_crossed_vs_nested_distinct():
    crossed = CCD(wilson=(0, 1, 2, 3), triples=(), edges=((0, 2), (1, 3)))
    nested = CCD(wilson=(0, 1, 2, 3), triples=(), edges=((0, 1), (2, 3)))
    # oracle: brute force over the 4 rotations of each labeling
    def orbit(edges):
        reps = set()
        for r in range(4):
            rot = {tuple(sorted(((a - r) % 4, (b - r) % 4))) for a, b in edges}
            reps.add(tuple(sorted(rot)))
        return reps

    assert not (orbit(((0, 2), (1, 3))) & orbit(((0, 1), (2, 3))))
    assert canonical_key(crossed) != canonical_key(nested)


def test_triple_reversal_changes_key():
    # reversing a cyclic order is the antisymmetry move, not an isomorphism
    rev = CCD(
        wilson=TADPOLE.wilson,
        triples=((1, 3, 2),),
        edges=TADPOLE.edges,
    )
    # the tadpole is symmetric under swapping its loop darts, so use a
    # vertex with three distinguishable neighbors instead
    tripod = CCD(
        wilson=(0, 1, 2),
        triples=((3, 4, 5),),
        edges=((0, 3), (1, 4), (2, 5)),
    )
    flipped = CCD(
        wilson=(0, 1, 2),
        triples=((3, 5, 4),),
        edges=((0, 3), (1, 4), (2, 5)),
    )
    assert canonical_key(tripod) != canonical_key(flipped)
    assert canonical_key(rev) == canonical_key(TADPOLE)  # loop darts swap


def _random_relabel(d, rng):
    darts = d.darts()
    perm = dict(zip(darts, rng.sample(darts, len(darts))))
    wilson = tuple(perm[x] for x in d.wilson)
    r = rng.randrange(len(wilson)) if wilson else 0
    wilson = wilson[r:] + wilson[:r]
    triples = []
    for t in d.triples:
        k = rng.randrange(3)
        t = (t[k], t[(k + 1) % 3], t[(k + 2) % 3])
        triples.append(tuple(perm[x] for x in t))
    edges = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in d.edges))
    return CCD(wilson, tuple(triples), edges)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_key_constant_on_isomorphism_orbit(data):
    n = data.draw(st.integers(min_value=1, max_value=4))
    pool = enumerate_ccds(n)
    d = data.draw(st.sampled_from(pool))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    rng = random.Random(seed)
    assert canonical_key(_random_relabel(d, rng)) == canonical_key(d)


# ---------------------------------------------------------------------------
# enumeration


def test_chord_diagram_counts():
    assert len(enumerate_chord_diagrams(1)) == 1
    assert len(enumerate_chord_diagrams(2)) == 2
    assert len(enumerate_chord_diagrams(3)) == 5


def test_chord_count_oracle_rotation_orbits():
    # independent oracle: all pairings of 2n labeled points mod rotation
    def orbits(n):
        points = list(range(2 * n))

        def matchings(pts):
            if not pts:
                yield frozenset()
                return
            first = pts[0]
            for i in range(1, len(pts)):
                rest = pts[1:i] + pts[i + 1:]
                for sub in matchings(rest):
                    yield sub | {frozenset((first, pts[i]))}

        def normal(m):
            best = None
            for r in range(2 * n):
                rot = tuple(
                    sorted(
                        tuple(sorted(((a + r) % (2 * n), (b + r) % (2 * n))))
                        for a, b in m
                    )
                )
                if best is None or rot < best:
                    best = rot
            return best

        return {normal(m) for m in matchings(points)}

    for n in (1, 2, 3):
        assert len(enumerate_chord_diagrams(n)) == len(orbits(n))


def test_degree_zero_and_one():
    assert len(enumerate_ccds(0)) == 1
    # closed components are kept: the tadpole and the single chord, plus
    # the three closed degree-1 graphs beside a bare loop
    ccds1 = enumerate_ccds(1)
    assert len(ccds1) == 5
    keys = {canonical_key(d) for d in ccds1}
    assert canonical_key(THETA) in keys
    assert canonical_key(TADPOLE) in keys
    legged = [d for d in ccds1 if d.wilson]
    assert len(legged) == 2


def test_cc_degree_one():
    ccs = enumerate_chinese_characters(1)
    assert len(ccs) == 5
    chordless = enumerate_chinese_characters(1, chordless=True)
    assert len(chordless) == 4
    assert all(c.triples for c in chordless) or any(
        not comp.triples for c in chordless for comp in internal_components(c)
    ) is False


def test_tau2_present_in_chordless_two_leg_classes():
    from jacobiws.deframe import tau

    two_leg = [
        c
        for c in enumerate_chinese_characters(2, chordless=True)
        if len(c.legs) == 2
    ]
    assert canonical_key(tau((2,))) in {canonical_key(c) for c in two_leg}


def test_two_disjoint_chords_class_present():
    two_chords = ChineseCharacter(
        legs=(0, 1, 2, 3), triples=(), edges=((0, 1), (2, 3))
    )
    keys = {canonical_key(c) for c in enumerate_chinese_characters(2)}
    assert canonical_key(two_chords) in keys
    assert canonical_key(two_chords) not in {
        canonical_key(c) for c in enumerate_chinese_characters(2, chordless=True)
    }


def _labeled_bruteforce_ccds(n):
    """Oracle: every labeled structure (legs on a circle, oriented vertex
    triples, perfect matching), bucketed by canonical key."""
    keys = set()
    for t in range(0, 2 * n + 1):
        p = 2 * n - t
        wilson = tuple(range(p))
        vertex_darts = [tuple(p + 3 * v + i for i in range(3)) for v in range(t)]
        darts = list(range(p)) + [x for vd in vertex_darts for x in vd]

        def matchings(pts):
            if not pts:
                yield []
                return
            first = pts[0]
            for i in range(1, len(pts)):
                rest = pts[1:i] + pts[i + 1:]
                for sub in matchings(rest):
                    yield [(first, pts[i])] + sub

        for orientations in itertools.product((0, 1), repeat=t):
            triples = tuple(
                (vd[0], vd[1], vd[2]) if o == 0 else (vd[0], vd[2], vd[1])
                for vd, o in zip(vertex_darts, orientations)
            )
            for m in matchings(darts):
                d = CCD(wilson, triples, tuple(sorted(m)))
                keys.add(canonical_key(d))
    return keys


def test_ccd_count_matches_labeled_bruteforce_degree2():
    keys = {canonical_key(d) for d in enumerate_ccds(2)}
    assert keys == _labeled_bruteforce_ccds(2)


def test_enumerations_sorted_and_duplicate_free():
    for n in range(4):
        for pool in (enumerate_ccds(n), enumerate_chinese_characters(n)):
            keys = [canonical_key(d) for d in pool]
            assert keys == sorted(keys)
            assert len(keys) == len(set(keys))


def test_degree_arithmetic():
    for n in range(4):
        for d in enumerate_ccds(n):
            assert len(d.wilson) + len(d.triples) == 2 * n
            assert d.degree == n


def test_chordless_filter():
    for n in range(1, 4):
        for cc in enumerate_chinese_characters(n, chordless=True):
            assert all(comp.triples for comp in internal_components(cc))


def test_cap_enforced():
    from jacobiws.diagrams import CapExceededError

    with pytest.raises(CapExceededError):
        enumerate_ccds(7)


def test_connected_characters_isolated_vertex_star():
    # the three-leg single-vertex star is the only legful degree-2
    # connected character with one vertex... it has (3+1)/2 = 2 vertices
    stars = [c for c in connected_characters(2) if len(c.triples) == 1]
    assert stars and all(len(c.legs) == 3 for c in stars)


# ---------------------------------------------------------------------------
# text format


def test_parse_theta_compact():
    d = parse_diagram("ccd v1; wilson a b; edge a b")
    assert d.degree == 1
    assert len(d.wilson) == 2
    assert canonical_key(d) == canonical_key(THETA)


def test_roundtrip_enumerated():
    for n in range(3):
        for d in enumerate_ccds(n):
            assert canonical_key(parse_diagram(serialize_diagram(d))) == (
                canonical_key(d)
            )
        for c in enumerate_chinese_characters(n):
            assert canonical_key(parse_diagram(serialize_diagram(c))) == (
                canonical_key(c)
            )


def test_key_parses_back_to_same_key():
    for d in enumerate_ccds(2):
        key = canonical_key(d)
        assert canonical_key(diagram_from_key(key)) == key


def test_parse_rejects_undeclared_dart():
    with pytest.raises(DiagramSyntaxError) as err:
        parse_diagram("ccd v1\nwilson a b\nedge a c\n")
    assert "c" in str(err.value)


def test_parse_rejects_degree_mismatch():
    with pytest.raises(DiagramValidationError):
        parse_diagram("ccd v1\ndegree 3\nwilson a b\nedge a b\n")


def test_validation_names_dangling_dart():
    bad = CCD(wilson=(0, 1), triples=(), edges=())
    with pytest.raises(DiagramValidationError) as err:
        validate_diagram(bad)
    assert err.value.dart == 0


def test_validation_rejects_duplicated_dart():
    bad = CCD(wilson=(0, 0), triples=(), edges=((0, 1),))
    with pytest.raises(DiagramValidationError):
        validate_diagram(bad)


def test_comments_and_blank_lines():
    text = "# a chord\nccd v1\n\nwilson a b  # legs\nedge a b\n"
    assert canonical_key(parse_diagram(text)) == canonical_key(THETA)


# ---------------------------------------------------------------------------
# components and placements


def test_internal_components_of_two_chords():
    d = CCD(wilson=(0, 1, 2, 3), triples=(), edges=((0, 1), (2, 3)))
    comps = internal_components(d)
    assert len(comps) == 2
    assert all(not c.triples and len(c.legs) == 2 for c in comps)


def test_isolated_chord_detection():
    nested = CCD(wilson=(0, 1, 2, 3), triples=(), edges=((0, 1), (2, 3)))
    crossed = CCD(wilson=(0, 1, 2, 3), triples=(), edges=((0, 2), (1, 3)))
    assert has_isolated_chord(nested)
    assert not has_isolated_chord(crossed)
    assert has_isolated_chord(THETA)


def test_leg_placements_count():
    cc = cc_from_ccd(CCD(wilson=(0, 1, 2, 3), triples=(),
                         edges=((0, 1), (2, 3))))
    placements = list(leg_placements(cc))
    assert len(placements) == 6  # (4-1)!
