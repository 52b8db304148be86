import random
from fractions import Fraction

import pytest

from jacobiws.algebra import (
    PBWElement,
    builtin,
    gl11,
    is_central,
    normal_order,
    osp12,
    pbw_from_word,
    sl2,
)
from jacobiws.deframe import tau
from jacobiws.diagrams import CCD, canonical_key, enumerate_ccds
from jacobiws.hopf import THETA, connect_sum, expand_cc, planar_wheel_diagram
from jacobiws.linalg import LinComb
from jacobiws.statesum import (
    check_compilation_independence,
    check_gl11_vanishing,
    check_stu_invariance,
    compile_diagram,
    enumerate_colorings,
    evaluate,
    evaluate_diagram,
    evaluate_lincomb,
    gl11_deframed,
    gl11_theorem_violations,
    multiplicativity_violations,
    wilson_word,
)

ALL_SPECS = (sl2(), gl11(), osp12())


# ---------------------------------------------------------------------------
# elementary values


def test_theta_is_full_cup():
    word = compile_diagram(THETA)
    kinds = [e[0] for e in word.events if e[0] != "cross"]
    assert kinds == ["cup"]


def test_theta_evaluates_to_casimir():
    for spec in ALL_SPECS:
        got = evaluate_diagram(THETA, spec)
        expected = PBWElement(spec)
        for (i, j), c in spec.b.items():
            expected = expected + pbw_from_word(spec, (i, j), c)
        assert got == expected
        assert is_central(got)


def test_empty_diagram_evaluates_to_one():
    for spec in ALL_SPECS:
        got = evaluate_diagram(CCD((), (), ()), spec)
        assert got == PBWElement(spec, {(): Fraction(1)})


def test_sl2_theta_pbw_value():
    s = sl2()
    got = evaluate_diagram(THETA, s)
    assert got == PBWElement(
        s,
        {
            (0, 0): Fraction(1, 2),
            (1, 2): Fraction(2),
            (0,): Fraction(-1),
        },
    )


def test_gl11_theta_pbw_value():
    g = gl11()
    got = evaluate_diagram(THETA, g)
    assert got == PBWElement(
        g,
        {
            (1, 1): Fraction(1),
            (0, 1): Fraction(-2),
            (2, 3): Fraction(2),
            (1,): Fraction(-1),
        },
    )


def test_displayed_tripod_state_sum():
    """The crossed tripod evaluates to the closed tensor form
    sum b^{ab} b^{cd} (-1)^[b][c] f^g_{cb} (v_a v_g v_d)."""
    # legs: wa, wg, wd at darts 0, 1, 2; wilson order (d, a, g) so the
    # broken word reads (a, g, d); vertex darts e, f, g = 3, 4, 5
    tripod = CCD(
        wilson=(2, 0, 1),
        triples=((3, 4, 5),),
        edges=((0, 4), (1, 5), (2, 3)),
    )
    for spec in ALL_SPECS:
        expected = PBWElement(spec)
        for (a, b), cab in spec.b.items():
            for (c, d), ccd in spec.b.items():
                sign = -1 if spec.parity[b] and spec.parity[c] else 1
                for g, cf in spec.bracket(c, b).items():
                    coeff = cab * ccd * sign * cf
                    expected = expected + pbw_from_word(
                        spec, (a, g, d), coeff
                    )
        got = evaluate_diagram(tripod, spec)
        assert got == expected, spec.name


def test_wilson_word_breaks_after_first_leg():
    d = CCD(wilson=(7, 8, 9), triples=(), edges=())
    assert wilson_word(d) == (8, 9, 7)


def test_rotating_the_break_point_is_immaterial():
    for n in (1, 2):
        for d in enumerate_ccds(n):
            p = len(d.wilson)
            for spec in ALL_SPECS:
                ref = evaluate_diagram(d, spec)
                for r in range(1, p):
                    rot = CCD(d.wilson[r:] + d.wilson[:r], d.triples, d.edges)
                    assert evaluate_diagram(rot, spec) == ref


# ---------------------------------------------------------------------------
# wheels


def test_gl11_wheel_values():
    g = gl11()
    h = (1,)
    for n in (2, 4):
        d = planar_wheel_diagram(tau((n,)))
        got = evaluate_diagram(d, g)
        assert got == PBWElement(g, {h * n: Fraction(-2)}), n
    # an odd rim admits no alternating coloring, so odd wheels die
    for n in (3, 5):
        d = planar_wheel_diagram(tau((n,)))
        assert not evaluate_diagram(d, g)


def test_sl2_wheel_top_is_casimir_polynomial():
    s = sl2()
    d2 = planar_wheel_diagram(tau((2,)))
    got = evaluate_diagram(d2, s)
    assert is_central(got)


# ---------------------------------------------------------------------------
# structural properties


def test_cross_involution():
    # two successive crossings act as the identity on evaluations
    from jacobiws.statesum import LayerWord

    for spec in ALL_SPECS:
        base = LayerWord(
            events=(("cup", 0, 0, 1),),
            legs=(0, 1),
        )
        doubled = LayerWord(
            events=(("cup", 0, 0, 1), ("cross", 0), ("cross", 0)),
            legs=(0, 1),
        )
        assert evaluate(base, spec) == evaluate(doubled, spec)


def test_compilation_independence_sweep():
    rng = random.Random(42)
    for n in range(0, 3):
        pool = enumerate_ccds(n)
        sample = pool if len(pool) <= 8 else rng.sample(pool, 8)
        for d in sample:
            for spec in ALL_SPECS:
                assert check_compilation_independence(
                    d, spec, trials=4, seed=rng.randrange(10**6)
                )


def test_compilation_independence_many_trials_degree2_wheel():
    d = planar_wheel_diagram(tau((2,)))
    for spec in ALL_SPECS:
        assert check_compilation_independence(d, spec, trials=50, seed=1)


@pytest.mark.parametrize("name", ["sl2", "gl11", "osp12"])
@pytest.mark.parametrize("n", [1, 2])
def test_stu_invariance(name, n):
    assert check_stu_invariance(builtin(name), n) == []


def test_stu_invariance_degree3_sl2():
    assert check_stu_invariance(sl2(), 3) == []


def test_broken_algebra_fails_stu():
    from jacobiws.algebra import AlgebraSpec

    s = sl2()
    f2 = {k: dict(v) for k, v in s.f.items()}
    f2[(1, 2)] = {0: Fraction(2)}  # wrong [X,Y]
    broken = AlgebraSpec(
        name="broken", dim=3, parity=s.parity, basis_names=s.basis_names,
        f=f2, kappa=dict(s.kappa), b=dict(s.b),
    )
    assert check_stu_invariance(broken, 2) != []


def test_central_images_small_degrees():
    for n in (0, 1, 2):
        for d in enumerate_ccds(n):
            for spec in ALL_SPECS:
                assert is_central(evaluate_diagram(d, spec))


def test_multiplicativity():
    for spec in ALL_SPECS:
        assert multiplicativity_violations(spec, 2) == []


# ---------------------------------------------------------------------------
# coloring enumeration oracle


def test_coloring_sum_matches_fast_evaluation():
    diagrams = [
        THETA,
        planar_wheel_diagram(tau((2,))),
        connect_sum(THETA, THETA),
    ]
    for d in diagrams:
        word = compile_diagram(d)
        for spec in ALL_SPECS:
            total = {}
            for _, colors, weight in enumerate_colorings(word, spec):
                for w2, c2 in normal_order(spec, colors).items():
                    acc = total.get(w2, 0) + weight * c2
                    if acc:
                        total[w2] = acc
                    else:
                        total.pop(w2, None)
            assert PBWElement(spec, total) == evaluate(word, spec)


def test_gl11_vanishing_audits():
    for n in (2, 3):
        report = check_gl11_vanishing(n)
        assert report["coloring_violations"] == []
        assert report["low_leg_violations"] == []


def test_gl11_closed_k4_expansion_vanishes():
    # the complete-graph character of degree 2 has no legs at all
    from jacobiws.diagrams import enumerate_chinese_characters

    closed = [
        cc
        for cc in enumerate_chinese_characters(2, chordless=True)
        if not cc.legs
    ]
    assert closed
    for cc in closed:
        assert not evaluate_lincomb(expand_cc(cc), gl11())


# ---------------------------------------------------------------------------
# the gl(1|1) limit


def test_gl11_deframed_on_wheel():
    g = gl11()
    for key in __import__("jacobiws.hopf", fromlist=["e_set"]).e_set(tau((2,))):
        got = gl11_deframed(2, LinComb.single(key, 1))
        assert got == PBWElement(g, {(1, 1): Fraction(-2)})


def test_gl11_deframed_kills_isolated_chords():
    from jacobiws.diagrams import has_isolated_chord

    for n in (1, 2):
        for d in enumerate_ccds(n):
            if has_isolated_chord(d):
                v = LinComb.single(canonical_key(d), 1)
                assert not gl11_deframed(n, v)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gl11_theorem(n):
    assert gl11_theorem_violations(n) == []
