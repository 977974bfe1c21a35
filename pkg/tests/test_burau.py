import random
from itertools import combinations

import pytest

from superbraid.ring import (
    LaurentPoly, PolyMatrix, equal_up_to_unit, substitute, unit_normalize,
)
from superbraid.schema import SuperDim, all_up, exterior_word_codec
from superbraid.tangle import BraidWord, parse_braid, writhe
from superbraid.generators import Morphism, tau_q
from superbraid.zh import gen_rep
from superbraid.burau import (
    FORMS, alexander, burau, exterior_all, gap, gen_burau, mirror_positions,
    recover_gap_via_trace,
)
from superbraid.engine import EvalOptions, closure_trace

D11 = SuperDim(1, 1)

VIRTUAL_TREFOIL = "N=2 v1 S1 S1"
K4_105 = "N=3 v1 S1 v1 S2 v1 S1 v1 S2"


def mono(vars, c=1, **powers):
    return LaurentPoly.mono(vars, c, **powers)


def letter(kind, p, N):
    return BraidWord(N, [(kind, p)])


def random_word(rng, strands, length):
    return BraidWord(strands, [(rng.choice("sSv"), rng.randrange(1, strands))
                               for _ in range(length)])


# letter matrices, pinned entry by entry


def test_t_form_letters():
    vars = FORMS["t"]
    one, zero = LaurentPoly.one(vars), LaurentPoly.zero(vars)
    t = LaurentPoly.gen(vars, "t")
    s1 = burau(letter("s", 1, 2), "t")
    assert [s1[(0, 0)], s1[(0, 1)], s1[(1, 0)], s1[(1, 1)]] == \
        [one - t, t, one, zero]
    S1 = burau(letter("S", 1, 2), "t")
    assert [S1[(0, 0)], S1[(0, 1)], S1[(1, 0)], S1[(1, 1)]] == \
        [zero, one, mono(vars, t=-1), one - mono(vars, t=-1)]
    v1 = burau(letter("v", 1, 2), "t")
    assert [v1[(0, 0)], v1[(0, 1)], v1[(1, 0)], v1[(1, 1)]] == \
        [zero, one, one, zero]


def test_q_form_letters():
    vars = FORMS["q"]
    one, zero = LaurentPoly.one(vars), LaurentPoly.zero(vars)
    s1 = burau(letter("s", 1, 2), "q")
    assert [s1[(0, 0)], s1[(0, 1)], s1[(1, 0)], s1[(1, 1)]] == \
        [one - mono(vars, q=-2), mono(vars, q=-1), mono(vars, q=-1), zero]
    S1 = burau(letter("S", 1, 2), "q")
    assert [S1[(0, 0)], S1[(0, 1)], S1[(1, 0)], S1[(1, 1)]] == \
        [zero, mono(vars, q=1), mono(vars, q=1), one - mono(vars, q=2)]
    v1 = burau(letter("v", 1, 2), "q")
    assert [v1[(0, 0)], v1[(0, 1)], v1[(1, 0)], v1[(1, 1)]] == \
        [zero, mono(vars, q=1), mono(vars, q=-1), zero]


def test_st_form_letters():
    vars = FORMS["st"]
    one, zero = LaurentPoly.one(vars), LaurentPoly.zero(vars)
    s1 = gen_burau(letter("s", 1, 2), "st")
    assert [s1[(0, 0)], s1[(0, 1)], s1[(1, 0)], s1[(1, 1)]] == \
        [one - mono(vars, s=1, t=1), mono(vars, s=1), mono(vars, t=1), zero]
    S1 = gen_burau(letter("S", 1, 2), "st")
    assert [S1[(0, 0)], S1[(0, 1)], S1[(1, 0)], S1[(1, 1)]] == \
        [zero, mono(vars, t=-1), mono(vars, s=-1), one - mono(vars, s=-1, t=-1)]
    v1 = gen_burau(letter("v", 1, 2), "st")
    assert [v1[(0, 0)], v1[(0, 1)], v1[(1, 0)], v1[(1, 1)]] == \
        [zero, one, one, zero]


def test_qw_form_letters():
    vars = FORMS["qw"]
    one, zero = LaurentPoly.one(vars), LaurentPoly.zero(vars)
    s1 = gen_burau(letter("s", 1, 2), "qw")
    assert [s1[(0, 0)], s1[(0, 1)], s1[(1, 0)], s1[(1, 1)]] == \
        [one - mono(vars, q=-2), mono(vars, q=-1, w=-1),
         mono(vars, q=-1, w=1), zero]
    S1 = gen_burau(letter("S", 1, 2), "qw")
    assert [S1[(0, 0)], S1[(0, 1)], S1[(1, 0)], S1[(1, 1)]] == \
        [zero, mono(vars, q=1, w=-1), mono(vars, q=1, w=1),
         one - mono(vars, q=2)]
    v1 = gen_burau(letter("v", 1, 2), "qw")
    assert [v1[(0, 0)], v1[(0, 1)], v1[(1, 0)], v1[(1, 1)]] == \
        [zero, mono(vars, q=1), mono(vars, q=-1), zero]


def test_form_validation():
    with pytest.raises(ValueError):
        burau(letter("s", 1, 2), "st")
    with pytest.raises(ValueError):
        gen_burau(letter("s", 1, 2), "q")


# representation property


@pytest.mark.parametrize("form,rep", [("t", burau), ("q", burau),
                                      ("st", gen_burau), ("qw", gen_burau)])
def test_inverse_letters_cancel(form, rep):
    vars = FORMS[form]
    for kind in ("s", "S", "v"):
        word = BraidWord(3, [(kind, 2)])
        prod = rep(word * word.inverse(), form)
        assert prod == PolyMatrix.identity(vars, 3), (form, kind)


@pytest.mark.parametrize("form,rep", [("t", burau), ("q", burau),
                                      ("st", gen_burau), ("qw", gen_burau)])
def test_braid_relations(form, rep):
    pairs = [
        ("N=3 s1 s2 s1", "N=3 s2 s1 s2"),
        ("N=3 v1 v2 v1", "N=3 v2 v1 v2"),
        ("N=3 v1 v2 s1", "N=3 s2 v1 v2"),
        ("N=2 v1 v1", "N=2"),
        ("N=4 s1 s3", "N=4 s3 s1"),
        ("N=4 s1 v3", "N=4 v3 s1"),
    ]
    for lhs, rhs in pairs:
        assert rep(parse_braid(lhs), form) == rep(parse_braid(rhs), form), \
            (form, lhs, rhs)


def test_qw_at_w1_is_q_form():
    rng = random.Random(3)
    for _ in range(10):
        beta = random_word(rng, rng.choice((2, 3)), rng.randrange(0, 6))
        wide = gen_burau(beta, "qw").substitute(
            {"q": LaurentPoly.gen(("q",), "q"), "w": LaurentPoly.one(("q",))},
            ("q",))
        assert wide == burau(beta, "q"), beta


def test_q_form_is_conjugated_t_form():
    # entry (i, j) of the q form equals the t form at t = q**-2 times q**(j-i)
    rng = random.Random(5)
    words = [letter(k, 1, 2) for k in "sSv"]
    words += [random_word(rng, 3, rng.randrange(0, 7)) for _ in range(6)]
    for beta in words:
        N = beta.strands
        mt = burau(beta, "t").substitute({"t": mono(("q",), q=-2)}, ("q",))
        mq = burau(beta, "q")
        for i in range(N):
            for j in range(N):
                assert mq[(i, j)] == mt[(i, j)] * mono(("q",), q=j - i), \
                    (beta, i, j)


# closure polynomials


def test_gap_virtual_trefoil_exact():
    want = LaurentPoly(("s", "t"), {
        (-2, -2): -1, (-2, -1): 1, (-1, -2): 1, (-1, 0): -1,
        (0, -1): -1, (0, 0): 1,
    })
    assert gap(parse_braid(VIRTUAL_TREFOIL)) == want


def test_gap_vanishes_on_classical_words():
    rng = random.Random(11)
    for _ in range(12):
        N = rng.choice((2, 3, 4))
        beta = BraidWord(N, [(rng.choice("sS"), rng.randrange(1, N))
                             for _ in range(rng.randrange(0, 8))])
        assert gap(beta).is_zero(), beta


def test_gap_empty_word_is_zero():
    assert gap(BraidWord(2)).is_zero()
    assert gap(BraidWord(1)).is_zero()


def test_gap_conjugation_invariant():
    rng = random.Random(17)
    for _ in range(8):
        N = rng.choice((2, 3))
        beta = random_word(rng, N, rng.randrange(1, 6))
        gamma = random_word(rng, N, rng.randrange(1, 5))
        conj = gamma * beta * gamma.inverse()
        assert gap(conj) == gap(beta), (beta, gamma)


def test_alexander_unknot_and_trefoil():
    assert alexander(BraidWord(1)) == LaurentPoly.one(("t",))
    tre = alexander(parse_braid("N=2 s1 s1 s1"))
    want = LaurentPoly(("t",), {(0,): 1, (1,): -1, (2,): 1})
    assert tre == want


def test_alexander_is_normalized():
    p = alexander(parse_braid("N=2 S1 S1 S1"))
    assert p == unit_normalize(p)
    assert p == LaurentPoly(("t",), {(0,): 1, (1,): -1, (2,): 1})


def test_alexander_4_105():
    want = LaurentPoly(("t",), {(0,): 1, (1,): -2, (2,): 2})
    got = alexander(parse_braid(K4_105))
    assert equal_up_to_unit(got, want) is not None
    assert got == unit_normalize(want)


# exterior algebra action


def test_exterior_identity():
    vars = ("q",)
    ext = exterior_all(PolyMatrix.identity(vars, 3))
    assert ext == Morphism.identity(all_up(3), D11, vars)


def test_exterior_of_virtual_letter_is_tau():
    ext = exterior_all(burau(letter("v", 1, 2), "q"))
    assert ext == tau_q(D11, ("q",))


def test_exterior_char_poly_traces():
    # det(zI - A) = sum_k z**(r-k) (-1)**k tr(Lambda^k A)
    vars = ("t", "z")
    rng = random.Random(23)
    rows = [[LaurentPoly(vars, {(rng.randrange(-1, 2), 0): rng.randrange(-2, 3)})
             for _ in range(3)] for _ in range(3)]
    A = PolyMatrix(vars, rows)
    z = LaurentPoly.gen(vars, "z")
    char = (PolyMatrix.identity(vars, 3) * z - A).det_bareiss()
    ext = exterior_all(A)
    total = LaurentPoly.zero(vars)
    for k in range(4):
        tr = LaurentPoly.zero(vars)
        for sub in combinations(range(1, 4), k):
            word = exterior_word_codec(3, sub)
            tr = tr + ext.entry(word, word)
        total = total + z ** (3 - k) * tr * LaurentPoly.const(vars, (-1) ** k)
    assert char == total


# the exterior bridge to the tensor functor


@pytest.mark.parametrize("lift,form,vars", [(False, "q", ("q",)),
                                            (True, "qw", ("q", "w"))])
def test_two_strand_functor_is_weighted_exterior(lift, form, vars):
    rng = random.Random(29)
    rep = burau if form == "q" else gen_burau
    for _ in range(12):
        beta = random_word(rng, 2, rng.randrange(0, 7))
        ext = exterior_all(rep(beta, form))
        scaled = ext.scaled(mono(vars, q=writhe(beta)))
        assert scaled == gen_rep(beta, D11, vars, lift=lift), beta


def test_mirror_positions():
    beta = parse_braid("N=3 s1 v2 S1")
    assert mirror_positions(beta).letters == (("s", 2), ("v", 1), ("S", 2))
    two = parse_braid(VIRTUAL_TREFOIL)
    assert mirror_positions(two).letters == two.letters
    assert writhe(mirror_positions(beta)) == writhe(beta)


def test_trace_identity_on_wide_words():
    # det(gen_burau(beta) - I) in (q, w) equals the semi-welded closure
    # trace of the position mirror times (-1)**N q**(-N-writhe)
    vars = FORMS["qw"]
    rng = random.Random(31)
    words = [parse_braid("N=3 S2 v1 S2 v2 s2 S1"),
             parse_braid("N=3 v1 S1 S1 s2")]
    words += [random_word(rng, rng.choice((2, 3, 4)), rng.randrange(0, 7))
              for _ in range(10)]
    for beta in words:
        N = beta.strands
        det = (gen_burau(beta, "qw")
               - PolyMatrix.identity(vars, N)).det_bareiss()
        trace = closure_trace(mirror_positions(beta),
                              EvalOptions(D11, semiwelded=True))
        sign = 1 if N % 2 == 0 else -1
        assert det == trace * mono(vars, sign, q=-N - writhe(beta)), beta


def test_recover_gap_via_trace_trefoil():
    got = recover_gap_via_trace(parse_braid(VIRTUAL_TREFOIL))
    want = LaurentPoly(("q", "w"), {
        (4, 1): 1, (4, 0): -1, (2, 1): -1, (2, -1): 1, (0, -1): -1, (0, 0): 1,
    })
    assert got == want


def test_recover_gap_via_trace_random():
    rng = random.Random(37)
    for _ in range(6):
        beta = random_word(rng, rng.choice((2, 3)), rng.randrange(0, 6))
        got = recover_gap_via_trace(beta)
        assert got == substitute(
            gap(beta),
            {"s": mono(FORMS["qw"], q=-2, w=-1),
             "t": LaurentPoly.gen(FORMS["qw"], "w")},
            FORMS["qw"])
