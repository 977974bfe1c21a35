import pytest

from superbraid.ring import LaurentPoly
from superbraid.schema import SuperDim, SignSeq
from superbraid.tangle import (
    TangleError, closure, crossing, parse_braid, parse_tangle,
)
from superbraid.generators import Morphism, rmatrix, tau_q
from superbraid.engine import EvalOptions, closure_trace, evaluate
from superbraid.zh import gen_rep, letter_rep, zh_braid, zh_tangle

D11 = SuperDim(1, 1)
D21 = SuperDim(2, 1)
D22 = SuperDim(2, 2)
D31 = SuperDim(3, 1)
QW = ("q", "w")

VIRTUAL_TREFOIL = "N=2 v1 S1 S1"


def mono(c=1, **pows):
    return LaurentPoly.mono(QW, c, **pows)


def expected_negative_crossing(d):
    """Case-by-case action on x_k (x) x_l, transcribed independently."""
    m = d.m
    entries = {}
    for k in range(1, d.dim + 1):
        for l in range(1, d.dim + 1):
            col = (k, l)
            swap = (l, k)
            keep = (k, l)
            if l == k <= m:
                entries[(swap, col)] = mono(1, q=-1)
            elif l == k > m:
                entries[(swap, col)] = mono(-1, q=1)
            elif k < l <= m:
                entries[(swap, col)] = mono(1)
            elif k <= m < l:
                entries[(swap, col)] = mono(1, w=1)
            elif m < k < l:
                entries[(swap, col)] = mono(-1)
            elif m < l < k or l < k <= m:
                sign = -1 if l > m and k > m else 1
                entries[(swap, col)] = mono(sign)
                entries[(keep, col)] = mono(1, q=-1) - mono(1, q=1)
            else:
                assert l <= m < k
                entries[(swap, col)] = mono(1, w=-1)
                entries[(keep, col)] = mono(1, q=-1) - mono(1, q=1)
    signs = SignSeq("uu")
    return Morphism(signs, signs, d, QW, entries)


def test_negative_crossing_case_table():
    for d in (D11, D21, D22, D31):
        assert letter_rep("S", d) == expected_negative_crossing(d), d


def test_positive_crossing_is_inverse():
    for d in (D11, D21):
        ident = Morphism.identity(SignSeq("uu"), d, QW)
        assert letter_rep("s", d) @ letter_rep("S", d) == ident
        assert letter_rep("S", d) @ letter_rep("s", d) == ident


def test_lifted_positive_crossing_matrix():
    got = letter_rep("s", D11)
    q = LaurentPoly.gen(QW, "q")
    entries = {
        ((1, 1), (1, 1)): q,
        ((1, 2), (1, 2)): q - mono(1, q=-1),
        ((1, 2), (2, 1)): mono(1, w=-1),
        ((2, 1), (1, 2)): mono(1, w=1),
        ((2, 2), (2, 2)): mono(-1, q=-1),
    }
    assert got == Morphism(SignSeq("uu"), SignSeq("uu"), D11, QW, entries)


def test_virtual_letter_is_graded_switch():
    assert letter_rep("v", D21) == tau_q(D21, QW)


def test_w1_specialization_is_plain_crossing():
    subs = {"q": LaurentPoly.gen(("q",), "q"), "w": LaurentPoly.one(("q",))}
    for kind, sign in (("s", 1), ("S", -1)):
        lifted = letter_rep(kind, D21).to_matrix().substitute(subs, ("q",))
        plain = rmatrix(D21, sign, ("q",)).to_matrix()
        assert lifted == plain


def test_rep_satisfies_virtual_braid_relations():
    pairs = (("N=3 s1 s2 s1", "N=3 s2 s1 s2"),
             ("N=3 v1 v2 v1", "N=3 v2 v1 v2"),
             ("N=3 v1 v2 s1", "N=3 s2 v1 v2"),
             ("N=2 s1 S1", "N=2"))
    for d in (D11, D21):
        for lhs, rhs in pairs:
            a, b = parse_braid(lhs), parse_braid(rhs)
            assert gen_rep(a, d) == gen_rep(b, d), (d, lhs)


def test_rep_is_multiplicative():
    a = parse_braid("N=3 v1 S1")
    b = parse_braid("N=3 s2 v2")
    assert gen_rep(a * b, D11) == gen_rep(b, D11) @ gen_rep(a, D11)


def test_rep_matches_engine_on_lifted_tangle():
    beta = parse_braid(VIRTUAL_TREFOIL)
    for d in (D11, D21):
        opts = EvalOptions(d, semiwelded=True)
        assert evaluate(zh_braid(beta), opts) == gen_rep(beta, d)


def test_plain_rep_matches_unlifted_engine():
    beta = parse_braid(VIRTUAL_TREFOIL)
    opts = EvalOptions(D21)
    assert evaluate(beta.to_tangle(), opts) == gen_rep(beta, D21, ("q",), lift=False)


def test_closure_trace_equals_closed_lifted_tangle():
    for word in (VIRTUAL_TREFOIL, "N=3 v2 S1 v1 s1 S2"):
        beta = parse_braid(word)
        opts = EvalOptions(D11, semiwelded=True)
        direct = evaluate(closure(zh_braid(beta)), opts)
        assert closure_trace(beta, opts) == direct.entry((), ())


def test_zh_tangle_agrees_with_zh_braid():
    beta = parse_braid(VIRTUAL_TREFOIL)
    opts = EvalOptions(D11, semiwelded=True)
    assert evaluate(zh_tangle(beta.to_tangle()), opts) == gen_rep(beta, D11)


def test_zh_tangle_rotated_r2_cancels():
    for a, b in (("u", "d"), ("d", "u"), ("d", "d")):
        expr = crossing("xp", a, b).then(crossing("xm", b, a))
        lifted = zh_tangle(expr)
        opts = EvalOptions(D11, semiwelded=True)
        want = Morphism.identity(SignSeq(a + b), D11, QW)
        assert evaluate(lifted, opts) == want, (a, b)


def test_zh_tangle_rejects_omega_input():
    expr = parse_tangle("signs: Uu\noxp 1")
    with pytest.raises(TangleError):
        zh_tangle(expr)
