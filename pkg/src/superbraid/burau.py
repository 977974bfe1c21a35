"""Burau-style representations of virtual braids and closure polynomials.

Four coefficient forms of the same N-strand representation:

* ``t``   classical one-variable form over Z[t, 1/t],
* ``q``   the same representation after q-substitution and a diagonal
          change of basis, over Z[q, 1/q],
* ``st``  two-variable generalized form over Z[s, 1/s, t, 1/t],
* ``qw``  its (q, w) counterpart, the form the semi-welded functor sees.

The q-form and qw-form matrices agree with the t-form and st-form up to
the diagonal change of basis q**(j-i) on entry (i, j) and the variable
substitutions t -> q**-2 and s -> q**-2 / w, t -> w respectively.

The closure polynomials are determinants: gap from the generalized form,
the one-variable polynomial from the classical form with one strand left
open.  Both are computed fraction-free.

The exterior-algebra bridge to the tensor functor encodes a subset of
strand indices as a word in the odd letter (exterior_word_codec); on two
strands the functor on braid letters equals q**writhe times the exterior
action of the qw-form, entry for entry.  On wider braids the encoding
wraps cyclically, so the letterwise comparison reverses strand order and
the exact trace-level identity pairs a word with its position mirror
(crossing at position p moved to position N - p).  recover_gap_via_trace
checks that identity on every call.
"""

from itertools import combinations

from .ring import (LaurentPoly, PolyMatrix, divexact, equal_up_to_unit,
                   substitute, unit_normalize)
from .schema import SuperDim, all_up, exterior_word_codec
from .generators import Morphism
from .tangle import BraidWord, TangleError, writhe

FORMS = {"t": ("t",), "q": ("q",), "st": ("s", "t"), "qw": ("q", "w")}

_blocks_cache = {}


def _letter_blocks(form):
    """2x2 blocks of each braid letter acting on strands (p, p+1)."""
    got = _blocks_cache.get(form)
    if got is not None:
        return got
    vars = FORMS[form]
    one = LaurentPoly.one(vars)
    zero = LaurentPoly.zero(vars)

    def m(c=1, **powers):
        return LaurentPoly.mono(vars, c, **powers)

    if form == "t":
        blocks = {
            "s": [[one - m(t=1), m(t=1)], [one, zero]],
            "S": [[zero, one], [m(t=-1), one - m(t=-1)]],
            "v": [[zero, one], [one, zero]],
        }
    elif form == "q":
        blocks = {
            "s": [[one - m(q=-2), m(q=-1)], [m(q=-1), zero]],
            "S": [[zero, m(q=1)], [m(q=1), one - m(q=2)]],
            "v": [[zero, m(q=1)], [m(q=-1), zero]],
        }
    elif form == "st":
        blocks = {
            "s": [[one - m(s=1, t=1), m(s=1)], [m(t=1), zero]],
            "S": [[zero, m(t=-1)], [m(s=-1), one - m(s=-1, t=-1)]],
            "v": [[zero, one], [one, zero]],
        }
    elif form == "qw":
        blocks = {
            "s": [[one - m(q=-2), m(q=-1, w=-1)], [m(q=-1, w=1), zero]],
            "S": [[zero, m(q=1, w=-1)], [m(q=1, w=1), one - m(q=2)]],
            "v": [[zero, m(q=1)], [m(q=-1), zero]],
        }
    else:
        raise ValueError("unknown form %r" % (form,))
    _blocks_cache[form] = blocks
    return blocks


def _rep(beta, form):
    vars = FORMS[form]
    N = beta.strands
    blocks = _letter_blocks(form)
    one = LaurentPoly.one(vars)
    zero = LaurentPoly.zero(vars)
    total = PolyMatrix.identity(vars, N)
    cache = {}
    for kind, p in beta.letters:
        if not 1 <= p <= N - 1:
            raise TangleError("letter position %d out of range 1..%d" % (p, N - 1))
        m = cache.get((kind, p))
        if m is None:
            rows = [[one if i == j else zero for j in range(N)] for i in range(N)]
            block = blocks[kind]
            i = p - 1
            for a in (0, 1):
                for b in (0, 1):
                    rows[i + a][i + b] = block[a][b]
            m = PolyMatrix(vars, rows)
            cache[(kind, p)] = m
        # matches the functor's composition order: later letters act on
        # the output of earlier ones
        total = m * total
    return total


def burau(beta, form="t"):
    """One-variable Burau matrix of a virtual braid word (forms t and q)."""
    if form not in ("t", "q"):
        raise ValueError("burau form must be 't' or 'q', not %r" % (form,))
    return _rep(beta, form)


def gen_burau(beta, form="st"):
    """Two-variable generalized Burau matrix (forms st and qw)."""
    if form not in ("st", "qw"):
        raise ValueError("gen_burau form must be 'st' or 'qw', not %r" % (form,))
    return _rep(beta, form)


def gap(beta):
    """Generalized Alexander polynomial det(gen_burau(beta) - I) over (s, t).

    Vanishes identically on classical words.  No unit normalization is
    applied; the raw determinant is the value the recovery identity and
    the tabulated examples use.
    """
    vars = FORMS["st"]
    mat = gen_burau(beta, "st") - PolyMatrix.identity(vars, beta.strands)
    return mat.det_bareiss()


def alexander(beta):
    """Alexander polynomial of the closure, up to units, over t.

    Deletes the last row and column of the t-form matrix before taking
    det(A - I), then unit-normalizes.  The closure should be a knot for
    the classical interpretation; the empty 1-strand word gives 1.
    """
    vars = FORMS["t"]
    N = beta.strands
    mat = burau(beta, "t").minor(N - 1, N - 1)
    red = mat - PolyMatrix.identity(vars, N - 1)
    return unit_normalize(red.det_bareiss())


def exterior_all(mat):
    """Action of a square matrix on the whole exterior algebra, as a Morphism.

    Rows and columns of the k-th graded piece are indexed by k-element
    subsets of {1..N} in the codec's word encoding; each entry is the
    corresponding k x k minor determinant.  The k = 0 piece is the
    constant 1 on the all-even word.
    """
    N = mat.rows
    if mat.cols != N:
        raise ValueError("exterior_all needs a square matrix")
    width = all_up(N)
    entries = {}
    for k in range(N + 1):
        for rows_ in combinations(range(1, N + 1), k):
            rword = exterior_word_codec(N, rows_)
            for cols_ in combinations(range(1, N + 1), k):
                sub = PolyMatrix(mat.vars, [[mat[(r - 1, c - 1)] for c in cols_]
                                            for r in rows_])
                det = sub.det_bareiss()
                if not det.is_zero():
                    entries[(rword, exterior_word_codec(N, cols_))] = det
    return Morphism(width, width, SuperDim(1, 1), mat.vars, entries)


def mirror_positions(beta):
    """The braid word with every letter moved from position p to N - p.

    The identity on two strands.  Strand count and writhe are preserved.
    """
    return BraidWord(beta.strands,
                     [(kind, beta.strands - p) for kind, p in beta.letters])


def recover_gap_via_trace(beta):
    """Recover gap(beta) in (q, w) form along two independent routes.

    The determinant route substitutes s -> q**-2 / w, t -> w into
    gap(beta).  The trace route evaluates the semi-welded 1|1 closure
    trace of the position mirror of beta and multiplies by the prefactor
    (-1)**N * q**(-N - writhe).  Both are computed exactly; a mismatch
    raises InternalComputationError, otherwise the common value is
    returned.
    """
    from .engine import EvalOptions, InternalComputationError, closure_trace

    vars = FORMS["qw"]
    det_side = substitute(gap(beta),
                          {"s": LaurentPoly.mono(vars, 1, q=-2, w=-1),
                           "t": LaurentPoly.gen(vars, "w")},
                          vars)
    N = beta.strands
    sign = 1 if N % 2 == 0 else -1
    trace = closure_trace(mirror_positions(beta),
                          EvalOptions(SuperDim(1, 1), semiwelded=True))
    trace_side = trace * LaurentPoly.mono(vars, sign, q=-N - writhe(beta))
    if det_side != trace_side:
        raise InternalComputationError(
            "gap recovery mismatch on %r: determinant route %s, trace route %s"
            % (beta, det_side.render(), trace_side.render()))
    return det_side
