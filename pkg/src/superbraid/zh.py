"""Lift of virtual tangles into the semi-welded category.

Every classical crossing is conjugated by the scalings that an invisible
closed companion strand induces: a w^-1 twist enters below the crossing
on its left leg and a w twist leaves above it, while virtual crossings
and plain arcs are untouched.  The extra strand itself never appears as
a tensor factor, so the lifted diagram has the same boundary as the
input.  Setting w = 1 collapses the lift back to the plain evaluation.
"""

import logging

from .schema import SignSeq, all_up
from .tangle import (
    BraidWord, Id, TangleError, has_omega, layer, omega_op, serialize_ops,
)
from .generators import (
    Morphism, QW, omega_scaling, rmatrix, rotate_crossing, tau_q,
)

log = logging.getLogger(__name__)


def zh_braid(beta):
    """Braid word to its lifted width-N tangle (all strands upward)."""
    N = beta.strands
    expr = Id(all_up(N))
    for kind, p in beta.letters:
        for gen in zh_letter(kind):
            expr = expr.then(layer(N, p, gen))
    return expr


def zh_letter(kind):
    """Generators replacing one braid letter, bottom to top."""
    from .tangle import crossing
    if kind == "v":
        return (crossing("v", "u", "u"),)
    xk = "xp" if kind == "s" else "xm"
    return (omega_op("oxm", "u"),
            crossing(xk, "u", "u"),
            omega_op("oxp", "u"))


def zh_tangle(expr):
    """Lift a virtual tangle expression, crossing by crossing.

    Crossings with downward legs are first rewritten through cups and
    caps so that every classical crossing points upward, then each one
    is wrapped in the twist scalings.  The input must be purely virtual:
    anything already carrying omega content is rejected.
    """
    if has_omega(expr):
        raise TangleError("input already has omega content; the lift "
                          "applies to virtual tangles only")
    out = Id(expr.dom)
    cur = list(expr.dom)
    pending = list(serialize_ops(expr))
    pending.reverse()
    while pending:
        gen, pos = pending.pop()
        i = pos - 1
        span = len(gen.dom)
        window = SignSeq(tuple(cur[i: i + span]))
        if gen.kind in ("xp", "xm"):
            dirs = (window.direction(0), window.direction(1))
            if dirs != ("u", "u"):
                log.info("rotating %s at position %d: orientations %s",
                         gen.kind, pos, dirs)
                expansion = rotate_crossing(gen.kind, dirs)
                inner = [(g, p + i) for g, p in serialize_ops(expansion)]
                pending.extend(reversed(inner))
                continue
            for piece in zh_letter("s" if gen.kind == "xp" else "S"):
                out = out.then(layer(len(cur), pos, piece,
                                     signs=SignSeq(tuple(cur))))
            cur[i: i + span] = list(gen.cod)
            continue
        out = out.then(layer(len(cur), pos, gen, signs=SignSeq(tuple(cur))))
        cur[i: i + span] = list(gen.cod)
    return out


def letter_rep(kind, d, vars=QW, lift=True):
    """Representation matrix of one braid letter on two strands.

    With lift=True the classical letters are conjugated by the twist
    scalings; lift=False gives the plain functor's value.
    """
    if kind == "v":
        return tau_q(d, vars)
    if kind not in ("s", "S"):
        raise TangleError("unknown braid letter %r" % kind)
    r = rmatrix(d, 1 if kind == "s" else -1, vars)
    if not lift:
        return r
    idm = Morphism.identity(SignSeq("u"), d, vars)
    pre = omega_scaling(d, -1, "u", vars).tensor(idm)
    post = omega_scaling(d, 1, "u", vars).tensor(idm)
    return post @ r @ pre


def gen_rep(beta, d, vars=QW, lift=True):
    """Full representation matrix of a braid word, strand count preserved.

    Composes the per-letter matrices directly; with lift=True it equals
    the engine's evaluation of zh_braid(beta) but builds no tangle.
    Intended for small strand counts: the product is a dense object.
    """
    width = all_up(beta.strands)
    total = Morphism.identity(width, d, vars)
    idm = Morphism.identity(SignSeq("u"), d, vars)
    cache = {}
    for kind, p in beta.letters:
        key = (kind, p)
        m = cache.get(key)
        if m is None:
            m = letter_rep(kind, d, vars, lift=lift)
            for _ in range(p - 1):
                m = idm.tensor(m)
            for _ in range(beta.strands - p - 1):
                m = m.tensor(idm)
            cache[key] = m
        total = m @ total
    return total
