"""Column-streaming evaluation of tangle expressions.

The evaluator never materializes a Kronecker product: a tangle is compiled
to a list of local operations (a generator matrix, an alpha position and
an input arity), and each domain basis word is pushed through the list as
a sparse state vector.  Peak memory is one column's worth of nonzero
amplitudes, not the square of the tensor dimension.

Plain evaluation works over Z[q^{+-1}]; the semi-welded flag switches the
coefficient ring to Z[q^{+-1}, w^{+-1}] and is required before any omega
generator is accepted.
"""

from itertools import product
from multiprocessing import Pool

from .ring import LaurentPoly
from .schema import SignSeq, enumerate_basis
from .tangle import (
    BraidWord, OMEGA_GENS, TangleError, has_omega, serialize_ops, writhe,
)
from .generators import (
    Morphism, generator_morphism, mu_weights, omega_scaling, rmatrix,
    rotate_crossing, tau_q,
)


class InternalComputationError(RuntimeError):
    """A structural guarantee failed; indicates a bug, not bad input."""


class EvalOptions:
    """Evaluation settings: dimension, coefficient ring, framing, parallelism."""

    __slots__ = ("d", "semiwelded", "deframe", "check_diagonal", "jobs", "chunk")

    def __init__(self, d, semiwelded=False, deframe=False, check_diagonal=True,
                 jobs=1, chunk=None):
        self.d = d
        self.semiwelded = bool(semiwelded)
        self.deframe = bool(deframe)
        self.check_diagonal = bool(check_diagonal)
        self.jobs = max(1, int(jobs))
        self.chunk = chunk

    @property
    def vars(self):
        return ("q", "w") if self.semiwelded else ("q",)


def compile_ops(expr, opts):
    """Flatten a tangle to [(columns, alpha_pos, in_arity)] local operations.

    Crossings with downward strands are rewritten through rotate_crossing;
    virtual crossings that involve an omega-tagged strand have no matrix
    content and only permute the sign sequence.
    """
    if not opts.semiwelded and has_omega(expr):
        raise TangleError("omega content needs semi-welded evaluation "
                          "(enable the semi-welded flag)")
    vars = opts.vars
    out = []
    cur = list(expr.dom)
    pending = list(serialize_ops(expr))
    pending.reverse()
    while pending:
        gen, pos = pending.pop()
        i = pos - 1
        span = len(gen.dom)
        window = SignSeq(tuple(cur[i: i + span]))
        if window != gen.dom:
            raise InternalComputationError(
                "generator %s at %d expects %r, found %r"
                % (gen.kind, pos, gen.dom.render(), window.render()))
        if gen.kind in ("xp", "xm", "v"):
            omega_flags = [window.is_omega(k) for k in range(span)]
            if any(omega_flags):
                # virtual crossing moving an omega strand: identity content
                cur[i: i + span] = list(gen.cod)
                continue
            dirs = (window.direction(0), window.direction(1))
            if dirs != ("u", "u"):
                expansion = rotate_crossing(gen.kind, dirs)
                inner = [(g, p + i) for g, p in serialize_ops(expansion)]
                pending.extend(reversed(inner))
                continue
        morphism = generator_morphism(gen, opts.d, vars)
        alpha_pos = sum(1 for k in range(i) if cur[k] not in ("U", "D"))
        out.append((morphism.columns(), alpha_pos, gen.dom.alpha_width))
        cur[i: i + span] = list(gen.cod)
    if SignSeq(tuple(cur)) != expr.cod:
        raise InternalComputationError("sign sequence drifted during compilation")
    return out


def apply_ops(word, ops, vars):
    """Push one basis word through the compiled operations."""
    state = {tuple(word): LaurentPoly.one(vars)}
    for cols, pos, ar in ops:
        nxt = {}
        for w, coeff in state.items():
            hits = cols.get(w[pos: pos + ar])
            if not hits:
                continue
            pre, post = w[:pos], w[pos + ar:]
            for row, c in hits:
                nw = pre + row + post
                acc = nxt.get(nw)
                prod = coeff * c
                nxt[nw] = prod if acc is None else acc + prod
        state = {w: p for w, p in nxt.items() if not p.is_zero()}
        if not state:
            break
    return state


def _eval_chunk(args):
    ops, words, vars = args
    return [(w, apply_ops(w, ops, vars)) for w in words]


def _split(items, chunk):
    return [items[k: k + chunk] for k in range(0, len(items), chunk)]


def _stream(ops, words, opts):
    """Yield (column_word, final_state) pairs, in input order."""
    vars = opts.vars
    if opts.jobs > 1 and len(words) > 1:
        chunk = opts.chunk or max(1, (len(words) + opts.jobs * 4 - 1) // (opts.jobs * 4))
        tasks = [(ops, part, vars) for part in _split(words, chunk)]
        with Pool(opts.jobs) as pool:
            for part in pool.imap(_eval_chunk, tasks):
                for item in part:
                    yield item
    else:
        for w in words:
            yield w, apply_ops(w, ops, vars)


def deframe_factor(d, wr, vars):
    return LaurentPoly.mono(vars, 1, q=(d.n - d.m) * wr)


def deframe(value, wr, opts):
    """Multiply by q^{(n-m)*writhe}: turns the framed value into the invariant."""
    factor = deframe_factor(opts.d, wr, opts.vars)
    if isinstance(value, Morphism):
        return value.scaled(factor)
    return value * factor


def evaluate(expr, opts):
    """Full sparse matrix of a tangle expression under the chosen functor."""
    ops = compile_ops(expr, opts)
    words = enumerate_basis(expr.dom, opts.d)
    entries = {}
    for col, state in _stream(ops, words, opts):
        for row, p in state.items():
            entries[(row, col)] = p
    got = Morphism(expr.dom, expr.cod, opts.d, opts.vars, entries)
    if opts.deframe:
        got = got.scaled(deframe_factor(opts.d, writhe(expr), opts.vars))
    return got


def evaluate_11(expr, opts, check=True):
    """Evaluate a 1-1 tangle, exploiting diagonality.

    For d = 1|1 returns the scalar of the identity multiple, evaluating the
    even column and (unless check=False) verifying the odd column agrees.
    For other d returns the full diagonal as a list; any off-diagonal entry
    raises InternalComputationError.
    """
    if expr.dom != expr.cod or expr.dom.alpha_width != 1:
        raise TangleError("expected a 1-1 tangle, found %r -> %r"
                          % (expr.dom.render(), expr.cod.render()))
    ops = compile_ops(expr, opts)
    d = opts.d
    frame = deframe_factor(d, writhe(expr), opts.vars) if opts.deframe \
        else LaurentPoly.one(opts.vars)

    def column(k):
        state = apply_ops((k,), ops, opts.vars)
        diag = LaurentPoly.zero(opts.vars)
        for row, p in state.items():
            if row == (k,):
                diag = p
            else:
                raise InternalComputationError(
                    "1-1 tangle is not diagonal: column %d hit row %r" % (k, row))
        return diag

    if (d.m, d.n) == (1, 1):
        lam = column(1)
        if check and column(2) != lam:
            raise InternalComputationError("1-1 tangle is not a scalar multiple "
                                           "of the identity at d=1|1")
        return lam * frame
    return [column(k) * frame for k in range(1, d.dim + 1)]


# -- braid traces -------------------------------------------------------


def braid_ops(beta, opts):
    """Local operations of a braid word under the chosen functor.

    With the semi-welded flag, every classical crossing is flanked by the
    omega scalings (w^-1 twist below, w twist above, on the left strand).
    """
    d, vars = opts.d, opts.vars
    ops = []

    def push(m, pos):
        ops.append((m.columns(), pos - 1, len(m.dom)))

    for k, p in beta.letters:
        if k == "v":
            push(tau_q(d, vars), p)
            continue
        sign = 1 if k == "s" else -1
        if opts.semiwelded:
            push(omega_scaling(d, -1, "u", vars), p)
            push(rmatrix(d, sign, vars), p)
            push(omega_scaling(d, +1, "u", vars), p)
        else:
            push(rmatrix(d, sign, vars), p)
    return ops


def _trace_chunk(args):
    ops, words, vars, weights = args
    total = LaurentPoly.zero(vars)
    for word in words:
        state = apply_ops(word, ops, vars)
        c = state.get(tuple(word))
        if c is None or c.is_zero():
            continue
        for letter in word:
            c = c * weights[letter - 1]
        total = total + c
    return total


def closure_trace(beta, opts):
    """Invariant of the braid closure via the weighted diagonal trace.

    Equals evaluate(closure(beta), opts) entry for entry, but streams one
    width-N column at a time and never builds the doubled-width diagram.
    """
    d, vars = opts.d, opts.vars
    ops = braid_ops(beta, opts)
    weights = mu_weights(d, vars)
    words = list(product(range(1, d.dim + 1), repeat=beta.strands))
    total = LaurentPoly.zero(vars)
    if opts.jobs > 1:
        chunk = opts.chunk or max(1, (len(words) + opts.jobs * 4 - 1) // (opts.jobs * 4))
        tasks = [(ops, part, vars, weights) for part in _split(words, chunk)]
        with Pool(opts.jobs) as pool:
            for part_total in pool.imap(_trace_chunk, tasks):
                total = total + part_total
    else:
        total = _trace_chunk((ops, words, vars, weights))
    if opts.deframe:
        total = total * deframe_factor(d, writhe(beta), vars)
    return total


def partial_closure_trace(beta, opts):
    """Matrix of the 1-1 tangle closing strands 2..N, via partial traces."""
    d, vars = opts.d, opts.vars
    ops = braid_ops(beta, opts)
    weights = mu_weights(d, vars)
    N = beta.strands
    entries = {}
    for word in product(range(1, d.dim + 1), repeat=N):
        state = apply_ops(word, ops, vars)
        tail = word[1:]
        tail_weight = LaurentPoly.one(vars)
        for letter in tail:
            tail_weight = tail_weight * weights[letter - 1]
        for row, p in state.items():
            if row[1:] != tail:
                continue
            key = ((row[0],), (word[0],))
            add = p * tail_weight
            acc = entries.get(key)
            entries[key] = add if acc is None else acc + add
    got = Morphism(SignSeq("u"), SignSeq("u"), d, vars, entries)
    if opts.deframe:
        got = got.scaled(deframe_factor(d, writhe(beta), vars))
    return got
