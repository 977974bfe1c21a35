"""Virtual tangle expressions and virtual braid words.

A tangle is a tree of identities, elementary generators, tensor products
(side by side) and compositions (stacked, read bottom to top).  Generators:

    xp, xm      positive / negative classical crossing (alpha strands only)
    v           virtual crossing (alpha or omega strands)
    cupR, cupL  minima creating an (up, down) / (down, up) pair
    capR, capL  maxima closing an (up, down) / (down, up) pair
    oxp, oxm    omega strand crossing over an alpha strand, +/- flavor
    xop, xom    alpha strand crossing over an omega strand (the inverses)

The omega generators come in two shapes: a two-position form where the
omega strand is an explicit tagged position, and a one-position operator
form (produced by the Zh rewriting) where the omega strand is elided and
only its scaling action on the alpha strand remains.

Text formats:

    braid document    N=3 v1 S1 s2        (s=sigma, S=sigma^-1, v=chi)
    tangle document   signs: uud
                      cupR 2, v 1         (slices bottom to top, 1-based)
"""

from .schema import SignSeq, all_up

CROSSINGS = ("xp", "xm", "v")
CUPS = ("cupR", "cupL")
CAPS = ("capR", "capL")
OMEGA_GENS = ("oxp", "oxm", "xop", "xom")
GEN_KINDS = CROSSINGS + CUPS + CAPS + OMEGA_GENS


class TangleError(ValueError):
    """Malformed tangle input or ill-typed composition."""


class TangleExpr:
    """Base class; subclasses define dom and cod sign sequences."""

    def tensor(self, other):
        return Tensor(self, other)

    def then(self, upper):
        """Compose with upper applied after self."""
        return Compose(upper, self)


class Id(TangleExpr):
    __slots__ = ("signs",)

    def __init__(self, signs):
        self.signs = SignSeq(signs)

    @property
    def dom(self):
        return self.signs

    @property
    def cod(self):
        return self.signs

    def __eq__(self, other):
        return isinstance(other, Id) and self.signs == other.signs

    def __hash__(self):
        return hash(("Id", self.signs))

    def __repr__(self):
        return "Id(%r)" % self.signs.render()


class Gen(TangleExpr):
    __slots__ = ("kind", "dom_", "cod_")

    def __init__(self, kind, dom, cod):
        if kind not in GEN_KINDS:
            raise TangleError("unknown generator %r" % kind)
        self.kind = kind
        self.dom_ = SignSeq(dom)
        self.cod_ = SignSeq(cod)

    @property
    def dom(self):
        return self.dom_

    @property
    def cod(self):
        return self.cod_

    def __eq__(self, other):
        return (isinstance(other, Gen) and self.kind == other.kind
                and self.dom_ == other.dom_ and self.cod_ == other.cod_)

    def __hash__(self):
        return hash(("Gen", self.kind, self.dom_, self.cod_))

    def __repr__(self):
        return "Gen(%r, %r, %r)" % (self.kind, self.dom_.render(), self.cod_.render())


class Tensor(TangleExpr):
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = a
        self.b = b

    @property
    def dom(self):
        return self.a.dom + self.b.dom

    @property
    def cod(self):
        return self.a.cod + self.b.cod

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash(("Tensor", self.a, self.b))

    def __repr__(self):
        return "Tensor(%r, %r)" % (self.a, self.b)


class Compose(TangleExpr):
    """upper after lower; requires cod(lower) == dom(upper)."""

    __slots__ = ("upper", "lower")

    def __init__(self, upper, lower):
        if lower.cod != upper.dom:
            raise TangleError("composition mismatch: lower produces %r, upper expects %r"
                              % (lower.cod.render(), upper.dom.render()))
        self.upper = upper
        self.lower = lower

    @property
    def dom(self):
        return self.lower.dom

    @property
    def cod(self):
        return self.upper.cod

    def __eq__(self, other):
        return (isinstance(other, Compose) and self.upper == other.upper
                and self.lower == other.lower)

    def __hash__(self):
        return hash(("Compose", self.upper, self.lower))

    def __repr__(self):
        return "Compose(%r, %r)" % (self.upper, self.lower)


# -- generator constructors ------------------------------------------


def crossing(kind, a, b):
    """Crossing generator with strand directions a, b (left to right, below)."""
    if kind not in CROSSINGS and kind not in OMEGA_GENS:
        raise TangleError("%r is not a crossing" % kind)
    dom = SignSeq((a, b))
    cod = SignSeq((b, a))
    a_om, b_om = dom.is_omega(0), dom.is_omega(1)
    if kind in ("xp", "xm") and (a_om or b_om):
        raise TangleError("classical crossing cannot involve an omega strand")
    if kind in OMEGA_GENS and (a_om == b_om):
        raise TangleError("%s needs exactly one omega-tagged strand" % kind)
    return Gen(kind, dom, cod)


def omega_op(kind, direction):
    """One-position operator form of an omega crossing on an alpha strand."""
    if kind not in OMEGA_GENS:
        raise TangleError("%r is not an omega generator" % kind)
    s = SignSeq((direction,))
    if s.is_omega(0):
        raise TangleError("operator form acts on a plain strand")
    return Gen(kind, s, s)


def cup(side):
    return Gen("cup" + side, SignSeq(""), SignSeq("ud" if side == "R" else "du"))


def cap(side):
    return Gen("cap" + side, SignSeq("ud" if side == "R" else "du"), SignSeq(""))


def gen_span(kind, dom=None, pos=None):
    """How many domain positions a parsed generator consumes.

    Omega crossings span two positions when an omega tag sits at pos or
    pos+1 (explicit omega strand), one position in operator form.
    """
    if kind in CUPS:
        return 0
    if kind in CAPS or kind in CROSSINGS:
        return 2
    if kind in OMEGA_GENS:
        if dom is None:
            return 1
        i = pos - 1
        if 0 <= i and i + 1 < len(dom) and (dom.is_omega(i) != dom.is_omega(i + 1)):
            return 2
        return 1
    raise TangleError("unknown generator %r" % kind)


# -- virtual braid words ----------------------------------------------

BRAID_LETTERS = ("s", "S", "v")


class BraidWord:
    """A virtual braid word: strand count and letters (kind, position).

    Letter kinds: 's' positive crossing, 'S' negative crossing, 'v' virtual
    crossing, each at positions 1..strands-1, read bottom to top.
    """

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters=()):
        if strands < 1:
            raise TangleError("need at least one strand")
        letters = tuple((k, int(p)) for k, p in letters)
        for k, p in letters:
            if k not in BRAID_LETTERS:
                raise TangleError("unknown braid letter kind %r" % k)
            if not 1 <= p <= strands - 1:
                raise TangleError("letter position %d out of range 1..%d" % (p, strands - 1))
        self.strands = strands
        self.letters = letters

    def __eq__(self, other):
        return (isinstance(other, BraidWord) and self.strands == other.strands
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return "BraidWord(%d, %r)" % (self.strands, list(self.letters))

    def inverse(self):
        flip = {"s": "S", "S": "s", "v": "v"}
        return BraidWord(self.strands, [(flip[k], p) for k, p in reversed(self.letters)])

    def __mul__(self, other):
        """Concatenation: self read first (bottom), then other."""
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise TangleError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def permutation(self):
        """Where each bottom strand position ends at the top (0-based tuple)."""
        perm = list(range(self.strands))
        for _, p in self.letters:
            i = p - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def is_knot_closure(self):
        """True when the closure is a single component."""
        perm = self.permutation()
        seen = set()
        cycles = 0
        for i in range(self.strands):
            if i in seen:
                continue
            cycles += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = perm[j]
        return cycles == 1

    def to_tangle(self):
        expr = Id(all_up(self.strands))
        for k, p in self.letters:
            kind = {"s": "xp", "S": "xm", "v": "v"}[k]
            expr = expr.then(layer(self.strands, p, crossing(kind, "u", "u")))
        return expr


def layer(width, pos, gen, signs=None):
    """gen at 1-based position pos inside an identity slice of all-up strands.

    signs overrides the ambient sign sequence (defaults to all up); the
    slice's domain is signs with gen.dom spliced in at pos.
    """
    if signs is None:
        left = all_up(pos - 1)
        right = all_up(width - (pos - 1) - len(gen.dom))
    else:
        signs = SignSeq(signs)
        left = signs[: pos - 1]
        right = signs[pos - 1 + len(gen.dom):]
    expr = gen
    if len(left):
        expr = Tensor(Id(left), expr)
    if len(right):
        expr = Tensor(expr, Id(right))
    return expr


def writhe(obj):
    """Classical writhe: +1 per positive, -1 per negative classical crossing."""
    if isinstance(obj, BraidWord):
        return sum(+1 if k == "s" else -1 for k, _ in obj.letters if k in ("s", "S"))
    if isinstance(obj, Id):
        return 0
    if isinstance(obj, Gen):
        return {"xp": 1, "xm": -1}.get(obj.kind, 0)
    if isinstance(obj, Tensor):
        return writhe(obj.a) + writhe(obj.b)
    if isinstance(obj, Compose):
        return writhe(obj.upper) + writhe(obj.lower)
    raise TangleError("writhe of %r" % (obj,))


def _braid_body(beta):
    """Normalize a closure body: width-N all-up braid word or tangle."""
    if isinstance(beta, BraidWord):
        return beta.to_tangle(), beta.strands
    body = beta
    N = len(body.dom)
    if body.dom != all_up(N) or body.cod != all_up(N):
        raise TangleError("closure body must run upward on both boundaries")
    return body, N


def closure(beta):
    """Closed diagram of a braid: strand i returns around the right side.

    Built as N right cups, then the braid on the left N strands, then N
    right caps, giving an empty-boundary tangle.
    """
    body, N = _braid_body(beta)
    expr = Id(SignSeq(""))
    for k in range(1, N + 1):
        expr = expr.then(layer(0, k, cup("R"), signs=expr.cod))
    expr = expr.then(Tensor(body, Id(SignSeq("d" * N))) if N else body)
    for k in range(N, 0, -1):
        expr = expr.then(layer(0, k, cap("R"), signs=expr.cod))
    return expr


def partial_closure(beta):
    """Close strands 2..N, leaving strand 1 open: a 1-1 tangle."""
    body, N = _braid_body(beta)
    expr = Id(SignSeq("u"))
    for k in range(2, N + 1):
        expr = expr.then(layer(0, k, cup("R"), signs=expr.cod))
    tail = Id(SignSeq("d" * (N - 1)))
    expr = expr.then(Tensor(body, tail) if N > 1 else body)
    for k in range(N, 1, -1):
        expr = expr.then(layer(0, k, cap("R"), signs=expr.cod))
    return expr


def virtual_curl(side, direction="u"):
    """Left or right virtual curl on a single strand (a 1-1 tangle)."""
    if direction != "u":
        raise TangleError("curls are built for upward strands")
    if side == "L":
        # strand sweeps left: cup to the left, virtual crossing, cap
        expr = Id(SignSeq("u"))
        expr = expr.then(layer(0, 1, cup("L"), signs=expr.cod))
        expr = expr.then(layer(0, 2, crossing("v", "u", "u"), signs=SignSeq("duu")))
        expr = expr.then(layer(0, 1, cap("L"), signs=SignSeq("duu")))
        return expr
    if side == "R":
        expr = Id(SignSeq("u"))
        expr = expr.then(layer(0, 2, cup("R"), signs=expr.cod))
        expr = expr.then(layer(0, 1, crossing("v", "u", "u"), signs=SignSeq("uud")))
        expr = expr.then(layer(0, 2, cap("R"), signs=SignSeq("uud")))
        return expr
    raise TangleError("side must be 'L' or 'R'")


def classical_kink(side, sign):
    """Classical curl (Reidemeister-1 kink) on a single upward strand."""
    kind = "xp" if sign > 0 else "xm"
    if side == "L":
        expr = Id(SignSeq("u"))
        expr = expr.then(layer(0, 1, cup("L"), signs=expr.cod))
        expr = expr.then(layer(0, 2, crossing(kind, "u", "u"), signs=SignSeq("duu")))
        expr = expr.then(layer(0, 1, cap("L"), signs=SignSeq("duu")))
        return expr
    if side == "R":
        expr = Id(SignSeq("u"))
        expr = expr.then(layer(0, 2, cup("R"), signs=expr.cod))
        expr = expr.then(layer(0, 1, crossing(kind, "u", "u"), signs=SignSeq("uud")))
        expr = expr.then(layer(0, 2, cap("R"), signs=SignSeq("uud")))
        return expr
    raise TangleError("side must be 'L' or 'R'")


# -- skein sites -------------------------------------------------------


def skein_triple(beta, site):
    """Positive, negative and smoothed words at a classical letter.

    site is the 1-based index of a classical letter in the word; the
    smoothing deletes the letter (oriented smoothing of an up-up crossing).
    """
    if not isinstance(beta, BraidWord):
        raise TangleError("skein sites are braid letters")
    if not 1 <= site <= len(beta.letters):
        raise TangleError("site %d out of range 1..%d" % (site, len(beta.letters)))
    k, p = beta.letters[site - 1]
    if k == "v":
        raise TangleError("site %d is a virtual crossing; skein needs a classical one" % site)
    before = beta.letters[: site - 1]
    after = beta.letters[site:]
    plus = BraidWord(beta.strands, before + (("s", p),) + after)
    minus = BraidWord(beta.strands, before + (("S", p),) + after)
    smooth = BraidWord(beta.strands, before + after)
    return plus, minus, smooth


# -- braid text format -------------------------------------------------


def parse_braid(text):
    """Parse 'N=<strands> <letters>' with letters like s1, S2, v1."""
    tokens = text.split()
    if not tokens or not tokens[0].startswith("N="):
        raise TangleError("braid document must start with N=<strands>")
    try:
        strands = int(tokens[0][2:])
    except ValueError:
        raise TangleError("bad strand count %r" % tokens[0])
    letters = []
    for tok in tokens[1:]:
        kind = tok[0]
        if kind == "V":
            kind = "v"
        if kind not in BRAID_LETTERS:
            raise TangleError("unknown braid letter %r" % tok)
        try:
            pos = int(tok[1:])
        except ValueError:
            raise TangleError("bad letter position in %r" % tok)
        letters.append((kind, pos))
    return BraidWord(strands, letters)


def render_braid(beta):
    return " ".join(["N=%d" % beta.strands] + ["%s%d" % (k, p) for k, p in beta.letters])


# -- tangle text format -------------------------------------------------


def _parse_sign_header(line, lineno):
    body = line.split(":", 1)[1].strip()
    try:
        return SignSeq(body.replace(" ", ""))
    except ValueError as e:
        raise TangleError("line %d: %s" % (lineno, e))


def parse_tangle(text):
    """Parse a tangle document into a TangleExpr.

    First meaningful line is 'signs: <u|d|U|D...>'; each following line is
    one slice, a comma-separated list of '<gen> <pos>' items with 1-based
    positions in the slice's domain.  Omitted positions are identity
    strands.  '#' starts a comment.
    """
    expr = None
    cur = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if expr is None:
            if not line.startswith("signs:"):
                raise TangleError("line %d: expected 'signs: ...' header" % lineno)
            cur = _parse_sign_header(line, lineno)
            expr = Id(cur)
            continue
        slice_expr = _parse_slice(line, cur, lineno)
        expr = expr.then(slice_expr)
        cur = expr.cod
    if expr is None:
        raise TangleError("empty tangle document")
    return expr


def _parse_slice(line, dom, lineno):
    items = []
    for item in line.split(","):
        item = item.strip()
        if not item:
            continue
        parts = item.split()
        if len(parts) != 2:
            raise TangleError("line %d: bad item %r (expected '<gen> <pos>')" % (lineno, item))
        kind, pos_text = parts
        if kind not in GEN_KINDS:
            raise TangleError("line %d: unknown generator %r" % (lineno, kind))
        try:
            pos = int(pos_text)
        except ValueError:
            raise TangleError("line %d: bad position %r" % (lineno, pos_text))
        if pos < 1:
            raise TangleError("line %d: positions are 1-based, got %d" % (lineno, pos))
        items.append((kind, pos))
    items.sort(key=lambda it: it[1])
    width = len(dom)
    expr = None
    at = 1  # next unconsumed domain position
    for kind, pos in items:
        span = gen_span(kind, dom, pos)
        if pos < at:
            raise TangleError("line %d: generators overlap at position %d" % (lineno, pos))
        limit = width + 1 if span == 0 else width - span + 1
        if pos > limit:
            raise TangleError("line %d: position %d out of range for %s on %r"
                              % (lineno, pos, kind, dom.render()))
        gap = dom[at - 1: pos - 1]
        piece = _gen_at(kind, dom, pos, lineno)
        if len(gap):
            piece = Tensor(Id(gap), piece)
        expr = piece if expr is None else Tensor(expr, piece)
        at = pos + span
    rest = dom[at - 1:]
    if len(rest) or expr is None:
        tail = Id(rest)
        expr = tail if expr is None else Tensor(expr, tail)
    if expr.dom != dom:
        raise TangleError("line %d: slice expects %r but lower boundary is %r"
                          % (lineno, expr.dom.render(), dom.render()))
    return expr


def _gen_at(kind, dom, pos, lineno):
    """Instantiate a parsed generator against the domain signs at pos."""
    i = pos - 1
    if kind in CUPS:
        return cup(kind[-1])
    if kind in CAPS:
        want = "ud" if kind == "capR" else "du"
        got = dom[i] + dom[i + 1]
        if dom.is_omega(i) or dom.is_omega(i + 1):
            raise TangleError("line %d: %s cannot involve an omega strand" % (lineno, kind))
        if got != want:
            raise TangleError("line %d: %s at %d expects signs %r, found %r"
                              % (lineno, kind, pos, want, got))
        return cap(kind[-1])
    if kind in ("xp", "xm", "v"):
        a, b = dom[i], dom[i + 1]
        if kind != "v" and (dom.is_omega(i) or dom.is_omega(i + 1)):
            raise TangleError("line %d: classical crossing at %d touches an omega strand"
                              % (lineno, pos))
        return crossing(kind, a, b)
    # omega crossings: two-position form when a tag is present, else the
    # one-position operator form acting on the alpha strand at pos
    if i + 1 < len(dom) and (dom.is_omega(i) != dom.is_omega(i + 1)):
        return crossing(kind, dom[i], dom[i + 1])
    if dom.is_omega(i):
        raise TangleError("line %d: %s at %d has no alpha strand" % (lineno, kind, pos))
    return omega_op(kind, dom[i])


def serialize_ops(expr):
    """Flatten to (gen, 1-based position) pairs in application order.

    Positions are full sign-sequence positions (omega included) relative to
    the whole tangle at the moment the generator applies.
    """
    if isinstance(expr, Id):
        return []
    if isinstance(expr, Gen):
        return [(expr, 1)]
    if isinstance(expr, Compose):
        return serialize_ops(expr.lower) + serialize_ops(expr.upper)
    if isinstance(expr, Tensor):
        shift = len(expr.a.dom)
        right = [(g, p + shift) for g, p in serialize_ops(expr.b)]
        left = serialize_ops(expr.a)
        return right + left
    raise TangleError("cannot serialize %r" % (expr,))


def render_tangle(expr):
    """Canonical document: signs header, then one generator per slice."""
    lines = ["signs: %s" % expr.dom.render()]
    cur = list(expr.dom)
    for gen, pos in serialize_ops(expr):
        lines.append("%s %d" % (gen.kind, pos))
        i = pos - 1
        cur[i: i + len(gen.dom)] = list(gen.cod)
    return "\n".join(lines) + "\n"


def iter_gens(expr):
    """All generator nodes in application order."""
    return [g for g, _ in serialize_ops(expr)]


def has_omega(expr):
    """True if any omega generator or omega-tagged boundary position occurs."""
    if any(g.kind in OMEGA_GENS for g in iter_gens(expr)):
        return True
    seqs = [expr.dom, expr.cod]
    for s in seqs:
        for i in range(len(s)):
            if s.is_omega(i):
                return True
    return False
