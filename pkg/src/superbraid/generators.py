"""Sparse morphisms and the elementary generator matrices.

All generator values follow the vector representation of U_q(gl(m|n)) with
basis x_1..x_{m+n} (letters 1..m are even, the rest odd).  Tensor products
of morphisms are plain Kronecker products: every sign lives inside the
generator matrices, so no Koszul sign rule is applied when tensoring.

Crossings with downward strands are not given matrices directly; they are
rewritten by rotate_crossing into compositions of upward crossings with
cups and caps.
"""

from .ring import LaurentPoly
from .schema import SignSeq, SuperDim, enumerate_basis, parity
from . import tangle as tg

QW = ("q", "w")


class Morphism:
    """A sparse linear map between tensor powers of V and V*.

    entries maps (row_word, col_word) pairs of basis words (tuples of
    letters, omega positions omitted) to nonzero LaurentPoly coefficients.
    dom and cod are SignSeq boundaries; d is the SuperDim of V.
    """

    __slots__ = ("dom", "cod", "d", "vars", "entries")

    def __init__(self, dom, cod, d, vars, entries):
        self.dom = SignSeq(dom)
        self.cod = SignSeq(cod)
        self.d = d
        self.vars = tuple(vars)
        clean = {}
        for (r, c), p in dict(entries).items():
            if p.vars != self.vars:
                raise ValueError("entry variable mismatch")
            if not p.is_zero():
                clean[(tuple(r), tuple(c))] = p
        self.entries = clean

    @classmethod
    def identity(cls, signs, d, vars):
        signs = SignSeq(signs)
        one = LaurentPoly.one(vars)
        entries = {(w, w): one for w in enumerate_basis(signs, d)}
        return cls(signs, signs, d, vars, entries)

    @classmethod
    def zero(cls, dom, cod, d, vars):
        return cls(dom, cod, d, vars, {})

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.d == other.d and self.vars == other.vars
                and self.entries == other.entries)

    def __repr__(self):
        return "Morphism(%s -> %s, %d entries)" % (
            self.dom.render(), self.cod.render(), len(self.entries))

    def compose(self, other):
        """self after other."""
        if other.cod != self.dom:
            raise ValueError("composition mismatch: %r then %r"
                             % (other.cod.render(), self.dom.render()))
        by_row = {}
        for (r, c), p in other.entries.items():
            by_row.setdefault(r, []).append((c, p))
        out = {}
        for (r2, c2), p2 in self.entries.items():
            for c1, p1 in by_row.get(c2, ()):
                key = (r2, c1)
                acc = out.get(key)
                prod = p2 * p1
                out[key] = prod if acc is None else acc + prod
        return Morphism(other.dom, self.cod, self.d, self.vars, out)

    def __matmul__(self, other):
        return self.compose(other)

    def tensor(self, other):
        out = {}
        for (r1, c1), p1 in self.entries.items():
            for (r2, c2), p2 in other.entries.items():
                out[(r1 + r2, c1 + c2)] = p1 * p2
        return Morphism(self.dom + other.dom, self.cod + other.cod,
                        self.d, self.vars, out)

    def scaled(self, poly):
        return Morphism(self.dom, self.cod, self.d, self.vars,
                        {k: p * poly for k, p in self.entries.items()})

    def __add__(self, other):
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for k, p in other.entries.items():
            out[k] = out[k] + p if k in out else p
        return Morphism(self.dom, self.cod, self.d, self.vars, out)

    def __sub__(self, other):
        return self + other.scaled(LaurentPoly.const(self.vars, -1))

    def is_zero(self):
        return not self.entries

    def columns(self):
        """col_word -> list of (row_word, coefficient)."""
        out = {}
        for (r, c), p in self.entries.items():
            out.setdefault(c, []).append((r, p))
        return out

    def entry(self, row, col):
        p = self.entries.get((tuple(row), tuple(col)))
        return p if p is not None else LaurentPoly.zero(self.vars)

    def is_parity_preserving(self):
        return all(parity(r, self.d) == parity(c, self.d) for r, c in self.entries)

    def is_diagonal(self):
        return all(r == c for r, c in self.entries)

    def to_matrix(self):
        """Dense PolyMatrix in flat basis order (rows cod, cols dom)."""
        from .ring import PolyMatrix
        rows = enumerate_basis(self.cod, self.d)
        cols = enumerate_basis(self.dom, self.d)
        zero = LaurentPoly.zero(self.vars)
        data = [[zero] * len(cols) for _ in rows]
        ri = {w: i for i, w in enumerate(rows)}
        ci = {w: i for i, w in enumerate(cols)}
        for (r, c), p in self.entries.items():
            data[ri[r]][ci[c]] = p
        return PolyMatrix(self.vars, data)

    @classmethod
    def from_matrix(cls, mat, dom, cod, d):
        rows = enumerate_basis(SignSeq(cod), d)
        cols = enumerate_basis(SignSeq(dom), d)
        if (len(rows), len(cols)) != (mat.rows, mat.cols):
            raise ValueError("matrix shape does not fit the boundaries")
        entries = {}
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                p = mat.entries[i][j]
                if not p.is_zero():
                    entries[(r, c)] = p
        return cls(dom, cod, d, mat.vars, entries)


# -- generator matrices ------------------------------------------------

_cache = {}


def _cached(key, build):
    got = _cache.get(key)
    if got is None:
        got = build()
        _cache[key] = got
    return got


def _sign(d, i, j):
    return -1 if (d.is_odd(i) and d.is_odd(j)) else 1


def rmatrix(d, sign, vars=QW):
    """Positive (sign=+1) or negative (sign=-1) classical crossing on (u,u)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")

    def build():
        q = LaurentPoly.gen(vars, "q")
        uu = SignSeq("uu")
        out = {}
        for i in range(1, d.dim + 1):
            for j in range(1, d.dim + 1):
                col = (i, j)
                if i == j:
                    if i <= d.m:
                        out[(col, col)] = q if sign > 0 else q ** -1
                    else:
                        out[(col, col)] = -(q ** -1) if sign > 0 else -q
                    continue
                swap = LaurentPoly.const(vars, _sign(d, i, j))
                out[((j, i), col)] = swap
                if (i < j) == (sign > 0):
                    extra = (q - q ** -1) if sign > 0 else (q ** -1 - q)
                    out[(col, col)] = extra
        return Morphism(uu, uu, d, vars, out)

    return _cached(("rmatrix", d.m, d.n, sign, vars), build)


def tau_q(d, vars=QW):
    """q-deformed graded switch map at a virtual crossing on (u,u)."""

    def build():
        q = LaurentPoly.gen(vars, "q")
        uu = SignSeq("uu")
        out = {}
        for i in range(1, d.dim + 1):
            for j in range(1, d.dim + 1):
                if d.is_odd(i) and d.is_odd(j):
                    coeff = LaurentPoly.const(vars, -1)
                elif d.is_odd(i) and not d.is_odd(j):
                    coeff = q
                elif not d.is_odd(i) and d.is_odd(j):
                    coeff = q ** -1
                else:
                    coeff = LaurentPoly.one(vars)
                out[((j, i), (i, j))] = coeff
        return Morphism(uu, uu, d, vars, out)

    return _cached(("tau_q", d.m, d.n, vars), build)


def cup(d, side, vars=QW):
    """Minimum: cup(d,'R'): 1 -> sum x_k (x) x_k^*; cup(d,'L') carries weights."""

    def build():
        q = LaurentPoly.gen(vars, "q")
        out = {}
        if side == "R":
            cod = SignSeq("ud")
            for k in range(1, d.dim + 1):
                out[((k, k), ())] = LaurentPoly.one(vars)
        elif side == "L":
            cod = SignSeq("du")
            lead = q ** (d.m - d.n)
            for k in range(1, d.dim + 1):
                if k <= d.m:
                    out[((k, k), ())] = lead * q ** (1 - 2 * k)
                else:
                    out[((k, k), ())] = -(lead * q ** (-4 * d.m - 1 + 2 * k))
        else:
            raise ValueError("side must be 'L' or 'R'")
        return Morphism(SignSeq(""), cod, d, vars, out)

    return _cached(("cup", d.m, d.n, side, vars), build)


def cap(d, side, vars=QW):
    """Maximum: cap(d,'L'): x_k^* (x) x_k -> 1; cap(d,'R') carries the mu weights."""

    def build():
        out = {}
        if side == "L":
            dom = SignSeq("du")
            for k in range(1, d.dim + 1):
                out[((), (k, k))] = LaurentPoly.one(vars)
        elif side == "R":
            dom = SignSeq("ud")
            weights = mu_weights(d, vars)
            for k in range(1, d.dim + 1):
                out[((), (k, k))] = weights[k - 1]
        else:
            raise ValueError("side must be 'L' or 'R'")
        return Morphism(dom, SignSeq(""), d, vars, out)

    return _cached(("cap", d.m, d.n, side, vars), build)


def mu_weights(d, vars=QW):
    """Diagonal of mu, the closure weight map: letter k -> coefficient."""
    q = LaurentPoly.gen(vars, "q")
    out = []
    for k in range(1, d.dim + 1):
        if k <= d.m:
            out.append(q ** (-d.m + d.n - 1 + 2 * k))
        else:
            out.append(-(q ** (3 * d.m + d.n + 1 - 2 * k)))
    return out


def mu(d, vars=QW):
    """mu as a morphism on a single upward strand."""

    def build():
        u = SignSeq("u")
        weights = mu_weights(d, vars)
        entries = {((k,), (k,)): weights[k - 1] for k in range(1, d.dim + 1)}
        return Morphism(u, u, d, vars, entries)

    return _cached(("mu", d.m, d.n, vars), build)


def omega_scaling(d, power, direction="u", vars=QW):
    """Diagonal map scaling odd letters by w**power on one strand.

    A downward strand receives the inverse scaling, so the slide moves
    across cups and caps hold.
    """
    if "w" not in vars:
        raise ValueError("omega generators need the variable w")

    def build():
        s = SignSeq((direction,))
        if s.is_omega(0):
            raise ValueError("omega scaling acts on an alpha strand")
        p = power if s.direction(0) == "u" else -power
        w = LaurentPoly.gen(vars, "w")
        one = LaurentPoly.one(vars)
        entries = {}
        for k in range(1, d.dim + 1):
            entries[((k,), (k,))] = (w ** p) if d.is_odd(k) else one
        return Morphism(s, s, d, vars, entries)

    return _cached(("omega", d.m, d.n, power, direction, vars), build)


# scaling powers for the four omega crossing kinds (on an upward strand):
# oxp (omega over alpha, positive flavor) multiplies odd letters by w,
# oxm by w^-1; the alpha-over-omega kinds are their inverses.
OMEGA_POWER = {"oxp": 1, "oxm": -1, "xop": -1, "xom": 1}

# paper-facing aliases matching the two displayed omega-over maps


def omega_over(d, sign, direction="u", vars=QW):
    """Omega-over-alpha crossing: odd letters scale by w**sign (upward strand)."""
    return omega_scaling(d, sign, direction, vars)


def alpha_over(d, sign, direction="u", vars=QW):
    """Alpha-over-omega crossing: inverse of omega_over with the same sign."""
    return omega_scaling(d, -sign, direction, vars)


def left_curl_formula(d, vars=QW):
    """Displayed diagonal of the left virtual curl on one upward strand."""
    q = LaurentPoly.gen(vars, "q")
    u = SignSeq("u")
    entries = {}
    for i in range(1, d.dim + 1):
        if i <= d.m:
            entries[((i,), (i,))] = q ** (d.m - d.n + 1 - 2 * i)
        else:
            entries[((i,), (i,))] = q ** (-d.n - 3 * d.m - 1 + 2 * i)
    return Morphism(u, u, d, vars, entries)


def right_curl_formula(d, vars=QW):
    """Displayed diagonal of the right virtual curl (inverse of the left one)."""
    q = LaurentPoly.gen(vars, "q")
    u = SignSeq("u")
    entries = {}
    for i in range(1, d.dim + 1):
        if i <= d.m:
            entries[((i,), (i,))] = q ** (-d.m + d.n - 1 + 2 * i)
        else:
            entries[((i,), (i,))] = q ** (d.n + 3 * d.m + 1 - 2 * i)
    return Morphism(u, u, d, vars, entries)


def generator_morphism(gen, d, vars=QW):
    """Morphism of a generator node whose crossings are already upward.

    Crossings with downward strands must be rewritten first (see
    rotate_crossing); asking for their matrix directly is an error.
    """
    kind = gen.kind
    if kind in ("xp", "xm", "v"):
        if gen.dom != SignSeq("uu"):
            raise ValueError("crossing %s on %r needs rotation first"
                             % (kind, gen.dom.render()))
        if kind == "v":
            return tau_q(d, vars)
        return rmatrix(d, 1 if kind == "xp" else -1, vars)
    if kind in ("cupR", "cupL"):
        return cup(d, kind[-1], vars)
    if kind in ("capR", "capL"):
        return cap(d, kind[-1], vars)
    if kind in tg.OMEGA_GENS:
        power = OMEGA_POWER[kind]
        if len(gen.dom) == 1:
            return omega_scaling(d, power, gen.dom[0], vars)
        # explicit omega strand: scale the alpha member, swap positions
        i = 0 if not gen.dom.is_omega(0) else 1
        inner = omega_scaling(d, power, gen.dom[i], vars)
        return Morphism(gen.dom, gen.cod, d, vars, inner.entries)
    raise ValueError("no morphism for generator %r" % kind)


def rotate_crossing(kind, orients):
    """Rewrite a crossing whose strands are not both upward.

    orients is the pair (or 4-tuple dom+cod) of strand directions; returns
    a TangleExpr over the same boundary built from the upward crossing,
    cups and caps.  An upward crossing is returned unchanged.
    """
    orients = tuple(orients)
    if len(orients) == 4:
        if orients[2:] != (orients[1], orients[0]):
            raise ValueError("crossing boundary must swap the two strands")
        orients = orients[:2]
    a, b = orients
    if kind not in ("xp", "xm", "v"):
        raise ValueError("rotate_crossing handles xp, xm, v")
    if a == "u" and b == "u":
        return tg.crossing(kind, "u", "u")
    if a == "d":
        # bend the first strand: cap on the left, cup on the right
        inner = rotate_crossing(kind, (b, "u"))
        mid = tg.Tensor(tg.Id(SignSeq("d")), tg.Tensor(inner, tg.Id(SignSeq("d"))))
        lo = tg.Tensor(tg.Id(SignSeq(("d", b))), tg.cup("R"))
        hi = tg.Tensor(tg.cap("L"), tg.Id(SignSeq((b, "d"))))
        return tg.Compose(hi, tg.Compose(mid, lo))
    # a == 'u', b == 'd': bend the second strand the other way
    inner = rotate_crossing(kind, ("u", a))
    mid = tg.Tensor(tg.Id(SignSeq("d")), tg.Tensor(inner, tg.Id(SignSeq("d"))))
    lo = tg.Tensor(tg.cup("L"), tg.Id(SignSeq((a, "d"))))
    hi = tg.Tensor(tg.Id(SignSeq(("d", a))), tg.cap("R"))
    return tg.Compose(hi, tg.Compose(mid, lo))
