"""Exact arithmetic for multivariate Laurent polynomials over the integers.

Every quantity downstream (R-matrix entries, traces, determinants) lives in
a ring Z[v1^{+-1}, ..., vk^{+-1}] for a small fixed tuple of variable names
such as ('q',), ('q', 'w') or ('s', 't').  Coefficients are exact integers;
there is no floating point anywhere.

The canonical term order used for rendering and unit normalization is
ascending lexicographic on exponent vectors.  Equality never depends on it.
"""

from fractions import Fraction


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    terms maps exponent vectors (one integer per variable, negatives
    allowed) to nonzero integer coefficients:

        LaurentPoly(('q', 'w'), {(2, 0): 1, (0, -1): -3})   is   q^2 - 3*w^-1

    Instances are immutable by convention; all operations return new
    polynomials.  Mixing polynomials over different variable tuples is an
    error, never a silent coercion.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=()):
        self.vars = tuple(vars)
        nv = len(self.vars)
        clean = {}
        for exps, c in dict(terms).items():
            if c:
                e = tuple(exps)
                if len(e) != nv:
                    raise ValueError("exponent vector %r does not match variables %r"
                                     % (e, self.vars))
                clean[e] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, vars, c):
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def one(cls, vars):
        return cls.const(vars, 1)

    @classmethod
    def mono(cls, vars, coeff, **powers):
        """Single term, powers given by variable name: mono(('q','w'), -1, q=2, w=-1)."""
        vars = tuple(vars)
        exps = [0] * len(vars)
        for name, p in powers.items():
            exps[vars.index(name)] = p
        return cls(vars, {tuple(exps): coeff})

    @classmethod
    def gen(cls, vars, name):
        return cls.mono(vars, 1, **{name: 1})

    # -- predicates and accessors -------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_value(self):
        """The integer value, if the polynomial is constant."""
        if not self.terms:
            return 0
        if list(self.terms) != [(0,) * len(self.vars)]:
            raise ValueError("not a constant: %s" % self)
        return self.terms[(0,) * len(self.vars)]

    def min_exponent(self, name):
        """Smallest exponent of one variable over all terms (0 if zero poly)."""
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return min(e[i] for e in self.terms)

    def max_exponent(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def uses(self, name):
        """True if any term has a nonzero exponent of the named variable."""
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    def sorted_terms(self):
        """Terms in the canonical ascending-lex order."""
        return [(e, self.terms[e]) for e in sorted(self.terms)]

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.const(self.vars, other)
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise ValueError("variable mismatch: %r vs %r" % (self.vars, other.vars))
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return LaurentPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                nc = out.get(e, 0) + ca * cb
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            # only units (single +-1-led terms) can be inverted exactly
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit coefficient %d" % c)
            inv = LaurentPoly(self.vars, {tuple(-x for x in e): c})
            return inv ** (-n)
        result = LaurentPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def shift(self, **powers):
        """Multiply by the monomial with the given exponents."""
        return self * LaurentPoly.mono(self.vars, 1, **powers)

    def evaluate(self, values):
        """Exact rational value at integer/Fraction points, e.g. {'q': 2}."""
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for name, x in zip(self.vars, e):
                t *= Fraction(values[name]) ** x
            total += t
        return total

    # -- rendering ------------------------------------------------------

    def render(self):
        """Canonical string form: ascending-lex term order, '^' powers, '*' products."""
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            for name, p in zip(self.vars, e):
                if p == 1:
                    factors.append(name)
                elif p != 0:
                    factors.append("%s^%d" % (name, p))
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                sign = "-" if c < 0 else ""
            else:
                sign = "-" if c < 0 else "+"
            parts.append(sign + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "LaurentPoly(%r, %s)" % (self.vars, self.render())


# -- module-level ring operations -------------------------------------


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def quantum_int(z, vars=("q",), qvar="q"):
    """The balanced quantum integer [z]_q = q^{z-1} + q^{z-3} + ... + q^{1-z}.

    [0]_q = 0 and [-z]_q = -[z]_q.
    """
    vars = tuple(vars)
    if z == 0:
        return LaurentPoly.zero(vars)
    sign = 1 if z > 0 else -1
    out = LaurentPoly.zero(vars)
    for k in range(abs(z)):
        out = out + LaurentPoly.mono(vars, sign, **{qvar: abs(z) - 1 - 2 * k})
    return out


def substitute(p, assignments, target_vars):
    """Ring homomorphism sending each variable to a +-1-coefficient monomial.

    assignments maps every variable of p to a LaurentPoly over target_vars
    that must be a single term with coefficient +1 or -1 (so the map is an
    exact Laurent-ring homomorphism; no division ever arises).
    """
    target_vars = tuple(target_vars)
    images = []
    for name in p.vars:
        img = assignments[name]
        if isinstance(img, int):
            img = LaurentPoly.const(target_vars, img)
        if img.vars != target_vars:
            raise ValueError("assignment for %r is over %r, expected %r"
                             % (name, img.vars, target_vars))
        if len(img.terms) != 1:
            raise ValueError("assignment for %r is not a monomial" % name)
        (e, c), = img.terms.items()
        if c not in (1, -1):
            raise ValueError("assignment for %r has non-unit coefficient %d" % (name, c))
        images.append((e, c))
    out = {}
    for exps, coeff in p.terms.items():
        c = coeff
        e = [0] * len(target_vars)
        for p_exp, (ie, ic) in zip(exps, images):
            if ic == -1 and p_exp % 2:
                c = -c
            for i, x in enumerate(ie):
                e[i] += p_exp * x
        e = tuple(e)
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return LaurentPoly(target_vars, out)


def rename_vars(p, target_vars, mapping=None):
    """Reinterpret p over target_vars; unmapped target variables get exponent 0.

    mapping maps old names to new names (identity by default).  Every
    variable p actually uses must land in target_vars.
    """
    target_vars = tuple(target_vars)
    mapping = mapping or {}
    assignments = {}
    for name in p.vars:
        new = mapping.get(name, name)
        if new not in target_vars and p.uses(name):
            raise ValueError("variable %r has no home in %r" % (name, target_vars))
        if new in target_vars:
            assignments[name] = LaurentPoly.gen(target_vars, new)
        else:
            assignments[name] = LaurentPoly.one(target_vars)
    return substitute(p, assignments, target_vars)


def unit_normalize(p):
    """Canonical representative up to +- monomial units.

    Shifts every variable's minimum exponent to 0, then flips the overall
    sign so the lexicographically first term has positive coefficient.
    """
    if p.is_zero():
        return p
    shifts = {name: -p.min_exponent(name) for name in p.vars}
    out = p * LaurentPoly.mono(p.vars, 1, **shifts)
    first = min(out.terms)
    if out.terms[first] < 0:
        out = -out
    return out


def equal_up_to_unit(a, b, unit_vars=None, allow_sign=True):
    """If a == u*b for a monomial unit u supported on unit_vars, return u.

    Returns None when no such unit exists.  unit_vars defaults to all
    variables.  The unit's coefficient is +1, or -1 when allow_sign.
    """
    if a.vars != b.vars:
        raise ValueError("variable mismatch: %r vs %r" % (a.vars, b.vars))
    if a.is_zero() and b.is_zero():
        return LaurentPoly.one(a.vars)
    if a.is_zero() or b.is_zero():
        return None
    if unit_vars is None:
        unit_vars = a.vars
    la, lb = min(a.terms), min(b.terms)
    # a = u*b forces the lex-first terms to correspond: u = la/lb termwise
    exps = tuple(x - y for x, y in zip(la, lb))
    for name, e in zip(a.vars, exps):
        if e and name not in unit_vars:
            return None
    ca, cb = a.terms[la], b.terms[lb]
    if abs(ca) != abs(cb):
        return None
    sign = 1 if (ca > 0) == (cb > 0) else -1
    if sign < 0 and not allow_sign:
        return None
    u = LaurentPoly(a.vars, {exps: sign})
    if a == u * b:
        return u
    return None


def divexact(a, b):
    """Exact division a/b in the Laurent ring; ValueError if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.vars)
    if a.vars != b.vars:
        raise ValueError("variable mismatch: %r vs %r" % (a.vars, b.vars))
    nv = len(a.vars)
    # shift both operands into the non-negative-exponent ring, where
    # ascending lex is a well-order and leading-term division terminates
    sa = [min(e[i] for e in a.terms) for i in range(nv)]
    sb = [min(e[i] for e in b.terms) for i in range(nv)]
    rem = {tuple(x - y for x, y in zip(e, sa)): c for e, c in a.terms.items()}
    bt = {tuple(x - y for x, y in zip(e, sb)): c for e, c in b.terms.items()}
    b_lead = max(bt)
    b_c = bt[b_lead]
    out = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        qe = tuple(x - y for x, y in zip(lead, b_lead))
        if any(x < 0 for x in qe) or c % b_c:
            raise ValueError("inexact polynomial division")
        qc = c // b_c
        out[qe] = out.get(qe, 0) + qc
        for be, bc in bt.items():
            e = tuple(x + y for x, y in zip(qe, be))
            nc = rem.get(e, 0) - qc * bc
            if nc:
                rem[e] = nc
            else:
                rem.pop(e, None)
    shift = tuple(x - y for x, y in zip(sa, sb))
    return LaurentPoly(a.vars, {tuple(x + y for x, y in zip(e, shift)): c
                                for e, c in out.items()})


class PolyMatrix:
    """Dense matrix of LaurentPoly entries, used for Burau-style computations."""

    def __init__(self, vars, entries):
        self.vars = tuple(vars)
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.vars != self.vars:
                    raise ValueError("entry variable mismatch")

    @classmethod
    def identity(cls, vars, n):
        one = LaurentPoly.one(vars)
        zero = LaurentPoly.zero(vars)
        return cls(vars, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, vars, rows, cols):
        zero = LaurentPoly.zero(vars)
        return cls(vars, [[zero] * cols for _ in range(rows)])

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.vars == other.vars and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.vars, self.rows, self.cols,
                     tuple(tuple(row) for row in self.entries)))

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return PolyMatrix(self.vars, [[p * other for p in row] for row in self.entries])
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d * %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        zero = LaurentPoly.zero(self.vars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.vars, out)

    def __add__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return PolyMatrix(self.vars, [[a + b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return PolyMatrix(self.vars, [[a - b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.entries, other.entries)])

    def minor(self, drop_row, drop_col):
        return PolyMatrix(self.vars,
                          [[p for j, p in enumerate(row) if j != drop_col]
                           for i, row in enumerate(self.entries) if i != drop_row])

    def substitute(self, assignments, target_vars):
        return PolyMatrix(target_vars,
                          [[substitute(p, assignments, target_vars) for p in row]
                           for row in self.entries])

    def render(self):
        """One line per row, entries tab-separated; '[]' for the empty matrix."""
        if self.rows == 0:
            return "[]"
        return "\n".join("\t".join(p.render() for p in row) for row in self.entries)

    def det_cofactor(self):
        """Cofactor expansion along the first row.  Oracle for small sizes."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return LaurentPoly.one(self.vars)
        if n == 1:
            return self.entries[0][0]
        total = LaurentPoly.zero(self.vars)
        for j in range(n):
            a = self.entries[0][j]
            if a.is_zero():
                continue
            sub = self.minor(0, j).det_cofactor()
            term = a * sub
            total = total + (term if j % 2 == 0 else -term)
        return total

    def det_bareiss(self):
        """Fraction-free determinant.

        Each row is first scaled by a monomial so its entries land in the
        non-negative-exponent polynomial ring, where the Bareiss recurrence
        divides exactly; the collected monomial is multiplied back at the
        end.  Singular matrices yield the zero polynomial.
        """
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        vars = self.vars
        if n == 0:
            return LaurentPoly.one(vars)
        nv = len(vars)
        shift = [0] * nv
        a = []
        for row in self.entries:
            live = [p for p in row if not p.is_zero()]
            if not live:
                return LaurentPoly.zero(vars)
            mins = [min(p.min_exponent(name) for p in live) for name in vars]
            clear = LaurentPoly(vars, {tuple(-m for m in mins): 1})
            a.append([p * clear for p in row])
            for i in range(nv):
                shift[i] += mins[i]
        sign = 1
        prev = LaurentPoly.one(vars)
        for k in range(n - 1):
            if a[k][k].is_zero():
                for i in range(k + 1, n):
                    if not a[i][k].is_zero():
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return LaurentPoly.zero(vars)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                    a[i][j] = divexact(num, prev)
                a[i][k] = LaurentPoly.zero(vars)
            prev = a[k][k]
        det = a[n - 1][n - 1]
        if sign < 0:
            det = -det
        return det * LaurentPoly(vars, {tuple(shift): 1})
