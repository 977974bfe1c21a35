"""Almost-classical certification and obstruction.

An Alexander numbering assigns an integer to every short arc of a
diagram, where arcs end only at classical crossings (virtual crossings
and omega decorations pass arcs through unbroken, and cups, caps and
free ends extend them).  At each classical crossing, rotated so both
strands point upward, the two arcs on the right side carry a label one
less than the two arcs on the left side.  A numbering of a tangle whose
domain equals its codomain is conservative when each initial end's label
matches the corresponding terminal end's; the vector of end labels is
its potential, defined up to a global shift.

Certification works on the given diagram only: a diagram with no
conservative numbering may still be equivalent to one that has one, so
only the positive direction certifies.

The braid obstruction compares the lifted functor matrix against the
plain one.  If the braid has a diagram with a conservative numbering of
potential (k_1..k_N), the lifted matrix equals the plain matrix
conjugated by per-strand diagonal maps that scale odd letters by w**k_i,
so every entry pair must differ exactly by w raised to the linear form
sum_i k_i * (odd_i(row) - odd_i(col)).  Inconsistency of that integer
linear system (or a non-monomial entry ratio) proves no such diagram
exists.  Consistency proves nothing.
"""

from .ring import LaurentPoly, equal_up_to_unit
from .schema import SuperDim
from .generators import QW, Morphism
from .tangle import (BraidWord, Compose, Gen, Id, TangleError, Tensor,
                     CAPS, CUPS, OMEGA_GENS)
from .zh import gen_rep


class ArcGraph:
    """Short arcs of a diagram with the crossing difference constraints.

    Arcs are integer ids.  constraints holds (a, b, delta) triples
    meaning label(a) - label(b) = delta.  iota and tau are the arc ids
    at the initial and terminal boundary; matched says whether the
    boundaries coincide so that conservativity is meaningful.
    """

    __slots__ = ("n_arcs", "constraints", "iota", "tau", "matched")

    def __init__(self, n_arcs, constraints, iota, tau, matched):
        self.n_arcs = n_arcs
        self.constraints = tuple(constraints)
        self.iota = tuple(iota)
        self.tau = tuple(tau)
        self.matched = bool(matched)

    @property
    def arcs(self):
        return range(self.n_arcs)


class Numbering:
    """A solution of an arc graph's constraint system.

    assignment maps arc id -> integer label, each connected component
    pinned so its smallest arc id gets 0.  potential is the tuple of
    initial-end labels when the numbering is conservative, else None.
    """

    __slots__ = ("assignment", "conservative", "potential")

    def __init__(self, assignment, conservative, potential):
        self.assignment = assignment
        self.conservative = conservative
        self.potential = potential


# crossing rule per orientation pair (bottom-left, bottom-right strand
# directions): which arc ends share a label and which side is one less,
# written as (end_a, end_b, delta) with ends 0=bl 1=br 2=tl 3=tr
_CROSSING_RULE = {
    ("u", "u"): ((0, 2, 0), (1, 3, 0), (0, 1, 1)),
    ("u", "d"): ((2, 3, 0), (0, 1, 0), (2, 0, 1)),
    ("d", "u"): ((0, 1, 0), (2, 3, 0), (0, 2, 1)),
    ("d", "d"): ((1, 3, 0), (0, 2, 0), (1, 0, 1)),
}


class _ArcWalker:
    def __init__(self):
        self.count = 0
        self.constraints = []

    def fresh(self):
        arc = self.count
        self.count += 1
        return arc

    def crossing(self, wires, o1, o2):
        bl, br = wires
        tl, tr = self.fresh(), self.fresh()
        ends = (bl, br, tl, tr)
        for a, b, delta in _CROSSING_RULE[(o1, o2)]:
            self.constraints.append((ends[a], ends[b], delta))
        return [tl, tr]

    def walk(self, node, wires):
        if isinstance(node, Id):
            return wires
        if isinstance(node, Tensor):
            k = len(node.a.dom)
            return (self.walk(node.a, wires[:k])
                    + self.walk(node.b, wires[k:]))
        if isinstance(node, Compose):
            return self.walk(node.upper, self.walk(node.lower, wires))
        if isinstance(node, Gen):
            kind = node.kind
            if kind in ("xp", "xm"):
                return self.crossing(wires, node.dom.direction(0),
                                     node.dom.direction(1))
            if kind == "v" or (kind in OMEGA_GENS and len(node.dom) == 2):
                return [wires[1], wires[0]]
            if kind in OMEGA_GENS:
                return wires
            if kind in CUPS:
                arc = self.fresh()
                return [arc, arc]
            if kind in CAPS:
                self.constraints.append((wires[0], wires[1], 0))
                return []
        raise TangleError("cannot trace arcs through %r" % (node,))


def build_arc_graph(obj):
    """Arc graph of a braid word or tangle expression."""
    walker = _ArcWalker()
    if isinstance(obj, BraidWord):
        wires = [walker.fresh() for _ in range(obj.strands)]
        iota = tuple(wires)
        for kind, p in obj.letters:
            i = p - 1
            if kind == "v":
                wires[i], wires[i + 1] = wires[i + 1], wires[i]
            else:
                wires[i], wires[i + 1] = walker.crossing(
                    [wires[i], wires[i + 1]], "u", "u")
        return ArcGraph(walker.count, walker.constraints, iota, wires, True)
    iota = [walker.fresh() for _ in range(len(obj.dom))]
    tau = walker.walk(obj, list(iota))
    return ArcGraph(walker.count, walker.constraints, iota, tau,
                    obj.dom == obj.cod)


class _OffsetUnionFind:
    """Union-find over difference constraints label(a) - label(b) = delta."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.offset = [0] * n

    def find(self, x):
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        acc = 0
        for node in reversed(path):
            acc += self.offset[node]
            self.parent[node] = x
            self.offset[node] = acc
        return x, acc

    def union(self, a, b, delta):
        ra, oa = self.find(a)
        rb, ob = self.find(b)
        if ra == rb:
            return oa - ob == delta
        self.parent[ra] = rb
        self.offset[ra] = ob + delta - oa
        return True

    def clone(self):
        out = _OffsetUnionFind(len(self.parent))
        out.parent = list(self.parent)
        out.offset = list(self.offset)
        return out


def solve_numbering(g):
    """Solve an arc graph's difference system; None when contradictory.

    When the boundaries match and the end-matching equations are also
    satisfiable, the returned numbering is conservative and carries the
    potential; otherwise a plain (non-conservative) solution is returned.
    """
    uf = _OffsetUnionFind(g.n_arcs)
    for a, b, delta in g.constraints:
        if not uf.union(a, b, delta):
            return None
    conservative = False
    if g.matched:
        trial = uf.clone()
        if all(trial.union(a, b, 0) for a, b in zip(g.iota, g.tau)):
            conservative = True
            uf = trial
    base = {}
    values = {}
    for arc in range(g.n_arcs):
        root, off = uf.find(arc)
        if root not in base:
            base[root] = off
        values[arc] = off - base[root]
    potential = tuple(values[a] for a in g.iota) if conservative else None
    return Numbering(values, conservative, potential)


class ACVerdict:
    """Outcome of the braid obstruction test.

    obstructed True proves the braid has no diagram with a conservative
    numbering; False only means this test found none.  solution is one
    integer exponent vector when consistent, shifts a basis of the
    family's free directions.  lifted and plain keep the two compared
    matrices.
    """

    __slots__ = ("obstructed", "reason", "solution", "shifts",
                 "lifted", "plain")

    def __init__(self, obstructed, reason, solution, shifts, lifted, plain):
        self.obstructed = obstructed
        self.reason = reason
        self.solution = solution
        self.shifts = shifts
        self.lifted = lifted
        self.plain = plain


def potential_conjugate(morphism, ks):
    """Conjugate by diagonal maps scaling odd letters by w**k_i per strand."""
    d = morphism.d
    vars = morphism.vars
    entries = {}
    for (row, col), p in morphism.entries.items():
        e = sum(k * (d.grading(r) - d.grading(c))
                for k, r, c in zip(ks, row, col))
        entries[(row, col)] = p * LaurentPoly.mono(vars, 1, w=e)
    return Morphism(morphism.dom, morphism.cod, d, vars, entries)


def _lattice_solve(n, rows):
    """Integer solutions of coeffs . k = rhs over all rows.

    Returns (particular, shift_basis) or None.  Column reduction by
    unimodular operations; the tracked transform turns the reduced
    solution back into k and its trailing columns span the homogeneous
    solutions.
    """
    W = [list(coeffs) for coeffs, _ in rows]
    rhs = [r for _, r in rows]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def addmul(dst, src, t):
        for row in W:
            row[dst] += t * row[src]
        for row in U:
            row[dst] += t * row[src]

    def swap(a, b):
        for row in W:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    def negate(j):
        for row in W:
            row[j] = -row[j]
        for row in U:
            row[j] = -row[j]

    pivots = []
    c = 0
    for i in range(len(W)):
        if c == n:
            break
        while True:
            live = [j for j in range(c, n) if W[i][j]]
            if len(live) <= 1:
                break
            jm = min(live, key=lambda j: abs(W[i][j]))
            for j in live:
                if j != jm:
                    t = W[i][j] // W[i][jm]
                    if t:
                        addmul(j, jm, -t)
        live = [j for j in range(c, n) if W[i][j]]
        if not live:
            continue
        if live[0] != c:
            swap(live[0], c)
        if W[i][c] < 0:
            negate(c)
        pivots.append((i, c))
        c += 1
    y = [0] * n
    for i, col in pivots:
        resid = rhs[i] - sum(W[i][j] * y[j] for j in range(col))
        if resid % W[i][col]:
            return None
        y[col] = resid // W[i][col]
    for i in range(len(W)):
        if sum(W[i][j] * y[j] for j in range(n)) != rhs[i]:
            return None
    sol = tuple(sum(U[r][j] * y[j] for j in range(n)) for r in range(n))
    shifts = tuple(tuple(U[r][j] for r in range(n)) for j in range(c, n))
    return sol, shifts


def _w_exponent(unit):
    ((powers, coeff),) = unit.terms.items()
    return powers[unit.vars.index("w")]


def ac_obstruction_braid(beta, d=SuperDim(1, 1)):
    """Obstruct almost-classicality of a braid word by matrix comparison.

    Computes the lifted and plain functor matrices and checks whether
    the lifted one is a potential conjugate of the plain one for some
    integer vector (k_1..k_N): supports must agree, each entry ratio
    must be a pure power of w, and the resulting exponent equations must
    have an integer solution.
    """
    lifted = gen_rep(beta, d, QW, lift=True)
    plain = gen_rep(beta, d, QW, lift=False)
    n = beta.strands

    def verdict(obstructed, reason, solution=None, shifts=None):
        return ACVerdict(obstructed, reason, solution, shifts, lifted, plain)

    rows = []
    for key in sorted(set(lifted.entries) | set(plain.entries)):
        a = lifted.entry(*key)
        b = plain.entry(*key)
        if a.is_zero() or b.is_zero():
            return verdict(True, "support mismatch at %r" % (key,))
        unit = equal_up_to_unit(a, b, unit_vars=("w",), allow_sign=False)
        if unit is None:
            return verdict(True, "entry ratio at %r is not a power of w"
                           % (key,))
        row, col = key
        coeffs = [d.grading(r) - d.grading(c) for r, c in zip(row, col)]
        rows.append((coeffs, _w_exponent(unit)))
    solved = _lattice_solve(n, rows)
    if solved is None:
        return verdict(True, "exponent equations have no integer solution")
    solution, shifts = solved
    return verdict(False, None, solution, shifts)
