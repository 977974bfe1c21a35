"""Graded index bookkeeping: dimensions, sign sequences, basis words.

A super vector space of dimension m|n has basis letters 1..m+n; letters
1..m are even (grading 0) and m+1..m+n are odd (grading 1).  Tangle
boundaries are sign sequences over {up, down}; a position may additionally
carry the omega tag, marking a 1-dimensional strand that contributes no
tensor factor to the state space.
"""

from itertools import product

UP = "u"
DOWN = "d"
OMEGA_UP = "U"
OMEGA_DOWN = "D"

_VALID = (UP, DOWN, OMEGA_UP, OMEGA_DOWN)


class SuperDim:
    """Dimension m|n of the base super vector space."""

    __slots__ = ("m", "n")

    def __init__(self, m, n):
        if m < 0 or n < 0 or m + n < 1:
            raise ValueError("need m, n >= 0 and m + n >= 1")
        self.m = m
        self.n = n

    @property
    def dim(self):
        return self.m + self.n

    def grading(self, letter):
        """0 for even letters 1..m, 1 for odd letters m+1..m+n."""
        if not 1 <= letter <= self.dim:
            raise ValueError("letter %d out of range 1..%d" % (letter, self.dim))
        return 0 if letter <= self.m else 1

    def is_odd(self, letter):
        return self.grading(letter) == 1

    def __eq__(self, other):
        return isinstance(other, SuperDim) and (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return "SuperDim(%d, %d)" % (self.m, self.n)

    def __str__(self):
        return "%d|%d" % (self.m, self.n)


class SignSeq:
    """A finite sequence of strand endpoints, each up/down, optionally omega-tagged.

    Written as a string over u, d (plain) and U, D (omega-tagged), e.g.
    SignSeq("udU").  Omega positions are 1-dimensional: they are skipped
    when enumerating tensor basis words.
    """

    __slots__ = ("entries",)

    def __init__(self, entries=""):
        if isinstance(entries, SignSeq):
            entries = entries.entries
        entries = tuple(entries)
        for e in entries:
            if e not in _VALID:
                raise ValueError("bad sign %r (expected one of %s)" % (e, "".join(_VALID)))
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        got = self.entries[i]
        return SignSeq(got) if isinstance(i, slice) else got

    def __add__(self, other):
        return SignSeq(self.entries + SignSeq(other).entries)

    def __eq__(self, other):
        return isinstance(other, SignSeq) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "SignSeq(%r)" % ("".join(self.entries),)

    def render(self):
        return "".join(self.entries)

    def is_omega(self, i):
        return self.entries[i] in (OMEGA_UP, OMEGA_DOWN)

    def direction(self, i):
        """'u' or 'd', ignoring the omega tag."""
        return UP if self.entries[i] in (UP, OMEGA_UP) else DOWN

    def alpha_positions(self):
        """Indices of the positions that carry a tensor factor."""
        return tuple(i for i in range(len(self.entries)) if not self.is_omega(i))

    @property
    def alpha_width(self):
        return len(self.alpha_positions())

    def alpha_signs(self):
        """The sub-sequence of non-omega signs."""
        return SignSeq(tuple(self.entries[i] for i in self.alpha_positions()))


def all_up(k):
    return SignSeq(UP * k)


def enumerate_basis(signs, d):
    """All basis words of the tensor space of a sign sequence, flat-index order.

    Each non-omega position contributes letters 1..m+n; omega positions
    contribute nothing.  The leftmost position is the most significant, so
    the list is in ascending flat-index order.
    """
    k = SignSeq(signs).alpha_width
    return [w for w in product(range(1, d.dim + 1), repeat=k)]


def parity(word, d):
    """Total grading of a basis word, in Z_2."""
    return sum(d.grading(x) for x in word) % 2


def word_to_index(word, d):
    """Flat index of a basis word; leftmost letter most significant."""
    i = 0
    for x in word:
        if not 1 <= x <= d.dim:
            raise ValueError("letter %d out of range 1..%d" % (x, d.dim))
        i = i * d.dim + (x - 1)
    return i


def index_to_word(i, k, d):
    """Inverse of word_to_index for words of length k."""
    if not 0 <= i < d.dim ** k:
        raise ValueError("index %d out of range for %d letters" % (i, k))
    out = []
    for _ in range(k):
        i, r = divmod(i, d.dim)
        out.append(r + 1)
    return tuple(reversed(out))


def exterior_word_codec(N, subset):
    """Basis word of (V_{1|1})^{tensor N} encoding a subset of {1..N}.

    Generator u_i of the exterior algebra maps to the odd letter 2 placed
    at position (i mod N) + 1; all other positions carry the even letter 1.
    """
    positions = set()
    for i in subset:
        if not 1 <= i <= N:
            raise ValueError("subset element %d out of range 1..%d" % (i, N))
        p = (i % N) + 1
        if p in positions:
            raise ValueError("subset elements %r collide at position %d" % (subset, p))
        positions.add(p)
    return tuple(2 if p in positions else 1 for p in range(1, N + 1))


def exterior_word_subset(word):
    """Inverse of exterior_word_codec: the subset a 1|1 basis word encodes."""
    N = len(word)
    subset = []
    for p, letter in enumerate(word, start=1):
        if letter == 2:
            # position p = (i mod N) + 1, so i = p - 1, with i = N at p = 1
            subset.append(N if p == 1 else p - 1)
        elif letter != 1:
            raise ValueError("letter %d is not a 1|1 letter" % letter)
    return frozenset(subset)
