"""Places of the rational function field F_q(x).

A finite place is a monic irreducible polynomial P; the infinite place is
the degree valuation, v(f) = -deg f.  Both expose the same interface:

    val(f)             -- normalized valuation (POS_INF for f = 0)
    degree             -- residue field degree over F_q
    residue_field      -- a field-protocol object k(P)
    residue(f, s)      -- image of f / pi^s in k(P), for any s <= val(f);
                          zero when s < val(f), the unit residue at s = val(f)

residue() is the workhorse of the signature tables: every "A-bar is a
square mod P" test and every "sgn(A) is a square" test is the same call.
"""

from .poly import FqPoly, POS_INF, residue_field


class _BaseAsResidue:
    """F_q itself under the residue-field protocol (for the infinite place)."""

    def __init__(self, field):
        self.F = field
        self.char = field.p
        self.order = field.q
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return self.F.add(a, b)

    def sub(self, a, b):
        return self.F.sub(a, b)

    def neg(self, a):
        return self.F.neg(a)

    def mul(self, a, b):
        return self.F.mul(a, b)

    def inv(self, a):
        return self.F.inv(a)

    def pow_elem(self, a, e):
        return self.F.pow(a, e)

    def from_rand(self, rng):
        return rng.randrange(self.F.q)

    def is_zero(self, a):
        return a == 0

    def is_square(self, a):
        return self.F.is_square(a)

    def is_cube(self, a):
        return self.F.is_cube(a)

    def sqrt(self, a):
        return self.F.sqrt(a)

    def cube_root(self, a):
        return self.F.cube_root(a)

    def from_base(self, c):
        return c

    def embed(self, poly):
        if poly.degree > 0:
            raise ValueError("cannot embed nonconstant polynomial in F_q")
        return poly.constant()

    def lift(self, elem):
        return FqPoly.const(self.F, elem)

    def iter_elements(self):
        return iter(range(self.F.q))


class FinitePlace:
    """Finite place, identified with a monic irreducible P in F_q[x]."""

    __slots__ = ("P", "field", "_rf")

    def __init__(self, P):
        if P.sgn != 1:
            P = P.monic()
        self.P = P
        self.field = P.field
        self._rf = None

    @property
    def degree(self):
        return len(self.P.coeffs) - 1

    @property
    def is_infinite(self):
        return False

    @property
    def residue_field(self):
        if self._rf is None:
            self._rf = residue_field(self.P)
        return self._rf

    def val(self, f):
        if f.is_zero():
            return POS_INF
        v = 0
        while True:
            q, r = f.divmod(self.P)
            if not r.is_zero():
                return v
            v += 1
            f = q

    def residue(self, f, s):
        """Residue of f / P^s; requires s <= val(f)."""
        K = self.residue_field
        for _ in range(s):
            q, r = f.divmod(self.P)
            if not r.is_zero():
                raise ValueError("residue level exceeds valuation")
            f = q
        return K.embed(f)

    def __eq__(self, other):
        return isinstance(other, FinitePlace) and self.P == other.P

    def __hash__(self):
        return hash(("fin", self.P))

    def __repr__(self):
        return "FinitePlace(%s)" % (self.P,)

    def describe(self):
        return str(self.P)


class InfinitePlace:
    """The place at infinity of F_q(x); v(f) = -deg f, uniformizer 1/x."""

    __slots__ = ("field", "_rf")

    def __init__(self, field):
        self.field = field
        self._rf = None

    @property
    def degree(self):
        return 1

    @property
    def is_infinite(self):
        return True

    @property
    def residue_field(self):
        if self._rf is None:
            self._rf = _BaseAsResidue(self.field)
        return self._rf

    def val(self, f):
        if f.is_zero():
            return POS_INF
        return -f.degree

    def residue(self, f, s):
        """Residue of f * x^s at infinity: the coefficient of x^(-s)."""
        if f.is_zero():
            return 0
        if -s < f.degree:
            raise ValueError("residue level exceeds valuation")
        return f.coeff(-s)

    def __eq__(self, other):
        return isinstance(other, InfinitePlace) and self.field == other.field

    def __hash__(self):
        return hash(("inf", self.field))

    def __repr__(self):
        return "InfinitePlace(%s)" % self.field.describe()

    def describe(self):
        return "infinity"
