"""Exact arithmetic in the finite field F_q with q = p^k.

Elements are plain Python ints in range(q).  For k = 1 an element is its
residue mod p.  For k > 1 the int encodes the coefficient vector of the
element over F_p in base p (little-endian digits), relative to a fixed
monic irreducible modulus of degree k over F_p.  The modulus is chosen
deterministically as the lexicographically least monic irreducible, where
polynomials are ordered by their base-p integer encoding, so two runs (or
two machines) always build the same field.

This integer encoding keeps elements hashable and totally ordered, which
the rest of the package relies on for deterministic output.
"""

from functools import lru_cache


def is_prime(n):
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % d == 0:
            return n == d
    d = 41
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _fp_poly_mulmod(a, b, mod, p):
    """Product of F_p coefficient tuples a, b reduced mod the monic tuple `mod`."""
    k = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(k):
                res[i - k + j] = (res[i - k + j] - c * mod[j]) % p
    while res and res[-1] == 0:
        res.pop()
    return tuple(res)


def _fp_irreducible(coeffs, p):
    """Rabin test for a monic polynomial over F_p given as a coefficient tuple."""
    k = len(coeffs) - 1
    if k == 1:
        return True

    def powmod(base, e):
        r, b = (1,), base
        while e:
            if e & 1:
                r = _fp_poly_mulmod(r, b, coeffs, p)
            b = _fp_poly_mulmod(b, b, coeffs, p)
            e >>= 1
        return r

    x = (0, 1)
    # x^(p^k) == x mod f
    if powmod(x, p ** k) != x:
        return False
    for r in set(_prime_factors(k)):
        h = powmod(x, p ** (k // r))
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        while diff and diff[-1] == 0:
            diff.pop()
        if _fp_gcd_is_nonconstant(tuple(diff), coeffs, p):
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _fp_gcd_is_nonconstant(a, b, p):
    a, b = list(a), list(b)
    while b:
        # a mod b, b monicized on the fly
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            if c:
                off = len(a) - len(b)
                for j in range(len(b)):
                    a[off + j] = (a[off + j] - c * b[j]) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) > 1


class FqField:
    """The finite field with q = p^k elements, with int-encoded elements."""

    __slots__ = ("p", "k", "q", "modulus", "_inv_cache")

    def __init__(self, p, k=1):
        if not is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = None if k == 1 else self._least_irreducible(p, k)
        self._inv_cache = {}

    @staticmethod
    def _least_irreducible(p, k):
        # monic degree-k polynomial with least base-p integer encoding
        for enc in range(p ** k):
            coeffs = []
            e = enc
            for _ in range(k):
                coeffs.append(e % p)
                e //= p
            coeffs.append(1)
            if coeffs[0] != 0 and _fp_irreducible(tuple(coeffs), p):
                return tuple(coeffs)
        raise RuntimeError("no irreducible modulus found")  # pragma: no cover

    # -- encoding helpers -------------------------------------------------
    def _dec(self, a):
        p, k = self.p, self.k
        out = []
        for _ in range(k):
            out.append(a % p)
            a //= p
        return out

    def _enc(self, digits):
        p = self.p
        v = 0
        for d in reversed(digits):
            v = v * p + d
        return v

    # -- ring operations ---------------------------------------------------
    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def char(self):
        return self.p

    @property
    def order(self):
        return self.q

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._dec(a), self._dec(b)
        return self._enc([(x + y) % self.p for x, y in zip(da, db)])

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        da, db = self._dec(a), self._dec(b)
        return self._enc([(x - y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self._enc([(-x) % self.p for x in self._dec(a)])

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        t = _fp_poly_mulmod(tuple(self._dec(a)), tuple(self._dec(b)), self.modulus, self.p)
        return self._enc(list(t) + [0] * (self.k - len(t)))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        r, b = 1, a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.q)
        c = self._inv_cache.get(a)
        if c is None:
            c = self.pow(a, self.q - 2)
            self._inv_cache[a] = c
        return c

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        """Image of the integer n under the ring homomorphism Z -> F_q."""
        return n % self.p

    def from_encoding(self, n):
        """Element with base-p digit encoding n (mod q); from_int for k = 1."""
        if self.k == 1:
            return n % self.p
        return n % self.q

    def elements(self):
        return range(self.q)

    # -- power residues ----------------------------------------------------
    def is_nth_power(self, a, n):
        if a == 0:
            return True
        g = self._pow_gcd(n)
        return self.pow(a, (self.q - 1) // g) == 1

    def _pow_gcd(self, n):
        from math import gcd

        return gcd(n, self.q - 1)

    def nth_root(self, a, n):
        """Some n-th root of a, or None.  Deterministic (least root)."""
        if a == 0:
            return 0
        from math import gcd

        g = gcd(n, self.q - 1)
        if self.pow(a, (self.q - 1) // g) != 1:
            return None
        if g == 1:
            return self.pow(a, pow(n, -1, self.q - 1))
        # small-field search, ascending for determinism
        for x in range(1, self.q):
            if self.pow(x, n) == a:
                return x
        return None  # pragma: no cover

    def is_square(self, a):
        if self.p == 2:
            return True
        return self.is_nth_power(a, 2)

    def sqrt(self, a):
        if self.p == 2:
            # Frobenius x -> x^2 is bijective; inverse is x -> x^(q/2)
            return self.pow(a, self.q // 2)
        return self.nth_root(a, 2)

    def is_cube(self, a):
        return self.is_nth_power(a, 3)

    def cube_root(self, a):
        if self.p == 3:
            return self.pow(a, self.q // 3)
        return self.nth_root(a, 3)

    # -- dunder ------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, FqField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __repr__(self):
        if self.k == 1:
            return "FqField(%d)" % self.p
        return "FqField(%d, %d)" % (self.p, self.k)

    def describe(self):
        return "%d" % self.p if self.k == 1 else "%d^%d" % (self.p, self.k)


@lru_cache(maxsize=None)
def GF(p, k=1):
    """Cached field constructor; GF(7), GF(3, 2), ..."""
    return FqField(p, k)


def parse_field(text):
    """Parse a field descriptor 'p' or 'p^k'."""
    text = text.strip()
    if "^" in text:
        ps, ks = text.split("^", 1)
        return GF(int(ps), int(ks))
    return GF(int(text))
