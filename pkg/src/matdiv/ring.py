"""Exact arithmetic over the two concrete PIDs: Z and F_p[x].

Integers are plain Python ints. Polynomials are :class:`Poly` values with
operator overloads, so generic code can write ``a * b - c * d`` for either
domain. Everything that depends on the domain (canonical associates, the
Euclidean norm, factorization) lives on a :class:`Ring` object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    DomainMismatchError,
    FactorizationLimitError,
    NotDivisibleError,
    PreconditionError,
)

INT_PRIME_BOUND = 10**9
SMALL_TRIAL = 10**4
POLY_SEARCH_BUDGET = 2_000_000


class Poly:
    """Polynomial over F_p with ascending coefficients and no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, p: int) -> Poly:
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise DomainMismatchError(f"F_{self.p}[x] vs F_{other.p}[x]")
            return other
        if isinstance(other, int):
            return Poly(self.p, (other,))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return Poly(self.p, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        acc, base = Poly(self.p, (1,)), self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __divmod__(self, other):
        d = self._lift(other)
        if d is NotImplemented:
            return d
        if not d.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        dd = d.degree
        inv = pow(d.lc, -1, p)
        q = [0] * max(len(r) - dd, 0)
        for k in range(len(r) - 1, dd - 1, -1):
            c = r[k] % p
            if c:
                f = c * inv % p
                q[k - dd] = f
                for j, y in enumerate(d.coeffs):
                    r[k - dd + j] -= f * y
        return Poly(p, q), Poly(p, r[:dd] if dd > 0 else ())

    def __rdivmod__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return divmod(o, self)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly(self.p, (other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __repr__(self):
        return f"Poly({self.p}, {self.coeffs})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases (deterministic below 3.3e24)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(prime ** exp)``, primes canonical and sorted."""

    unit: object
    factors: tuple

    def expand(self):
        acc = self.unit
        for q, e in self.factors:
            acc = acc * q**e
        return acc

    @property
    def primes(self) -> tuple:
        return tuple(q for q, _ in self.factors)

    def exponent(self, q) -> int:
        for r, e in self.factors:
            if r == q:
                return e
        return 0


@dataclass(frozen=True)
class Spectrum:
    """Distinct canonical primes of an element.

    The unit 1 is an implicit member of every spectrum, so the empty
    spectrum is a subset of everything and ``1 in s`` is always true.
    """

    primes: tuple
    ring: "Ring"

    def __contains__(self, q) -> bool:
        if self.ring.is_unit(q):
            return True
        return self.ring.canonical(q)[1] in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def issubset(self, other: Spectrum) -> bool:
        return all(q in other.primes for q in self.primes)

    def difference(self, other: Spectrum) -> Spectrum:
        return Spectrum(tuple(q for q in self.primes if q not in other.primes), self.ring)

    def product(self):
        acc = self.ring.one
        for q in self.primes:
            acc = acc * q
        return acc


@dataclass(frozen=True)
class AdequateElementSplit:
    s: object
    t: object


class Ring:
    """Euclidean-domain algorithms shared by both concrete domains."""

    zero: object
    one: object

    # -- domain hooks -----------------------------------------------------
    def coerce(self, x):
        raise NotImplementedError

    def canonical(self, a) -> tuple:
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def unit_inverse(self, u):
        raise NotImplementedError

    def norm(self, a) -> int:
        raise NotImplementedError

    def sort_key(self, a):
        raise NotImplementedError

    def reduce(self, a, m):
        """Distinguished representative of ``a`` modulo ``m``."""
        raise NotImplementedError

    def factor(self, a) -> Factorization:
        raise NotImplementedError

    # -- generic algorithms -----------------------------------------------
    def contains(self, x) -> bool:
        try:
            self.coerce(x)
        except (TypeError, DomainMismatchError):
            return False
        return True

    def divides(self, b, a) -> bool:
        """True iff ``b | a``."""
        if not b:
            return not a
        return not (a % b)

    def exact_div(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        if not b:
            raise ZeroDivisionError("exact division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{b} does not divide {a}")
        return q

    def gcd(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        if not a and not b:
            raise PreconditionError("gcd(0, 0) is undefined")
        while b:
            a, b = b, a % b
        return self.canonical(a)[1]

    def gcd_all(self, *xs):
        xs = [self.coerce(x) for x in xs]
        nz = [x for x in xs if x]
        if not nz:
            raise PreconditionError("gcd of all-zero arguments is undefined")
        g = self.canonical(nz[0])[1]
        for x in nz[1:]:
            if self.is_unit(g):
                break
            g = self.gcd(g, x)
        return g

    def egcd(self, a, b):
        """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
        a, b = self.coerce(a), self.coerce(b)
        if not a and not b:
            raise PreconditionError("egcd(0, 0) is undefined")
        if a and self.divides(a, b):
            u, g = self.canonical(a)
            return g, self.unit_inverse(u), self.zero
        if b and self.divides(b, a):
            u, g = self.canonical(b)
            return g, self.zero, self.unit_inverse(u)
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        u, g = self.canonical(r0)
        ui = self.unit_inverse(u)
        return g, s0 * ui, t0 * ui

    def lcm(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        if not a or not b:
            raise PreconditionError("lcm requires nonzero arguments")
        return self.canonical(self.exact_div(a * b, self.gcd(a, b)))[1]

    def inverse_mod(self, a, m):
        g, x, _ = self.egcd(a, m)
        if not self.is_unit(g):
            raise PreconditionError(f"{a} is not invertible modulo {m}")
        return self.reduce(x, m)

    def crt(self, residues: Sequence, moduli: Sequence):
        """Solve ``x = r_i (mod m_i)`` for pairwise coprime moduli."""
        x, m = self.zero, self.one
        for r, mi in zip(residues, moduli):
            # x + m*k = r (mod mi)
            k = (r - x) * self.inverse_mod(m, mi)
            x = x + m * self.reduce(k, mi)
            m = m * mi
        return self.reduce(x, m)

    def spectrum(self, a) -> Spectrum:
        return Spectrum(self.factor(a).primes, self)

    def rp_split(self, b, a) -> AdequateElementSplit:
        """Split ``b = s*t`` with ``gcd(t, a) = 1`` and every prime of ``s`` dividing ``a``."""
        b, a = self.coerce(b), self.coerce(a)
        if not b:
            raise PreconditionError("rp_split requires b != 0")
        t = b
        while True:
            g = self.gcd(t, a)
            if self.is_unit(g):
                break
            t = self.exact_div(t, g)
        return AdequateElementSplit(self.exact_div(b, t), t)

    def is_prime(self, a) -> bool:
        a = self.coerce(a)
        if not a or self.is_unit(a):
            return False
        f = self.factor(a)
        return len(f.factors) == 1 and f.factors[0][1] == 1


class IntegerRing(Ring):
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, Poly):
                raise DomainMismatchError("polynomial used in the integer ring")
            raise TypeError(f"not an integer: {x!r}")
        return x

    def canonical(self, a):
        return (-1, -a) if a < 0 else (1, a)

    def is_unit(self, a):
        return a in (1, -1)

    def unit_inverse(self, u):
        if u not in (1, -1):
            raise PreconditionError(f"{u} is not a unit")
        return u

    def norm(self, a):
        return abs(a)

    def sort_key(self, a):
        return (abs(a), a)

    def reduce(self, a, m):
        # least absolute residue, ties resolved upward
        if not m:
            return a
        m = abs(m)
        r = a % m
        return r - m if 2 * r > m else r

    def is_prime(self, a):
        return is_probable_prime(abs(self.coerce(a)))

    def factor(self, a):
        a = self.coerce(a)
        if not a:
            raise PreconditionError("cannot factor zero")
        unit, n = self.canonical(a)
        return Factorization(unit, tuple(_trial_factor(n)))

    def describe(self):
        return {"kind": "int"}

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


def _rho(n: int) -> int:
    """A nontrivial factor of the odd composite ``n`` (Pollard-Brent)."""
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationLimitError(f"could not split {n}")


def _trial_factor(n: int) -> list:
    """Prime factorization of ``n >= 1``; prime factors above INT_PRIME_BOUND are refused."""
    counts: dict = {}
    for q in (2, 3):
        while n % q == 0:
            n //= q
            counts[q] = counts.get(q, 0) + 1
    d, step = 5, 2
    while d <= SMALL_TRIAL and d * d <= n:
        while n % d == 0:
            n //= d
            counts[d] = counts.get(d, 0) + 1
        d += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_probable_prime(m):
            if m > INT_PRIME_BOUND:
                raise FactorizationLimitError(f"prime factor {m} exceeds {INT_PRIME_BOUND}")
            counts[m] = counts.get(m, 0) + 1
            continue
        g = _rho(m)
        stack += [g, m // g]
    return sorted(counts.items())


ZZ = IntegerRing()


class PolyRing(Ring):
    """F_p[x] for a prime p."""

    def __init__(self, p: int):
        if not is_probable_prime(p):
            raise PreconditionError(f"modulus {p} is not prime")
        self.p = p
        self.zero = Poly(p)
        self.one = Poly(p, (1,))

    def __repr__(self):
        return f"GF({self.p})[x]"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.p == self.p

    def __hash__(self):
        return hash(("GFx", self.p))

    @property
    def x(self) -> Poly:
        return Poly.x(self.p)

    def coerce(self, x):
        if isinstance(x, Poly):
            if x.p != self.p:
                raise DomainMismatchError(f"F_{x.p}[x] element used in F_{self.p}[x]")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Poly(self.p, (x,))
        if isinstance(x, (list, tuple)):
            return Poly(self.p, x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def canonical(self, a):
        a = self.coerce(a)
        if not a:
            return self.one, a
        lc = a.lc
        return Poly(self.p, (lc,)), a * pow(lc, -1, self.p)

    def is_unit(self, a):
        return self.coerce(a).degree == 0

    def unit_inverse(self, u):
        u = self.coerce(u)
        if u.degree != 0:
            raise PreconditionError(f"{u} is not a unit")
        return Poly(self.p, (pow(u.lc, -1, self.p),))

    def norm(self, a):
        return self.coerce(a).degree

    def sort_key(self, a):
        a = self.coerce(a)
        return (a.degree, tuple(reversed(a.coeffs)))

    def reduce(self, a, m):
        a, m = self.coerce(a), self.coerce(m)
        return a % m if m else a

    def monics(self, degree: int):
        """All monic polynomials of ``degree`` in ascending sort_key order."""
        for tail in product(range(self.p), repeat=degree):
            yield Poly(self.p, tuple(reversed(tail)) + (1,))

    def factor(self, a):
        a = self.coerce(a)
        if not a:
            raise PreconditionError("cannot factor zero")
        unit, m = self.canonical(a)
        out = []
        budget = POLY_SEARCH_BUDGET
        d = 1
        while 2 * d <= m.degree:
            if self.p**d > budget:
                raise FactorizationLimitError(
                    f"trial division over degree-{d} monics in F_{self.p}[x] exceeds budget"
                )
            budget -= self.p**d
            for cand in self.monics(d):
                if 2 * d > m.degree:
                    break
                e = 0
                while True:
                    q, r = divmod(m, cand)
                    if r:
                        break
                    m = q
                    e += 1
                if e:
                    out.append((cand, e))
            d += 1
        if m.degree > 0:
            out.append((m, 1))
        out.sort(key=lambda qe: self.sort_key(qe[0]))
        return Factorization(unit, tuple(out))

    def describe(self):
        return {"kind": "polyfp", "p": self.p}


@lru_cache(maxsize=None)
def poly_ring(p: int) -> PolyRing:
    return PolyRing(p)


def ring_of(*xs) -> Ring:
    """Infer the ring from elements: any Poly forces F_p[x], else Z."""
    for x in xs:
        if isinstance(x, Poly):
            return poly_ring(x.p)
    return ZZ


# Module-level conveniences mirroring the Ring methods.

def canonical(a):
    return ring_of(a).canonical(a)


def is_unit(a):
    return ring_of(a).is_unit(a)


def gcd(a, b):
    return ring_of(a, b).gcd(a, b)


def egcd(a, b):
    return ring_of(a, b).egcd(a, b)


def lcm(a, b):
    return ring_of(a, b).lcm(a, b)


def exact_div(a, b):
    return ring_of(a, b).exact_div(a, b)


def factor(a):
    return ring_of(a).factor(a)


def spectrum(a):
    return ring_of(a).spectrum(a)


def rp_split(b, a):
    return ring_of(b, a).rp_split(b, a)
