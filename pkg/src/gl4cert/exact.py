"""Exact arithmetic: integers, rationals and univariate polynomials over Q.

The rational type is fractions.Fraction, re-exported as ``Rat``.  Everything
here is exact; floating point is banned throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Rat
from typing import Callable, Iterable, Sequence

__all__ = [
    "Rat",
    "UniPoly",
    "T",
    "is_prime",
    "factorint",
    "divisors",
    "signed_divisors",
    "euler_phi",
    "squarefree_part",
    "is_perfect_square",
    "is_rational_square",
    "rational_sqrt",
    "legendre",
    "DetRing",
    "bareiss_det",
    "sylvester_resultant",
    "resultant",
    "resultant_in_z",
    "poly_discriminant",
    "cyclotomic",
    "totient_bounded_orders",
    "power_charpoly",
    "factor_quartic_over_Q",
    "rational_roots",
]


# --------------------------------------------------------------------------
# integer helpers


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd composite, not a prime power issue
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    # small trial division first; rho only for large survivors
    while f * f <= n and f < 100000:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n|, n nonzero."""
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def signed_divisors(n: int) -> list[int]:
    pos = divisors(n)
    return [d for d in pos] + [-d for d in pos]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi needs n >= 1")
    out = 1
    for p, e in factorint(n).items() if n > 1 else []:
        out *= (p - 1) * p ** (e - 1)
    return out


def squarefree_part(n: int) -> int:
    """The unique squarefree m with n/m a positive rational square; sign kept."""
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return sign * out


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_rational_square(x: Rat | int) -> bool:
    """True iff x is the square of a rational (0 counts)."""
    x = Rat(x)
    if x < 0:
        return False
    return is_perfect_square(x.numerator) and is_perfect_square(x.denominator)


def rational_sqrt(x: Rat | int) -> Rat | None:
    """Exact nonnegative square root of a rational square, else None."""
    x = Rat(x)
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Rat(rn, rd)
    return None


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1} for odd prime p."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


# --------------------------------------------------------------------------
# univariate polynomials over Q


class UniPoly:
    """Univariate polynomial over Q; coefficients ascending, trimmed.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat | int] = ()) -> None:
        cs = [Rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers

    @classmethod
    def constant(cls, c: Rat | int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Rat | int = 1) -> "UniPoly":
        return cls((0,) * k + (c,))

    # -- basic structure

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Rat:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def coeff(self, k: int) -> Rat:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Rat(0)

    # -- ring operations

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Rat)):
            return self.scale(other)
        out = [Rat(0)] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Rat)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Rat | int) -> "UniPoly":
        c = Rat(c)
        return UniPoly(tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        out = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), UniPoly(rem)
        quo = [Rat(0)] * (dq + 1)
        inv_lc = 1 / other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            quo[k] = c
            if c != 0:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quo), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("division is not exact")
        return q

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    # -- analysis

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x: Rat | int) -> Rat:
        x = Rat(x)
        out = Rat(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("cannot normalize zero polynomial")
        return self.scale(1 / self.lc)

    def reversed(self, n: int | None = None) -> "UniPoly":
        """T^n * p(1/T); n defaults to deg p."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal order below degree")
        return UniPoly(tuple(self.coeff(n - k) for k in range(n + 1)))

    def shift(self, k: int) -> "UniPoly":
        return UniPoly((Rat(0),) * k + self.coeffs)

    # -- comparisons / output

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "T") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else f"{mag}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


T = UniPoly((0, 1))


# --------------------------------------------------------------------------
# determinants and resultants

# Matrix sizes here never exceed (deg p + deg q) <= 16, so a fraction-free
# Bareiss elimination is ample.  DetRing abstracts the entry domain: Q for
# plain resultants, Q[T] for resultants in an auxiliary variable, and the
# quadratic/finite fields elsewhere in the package.


@dataclass(frozen=True)
class DetRing:
    zero: object
    one: object
    is_zero: Callable
    mul: Callable
    sub: Callable
    exact_div: Callable


RAT_RING = DetRing(
    zero=Rat(0),
    one=Rat(1),
    is_zero=lambda a: a == 0,
    mul=lambda a, b: a * b,
    sub=lambda a, b: a - b,
    exact_div=lambda a, b: a / b,
)

POLY_RING = DetRing(
    zero=UniPoly(),
    one=UniPoly((1,)),
    is_zero=lambda a: a.is_zero,
    mul=lambda a, b: a * b,
    sub=lambda a, b: a - b,
    exact_div=lambda a, b: a.exact_div(b),
)


def bareiss_det(mat: list[list], ring: DetRing):
    """Determinant by fraction-free elimination; consumes its argument."""
    n = len(mat)
    if n == 0:
        return ring.one
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(mat[k][k]):
            for i in range(k + 1, n):
                if not ring.is_zero(mat[i][k]):
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(mat[i][j], mat[k][k]), ring.mul(mat[i][k], mat[k][j]))
                mat[i][j] = ring.exact_div(num, prev)
            mat[i][k] = ring.zero
        prev = mat[k][k]
    det = mat[n - 1][n - 1]
    if sign < 0:
        det = ring.sub(ring.zero, det)
    return det


def sylvester_resultant(p: Sequence, q: Sequence, ring: DetRing):
    """Res(p, q) for coefficient sequences in ascending order over ``ring``.

    Uses the convention Res(p, q) = lc(p)^deg(q) * prod q(alpha) over the
    roots alpha of p.  Inputs must be trimmed (nonzero leading entries).
    """
    m = len(p) - 1
    n = len(q) - 1
    if m < 0 or n < 0:
        raise ValueError("resultant of the zero polynomial")
    if m == 0 and n == 0:
        return ring.one
    size = m + n
    mat = []
    pd = list(reversed(p))
    qd = list(reversed(q))
    for i in range(n):
        mat.append([ring.zero] * i + pd + [ring.zero] * (size - i - m - 1))
    for i in range(m):
        mat.append([ring.zero] * i + qd + [ring.zero] * (size - i - n - 1))
    return bareiss_det(mat, ring)


def resultant(p: UniPoly, q: UniPoly) -> Rat:
    """Sylvester resultant of two polynomials over Q."""
    if p.is_zero and q.is_zero:
        raise ValueError("resultant of two zero polynomials")
    if p.is_zero or q.is_zero:
        return Rat(0)
    return sylvester_resultant(p.coeffs, q.coeffs, RAT_RING)


def resultant_in_z(p: Sequence[UniPoly], q: Sequence[UniPoly]) -> UniPoly:
    """Res_z of two polynomials in z whose coefficients live in Q[T].

    Arguments are z-ascending sequences of UniPoly (the T-coefficients).
    The Sylvester determinant is expanded exactly over Q[T].
    """
    ptrim = list(p)
    while ptrim and ptrim[-1].is_zero:
        ptrim.pop()
    qtrim = list(q)
    while qtrim and qtrim[-1].is_zero:
        qtrim.pop()
    if not ptrim or not qtrim:
        raise ValueError("resultant_in_z needs nonzero inputs in z")
    return sylvester_resultant(ptrim, qtrim, POLY_RING)


def poly_discriminant(p: UniPoly) -> Rat:
    """Discriminant of p over Q, deg p >= 1."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / p.lc


# --------------------------------------------------------------------------
# cyclotomic polynomials and bounded-totient orders


_CYCLO_CACHE: dict[int, UniPoly] = {}


def cyclotomic(t: int) -> UniPoly:
    """The t-th cyclotomic polynomial, via T^t - 1 = prod over divisors."""
    if t < 1:
        raise ValueError("cyclotomic index must be >= 1")
    hit = _CYCLO_CACHE.get(t)
    if hit is not None:
        return hit
    num = UniPoly.monomial(t) - UniPoly((1,))
    den = UniPoly((1,))
    for d in divisors(t):
        if d < t:
            den = den * cyclotomic(d)
    out = num.exact_div(den)
    _CYCLO_CACHE[t] = out
    return out


def totient_bounded_orders(bound: int) -> set[int]:
    """All t >= 2 with phi(t) <= bound; finite since phi(t) >= sqrt(t/2)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return {t for t in range(2, 2 * bound * bound + 1) if euler_phi(t) <= bound}


# --------------------------------------------------------------------------
# root powers and quartic factorization


def power_charpoly(chi: UniPoly, n: int) -> UniPoly:
    """Monic polynomial whose roots are the n-th powers of chi's roots.

    Computed exactly as Res_z(chi(z), T - z^n); integer coefficients are
    preserved for integer chi.
    """
    if not chi.is_monic or not chi.is_integral or chi.degree < 1:
        raise ValueError("power_charpoly needs a monic integral polynomial")
    if n < 1:
        raise ValueError("power must be >= 1")
    p_z = [UniPoly.constant(c) for c in chi.coeffs]
    q_z = [UniPoly() for _ in range(n + 1)]
    q_z[0] = UniPoly((0, 1))
    q_z[n] = UniPoly((-1,))
    out = resultant_in_z(p_z, q_z)
    if not out.is_monic:
        # determinant sign depends on parity bookkeeping; roots fix it
        out = -out
    if out.degree != chi.degree or not out.is_monic or not out.is_integral:
        raise AssertionError("power_charpoly internal inconsistency")
    return out


def rational_roots(p: UniPoly) -> list[Rat]:
    """All rational roots of p (without multiplicity), p nonzero."""
    if p.is_zero:
        raise ValueError("rational_roots of the zero polynomial")
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    shift = 0
    while ints[shift] == 0:
        shift += 1
    roots = {Rat(0)} if shift else set()
    ints = ints[shift:]
    if len(ints) > 1:
        a0, an = ints[0], ints[-1]
        for num in signed_divisors(a0):
            for d in divisors(an):
                r = Rat(num, d)
                if p(r) == 0:
                    roots.add(r)
    return sorted(roots)


def _monic_int_roots(coeffs: Sequence[int]) -> list[int]:
    # integer roots of a monic integer polynomial, ascending coefficients
    out = set()
    work = list(coeffs)
    while work[0] == 0 and len(work) > 1:
        out.add(0)
        work = work[1:]
    if len(work) > 1:
        for r in signed_divisors(work[0]):
            if sum(c * r**i for i, c in enumerate(work)) == 0:
                out.add(r)
    return sorted(out)


def _split_quartic_into_quadratics(coeffs: Sequence[int]) -> tuple[UniPoly, UniPoly] | None:
    # coeffs ascending: (d, c, b, a, 1); assumes no rational roots, d != 0
    d, c, b, a, _ = coeffs
    for v in signed_divisors(d):
        if d % v:
            continue
        vp = d // v
        if v != vp:
            num = c - a * v
            den = vp - v
            if num % den:
                continue
            u = num // den
            up = a - u
        else:
            if c != a * v:
                continue
            disc = a * a - 4 * (b - 2 * v)
            if disc < 0 or not is_perfect_square(disc):
                continue
            s = math.isqrt(disc)
            if (a + s) % 2:
                continue
            u = (a + s) // 2
            up = a - u
        if v + vp + u * up == b:
            return UniPoly((v, u, 1)), UniPoly((vp, up, 1))
    return None


def factor_quartic_over_Q(chi: UniPoly) -> list[tuple[UniPoly, int]]:
    """Complete factorization of a monic integer quartic over Q.

    Returns (irreducible monic factor, multiplicity) pairs, sorted.  Rational
    roots are sieved over divisors of the constant term; the remaining
    quartic is split, if possible, by enumerating integer quadratic factors
    over divisor pairs of the constant term (Gauss's lemma reduces monic
    rational factorizations to integer ones).
    """
    if chi.degree != 4 or not chi.is_monic or not chi.is_integral:
        raise ValueError("factor_quartic_over_Q needs a monic integer quartic")
    factors: list[UniPoly] = []
    rem = chi
    while rem.degree >= 1:
        coeffs = [int(c) for c in rem.coeffs]
        roots = _monic_int_roots(coeffs)
        if not roots:
            break
        r = roots[0]
        factors.append(UniPoly((-r, 1)))
        rem = rem.exact_div(UniPoly((-r, 1)))
    if rem.degree in (1, 2, 3):
        # after the root sieve a quadratic or cubic remainder is irreducible
        factors.append(rem)
        rem = UniPoly((1,))
    elif rem.degree == 4:
        split = _split_quartic_into_quadratics([int(c) for c in rem.coeffs])
        if split is None:
            factors.append(rem)
        else:
            factors.extend(split)
        rem = UniPoly((1,))
    counted: dict[tuple, int] = {}
    for f in factors:
        counted[f.coeffs] = counted.get(f.coeffs, 0) + 1
    out = [(UniPoly(cs), m) for cs, m in counted.items()]
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible_quartic(chi: UniPoly) -> bool:
    fac = factor_quartic_over_Q(chi)
    return len(fac) == 1 and fac[0][1] == 1
