"""Univariate polynomials over Z_p and the chain rings, plus the handful of
polynomial constructions the code machinery needs:

* division / divisibility (unit leading coefficient required over R and S),
* factorization of x^n - lambda over Z_p (squarefree since gcd(p, n) = 1),
* reciprocal polynomials x^m f(1/x),
* exact cofactors (x^n - lambda) / f,
* the substitution f(x) -> f(mu^-1 x) carrying cyclic codes mod x^n - 1 to
  mu-constacyclic codes mod x^n - mu.

Coefficients are stored lowest degree first with trailing zeros stripped;
the zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (GcdViolation, ModulusMismatch, NonUnitLeadingCoefficient, NotADivisor,
                     NotAUnit, TooLarge, ZeroConstantTerm)
from .field import ensure_prime
from .rings import ChainElement

CoeffLike = Union[int, Sequence[int], ChainElement]


@dataclass(frozen=True)
class Poly:
    """Polynomial over Z_p[u]/(u^k), lowest degree first, normalized."""

    p: int
    k: int
    coeffs: tuple[ChainElement, ...]

    def __post_init__(self):
        ensure_prime(self.p)
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        for c in cs:
            if (c.p, c.k) != (self.p, self.k):
                raise ModulusMismatch("coefficient from a different ring")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def make(cls, coeffs: Sequence[CoeffLike], p: int, k: int = 1) -> "Poly":
        return cls(p, k, tuple(ChainElement.make(c, p, k) for c in coeffs))

    @classmethod
    def zero(cls, p: int, k: int = 1) -> "Poly":
        return cls(p, k, ())

    @classmethod
    def one(cls, p: int, k: int = 1) -> "Poly":
        return cls.make([1], p, k)

    @classmethod
    def x_pow(cls, e: int, p: int, k: int = 1) -> "Poly":
        return cls.make([0] * e + [1], p, k)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, j: int) -> ChainElement:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ChainElement.zero(self.p, self.k)

    def int_coeffs(self) -> list[int]:
        """Z_p coefficients as plain ints (k = 1 only)."""
        if self.k != 1:
            raise ModulusMismatch("int_coeffs is for Z_p polynomials")
        return [c.coeffs[0] for c in self.coeffs]

    def _check(self, other: "Poly") -> None:
        if (self.p, self.k) != (other.p, other.k):
            raise ModulusMismatch("polynomials over different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.p, self.k,
                    tuple(self.coefficient(j) + other.coefficient(j) for j in range(n)))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.p, self.k,
                    tuple(self.coefficient(j) - other.coefficient(j) for j in range(n)))

    def __neg__(self) -> "Poly":
        return Poly(self.p, self.k, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.p, self.k)
        if self.k == 1:
            import numpy as np
            conv = np.convolve(np.array(self.int_coeffs(), dtype=np.int64),
                               np.array(other.int_coeffs(), dtype=np.int64)) % self.p
            return Poly.make([int(c) for c in conv], self.p)
        out = [ChainElement.zero(self.p, self.k)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.p, self.k, tuple(out))

    def scale(self, c: CoeffLike) -> "Poly":
        ce = ChainElement.make(c, self.p, self.k)
        return Poly(self.p, self.k, tuple(ce * a for a in self.coeffs))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if not lead.is_unit:
            raise NonUnitLeadingCoefficient("cannot normalize: leading coefficient not a unit")
        return self.scale(lead.inverse())

    def evaluate(self, x: CoeffLike) -> ChainElement:
        xe = ChainElement.make(x, self.p, self.k)
        acc = ChainElement.zero(self.p, self.k)
        for c in reversed(self.coeffs):
            acc = acc * xe + c
        return acc

    def lift(self, k: int) -> "Poly":
        return Poly(self.p, k, tuple(c.lift(k) for c in self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coefficient(j)
            if c.is_zero:
                continue
            cs = str(c)
            if "+" in cs or (self.k > 1 and len([v for v in c.coeffs if v]) > 1):
                cs = f"({cs})"
            if j == 0:
                terms.append(cs)
            else:
                xs = "x" if j == 1 else f"x^{j}"
                terms.append(xs if cs == "1" else f"{cs}{xs}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self}, p={self.p}, k={self.k})"


_TERM_RE = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> Poly:
    """Parse Z_p polynomial text like 'x^3 + 3x^2 + 5x + 4'."""
    cleaned = text.replace(" ", "").replace("-", "+-")
    if not cleaned:
        return Poly.zero(p)
    coeffs: dict[int, int] = {}
    for term in cleaned.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        m = _TERM_RE.match(term)
        if not m or not term:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        digits, xpart, expo = m.groups()
        coef = int(digits) if digits else 1
        deg = 0 if xpart is None else (int(expo) if expo else 1)
        coeffs[deg] = coeffs.get(deg, 0) + sign * coef
    top = max(coeffs) if coeffs else 0
    return Poly.make([coeffs.get(j, 0) for j in range(top + 1)], p)


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """f = q*g + r with deg r < deg g; g must have a unit leading coefficient."""
    f._check(g)
    if g.is_zero:
        raise NonUnitLeadingCoefficient("division by the zero polynomial")
    lead = g.coeffs[-1]
    if not lead.is_unit:
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not a unit")
    inv = lead.inverse()
    rem = list(f.coeffs)
    dq = len(f.coeffs) - len(g.coeffs)
    if dq < 0:
        return Poly.zero(f.p, f.k), f
    quo = [ChainElement.zero(f.p, f.k)] * (dq + 1)
    for d in range(dq, -1, -1):
        c = rem[d + g.degree] * inv
        if c.is_zero:
            continue
        quo[d] = c
        for j, b in enumerate(g.coeffs):
            rem[d + j] = rem[d + j] - c * b
    return Poly(f.p, f.k, tuple(quo)), Poly(f.p, f.k, tuple(rem))


def divides(f: Poly, g: Poly) -> bool:
    """True iff f | g (f needs a unit leading coefficient)."""
    if f.is_zero:
        return g.is_zero
    return poly_divmod(g, f)[1].is_zero


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Z_p (k = 1 only)."""
    if f.k != 1 or g.k != 1:
        raise ModulusMismatch("gcd implemented over Z_p only")
    while g:
        f, g = g, poly_divmod(f, g)[1]
    return f.monic() if f else f


def x_pow_n_minus(lam: CoeffLike, n: int, p: int, k: int = 1) -> Poly:
    """The block modulus x^n - lam over Z_p[u]/(u^k)."""
    lam_e = ChainElement.make(lam, p, k)
    return Poly.x_pow(n, p, k) - Poly(p, k, (lam_e,))


def is_irreducible(f: Poly) -> bool:
    """Trial-division irreducibility over Z_p; desk-scale degrees only."""
    if f.k != 1:
        raise ModulusMismatch("irreducibility test over Z_p only")
    d = f.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    p = f.p
    for e in range(1, d // 2 + 1):
        if p ** e > 2_000_000:
            raise TooLarge(f"irreducibility test beyond desk scale (p^{e})")
        for tail in itertools.product(range(p), repeat=e):
            g = Poly.make(list(tail) + [1], p)
            if poly_divmod(f, g)[1].is_zero:
                return False
    return True


def factor_xn_minus_lambda(p: int, n: int, lam: int) -> list[Poly]:
    """Monic irreducible factors of x^n - lambda over Z_p, sorted canonically.

    Squarefree because gcd(p, n) = 1 is required.  Exhaustive root extraction
    first, then trial division by monic polynomials of increasing degree;
    deterministic, which keeps golden outputs stable.
    """
    ensure_prime(p)
    lam %= p
    if lam == 0:
        raise GcdViolation("lambda must be a unit of Z_p")
    if n <= 0:
        raise GcdViolation("n must be positive")
    if n % p == 0:
        raise GcdViolation(f"gcd(p, n) must be 1, got p={p}, n={n}")
    rem = Poly.make([-lam] + [0] * (n - 1) + [1], p)
    factors: list[Poly] = []
    for a in range(p):
        g = Poly.make([-a, 1], p)
        while not rem.is_zero and rem.degree >= 1:
            q, r = poly_divmod(rem, g)
            if not r.is_zero:
                break
            factors.append(g)
            rem = q
    d = 2
    while rem.degree >= 2 * d:
        if p ** d > 5_000_000:
            raise TooLarge(f"trial-division factor search beyond desk scale (p^{d})")
        found = False
        for tail in itertools.product(range(p), repeat=d):
            g = Poly.make(list(tail) + [1], p)
            q, r = poly_divmod(rem, g)
            if r.is_zero:
                factors.append(g)
                rem = q
                found = True
                break
        if not found:
            d += 1
    if rem.degree >= 1:
        factors.append(rem.monic())
    factors.sort(key=lambda f: (f.degree, tuple(f.int_coeffs())))
    return factors


def reciprocal(g: Poly) -> Poly:
    """x^deg(g) * g(1/x): the coefficient sequence reversed, no normalization."""
    if g.is_zero or g.coeffs[0].is_zero:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    return Poly(g.p, g.k, tuple(reversed(g.coeffs)))


def hat(f: Poly, p: int, n: int, lam: int) -> Poly:
    """The exact cofactor (x^n - lambda) / f."""
    modulus = Poly.make([-lam] + [0] * (n - 1) + [1], p)
    if f.k != 1:
        modulus = modulus.lift(f.k)
    q, r = poly_divmod(modulus, f)
    if not r.is_zero:
        raise NotADivisor(f"{f} does not divide x^{n} - {lam % p}")
    return q


def rho_substitute(f: Poly, mu: CoeffLike, n: int) -> Poly:
    """f(mu^-1 x) reduced mod x^n - mu.

    This is the ring isomorphism carrying ideals of R[x]/(x^n - 1) to ideals
    of R[x]/(x^n - mu): cyclic codes become mu-constacyclic codes.
    """
    mu_e = ChainElement.make(mu, f.p, f.k)
    if not mu_e.is_unit:
        raise NotAUnit(f"{mu_e} is not a unit")
    inv = mu_e.inverse()
    power = ChainElement.one(f.p, f.k)
    scaled = []
    for j, c in enumerate(f.coeffs):
        scaled.append(c * power)
        power = power * inv
    out = [ChainElement.zero(f.p, f.k) for _ in range(min(n, len(scaled)))]
    mu_pow = [ChainElement.one(f.p, f.k)]
    for j, c in enumerate(scaled):
        dq, dr = divmod(j, n)
        while len(mu_pow) <= dq:
            mu_pow.append(mu_pow[-1] * mu_e)
        out[dr] = out[dr] + c * mu_pow[dq]
    return Poly(f.p, f.k, tuple(out))
