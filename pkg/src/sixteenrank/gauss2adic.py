"""Truncated 2-adic arithmetic in Z_2[i] and the 16 | h criterion.

Z_2[i] is local with uniformizer m = 1 + i; write M for the maximal
ideal (m).  The residue field is F_2, v(2) = 2, and for z = x + iy the
valuation is v(z) = v_2(x^2 + y^2).  Units decompose as i^k * u with
u = 1 mod M^3, and for a unit w:

    w generates an unramified square-root extension  iff  w = +-1 mod M^4,
    w is a square                                    iff  w = +-1 mod M^5.

Squaring maps the principal units 1 + M^k isomorphically onto 1 + M^(k+2)
for k >= 3, which is what makes square roots liftable digit by digit.

Truncation: an element known mod M^K is stored as a coordinate pair mod
2^J with J = ceil(K/2).  Since M^K = 2^(K//2) * (M if K odd else (1)),
membership in M^k for k <= K is decidable from the stored coordinates;
comparing coordinates directly would be wrong at odd K, so equality is
always defined through the valuation of the difference.

The headline predicate: for a prime p = a^2 + c^4 (c even) with witness
normalized so pi = a + c^2 i = 1 mod M^5, the class number h of the
imaginary quadratic field of discriminant -4p satisfies 8 | h, and

    16 | h  iff  c(1 + i) + sqrt(pi) is a square unit in Z_2[i],

where sqrt(pi) is the root that is = 1 mod M^3.  The same verdict is
forced by congruences on (a mod 16, c mod 4) alone; sixteen_rank_case
tabulates them and the two routes are cross-checked in the test suite.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith import PrimeWitness
from .errors import Refusal

# Working precision with two guard digits beyond the M^7 congruences
# the criterion needs.
DEFAULT_PRECISION = 9

_MAX_PRECISION = 64


@dataclass(frozen=True)
class GaussInt:
    """Exact Gaussian integer re + im*i."""

    re: int
    im: int

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im


def _v2(n: int) -> int:
    # 2-adic valuation of a nonzero integer
    return (n & -n).bit_length() - 1


def exact_m_valuation(z: GaussInt) -> int | float:
    """m-adic valuation of an exact Gaussian integer (inf for 0)."""
    n = z.norm()
    return math.inf if n == 0 else _v2(n)


@dataclass(frozen=True)
class Dyadic:
    """An element of Z_2[i] known mod M^precision.

    Coordinates are reduced mod 2^J, J = ceil(precision/2).  Ring
    operations require matching precision; equality is congruence mod
    M^precision, so == can identify coordinate-distinct pairs at odd
    precision and Dyadic is deliberately unhashable.
    """

    x: int
    y: int
    precision: int

    def __post_init__(self):
        if not 1 <= self.precision <= _MAX_PRECISION:
            raise Refusal(f"precision must lie in [1, {_MAX_PRECISION}], got {self.precision}")
        mod = 1 << self.j
        object.__setattr__(self, "x", self.x % mod)
        object.__setattr__(self, "y", self.y % mod)

    @property
    def j(self) -> int:
        return (self.precision + 1) // 2

    @classmethod
    def from_gauss(cls, z: GaussInt, precision: int) -> "Dyadic":
        return cls(z.re, z.im, precision)

    @classmethod
    def one(cls, precision: int) -> "Dyadic":
        return cls(1, 0, precision)

    def _check(self, other: "Dyadic"):
        if self.precision != other.precision:
            raise ValueError("precision mismatch")

    def __add__(self, other: "Dyadic") -> "Dyadic":
        self._check(other)
        return Dyadic(self.x + other.x, self.y + other.y, self.precision)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        self._check(other)
        return Dyadic(self.x - other.x, self.y - other.y, self.precision)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        self._check(other)
        return Dyadic(
            self.x * other.x - self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.precision,
        )

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.x, -self.y, self.precision)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        self._check(other)
        return m_valuation(self - other) >= self.precision


# congruence-based ==, so hashing by coordinates would be incoherent;
# assigned after the decorator since dataclass(frozen=True) regenerates
# __hash__ for any class body that defines __eq__
Dyadic.__hash__ = None


def m_power(k: int, precision: int) -> Dyadic:
    """m^k = (1 + i)^k as a Dyadic at the given precision."""
    if k < 0:
        raise Refusal("m_power needs k >= 0")
    z = GaussInt(1, 0)
    m = GaussInt(1, 1)
    for _ in range(min(k, 2 * precision)):
        z = z * m
    return Dyadic.from_gauss(z, precision)


def m_valuation(z: Dyadic) -> int | float:
    """m-adic valuation of z, or math.inf when z = 0 mod M^precision.

    With t = min(v_2(x), v_2(y)) the valuation is 2t when exactly one
    coordinate has v_2 equal to t, and 2t + 1 when both do (then
    x^2 + y^2 = 2 * odd * 4^t).  Values >= precision are reported as inf
    because the truncation cannot distinguish them.
    """
    if z.x == 0 and z.y == 0:
        return math.inf  # true valuation >= 2J >= precision
    jj = z.j
    vx = _v2(z.x) if z.x else jj
    vy = _v2(z.y) if z.y else jj
    t = min(vx, vy)
    v = 2 * t + (1 if (vx == t and vy == t) else 0)
    return v if v < z.precision else math.inf


def congruent(z1: Dyadic, z2: Dyadic, k: int) -> bool:
    """Whether z1 = z2 mod M^k (k must not exceed the precision)."""
    if k > min(z1.precision, z2.precision):
        raise Refusal(f"congruence mod M^{k} exceeds working precision")
    return m_valuation(z1 - z2) >= k


def is_square_unit(z: Dyadic) -> bool:
    """Whether the unit z is a square in Z_2[i] (test: z = +-1 mod M^5)."""
    if z.precision < 5:
        raise Refusal("square test needs precision >= 5")
    if m_valuation(z) != 0:
        raise Refusal("square test applies to units only")
    one = Dyadic.one(z.precision)
    return congruent(z, one, 5) or congruent(z, -one, 5)


def is_unramified_unit(z: Dyadic) -> bool:
    """Whether sqrt(z) generates an unramified extension (z = +-1 mod M^4)."""
    if z.precision < 4:
        raise Refusal("unramified test needs precision >= 4")
    if m_valuation(z) != 0:
        raise Refusal("unramified test applies to units only")
    one = Dyadic.one(z.precision)
    return congruent(z, one, 4) or congruent(z, -one, 4)


def normalize_pi(w: PrimeWitness) -> GaussInt:
    """The Gaussian prime s*(a + bi) over w with s*(a + b) = 1 mod 8.

    This is the unique sign making pi = 1 mod M^5, and it exists exactly
    when a + b = +-1 mod 8, the congruence equivalent to 8 | h.
    """
    if w.b % 4 != 0:
        raise Refusal(f"p = {w.p} is 5 mod 8; the even part b = {w.b} is not 0 mod 4")
    r = (w.a + w.b) % 8
    if r == 1:
        s = 1
    elif r == 7:
        s = -1
    else:
        raise Refusal(f"a + b = {r} mod 8 for p = {w.p}: 8 does not divide h")
    pi = GaussInt(s * w.a, s * w.b)
    assert exact_m_valuation(pi - GaussInt(1, 0)) >= 5
    return pi


def hensel_sqrt(pi: GaussInt, precision: int) -> Dyadic:
    """The square root of pi that is = 1 mod M^3, to the given precision.

    pi must be = 1 mod M^5 (then it is a square and the two roots are
    +-s with s = 1 mod M^3; -s = -1 mod M^3 is excluded since v(2) = 2).
    The lift is a brute-force digit search: starting from s = 1, which
    already satisfies s^2 = pi mod M^5, each step tries the four residue
    corrections {0, m^(k-2), m^(k-1), m^(k-2) + m^(k-1)} and keeps one
    that pushes s^2 - pi into M^(k+2).  One of the four always works:
    the true root differs from s by an element of valuation >= k - 2.
    """
    if not 3 <= precision <= _MAX_PRECISION:
        raise Refusal(f"precision must lie in [3, {_MAX_PRECISION}], got {precision}")
    if exact_m_valuation(pi - GaussInt(1, 0)) < 5:
        raise Refusal(f"hensel_sqrt needs pi = 1 mod M^5, got {pi}")
    target = Dyadic.from_gauss(pi, precision)
    s = Dyadic.one(precision)
    k = 5
    while k < precision:
        step_goal = min(k + 2, precision)
        e1 = m_power(k - 2, precision)
        e2 = m_power(k - 1, precision)
        for e in (None, e1, e2, e1 + e2):
            cand = s if e is None else s + e
            if m_valuation(cand * cand - target) >= step_goal:
                break
        else:
            raise AssertionError("square-root lift failed, input violates M^5 premise")
        s = cand
        k = step_goal
    assert m_valuation(s * s - target) >= precision
    return s


def omega0(w: PrimeWitness, sqrt_pi: Dyadic) -> Dyadic:
    """c(1 + i) + sqrt(pi), the unit whose squareness decides 16 | h."""
    if w.c is None:
        raise Refusal(f"p = {w.p} is not of the form a^2 + c^4 (b is not a square)")
    c_part = Dyadic.from_gauss(GaussInt(w.c, w.c), sqrt_pi.precision)
    return c_part + sqrt_pi


def sixteen_divides(w: PrimeWitness) -> bool:
    """Whether 16 | h for the field of discriminant -4p, p = a^2 + c^4.

    Requires 8 | h (a + b = +-1 mod 8) and c present; refuses otherwise.
    """
    pi = normalize_pi(w)
    if w.c is None:
        raise Refusal(f"p = {w.p} is not of the form a^2 + c^4 (b is not a square)")
    s = hensel_sqrt(pi, 7)
    return is_square_unit(omega0(w, s))


class RankCase(str, enum.Enum):
    """Verdict of the congruence criterion on (a mod 16, c mod 4)."""

    DIV16 = "DIV16"        # 16 | h
    EXACTLY8 = "EXACTLY8"  # 8 | h, 16 does not divide h
    NOT8 = "NOT8"          # 8 does not divide h


def sixteen_rank_case(a: int, c: int) -> RankCase:
    """Classify a prime p = a^2 + c^4 (a odd, c even) by congruences.

        a = +-1 mod 16, c = 0 mod 4  ->  DIV16
        a = +-3 mod 16, c = 2 mod 4  ->  DIV16
        a = +-7 mod 16, c = 0 mod 4  ->  EXACTLY8
        a = +-5 mod 16, c = 2 mod 4  ->  EXACTLY8

    All other residues have a + c^2 != +-1 mod 8, i.e. 8 does not
    divide h.  Callers are responsible for p = a^2 + c^4 being prime.
    """
    if a % 2 == 0:
        raise Refusal(f"a must be odd, got {a}")
    if c % 2:
        raise Refusal(f"c must be even, got {c}")
    fold = min(a % 16, (-a) % 16)
    if c % 4 == 0:
        if fold == 1:
            return RankCase.DIV16
        if fold == 7:
            return RankCase.EXACTLY8
    else:
        if fold == 3:
            return RankCase.DIV16
        if fold == 5:
            return RankCase.EXACTLY8
    return RankCase.NOT8
