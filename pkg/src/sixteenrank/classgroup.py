"""Class numbers of discriminant -4p by reduced forms and by character sum.

Two independent routes to h(-4p) for primes p = 1 mod 4:

  * class_number_enum counts reduced positive definite forms
    (A, B, C) of discriminant -4p directly, factoring (B^2 + 4p)/4
    by trial division against a cached prime table;
  * class_number_dirichlet evaluates the finite character-sum form of
    the analytic class number formula, h = |sum a * chi(a)| / (4p).

They share nothing but the discriminant convention (always -4p, the
fundamental discriminant for p = 1 mod 4), so agreement is meaningful.
Gauss composition of forms is implemented through ideal multiplication
and a Hermite normal form of the product module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import (
    decompose_two_squares,
    is_prime,
    one_plus_i_is_square,
    primes_up_to,
    represent_x2_32y2,
)
from .errors import Refusal

_ENUM_LIMIT = 2 * 10**9
_DIRICHLET_LIMIT = 10**6


@dataclass(frozen=True)
class QForm:
    """Integral binary quadratic form a x^2 + b xy + c y^2."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_reduced(self) -> bool:
        # positive definite convention: -a < b <= a <= c, b >= 0 if a == c
        return (
            self.a > 0
            and -self.a < self.b <= self.a <= self.c
            and (self.b >= 0 or self.a != self.c)
        )

    def normalized(self) -> "QForm":
        r = (self.a - self.b) // (2 * self.a)
        return QForm(
            self.a,
            self.b + 2 * r * self.a,
            self.a * r * r + self.b * r + self.c,
        )

    def reduced(self) -> "QForm":
        f = self.normalized()
        while f.a > f.c or (f.a == f.c and f.b < 0):
            s = (f.c + f.b) // (2 * f.c)
            f = QForm(f.c, -f.b + 2 * s * f.c, f.c * s * s - f.b * s + f.a)
            f = f.normalized()
        return f

    def inverse(self) -> "QForm":
        return QForm(self.a, -self.b, self.c).reduced()


def principal_form(p: int) -> QForm:
    return QForm(1, 0, p)


def two_torsion_form(p: int) -> QForm:
    """The reduced form (2, 2, (p+1)/2) over the ramified prime above 2."""
    return QForm(2, 2, (p + 1) // 2)


@dataclass(frozen=True)
class ClassData:
    p: int
    h: int
    v2: int


def class_number_enum(p: int) -> ClassData:
    """h(-4p) as the count of reduced forms of discriminant -4p.

    A reduced form has B = 2b with 0 <= 2b <= A <= C and AC = p + b^2;
    each divisor A of p + b^2 in [max(1, 2b), sqrt(p + b^2)] yields one
    form when b = 0, A = 2b or A = C, and a (+-B)-pair otherwise.
    """
    if not is_prime(p) or p % 4 != 1:
        raise Refusal(f"need a prime = 1 mod 4, got {p}")
    if p > _ENUM_LIMIT:
        raise Refusal(f"enumeration budget is p <= {_ENUM_LIMIT}, got {p}")
    bmax = math.isqrt(p // 3)
    table = primes_up_to(math.isqrt(p + bmax * bmax) + 1)
    h = 0
    for b in range(bmax + 1):
        n = p + b * b
        # factor n over the table
        fac = []
        m = n
        for q in table:
            if q * q > m:
                break
            if m % q == 0:
                e = 0
                while m % q == 0:
                    m //= q
                    e += 1
                fac.append((q, e))
        if m > 1:
            fac.append((m, 1))
        lo = 2 * b
        root = math.isqrt(n)
        divs = [1]
        for q, e in fac:
            qe = [q**k for k in range(e + 1)]
            divs = [d * f for d in divs for f in qe]
        for a in divs:
            if a < max(1, lo) or a > root:
                continue
            h += 1 if (b == 0 or a == lo or a * a == n) else 2
    return ClassData(p=p, h=h, v2=_v2(h))


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def class_number_dirichlet(p: int) -> int:
    """h(-4p) from the finite character sum h = |sum_a a*chi(a)| / (4p).

    chi is the quadratic character of conductor 4p; for p = 1 mod 4 it
    factors as chi_4(a) * (a | p), with the Legendre symbol read off a
    quadratic-residue table mod p.
    """
    if not is_prime(p) or p % 4 != 1:
        raise Refusal(f"need a prime = 1 mod 4, got {p}")
    if p > _DIRICHLET_LIMIT:
        raise Refusal(f"character sum budget is p <= {_DIRICHLET_LIMIT}, got {p}")
    d = 4 * p
    residues = np.zeros(p, dtype=bool)
    sq = np.arange(p, dtype=np.int64)
    residues[(sq * sq) % p] = True
    a = np.arange(d, dtype=np.int64)
    legendre = np.where(residues[a % p], 1, -1)
    legendre[a % p == 0] = 0
    chi4 = np.zeros(d, dtype=np.int64)
    chi4[a % 4 == 1] = 1
    chi4[a % 4 == 3] = -1
    total = int(np.sum(a * legendre * chi4))
    assert total % d == 0
    return abs(total) // d


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, u, v) with u*a + v*b = g >= 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def compose(f: QForm, g: QForm) -> QForm:
    """Gauss composition, returned as the reduced representative.

    The forms are mapped to ideals [a, -b/2 + w] of Z[w], w = sqrt(-p),
    the product module is put in Hermite normal form, the content is
    split off, and the primitive ideal is mapped back to a form.
    """
    if f.disc != g.disc:
        raise Refusal(f"discriminants differ: {f.disc} != {g.disc}")
    d = f.disc
    if d >= 0 or d % 4 != 0:
        raise Refusal(f"need a negative discriminant divisible by 4, got {d}")
    if f.a <= 0 or g.a <= 0:
        raise Refusal("forms must be positive definite")
    p = -d // 4
    t1, t2 = -f.b // 2, -g.b // 2
    # generators of the product module, as x + y*w pairs
    gens = [
        (f.a * g.a, 0),
        (f.a * t2, f.a),
        (g.a * t1, g.a),
        (t1 * t2 - p, t1 + t2),
    ]
    # HNF: fold the w-coefficients to their gcd, eliminate, gcd the rest
    tx, cy = 0, 0
    for x, y in gens:
        if y:
            g_, u, v = _xgcd(cy, y)
            tx, cy = u * tx + v * x, g_
    aa = 0
    for x, y in gens:
        aa = math.gcd(aa, x - (y // cy) * tx)
    assert aa > 0 and aa * cy == f.a * g.a
    # an ideal's HNF content divides both basis entries
    assert aa % cy == 0 and tx % cy == 0
    a3 = aa // cy
    t3 = (tx // cy) % a3
    num = t3 * t3 + p
    assert num % a3 == 0
    return QForm(a3, -2 * t3, num // a3).reduced()


@dataclass(frozen=True)
class Div8Chain:
    """The 2 | h, 4 | h, and three-route 8 | h answers for one prime."""

    div2: bool
    div4: bool
    div8_forms: bool
    div8_2adic: bool
    div8_decomp: bool


def divisibility_chain(p: int) -> Div8Chain:
    """Evaluate the 2, 4, 8 divisibility criteria for h(-4p).

    2 | h iff p = 1 mod 4; 4 | h iff p = 1 mod 8; 8 | h three ways:
    p = x^2 + 32 y^2, the (1 + i | p) residue test, and a + b = +-1
    mod 8 on the two-square witness.  The three must agree.
    """
    if not is_prime(p) or p % 4 != 1:
        raise Refusal(f"need a prime = 1 mod 4, got {p}")
    div4 = p % 8 == 1
    w = decompose_two_squares(p)
    return Div8Chain(
        div2=p % 4 == 1,
        div4=div4,
        div8_forms=represent_x2_32y2(p) is not None,
        div8_2adic=div4 and one_plus_i_is_square(p),
        div8_decomp=(w.a + w.b) % 8 in (1, 7),
    )
