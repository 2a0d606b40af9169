"""Cyclotomic classes and cyclotomic numbers of order k.

Order-4 numbers come in two flavors: exact enumeration over the classes, and
the classical closed-form A-E table driven by the decomposition q = s^2 + 4t^2.
Dimension-n numbers [i_1, ..., i_n]_k are likewise available by enumeration,
by reduction to ordinary cyclotomic numbers, and (for equal indices, k = 4)
in closed form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt

from .errors import (
    BadOrderError,
    NonIntegralError,
    NotDivisibleError,
    TooLargeError,
    WrongResidueClassError,
    ZeroCoefficientError,
)
from .field import Element, Field, GeneratorData, index_of, prime_subfield_residue

ENUM_COST_GUARD = 10**8


def linear_congruence_count(a: list[int], b: int, r: int) -> int:
    """Solutions mod r of a_1 x_1 + ... + a_n x_n = b: d*r^(n-1) if d | b else 0."""
    if r < 2:
        raise ValueError(f"modulus r = {r} must be >= 2")
    if any(ai == 0 for ai in a):
        raise ZeroCoefficientError("all coefficients must be nonzero")
    d = reduce(gcd, [abs(ai) for ai in a] + [r])
    if b % d != 0:
        return 0
    return d * r ** (len(a) - 1)


def restricted_congruence_count(a: list[int], b: int, k: int, f: int) -> int:
    """Solutions with each x_i in [0, kf/d - 1]: (kf/d)^(n-1), requiring d | b."""
    if any(ai == 0 for ai in a):
        raise ZeroCoefficientError("all coefficients must be nonzero")
    kf = k * f
    d = reduce(gcd, [abs(ai) for ai in a] + [kf])
    if b % d != 0:
        raise NotDivisibleError(f"gcd {d} does not divide {b}")
    return (kf // d) ** (len(a) - 1)


@dataclass(frozen=True)
class QuarticDecomposition:
    """The normalized (s, t) with q = s^2 + 4t^2 and s = 1 mod 4.

    For p = 1 mod 4 the sign of t is pinned by 2t = s*zeta mod p, where zeta
    is the prime-field residue of g^(3(q-1)/4); for p = 3 mod 4 the pair is
    ((-p)^(m/2), 0).  Both s and t therefore depend on the chosen generator
    only through the sign of t.
    """

    s: int
    t: int

    @property
    def f(self) -> int:
        return (self.s * self.s + 4 * self.t * self.t - 1) // 4


def quartic_decomposition(fld: Field, gen: GeneratorData) -> QuarticDecomposition:
    q, p, m = fld.q, fld.p, fld.m
    if q % 4 != 1:
        raise WrongResidueClassError(f"q = {q} is not 1 mod 4")
    if p % 4 == 3:
        # m is even here, else q = 3 mod 4
        s = (-p) ** (m // 2)
        return QuarticDecomposition(s=s, t=0)
    zeta = prime_subfield_residue(gen.g ** (3 * (q - 1) // 4))
    assert (zeta * zeta + 1) % p == 0, "zeta must square to -1 mod p"
    candidates = []
    for s in range(-isqrt(q), isqrt(q) + 1):
        if s % 4 != 1 or s % p == 0:
            continue
        rest = q - s * s
        if rest < 0 or rest % 4 != 0:
            continue
        tt = isqrt(rest // 4)
        if 4 * tt * tt != rest:
            continue
        for t in ({tt, -tt} if tt else {0}):
            if (2 * t - s * zeta) % p == 0:
                candidates.append(QuarticDecomposition(s=s, t=t))
    if len(candidates) != 1:
        raise AssertionError(f"expected unique (s, t) for q = {q}, got {candidates}")
    return candidates[0]


class CyclotomicClasses:
    """The k cyclotomic classes C_i = {g^(i + k*u)} of F_q^* and lookups on them."""

    def __init__(self, fld: Field, gen: GeneratorData, k: int):
        q = fld.q
        if (q - 1) % k != 0:
            raise BadOrderError(f"k = {k} does not divide q - 1 = {q - 1}")
        self.field = fld
        self.gen = gen
        self.k = k
        self.f = (q - 1) // k
        classes: list[list[Element]] = [[] for _ in range(k)]
        acc = fld.one()
        for idx in range(q - 1):
            classes[idx % k].append(acc)
            acc = acc * gen.g
        self.classes = classes
        self.class_of = {x.encode(): i for i, cls in enumerate(classes) for x in cls}


def cyclotomic_number_enum(i: int, j: int, k: int, fld: Field,
                           gen: GeneratorData,
                           classes: CyclotomicClasses | None = None) -> int:
    """(i, j)_k = #{x in C_i : 1 + x in C_j}, by direct enumeration."""
    cls = classes or CyclotomicClasses(fld, gen, k)
    one = fld.one()
    target = j % k
    return sum(1 for x in cls.classes[i % k]
               if not (one + x).is_zero()
               and cls.class_of[(one + x).encode()] == target)


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den != 0:
        raise NonIntegralError(f"{what}: {num} not divisible by {den}")
    return num // den


# Lemma-2.4 style coefficient tables: (i, j) -> (constant, coeff s, coeff t)
# for 16*(i, j)_4 = q + const + cs*s + ct*t.
_QUARTIC_TABLE_F_EVEN = {
    (0, 0): (-11, -6, 0),
    (0, 1): (-3, 2, 8), (1, 0): (-3, 2, 8), (3, 3): (-3, 2, 8),
    (0, 2): (-3, 2, 0), (2, 0): (-3, 2, 0), (2, 2): (-3, 2, 0),
    (0, 3): (-3, 2, -8), (3, 0): (-3, 2, -8), (1, 1): (-3, 2, -8),
    (1, 2): (1, -2, 0), (2, 1): (1, -2, 0), (1, 3): (1, -2, 0),
    (3, 1): (1, -2, 0), (2, 3): (1, -2, 0), (3, 2): (1, -2, 0),
}
_QUARTIC_TABLE_F_ODD = {
    (0, 0): (-7, 2, 0), (2, 0): (-7, 2, 0), (2, 2): (-7, 2, 0),
    (0, 1): (1, 2, -8), (1, 3): (1, 2, -8), (3, 2): (1, 2, -8),
    (0, 2): (1, -6, 0),
    (0, 3): (1, 2, 8), (1, 2): (1, 2, 8), (3, 1): (1, 2, 8),
    (1, 0): (-3, -2, 0), (1, 1): (-3, -2, 0), (2, 1): (-3, -2, 0),
    (2, 3): (-3, -2, 0), (3, 0): (-3, -2, 0), (3, 3): (-3, -2, 0),
}


def cyclotomic_number_quartic(i: int, j: int, dec: QuarticDecomposition,
                              q: int, f_even: bool) -> int:
    """Closed-form (i, j)_4 from the A-E table for the given f parity."""
    if q % 4 != 1:
        raise WrongResidueClassError(f"q = {q} is not 1 mod 4")
    table = _QUARTIC_TABLE_F_EVEN if f_even else _QUARTIC_TABLE_F_ODD
    const, cs, ct = table[(i % 4, j % 4)]
    num = q + const + cs * dec.s + ct * dec.t
    return _exact_div(num, 16, f"(i={i}, j={j})_4")


def cyclo_dim_enum(indices: list[int], k: int, fld: Field, gen: GeneratorData,
                   classes: CyclotomicClasses | None = None) -> int:
    """[i_1, ..., i_n]_k: tuples from C_{i_1} x ... x C_{i_n} summing to 1."""
    cls = classes or CyclotomicClasses(fld, gen, k)
    n = len(indices)
    if cls.f**n > ENUM_COST_GUARD:
        raise TooLargeError(f"f^n = {cls.f}^{n} exceeds the enumeration guard")
    one = fld.one()
    pools = [cls.classes[i % k] for i in indices]
    count = 0
    for combo in itertools.product(*pools):
        total = combo[0]
        for x in combo[1:]:
            total = total + x
        if total == one:
            count += 1
    return count


def cyclo_dim2(i1: int, i2: int, k: int, fld: Field, gen: GeneratorData,
               classes: CyclotomicClasses | None = None) -> int:
    """[i_1, i_2]_k = (i_2 - i_1, -i_1)_k."""
    return cyclotomic_number_enum(i2 - i1, -i1, k, fld, gen, classes)


def cyclo_dim3(i1: int, i2: int, i3: int, k: int, fld: Field,
               gen: GeneratorData,
               classes: CyclotomicClasses | None = None) -> int:
    """Dimension-3 reduction: a boundary term plus a sum of products of pairs."""
    cls = classes or CyclotomicClasses(fld, gen, k)
    f, half = cls.f, (k * cls.f) // 2
    alpha = f if (i1 - i2 - half) % k == 0 and i3 % k == 0 else 0
    total = sum(
        cyclotomic_number_enum(v - i3, -i3, k, fld, gen, cls)
        * cyclotomic_number_enum(i2 - i1, v - i1, k, fld, gen, cls)
        for v in range(k))
    return alpha + total


def cyclo_dim4(i1: int, i2: int, i3: int, i4: int, k: int, fld: Field,
               gen: GeneratorData,
               classes: CyclotomicClasses | None = None) -> int:
    """Dimension-4 reduction: boundary terms plus a double sum of triples."""
    cls = classes or CyclotomicClasses(fld, gen, k)
    f, half = cls.f, (k * cls.f) // 2
    first_pair_neg = (i2 - i1 - half) % k == 0
    second_pair_neg = (i4 - i3 - half) % k == 0
    gamma = 0
    if second_pair_neg:
        gamma += cyclotomic_number_enum(i2 - i1, -i1, k, fld, gen, cls) * f
    if first_pair_neg:
        gamma += cyclotomic_number_enum(i4 - i3, -i3, k, fld, gen, cls) * f
    total = sum(
        cyclotomic_number_enum(v2 - v1, -v1, k, fld, gen, cls)
        * cyclotomic_number_enum(i2 - i1, v1 - i1, k, fld, gen, cls)
        * cyclotomic_number_enum(i4 - i3, v2 - i3, k, fld, gen, cls)
        for v1 in range(k) for v2 in range(k))
    return gamma + total


# Closed forms for the diagonal entries [i, ..., i]_4, keyed by q mod 8 then i.
# Each row lists coefficients of (1, q, q^2, q^3, s, t, sq, tq, st, s^2, t^2)
# in the numerator; the divisor is 16, 64 or 256 by dimension.
_DIAG_COEFFS = {
    (2, 1): {
        0: (-11, 1, 0, 0, -6, 0, 0, 0, 0, 0, 0),
        1: (-3, 1, 0, 0, 2, -8, 0, 0, 0, 0, 0),
        2: (-3, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0),
        3: (-3, 1, 0, 0, 2, 8, 0, 0, 0, 0, 0),
    },
    (2, 5): {
        0: (-7, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0),
        1: (1, 1, 0, 0, 2, 8, 0, 0, 0, 0, 0),
        2: (1, 1, 0, 0, -6, 0, 0, 0, 0, 0, 0),
        3: (1, 1, 0, 0, 2, -8, 0, 0, 0, 0, 0),
    },
    (3, 1): {
        0: (21, 14, 1, 0, 24, 0, 0, 0, 0, 4, 0),
        1: (9, -10, 1, 0, 0, 24, 0, 0, 8, 0, 0),
        2: (9, -6, 1, 0, 0, 0, 0, 0, 0, -4, 0),
        3: (9, -10, 1, 0, 0, -24, 0, 0, -8, 0, 0),
    },
    (3, 5): {
        0: (9, -6, 1, 0, 0, 0, 0, 0, 0, -4, 0),
        1: (-3, 2, 1, 0, 0, -24, 0, 0, -8, 0, 0),
        2: (-3, -6, 1, 0, 24, 0, 0, 0, 0, 0, -16),
        3: (-3, 2, 1, 0, 0, 24, 0, 0, 8, 0, 0),
    },
    (4, 1): {
        0: (-34, -79, -4, 1, -60, 0, -60, 0, 0, -20, 0),
        1: (-18, 13, -4, 1, -12, -48, 20, -48, -32, 0, 16),
        2: (-18, 13, -4, 1, -12, 0, 20, 0, 0, 0, -48),
        3: (-18, 13, -4, 1, -12, 48, 20, 48, 32, 0, 16),
    },
    (4, 5): {
        0: (-10, 25, -4, 1, -12, 0, -28, 0, 0, 12, 0),
        1: (6, -11, -4, 1, -12, 48, 4, -16, 32, 0, 16),
        2: (6, 21, -4, 1, -60, 0, 20, 0, 0, 0, 80),
        3: (6, -11, -4, 1, -12, -48, 4, 16, -32, 0, 16),
    },
}
_DIAG_DIVISORS = {2: 16, 3: 64, 4: 256}


def cyclo_diag_quartic(n: int, i: int, dec: QuarticDecomposition, q: int) -> int:
    """Closed-form [i, ..., i]_4 (n copies) for n in {2, 3, 4}."""
    if q % 4 != 1:
        raise WrongResidueClassError(f"q = {q} is not 1 mod 4")
    if n not in _DIAG_DIVISORS:
        raise ValueError(f"no closed form for dimension {n}")
    coeffs = _DIAG_COEFFS[(n, q % 8)][i % 4]
    s, t = dec.s, dec.t
    basis = (1, q, q * q, q**3, s, t, s * q, t * q, s * t, s * s, t * t)
    num = sum(a * b for a, b in zip(coeffs, basis))
    return _exact_div(num, _DIAG_DIVISORS[n], f"[{i}]*{n} dim-{n}")
