"""Solution counts for diagonal forms over F_q.

Three independent routes are provided and cross-checked in the tests:

* an oracle based on additive convolution of power histograms (exact, O(n q^2)),
* closed forms for n <= 4 assembled from the epsilon tables,
* series coefficients of the rational generating functions.
"""

from __future__ import annotations

import itertools
from math import comb, gcd

import numpy as np

from . import genfunc
from .cyclotomy import CyclotomicClasses, QuarticDecomposition, cyclo_dim_enum
from .errors import TooLargeError, WrongResidueClassError, ZeroRHSError, QuarticYError
from .field import Element, Field, GeneratorData, index_of

ORACLE_COST_GUARD = 10**9


class PowerResidueProfile:
    """Histogram of x -> x^e over F_q, indexed by canonical encoding."""

    def __init__(self, fld: Field, e: int):
        if e < 1:
            raise ValueError("exponent must be positive")
        self.field = fld
        self.e = e
        self.d = gcd(e, fld.q - 1)
        counts = [0] * fld.q
        for x in fld.elements():
            counts[(x ** e).encode()] += 1
        self.counts = counts

    def count(self, c: Element) -> int:
        return self.counts[c.encode()]


def power_profile(fld: Field, e: int) -> PowerResidueProfile:
    profile = PowerResidueProfile(fld, e)
    # d-th power residue rule: w(0) = 1, w(c) in {0, d} for c != 0
    assert profile.counts[0] == 1
    assert all(c in (0, profile.d) for i, c in enumerate(profile.counts) if i != 0)
    assert sum(profile.counts) == fld.q
    return profile


def quadratic_character(c: Element, gen: GeneratorData) -> int:
    """eta(c): +1 on squares, -1 on non-squares, 0 at zero."""
    if c.is_zero():
        return 0
    return 1 if index_of(c, gen) % 2 == 0 else -1


def _addition_tables(fld: Field) -> np.ndarray:
    """enc(a + b) for all encoding pairs, as a q x q int array."""
    els = [fld.from_int(i) for i in range(fld.q)]
    return np.array([[(a + b).encode() for b in els] for a in els], dtype=np.intp)


_ADD_TABLE_CACHE: dict[Field, np.ndarray] = {}


def _group_convolve(fld: Field, h1: list[int], h2: list[int]) -> list[int]:
    """Additive convolution over (F_q, +): out[a+b] += h1[a] * h2[b]."""
    table = _ADD_TABLE_CACHE.get(fld)
    if table is None:
        table = _addition_tables(fld)
        _ADD_TABLE_CACHE[fld] = table
    out = [0] * fld.q
    for a, v in enumerate(h1):
        if v:
            row = table[a]
            for b, w in enumerate(h2):
                if w:
                    out[row[b]] += v * w
    return out


def oracle_histogram(fld: Field, coeffs: list[Element], e: int) -> list[int]:
    """For each c (by encoding), the number of zeros of sum a_i x_i^e = c."""
    if len(coeffs) * fld.q**2 > ORACLE_COST_GUARD:
        raise TooLargeError("oracle cost n*q^2 exceeds guard")
    base = power_profile(fld, e).counts
    hist = None
    for a in coeffs:
        if a.is_zero():
            raise ValueError("coefficients must be nonzero")
        scaled = [0] * fld.q
        for code, cnt in enumerate(base):
            if cnt:
                scaled[(a * fld.from_int(code)).encode()] += cnt
        hist = scaled if hist is None else _group_convolve(fld, hist, scaled)
    assert hist is not None, "at least one variable required"
    return hist


def oracle_count(coeffs: list[Element], c: Element, e: int) -> int:
    """Exact zero count of a_1 x_1^e + ... + a_n x_n^e = c by convolution."""
    fld = c.field
    return oracle_histogram(fld, coeffs, e)[c.encode()]


def brute_force_count(coeffs: list[Element], c: Element, e: int) -> int:
    """Literal q^n enumeration; defense-in-depth check on the convolution oracle."""
    fld = c.field
    n = len(coeffs)
    if fld.q**n > ORACLE_COST_GUARD // 10:
        raise TooLargeError("q^n too large for literal enumeration")
    count = 0
    for xs in itertools.product(list(fld.elements()), repeat=n):
        total = fld.zero()
        for a, x in zip(coeffs, xs):
            total = total + a * (x ** e)
        if total == c:
            count += 1
    return count


# epsilon tables: residue-class corrections as coefficient rows over
# (1, q, s, t, sq, tq, st, s^2, t^2), selected by q mod 8 then ind_g(c) mod 4.
_EPS_N2 = {
    1: {0: (0, 0, -6, 0, 0, 0, 0, 0, 0), 1: (0, 0, 2, 8, 0, 0, 0, 0, 0),
        2: (0, 0, 2, 0, 0, 0, 0, 0, 0), 3: (0, 0, 2, -8, 0, 0, 0, 0, 0)},
    5: {0: (0, 0, 2, 0, 0, 0, 0, 0, 0), 1: (0, 0, 2, -8, 0, 0, 0, 0, 0),
        2: (0, 0, -6, 0, 0, 0, 0, 0, 0), 3: (0, 0, 2, 8, 0, 0, 0, 0, 0)},
}
_EPS_N3 = {
    1: {0: (0, 17, 0, 0, 0, 0, 0, 4, 0), 1: (0, -7, 0, 0, 0, 0, -8, 0, 0),
        2: (0, -7, 0, 0, 0, 0, 0, 0, 16), 3: (0, -7, 0, 0, 0, 0, 8, 0, 0)},
    5: {0: (0, -3, 0, 0, 0, 0, 0, -4, 0), 1: (0, 5, 0, 0, 0, 0, 8, 0, 0),
        2: (0, -3, 0, 0, 0, 0, 0, 0, -16), 3: (0, 5, 0, 0, 0, 0, -8, 0, 0)},
}
_EPS_N4 = {
    1: {0: (0, 0, 0, 0, -60, 0, 0, 0, 0), 1: (0, 0, 0, 0, 20, 48, 0, 0, 0),
        2: (0, 0, 0, 0, 20, 0, 0, 0, 0), 3: (0, 0, 0, 0, 20, -48, 0, 0, 0)},
    5: {0: (0, 0, 0, 0, -28, 0, 0, 0, 0), 1: (0, 0, 0, 0, 4, 16, 0, 0, 0),
        2: (0, 0, 0, 0, 20, 0, 0, 0, 0), 3: (0, 0, 0, 0, 4, -16, 0, 0, 0)},
}


def _eps(table, q: int, s: int, t: int, ind4: int) -> int:
    row = table[q % 8][ind4]
    basis = (1, q, s, t, s * q, t * q, s * t, s * s, t * t)
    return sum(a * b for a, b in zip(row, basis))


def count_small(c: Element, n: int, dec: QuarticDecomposition, fld: Field,
                gen: GeneratorData) -> int:
    """Closed-form N_n(c) for 1 <= n <= 4, c != 0, q = 1 mod 4."""
    q, s, t = fld.q, dec.s, dec.t
    if q % 4 != 1:
        raise WrongResidueClassError(f"q = {q} is not 1 mod 4")
    if c.is_zero():
        raise ZeroRHSError("closed forms cover c != 0 only; use count_N for c = 0")
    i = index_of(c, gen) % 4
    if n == 1:
        return 4 if i == 0 else 0
    if n == 2:
        base = -3 if q % 8 == 1 else 1
        return q + base + _eps(_EPS_N2, q, s, t, i)
    if n == 3:
        return q * q + 6 * s + _eps(_EPS_N3, q, s, t, i)
    if n == 4:
        base = -17 * q if q % 8 == 1 else 7 * q
        return q**3 - 4 * s * s + base + _eps(_EPS_N4, q, s, t, i)
    raise ValueError(f"count_small covers n in 1..4, got {n}")


def count_N(c: Element, n: int, fld: Field, gen: GeneratorData,
            dec: QuarticDecomposition | None = None) -> int:
    """N_n(c), dispatched on the residue class of q.

    q = 3 mod 4 uses the quadratic-form closed form (quartics coincide with
    squares); q = 1 mod 4 expands the rational generating function.
    """
    if n < 1:
        raise ValueError("n must be positive")
    q = fld.q
    if q % 4 == 3:
        eta = lambda x: quadratic_character(x, gen)
        minus_one = -fld.one()
        if n % 2 == 0:
            v = q - 1 if c.is_zero() else -1
            return q ** (n - 1) + v * q ** ((n - 2) // 2) * eta(minus_one ** (n // 2))
        return q ** (n - 1) + q ** ((n - 1) // 2) * eta((minus_one ** ((n - 1) // 2)) * c)
    if dec is None:
        dec = _dec_for(fld, gen)
    return genfunc.gf_N(fld, gen, dec, c).series(n)[n - 1]


_DEC_CACHE: dict[tuple[Field, int], QuarticDecomposition] = {}


def _dec_for(fld: Field, gen: GeneratorData) -> QuarticDecomposition:
    from .cyclotomy import quartic_decomposition
    key = (fld, gen.g.encode())
    if key not in _DEC_CACHE:
        _DEC_CACHE[key] = quartic_decomposition(fld, gen)
    return _DEC_CACHE[key]


def count_via_cyclotomy(c: Element, n: int, fld: Field, gen: GeneratorData,
                        classes: CyclotomicClasses | None = None) -> int:
    """N_n(c) from dimension-j cyclotomic numbers, n <= 4, c != 0.

    Zeros with j nonzero coordinates contribute C(n, j) * 4^j * [4-i,...,4-i]_4
    where i = ind_g(c) mod 4.
    """
    if c.is_zero():
        raise ZeroRHSError("cyclotomic route covers c != 0 only")
    if fld.q % 4 != 1:
        raise WrongResidueClassError(f"q = {fld.q} is not 1 mod 4")
    if not 1 <= n <= 4:
        raise ValueError("cyclotomic route covers n in 1..4")
    cls = classes or CyclotomicClasses(fld, gen, 4)
    i = index_of(c, gen) % 4
    inv_index = (4 - i) % 4
    total = 0
    for j in range(1, n + 1):
        total += comb(n, j) * 4**j * cyclo_dim_enum([inv_index] * j, 4, fld, gen, cls)
    return total


def count_M(y: Element, n: int, fld: Field, gen: GeneratorData,
            dec: QuarticDecomposition | None = None) -> int:
    """M_n(y): zeros of x_1^4+...+x_{n-1}^4 + y*x_n^4 = 0, y non-quartic, n >= 2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if genfunc.is_quartic(y, gen):
        raise QuarticYError(f"y = {y!r} is zero or a fourth power")
    q = fld.q
    if q % 4 == 1 and dec is None:
        dec = _dec_for(fld, gen)
    if q % 4 == 1:
        sign = fld.one() if (q - 1) // 4 % 2 == 0 else -fld.one()
        value = (count_N(fld.zero(), n - 1, fld, gen, dec)
                 + (q - 1) * count_N(sign * y, n - 1, fld, gen, dec))
    else:
        value = (count_N(fld.zero(), n - 1, fld, gen)
                 + (q - 1) * count_N(fld.one(), n - 1, fld, gen))
    from_series = genfunc.gf_M(fld, gen, dec, y).series(n - 1)[n - 2]
    assert value == from_series, (
        f"M_{n}({y!r}) mismatch: relation {value} vs series {from_series}")
    return value


def total_mass_check(fld: Field, gen: GeneratorData, n: int) -> bool:
    """sum over c of N_n(c) must equal q^n."""
    total = sum(count_N(fld.from_int(code), n, fld, gen) for code in range(fld.q))
    return total == fld.q**n
