"""Rational generating functions for the counting sequences.

A generating function is stored as a sum of rational parts, each a pair of
integer coefficient vectors (ascending powers, denominator constant term 1).
Series expansion runs the denominator recurrence over exact integers, so a
coefficient of index n costs O(n) big-int operations regardless of q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomy import QuarticDecomposition
from .errors import BadDenominatorError, QuarticYError
from .field import Element, Field, GeneratorData, index_of

__all__ = [
    "RationalPart", "RationalGF", "gf_N", "gf_M", "series",
    "denominator_recurrence", "recurrence_check",
]


@dataclass(frozen=True)
class RationalPart:
    """num(x)/den(x) with integer coefficients and den[0] = 1."""

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        if not self.den or self.den[0] != 1:
            raise BadDenominatorError(f"denominator {self.den} lacks constant term 1")

    def series(self, count: int) -> list[int]:
        """Coefficients c_1 .. c_count of the power series at 0."""
        coeffs = [0] * (count + 1)
        for n in range(count + 1):
            c = self.num[n] if n < len(self.num) else 0
            for i in range(1, min(n, len(self.den) - 1) + 1):
                c -= self.den[i] * coeffs[n - i]
            coeffs[n] = c
        return coeffs[1:]


@dataclass(frozen=True)
class RationalGF:
    """A sum of rational parts; its series is the elementwise sum of part series."""

    parts: tuple[RationalPart, ...]

    def series(self, count: int) -> list[int]:
        total = [0] * count
        for part in self.parts:
            for i, c in enumerate(part.series(count)):
                total[i] += c
        return total


def _geometric(q: int, scale: int = 1) -> RationalPart:
    # scale * x / (1 - qx)
    return RationalPart(num=(0, scale), den=(1, -q))


def _denominator(q: int, s: int) -> tuple[int, ...]:
    if q % 8 == 1:
        return (1, 0, -6 * q, 8 * q * s, q * q - 4 * q * s * s)
    return (1, 0, 2 * q, 8 * q * s, 9 * q * q - 4 * q * s * s)


def _correction_poly(q: int, s: int, t: int, ind_mod4: int) -> tuple[int, int, int]:
    """The degree <= 3 residue-class polynomial (coefficients of x, x^2, x^3)."""
    if q % 8 == 1:
        table = {
            0: (3, -6 * s - 3, -q + 4 * s * s),
            1: (-1, 2 * s + 8 * t - 3, -q - 8 * s * t),
            2: (-1, 2 * s - 3, -q + 16 * t * t),
            3: (-1, 2 * s - 8 * t - 3, -q + 8 * s * t),
        }
    else:
        table = {
            0: (3, 2 * s + 1, 3 * q - 4 * s * s),
            1: (-1, 2 * s - 8 * t + 1, 3 * q + 8 * s * t),
            2: (-1, -6 * s + 1, -5 * q - 16 * t * t),
            3: (-1, 2 * s + 8 * t + 1, 3 * q - 8 * s * t),
        }
    return table[ind_mod4]


def correction_table(q: int, s: int, t: int) -> dict[int, tuple[int, int, int]]:
    """All four residue-class polynomials, for printing and audit."""
    return {i: _correction_poly(q, s, t, i) for i in range(4)}


def is_square(c: Element, gen: GeneratorData) -> bool:
    return c.is_zero() or index_of(c, gen) % 2 == 0


def gf_N(fld: Field, gen: GeneratorData, dec: QuarticDecomposition | None,
         c: Element) -> RationalGF:
    """Generating function of n -> N_n(c), the zero count of x_1^4+...+x_n^4 = c."""
    q = fld.q
    if q % 4 == 3:
        if c.is_zero():
            corr = RationalPart(num=(0, 0, 1 - q), den=(1, 0, q))
        elif is_square(c, gen):
            corr = RationalPart(num=(0, 1, 1), den=(1, 0, q))
        else:
            corr = RationalPart(num=(0, -1, 1), den=(1, 0, q))
        return RationalGF(parts=(_geometric(q), corr))

    assert dec is not None, "q = 1 mod 4 requires the (s, t) decomposition"
    s, t = dec.s, dec.t
    den = _denominator(q, s)
    if c.is_zero():
        if q % 8 == 1:
            num = (0, 0, 3 * (q - 1), -6 * s * (q - 1), -(q - 4 * s * s) * (q - 1))
        else:
            num = (0, 0, -(q - 1), -6 * s * (q - 1), -(9 * q - 4 * s * s) * (q - 1))
        return RationalGF(parts=(_geometric(q), RationalPart(num=num, den=den)))

    b1, b2, b3 = _correction_poly(q, s, t, index_of(c, gen) % 4)
    lead = (q - 4 * s * s) if q % 8 == 1 else (9 * q - 4 * s * s)
    num = (0, b1, b2, 6 * s + b3, lead)
    return RationalGF(parts=(_geometric(q), RationalPart(num=num, den=den)))


def is_quartic(y: Element, gen: GeneratorData) -> bool:
    """Fourth-power test; for q = 3 mod 4 quartics coincide with squares."""
    if y.is_zero():
        return True
    d = 4 if y.field.q % 4 == 1 else 2
    return index_of(y, gen) % d == 0


def gf_M(fld: Field, gen: GeneratorData, dec: QuarticDecomposition | None,
         y: Element) -> RationalGF:
    """Generating function of n -> M_{n+1}(y), zeros of x_1^4+...+x_n^4+y*x_{n+1}^4 = 0."""
    q = fld.q
    if is_quartic(y, gen):
        raise QuarticYError(f"y = {y!r} is zero or a fourth power")
    if q % 4 == 3:
        return RationalGF(parts=(_geometric(q, scale=q),
                                 RationalPart(num=(0, q - 1), den=(1, 0, q))))

    assert dec is not None
    s, t = dec.s, dec.t
    den = _denominator(q, s)
    if q % 8 == 1:
        b1, b2, b3 = _correction_poly(q, s, t, index_of(y, gen) % 4)
        num = (0, (q - 1) * b1, (q - 1) * (3 + b2), (q - 1) * b3)
    else:
        # -1 = g^((q-1)/2) has index 2 mod 4 when q = 5 mod 8
        b1, b2, b3 = _correction_poly(q, s, t, (index_of(y, gen) + 2) % 4)
        num = (0, (q - 1) * b1, (q - 1) * (-1 + b2), (q - 1) * b3)
    return RationalGF(parts=(_geometric(q, scale=q), RationalPart(num=num, den=den)))


def series(gf: RationalGF, count: int) -> list[int]:
    """Coefficients c_1 .. c_count of the generating function's series."""
    return gf.series(count)


def denominator_recurrence(q: int, s: int) -> tuple[int, int, int, int]:
    """Recurrence coefficients (d_1..d_4) with D(n) = -sum d_i * D(n-i)."""
    den = _denominator(q, s)
    return (den[1], den[2], den[3], den[4])


def recurrence_check(fld: Field, gen: GeneratorData, dec: QuarticDecomposition,
                     c: Element, nmax: int, counts: list[int] | None = None
                     ) -> list[int]:
    """Residuals of the order-4 recurrence on D(n) = N_n(c) - q^(n-1), n = 5..nmax.

    `counts` may supply precomputed N_1..N_nmax (e.g. from the oracle);
    otherwise the series expansion provides them.  All residuals must be zero.
    """
    if c.is_zero():
        raise ValueError("recurrence check is stated for c != 0")
    if nmax < 5:
        raise ValueError("nmax must be at least 5")
    q = fld.q
    if counts is None:
        counts = gf_N(fld, gen, dec, c).series(nmax)
    dvals = [counts[n - 1] - q ** (n - 1) for n in range(1, nmax + 1)]
    d1, d2, d3, d4 = denominator_recurrence(q, dec.s)
    residuals = []
    for n in range(5, nmax + 1):
        i = n - 1
        residuals.append(dvals[i] + d1 * dvals[i - 1] + d2 * dvals[i - 2]
                         + d3 * dvals[i - 3] + d4 * dvals[i - 4])
    return residuals
