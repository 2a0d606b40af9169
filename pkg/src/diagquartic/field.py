"""Arithmetic in F_{p^m} with a deterministic modulus and generator.

Elements are coefficient vectors over Z/p in the basis 1, x, ..., x^{m-1}.
Every element has a canonical integer encoding sum(c_i * p^i), a bijection
onto [0, q-1], used in all I/O.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import reduce

from .errors import (
    FieldMismatchError,
    FieldTooLargeError,
    NotInPrimeSubfieldError,
    NotPrimeError,
    ZeroHasNoIndexError,
)

DEFAULT_FIELD_BOUND = 2**20
INDEX_TABLE_THRESHOLD = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for n below the field bound."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


# ---------------------------------------------------------------------------
# Polynomial helpers over Z/p.  Coefficient lists, constant term first,
# trailing zeros trimmed.
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], modulus: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(modulus) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mc in enumerate(modulus):
                a[shift + i] = (a[shift + i] - lead * mc) % p
        _trim(a)
        if not a:
            break
    return a


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, modulus, p)


def _poly_powmod(a: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), modulus, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        monic_b = [(c * inv) % p for c in b]
        a, b = b, _poly_mod(a, monic_b, p)
    return a


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Test a monic degree-m polynomial over Z/p for irreducibility.

    Uses the standard criterion: x^(p^m) = x mod f, and for every prime l | m
    the polynomial x^(p^(m/l)) - x is coprime to f.
    """
    m = len(modulus) - 1
    if m < 1 or modulus[-1] != 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xq = _poly_powmod(x, p**m, modulus, p)
    if _poly_sub(xq, x, p):
        return False
    for ell in factorize(m):
        xsub = _poly_powmod(x, p ** (m // ell), modulus, p)
        d = _poly_sub(xsub, x, p)
        if len(_poly_gcd(list(modulus), d, p)) - 1 != 0:
            return False
    return True


def minimal_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The monic irreducible of degree m over Z/p with smallest encoding.

    The lower coefficients (c_0, ..., c_{m-1}) are scanned in order of the
    integer sum(c_i * p^i), so the result is deterministic.
    """
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        coeffs = []
        v = code
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        candidate = coeffs + [1]
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError(f"no irreducible of degree {m} over F_{p}")


class Field:
    """F_{p^m} with an explicit monic modulus polynomial."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None = None,
                 bound: int = DEFAULT_FIELD_BOUND):
        if not is_prime(p) or p == 2:
            raise NotPrimeError(f"p = {p} is not an odd prime")
        if m < 1:
            raise ValueError(f"m = {m} must be positive")
        q = p**m
        if q > bound:
            raise FieldTooLargeError(f"q = {q} exceeds bound {bound}")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = minimal_irreducible(p, m)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    # -- element construction -------------------------------------------------

    def element(self, coeffs) -> Element:
        c = [x % self.p for x in coeffs]
        c += [0] * (self.m - len(c))
        if len(c) != self.m:
            raise ValueError("too many coefficients")
        return Element(self, tuple(c))

    def from_int(self, code: int) -> Element:
        """Decode the canonical integer encoding sum(c_i * p^i)."""
        if not 0 <= code < self.q:
            raise ValueError(f"encoding {code} out of range [0, {self.q})")
        coeffs = []
        for _ in range(self.m):
            coeffs.append(code % self.p)
            code //= self.p
        return Element(self, tuple(coeffs))

    def zero(self) -> Element:
        return Element(self, (0,) * self.m)

    def one(self) -> Element:
        return Element(self, (1,) + (0,) * (self.m - 1))

    def scalar(self, c: int) -> Element:
        return Element(self, (c % self.p,) + (0,) * (self.m - 1))

    def elements(self):
        """All q elements, in encoding order."""
        return (self.from_int(i) for i in range(self.q))


@dataclass(frozen=True)
class Element:
    """An element of F_{p^m} as a residue vector in the power basis."""

    field: Field
    coeffs: tuple[int, ...]

    def encode(self) -> int:
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.field.p + c
        return code

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: Element) -> None:
        if self.field != other.field:
            raise FieldMismatchError("operands from different fields")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        p = self.field.p
        return Element(self.field, tuple((a + b) % p
                                         for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        p = self.field.p
        return Element(self.field, tuple((a - b) % p
                                         for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Element:
        p = self.field.p
        return Element(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: Element) -> Element:
        self._check(other)
        f = self.field
        prod = _poly_mulmod(list(self.coeffs), list(other.coeffs),
                            list(f.modulus), f.p)
        prod += [0] * (f.m - len(prod))
        return Element(f, tuple(prod))

    def __truediv__(self, other: Element) -> Element:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero field element")
        return self * other.inverse()

    def inverse(self) -> Element:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.q - 2)

    def __pow__(self, e: int) -> Element:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"<{self.encode()} in F_{self.field.q}>"


def element_arith(a: Element, b: Element, kind: str) -> Element:
    """Dispatch helper used by the CLI: kind in {add, sub, mul, div}."""
    ops = {"add": Element.__add__, "sub": Element.__sub__,
           "mul": Element.__mul__, "div": Element.__truediv__}
    return ops[kind](a, b)


@dataclass
class GeneratorData:
    """A generator of F_q^* with its order witness and optional index table."""

    g: Element
    order_factorization: dict[int, int]
    index_table: dict[int, int] | None = dc_field(default=None, repr=False)

    @property
    def field(self) -> Field:
        return self.g.field


def multiplicative_order_is_full(x: Element, factors: dict[int, int]) -> bool:
    if x.is_zero():
        return False
    q1 = x.field.q - 1
    one = x.field.one()
    return all(x ** (q1 // ell) != one for ell in factors)


def find_generator(fld: Field, override: int | None = None) -> GeneratorData:
    """The generator with smallest canonical encoding (or a validated override)."""
    factors = factorize(fld.q - 1)
    if override is not None:
        g = fld.from_int(override)
        if g.is_zero() or not multiplicative_order_is_full(g, factors):
            raise ValueError(f"element {override} does not generate F_{fld.q}^*")
    else:
        g = None
        for code in range(1, fld.q):
            cand = fld.from_int(code)
            if multiplicative_order_is_full(cand, factors):
                g = cand
                break
        assert g is not None, "a generator always exists"
    table = None
    if fld.q <= INDEX_TABLE_THRESHOLD:
        table = {}
        acc = fld.one()
        for i in range(fld.q - 1):
            table[acc.encode()] = i
            acc = acc * g
    return GeneratorData(g=g, order_factorization=factors, index_table=table)


def all_generators(fld: Field):
    """Every generator of F_q^*, in encoding order."""
    factors = factorize(fld.q - 1)
    for code in range(1, fld.q):
        cand = fld.from_int(code)
        if multiplicative_order_is_full(cand, factors):
            yield cand


def index_of(x: Element, gen: GeneratorData) -> int:
    """Discrete log base g, in [0, q-2].  Table lookup or baby-step/giant-step."""
    if x.is_zero():
        raise ZeroHasNoIndexError("ind_g(0) is undefined")
    if gen.index_table is not None:
        return gen.index_table[x.encode()]
    fld = x.field
    n = fld.q - 1
    mstep = math.isqrt(n - 1) + 1
    baby: dict[int, int] = {}
    acc = fld.one()
    for j in range(mstep):
        baby.setdefault(acc.encode(), j)
        acc = acc * gen.g
    giant_step = gen.g.inverse() ** mstep
    gamma = x
    for i in range(mstep + 1):
        j = baby.get(gamma.encode())
        if j is not None:
            return (i * mstep + j) % n
        gamma = gamma * giant_step
    raise AssertionError("BSGS failed; generator invalid?")


def trace(x: Element) -> int:
    """Tr(x) = x + x^p + ... + x^(p^(m-1)), returned as a residue mod p."""
    fld = x.field
    total = reduce(lambda a, b: a + b,
                   (x ** (fld.p**i) for i in range(fld.m)))
    return prime_subfield_residue(total)


def prime_subfield_residue(x: Element) -> int:
    """The residue c with x = c*1, or NotInPrimeSubfieldError."""
    if any(c != 0 for c in x.coeffs[1:]):
        raise NotInPrimeSubfieldError(f"{x!r} has nonzero higher coefficients")
    return x.coeffs[0]
