"""Shared fixtures: test fields and cached oracle histograms."""

import pytest

from diagquartic.counting import _group_convolve, oracle_histogram
from diagquartic.cyclotomy import CyclotomicClasses, quartic_decomposition
from diagquartic.field import Field, find_generator

# q = 1 mod 4 and q = 3 mod 4 desk-scale test fields
FIELDS_1MOD4 = [(5, 1), (3, 2), (13, 1), (17, 1), (5, 2),
                (29, 1), (37, 1), (41, 1), (7, 2)]
FIELDS_3MOD4 = [(7, 1), (11, 1), (19, 1), (23, 1), (3, 3)]
ALL_FIELDS = FIELDS_1MOD4 + FIELDS_3MOD4

NMAX = 8


class FieldData:
    """A field with its generator, (s, t), classes and oracle histograms."""

    def __init__(self, p, m):
        self.field = Field(p, m)
        self.gen = find_generator(self.field)
        self.q = self.field.q
        if self.q % 4 == 1:
            self.dec = quartic_decomposition(self.field, self.gen)
            self.classes = CyclotomicClasses(self.field, self.gen, 4)
        else:
            self.dec = None
            self.classes = None
        # histograms[n-1][enc(c)] = N(x_1^4 + ... + x_n^4 = c)
        single = oracle_histogram(self.field, [self.field.one()], 4)
        self.histograms = [single]
        for _ in range(NMAX - 1):
            self.histograms.append(
                _group_convolve(self.field, self.histograms[-1], single))

    def oracle_N(self, code, n):
        return self.histograms[n - 1][code]

    def oracle_M(self, y, n):
        """Zeros of x_1^4 + ... + x_{n-1}^4 + y x_n^4 = 0 from cached prefixes."""
        scaled = [0] * self.q
        single = self.histograms[0]
        for code, cnt in enumerate(single):
            if cnt:
                scaled[(y * self.field.from_int(code)).encode()] += cnt
        return _group_convolve(self.field, self.histograms[n - 2], scaled)[0]


_CACHE: dict[tuple[int, int], FieldData] = {}


def field_data(p, m) -> FieldData:
    if (p, m) not in _CACHE:
        _CACHE[(p, m)] = FieldData(p, m)
    return _CACHE[(p, m)]


@pytest.fixture(params=ALL_FIELDS, ids=lambda pm: f"q={pm[0]**pm[1]}")
def any_field(request):
    return field_data(*request.param)


@pytest.fixture(params=FIELDS_1MOD4, ids=lambda pm: f"q={pm[0]**pm[1]}")
def field_1mod4(request):
    return field_data(*request.param)


@pytest.fixture(params=FIELDS_3MOD4, ids=lambda pm: f"q={pm[0]**pm[1]}")
def field_3mod4(request):
    return field_data(*request.param)
