"""Solution counts: oracle, closed forms, cyclotomic assembly, twisted forms."""

import pytest

from diagquartic import genfunc
from diagquartic.counting import (
    brute_force_count,
    count_M,
    count_N,
    count_small,
    count_via_cyclotomy,
    oracle_count,
    power_profile,
    quadratic_character,
)
from diagquartic.errors import QuarticYError, WrongResidueClassError, ZeroRHSError

from conftest import field_data


class TestPowerProfile:
    def test_q5_quartics(self):
        fd = field_data(5, 1)
        prof = power_profile(fd.field, 4)
        assert prof.counts == [1, 4, 0, 0, 0]

    def test_q13_quartics(self):
        fd = field_data(13, 1)
        prof = power_profile(fd.field, 4)
        quartics = {i for i in range(1, 13) if prof.counts[i] == 4}
        assert quartics == {1, 3, 9}
        assert prof.counts[0] == 1

    def test_q7_degenerates_to_squares(self):
        fd = field_data(7, 1)
        prof = power_profile(fd.field, 4)
        assert prof.d == 2
        assert {i for i in range(1, 7) if prof.counts[i] == 2} == {1, 2, 4}

    def test_total_mass(self, any_field):
        prof = power_profile(any_field.field, 4)
        assert sum(prof.counts) == any_field.q

    def test_quadratic_character(self, any_field):
        fd = any_field
        squares = {(x * x).encode() for x in fd.field.elements() if not x.is_zero()}
        for code in range(1, fd.q):
            expected = 1 if code in squares else -1
            assert quadratic_character(fd.field.from_int(code), fd.gen) == expected
        assert quadratic_character(fd.field.zero(), fd.gen) == 0


class TestOracle:
    def test_q5_pairs(self):
        fd = field_data(5, 1)
        one = fd.field.one()
        assert oracle_count([one, one], fd.field.zero(), 4) == 1
        assert oracle_count([one, fd.field.from_int(2)], fd.field.zero(), 4) == 1

    def test_q5_triple(self):
        fd = field_data(5, 1)
        one = fd.field.one()
        assert oracle_count([one] * 3, one, 4) == 12

    @pytest.mark.parametrize("p, m, n", [(5, 1, 1), (5, 1, 2), (5, 1, 3),
                                         (13, 1, 2), (3, 2, 2), (7, 1, 3),
                                         (7, 2, 2)])
    def test_convolution_matches_literal_enumeration(self, p, m, n):
        fd = field_data(p, m)
        one = fd.field.one()
        coeffs = [one] * n
        for code in (0, 1, fd.q - 1):
            c = fd.field.from_int(code)
            assert oracle_count(coeffs, c, 4) == brute_force_count(coeffs, c, 4)

    def test_general_coefficients(self):
        fd = field_data(13, 1)
        coeffs = [fd.field.from_int(2), fd.field.from_int(5), fd.field.from_int(7)]
        c = fd.field.from_int(3)
        assert oracle_count(coeffs, c, 4) == brute_force_count(coeffs, c, 4)

    def test_quadratic_exponent(self):
        fd = field_data(7, 1)
        one = fd.field.one()
        assert oracle_count([one, one], one, 2) == 8


class TestClosedForms:
    def test_pinned_values(self):
        fd5 = field_data(5, 1)
        one5 = fd5.field.one()
        assert count_small(one5, 3, fd5.dec, fd5.field, fd5.gen) == 12
        assert count_small(one5, 4, fd5.dec, fd5.field, fd5.gen) == 16
        fd13 = field_data(13, 1)
        assert count_small(fd13.field.one(), 2, fd13.dec, fd13.field, fd13.gen) == 8

    def test_matches_oracle_everywhere(self, field_1mod4):
        fd = field_1mod4
        for code in range(1, fd.q):
            c = fd.field.from_int(code)
            for n in range(1, 5):
                assert (count_small(c, n, fd.dec, fd.field, fd.gen)
                        == fd.oracle_N(code, n)), (fd.q, code, n)

    def test_zero_rhs_rejected(self):
        fd = field_data(5, 1)
        with pytest.raises(ZeroRHSError):
            count_small(fd.field.zero(), 2, fd.dec, fd.field, fd.gen)

    def test_wrong_residue_class(self):
        fd = field_data(7, 1)
        from diagquartic.cyclotomy import QuarticDecomposition
        with pytest.raises(WrongResidueClassError):
            count_small(fd.field.one(), 2, QuarticDecomposition(1, 1),
                        fd.field, fd.gen)


class TestCountN:
    def test_oracle_equivalence(self, any_field):
        fd = any_field
        for code in range(fd.q):
            c = fd.field.from_int(code)
            for n in range(1, 9):
                assert count_N(c, n, fd.field, fd.gen, fd.dec) == fd.oracle_N(code, n)

    def test_pinned(self):
        fd5 = field_data(5, 1)
        assert count_N(fd5.field.zero(), 5, fd5.field, fd5.gen, fd5.dec) == 1025
        assert count_N(fd5.field.zero(), 2, fd5.field, fd5.gen, fd5.dec) == 1
        fd7 = field_data(7, 1)
        assert count_N(fd7.field.one(), 2, fd7.field, fd7.gen) == 8

    def test_class_invariance(self, field_1mod4):
        fd = field_1mod4
        from diagquartic.field import index_of
        for code in range(1, fd.q):
            c = fd.field.from_int(code)
            rep = fd.gen.g ** (index_of(c, fd.gen) % 4)
            for n in range(1, 6):
                assert (count_N(c, n, fd.field, fd.gen, fd.dec)
                        == count_N(rep, n, fd.field, fd.gen, fd.dec))

    def test_total_mass(self, any_field):
        fd = any_field
        for n in (1, 3, 5):
            total = sum(count_N(fd.field.from_int(code), n, fd.field, fd.gen, fd.dec)
                        for code in range(fd.q))
            assert total == fd.q**n


class TestCyclotomicRoute:
    def test_pinned(self):
        fd = field_data(13, 1)
        one = fd.field.one()
        assert count_via_cyclotomy(one, 1, fd.field, fd.gen, fd.classes) == 4
        assert count_via_cyclotomy(one, 2, fd.field, fd.gen, fd.classes) == 8
        fd5 = field_data(5, 1)
        assert count_via_cyclotomy(fd5.field.one(), 4, fd5.field, fd5.gen,
                                   fd5.classes) == 16

    def test_matches_oracle(self, field_1mod4):
        fd = field_1mod4
        for code in range(1, fd.q):
            c = fd.field.from_int(code)
            for n in range(1, 5):
                assert (count_via_cyclotomy(c, n, fd.field, fd.gen, fd.classes)
                        == fd.oracle_N(code, n))

    def test_zero_rejected(self):
        fd = field_data(5, 1)
        with pytest.raises(ZeroRHSError):
            count_via_cyclotomy(fd.field.zero(), 2, fd.field, fd.gen, fd.classes)


class TestCountM:
    def test_pinned(self):
        fd5 = field_data(5, 1)
        y = fd5.field.from_int(2)
        assert count_M(y, 2, fd5.field, fd5.gen, fd5.dec) == 1
        assert count_M(y, 3, fd5.field, fd5.gen, fd5.dec) == 1
        fd7 = field_data(7, 1)
        assert count_M(fd7.field.from_int(3), 2, fd7.field, fd7.gen) == 13

    def test_quartic_y_rejected(self, any_field):
        fd = any_field
        with pytest.raises(QuarticYError):
            count_M(fd.field.one(), 2, fd.field, fd.gen, fd.dec)
        with pytest.raises(QuarticYError):
            count_M(fd.field.zero(), 2, fd.field, fd.gen, fd.dec)

    def test_matches_oracle(self, any_field):
        fd = any_field
        for code in range(1, fd.q):
            y = fd.field.from_int(code)
            if genfunc.is_quartic(y, fd.gen):
                continue
            for n in range(2, 9):
                assert count_M(y, n, fd.field, fd.gen, fd.dec) == fd.oracle_M(y, n), \
                    (fd.q, code, n)

    def test_relation_to_count_N(self, field_1mod4):
        fd = field_1mod4
        q = fd.q
        sign = fd.field.one() if (q - 1) // 4 % 2 == 0 else -fd.field.one()
        for code in range(1, q):
            y = fd.field.from_int(code)
            if genfunc.is_quartic(y, fd.gen):
                continue
            for n in (2, 4, 6):
                expected = (count_N(fd.field.zero(), n - 1, fd.field, fd.gen, fd.dec)
                            + (q - 1) * count_N(sign * y, n - 1, fd.field, fd.gen,
                                                fd.dec))
                assert count_M(y, n, fd.field, fd.gen, fd.dec) == expected
