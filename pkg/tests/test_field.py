import random

import pytest

from markoff.errors import ModulusMismatch
from markoff.field import FieldElement, PrimeModulus, is_prime, sqrt_minus_one, sqrt_mod_p

P5 = PrimeModulus(5)
P7 = PrimeModulus(7)
P13 = PrimeModulus(13)


def el(p, v):
    return p.element(v)


class TestPrimeModulus:
    def test_accepts_odd_primes(self):
        for p in (3, 5, 13, 2**61 - 1):
            assert PrimeModulus(p).p == p

    @pytest.mark.parametrize("bad", [0, 1, 2, 4, 9, 15, 2**62, 2**63 + 11, 3 * (2**40 + 1)])
    def test_rejects_non_odd_primes(self, bad):
        with pytest.raises(ValueError):
            PrimeModulus(bad)

    def test_is_prime_spot_checks(self):
        assert is_prime(2) and is_prime(97) and is_prime(2**61 - 1)
        assert not is_prime(1) and not is_prime(91) and not is_prime(2**61 - 2)


class TestArithmetic:
    def test_mul_example(self):
        assert (el(P5, 2) * el(P5, 3)).value == 1

    def test_inv_example(self):
        assert el(P13, 2).inverse().value == 7

    def test_neg_zero(self):
        assert (-el(P5, 0)).value == 0

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatch):
            el(P5, 2) + el(P13, 2)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            el(P5, 1) / el(P5, 0)
        with pytest.raises(ZeroDivisionError):
            el(P5, 0).inverse()

    def test_fermat_and_inverse(self):
        rng = random.Random(401)
        for mod in (P5, P13, PrimeModulus(10007), PrimeModulus(2**61 - 1)):
            for _ in range(50):
                a = el(mod, rng.randrange(1, mod.p))
                assert (a * a.inverse()).value == 1
                assert (a ** (mod.p - 1)).value == 1

    def test_int_coercion(self):
        assert (el(P13, 6) + 9).value == 2
        assert (3 * el(P13, 6)).value == 5
        assert (1 - el(P13, 3)).value == 11


class TestSqrt:
    def test_examples(self):
        assert sqrt_mod_p(el(P13, 12)).value == 5
        assert sqrt_mod_p(el(P5, 0)).value == 0
        assert sqrt_mod_p(el(P7, 3)) is None

    def test_nonresidues_mod_7_exhaustive(self):
        squares = {v * v % 7 for v in range(7)}
        assert squares == {0, 1, 2, 4}
        for a in range(7):
            root = sqrt_mod_p(el(P7, a))
            assert (root is not None) == (a in squares)

    def test_root_is_canonical_and_squares_back(self):
        rng = random.Random(402)
        for mod in (P5, P13, PrimeModulus(41), PrimeModulus(10007), PrimeModulus(2**61 - 1)):
            for _ in range(40):
                a = el(mod, rng.randrange(mod.p))
                r = sqrt_mod_p(a)
                euler = pow(a.value, (mod.p - 1) // 2, mod.p)
                assert (r is not None) == (euler in (0, 1))
                if r is not None:
                    assert (r * r).value == a.value
                    assert r.value <= mod.p - r.value


class TestSqrtMinusOne:
    def test_examples(self):
        assert sqrt_minus_one(P5).value == 2
        assert sqrt_minus_one(P13).value == 5
        assert sqrt_minus_one(P7) is None

    def test_iff_one_mod_four(self):
        for p in (5, 13, 17, 29, 10007, 3, 7, 11, 19):
            mod = PrimeModulus(p)
            i = sqrt_minus_one(mod)
            assert (i is not None) == (p % 4 == 1)
            if i is not None:
                assert (i.value * i.value + 1) % p == 0
