import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclocone.params import (
    CircleElement,
    KappaParams,
    RationalCharacter,
    ariki_product_nonzero,
    cherednik_semisimple,
    chi_to_kappa,
    circle,
    hecke_params,
    hecke_q,
    kappa_to_chi,
    parse_rational,
)
from cyclocone.rootlattice import generate_Rn, pair

from oracles import random_fraction

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=12)


def random_character(rng, ell):
    return RationalCharacter(tuple(random_fraction(rng) for _ in range(ell)))


class TestParsing:
    def test_rationals(self):
        assert parse_rational("1/5") == Fraction(1, 5)
        assert parse_rational("-3") == Fraction(-3)
        with pytest.raises(ValueError):
            parse_rational("1/0")
        with pytest.raises(ValueError):
            parse_rational("ham")

    def test_character(self):
        chi = RationalCharacter.parse("1/5,1/7")
        assert chi.values == (Fraction(1, 5), Fraction(1, 7))
        assert str(chi) == "1/5,1/7"

    def test_kappa_string(self):
        kp = KappaParams.parse("k00=1/3,k=1/4,-1/4", ell=2)
        assert kp.k00 == Fraction(1, 3)
        assert kp.k01 == Fraction(-1, 3)
        assert kp.kappa == (Fraction(1, 4), Fraction(-1, 4))

    def test_kappa_invariants(self):
        with pytest.raises(ValueError):
            KappaParams(1, 1, (0,))
        with pytest.raises(ValueError):
            KappaParams(1, -1, (Fraction(1, 2),))


class TestCircle:
    def test_canonical_representative(self):
        assert circle(Fraction(5, 4)).t == Fraction(1, 4)
        assert circle(-1).t == 0

    def test_group_laws(self):
        a, b, c = circle(Fraction(1, 3)), circle(Fraction(1, 4)), circle(Fraction(5, 6))
        assert (a * b) * c == a * (b * c)
        assert a * circle(0) == a
        assert (a * a.inverse()).is_one()

    @given(fracs, st.integers(-6, 6))
    def test_powers(self, t, m):
        assert circle(t) ** m == circle(t * m)


class TestKappaChiDictionary:
    def test_example_ell_two(self):
        kp = KappaParams(Fraction(1, 3), Fraction(-1, 3), (Fraction(1, 4), Fraction(-1, 4)))
        chi = kappa_to_chi(kp, 2)
        assert chi.values == (Fraction(2, 3), Fraction(0))

    def test_example_ell_one(self):
        c = Fraction(3, 7)
        kp = KappaParams(c, -c, (0,))
        assert kappa_to_chi(kp, 1).values == (2 * c,)

    def test_example_all_zero(self):
        kp = KappaParams(0, 0, (0, 0))
        assert kappa_to_chi(kp, 2).values == (Fraction(-1, 2), Fraction(1, 2))

    def test_inverse_examples(self):
        kp = chi_to_kappa(RationalCharacter((Fraction(1),)))
        assert kp.k00 == Fraction(1, 2) and kp.kappa == (Fraction(0),)
        kp = chi_to_kappa(RationalCharacter((Fraction(2, 3), Fraction(0))))
        assert kp.k00 == Fraction(1, 3)
        assert kp.kappa == (Fraction(1, 4), Fraction(-1, 4))

    def test_round_trip_random(self):
        rng = random.Random(5)
        for _ in range(300):
            ell = rng.randint(1, 5)
            chi = random_character(rng, ell)
            kp = chi_to_kappa(chi)
            assert kappa_to_chi(kp, ell) == chi

    def test_reverse_round_trip_random(self):
        rng = random.Random(6)
        for _ in range(300):
            ell = rng.randint(1, 5)
            kappa = [random_fraction(rng) for _ in range(ell - 1)]
            kappa.append(-sum(kappa, Fraction(0)))
            k00 = random_fraction(rng)
            kp = KappaParams(k00, -k00, tuple(kappa))
            assert chi_to_kappa(kappa_to_chi(kp, ell)) == kp

    @given(st.data())
    def test_delta_pairing_identity(self, data):
        ell = data.draw(st.integers(1, 5))
        chi = RationalCharacter(tuple(data.draw(fracs) for _ in range(ell)))
        kp = chi_to_kappa(chi)
        assert chi.delta_pairing() == kp.k00 - kp.k01

    def test_printed_closed_form_has_centering_constant(self):
        # The closed-form inverse reads, for 1 <= i <= ell-1,
        #   ell*kappa_{i+1} = i - sum_{j<=i} j*chi_j + sum_{j>i} (ell-j)*chi_j,
        # but as printed it holds only up to the additive constant -(ell-1)/2
        # that the normalization sum(kappa) = 0 forces.  The solved linear
        # system (arbitrated by the round trips above) pins the constant.
        rng = random.Random(7)
        for _ in range(100):
            ell = rng.randint(2, 5)
            chi = random_character(rng, ell)
            kp = chi_to_kappa(chi)
            for i in range(1, ell):
                printed = (
                    i
                    - sum(j * chi.values[j] for j in range(1, i + 1))
                    + sum((ell - j) * chi.values[j] for j in range(i + 1, ell))
                )
                corrected = printed - Fraction(ell - 1, 2)
                assert ell * kp.kappa[(i + 1) % ell] == corrected


class TestHeckeParams:
    def test_all_zero_kappa(self):
        kp = KappaParams(0, 0, (0, 0))
        q0, q1, u = hecke_params(kp, 2)
        assert q0 == circle(0)
        assert q1 == circle(Fraction(1, 2))
        assert u == (circle(0), circle(Fraction(1, 2)))

    def test_q_is_k_difference(self):
        rng = random.Random(8)
        for _ in range(200):
            ell = rng.randint(1, 5)
            kappa = [random_fraction(rng) for _ in range(ell - 1)]
            kappa.append(-sum(kappa, Fraction(0)))
            k00 = random_fraction(rng)
            kp = KappaParams(k00, -k00, tuple(kappa))
            q0, q1, _ = hecke_params(kp, ell)
            assert hecke_q(q0, q1) == circle(kp.k00 - kp.k01)

    def test_q_identity_at_half(self):
        kp = KappaParams(Fraction(1, 2), Fraction(-1, 2), (0,))
        q0, q1, _ = hecke_params(kp, 1)
        assert hecke_q(q0, q1) == circle(1)
        assert hecke_q(q0, q1).is_one()


class TestAriki:
    def test_half_rotation_fails_at_n_two(self):
        assert not ariki_product_nonzero(circle(Fraction(1, 2)), (circle(0),), 2)

    def test_fifth_rotation_passes_at_n_two(self):
        assert ariki_product_nonzero(circle(Fraction(1, 5)), (circle(0),), 2)

    def test_equal_u_values_fail(self):
        u = (circle(Fraction(1, 3)), circle(Fraction(1, 3)))
        assert not ariki_product_nonzero(circle(Fraction(1, 7)), u, 1)


class TestCherednik:
    def test_ell_one_fifth(self):
        kp = KappaParams(Fraction(1, 10), Fraction(-1, 10), (0,))
        assert kp.k == Fraction(1, 5)
        assert cherednik_semisimple(kp, 2, 1)

    def test_ell_one_half(self):
        kp = KappaParams(Fraction(1, 4), Fraction(-1, 4), (0,))
        assert kp.k == Fraction(1, 2)
        assert not cherednik_semisimple(kp, 2, 1)

    def test_ell_two_zero(self):
        kp = KappaParams(0, 0, (0, 0))
        assert cherednik_semisimple(kp, 1, 2)

    def test_first_clause_vs_multiplier_form(self):
        # For k not an integer the first clause is the same as
        # "m*k not in Z for every 2 <= m <= n"; integer k satisfies the
        # clause vacuously but fails the multiplier form, so the criterion
        # needs the separate "k not in Z" conjunct it is always paired with.
        from math import gcd

        rng = random.Random(9)
        for _ in range(400):
            k = random_fraction(rng)
            n = rng.randint(1, 5)
            clause = all(
                (k + Fraction(j, m)).denominator != 1
                for m in range(2, n + 1)
                for j in range(m)
                if gcd(j, m) == 1
            )
            multiplier = all(
                (m * k).denominator != 1 for m in range(2, n + 1)
            )
            if k.denominator != 1:
                assert clause == multiplier
            else:
                assert clause and (n < 2 or not multiplier)


class TestCriterionEquivalence:
    @pytest.mark.parametrize("seed", [11, 12])
    def test_three_way_equivalence(self, seed):
        # roots-side avoidance == Hecke-side product == (Cherednik and
        # non-integral k), on random rational characters.
        rng = random.Random(seed)
        for _ in range(150):
            n = rng.randint(1, 4)
            ell = rng.randint(1, 4)
            chi = random_character(rng, ell)
            if rng.random() < 0.2:
                chi = RationalCharacter(
                    tuple(Fraction(rng.randint(-3, 3)) for _ in range(ell))
                )
            roots_ok = all(
                pair(chi, alpha).denominator != 1
                for alpha in generate_Rn(n, ell)
            )
            kp = chi_to_kappa(chi)
            q0, q1, u = hecke_params(kp, ell)
            hecke_ok = ariki_product_nonzero(hecke_q(q0, q1), u, n)
            cher_ok = cherednik_semisimple(kp, n, ell) and kp.k.denominator != 1
            assert roots_ok == hecke_ok == cher_ok
