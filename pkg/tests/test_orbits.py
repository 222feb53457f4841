import random
from fractions import Fraction
from math import gcd

import pytest

from cyclocone.abelian import FGAbelianGroup
from cyclocone.orbits import (
    OrbitLabel,
    admits_monodromic_local_system,
    count_Q_chi,
    decompose,
    enumerate_Q_chi,
    enumerate_orbits,
    fundamental_group,
)
from cyclocone.params import RationalCharacter
from cyclocone.partitions import MultiPartition, Partition
from cyclocone.report import count_multipartitions
from cyclocone.rootlattice import DimVector, generate_Rn, pair

from oracles import brute_force_orbit_pairs, random_fraction


def label(lam, nu, n, ell):
    return OrbitLabel(
        Partition(lam), MultiPartition(tuple(Partition(c) for c in nu)), n, ell
    )


def chi_of(*vals):
    return RationalCharacter(tuple(Fraction(v) for v in vals))


class TestOrbitLabel:
    def test_validates_residue_law(self):
        with pytest.raises(ValueError):
            label((1,), ((),), 2, 1)
        with pytest.raises(ValueError):
            label((2,), ((), (1,)), 1, 2)

    def test_accepts_good_labels(self):
        lab = label((), ((), (2,)), 1, 2)
        assert lab.n == 1 and lab.ell == 2


class TestEnumeration:
    def test_forty_one(self):
        assert len(enumerate_orbits(2, 2)) == 41

    def test_n_zero(self):
        for ell in (1, 2, 3):
            out = enumerate_orbits(0, ell)
            assert len(out) == 1
            assert out[0].lam == Partition(())
            assert out[0].nu == MultiPartition.empty(ell)

    def test_enhanced_nilcone_table_order(self):
        out = enumerate_orbits(2, 1)
        expected = [
            ((2,), ((),)),
            ((1, 1), ((),)),
            ((1,), ((1,),)),
            ((), ((2,),)),
            ((), ((1, 1),)),
        ]
        assert [
            (lab.lam.parts, tuple(c.parts for c in lab.nu)) for lab in out
        ] == expected

    def test_no_duplicates(self):
        out = enumerate_orbits(3, 2)
        assert len(out) == len(set(out))

    @pytest.mark.parametrize("n,ell", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
    def test_exhaustive_against_double_loop(self, n, ell):
        ours = {
            (lab.lam.parts, tuple(c.parts for c in lab.nu))
            for lab in enumerate_orbits(n, ell)
        }
        assert ours == brute_force_orbit_pairs(n, ell)

    def test_sizes_add_up(self):
        for lab in enumerate_orbits(2, 3):
            assert lab.lam.size + lab.nu.size == 6

    def test_single_vertex_labels_are_bipartitions(self):
        # For a one-vertex cycle the residue law reads |lambda| + |nu| = n,
        # so the labels biject with bipartitions of n.
        from oracles import multipartition_count

        for n in range(0, 9):
            assert len(enumerate_orbits(n, 1)) == multipartition_count(n, 2)

    def test_empty_nu_block_comes_first(self):
        for n, ell in [(2, 2), (3, 2), (2, 3)]:
            labels = enumerate_orbits(n, ell)
            head = count_multipartitions(n, ell)
            assert all(lab.nu.is_empty() for lab in labels[:head])
            assert not any(lab.nu.is_empty() for lab in labels[head:])


class TestDecompose:
    def test_mod_one_rows(self):
        lab = label((), ((2, 1),), 3, 1)
        dec = decompose(lab)
        assert dec.framed == DimVector((0,), framing=1)
        assert [(s.start, s.row, s.vector.coords) for s in dec.strings] == [
            (0, 1, (2,)),
            (0, 2, (1,)),
        ]

    def test_single_string_is_delta(self):
        lab = label((), ((), (2,)), 1, 2)
        dec = decompose(lab)
        assert len(dec.strings) == 1
        assert dec.strings[0].vector.coords == (1, 1)

    def test_empty_nu(self):
        lab = label((2,), ((), ()), 1, 2)
        dec = decompose(lab)
        assert dec.strings == ()
        assert dec.framed.coords == (1, 1) and dec.framed.framing == 1

    @pytest.mark.parametrize("ell", [1, 2, 3, 4])
    def test_conservation_exhaustive(self, ell):
        for n in range(0, 4):
            for lab in enumerate_orbits(n, ell):
                dec = decompose(lab)
                total = dec.framed
                for s in dec.strings:
                    total = total + s.vector
                assert total.coords == (n,) * ell
                assert total.framing == 1


class TestFundamentalGroup:
    def test_z2(self):
        assert fundamental_group(label((), ((2,),), 2, 1)) == FGAbelianGroup(0, (2,))

    def test_free_when_nu_empty(self):
        assert fundamental_group(label((2,), ((),), 2, 1)) == FGAbelianGroup(1)
        assert fundamental_group(label((4,), ((), ()), 2, 2)) == FGAbelianGroup(2)

    def test_trivial(self):
        assert fundamental_group(label((), ((1, 1),), 2, 1)).is_trivial()

    def test_gcd_law_mod_one(self):
        # For a single cycle vertex the group is cyclic of order gcd(nu).
        for total in range(0, 7):
            for lab in enumerate_orbits(total, 1):
                parts = lab.nu[0].parts
                g = 0
                for p in parts:
                    g = gcd(g, p)
                assert fundamental_group(lab) == FGAbelianGroup.cyclic(g)

    def test_full_rank_iff_nu_empty(self):
        for n in range(0, 4):
            for ell in range(1, 4):
                for lab in enumerate_orbits(n, ell):
                    full = fundamental_group(lab) == FGAbelianGroup(ell)
                    assert full == lab.nu.is_empty()

    def test_distinct_rows_same_length_kept_apart(self):
        # Both rows of (1,1) in one component have length one but end at
        # different vertices, so they contribute independent columns.
        lab = label((2,), ((1, 1), ()), 2, 2)
        assert fundamental_group(lab).is_trivial()


class TestMonodromy:
    def test_empty_nu_always_admits(self):
        lab = label((2,), ((),), 2, 1)
        for chi in (chi_of(0), chi_of("1/2"), chi_of("22/7")):
            assert admits_monodromic_local_system(lab, chi)

    def test_half_integral(self):
        lab = label((), ((2,),), 2, 1)
        assert admits_monodromic_local_system(lab, chi_of("1/2"))
        assert not admits_monodromic_local_system(lab, chi_of("1/3"))

    def test_dimension_mismatch(self):
        lab = label((), ((2,),), 2, 1)
        with pytest.raises(ValueError):
            admits_monodromic_local_system(lab, chi_of("1/2", "1/2"))

    def test_gcd_criterion_mod_one(self):
        rng = random.Random(3)
        for lab in enumerate_orbits(4, 1):
            g = 0
            for p in lab.nu[0].parts:
                g = gcd(g, p)
            for _ in range(5):
                chi = RationalCharacter((random_fraction(rng),))
                expected = (g * chi.values[0]).denominator == 1
                assert admits_monodromic_local_system(lab, chi) == expected


class TestQChi:
    def test_integral_keeps_everything(self):
        assert len(enumerate_Q_chi(2, 2, chi_of(0, 0))) == 41

    def test_generic_keeps_multipartition_count(self):
        out = enumerate_Q_chi(2, 2, chi_of("1/5", "1/7"))
        assert len(out) == 5
        assert all(lab.nu.is_empty() for lab in out)

    def test_half_integral_enhanced_nilcone(self):
        out = enumerate_Q_chi(2, 1, chi_of("1/2"))
        assert [
            (lab.lam.parts, tuple(c.parts for c in lab.nu)) for lab in out
        ] == [((2,), ((),)), ((1, 1), ((),)), ((), ((2,),))]

    def test_count_agrees_with_list(self):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randint(0, 3)
            ell = rng.randint(1, 3)
            chi = RationalCharacter(
                tuple(random_fraction(rng) for _ in range(ell))
            )
            assert count_Q_chi(n, ell, chi) == len(enumerate_Q_chi(n, ell, chi))

    def test_counting_dichotomy(self):
        rng = random.Random(17)
        for _ in range(80):
            n = rng.randint(1, 3)
            ell = rng.randint(1, 3)
            chi = RationalCharacter(
                tuple(random_fraction(rng) for _ in range(ell))
            )
            simple = count_Q_chi(n, ell, chi)
            pell = count_multipartitions(n, ell)
            assert simple >= pell
            avoids = all(
                pair(chi, alpha).denominator != 1
                for alpha in generate_Rn(n, ell)
            )
            assert (simple == pell) == avoids

    def test_integrality_dichotomy(self):
        rng = random.Random(19)
        for _ in range(80):
            n = rng.randint(1, 3)
            ell = rng.randint(1, 3)
            if rng.random() < 0.4:
                chi = RationalCharacter(
                    tuple(Fraction(rng.randint(-3, 3)) for _ in range(ell))
                )
            else:
                chi = RationalCharacter(
                    tuple(random_fraction(rng) for _ in range(ell))
                )
            full = count_Q_chi(n, ell, chi) == len(enumerate_orbits(n, ell))
            assert full == chi.is_integral()
