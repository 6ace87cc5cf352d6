import pytest

from orbitcalc.duality import adjust, dual, dual_partition, lie_algebra_dim, orbit_dim
from orbitcalc.partitions import (
    GroupType,
    Partition,
    classify,
    dominance_leq,
    enumerate_partitions,
)

B, C, D = GroupType.B, GroupType.C, GroupType.D


def P(*parts):
    return Partition(parts)


class TestAdjust:
    def test_minus(self):
        assert adjust(P(3, 2), "minus") == P(3, 1)
        assert adjust(P(3, 1, 1), "minus") == P(3, 1)

    def test_plus(self):
        assert adjust(P(2, 2), "plus") == P(3, 2)
        assert adjust(Partition(), "plus") == P(1)

    def test_minus_on_empty(self):
        with pytest.raises(ValueError):
            adjust(Partition(), "minus")

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            adjust(P(1), "up")


class TestDual:
    def test_b_example(self):
        res = dual(P(2, 2, 1), B)
        assert (res.partition, res.output_type) == (P(2, 2), C)

    def test_c_example(self):
        res = dual(P(2, 2), C)
        assert (res.partition, res.output_type) == (P(3, 1, 1), B)

    def test_zero_orbit_to_regular(self):
        res = dual(P(1, 1, 1, 1, 1), B)
        assert (res.partition, res.output_type) == (P(4), C)

    def test_type_d(self):
        # the subregular and zero orbits of so_4 are exchanged
        assert dual(P(3, 1), D).partition == P(1, 1, 1, 1)
        assert dual(P(1, 1, 1, 1), D).partition == P(3, 1)

    def test_rejects_non_member(self):
        with pytest.raises(ValueError):
            dual(P(2, 1), B)

    def test_sizes(self):
        assert dual_partition(P(3, 1, 1), B).size == 4
        assert dual_partition(P(2, 2), C).size == 5
        assert dual_partition(P(2, 2), D).size == 4


class TestDualityLaws:
    @pytest.mark.parametrize("t,out_t", [(B, C), (C, B), (D, D)])
    def test_double_dual_and_specialness(self, t, out_t):
        for d in range(t.size_parity, 11, 2):
            for lam in enumerate_partitions(d, t):
                first = dual_partition(lam, t)
                assert classify(first, out_t).special
                back = dual_partition(first, out_t)
                assert dominance_leq(lam, back)
                assert (back == lam) == classify(lam, t).special

    @pytest.mark.parametrize("t", [B, C, D])
    def test_order_reversing(self, t):
        for d in range(t.size_parity, 11, 2):
            members = enumerate_partitions(d, t)
            duals = {lam: dual_partition(lam, t) for lam in members}
            for lam in members:
                for mu in members:
                    if dominance_leq(lam, mu):
                        assert dominance_leq(duals[mu], duals[lam])


class TestOrbitDim:
    def test_lie_dims(self):
        assert lie_algebra_dim(B, 5) == 10
        assert lie_algebra_dim(C, 4) == 10
        assert lie_algebra_dim(D, 6) == 15

    def test_examples(self):
        assert orbit_dim(P(1, 1, 1, 1, 1), B) == 0
        assert orbit_dim(P(3), B) == 2
        assert orbit_dim(P(2, 2), C) == 6
        assert orbit_dim(P(3, 1, 1), B) == 6

    def test_rejects_non_member(self):
        with pytest.raises(ValueError):
            orbit_dim(P(3, 1), C)

    @pytest.mark.parametrize("t", [B, C, D])
    def test_monotone_in_dominance(self, t):
        for d in range(t.size_parity, 11, 2):
            members = enumerate_partitions(d, t)
            for lam in members:
                for mu in members:
                    if dominance_leq(lam, mu):
                        assert orbit_dim(lam, t) <= orbit_dim(mu, t)
