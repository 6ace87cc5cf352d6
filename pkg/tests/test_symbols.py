import pytest

from orbitcalc.partitions import Decoration, GroupType, Partition, enumerate_partitions
from orbitcalc.symbols import (
    Bipartition,
    Symbol,
    bipartition_leq,
    bipartition_of_symbol,
    family_key,
    is_special_symbol,
    normalize_symbol,
    parse_bipartition,
    partition_of_special_symbol,
    special_closure,
    specialize_sum,
    springer_bipartition,
    symbol_of,
)
from orbitcalc.waldspurger import PairType

B, C, D = GroupType.B, GroupType.C, GroupType.D
BB, CD, DD = PairType.BB, PairType.CD, PairType.DD


def P(*parts):
    return Partition(parts)


class TestBipartition:
    def test_row_length_mismatch(self):
        with pytest.raises(ValueError):
            Bipartition((0, 1), (1, 2))

    def test_rows_must_increase(self):
        with pytest.raises(ValueError):
            Bipartition((1, 0), ())

    def test_equality_ignores_leading_zero_pairs(self):
        assert Bipartition((0, 2), (0,)) == Bipartition((2,), ())
        assert Bipartition((0, 0, 1), (0, 1)) == Bipartition((0, 1), (1,))

    def test_d_rows_unordered(self):
        one = Bipartition((0, 1, 2), (0, 1), type_d=True)
        # same rows handed over in the other orientation
        two = Bipartition((0, 0, 1), (1, 2), type_d=True)
        assert one == two
        assert one.beta <= one.alpha[1:]

    def test_d_needs_forced_zero(self):
        with pytest.raises(ValueError):
            Bipartition((1, 2), (1,), type_d=True)

    def test_decoration_constraints(self):
        Bipartition((0, 1, 2), (1, 2), type_d=True, decoration=Decoration.I)
        with pytest.raises(ValueError):
            Bipartition((0, 1), (2,), decoration=Decoration.I)

    def test_parse(self):
        assert parse_bipartition("0,1|1", B) == Bipartition((0, 1), (1,))
        assert parse_bipartition("0|", B) == Bipartition((0,), ())
        assert parse_bipartition("1,2|1,1", D) == Bipartition(
            (0, 1, 2), (1, 1), type_d=True
        )
        with pytest.raises(ValueError):
            parse_bipartition("1,2", B)


class TestSymbolOf:
    def test_examples(self):
        s = symbol_of(Bipartition((0, 0), (1,)))
        assert (s.top, s.bottom) == ((0, 1), (1,))
        s = symbol_of(Bipartition((0, 2), (0,)))
        assert (s.top, s.bottom) == ((0, 3), (0,))
        s = symbol_of(Bipartition((0,), ()))
        assert (s.top, s.bottom) == ((0,), ())

    def test_type_d(self):
        s = symbol_of(Bipartition((0, 1, 2), (0, 1), type_d=True))
        assert (s.top, s.bottom) == ((1, 3), (0, 2))

    def test_round_trip_with_bipartition_of_symbol(self):
        rho = Bipartition((0, 1, 3), (1, 2))
        assert bipartition_of_symbol(symbol_of(rho)) == rho


class TestNormalize:
    def test_shift_equivalence_example(self):
        s = Symbol((0, 1, 2, 3), (0, 3, 4))
        assert normalize_symbol(s) == Symbol((0, 1, 2), (2, 3))
        assert (normalize_symbol(s).top, normalize_symbol(s).bottom) == (
            (0, 1, 2),
            (2, 3),
        )

    def test_idempotent_on_minimal(self):
        s = Symbol((0, 1, 2), (2, 3))
        assert normalize_symbol(s) is s

    def test_strip_one_level_type_d(self):
        s = Symbol((0, 1), (0, 2), type_d=True)
        assert normalize_symbol(s) == Symbol((0,), (1,), type_d=True)

    def test_equality_is_shift_insensitive(self):
        assert Symbol((0, 1, 2, 3), (0, 3, 4)) == Symbol((0, 1, 2), (2, 3))


class TestSpecialSymbols:
    def test_examples(self):
        assert is_special_symbol(symbol_of(Bipartition((0, 0), (1,))))
        assert not is_special_symbol(Symbol((0, 1, 2), (2, 3)))
        assert is_special_symbol(symbol_of(Bipartition((0,), ())))

    def test_family_keys(self):
        # same entries, same rows sizes after normalization -> same family
        assert family_key(Symbol((0, 2), (1,))) == family_key(Symbol((0, 1), (2,)))
        # shift invariance is built in
        s = Symbol((0, 1, 2, 3), (0, 3, 4))
        assert family_key(s) == family_key(normalize_symbol(s))
        # distinct families from the special orbits of size 5
        keys = {
            family_key(symbol_of(springer_bipartition(lam, B)))
            for lam in enumerate_partitions(5, B, special_only=True)
        }
        assert len(keys) == 3

    def test_nearby_bipartitions_land_in_distinct_families(self):
        one = symbol_of(Bipartition((0, 1), (1,)))
        two = symbol_of(Bipartition((0, 2), (0,)))
        assert family_key(one) != family_key(two)


class TestSpecialPartitionOfSymbol:
    @pytest.mark.parametrize(
        "alpha,beta,expected",
        [(((0, 0)), (1,), (1, 1, 1)), ((0, 1), (1,), (3, 1, 1)), ((0, 2), (0,), (5,))],
    )
    def test_type_b_examples(self, alpha, beta, expected):
        lam = partition_of_special_symbol(symbol_of(Bipartition(alpha, beta)), B)
        assert lam == Partition(expected)

    def test_rejects_non_special(self):
        with pytest.raises(ValueError):
            partition_of_special_symbol(Symbol((0, 1, 2), (2, 3)), B)

    def test_rejects_kind_mismatch(self):
        with pytest.raises(ValueError):
            partition_of_special_symbol(symbol_of(Bipartition((0, 1), (1,))), D)


class TestSpringer:
    def test_examples(self):
        assert springer_bipartition(P(1, 1, 1), B) == Bipartition((0, 0), (1,))
        assert springer_bipartition(P(3, 1, 1), B) == Bipartition((0, 1), (1,))
        assert springer_bipartition(P(5), B) == Bipartition((0, 2), (0,))

    def test_rejects_non_special(self):
        with pytest.raises(ValueError):
            springer_bipartition(P(2, 2, 1), B)

    @pytest.mark.parametrize("t", [B, C, D])
    def test_round_trip(self, t):
        for d in range(t.size_parity, 15, 2):
            for lam in enumerate_partitions(d, t, special_only=True):
                rho = springer_bipartition(lam, t)
                assert partition_of_special_symbol(symbol_of(rho), t) == lam

    @pytest.mark.parametrize("t", [B, C, D])
    def test_matches_search_oracle(self, t):
        from orbitcalc.harness import brute_force_springer

        for d in range(t.size_parity, 10, 2):
            for lam in enumerate_partitions(d, t, special_only=True):
                assert springer_bipartition(lam, t) == brute_force_springer(lam, t)


class TestSpecializeSum:
    def test_adjusted_sum(self):
        rho = specialize_sum(
            Bipartition((0, 0), (1,)), Bipartition((0, 0), (1,)), BB
        )
        assert rho == Bipartition((0, 1), (1,))

    def test_plain_sum(self):
        rho = specialize_sum(
            Bipartition((0, 2), (0,)), Bipartition((0, 0), (1,)), BB
        )
        assert rho == Bipartition((0, 2), (1,))

    def test_zero_is_neutral(self):
        rho = Bipartition((0, 1), (1,))
        assert specialize_sum(rho, Bipartition((0,), ()), BB) == rho

    def test_rejects_non_special(self):
        lopsided = Bipartition((0, 0, 0), (2, 2))  # b_1 > a_1 + 1
        with pytest.raises(ValueError):
            specialize_sum(lopsided, Bipartition((0,), ()), BB)

    def test_rejects_kind_mismatch(self):
        with pytest.raises(ValueError):
            specialize_sum(
                Bipartition((0, 1), (1,)), Bipartition((0, 1), (1,)), CD
            )


class TestSpecialClosure:
    def test_examples(self):
        assert special_closure(P(1, 1, 1), P(1, 1, 1), BB) == P(3, 1, 1)
        assert special_closure(P(5), P(1, 1, 1), BB) == P(5, 1, 1)
        # the transfer image (4,4,3) is not special; its closure is computed
        assert special_closure(P(3, 3, 3), P(1, 1, 1), BB) == P(5, 3, 3)

    @pytest.mark.parametrize("pair", [BB, CD, DD])
    def test_matches_brute_force_minimum(self, pair):
        from orbitcalc.harness import (
            _special_pairs,
            brute_force_min_special_above,
        )
        from orbitcalc.waldspurger import waldspurger

        for l1, l2 in _special_pairs(pair, 10):
            w = waldspurger(l1, l2, pair)
            assert special_closure(l1, l2, pair) == brute_force_min_special_above(
                w, pair.target
            )


class TestBipartitionOrder:
    def test_examples(self):
        assert bipartition_leq(Bipartition((0, 0), (1,)), Bipartition((0, 1), (0,)))
        rho = Bipartition((0, 1), (1,))
        assert bipartition_leq(rho, rho)
        assert not bipartition_leq(
            Bipartition((0, 1), (0,)), Bipartition((0, 0), (1,))
        )

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            bipartition_leq(Bipartition((0, 1), (1,)), Bipartition((0, 1), (0,)))

    @pytest.mark.parametrize("t", [B, C, D])
    def test_matches_dominance_on_special_orbits(self, t):
        from orbitcalc.partitions import dominance_leq

        for d in range(t.size_parity, 11, 2):
            lams = enumerate_partitions(d, t, special_only=True)
            rhos = {lam: springer_bipartition(lam, t) for lam in lams}
            for lam in lams:
                for mu in lams:
                    assert dominance_leq(lam, mu) == bipartition_leq(
                        rhos[lam], rhos[mu]
                    )
