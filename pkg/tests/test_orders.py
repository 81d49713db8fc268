import itertools
from fractions import Fraction

import pytest
import hypothesis.strategies as st
from hypothesis import given, settings

from conftest import degree_sequences, same_length_pairs

from degseq.errors import (
    IndexOutOfRangeError,
    LengthMismatchError,
    NotMajorizedError,
    OrderViolatedError,
    SumMismatchError,
    UnderflowError,
    UnknownFunctionError,
    ZeroSumError,
)
from degseq.orders import (
    BasicTransfer,
    Comparison,
    DegreeSequence,
    apply_basic_transfer,
    compare,
    convex_sum,
    decompose_into_basic_transfers,
    format_sequence,
    lorenz_curve,
    lorenz_majorized,
    majorized,
    min_tail_sum,
    minimum_transfer_count,
    nonnormalized_lorenz_points,
    parse_sequence,
)

D = DegreeSequence


def all_nonincreasing(length, max_value):
    for combo in itertools.combinations_with_replacement(range(max_value, -1, -1), length):
        yield D(combo)


def equal_sum_majorized_pairs(max_len, max_value):
    """Every (x, y) with x <= y, equal sums, over the exhaustive family."""
    for n in range(1, max_len + 1):
        by_sum = {}
        for seq in all_nonincreasing(n, max_value):
            by_sum.setdefault(sum(seq), []).append(seq)
        for group in by_sum.values():
            for x in group:
                for y in group:
                    if majorized(x, y):
                        yield x, y


class TestDegreeSequenceType:
    def test_sorts_on_construction(self):
        assert tuple(D((1, 3, 2))) == (3, 2, 1)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            D(())

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            D((1, -1))

    def test_parse_records_sortedness(self):
        seq, was_sorted = parse_sequence("5,4,4,3,3,3")
        assert tuple(seq) == (5, 4, 4, 3, 3, 3) and was_sorted
        seq, was_sorted = parse_sequence("1, 3, 2")
        assert tuple(seq) == (3, 2, 1) and not was_sorted

    def test_parse_rejects_junk(self):
        for bad in ("", "1,,2", "1,a", "1;2"):
            with pytest.raises(ValueError):
                parse_sequence(bad)

    def test_format_round_trip(self):
        assert format_sequence(D((4, 3, 1))) == "4,3,1"


class TestMajorized:
    def test_known_dominated_pair(self):
        assert majorized(D((4, 3, 3, 3, 1)), D((5, 3, 3, 2, 1)))

    def test_unequal_sums_allowed(self):
        assert majorized(D((4, 4, 2, 1, 1)), D((4, 4, 4, 4, 4)))

    def test_reflexive(self):
        x = D((3, 2, 2))
        assert majorized(x, x)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            majorized(D((1, 1)), D((1, 1, 1)))

    @given(same_length_pairs())
    def test_antisymmetry(self, pair):
        x, y = pair
        if majorized(x, y) and majorized(y, x):
            assert x == y

    @given(
        st.integers(2, 5).flatmap(
            lambda n: st.tuples(
                *(
                    st.lists(st.integers(0, 5), min_size=n, max_size=n).map(D)
                    for _ in range(3)
                )
            )
        )
    )
    def test_transitivity(self, triple):
        x, y, z = triple
        if majorized(x, y) and majorized(y, z):
            assert majorized(x, z)
        if (
            sum(x) and sum(y) and sum(z)
            and lorenz_majorized(x, y) and lorenz_majorized(y, z)
        ):
            assert lorenz_majorized(x, z)


class TestLorenzMajorized:
    def test_constant_below_spread(self):
        assert lorenz_majorized(D((4, 4, 4, 4, 4)), D((4, 4, 2, 1, 1)))

    def test_flat_head_below_star(self):
        assert lorenz_majorized(D((2, 1, 1, 1, 1)), D((4, 1, 1, 1, 1)))

    def test_constant_vs_itself(self):
        x = D((3, 3, 3))
        assert lorenz_majorized(x, x)

    def test_zero_sum_rejected(self):
        with pytest.raises(ZeroSumError):
            lorenz_majorized(D((0, 0)), D((1, 1)))

    @given(same_length_pairs(max_len=6, max_value=6))
    def test_antisymmetry_up_to_curve_equality(self, pair):
        x, y = pair
        if sum(x) == 0 or sum(y) == 0:
            return
        if lorenz_majorized(x, y) and lorenz_majorized(y, x):
            assert lorenz_curve(x).points == lorenz_curve(y).points

    def test_equal_sum_slice_agrees_with_generalized(self):
        for x, y in equal_sum_majorized_pairs(5, 5):
            if sum(x) > 0:
                assert lorenz_majorized(x, y)
        # and conversely on a sample
        for n in (3, 4, 5):
            group = [s for s in all_nonincreasing(n, 5) if sum(s) == 6]
            for x in group:
                for y in group:
                    assert lorenz_majorized(x, y) == majorized(x, y)


class TestCompare:
    def test_incomparable_pair(self):
        assert compare(D((4, 3, 3, 3, 1)), D((4, 4, 2, 2, 2))) is Comparison.INCOMPARABLE

    def test_equal(self):
        x = D((2, 1))
        assert compare(x, x) is Comparison.EQUAL

    def test_incomparable_longer_pair(self):
        a = D((6, 5, 3, 3, 2, 2, 1))
        b = D((6, 6, 2, 2, 2, 2, 2))
        assert compare(a, b) is Comparison.INCOMPARABLE

    def test_less_greater(self):
        x, y = D((4, 3, 3, 3, 1)), D((5, 3, 3, 2, 1))
        assert compare(x, y) is Comparison.LESS
        assert compare(y, x) is Comparison.GREATER

    def test_lorenz_curve_equal_sequences(self):
        assert compare(D((2, 2)), D((4, 4)), order="lorenz") is Comparison.EQUAL

    def test_unknown_order(self):
        with pytest.raises(ValueError):
            compare(D((1,)), D((1,)), order="weird")


class TestLorenzCurve:
    def test_star_like_sequence(self):
        # independent prefix-sum oracle, then the frozen literal values
        seq = D((4, 1, 1, 1, 1))
        total = sum(seq)
        acc = 0
        expected = [Fraction(0)]
        for v in seq:
            acc += v
            expected.append(Fraction(acc, total))
        curve = lorenz_curve(seq)
        assert list(curve.ordinates) == expected
        assert expected == [
            Fraction(0),
            Fraction(1, 2),
            Fraction(5, 8),
            Fraction(3, 4),
            Fraction(7, 8),
            Fraction(1),
        ]

    def test_constant_is_diagonal(self):
        curve = lorenz_curve(D((5, 5, 5, 5)))
        for fx, fy in curve.points:
            assert fx == fy

    def test_endpoint(self):
        assert lorenz_curve(D((2, 1, 0))).points[-1] == (Fraction(1), Fraction(1))

    def test_zero_sum(self):
        with pytest.raises(ZeroSumError):
            lorenz_curve(D((0, 0, 0)))

    @given(degree_sequences())
    def test_concave_increments(self, seq):
        if sum(seq) == 0:
            return
        ys = lorenz_curve(seq).ordinates
        increments = [b - a for a, b in zip(ys, ys[1:])]
        assert all(d2 <= d1 for d1, d2 in zip(increments, increments[1:]))

    def test_csv_strict_fractions(self):
        text = lorenz_curve(D((2, 1, 1))).to_csv()
        assert text.splitlines()[0] == "x,y"
        assert text.splitlines()[1] == "0/1,0/1"
        assert text.splitlines()[-1] == "1/1,1/1"


class TestNonnormalizedPoints:
    def test_small_example(self):
        assert nonnormalized_lorenz_points(D((2, 1, 1))) == ((0, 0), (1, 2), (2, 3), (3, 4))

    def test_all_zero(self):
        assert nonnormalized_lorenz_points(D((0, 0))) == ((0, 0), (1, 0), (2, 0))

    @given(degree_sequences())
    def test_final_point(self, seq):
        pts = nonnormalized_lorenz_points(seq)
        assert pts[-1] == (len(seq), sum(seq))


class TestBasicTransfer:
    def test_simple_move(self):
        out = apply_basic_transfer(D((2, 2, 2)), BasicTransfer(to_rank=1, from_rank=3))
        assert tuple(out) == (3, 2, 1)

    def test_sum_conserved(self):
        x = D((3, 2, 2, 1))
        out = apply_basic_transfer(x, BasicTransfer(to_rank=1, from_rank=4))
        assert sum(out) == sum(x)

    def test_order_violation(self):
        # raising rank 2 above rank 1 must fail
        with pytest.raises(OrderViolatedError):
            apply_basic_transfer(D((2, 2, 1)), BasicTransfer(to_rank=2, from_rank=3))

    def test_underflow(self):
        with pytest.raises(UnderflowError):
            apply_basic_transfer(D((2, 1, 0)), BasicTransfer(to_rank=1, from_rank=3))

    def test_bad_ranks_rejected_at_construction(self):
        with pytest.raises(ValueError):
            BasicTransfer(to_rank=3, from_rank=2)
        with pytest.raises(ValueError):
            BasicTransfer(to_rank=0, from_rank=2)


class TestDecompose:
    def test_identity_pair_empty_chain(self):
        x = D((3, 2, 1))
        chain = decompose_into_basic_transfers(x, x)
        assert chain.steps == ()
        assert chain.end == x

    def test_single_step(self):
        chain = decompose_into_basic_transfers(D((2, 2, 2)), D((3, 2, 1)))
        assert [(t.from_rank, t.to_rank) for t in chain.steps] == [(3, 1)]

    def test_two_block_target(self):
        x, y = D((3, 3, 2, 2, 2)), D((4, 4, 2, 1, 1))
        chain = decompose_into_basic_transfers(x, y)
        assert chain.end == y
        assert len(chain.steps) == minimum_transfer_count(x, y)

    def test_wrong_direction(self):
        with pytest.raises(NotMajorizedError):
            decompose_into_basic_transfers(D((3, 2, 1)), D((2, 2, 2)))

    def test_sum_mismatch(self):
        with pytest.raises(SumMismatchError):
            decompose_into_basic_transfers(D((1, 1)), D((2, 1)))

    def test_exhaustive_replay_small(self):
        for x, y in equal_sum_majorized_pairs(5, 5):
            chain = decompose_into_basic_transfers(x, y)
            seqs = chain.replay()
            assert seqs[-1] == y
            for s in seqs:
                assert majorized(x, s) and majorized(s, y)
            assert len(chain.steps) == minimum_transfer_count(x, y)


class TestMinTailSum:
    def test_direct_evaluation(self):
        assert min_tail_sum(D((4, 3, 3, 3, 1)), 2) == 5

    def test_k_equals_n(self):
        assert min_tail_sum(D((3, 2, 1)), 3) == 0

    def test_pairwise_inequality_instance(self):
        x, y = D((2, 2, 2)), D((3, 2, 1))
        assert min_tail_sum(x, 1) >= min_tail_sum(y, 1)
        assert min_tail_sum(x, 1) == 2

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            min_tail_sum(D((1, 1)), 3)

    def test_tail_inequality_sampled_family(self):
        for x, y in equal_sum_majorized_pairs(5, 5):
            for k in range(1, len(x)):
                assert min_tail_sum(x, k) >= min_tail_sum(y, k)


class TestConvexSum:
    def test_square(self):
        assert convex_sum(D((2, 2, 2)), "square") == 12

    def test_hinge(self):
        assert convex_sum(D((3, 2, 1)), "hinge(2)") == 1

    def test_square_witnesses_order(self):
        assert convex_sum(D((3, 2, 1)), "square") == 14 >= 12

    def test_unknown(self):
        with pytest.raises(UnknownFunctionError):
            convex_sum(D((1,)), "exp")

    def test_convexity_inequality_over_family(self):
        phis = ["square", "cube"] + [f"hinge({c})" for c in range(0, 6)]
        for x, y in equal_sum_majorized_pairs(4, 5):
            for phi in phis:
                assert convex_sum(x, phi) <= convex_sum(y, phi)


@settings(max_examples=200)
@given(same_length_pairs(max_len=6, max_value=6))
def test_decompose_round_trip_random(pair):
    x, y = pair
    if sum(x) != sum(y) or not majorized(x, y):
        return
    chain = decompose_into_basic_transfers(x, y)
    assert chain.end == y
