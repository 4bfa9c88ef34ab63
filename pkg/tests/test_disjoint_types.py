import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from speckerlab.disjoint_types import (
    BadParametersError,
    DisjointType,
    EMPTY_TYPE,
    IndexOutOfRangeError,
    NotDisjointError,
    OddLengthError,
    TypeAlgebraError,
    UnbalancedTypeError,
    UnequalSizesError,
    all_types,
    as_ordinal_set,
    canonical_type,
    concat,
    end_extends,
    format_ordinal_set,
    ones_before_zeros,
    parse_ordinal_set,
    select_indices,
    ssup,
    tp,
    validate_type,
)


@st.composite
def disjoint_types(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    zeros = draw(
        st.sets(st.integers(0, 2 * n - 1), min_size=n, max_size=n)
    ) if n else set()
    bits = "".join("0" if i in zeros else "1" for i in range(2 * n))
    return DisjointType(bits)


class TestValidate:
    def test_worked_example(self):
        t = validate_type("001011")
        assert t.n == 3

    def test_empty(self):
        assert validate_type("").n == 0

    def test_odd_length(self):
        with pytest.raises(OddLengthError):
            validate_type("011")

    def test_unbalanced(self):
        with pytest.raises(UnbalancedTypeError):
            validate_type("0111")

    def test_int_sequence(self):
        assert validate_type([0, 1, 0, 1]).bits == "0101"
        with pytest.raises(TypeAlgebraError):
            validate_type([0, 2])

    def test_non_binary_string(self):
        with pytest.raises(TypeAlgebraError):
            validate_type("0a")


class TestTp:
    def test_worked_example(self):
        assert tp((0, 1, 3), (2, 4, 5)).bits == "001011"

    def test_singletons(self):
        assert tp((0,), (1,)).bits == "01"

    def test_interleaved_pairs(self):
        assert tp((5, 9), (7, 12)).bits == "0101"

    def test_not_disjoint(self):
        with pytest.raises(NotDisjointError):
            tp((0, 1), (1, 2))

    def test_unequal_sizes(self):
        with pytest.raises(UnequalSizesError):
            tp((0, 1), (2,))

    @settings(max_examples=100)
    @given(st.sets(st.integers(0, 200), min_size=2, max_size=10))
    def test_complement_swap(self, pool):
        if len(pool) % 2:
            pool.discard(max(pool))
        items = sorted(pool)
        half = len(items) // 2
        a, b = tuple(items[:half]), tuple(items[half:])
        assert tp(b, a).bits == tp(a, b).complement().bits

    @settings(max_examples=100)
    @given(disjoint_types(), st.data())
    def test_round_trip(self, t, data):
        # splitting any 2n values by the word's bits must recover the word
        values = data.draw(
            st.sets(st.integers(0, 500), min_size=2 * t.n, max_size=2 * t.n)
        )
        merged = sorted(values)
        a = tuple(x for x, bit in zip(merged, t.bits) if bit == "0")
        b = tuple(x for x, bit in zip(merged, t.bits) if bit == "1")
        if t.n:
            assert tp(a, b).bits == t.bits


class TestConcat:
    def test_direct(self):
        assert concat(validate_type("01"), validate_type("01")).bits == "0101"
        assert concat(validate_type("0011"), validate_type("01")).bits == "001101"

    def test_identity(self):
        t = validate_type("001011")
        assert concat(t, EMPTY_TYPE).bits == t.bits
        assert concat(EMPTY_TYPE, t).bits == t.bits

    @settings(max_examples=50)
    @given(disjoint_types(3), disjoint_types(3), disjoint_types(3))
    def test_associative(self, t0, t1, t2):
        assert concat(concat(t0, t1), t2) == concat(t0, concat(t1, t2))


class TestCanonical:
    def test_paper_example(self):
        assert canonical_type(5, 2).bits == "0001010111"

    def test_smallest(self):
        assert canonical_type(2, 1).bits == "0011"

    def test_piecewise(self):
        # evaluated case by case: i<s -> 0, middle alternates from 0, tail 1
        assert canonical_type(3, 1).bits == "001011"

    @pytest.mark.parametrize("n,s", [(3, 0), (3, 3), (1, 1), (0, 0), (4, 5)])
    def test_bad_parameters(self, n, s):
        with pytest.raises(BadParametersError):
            canonical_type(n, s)

    def test_structure(self):
        for n in range(2, 9):
            for s in range(1, n):
                bits = canonical_type(n, s).bits
                assert bits[:s] == "0" * s
                assert bits[len(bits) - s :] == "1" * s
                assert bits[s : len(bits) - s] == "01" * (n - s)


class TestOnesBeforeZeros:
    def test_worked_example(self):
        assert ones_before_zeros(validate_type("001011")) == (0, 0, 1)

    def test_blocks(self):
        assert ones_before_zeros(validate_type("0011")) == (0, 0)
        assert ones_before_zeros(validate_type("0101")) == (0, 1)

    def test_canonical_pattern(self):
        # s leading zeros from the prefix, then 0..n-s-1 from the middle pairs
        for n in range(2, 8):
            for s in range(1, n):
                expected = (0,) * s + tuple(range(n - s))
                assert ones_before_zeros(canonical_type(n, s)) == expected


class TestAllTypes:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 2), (2, 6), (3, 20)])
    def test_counts(self, n, count):
        types = list(all_types(n))
        assert len(types) == count
        assert len({t.bits for t in types}) == count


class TestOrdinalSets:
    def test_select(self):
        assert select_indices((3, 7, 9, 12), {0, 2}) == (3, 9)

    def test_select_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            select_indices((3, 7), {2})

    def test_ssup(self):
        assert ssup((3, 7, 9)) == 10
        assert ssup(()) == 0

    def test_end_extends(self):
        assert end_extends((3, 7), (3, 7, 12))
        assert not end_extends((3, 7), (3, 8, 12))
        assert end_extends((), (1, 2))

    def test_not_increasing(self):
        with pytest.raises(TypeAlgebraError):
            as_ordinal_set((3, 3))

    def test_parse_format(self):
        assert parse_ordinal_set("3,7,9") == (3, 7, 9)
        assert parse_ordinal_set("") == ()
        assert format_ordinal_set((3, 7, 9)) == "3,7,9"
