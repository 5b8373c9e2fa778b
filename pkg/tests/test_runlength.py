import pytest
from hypothesis import given, strategies as st

from stickyrecon.errors import InvalidInput
from stickyrecon.runlength import (
    RunProfile,
    Sequence,
    decode,
    encode,
    format_sequence,
    parse_sequence,
    run_count,
)


def seq(text, q=4):
    return parse_sequence(text, q)


class TestEncode:
    def test_worked_example(self):
        p = encode(seq("00311120"))
        assert p.composition == (0, 3, 1, 2, 0)
        assert p.lengths == (2, 1, 3, 1, 1)

    def test_single_symbol(self):
        assert encode(seq("0")) == RunProfile((0,), (1,))

    def test_alternating(self):
        assert encode(seq("0101")) == RunProfile((0, 1, 0, 1), (1, 1, 1, 1))

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            Sequence((), 4)

    def test_symbol_outside_alphabet(self):
        with pytest.raises(InvalidInput):
            Sequence((0, 4), 4)


class TestDecode:
    def test_worked_example(self):
        assert format_sequence(decode(RunProfile((0, 3, 1, 2, 0), (2, 1, 3, 1, 1)))) == "00311120"

    @pytest.mark.parametrize(
        "comp, lengths, expected",
        [((5,), (3,), "555"), ((0, 1), (1, 1), "01")],
    )
    def test_small(self, comp, lengths, expected):
        assert format_sequence(decode(RunProfile(comp, lengths))) == expected

    def test_adjacent_equal_letters_rejected(self):
        with pytest.raises(InvalidInput):
            RunProfile((1, 1), (1, 2))

    def test_zero_length_rejected(self):
        with pytest.raises(InvalidInput):
            RunProfile((0, 1), (1, 0))

    def test_mismatched_lengths_rejected(self):
        with pytest.raises(InvalidInput):
            RunProfile((0, 1), (1,))


class TestRunCount:
    def test_examples(self):
        assert run_count(seq("00311120")) == 5
        assert run_count(seq("0")) == 1
        assert run_count(seq("0" * 17)) == 1


class TestTextForm:
    def test_comma_form(self):
        x = parse_sequence("0,0,3,1,1,1,2,0")
        assert x == seq("00311120")

    def test_large_alphabet_uses_commas(self):
        x = parse_sequence("11,2,2,0")
        assert x.q == 12
        assert format_sequence(x) == "11,2,2,0"

    def test_small_alphabet_is_compact(self):
        assert format_sequence(Sequence((0, 9, 9), 10)) == "099"

    @pytest.mark.parametrize("bad", ["", "  ", "01a", "1,,2", "-1"])
    def test_garbage(self, bad):
        with pytest.raises(InvalidInput):
            parse_sequence(bad)


symbols = st.lists(st.integers(0, 11), min_size=1, max_size=40)


@given(symbols)
def test_roundtrip_sequence(xs):
    x = Sequence(tuple(xs), 12)
    p = encode(x)
    assert decode(p, 12) == x
    assert sum(p.lengths) == len(x)
    assert all(a != b for a, b in zip(p.composition, p.composition[1:]))
    assert run_count(x) == len(p.composition)


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(1, 6)), min_size=1, max_size=12))
def test_roundtrip_profile(pairs):
    comp, lengths = [], []
    for c, u in pairs:
        if comp and comp[-1] == c:
            continue
        comp.append(c)
        lengths.append(u)
    p = RunProfile(tuple(comp), tuple(lengths))
    assert encode(decode(p, 6)) == p


@given(symbols)
def test_text_roundtrip(xs):
    x = Sequence(tuple(xs), 12)
    assert parse_sequence(format_sequence(x), 12) == x
