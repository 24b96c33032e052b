import itertools

import pytest
from hypothesis import given, settings, strategies as st

from knotwidth import words as W
from knotwidth.words import MorseWord, NotInZhat

from oracles import brute_force_zhat, level_sum_width

FIG5 = "mmmMmMMM"


def zhat_words():
    """Random Ẑ members built from a random positive Dyck-style walk."""
    return st.lists(st.booleans(), min_size=0, max_size=30).map(_walk_to_word)


def _walk_to_word(steps):
    letters, height = ["m"], 1
    for up in steps:
        if up or height == 1:
            letters.append("m")
            height += 1
        else:
            letters.append("M")
            height -= 1
    letters.extend("M" * height)
    return MorseWord("".join(letters))


class TestParse:
    @pytest.mark.parametrize("text", ["m^3M^1m^1M^3", "m3M1m1M3", "m^{3}MmM^{3}", "mmmMmMMM", " m^3 M m M^3 "])
    def test_caret_sugar(self, text):
        assert W.parse_word(text) == MorseWord(FIG5)

    def test_bad_character_reports_column(self):
        with pytest.raises(ValueError, match="column 3"):
            W.parse_word("mmxM")

    def test_caret_roundtrip(self):
        w = MorseWord(FIG5)
        assert w.caret() == "m^3M^1m^1M^3"
        assert W.parse_word(w.caret()) == w


class TestValidate:
    def test_one_bridge(self):
        v = W.validate_zhat("mM")
        assert v.member and v.blocks.n == 1

    def test_figure5(self):
        v = W.validate_zhat(FIG5)
        assert v.member
        assert v.blocks == W.BlockForm((3, 1), (1, 3))

    def test_condition2(self):
        v = W.validate_zhat("mMmM")
        assert not v.member
        assert (v.condition, v.position) == (2, 1)

    @pytest.mark.parametrize(
        "word, condition",
        [("", 1), ("Mm", 1), ("mMm", 1), ("mmM", 3), ("mMM", 3), ("mxM", 0), ("mmMMmM", 2)],
    )
    def test_failures(self, word, condition):
        v = W.validate_zhat(word)
        assert not v and v.condition == condition

    def test_verdict_not_exception(self):
        # non-members produce a verdict, downstream operations refuse them
        assert W.validate_zhat("mMmM").reason.startswith("condition 2")
        with pytest.raises(NotInZhat) as info:
            W.width_from_word("mMmM")
        assert info.value.verdict.condition == 2


class TestBlocks:
    @pytest.mark.parametrize(
        "word, alphas, betas",
        [(FIG5, (3, 1), (1, 3)), ("mmMM", (2,), (2,)), ("mmMmMM", (2, 1), (1, 2))],
    )
    def test_block_form(self, word, alphas, betas):
        bf = W.block_form(word)
        assert (bf.alphas, bf.betas) == (alphas, betas)
        assert bf.word() == MorseWord(word)

    def test_rejects_non_member(self):
        with pytest.raises(NotInZhat):
            W.block_form("mMmM")


class TestWidths:
    @pytest.mark.parametrize(
        "word, profile",
        [("mM", (2,)), ("mmMM", (2, 4, 2)), (FIG5, (2, 4, 6, 4, 6, 4, 2))],
    )
    def test_level_profile(self, word, profile):
        assert W.level_profile(word).counts == profile
        assert W.width_from_profile(profile) == level_sum_width(word)

    @pytest.mark.parametrize("profile, width", [((2,), 2), ((2, 4, 6, 4, 6, 4, 2), 28), ((2, 4, 2), 8)])
    def test_width_from_profile(self, profile, width):
        assert W.width_from_profile(profile) == width

    @pytest.mark.parametrize("bad", [(), (4,), (2, 6, 2), (2, 4, 4, 2)])
    def test_bad_profile(self, bad):
        with pytest.raises(ValueError):
            W.LevelProfile(bad)

    @pytest.mark.parametrize("word, tt", [(FIG5, (6, 4, 6)), ("mmMM", (4,)), ("mmMmMM", (4, 2, 4))])
    def test_thick_thin(self, word, tt):
        assert W.thick_thin(word).entries == tt

    @pytest.mark.parametrize("tt, width", [((4,), 8), ((6, 4, 6), 28), ((4, 2, 4), 14)])
    def test_width_from_thick_thin(self, tt, width):
        assert W.width_from_thick_thin(tt) == width

    def test_thick_thin_cross_checked_by_levels(self):
        assert level_sum_width("mmMmMM") == 14

    @pytest.mark.parametrize("bad", [(4, 2), (4, 4, 4), (3,), (4, 6, 8), (0,)])
    def test_bad_thick_thin(self, bad):
        with pytest.raises(ValueError):
            W.ThickThinTuple(bad)

    @pytest.mark.parametrize("word, width", [(FIG5, 28), ("mM", 2), ("m^10M^10", 200)])
    def test_width_from_word(self, word, width):
        assert W.width_from_word(word) == width
        assert level_sum_width(str(W.as_word(word))) == width

    def test_large_exponents_stay_exact(self):
        b = 10**6
        big = MorseWord.from_blocks((b,), (b,))
        assert W.width_from_word(big) == 2 * b * b
        a = 2 * 10**15
        assert W.width_from_thick_thin((a, a - 2, a)) == a * a - (a - 2) ** 2 // 2


class TestBridge:
    @pytest.mark.parametrize("word, b", [("mM", 1), (FIG5, 4), ("mmMM", 2)])
    def test_bridge_number(self, word, b):
        assert W.bridge_number(word) == b

    @pytest.mark.parametrize(
        "word, bridge, thin",
        [("mmMM", True, True), (FIG5, False, False), ("m^10M^10", True, True)],
    )
    def test_bridge_and_thin(self, word, bridge, thin):
        assert W.is_bridge_word(word) is bridge
        assert W.is_bridge_thin(word) is thin


class TestCable:
    def test_figure_eight_five_cable(self):
        assert W.cable_word("mmMM", 5) == W.parse_word("m^10M^10")

    def test_identity(self):
        assert W.cable_word(FIG5, 1) == MorseWord(FIG5)

    def test_double(self):
        c = W.cable_word(FIG5, 2)
        assert c == W.parse_word("m^6M^2m^2M^6")
        assert W.width_from_word(c) == 112 == level_sum_width(str(c))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            W.cable_word("mM", 0)


class TestEnumerate:
    def test_smallest(self):
        assert [str(w) for w in W.enumerate_zhat(1, 1)] == ["mM"]

    def test_two(self):
        assert {str(w) for w in W.enumerate_zhat(2, 2)} == {"mM", "mmMM"}

    def test_three(self):
        got = {str(w) for w in W.enumerate_zhat(3, 2)}
        assert "mmMmMM" in got and "mmMMmM" not in got

    @pytest.mark.parametrize("b, n", [(1, 1), (3, 3), (4, 2), (5, 5), (6, 4), (7, 3)])
    def test_matches_brute_force(self, b, n):
        got = [str(w) for w in W.enumerate_zhat(b, n)]
        assert len(got) == len(set(got))
        assert set(got) == brute_force_zhat(b, n)

    def test_order(self):
        def key(s):
            bf = W.block_form(s)
            return (sum(bf.alphas), bf.n, bf.alphas, bf.betas)

        got = list(W.enumerate_zhat(7, 4))
        assert got == sorted(got, key=key)

    def test_catalan_counts(self):
        # bridge-b members are primitive Dyck paths: Catalan(b-1) of them
        catalan = [1, 1, 2, 5, 14, 42, 132]
        assert sum(1 for _ in W.enumerate_zhat(7, 7)) == sum(catalan)
        assert sum(1 for _ in W.enumerate_zhat(6, 4)) == 64


SWEEP = list(W.enumerate_zhat(6, 4))


@pytest.mark.parametrize("word", SWEEP, ids=str)
def test_triple_agreement(word):
    a = W.width_from_word(word)
    assert a == W.width_from_thick_thin(W.thick_thin(word)) == W.width_from_profile(W.level_profile(word))


@pytest.mark.parametrize("word", SWEEP, ids=str)
def test_profile_shape_and_extrema(word):
    counts = W.level_profile(word).counts
    assert counts[0] == counts[-1] == 2
    assert all(x % 2 == 0 and x > 0 for x in counts)
    assert all(abs(x - y) == 2 for x, y in zip(counts, counts[1:]))
    padded = (0,) + counts + (0,)
    extrema = tuple(
        padded[k] for k in range(1, len(padded) - 1)
        if (padded[k] - padded[k - 1]) * (padded[k + 1] - padded[k]) < 0
    )
    assert W.thick_thin(word).entries == extrema


@given(zhat_words(), st.sampled_from([1, 2, 3, 5]))
@settings(max_examples=200)
def test_cable_scaling_property(word, q):
    c = W.cable_word(word, q)
    assert W.validate_zhat(c).member
    assert W.block_form(c).n == W.block_form(word).n
    assert W.width_from_word(c) == q * q * W.width_from_word(word)
    assert W.bridge_number(c) == q * W.bridge_number(word)
    assert level_sum_width(str(c)) == W.width_from_word(c)


@given(zhat_words())
def test_bridge_word_iff_unimodal(word):
    counts = W.level_profile(word).counts
    peak = counts.index(max(counts))
    unimodal = all(x < y for x, y in zip(counts[:peak], counts[1:peak + 1])) and all(
        x > y for x, y in zip(counts[peak:], counts[peak + 1:])
    )
    assert W.is_bridge_word(word) == unimodal == (W.block_form(word).n == 1)
    if W.is_bridge_word(word):
        assert W.is_bridge_thin(word)


def test_non_members_in_exhaustive_strings():
    members = brute_force_zhat(4, 4)
    for length in range(1, 9):
        for letters in itertools.product("mM", repeat=length):
            s = "".join(letters)
            v = W.validate_zhat(s)
            assert v.member == (s in members)
