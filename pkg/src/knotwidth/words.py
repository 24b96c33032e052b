"""
Morse words and their width calculus.

A knot position with respect to a height function is recorded, bottom to top,
as a word over the alphabet {m, M}: ``m`` for a minimum, ``M`` for a maximum.
The words that can occur form the set Ẑ of words

    m^{α_1} M^{β_1} ... m^{α_n} M^{β_n}

with every exponent positive, every proper prefix of blocks containing strictly
more minima than maxima, and equal totals. This module validates membership,
computes the three equivalent width functionals (level sums, thick/thin squares
and the block formula) and implements the exponent-scaling cable operator.

All arithmetic is on Python ints, so widths are exact at any size.
"""

from __future__ import annotations

import dataclasses
import itertools
import re
from typing import Iterator, Sequence, Union

MIN = "m"
MAX = "M"

_CARET = re.compile(r"([mM])(?:\^\{?(\d+)\}?|(\d+))?")


class NotInZhat(ValueError):
    """Raised when an operation that needs a Ẑ member is handed something else."""

    def __init__(self, verdict: "ZhatVerdict"):
        super().__init__(verdict.reason)
        self.verdict = verdict


@dataclasses.dataclass(frozen=True)
class MorseWord:
    """An immutable letter sequence over {m, M}, read bottom to top."""

    letters: str

    def __post_init__(self):
        if not isinstance(self.letters, str):
            object.__setattr__(self, "letters", "".join(self.letters))

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __getitem__(self, j):
        return self.letters[j]

    @classmethod
    def parse(cls, text: str) -> "MorseWord":
        return parse_word(text)

    @classmethod
    def from_blocks(cls, alphas: Sequence[int], betas: Sequence[int]) -> "MorseWord":
        if len(alphas) != len(betas):
            raise ValueError("alphas and betas must have equal length")
        return cls("".join(MIN * a + MAX * b for a, b in zip(alphas, betas)))

    @property
    def is_member(self) -> bool:
        return validate_zhat(self).member

    def caret(self) -> str:
        """Compact caret form, e.g. ``m^3M^1m^1M^3``."""
        return "".join(f"{c}^{len(list(g))}" for c, g in itertools.groupby(self.letters))


WordLike = Union[MorseWord, str]


def parse_word(text: str) -> MorseWord:
    """
    Parse a word, accepting caret-exponent sugar.

    ``"m^3M^1m^1M^3"``, ``"m3M1m1M3"``, ``"m^{3}MmM^{3}"`` and ``"mmmMmMMM"``
    all parse to the same word. Whitespace is ignored. Raises ``ValueError`` with
    the offending column on anything else.
    """
    s = "".join(text.split())
    out = []
    pos = 0
    while pos < len(s):
        match = _CARET.match(s, pos)
        if match is None:
            raise ValueError(f"column {pos + 1}: unexpected character {s[pos]!r} in word")
        letter, exp1, exp2 = match.groups()
        exp = exp1 if exp1 is not None else exp2
        out.append(letter * (int(exp) if exp is not None else 1))
        pos = match.end()
    return MorseWord("".join(out))


def as_word(word: WordLike) -> MorseWord:
    if isinstance(word, MorseWord):
        return word
    return parse_word(word)


@dataclasses.dataclass(frozen=True)
class BlockForm:
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.alphas)

    def word(self) -> MorseWord:
        return MorseWord.from_blocks(self.alphas, self.betas)


@dataclasses.dataclass(frozen=True)
class ZhatVerdict:
    """
    Outcome of a membership test.

    ``condition`` is None for members, otherwise the index of the first violated
    condition: 0 for a letter outside the alphabet, 1 for a missing or empty
    block, 2 for a prefix that fails to dominate (``position`` is the block
    index j), 3 for unequal totals.
    """

    member: bool
    condition: int | None = None
    position: int | None = None
    reason: str = "member of Z-hat"
    blocks: BlockForm | None = None

    def __bool__(self) -> bool:
        return self.member


def _runs(letters: str) -> list[tuple[str, int]]:
    return [(c, len(list(g))) for c, g in itertools.groupby(letters)]


def validate_zhat(word: WordLike) -> ZhatVerdict:
    """Decide membership in Ẑ, reporting the first violated condition."""
    letters = word.letters if isinstance(word, MorseWord) else word
    for j, c in enumerate(letters):
        if c not in (MIN, MAX):
            return ZhatVerdict(False, 0, j, f"letter {c!r} at position {j} is not m or M")
    runs = _runs(letters)
    if not runs:
        return ZhatVerdict(False, 1, None, "condition 1 violated: empty word has no blocks")
    if runs[0][0] != MIN:
        return ZhatVerdict(False, 1, 1, "condition 1 violated: alpha_1 = 0 (word starts with M)")
    if runs[-1][0] != MAX:
        n = (len(runs) + 1) // 2
        return ZhatVerdict(False, 1, n, f"condition 1 violated: beta_{n} = 0 (word ends with m)")
    alphas = tuple(k for _, k in runs[0::2])
    betas = tuple(k for _, k in runs[1::2])
    n = len(alphas)
    up = down = 0
    for j in range(n - 1):
        up += alphas[j]
        down += betas[j]
        if up <= down:
            return ZhatVerdict(
                False, 2, j + 1,
                f"condition 2 violated at j={j + 1}: {up} minima vs {down} maxima",
            )
    up += alphas[-1]
    down += betas[-1]
    if up != down:
        return ZhatVerdict(False, 3, None, f"condition 3 violated: {up} minima vs {down} maxima")
    return ZhatVerdict(True, blocks=BlockForm(alphas, betas))


def _require(word: WordLike) -> tuple[MorseWord, BlockForm]:
    word = as_word(word)
    verdict = validate_zhat(word)
    if not verdict.member:
        raise NotInZhat(verdict)
    return word, verdict.blocks


def block_form(word: WordLike) -> BlockForm:
    return _require(word)[1]


@dataclasses.dataclass(frozen=True)
class LevelProfile:
    """Regular-level intersection counts x_1..x_p of a knot position."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        if not counts:
            raise ValueError("level profile must be non-empty")
        if counts[0] != 2 or counts[-1] != 2:
            raise ValueError("level profile must start and end at 2")
        for x, y in zip(counts, counts[1:]):
            if abs(x - y) != 2:
                raise ValueError(f"consecutive levels {x}, {y} differ by other than 2")
        if any(x <= 0 or x % 2 for x in counts):
            raise ValueError("level counts must be positive and even")


@dataclasses.dataclass(frozen=True)
class ThickThinTuple:
    """Alternating thick/thin counts (a_1, b_1, a_2, ..., b_{n-1}, a_n)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) % 2 != 1:
            raise ValueError("thick/thin tuple must have odd length")
        if any(x < 2 or x % 2 for x in entries):
            raise ValueError("thick/thin entries must be even and at least 2")
        for k in range(1, len(entries), 2):
            if not (entries[k] < entries[k - 1] and entries[k] < entries[k + 1]):
                raise ValueError(f"thin entry {entries[k]} at {k} is not a local minimum")

    @property
    def thick(self) -> tuple[int, ...]:
        return self.entries[0::2]

    @property
    def thin(self) -> tuple[int, ...]:
        return self.entries[1::2]


def level_profile(word: WordLike) -> LevelProfile:
    word, _ = _require(word)
    counts = list(itertools.accumulate(2 if c == MIN else -2 for c in word.letters))
    # the final letter closes the knot; its level is zero and not regular
    return LevelProfile(tuple(counts[:-1]))


def width_from_profile(profile: LevelProfile | Sequence[int]) -> int:
    if not isinstance(profile, LevelProfile):
        profile = LevelProfile(tuple(profile))
    return sum(profile.counts)


def thick_thin(word: WordLike) -> ThickThinTuple:
    _, blocks = _require(word)
    entries = []
    height = 0
    for k, (a, b) in enumerate(zip(blocks.alphas, blocks.betas)):
        height += a
        entries.append(2 * height)
        height -= b
        if k < blocks.n - 1:
            entries.append(2 * height)
    return ThickThinTuple(tuple(entries))


def width_from_thick_thin(tt: ThickThinTuple | Sequence[int]) -> int:
    """Half the difference of the squared thick and thin counts."""
    if not isinstance(tt, ThickThinTuple):
        tt = ThickThinTuple(tuple(tt))
    twice = sum(a * a for a in tt.thick) - sum(b * b for b in tt.thin)
    return twice // 2


def width_from_word(word: WordLike) -> int:
    """Block formula ``2 (Σα)^2 - 4 Σ_{i>j} α_i β_j``."""
    _, blocks = _require(word)
    alphas, betas = blocks.alphas, blocks.betas
    cross = 0
    betas_below = 0
    for i in range(blocks.n):
        cross += alphas[i] * betas_below
        betas_below += betas[i]
    return 2 * sum(alphas) ** 2 - 4 * cross


def bridge_number(word: WordLike) -> int:
    return sum(block_form(word).alphas)


def cable_word(word: WordLike, q: int) -> MorseWord:
    """Multiply every block exponent by ``q``."""
    if q < 1:
        raise ValueError(f"cable multiplicity q must be >= 1, got {q}")
    _, blocks = _require(word)
    return MorseWord.from_blocks(
        tuple(q * a for a in blocks.alphas), tuple(q * b for b in blocks.betas)
    )


def is_bridge_word(word: WordLike) -> bool:
    return block_form(word).n == 1


def is_bridge_thin(word: WordLike) -> bool:
    return width_from_word(word) == 2 * bridge_number(word) ** 2


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # combinations() yields cut points in lex order, which gives lex-ordered parts
    for cuts in itertools.combinations(range(1, total), parts - 1):
        edges = (0,) + cuts + (total,)
        yield tuple(edges[k + 1] - edges[k] for k in range(parts))


def enumerate_zhat(max_bridge: int, max_blocks: int) -> Iterator[MorseWord]:
    """
    Yield every Ẑ member with at most ``max_bridge`` minima and at most
    ``max_blocks`` blocks, each exactly once.

    Order is lexicographic in (bridge number, block count, α-sequence, β-sequence).
    """
    for bridge in range(1, max_bridge + 1):
        for n in range(1, min(max_blocks, bridge) + 1):
            for alphas in _compositions(bridge, n):
                prefix = list(itertools.accumulate(alphas))
                for betas in _compositions(bridge, n):
                    down = 0
                    for j in range(n - 1):
                        down += betas[j]
                        if prefix[j] <= down:
                            break
                    else:
                        yield MorseWord.from_blocks(alphas, betas)
