"""
Width-changing moves as word rewrites.

* type I at block i deletes one m and one M from block i (cancelling a
  minimum against a maximum); width drops by 2a - 2 where a is the thick
  level of that block;
* type II at letter j swaps an adjacent pair: ``up`` turns ``mM`` into ``Mm``
  (the minimum slides above the maximum, width drops by 4), ``down`` is the
  reverse;
* stabilize at block i inserts one m and one M into block i, inverting type I.

Blocks are numbered from 1, letter positions from 0.
"""

from __future__ import annotations

import collections
import dataclasses
import os
from typing import Iterator

from .words import (
    MAX,
    MIN,
    MorseWord,
    WordLike,
    _require,
    as_word,
    bridge_number,
    validate_zhat,
    width_from_word,
)

TYPE_I = "typeI"
TYPE_II = "typeII"
STABILIZE = "stabilize"
UP = "up"
DOWN = "down"

NODE_BUDGET_ENV = "KNOTWIDTH_NODE_BUDGET"
DEFAULT_NODE_BUDGET = 10**6


class MoveError(ValueError):
    pass


class SearchLimitExceeded(RuntimeError):
    def __init__(self, limit: int, visited: int):
        super().__init__(f"search exceeded node bound {limit} after visiting {visited} words")
        self.limit = limit
        self.visited = visited


@dataclasses.dataclass(frozen=True)
class Move:
    kind: str
    index: int
    direction: str | None = None

    def __str__(self) -> str:
        if self.kind == TYPE_II:
            return f"{self.kind}:{self.index}:{self.direction}"
        return f"{self.kind}:{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Move":
        parts = text.split(":")
        if parts[0] == TYPE_II and len(parts) == 3 and parts[2] in (UP, DOWN):
            return cls(TYPE_II, int(parts[1]), parts[2])
        if parts[0] in (TYPE_I, STABILIZE) and len(parts) == 2:
            return cls(parts[0], int(parts[1]))
        raise ValueError(f"cannot parse move {text!r}")


def thick_level(word: WordLike, block: int) -> int:
    """Strand count at the top of the m-run of ``block``."""
    _, blocks = _require(word)
    _check_block(blocks.n, block)
    return 2 * (sum(blocks.alphas[:block]) - sum(blocks.betas[:block - 1]))


def _check_block(n: int, block: int) -> None:
    if not 1 <= block <= n:
        raise MoveError(f"block {block} out of range 1..{n}")


def apply_type_I(word: WordLike, block: int) -> MorseWord:
    word, blocks = _require(word)
    _check_block(blocks.n, block)
    if len(word) == 2:
        raise MoveError("cannot cancel the last minimum/maximum pair of 'mM'")
    alphas, betas = list(blocks.alphas), list(blocks.betas)
    alphas[block - 1] -= 1
    betas[block - 1] -= 1
    return MorseWord.from_blocks(alphas, betas)


def apply_type_II(word: WordLike, position: int, direction: str = UP) -> MorseWord:
    word, _ = _require(word)
    letters = word.letters
    if not 0 <= position < len(letters) - 1:
        raise MoveError(f"position {position} out of range")
    want = {UP: MIN + MAX, DOWN: MAX + MIN}.get(direction)
    if want is None:
        raise MoveError(f"direction must be {UP!r} or {DOWN!r}")
    pair = letters[position:position + 2]
    if pair != want:
        raise MoveError(f"letters {pair!r} at {position} cannot move {direction}")
    swapped = MorseWord(letters[:position] + pair[::-1] + letters[position + 2:])
    verdict = validate_zhat(swapped)
    if not verdict.member:
        raise MoveError(f"swap leaves Z-hat: {verdict.reason}")
    return swapped


def stabilize(word: WordLike, block: int) -> MorseWord:
    word, blocks = _require(word)
    _check_block(blocks.n, block)
    alphas, betas = list(blocks.alphas), list(blocks.betas)
    alphas[block - 1] += 1
    betas[block - 1] += 1
    return MorseWord.from_blocks(alphas, betas)


def apply_move(word: WordLike, move: Move) -> MorseWord:
    if move.kind == TYPE_I:
        return apply_type_I(word, move.index)
    if move.kind == TYPE_II:
        return apply_type_II(word, move.index, move.direction)
    if move.kind == STABILIZE:
        return stabilize(word, move.index)
    raise MoveError(f"unknown move kind {move.kind!r}")


def expected_delta(word: WordLike, move: Move) -> int:
    """Width change predicted from the thick level, without rewriting the word."""
    if move.kind == TYPE_I:
        return -(2 * thick_level(word, move.index) - 2)
    if move.kind == TYPE_II:
        return -4 if move.direction == UP else 4
    # the new thick level is two above the old one
    return 2 * (thick_level(word, move.index) + 2) - 2


def applicable_moves(word: WordLike, kinds=(TYPE_I, TYPE_II, STABILIZE)) -> Iterator[tuple[Move, MorseWord]]:
    """All legal moves in a fixed order: type I, type II up, type II down, stabilize."""
    word, blocks = _require(word)
    if TYPE_I in kinds and len(word) > 2:
        for i in range(1, blocks.n + 1):
            yield Move(TYPE_I, i), apply_type_I(word, i)
    if TYPE_II in kinds:
        for direction in (UP, DOWN):
            for j in range(len(word) - 1):
                try:
                    yield Move(TYPE_II, j, direction), apply_type_II(word, j, direction)
                except MoveError:
                    pass
    if STABILIZE in kinds:
        for i in range(1, blocks.n + 1):
            yield Move(STABILIZE, i), stabilize(word, i)


@dataclasses.dataclass(frozen=True)
class TraceStep:
    move: Move
    word: MorseWord
    delta: int

    def __str__(self) -> str:
        return f"{self.move} {self.word} {self.delta:+d}"


@dataclasses.dataclass(frozen=True)
class ReductionTrace:
    start: MorseWord
    steps: tuple[TraceStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> MorseWord:
        return self.steps[-1].word if self.steps else self.start

    def widths(self) -> list[int]:
        return [width_from_word(self.start)] + [width_from_word(s.word) for s in self.steps]

    def check(self) -> None:
        """Replay every move and confirm the recorded word and delta."""
        word = self.start
        for k, step in enumerate(self.steps):
            after = apply_move(word, step.move)
            if after != step.word:
                raise AssertionError(f"step {k}: {step.move} gives {after}, trace says {step.word}")
            delta = width_from_word(after) - width_from_word(word)
            if delta != step.delta or delta != expected_delta(word, step.move):
                raise AssertionError(f"step {k}: delta {delta} disagrees with record {step.delta}")
            word = after

    def serialize(self) -> str:
        return "".join(f"{step}\n" for step in self.steps)

    @classmethod
    def parse(cls, start: WordLike, text: str) -> "ReductionTrace":
        steps = []
        for line in text.splitlines():
            if not line.strip():
                continue
            move, word, delta = line.split()
            steps.append(TraceStep(Move.parse(move), MorseWord(word), int(delta)))
        return cls(as_word(start), tuple(steps))


def _step(word: MorseWord, move: Move) -> TraceStep:
    after = apply_move(word, move)
    return TraceStep(move, after, width_from_word(after) - width_from_word(word))


def _greedy_move(word: MorseWord) -> Move | None:
    _, blocks = _require(word)
    if len(word) > 2:
        levels = [thick_level(word, i) for i in range(1, blocks.n + 1)]
        best = max(levels)
        return Move(TYPE_I, levels.index(best) + 1)
    for j in range(len(word) - 1):
        try:
            apply_type_II(word, j, UP)
        except MoveError:
            continue
        return Move(TYPE_II, j, UP)
    return None


def reduce(word: WordLike) -> tuple[MorseWord, ReductionTrace]:
    """
    Greedy width reduction using only width-decreasing moves.

    Prefers type I at the highest thick level (leftmost on ties), otherwise the
    leftmost type II up-move. This is a word-level procedure; it says nothing
    about the minimal width of any particular knot.
    """
    word, _ = _require(word)
    start, steps = word, []
    while (move := _greedy_move(word)) is not None:
        step = _step(word, move)
        steps.append(step)
        word = step.word
    return word, ReductionTrace(start, tuple(steps))


@dataclasses.dataclass(frozen=True)
class ExploreResult:
    min_width: int
    word: MorseWord
    trace: ReductionTrace
    visited: int


def node_budget() -> int:
    value = os.environ.get(NODE_BUDGET_ENV)
    return int(value) if value else DEFAULT_NODE_BUDGET


def explore(
    word: WordLike,
    stabilization_budget: int = 0,
    width_cap: int | None = None,
    node_limit: int | None = None,
) -> ExploreResult:
    """
    Breadth-first search over all four move kinds.

    Words are admitted while their net stabilization count (equivalently, the
    bridge number above the start's) stays within ``stabilization_budget`` and
    their width stays within ``width_cap`` (default: the start width). Returns
    the least width seen and a shortest witness reaching it; ties go to the
    word discovered first. Raises ``SearchLimitExceeded`` rather than truncate.
    """
    start, _ = _require(word)
    if stabilization_budget < 0:
        raise ValueError("stabilization budget must be non-negative")
    cap = width_from_word(start) if width_cap is None else width_cap
    limit = node_budget() if node_limit is None else node_limit
    max_bridge = bridge_number(start) + stabilization_budget

    parent: dict[MorseWord, tuple[MorseWord, Move] | None] = {start: None}
    queue = collections.deque([start])
    best, best_width = start, width_from_word(start)
    while queue:
        current = queue.popleft()
        for move, nxt in applicable_moves(current):
            if nxt in parent:
                continue
            w = width_from_word(nxt)
            if w > cap or bridge_number(nxt) > max_bridge:
                continue
            parent[nxt] = (current, move)
            if len(parent) > limit:
                raise SearchLimitExceeded(limit, len(parent))
            if w < best_width:
                best, best_width = nxt, w
            queue.append(nxt)

    path = []
    node = best
    while parent[node] is not None:
        prev, move = parent[node]
        path.append(_step(prev, move))
        node = prev
    return ExploreResult(best_width, best, ReductionTrace(start, tuple(reversed(path))), len(parent))
