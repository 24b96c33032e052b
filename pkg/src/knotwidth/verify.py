"""Reports and the exhaustive identity sweep behind ``knotwidth verify``."""

from __future__ import annotations

import dataclasses
import json
from typing import Callable, Iterable

from . import diagram as dg
from . import words
from .reduction import SearchLimitExceeded, node_budget

# worked example: a two-block position of width 28
ANCHOR_WORD = "mmmMmMMM"
ANCHOR_WIDTH = 28


@dataclasses.dataclass
class Report:
    input: str
    word: str
    width_word: int
    width_thick_thin: int
    width_profile: int
    bridge: int
    bridge_thin: bool
    q: int | None = None
    twists: int | None = None
    sign: str | None = None
    cable_word: str | None = None
    cable_width: int | None = None
    cable_bridge: int | None = None
    width_scaling_ok: bool | None = None
    bridge_scaling_ok: bool | None = None
    components: int | None = None
    writhe: int | None = None
    cable_components: int | None = None
    cable_writhe: int | None = None
    cable_slope_p: int | None = None

    @property
    def widths_agree(self) -> bool:
        return self.width_word == self.width_thick_thin == self.width_profile

    @property
    def ok(self) -> bool:
        return self.widths_agree and self.width_scaling_ok is not False and self.bridge_scaling_ok is not False

    def record(self) -> str:
        return json.dumps({k: v for k, v in dataclasses.asdict(self).items() if v is not None})

    def human(self) -> str:
        lines = [
            f"input:       {self.input}",
            f"word:        {self.word}",
            f"width:       {self.width_word} (block formula) / {self.width_thick_thin} (thick/thin) / {self.width_profile} (level sum)",
            f"bridge:      {self.bridge}",
            f"bridge-thin: {'yes' if self.bridge_thin else 'no'}",
        ]
        if self.writhe is not None:
            lines.append(f"writhe:      {self.writhe}")
        if self.q is not None:
            lines.append(f"cable:       q={self.q} twists={self.twists} sign={self.sign}")
            lines.append(f"cable word:  {self.cable_word}")
            lines.append(
                f"cable width: {self.cable_width} = {self.q}^2 * {self.width_word}: "
                f"{'ok' if self.width_scaling_ok else 'FAILED'}"
            )
            lines.append(
                f"cable bridge: {self.cable_bridge} = {self.q} * {self.bridge}: "
                f"{'ok' if self.bridge_scaling_ok else 'FAILED'}"
            )
        if self.cable_components is not None:
            lines.append(f"cable components: {self.cable_components}")
            lines.append(f"cable writhe: {self.cable_writhe}")
        if self.cable_slope_p is not None:
            lines.append(f"cable slope: ({self.cable_slope_p},{self.q})")
        return "\n".join(lines)


def word_report(word: words.WordLike, label: str | None = None) -> Report:
    word = words.as_word(word)
    verdict = words.validate_zhat(word)
    if not verdict.member:
        raise words.NotInZhat(verdict)
    return Report(
        input=label if label is not None else str(word),
        word=str(word),
        width_word=words.width_from_word(word),
        width_thick_thin=words.width_from_thick_thin(words.thick_thin(word)),
        width_profile=words.width_from_profile(words.level_profile(word)),
        bridge=words.bridge_number(word),
        bridge_thin=words.is_bridge_thin(word),
    )


def diagram_report(diagram: dg.MorseDiagram, label: str) -> Report:
    report = word_report(dg.critical_word(diagram), label)
    report.components = 1
    report.writhe = dg.writhe(diagram)
    return report


def add_word_cable(report: Report, q: int, twists: int = 0, sign: str = "+") -> words.MorseWord:
    cabled = words.cable_word(report.word, q)
    report.q, report.twists, report.sign = q, twists, sign
    report.cable_word = str(cabled)
    report.cable_width = words.width_from_word(cabled)
    report.cable_bridge = words.bridge_number(cabled)
    report.width_scaling_ok = report.cable_width == q * q * report.width_word
    report.bridge_scaling_ok = report.cable_bridge == q * report.bridge
    return cabled


def add_diagram_cable(report: Report, diagram: dg.MorseDiagram, params: dg.CableParams) -> dg.MorseDiagram:
    """Cable the diagram and fill in scaled values. Multi-component cables keep width fields from the word."""
    cabled = dg.cable(diagram, params)
    sign = "+" if params.twist_sign > 0 else "-"
    add_word_cable(report, params.q, params.twists, sign)
    report.cable_components = dg.component_count(cabled)
    report.cable_writhe = dg.writhe(cabled)
    report.cable_slope_p = dg.cable_slope(diagram, params)[0]
    if report.cable_components == 1:
        report.width_scaling_ok = dg.width(cabled) == params.q ** 2 * report.width_word
        report.bridge_scaling_ok = dg.bridge(cabled) == params.q * report.bridge
    return cabled


@dataclasses.dataclass(frozen=True)
class Counterexample:
    word: str
    identity: str
    expected: int | bool
    got: int | bool
    q: int | None = None

    def __str__(self) -> str:
        at = f" with q={self.q}" if self.q is not None else ""
        return f"{self.identity} fails for {self.word}{at}: expected {self.expected}, got {self.got}"


@dataclasses.dataclass
class VerifyResult:
    words_checked: int = 0
    pairs_checked: int = 0
    identities_checked: int = 0
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def check_word(
    word: words.MorseWord,
    q_list: Iterable[int],
    width_fn: Callable[[words.MorseWord], int],
    result: VerifyResult,
) -> Counterexample | None:
    s = str(word)
    w = width_fn(word)
    tt = words.width_from_thick_thin(words.thick_thin(word))
    lp = words.width_from_profile(words.level_profile(word))
    result.identities_checked += 2
    if tt != w:
        return Counterexample(s, "width: block formula = thick/thin", tt, w)
    if lp != w:
        return Counterexample(s, "width: block formula = level sum", lp, w)
    b = words.bridge_number(word)
    single = words.block_form(word).n == 1
    result.identities_checked += 1
    if (w == 2 * b * b) != single:
        return Counterexample(s, "bridge-thin iff single block", single, w == 2 * b * b)
    n = words.block_form(word).n
    for q in q_list:
        cabled = words.cable_word(word, q)
        result.pairs_checked += 1
        result.identities_checked += 3
        verdict = words.validate_zhat(cabled)
        if not verdict.member or verdict.blocks.n != n:
            return Counterexample(s, "cable closure in Z-hat", True, False, q)
        cw = width_fn(cabled)
        if cw != q * q * w:
            return Counterexample(s, "w(cable) = q^2 w", q * q * w, cw, q)
        cb = words.bridge_number(cabled)
        if cb != q * b:
            return Counterexample(s, "b(cable) = q b", q * b, cb, q)
    return None


def verify(
    max_bridge: int,
    max_blocks: int,
    q_list: Iterable[int],
    width_fn: Callable[[words.MorseWord], int] | None = None,
    node_limit: int | None = None,
) -> VerifyResult:
    """
    Check the worked example, then every enumerated word against triple
    agreement, the bridge-thin characterisation and cable scaling for each q.
    Stops at the first counterexample.
    """
    if width_fn is None:
        width_fn = words.width_from_word
    q_list = list(q_list)
    if any(q < 1 for q in q_list):
        raise ValueError("every q must be >= 1")
    limit = node_budget() if node_limit is None else node_limit
    result = VerifyResult()

    anchor = words.MorseWord(ANCHOR_WORD)
    got = width_fn(anchor)
    result.identities_checked += 1
    if got != ANCHOR_WIDTH:
        result.counterexample = Counterexample(ANCHOR_WORD, "worked example width", ANCHOR_WIDTH, got)
        return result

    for word in words.enumerate_zhat(max_bridge, max_blocks):
        result.words_checked += 1
        if result.words_checked > limit:
            raise SearchLimitExceeded(limit, result.words_checked)
        bad = check_word(word, q_list, width_fn, result)
        if bad is not None:
            result.counterexample = bad
            break
    return result
