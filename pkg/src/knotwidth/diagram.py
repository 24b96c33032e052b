"""
Planar Morse presentations of knots and links.

A diagram is a bottom-to-top sequence of events acting on a row of strand
positions numbered from 0 at the left:

* ``cup i``   opens a new arc whose two ends occupy positions i and i+1;
* ``cap i``   closes the strands at positions i and i+1;
* ``cross i s`` swaps the strands at positions i and i+1 with crossing sign s.

Signs are oriented crossing signs, so the writhe is their sum and does not
depend on the orientation chosen for a knot.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Sequence

from .words import MorseWord, validate_zhat, width_from_word

CUP = "cup"
CAP = "cap"
CROSS = "cross"


@dataclasses.dataclass(frozen=True)
class Event:
    kind: str
    index: int
    sign: int = 0

    def __post_init__(self):
        if self.kind not in (CUP, CAP, CROSS):
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.kind == CROSS and self.sign not in (1, -1):
            raise ValueError("a crossing needs sign +1 or -1")
        if self.kind != CROSS and self.sign != 0:
            raise ValueError(f"{self.kind} events carry no sign")

    def __str__(self) -> str:
        if self.kind == CROSS:
            return f"cross {self.index} {'+' if self.sign > 0 else '-'}"
        return f"{self.kind} {self.index}"


def Cup(i: int) -> Event:
    return Event(CUP, i)


def Cap(i: int) -> Event:
    return Event(CAP, i)


def Cross(i: int, sign: int | str = 1) -> Event:
    if isinstance(sign, str):
        sign = _parse_sign(sign)
    return Event(CROSS, i, sign)


def _parse_sign(text: str) -> int:
    if text == "+":
        return 1
    if text == "-":
        return -1
    raise ValueError(f"crossing sign must be '+' or '-', got {text!r}")


@dataclasses.dataclass(frozen=True)
class MorseDiagram:
    events: tuple[Event, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    @classmethod
    def parse(cls, text: str) -> "MorseDiagram":
        return parse_diagram(text)

    def emit(self) -> str:
        return emit_diagram(self)

    def strand_counts(self) -> list[int]:
        """Strand count after each event (no validation)."""
        out, s = [], 0
        for ev in self.events:
            s += {CUP: 2, CAP: -2, CROSS: 0}[ev.kind]
            out.append(s)
        return out


@dataclasses.dataclass(frozen=True)
class DiagramVerdict:
    valid: bool
    event: int | None = None
    reason: str = "valid"

    def __bool__(self) -> bool:
        return self.valid


class InvalidDiagram(ValueError):
    def __init__(self, verdict: DiagramVerdict):
        super().__init__(verdict.reason)
        self.verdict = verdict


class NotAKnot(ValueError):
    """Raised when a knot-only quantity is requested for a multi-component diagram."""


@dataclasses.dataclass(frozen=True)
class CableParams:
    q: int
    twists: int = 0
    twist_sign: int = 1

    def __post_init__(self):
        if isinstance(self.twist_sign, str):
            object.__setattr__(self, "twist_sign", _parse_sign(self.twist_sign))
        if self.q < 1:
            raise ValueError(f"cable multiplicity q must be >= 1, got {self.q}")
        if self.twists < 0:
            raise ValueError("twist count must be non-negative")
        if self.twist_sign not in (1, -1):
            raise ValueError("twist sign must be +1 or -1")


def validate(diagram: MorseDiagram) -> DiagramVerdict:
    s = 0
    cups = 0
    for k, ev in enumerate(diagram.events):
        if ev.kind == CUP:
            if not 0 <= ev.index <= s:
                return DiagramVerdict(False, k, f"event {k}: cup {ev.index} out of range for {s} strands")
            s += 2
            cups += 1
        else:
            if s < 2:
                why = "negative strand count" if ev.kind == CAP else "needs two strands"
                return DiagramVerdict(False, k, f"event {k}: {ev.kind} with {s} strands ({why})")
            if not 0 <= ev.index <= s - 2:
                return DiagramVerdict(False, k, f"event {k}: {ev.kind} {ev.index} out of range for {s} strands")
            if ev.kind == CAP:
                s -= 2
    if cups == 0:
        return DiagramVerdict(False, None, "diagram has no cup")
    if s != 0:
        return DiagramVerdict(False, len(diagram.events), f"diagram ends with {s} open strands")
    return DiagramVerdict(True)


def _require_valid(diagram: MorseDiagram) -> None:
    verdict = validate(diagram)
    if not verdict.valid:
        raise InvalidDiagram(verdict)


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self) -> int:
        return sum(1 for x in range(len(self.parent)) if self.find(x) == x)


def component_count(diagram: MorseDiagram) -> int:
    """Number of closed curves, by tracing arcs created at cups through caps."""
    _require_valid(diagram)
    uf = _UnionFind()
    row: list[int] = []
    for ev in diagram.events:
        i = ev.index
        if ev.kind == CUP:
            arc = uf.add()
            row[i:i] = [arc, arc]
        elif ev.kind == CROSS:
            row[i], row[i + 1] = row[i + 1], row[i]
        else:
            uf.union(row[i], row[i + 1])
            del row[i:i + 2]
    return uf.classes()


def _require_knot(diagram: MorseDiagram) -> None:
    count = component_count(diagram)
    if count != 1:
        raise NotAKnot(f"diagram has {count} components, expected a knot")


def critical_word(diagram: MorseDiagram) -> MorseWord:
    _require_knot(diagram)
    word = MorseWord("".join("m" if ev.kind == CUP else "M" for ev in diagram.events if ev.kind != CROSS))
    verdict = validate_zhat(word)
    if not verdict.member:  # cannot happen for a connected diagram
        raise AssertionError(verdict.reason)
    return word


def width(diagram: MorseDiagram) -> int:
    return width_from_word(critical_word(diagram))


def bridge(diagram: MorseDiagram) -> int:
    _require_knot(diagram)
    return sum(1 for ev in diagram.events if ev.kind == CUP)


def writhe(diagram: MorseDiagram) -> int:
    _require_valid(diagram)
    return sum(ev.sign for ev in diagram.events)


def crossing_count(diagram: MorseDiagram) -> int:
    return sum(1 for ev in diagram.events if ev.kind == CROSS)


def max_strands(diagram: MorseDiagram) -> int:
    return max(diagram.strand_counts(), default=0)


def _cable_events(events: Iterable[Event], params: CableParams) -> list[Event]:
    q, out = params.q, []
    twisted = False
    for ev in events:
        i = ev.index
        if ev.kind == CUP:
            out.extend(Cup(i * q + c) for c in range(q))
            if not twisted:
                twisted = True
                for _ in range(params.twists):
                    out.extend(Cross(i * q + c, params.twist_sign) for c in range(q - 1))
        elif ev.kind == CAP:
            out.extend(Cap(i * q + c) for c in reversed(range(q)))
        else:
            # bundle swap: strand r of the left bundle crosses the whole right bundle
            out.extend(
                Cross(i * q + (q - 1) - r + c, ev.sign) for r in range(q) for c in range(q)
            )
    return out


def cable(diagram: MorseDiagram, params: CableParams | int) -> MorseDiagram:
    """
    Blackboard q-cable: each strand becomes q parallel strands and ``twists``
    copies of the 1/q twist are inserted on the left bundle right after the
    first cup group. The result may be a link; check ``component_count``.
    """
    if isinstance(params, int):
        params = CableParams(params)
    _require_valid(diagram)
    return MorseDiagram(tuple(_cable_events(diagram.events, params)))


def cable_slope(diagram: MorseDiagram, params: CableParams) -> tuple[int, int]:
    """
    Pattern slope (p, q) of ``cable(diagram, params)`` relative to the
    Seifert framing of the companion: the blackboard longitude contributes
    q times the writhe, and each 1/q twist one meridian.
    """
    _require_knot(diagram)
    return params.q * writhe(diagram) + params.twist_sign * params.twists, params.q


def expected_cable_components(diagram: MorseDiagram, params: CableParams) -> int:
    """Components of the cable of a knot: the twist permutation is a q-cycle to the power t."""
    _require_knot(diagram)
    return math.gcd(params.twists, params.q)


def parse_diagram(text: str) -> MorseDiagram:
    """
    Parse the line format: ``cup <i>``, ``cap <i>``, ``cross <i> <+|->``.

    Blank lines and ``#`` comments are skipped, keywords are case-insensitive.
    Errors name the 1-based line. Range checks are left to ``validate``.
    """
    events = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0].lower()
        try:
            if kind in (CUP, CAP):
                if len(parts) != 2:
                    raise ValueError(f"{kind} takes exactly one index")
                events.append(Event(kind, _parse_index(parts[1])))
            elif kind == CROSS:
                if len(parts) != 3:
                    raise ValueError("cross takes an index and a sign")
                events.append(Cross(_parse_index(parts[1]), parts[2]))
            else:
                raise ValueError(f"unknown event {parts[0]!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return MorseDiagram(tuple(events))


def _parse_index(text: str) -> int:
    if not text.isdigit():
        raise ValueError(f"strand index must be a non-negative integer, got {text!r}")
    return int(text)


def emit_diagram(diagram: MorseDiagram | Sequence[Event]) -> str:
    events = diagram.events if isinstance(diagram, MorseDiagram) else diagram
    return "".join(f"{ev}\n" for ev in events)
