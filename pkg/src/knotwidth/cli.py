"""
Command line interface.

Inputs are either a word (``mmMM``, ``m^3MmM^3``, ``m3M1m1M3``), a diagram file
path, ``-`` for a diagram on stdin, or ``corpus:<name>`` for a shipped diagram.
Reports go to stdout, diagnostics to stderr. Exit status is 0 on success,
1 when a verification fails, 2 on bad input and 3 when a node budget is hit.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import corpus, diagram as dg, reduction, verify as vf, words

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


class InputError(Exception):
    pass


def _load_input(spec: str) -> tuple[str, words.MorseWord | dg.MorseDiagram]:
    try:
        if spec.startswith("corpus:"):
            return spec, corpus.load(spec.split(":", 1)[1])
        if spec == "-":
            return "<stdin>", dg.parse_diagram(sys.stdin.read())
        p = Path(spec)
        if p.is_file():
            return spec, dg.parse_diagram(p.read_text())
        return spec, words.parse_word(spec)
    except (ValueError, corpus.CorpusError) as exc:
        raise InputError(f"{spec}: {exc}") from None


def _require_member(word: words.MorseWord) -> None:
    verdict = words.validate_zhat(word)
    if not verdict.member:
        raise InputError(f"{word}: {verdict.reason}")


def _require_knot(label: str, d: dg.MorseDiagram) -> None:
    verdict = dg.validate(d)
    if not verdict.valid:
        raise InputError(f"{label}: invalid diagram: {verdict.reason}")
    count = dg.component_count(d)
    if count != 1:
        raise InputError(f"{label}: diagram has {count} components, expected a knot")


def _emit(args, payload: dict, human: str) -> None:
    if args.format == "records":
        print(json.dumps(payload))
    else:
        print(human)


def cmd_validate(args) -> int:
    label, obj = _load_input(args.input)
    if isinstance(obj, words.MorseWord):
        verdict = words.validate_zhat(obj)
        payload = {"input": label, "valid": verdict.member, "condition": verdict.condition,
                   "position": verdict.position, "reason": verdict.reason}
        if verdict.member:
            payload["blocks"] = verdict.blocks.n
        _emit(args, payload, f"{label}: {verdict.reason}")
        return 0 if verdict.member else EXIT_INPUT
    verdict = dg.validate(obj)
    payload = {"input": label, "valid": verdict.valid, "event": verdict.event, "reason": verdict.reason}
    human = f"{label}: {verdict.reason}"
    if verdict.valid:
        payload["components"] = dg.component_count(obj)
        human += f" ({payload['components']} component{'s' if payload['components'] != 1 else ''})"
    _emit(args, payload, human)
    return 0 if verdict.valid else EXIT_INPUT


def cmd_width(args) -> int:
    label, obj = _load_input(args.input)
    if isinstance(obj, words.MorseWord):
        _require_member(obj)
        report = vf.word_report(obj, label)
    else:
        _require_knot(label, obj)
        report = vf.diagram_report(obj, label)
    if args.format == "records":
        print(report.record())
    else:
        print(report.human())
    return 0 if report.ok else EXIT_FAIL


def cmd_word(args) -> int:
    label, obj = _load_input(args.input)
    if isinstance(obj, words.MorseWord):
        _require_member(obj)
        word = obj
    else:
        _require_knot(label, obj)
        word = dg.critical_word(obj)
    _emit(args, {"input": label, "word": str(word)}, str(word))
    return 0


def cmd_cable(args) -> int:
    label, obj = _load_input(args.input)
    if args.q < 1:
        raise InputError("--q must be at least 1")
    if isinstance(obj, words.MorseWord):
        _require_member(obj)
        report = vf.word_report(obj, label)
        cabled = vf.add_word_cable(report, args.q, args.twists, args.sign)
        output = f"{cabled}\n"
    else:
        _require_knot(label, obj)
        report = vf.diagram_report(obj, label)
        params = dg.CableParams(args.q, args.twists, args.sign)
        cabled = vf.add_diagram_cable(report, obj, params)
        output = dg.emit_diagram(cabled)
        if report.cable_components != 1:
            print(
                f"warning: cable has {report.cable_components} components "
                f"(gcd(twists={args.twists}, q={args.q}) = {report.cable_components})",
                file=sys.stderr,
            )
    if args.output:
        Path(args.output).write_text(output)
    else:
        sys.stdout.write(output)
    if args.format == "records":
        print(report.record())
    else:
        print(report.human())
    return 0 if report.ok else EXIT_FAIL


def cmd_reduce(args) -> int:
    label, obj = _load_input(args.input)
    if isinstance(obj, dg.MorseDiagram):
        _require_knot(label, obj)
        obj = dg.critical_word(obj)
    _require_member(obj)
    end, trace = reduction.reduce(obj)
    if args.format == "records":
        for step in trace.steps:
            print(json.dumps({"move": str(step.move), "word": str(step.word), "delta": step.delta}))
    else:
        print(f"# start {obj} width {words.width_from_word(obj)}")
        sys.stdout.write(trace.serialize())
        print(f"# end {end} width {words.width_from_word(end)}")
    return 0


def cmd_explore(args) -> int:
    _, obj = _load_input(args.input)
    if isinstance(obj, dg.MorseDiagram):
        obj = dg.critical_word(obj)
    _require_member(obj)
    result = reduction.explore(obj, args.budget, args.cap)
    if args.format == "records":
        print(json.dumps({"min_width": result.min_width, "word": str(result.word),
                          "visited": result.visited, "trace": result.trace.serialize().splitlines()}))
    else:
        print(f"# minimum width {result.min_width} at {result.word} ({result.visited} words visited)")
        sys.stdout.write(result.trace.serialize())
    return 0


def cmd_enumerate(args) -> int:
    for word in words.enumerate_zhat(args.max_bridge, args.max_blocks):
        if args.format == "records":
            print(json.dumps({"word": str(word), "width": words.width_from_word(word),
                              "bridge": words.bridge_number(word)}))
        else:
            print(word)
    return 0


def _q_list(values: list[str] | None) -> list[int]:
    if not values:
        return [2, 3, 5]
    out = []
    for v in values:
        out.extend(int(x) for x in v.split(",") if x)
    return out


def cmd_verify(args) -> int:
    q_list = _q_list(args.q)
    result = vf.verify(args.max_bridge, args.max_blocks, q_list)
    payload = {
        "passed": result.passed,
        "words": result.words_checked,
        "pairs": result.pairs_checked,
        "identities": result.identities_checked,
        "q": q_list,
    }
    if result.counterexample is not None:
        payload["counterexample"] = dataclasses.asdict(result.counterexample)
        print(f"counterexample: {result.counterexample}", file=sys.stderr)
    human = (
        f"{'PASS' if result.passed else 'FAIL'}: {result.words_checked} words, "
        f"{result.pairs_checked} word-q pairs, {result.identities_checked} identities checked"
    )
    _emit(args, payload, human)
    return 0 if result.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotwidth", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "records"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, with_input=True):
        p = sub.add_parser(name, help=help, parents=[common])
        if with_input:
            p.add_argument("input", help="word, diagram file, '-' or corpus:<name>")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check Z-hat membership or diagram validity")
    add("width", cmd_width, "width by all three formulas, bridge number")
    add("word", cmd_word, "critical word of a diagram")
    p = add("cable", cmd_cable, "q-cable of a word or diagram")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--twists", type=int, default=0)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("-o", "--output", help="write the cabled object here instead of stdout")
    add("reduce", cmd_reduce, "greedy width reduction trace")
    p = add("explore", cmd_explore, "breadth-first search of the move graph")
    p.add_argument("--budget", type=int, default=0, help="net stabilizations allowed")
    p.add_argument("--cap", type=int, default=None, help="width cap (default: start width)")
    p = add("enumerate", cmd_enumerate, "list Z-hat words", with_input=False)
    p.add_argument("--max-bridge", type=int, required=True)
    p.add_argument("--max-blocks", type=int, required=True)
    p = add("verify", cmd_verify, "exhaustive identity sweep", with_input=False)
    p.add_argument("--max-bridge", type=int, default=6)
    p.add_argument("--max-blocks", type=int, default=4)
    p.add_argument("--q", action="append", help="cable multiplicities, repeatable or comma separated")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except reduction.SearchLimitExceeded as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
