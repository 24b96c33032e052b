"""Golden diagrams shipped with the package, guarded by a sha256 manifest."""

from __future__ import annotations

import hashlib
from importlib import resources
from pathlib import Path

from . import diagram as dg

MANIFEST = "MANIFEST.sha256"
SUFFIX = ".morse"

# expected (crossings, bridge) used to certify entries at build time
CERTIFICATES = {
    "unknot": (0, 1),
    "trefoil": (3, 2),
    "figure_eight": (4, 2),
    "torus_2_5": (5, 2),
    "torus_2_7": (7, 2),
}


class CorpusError(RuntimeError):
    pass


def corpus_dir() -> Path:
    return Path(str(resources.files("knotwidth") / "corpus"))


def names() -> list[str]:
    return sorted(p.stem for p in corpus_dir().glob(f"*{SUFFIX}"))


def path(name: str) -> Path:
    p = corpus_dir() / f"{name}{SUFFIX}"
    if not p.is_file():
        raise CorpusError(f"no corpus diagram named {name!r}; have {', '.join(names())}")
    return p


def load(name: str) -> dg.MorseDiagram:
    return dg.parse_diagram(path(name).read_text())


def _digest(p: Path) -> str:
    return hashlib.sha256(p.read_bytes()).hexdigest()


def read_manifest(directory: Path | None = None) -> dict[str, str]:
    directory = directory or corpus_dir()
    entries = {}
    for line in (directory / MANIFEST).read_text().splitlines():
        if line.strip():
            digest, filename = line.split(maxsplit=1)
            entries[filename] = digest
    return entries


def verify_manifest(directory: Path | None = None) -> list[str]:
    """Names of files whose checksum is missing or wrong; empty when intact."""
    directory = directory or corpus_dir()
    manifest = read_manifest(directory)
    bad = [f for f, d in manifest.items() if not (directory / f).is_file() or _digest(directory / f) != d]
    bad += [p.name for p in directory.glob(f"*{SUFFIX}") if p.name not in manifest]
    return sorted(bad)


def certify(name: str, diagram: dg.MorseDiagram | None = None) -> None:
    diagram = diagram if diagram is not None else load(name)
    verdict = dg.validate(diagram)
    if not verdict:
        raise CorpusError(f"{name}: {verdict.reason}")
    if dg.component_count(diagram) != 1:
        raise CorpusError(f"{name}: not a knot")
    expected = CERTIFICATES.get(name)
    if expected is not None:
        got = (dg.crossing_count(diagram), dg.bridge(diagram))
        if got != expected:
            raise CorpusError(f"{name}: (crossings, bridge) = {got}, expected {expected}")


def build_manifest(directory: Path | None = None) -> str:
    """Certify every diagram, then (re)write the manifest. Returns its text."""
    directory = directory or corpus_dir()
    lines = []
    for p in sorted(directory.glob(f"*{SUFFIX}")):
        certify(p.stem, dg.parse_diagram(p.read_text()))
        lines.append(f"{_digest(p)}  {p.name}\n")
    text = "".join(lines)
    (directory / MANIFEST).write_text(text)
    return text


if __name__ == "__main__":
    print(build_manifest(), end="")
