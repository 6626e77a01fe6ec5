"""
Relation file format:

    relation n <n> alphabet <k>
    X:
    <word>
    Y:
    <word>
    R:
    <x-index> <y-index>

Indices are 0-based positions within the X: and Y: sections. `#` starts a comment.
"""

from __future__ import annotations

from pathlib import Path

from adversary_lab.features.query_model import SYMBOLS
from adversary_lab.platform.errors import AdversaryLabError, ConfigError

from .bound_contracts import AdversaryRelation, word_label


def parse_relation(text: str, *, path: Path | str | None = None) -> AdversaryRelation:
    n = alphabet = None
    section = None
    xs: list[tuple[int, ...]] = []
    ys: list[tuple[int, ...]] = []
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 5 or parts[0] != "relation" or parts[1::2] != ["n", "alphabet"]:
                raise ConfigError("expected header 'relation n <n> alphabet <k>'", path=path, line=lineno)
            try:
                n, alphabet = int(parts[2]), int(parts[4])
            except ValueError:
                raise ConfigError("header values must be integers", path=path, line=lineno) from None
            if n < 1 or not 2 <= alphabet <= len(SYMBOLS):
                raise ConfigError(f"header values out of range: {line}", path=path, line=lineno)
            continue
        if line in ("X:", "Y:", "R:"):
            section = line[0]
            continue
        if section is None:
            raise ConfigError("entry before any X:/Y:/R: section", path=path, line=lineno)
        if section in ("X", "Y"):
            if len(line) != n or any(ch not in SYMBOLS[:alphabet] for ch in line.lower()):
                raise ConfigError(f"{line!r} is not a length-{n} word over alphabet {alphabet}", path=path, line=lineno)
            (xs if section == "X" else ys).append(tuple(SYMBOLS.index(ch) for ch in line.lower()))
            continue
        parts = line.split()
        try:
            a, b = (int(p) for p in parts)
        except ValueError:
            raise ConfigError("expected '<x-index> <y-index>'", path=path, line=lineno) from None
        if not (0 <= a < len(xs) and 0 <= b < len(ys)):
            raise ConfigError(f"pair ({a}, {b}) refers outside X ({len(xs)}) or Y ({len(ys)})", path=path, line=lineno)
        pairs.append((a, b))
    if n is None:
        raise ConfigError("empty relation file", path=path)
    try:
        return AdversaryRelation(
            xs=tuple(xs),
            ys=tuple(ys),
            pairs=tuple(pairs),
            alphabet_size=alphabet,
            name=Path(path).stem if path else "relation",
        )
    except AdversaryLabError as exc:
        raise ConfigError(str(exc), path=path) from exc


def read_relation(path: Path | str) -> AdversaryRelation:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read relation: {exc.strerror}", path=p) from exc
    return parse_relation(text, path=p)


def format_relation(rel: AdversaryRelation) -> str:
    lines = [f"relation n {rel.n} alphabet {rel.alphabet_size}", "X:"]
    lines += [word_label(x) for x in rel.xs]
    lines.append("Y:")
    lines += [word_label(y) for y in rel.ys]
    lines.append("R:")
    lines += [f"{a} {b}" for a, b in rel.pairs]
    return "\n".join(lines) + "\n"


def write_relation(rel: AdversaryRelation, path: Path | str) -> Path:
    p = Path(path)
    p.write_text(format_relation(rel), encoding="utf-8", newline="\n")
    return p
