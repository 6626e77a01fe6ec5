"""
Truth tables (possibly partial, i.e. promise problems) and their text format.

    n <positions> alphabet <size> range <size>
    <value-string> <f-value>
    ...

Inputs missing from the file are outside the promise. `#` starts a comment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping

from adversary_lab.platform.errors import ConfigError, InvalidInputError

from .query_contracts import SYMBOLS, InputAssignment


@dataclass(frozen=True)
class TruthTable:
    n: int
    alphabet_size: int
    range_size: int
    table: Mapping[tuple[int, ...], int]
    name: str = field(default="f", compare=False)
    permutation: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1 or not 2 <= self.alphabet_size <= len(SYMBOLS) or self.range_size < 1:
            raise InvalidInputError(
                f"bad truth-table header n={self.n} alphabet={self.alphabet_size} range={self.range_size}"
            )
        clean: dict[tuple[int, ...], int] = {}
        for key, value in self.table.items():
            key = tuple(int(v) for v in key)
            if len(key) != self.n or any(not 0 <= v < self.alphabet_size for v in key):
                raise InvalidInputError(f"truth-table key {key} is not a length-{self.n} word over the alphabet")
            if not 0 <= int(value) < self.range_size:
                raise InvalidInputError(f"f{key} = {value} outside range {self.range_size}")
            clean[key] = int(value)
        object.__setattr__(self, "table", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def from_function(
        cls,
        n: int,
        fn: Callable[[tuple[int, ...]], int | None],
        *,
        alphabet_size: int = 2,
        range_size: int = 2,
        name: str = "f",
        domain: Iterable[tuple[int, ...]] | None = None,
        permutation: bool = False,
    ) -> "TruthTable":
        """Tabulate fn over `domain` (default: every word); a None result leaves the input undefined."""
        words = domain if domain is not None else itertools.product(range(alphabet_size), repeat=n)
        table = {}
        for word in words:
            value = fn(tuple(word))
            if value is not None:
                table[tuple(word)] = int(value)
        return cls(n, alphabet_size, range_size, table, name=name, permutation=permutation)

    @property
    def is_total(self) -> bool:
        return len(self.table) == self.alphabet_size**self.n

    @property
    def is_boolean(self) -> bool:
        return self.alphabet_size == 2 and self.range_size <= 2

    def __len__(self) -> int:
        return len(self.table)

    def __contains__(self, x: object) -> bool:
        return _key(x) in self.table

    def __call__(self, x: InputAssignment | tuple[int, ...]) -> int:
        key = _key(x)
        if key not in self.table:
            raise InvalidInputError(f"{self.name} is undefined on {''.join(SYMBOLS[v] for v in key)}")
        return self.table[key]

    def inputs(self) -> Iterator[InputAssignment]:
        for key in self.table:
            yield InputAssignment(values=key, alphabet_size=self.alphabet_size, permutation=self.permutation)

    def level_set(self, value: int) -> list[tuple[int, ...]]:
        return [k for k, v in self.table.items() if v == value]


def _key(x: object) -> tuple[int, ...]:
    if isinstance(x, InputAssignment):
        return x.values
    return tuple(int(v) for v in x)  # type: ignore[union-attr]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_truth_table(text: str, *, path: Path | str | None = None, name: str | None = None) -> TruthTable:
    header: tuple[int, int, int] | None = None
    table: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 6 or parts[0::2] != ["n", "alphabet", "range"]:
                raise ConfigError("expected header 'n <n> alphabet <k> range <r>'", path=path, line=lineno)
            try:
                header = (int(parts[1]), int(parts[3]), int(parts[5]))
            except ValueError:
                raise ConfigError("header values must be integers", path=path, line=lineno) from None
            if header[0] < 1 or not 2 <= header[1] <= len(SYMBOLS) or header[2] < 1:
                raise ConfigError(f"header values out of range: {line}", path=path, line=lineno)
            continue
        n, alphabet, range_size = header
        if len(parts) != 2:
            raise ConfigError("expected '<value-string> <f-value>'", path=path, line=lineno)
        word, fval = parts
        if len(word) != n:
            raise ConfigError(f"input {word!r} has {len(word)} symbols, expected {n}", path=path, line=lineno)
        try:
            key = tuple(SYMBOLS.index(ch) for ch in word.lower())
            value = int(fval)
        except ValueError:
            raise ConfigError(f"unreadable entry {line!r}", path=path, line=lineno) from None
        if any(v >= alphabet for v in key):
            raise ConfigError(f"input {word!r} uses symbols outside alphabet {alphabet}", path=path, line=lineno)
        if not 0 <= value < range_size:
            raise ConfigError(f"f-value {value} outside range {range_size}", path=path, line=lineno)
        if key in table:
            raise ConfigError(f"input {word!r} listed twice", path=path, line=lineno)
        table[key] = value
    if header is None:
        raise ConfigError("empty truth-table file", path=path)
    label = name or (Path(path).stem if path else "f")
    return TruthTable(header[0], header[1], header[2], table, name=label)


def read_truth_table(path: Path | str) -> TruthTable:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read truth table: {exc.strerror}", path=p) from exc
    return parse_truth_table(text, path=p)


def format_truth_table(f: TruthTable) -> str:
    lines = [f"n {f.n} alphabet {f.alphabet_size} range {f.range_size}"]
    lines += ["".join(SYMBOLS[v] for v in key) + f" {value}" for key, value in f.table.items()]
    return "\n".join(lines) + "\n"


def write_truth_table(f: TruthTable, path: Path | str) -> Path:
    p = Path(path)
    p.write_text(format_truth_table(f), encoding="utf-8", newline="\n")
    return p
