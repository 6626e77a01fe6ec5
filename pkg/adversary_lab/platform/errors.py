"""
Domain error hierarchy.

Library code raises these; only the CLI turns them into exit codes.
"""

from __future__ import annotations

from pathlib import Path


class AdversaryLabError(ValueError):
    """Base class for every workbench error (usage/I-O class, exit code 2)."""


class DimensionLimitError(AdversaryLabError):
    """Instance too large for the configured dense-simulation cap."""


class InvalidInputError(AdversaryLabError):
    """Malformed or mutually inconsistent data (layouts, inputs, labels)."""


class NonSquareMatrixError(AdversaryLabError):
    pass


class DegenerateRelationError(AdversaryLabError):
    """Relation with empty R, overlapping X/Y, or zero degrees."""


class FamilyConstraintError(AdversaryLabError):
    """Family parameters outside the family's domain (e.g. N not a perfect square)."""


class SearchSpaceOverflowError(AdversaryLabError):
    pass


class ConfigError(AdversaryLabError):
    """Config, truth-table or relation file problem, with a precise location."""

    def __init__(self, message: str, *, path: Path | str | None = None, line: int | None = None):
        self.path = str(path) if path is not None else None
        self.line = line
        where = ""
        if self.path and line is not None:
            where = f"{self.path}:{line}: "
        elif self.path:
            where = f"{self.path}: "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(f"{where}{message}")
