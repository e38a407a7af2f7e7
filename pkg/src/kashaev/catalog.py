"""Bundled catalog of small knots and links with Seifert matrices.

Each entry is one JSON file::

    {"name": "3_1", "pd": "X(4,2,5,1),...", "seifert_matrix": [[-1, 1], [0, -1]],
     "notes": "...", "alexander": "t - 1 + t^-1"}

``alexander`` is the published Conway-normalized polynomial (in ``t``), kept
for cross-checking the matrix.  The directory can be overridden with the
``KASHAEV_CATALOG_DIR`` environment variable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .diagram import Diagram, parse_pd

__all__ = ["CatalogEntry", "catalog_dir", "load_catalog", "load_entry", "parse_t_poly"]

ENV_VAR = "KASHAEV_CATALOG_DIR"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pd: str
    seifert_matrix: tuple[tuple[Fraction, ...], ...]
    notes: str = ""
    alexander: str | None = None

    @property
    def diagram(self) -> Diagram:
        return parse_pd(self.pd)

    @property
    def is_connected(self) -> bool:
        d = self.diagram
        return len(d.face_structure.pieces) == 1

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "pd": self.pd,
            "seifert_matrix": [[str(v) if Fraction(v).denominator != 1 else int(v) for v in row]
                               for row in self.seifert_matrix],
            "notes": self.notes,
        }
        if self.alexander is not None:
            out["alexander"] = self.alexander
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CatalogEntry":
        return cls(
            name=data["name"],
            pd=data["pd"],
            seifert_matrix=tuple(tuple(Fraction(v) for v in row) for row in data["seifert_matrix"]),
            notes=data.get("notes", ""),
            alexander=data.get("alexander"),
        )


def catalog_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path(__file__).with_name("catalog")


def load_entry(path: Path) -> CatalogEntry:
    with open(path) as fh:
        return CatalogEntry.from_json(json.load(fh))


def load_catalog(directory: str | Path | None = None) -> dict[str, CatalogEntry]:
    directory = Path(directory) if directory else catalog_dir()
    entries = {}
    for path in sorted(directory.glob("*.json")):
        entry = load_entry(path)
        entries[entry.name] = entry
    return entries


def parse_t_poly(text: str):
    """Parse strings like ``"t - 1 + t^-1"`` or ``"t^1/2 - t^-1/2"`` into a
    :class:`~kashaev.algebra.Laurent` in ``s = t^(1/2)``."""
    import re

    from .algebra import Laurent

    body = text.replace(" ", "")
    if body in ("", "0"):
        return Laurent({})
    terms = re.findall(r"([+-]?)(\d*)(t(?:\^(-?\d+)(/2)?)?)?", body)
    coeffs: dict = {}
    consumed = 0
    for sign, num, tpart, exp, half in terms:
        if not (num or tpart):
            continue
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        if not tpart:
            e = 0
        elif exp == "":
            e = 2
        else:
            e = int(exp) if half else 2 * int(exp)
        coeffs[e] = coeffs.get(e, 0) + c
        consumed += len(sign) + len(num) + len(tpart)
    if consumed != len(body):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return Laurent(coeffs)
