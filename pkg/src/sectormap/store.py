"""Flat-file store of named sector bitmasks.

One record per line, ``name<TAB>decimal_mask``, newline-terminated UTF-8.
The whole graph state of a record is that single integer; no image data
is ever written. Queries are a deliberate linear scan over the records.
"""

from __future__ import annotations

from pathlib import Path

from .geometry import SectorId
from .state import SectorBitmask, bit_test, format_decimal, parse_decimal


class RecordStore:
    """Named persisted bitmasks supporting sector-membership queries.

    Records keep file order; saving an existing name replaces its mask in
    place. Every save rewrites the whole file.
    """

    def __init__(self, path: str | Path, width: int) -> None:
        self.path = Path(path)
        self.width = width
        self.records: dict[str, SectorBitmask] = {}
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        text = self.path.read_text(encoding="utf-8")
        for lineno, line in enumerate(text.splitlines(), start=1):
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(
                    f"{self.path}:{lineno}: expected 'name<TAB>mask', got {line!r}"
                )
            name, mask_text = parts
            if not name:
                raise ValueError(f"{self.path}:{lineno}: empty record name")
            try:
                mask = parse_decimal(mask_text, self.width)
            except ValueError as exc:
                raise ValueError(f"{self.path}:{lineno}: {exc}") from exc
            self.records[name] = mask

    def _write(self) -> None:
        lines = [
            f"{name}\t{format_decimal(mask)}\n" for name, mask in self.records.items()
        ]
        self.path.write_text("".join(lines), encoding="utf-8")

    def save(self, name: str, mask: SectorBitmask) -> None:
        """Insert or replace one record and persist the store."""
        if not name or "\t" in name or "\n" in name or "\r" in name:
            raise ValueError(f"record name must be nonempty without tab/newline: {name!r}")
        if mask.width != self.width:
            raise ValueError(
                f"mask width {mask.width} does not match store width {self.width}"
            )
        self.records[name] = mask
        self._write()

    def query(self, sector: SectorId) -> list[str]:
        """Names of all records whose mask has ``sector`` set, in file order."""
        if not 1 <= sector <= self.width:
            raise ValueError(f"sector id {sector} out of range 1..{self.width}")
        return [name for name, mask in self.records.items() if bit_test(mask, sector)]
