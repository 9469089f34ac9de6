"""OEIS b-file ingestion, sequence comparison, and the mod-p triangle image.

b-files are the plain-text OEIS exchange format: one "index value" pair per
line, optional '#' comments and blank lines, indices consecutive.  They are
read from local paths only; nothing here touches the network.

The image emitter renders the 2 x n count table reduced mod p as a binary
portable graymap: row y = n, column x = k, residues mapped to gray levels
(for mod 3: 0 -> 255, 1 -> 128, 2 -> 0), cells above the diagonal left as
white background.  The mod-3 picture shows a Sierpinski-carpet-like pattern
sheared by 45 degrees.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .core import VerificationReport
from .transfer import dp_row_mod, dp_table


class BFileFormatError(ValueError):
    """Malformed or structurally broken b-file content."""


@dataclass(frozen=True)
class BFile:
    """A parsed b-file: consecutive (index, value) entries."""

    sequence_id: str
    entries: tuple

    @property
    def first_index(self) -> int:
        return self.entries[0][0]

    @property
    def values(self) -> tuple:
        return tuple(v for _, v in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(content: str, sequence_id: str = "") -> BFile:
    """Parse b-file text; comments and blank lines are skipped.

    Raises :class:`BFileFormatError` with the offending line number on
    malformed lines, and on index gaps (entries must be consecutive).
    """
    entries = []
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileFormatError(
                f"line {lineno}: expected 'index value', got {raw!r}"
            )
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileFormatError(
                f"line {lineno}: non-integer field in {raw!r}"
            ) from None
        if entries and index != entries[-1][0] + 1:
            raise BFileFormatError(
                f"line {lineno}: index {index} does not follow {entries[-1][0]}"
            )
        entries.append((index, value))
    if not entries:
        raise BFileFormatError("no entries found")
    return BFile(sequence_id=sequence_id, entries=tuple(entries))


def render_bfile(bfile: BFile) -> str:
    """The canonical text form: one 'index value' line per entry."""
    return "".join(f"{i} {v}\n" for i, v in bfile.entries)


def load_bfile(path) -> BFile:
    """Read a b-file from disk, inferring the A-number from a bNNNNNN name."""
    path = Path(path)
    match = re.fullmatch(r"b(\d+)", path.stem)
    sequence_id = f"A{match.group(1)}" if match else ""
    return parse_bfile(path.read_text(), sequence_id=sequence_id)


def flatten_triangle(m: int, n_max: int) -> list:
    """Rows 0..n_max of the m x n count table, concatenated.

    Each row is trimmed at its last nonzero entry, so the result is the
    triangle read row by row (for m = 2 this is sequence A035607).
    """
    if m not in (2, 3):
        raise ValueError(f"m must be 2 or 3, got {m}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    flat = []
    for row in dp_table(m, n_max):
        flat.extend(row.counts)
    return flat


def compare_sequence(computed, reference: BFile, offset: int = 0) -> VerificationReport:
    """Element-wise check of ``computed[i]`` against reference index offset+i.

    Raises ValueError when the reference does not cover the whole computed
    range; a value mismatch is reported, not raised.
    """
    computed = list(computed)
    if not computed:
        raise ValueError("nothing to compare")
    first = reference.first_index
    last_needed = offset + len(computed) - 1
    if offset < first or last_needed > reference.entries[-1][0]:
        raise ValueError(
            f"reference {reference.sequence_id or '(unnamed)'} covers indices "
            f"{first}..{reference.entries[-1][0]}, need {offset}..{last_needed}"
        )
    failures = []
    for i, got in enumerate(computed):
        index = offset + i
        want = reference.entries[index - first][1]
        if got != want:
            failures.append((f"index={index}", want, got))
    name = f"oeis:{reference.sequence_id}" if reference.sequence_id else "oeis"
    return VerificationReport.from_failures(
        name, f"indices {offset}..{last_needed}", failures
    )


# ---------------------------------------------------------------------------
# mod-p triangle image


@dataclass(frozen=True)
class TriangleImage:
    """A square graymap of the count table mod ``modulus``.

    ``pixels[y][x]`` is the gray level of table entry (n=y, k=x); entries
    with k > n are background (255).
    """

    modulus: int
    rows: int
    pixels: tuple  # tuple of bytes, one per image row

    def to_pgm(self) -> bytes:
        header = f"P5\n{self.rows} {self.rows}\n255\n".encode("ascii")
        return header + b"".join(self.pixels)


def gray_level(residue: int, modulus: int) -> int:
    """Map residue r to round(255 * (1 - r/(modulus-1))).

    For modulus 3 this is exactly white/gray/black: 0 -> 255, 1 -> 128,
    2 -> 0.  Computed with exact rationals so the rounding is reproducible.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if not 0 <= residue < modulus:
        raise ValueError(f"residue {residue} out of range for mod {modulus}")
    return round(Fraction(255 * (modulus - 1 - residue), modulus - 1))


def build_mod_image(rows: int, modulus: int) -> TriangleImage:
    """Render rows 0..rows-1 of the 2 x n table mod ``modulus`` as pixels.

    The whole computation is done in modular arithmetic; no big integers.
    """
    if rows < 1:
        raise ValueError(f"rows must be >= 1, got {rows}")
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    residue_rows = dp_row_mod(2, rows - 1, modulus)
    levels = [gray_level(r, modulus) for r in range(modulus)]
    background = 255
    pixels = []
    for n in range(rows):
        residues = residue_rows[n]
        line = bytearray(rows)
        for x in range(rows):
            line[x] = levels[residues[x]] if x <= n else background
        pixels.append(bytes(line))
    return TriangleImage(modulus=modulus, rows=rows, pixels=tuple(pixels))


def emit_mod_image(rows: int, modulus: int, out_path) -> TriangleImage:
    """Build the mod image and write it to ``out_path`` as a binary PGM.

    The byte stream is fully determined by (rows, modulus): fixed header
    "P5\\n<w> <h>\\n255\\n" followed by raw rows, so repeated runs are
    byte-identical.
    """
    image = build_mod_image(rows, modulus)
    Path(out_path).write_bytes(image.to_pgm())
    return image
