"""The 4x10 array view of 40-bit words and the projection onto GF(4)^10.

Column i of the array holds coordinates 4i-3..4i, top to bottom; the four
rows are labelled 0, 1, w, W.  Projecting a column means summing the row
labels at its one-bits, so each column contributes one GF(4) symbol.

For a fixed symbol there are exactly four columns producing it (two of
even parity, two of odd, the members of each parity pair being bitwise
complements), which is what lets a corrected projection be written back
into the array with a forced number of bit flips.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf4 import Gf4Word

N_BITS = 40
N_COLS = 10

# Top row of the array: bit 3 of every column nibble.
TOP_ROW_MASK = int("1000" * N_COLS, 2)

# Projection of a single column nibble (bits 3..0 = rows 0, 1, w, W):
# XOR of the row labels 0, 1, w=2, W=3 at the set bits.
_PROJ_OF_NIBBLE = tuple(
    (1 if n & 4 else 0) ^ (2 if n & 2 else 0) ^ (3 if n & 1 else 0)
    for n in range(16)
)
_PARITY_OF_NIBBLE = tuple(n.bit_count() & 1 for n in range(16))

# The four columns yielding each symbol, in the order they are usually
# tabulated: two even-parity columns then two odd-parity columns.
COLUMN_PATTERNS = (
    (0x0, 0xF, 0x8, 0x7),  # 0
    (0xC, 0x3, 0x4, 0xB),  # 1
    (0xA, 0x5, 0x2, 0xD),  # w
    (0x9, 0x6, 0x1, 0xE),  # W
)


class LiftError(Exception):
    """No consistent rewrite of the array within the flip budget."""


def column_nibble(v: int, col: int) -> int:
    """Column col (1-based) of the array as a 4-bit value, row 0 on top."""
    return (v >> (4 * (N_COLS - col))) & 0xF


def replace_column(v: int, col: int, nibble: int) -> int:
    shift = 4 * (N_COLS - col)
    return (v & ~(0xF << shift)) | (nibble << shift)


def proj_bits(v: int) -> int:
    """Packed projection of a 40-bit word (hot-path form)."""
    out = 0
    for c in range(N_COLS):
        out |= _PROJ_OF_NIBBLE[(v >> (4 * c)) & 0xF] << (2 * (N_COLS - 1 - c))
    return out


def proj(v: int) -> Gf4Word:
    """Projection of a 40-bit word onto GF(4)^10."""
    return Gf4Word(proj_bits(v), N_COLS)


def candidates_for(value: int, parity: int) -> tuple[int, int]:
    """The two column nibbles with the given projection value and parity."""
    pats = COLUMN_PATTERNS[value]
    return (pats[0], pats[1]) if parity == 0 else (pats[2], pats[3])


@dataclass(frozen=True)
class ParityProfile:
    """Column and top-row parities of an array (1 = odd)."""

    column_parities: tuple[int, ...]
    top_row_parity: int
    majority_parity: int
    minority_columns: tuple[int, ...]  # 1-based

    @property
    def decodable(self) -> bool:
        return len(self.minority_columns) <= 3


def parity_profile(v: int) -> ParityProfile:
    cols = tuple(
        _PARITY_OF_NIBBLE[column_nibble(v, c)] for c in range(1, N_COLS + 1)
    )
    odd = sum(cols)
    # Ties (5 odd / 5 even) are undecodable either way; call even majority.
    majority = 1 if odd > N_COLS - odd else 0
    minority = tuple(c for c in range(1, N_COLS + 1) if cols[c - 1] != majority)
    top = (v & TOP_ROW_MASK).bit_count() & 1
    return ParityProfile(cols, top, majority, minority)


def has_projection_o(v: int, code_words: frozenset[int]) -> bool:
    """Projection-O membership: projection in the code, uniform column
    parity, top-row parity equal to the column parity."""
    p = parity_profile(v)
    return (
        not p.minority_columns
        and p.top_row_parity == p.majority_parity
        and proj_bits(v) in code_words
    )


def has_projection_e(v: int, code_words: frozenset[int]) -> bool:
    """Projection-E membership: as projection O but the top row parity is
    required even regardless of the column parity."""
    p = parity_profile(v)
    return (
        not p.minority_columns
        and p.top_row_parity == 0
        and proj_bits(v) in code_words
    )


def lift(
    v: int,
    y_corrected: Gf4Word | int,
    column_parity: int,
    top_row_parity: int,
    max_flips: int = 3,
) -> tuple[int, tuple[int, ...]]:
    """Rewrite columns of v so that its projection becomes y_corrected,
    every column has the given parity and the top row the given parity,
    flipping as few bits as possible.

    Only columns whose projection value must change or whose parity is
    wrong are touched.  Each such column admits exactly two candidate
    nibbles (complements of each other); the cheaper one is taken, and if
    the resulting top-row parity is off, the single cheapest candidate
    swap fixes it (complementing a column always toggles its top bit).

    Returns the rewritten word and the 1-based flipped coordinates.
    Raises LiftError when no rewrite exists within max_flips.
    """
    target = y_corrected.bits if isinstance(y_corrected, Gf4Word) else y_corrected
    picks: dict[int, int] = {}
    dists: dict[int, int] = {}
    total = 0
    out = v
    for col in range(1, N_COLS + 1):
        cur = column_nibble(v, col)
        want = (target >> (2 * (col - 1))) & 3
        if _PROJ_OF_NIBBLE[cur] == want and _PARITY_OF_NIBBLE[cur] == column_parity:
            continue
        a, b = candidates_for(want, column_parity)
        da = (cur ^ a).bit_count()
        pick = a if da <= 4 - da else b
        picks[col] = pick
        dists[col] = min(da, 4 - da)
        total += dists[col]
        out = replace_column(out, col, pick)
    if (out & TOP_ROW_MASK).bit_count() & 1 != top_row_parity:
        if not picks:
            raise LiftError("top-row parity off with no column to rewrite")
        # Swapping a column to its complement costs 4 - 2d extra flips;
        # the largest-distance column is the cheapest to swap.
        col = max(picks, key=lambda c: (dists[c], -c))
        out = replace_column(out, col, picks[col] ^ 0xF)
        total += 4 - 2 * dists[col]
    if total > max_flips:
        raise LiftError(f"{total} flips needed, budget is {max_flips}")
    diff = v ^ out
    flips = tuple(i for i in range(1, N_BITS + 1) if (diff >> (N_BITS - i)) & 1)
    assert len(flips) == total
    return out, flips


def format_array_text(v: int) -> str:
    """Four lines of ten characters, rows in label order 0, 1, w, W."""
    lines = []
    for row in range(4):
        bit = 3 - row
        lines.append(
            "".join(
                str((column_nibble(v, c) >> bit) & 1) for c in range(1, N_COLS + 1)
            )
        )
    return "\n".join(lines) + "\n"


def parse_array_text(text: str) -> int:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 4:
        raise ValueError(f"expected 4 rows, got {len(lines)}")
    v = 0
    for row, ln in enumerate(lines):
        if len(ln) != N_COLS or set(ln) - {"0", "1"}:
            raise ValueError(f"row {row + 1} is not a {N_COLS}-character bit string")
        for c, ch in enumerate(ln, 1):
            if ch == "1":
                v |= 1 << (4 * (N_COLS - c) + (3 - row))
    return v
