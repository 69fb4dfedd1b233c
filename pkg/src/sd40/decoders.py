"""Projection decoding of the binary [40,20,8] codes, radius 3.

Both decoders share the same skeleton.  Column parities of the received
array split the columns into a majority and at most three minority
columns; minority columns are erasures of the projected word, and the
error budget per case is

    case I   [10;0]  up to 1 unknown error, 0 erasures
    case II  [9;1]   up to 1 unknown error, 1 erasure
    case III [8;2]   0 unknown errors,      2 erasures
    case IV  [7;3]   0 unknown errors,      3 erasures

since unique decoding of the projected word needs 2*errors + erasures
< 4.  The decoders differ only in how the corrected projection is found:
the representation decoder probes codeword membership directly (either
against the enumerated table or against the orbit-type expansion), the
syndrome decoder solves s = H conj(e)^T for the error word, H being the
five GF(4)-basis rows of the code's generator matrix.

The corrected projection is then written back into the array by the
column-rewrite lift; a received word is decodable exactly when the lift
stays within three bit flips, so every outcome here coincides with
exhaustive nearest-codeword search at radius 3.  Four or more minority
columns, a failed projection search, or an over-budget lift all yield
the declaration that more than three errors occurred.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .gf4 import CONJ, MUL, Gf4Word, word_with_symbol
from .projection import LiftError, lift, parity_profile, proj_bits
from .quaternary import e10_matrix, e10_table, orbit_lookup

N_COLS = 10
FAILURE_REASON = "more than three errors occurred"


class InternalInvariantError(RuntimeError):
    """A state the decoding theory rules out; indicates a bug, not input."""


@dataclass(frozen=True)
class CaseLabel:
    """Parity case of a received array and its error/erasure budget."""

    case_id: str  # "I".."IV"
    majority_parity: int
    erasure_columns: tuple[int, ...]  # 1-based minority columns
    max_errors: int  # unknown-position errors allowed on top of erasures

    @property
    def parity_split(self) -> str:
        k = len(self.erasure_columns)
        return f"[{N_COLS - k}; {k}]"


_CASE_IDS = ("I", "II", "III", "IV")


def classify_case(v: int) -> CaseLabel | None:
    """Map the parity profile to a case, or None when four or more
    columns disagree with the majority (undecodable)."""
    profile = parity_profile(v)
    minority = profile.minority_columns
    if len(minority) > 3:
        return None
    return CaseLabel(
        _CASE_IDS[len(minority)],
        profile.majority_parity,
        minority,
        1 if len(minority) <= 1 else 0,
    )


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a corrected codeword with its diagnosis, or a declared failure."""

    algorithm: str
    ok: bool
    codeword: int | None
    corrected_projection: Gf4Word | None
    flipped_bits: tuple[int, ...]
    case: CaseLabel | None
    reason: str | None = None


# ---------------------------------------------------------------------------
# Finding the corrected projection: membership probing
# ---------------------------------------------------------------------------


def _probe_candidates(y: int, erasures: tuple[int, ...], max_errors: int,
                      members: frozenset[int]) -> set[int]:
    """Codewords agreeing with y outside the erasure columns except in at
    most max_errors further positions.  Erasure values are scanned over
    all of GF(4) -- a flipped top-row bit changes a column's parity but
    not its projection, so an erased position may keep its value."""
    idx = [c - 1 for c in erasures]
    base = y
    for i in idx:
        base = word_with_symbol(base, i, 0)
    found: set[int] = set()
    for vals in itertools.product(range(4), repeat=len(idx)):
        w = base
        for i, val in zip(idx, vals):
            w |= val << (2 * i)
        if w in members:
            found.add(w)
    if not found and max_errors:
        for j in range(N_COLS):
            if j in idx:
                continue
            for delta in (1, 2, 3):
                flipped = y ^ (delta << (2 * j))
                b = flipped
                for i in idx:
                    b = word_with_symbol(b, i, 0)
                for vals in itertools.product(range(4), repeat=len(idx)):
                    w = b
                    for i, val in zip(idx, vals):
                        w |= val << (2 * i)
                    if w in members:
                        found.add(w)
    return found


def find_closest_in_e10(
    y: Gf4Word,
    erasures: tuple[int, ...] = (),
    max_errors: int = 0,
    members: frozenset[int] | None = None,
) -> Gf4Word | None:
    """The unique codeword within the (erasures, max_errors) budget of y,
    or None.  Raises InternalInvariantError if two candidates fit, which
    the budget bound 2*max_errors + len(erasures) < 4 rules out."""
    if 2 * max_errors + len(erasures) >= 4:
        raise ValueError("budget violates unique-decoding bound")
    if members is None:
        members = e10_table().word_set
    found = _probe_candidates(y.bits, erasures, max_errors, members)
    if len(found) > 1:
        raise InternalInvariantError(f"{len(found)} codewords inside budget")
    return Gf4Word(found.pop(), N_COLS) if found else None


@functools.lru_cache(maxsize=None)
def orbit_members() -> frozenset[int]:
    """E10 membership derived from the eight type representatives and the
    symmetry group instead of the generator matrix."""
    return frozenset(orbit_lookup()) | {0}


# ---------------------------------------------------------------------------
# Finding the corrected projection: syndromes over GF(4)
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def parity_check_matrix() -> tuple[Gf4Word, ...]:
    """H: the five GF(4)-basis rows of the generator matrix.  Hermitian
    self-duality makes them parity checks: H conj(y)^T = 0 iff y is a
    codeword."""
    return e10_matrix().linear_rows


def h_column(col: int) -> Gf4Word:
    """Column col (1-based) of H as a 5-symbol word."""
    h = parity_check_matrix()
    return Gf4Word.from_symbols((row[col - 1] for row in h), 5)


@functools.lru_cache(maxsize=None)
def _syndrome_contrib() -> tuple[tuple[int, ...], ...]:
    """contrib[pos][val]: packed 5-symbol syndrome of value val at 1-based
    position pos+1, i.e. conj(val) times the corresponding column of H."""
    h = parity_check_matrix()
    table = []
    for pos in range(N_COLS):
        per_val = []
        for val in range(4):
            packed = 0
            for r in range(5):
                packed |= MUL[CONJ[val]][h[r][pos]] << (2 * r)
            per_val.append(packed)
        table.append(tuple(per_val))
    return tuple(table)


@functools.lru_cache(maxsize=None)
def _single_error_syndromes() -> dict[int, tuple[int, int]]:
    """Nonzero syndrome -> (0-based position, error value).  Distinct
    because any two columns of H are GF(4)-independent (d = 4)."""
    table: dict[int, tuple[int, int]] = {}
    contrib = _syndrome_contrib()
    for pos in range(N_COLS):
        for val in (1, 2, 3):
            s = contrib[pos][val]
            if s == 0 or s in table:
                raise InternalInvariantError("dependent parity-check columns")
            table[s] = (pos, val)
    return table


def syndrome(y: Gf4Word) -> Gf4Word:
    """H conj(y)^T as a 5-symbol word; zero exactly on codewords."""
    contrib = _syndrome_contrib()
    s = 0
    bits = y.bits
    for pos in range(N_COLS):
        s ^= contrib[pos][(bits >> (2 * pos)) & 3]
    return Gf4Word(s, 5)


def solve_syndrome(
    s: Gf4Word,
    erasures: tuple[int, ...] = (),
    max_errors: int = 0,
) -> Gf4Word | None:
    """The unique error word e with s = H conj(e)^T supported on the
    erasure columns plus at most max_errors further positions, or None.

    Scans all 4^len(erasures) coefficient choices (zero included: an
    erased column may carry no projection error) and resolves a leftover
    residual through the single-column syndrome table.
    """
    if 2 * max_errors + len(erasures) >= 4:
        raise ValueError("budget violates unique-decoding bound")
    contrib = _syndrome_contrib()
    single = _single_error_syndromes()
    idx = [c - 1 for c in erasures]
    solutions: set[int] = set()
    for vals in itertools.product(range(4), repeat=len(idx)):
        residual = s.bits
        e = 0
        for i, val in zip(idx, vals):
            residual ^= contrib[i][val]
            e |= val << (2 * i)
        if residual == 0:
            solutions.add(e)
        elif max_errors:
            hit = single.get(residual)
            if hit is not None and hit[0] not in idx:
                solutions.add(e | (hit[1] << (2 * hit[0])))
    if len(solutions) > 1:
        raise InternalInvariantError(f"{len(solutions)} error words fit syndrome")
    return Gf4Word(solutions.pop(), N_COLS) if solutions else None


# ---------------------------------------------------------------------------
# The two decoders
# ---------------------------------------------------------------------------


def _decode(v: int, algorithm: str, code: str,
             members: frozenset[int] | None = None) -> DecodeOutcome:
    if code not in ("DE", "SE"):
        raise ValueError(f"code must be DE or SE, got {code!r}")

    def failure(case: CaseLabel | None) -> DecodeOutcome:
        return DecodeOutcome(algorithm, False, None, None, (), case, FAILURE_REASON)

    case = classify_case(v)
    if case is None:
        return failure(None)
    y = proj_bits(v)
    if algorithm == "representation":
        corrected = find_closest_in_e10(
            Gf4Word(y, N_COLS), case.erasure_columns, case.max_errors, members
        )
    elif algorithm == "syndrome":
        err = solve_syndrome(syndrome(Gf4Word(y, N_COLS)),
                             case.erasure_columns, case.max_errors)
        corrected = None if err is None else Gf4Word(y ^ err.bits, N_COLS)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if corrected is None:
        return failure(case)
    # Projection O ties the top row to the column parity; projection E
    # wants it even regardless.
    top_parity = case.majority_parity if code == "DE" else 0
    try:
        word, flips = lift(v, corrected, case.majority_parity, top_parity)
    except LiftError:
        return failure(case)
    return DecodeOutcome(algorithm, True, word, corrected, flips, case)


def represent_decode(v: int, code: str = "DE",
                     members: frozenset[int] | None = None) -> DecodeOutcome:
    """Representation decoding: correct the projection by codeword-pattern
    matching, then rewrite the flagged columns."""
    return _decode(v, "representation", code, members)


def syndrome_decode(v: int, code: str = "DE") -> DecodeOutcome:
    """Syndrome decoding: solve the GF(4) syndrome equation for the
    projection error, then rewrite the flagged columns."""
    return _decode(v, "syndrome", code)


def decode_se(v: int, algorithm: str = "representation") -> DecodeOutcome:
    """Decode against the singly-even code (top row always even)."""
    if algorithm == "representation":
        return represent_decode(v, "SE")
    if algorithm == "syndrome":
        return syndrome_decode(v, "SE")
    raise ValueError(f"unknown algorithm {algorithm!r}")
