"""Core types and checks for Williamson sequences.

A Williamson quadruple is four symmetric circulant ±1 matrices A, B, C, D
of order n satisfying A^2 + B^2 + C^2 + D^2 = 4n*I.  Circulants are
determined by their first row, so the quadruple is stored as four ±1
sequences.  The defining condition is available in two independent forms:
a periodic-autocorrelation sum test (`is_williamson`, the fast path) and
an explicit matrix computation (`matrix_williamson_check`, the oracle).
The two are tested against each other rather than assumed equivalent.

Text form used across the package: a sequence is a string over '+' and
'-' (e.g. "+--" for [1, -1, -1]); a quadruple is four such strings joined
by ';'.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Upper bound on sequence length.  4n and all PAF sums stay tiny at this
# size, so plain machine integers are exact everywhere.  Configurable.
MAX_ORDER = 64


class PreconditionError(ValueError):
    """An operation was called on input that violates its precondition."""


class ParseError(ValueError):
    """Bad sequence/quadruple text.  `column` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class PmOneSequence:
    """A ±1 sequence, the first row of a circulant matrix."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n < 1:
            raise ValueError("sequence must have at least one entry")
        if n > MAX_ORDER:
            raise ValueError(f"sequence length {n} exceeds cap {MAX_ORDER}")
        if any(v not in (1, -1) for v in entries):
            raise ValueError("entries must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def negated(self) -> "PmOneSequence":
        return PmOneSequence(tuple(-v for v in self.entries))

    def __str__(self) -> str:
        return sequence_to_text(self)


@dataclass(frozen=True)
class WilliamsonQuadruple:
    """Four symmetric ±1 sequences of equal length, candidate or verified.

    Construction enforces the structural invariants (equal lengths, each
    sequence symmetric) but not the defining equation; use `is_williamson`
    or `matrix_williamson_check` for that.
    """

    a: PmOneSequence
    b: PmOneSequence
    c: PmOneSequence
    d: PmOneSequence

    def __post_init__(self):
        n = self.a.n
        if not (self.b.n == n and self.c.n == n and self.d.n == n):
            raise ValueError("all four sequences must have the same length")
        for s in (self.a, self.b, self.c, self.d):
            if not is_symmetric(s):
                raise ValueError(f"sequence {sequence_to_text(s)} is not symmetric")

    @property
    def n(self) -> int:
        return self.a.n

    def sequences(self) -> tuple[PmOneSequence, PmOneSequence, PmOneSequence, PmOneSequence]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return quadruple_to_text(self)


@dataclass(frozen=True)
class SquareMatrix:
    """Dense integer matrix, row-major entries."""

    order: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.order < 1:
            raise ValueError("order must be positive")
        if len(self.entries) != self.order * self.order:
            raise ValueError("entry count must equal order squared")

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.order + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.order : (i + 1) * self.order]


@lru_cache(maxsize=1 << 16)
def _symmetric_entries(entries: tuple[int, ...]) -> bool:
    n = len(entries)
    return all(entries[i] == entries[n - i] for i in range(1, n))


def is_symmetric(s: PmOneSequence) -> bool:
    """True iff s[i] = s[n-i] for all 1 <= i <= n-1 (indices mod n).

    Lengths 1 and 2 are vacuously symmetric.
    """
    return _symmetric_entries(s.entries)


@lru_cache(maxsize=1 << 16)
def _paf_vector(entries: tuple[int, ...]) -> tuple[int, ...]:
    # Every shift computed from the definition; callers index into this.
    n = len(entries)
    return tuple(
        sum(entries[i] * entries[(i + k) % n] for i in range(n))
        for k in range(n)
    )


def paf(s: PmOneSequence, shift: int) -> int:
    """Periodic autocorrelation of s at the given shift in [0, n)."""
    n = s.n
    if not 0 <= shift < n:
        raise ValueError(f"shift {shift} out of range [0, {n})")
    return _paf_vector(s.entries)[shift]


def row_sum(s: PmOneSequence) -> int:
    """Sum of the entries of s."""
    return sum(s.entries)


def is_williamson(q: WilliamsonQuadruple) -> bool:
    """True iff the PAFs of the four sequences sum to zero at every nonzero shift.

    Only shifts 1..n//2 are evaluated; paf(s, k) = paf(s, n-k) makes the
    rest redundant.  The shift-0 value is 4n automatically for ±1 entries.
    """
    n = q.n
    va = _paf_vector(q.a.entries)
    vb = _paf_vector(q.b.entries)
    vc = _paf_vector(q.c.entries)
    vd = _paf_vector(q.d.entries)
    return all(va[k] + vb[k] + vc[k] + vd[k] == 0 for k in range(1, n // 2 + 1))


def circulant(s: PmOneSequence) -> SquareMatrix:
    """The circulant matrix with first row s: M[i][j] = s[(j-i) mod n]."""
    e = s.entries
    n = len(e)
    flat: list[int] = []
    for i in range(n):
        flat.extend(e[n - i :] + e[: n - i] if i else e)
    return SquareMatrix(n, tuple(flat))


def _as_array(m: SquareMatrix) -> np.ndarray:
    return np.asarray(m.entries, dtype=np.int64).reshape(m.order, m.order)


@lru_cache(maxsize=1 << 14)
def _circulant_square(entries: tuple[int, ...]) -> np.ndarray:
    c = _as_array(circulant(PmOneSequence(entries)))
    sq = c @ c
    sq.setflags(write=False)
    return sq


@lru_cache(maxsize=128)
def _williamson_target(n: int) -> np.ndarray:
    t = 4 * n * np.eye(n, dtype=np.int64)
    t.setflags(write=False)
    return t


def matrix_williamson_check(q: WilliamsonQuadruple) -> bool:
    """Oracle form of the Williamson condition by explicit matrix arithmetic.

    Expands each sequence to its circulant, squares it by real matrix
    multiplication, sums the four squares, and compares entrywise with
    4n times the identity.  Exact integer arithmetic throughout.
    """
    acc = (
        _circulant_square(q.a.entries)
        + _circulant_square(q.b.entries)
        + _circulant_square(q.c.entries)
        + _circulant_square(q.d.entries)
    )
    return np.array_equal(acc, _williamson_target(q.n))


# ---------------------------------------------------------------------------
# Text form


def sequence_to_text(s: PmOneSequence) -> str:
    return "".join("+" if v == 1 else "-" for v in s.entries)


def quadruple_to_text(q: WilliamsonQuadruple) -> str:
    return ";".join(sequence_to_text(s) for s in q.sequences())


def _scan_signs(text: str, start: int, end: int) -> list[int]:
    out: list[int] = []
    for pos in range(start, end):
        ch = text[pos]
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise ParseError(f"unexpected character {ch!r}", column=pos + 1)
    return out


def _trimmed_span(text: str) -> tuple[int, int]:
    start, end = 0, len(text)
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return start, end


def parse_sequence(text: str) -> PmOneSequence:
    """Parse a '+'/'-' string; rejects any other character."""
    start, end = _trimmed_span(text)
    if start == end:
        raise ParseError("empty sequence", column=start + 1)
    return PmOneSequence(tuple(_scan_signs(text, start, end)))


def parse_quadruple(text: str) -> WilliamsonQuadruple:
    """Parse four ';'-joined sign strings into a quadruple.

    Raises ParseError for malformed text and ValueError (from the
    quadruple constructor) for structurally invalid sequences.
    """
    start, end = _trimmed_span(text)
    if start == end:
        raise ParseError("empty quadruple", column=start + 1)
    parts: list[tuple[int, int]] = []
    part_start = start
    for pos in range(start, end):
        if text[pos] == ";":
            parts.append((part_start, pos))
            part_start = pos + 1
    parts.append((part_start, end))
    if len(parts) != 4:
        raise ParseError(f"expected 4 ';'-separated sequences, got {len(parts)}", column=end)
    seqs = []
    for lo, hi in parts:
        if lo == hi:
            raise ParseError("empty sequence in quadruple", column=lo + 1)
        seqs.append(PmOneSequence(tuple(_scan_signs(text, lo, hi))))
    return WilliamsonQuadruple(*seqs)
