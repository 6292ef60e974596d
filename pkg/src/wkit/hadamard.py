"""Hadamard matrices of order 4n from Williamson quadruples.

The block pattern used here is

    (  A   B   C   D )
    ( -B   A  -D   C )
    ( -C   D   A  -B )
    ( -D  -C   B   A )

with each block the circulant of the corresponding sequence.  Sign
conventions for this array vary across sources, so rather than trusting
any one of them, every construction in this package is verified by
`is_hadamard` (H * H^T = order * I, computed exactly).
"""

from __future__ import annotations

import numpy as np

from .seqcore import (
    PmOneSequence,
    PreconditionError,
    SquareMatrix,
    WilliamsonQuadruple,
    _as_array,
    circulant,
    is_williamson,
)


def williamson_array(q: WilliamsonQuadruple) -> SquareMatrix:
    """Assemble the 4n x 4n block matrix from a verified Williamson quadruple."""
    if not is_williamson(q):
        raise PreconditionError("williamson_array requires a Williamson quadruple")
    a, b, c, d = (_as_array(circulant(s)) for s in q.sequences())
    block = np.block(
        [
            [a, b, c, d],
            [-b, a, -d, c],
            [-c, d, a, -b],
            [-d, -c, b, a],
        ]
    )
    return SquareMatrix(4 * q.n, tuple(int(v) for v in block.ravel()))


def is_hadamard(m: SquareMatrix) -> bool:
    """True iff M * M^T equals order * I.  Entries must all be ±1."""
    if any(v not in (1, -1) for v in m.entries):
        raise ValueError("is_hadamard requires ±1 entries")
    h = np.asarray(m.entries, dtype=np.int64).reshape(m.order, m.order)
    return np.array_equal(h @ h.T, m.order * np.eye(m.order, dtype=np.int64))


def matrix_to_text(m: SquareMatrix) -> str:
    """Matrix text form: "order N" then one '+'/'-' row per line."""
    if any(v not in (1, -1) for v in m.entries):
        raise ValueError("matrix text form requires ±1 entries")
    lines = [f"order {m.order}"]
    for i in range(m.order):
        lines.append("".join("+" if v == 1 else "-" for v in m.row(i)))
    return "\n".join(lines)
