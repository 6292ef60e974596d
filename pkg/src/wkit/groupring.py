"""Exact arithmetic in the integer group ring of a cyclic group.

An element of Z[C_n] is a coefficient vector (c_0, ..., c_{n-1}) standing
for c_0 + c_1*u + ... + c_{n-1}*u^{n-1} with u^n = 1; multiplication is
cyclic convolution.  A ±1 sequence X embeds as the element with its own
entries as coefficients, and its positive support P_X marks the +1
positions with coefficient 1.

Two identities about Williamson quadruples are implemented here as
independently computed checks:

  * the positive-support square identity
        P_A^2 + P_B^2 + P_C^2 + P_D^2
            = (p_A + p_B + p_C + p_D - n) * (1 + u + ... + u^{n-1}) + n
    where p_X counts the +1 entries of X, and

  * the mod-2 square collapse  P_X^2 = sum over +1 positions i of u^{2i}
    (mod 2), which holds for every ±1 sequence,

together with the parity consequence for even n: among the eight entries
feeding positions k/2 and (k+n)/2 of the four sequences, the number of
+1s is even for every even k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .seqcore import PmOneSequence, PreconditionError, WilliamsonQuadruple, is_williamson


@dataclass(frozen=True)
class GroupRingElement:
    """Element of Z[C_n]: coeffs[i] is the coefficient of u^i."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.n < 1:
            raise ValueError("group order must be positive")
        if len(self.coeffs) != self.n:
            raise ValueError("coefficient count must equal the group order")

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


def gre_from_signs(s: PmOneSequence) -> GroupRingElement:
    """Embed a ±1 sequence as a group ring element, entry i on u^i."""
    return GroupRingElement(s.n, s.entries)


def positive_support(s: PmOneSequence) -> GroupRingElement:
    """The 0/1 element marking the positions where s is +1."""
    return GroupRingElement(s.n, tuple(1 if v == 1 else 0 for v in s.entries))


def positive_count(s: PmOneSequence) -> int:
    """Number of +1 entries of s (the coefficient sum of its positive support)."""
    return sum(1 for v in s.entries if v == 1)


def gre_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Schoolbook cyclic convolution: result[k] = sum over i+j = k (mod n)."""
    if x.n != y.n:
        raise ValueError(f"order mismatch: {x.n} != {y.n}")
    n = x.n
    out = [0] * n
    xc, yc = x.coeffs, y.coeffs
    for i in range(n):
        xi = xc[i]
        if xi == 0:
            continue
        for j in range(n):
            out[(i + j) % n] += xi * yc[j]
    return GroupRingElement(n, tuple(out))


def hall_identity_check(q: WilliamsonQuadruple) -> bool:
    """Check the positive-support square identity on a Williamson quadruple.

    Computes P_A^2 + P_B^2 + P_C^2 + P_D^2 by convolution and compares it
    coefficientwise with (p_A+p_B+p_C+p_D-n) on every power of u plus an
    extra n on u^0.  The identity is only claimed for Williamson input, so
    a non-Williamson quadruple raises PreconditionError instead of
    returning a meaningless boolean.
    """
    if not is_williamson(q):
        raise PreconditionError("hall_identity_check requires a Williamson quadruple")
    n = q.n
    lhs = [0] * n
    psum = 0
    for s in q.sequences():
        p = positive_support(s)
        psum += sum(p.coeffs)
        sq = gre_mul(p, p)
        for i, c in enumerate(sq.coeffs):
            lhs[i] += c
    base = psum - n
    rhs = [base] * n
    rhs[0] += n
    return lhs == rhs


def mod2_square_check(s: PmOneSequence) -> bool:
    """Check P_X^2 against the doubled-exponent sum, coefficientwise mod 2.

    Holds for every ±1 sequence; kept as a tested oracle, not a filter.
    """
    n = s.n
    p = positive_support(s)
    sq = gre_mul(p, p)
    doubled = [0] * n
    for i, v in enumerate(s.entries):
        if v == 1:
            doubled[2 * i % n] += 1
    return all((a - b) % 2 == 0 for a, b in zip(sq.coeffs, doubled))


def even_coefficient_parity_check(q: WilliamsonQuadruple) -> bool:
    """For even n: every even k sees an even number of +1s among the eight
    entries at positions k/2 and (k+n)/2 of the four sequences.

    This is the counting fact behind the even-order product theorem.  The
    count itself is defined for any even-order quadruple, so no Williamson
    check is performed here; the theorem claim only covers Williamson input.
    """
    n = q.n
    if n % 2 != 0:
        raise PreconditionError("even_coefficient_parity_check requires even order")
    for k in range(0, n, 2):
        i, j = k // 2, (k + n) // 2
        ones = sum(1 for s in q.sequences() for v in (s.entries[i], s.entries[j]) if v == 1)
        if ones % 2 != 0:
            return False
    return True
