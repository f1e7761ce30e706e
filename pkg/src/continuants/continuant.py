"""Continuant polynomials of periodic coefficient data.

A continuant K_n is the determinant of the n x n tridiagonal matrix with
diagonal a_p..a_{p+n-1}, superdiagonal b_p..b_{p+n-2} and subdiagonal
c_p..c_{p+n-2}, extended by K_{-1} = 0, K_0 = 1.  Four routes compute it:

* ``continuant_det_oracle`` materializes the matrix and runs fraction-free
  Bareiss elimination (structurally independent of the cofactor
  recurrence it validates; ``det_leibniz`` is a brute-force second oracle
  for small sizes),
* ``continuant_rec`` runs the three-term recurrence
  K_n = a_p K_{n-1}(shifted) - b_p c_p K_{n-2}(shifted twice) iteratively,
* ``transfer_matrix`` multiplies the 2x2 factors L(a, -bc) = [[a, -bc],
  [1, 0]], whose product encodes four consecutive continuants,
* the closed forms for periodic data live in :mod:`continuants.periodic`.
"""

from __future__ import annotations

from itertools import permutations
from typing import NamedTuple

from .mat2 import Mat2
from .ring import exact_div, field_div, ring_one, ring_zero


class PeriodicAlpha:
    """Period-l triple of coefficient arrays with a base index.

    Lookups wrap: ``a_at(m)`` returns ``a[(m - base) % l]``, so the
    sequences are l-periodic over all integers, negative included.
    Advancing the base by one is the same as rotating all three arrays
    left by one (see :meth:`rotated`).
    """

    __slots__ = ("l", "a", "b", "c", "base")

    def __init__(self, a, b, c, base: int = 1):
        a, b, c = tuple(a), tuple(b), tuple(c)
        if not a or len(a) != len(b) or len(a) != len(c):
            raise ValueError("a, b, c must be nonempty lists of equal length")
        object.__setattr__(self, "l", len(a))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "base", base)

    def __setattr__(self, name, value):
        raise AttributeError("PeriodicAlpha is immutable")

    def a_at(self, m: int):
        return self.a[(m - self.base) % self.l]

    def b_at(self, m: int):
        return self.b[(m - self.base) % self.l]

    def c_at(self, m: int):
        return self.c[(m - self.base) % self.l]

    def rotated(self, k: int = 1) -> "PeriodicAlpha":
        """Rotate all arrays left by k; models shifting the sequence by k."""
        k %= self.l
        rot = lambda xs: xs[k:] + xs[:k]
        return PeriodicAlpha(rot(self.a), rot(self.b), rot(self.c), self.base)

    def one(self):
        return ring_one(self.a[0])

    def zero(self):
        return ring_zero(self.a[0])

    def __eq__(self, other):
        if not isinstance(other, PeriodicAlpha):
            return NotImplemented
        return (self.l, self.a, self.b, self.c, self.base) == (
            other.l, other.a, other.b, other.c, other.base)

    def __repr__(self):
        return (f"PeriodicAlpha(a={list(self.a)}, b={list(self.b)}, "
                f"c={list(self.c)}, base={self.base})")


class KVector(NamedTuple):
    """Pair of consecutive continuants (K_{n}(p), K_{n-1}(p+1))."""

    top: object
    bottom: object


def continuant_rec(alpha: PeriodicAlpha, p: int, n: int):
    """K_n with base index p by the three-term recurrence, O(n) ring ops.

    Runs bottom-up over decreasing base shifts: with K_j denoting
    K_j(base p + n - j), each step is K_j = a*K_{j-1} - b*c*K_{j-2}.
    """
    if n < -1:
        raise ValueError("continuants are defined for n >= -1")
    km1 = alpha.zero()  # K_{-1}
    k = alpha.one()     # K_0
    for j in range(1, n + 1):
        idx = p + n - j
        km1, k = k, alpha.a_at(idx) * k - alpha.b_at(idx) * alpha.c_at(idx) * km1
    return k if n >= 0 else km1


def k_vector(alpha: PeriodicAlpha, p: int, n: int) -> KVector:
    """The column vector (K_n(alpha_p), K_{n-1}(alpha_{p+1}))."""
    return KVector(continuant_rec(alpha, p, n), continuant_rec(alpha, p + 1, n - 1))


def tridiagonal_matrix(alpha: PeriodicAlpha, p: int, n: int) -> list[list]:
    """Materialize the n x n tridiagonal matrix T_n(alpha_p)."""
    zero = alpha.zero()
    rows = [[zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = alpha.a_at(p + i)
        if i + 1 < n:
            rows[i][i + 1] = alpha.b_at(p + i)
            rows[i + 1][i] = alpha.c_at(p + i)
    return rows


def det_bareiss(rows: list[list]):
    """Fraction-free Bareiss determinant over an exact integral domain.

    Row swaps handle zero pivots.  Per-row support windows skip the zero
    fill of banded inputs but the algorithm itself is fully general.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix has no ring to supply det = 1")
    m = [list(r) for r in rows]
    zero = ring_zero(m[0][0])
    one = ring_one(m[0][0])
    # Conservative nonzero-column windows per row.
    lo = [0] * n
    hi = [n - 1] * n
    for i, row in enumerate(m):
        nz = [j for j, v in enumerate(row) if v != zero]
        if nz:
            lo[i], hi[i] = nz[0], nz[-1]
        else:
            return zero
    sign_flip = False
    prev = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for i in range(k + 1, n):
                if lo[i] <= k <= hi[i] and m[i][k] != zero:
                    m[k], m[i] = m[i], m[k]
                    lo[k], lo[i] = lo[i], lo[k]
                    hi[k], hi[i] = hi[i], hi[k]
                    sign_flip = not sign_flip
                    break
            else:
                return zero
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k] if lo[i] <= k <= hi[i] else zero
            if mik == zero:
                for j in range(max(k + 1, lo[i]), hi[i] + 1):
                    v = ri[j]
                    if v != zero:
                        ri[j] = exact_div(v * pivot, prev)
            else:
                for j in range(k + 1, max(hi[i], hi[k]) + 1):
                    ri[j] = exact_div(ri[j] * pivot - mik * rk[j], prev)
                ri[k] = zero
                lo[i] = min(lo[i], lo[k])
                hi[i] = max(hi[i], hi[k])
        prev = pivot
    result = m[n - 1][n - 1]
    return -result if sign_flip else result


def det_leibniz(rows: list[list]):
    """Determinant by the full n!-term Leibniz sum (small-n second oracle)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix has no ring to supply det = 1")
    zero = ring_zero(rows[0][0])
    total = zero
    for perm in permutations(range(n)):
        # Parity by counting inversions.
        inv = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if perm[i] > perm[j]
        )
        term = ring_one(rows[0][0])
        for i in range(n):
            v = rows[i][perm[i]]
            if v == zero:
                term = zero
                break
            term = term * v
        if term == zero:
            continue
        total = total + term if inv % 2 == 0 else total - term
    return total


def continuant_det_oracle(alpha: PeriodicAlpha, p: int, n: int):
    """K_n as a Bareiss determinant of the materialized matrix."""
    if n < -1:
        raise ValueError("continuants are defined for n >= -1")
    if n == -1:
        return alpha.zero()
    if n == 0:
        return alpha.one()
    return det_bareiss(tridiagonal_matrix(alpha, p, n))


def transfer_factor(alpha: PeriodicAlpha, idx: int) -> Mat2:
    """The single factor L(a_idx, -b_idx * c_idx) = [[a, -bc], [1, 0]]."""
    return Mat2(
        alpha.a_at(idx),
        -(alpha.b_at(idx) * alpha.c_at(idx)),
        alpha.one(),
        alpha.zero(),
    )


def transfer_matrix(alpha: PeriodicAlpha, p: int, n: int) -> Mat2:
    """Left-to-right product of the n transfer factors starting at index p.

    n = 0 yields the identity (empty product), which keeps the shift
    identity uniform at m = 0.
    """
    if n < 0:
        raise ValueError("transfer_matrix needs n >= 0")
    result = Mat2.identity_like(alpha.a[0])
    for i in range(n):
        result = result * transfer_factor(alpha, p + i)
    return result


def shift_check(alpha: PeriodicAlpha, p: int, n: int, m: int) -> bool:
    """Check k_{n+1}(p) == A_m(p) * k_{n+1-m}(p+m), all via the recurrence."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    lhs = k_vector(alpha, p, n + 1)
    rhs = transfer_matrix(alpha, p, m).apply(k_vector(alpha, p + m, n + 1 - m))
    return lhs.top == rhs[0] and lhs.bottom == rhs[1]


def cf_eval(alpha: PeriodicAlpha, p: int, n: int):
    """Evaluate a_p + b_p/(a_{p+1} + b_{p+1}/(... + b_{p+n-2}/a_{p+n-1})).

    Requires every c to equal -1 (the continued-fraction specialization)
    and a field-capable ring; the value equals K_n(p) / K_{n-1}(p+1).
    Raises ``ZeroDivisionError`` naming the level of any vanishing
    intermediate denominator.
    """
    if n < 1:
        raise ValueError("cf_eval needs n >= 1")
    neg_one = -alpha.one()
    if any(c != neg_one for c in alpha.c):
        raise ValueError("cf_eval requires every c to be -1")
    value = alpha.a_at(p + n - 1)
    for i in range(n - 2, -1, -1):
        try:
            tail = field_div(alpha.b_at(p + i), value)
        except ZeroDivisionError:
            raise ZeroDivisionError(
                f"zero denominator at continued-fraction level {i}"
            ) from None
        value = alpha.a_at(p + i) + tail
    return value
