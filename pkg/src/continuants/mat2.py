"""2x2 matrices over an exact ring, with naive and Chebyshev fast powers.

The Cayley-Hamilton route expresses A^m through the scaled Chebyshev
values S_k(tr A, det A): A^m = S_{m-1} * A - det(A) * S_{m-2} * I for
m >= 1.  Because S_k(t, 0) = t^k, the same code path covers singular
matrices, where A^m = (tr A)^{m-1} * A.
"""

from __future__ import annotations

from .chebyshev import scaled_u_pair
from .ring import ring_one, ring_zero


class Mat2:
    """Row-major 2x2 matrix; entries must share one ring."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    @staticmethod
    def identity_like(sample) -> "Mat2":
        """Identity matrix over the ring of ``sample``."""
        one = ring_one(sample)
        zero = ring_zero(sample)
        return Mat2(one, zero, zero, one)

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def scale(self, k) -> "Mat2":
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __add__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, v):
        """Multiply onto a 2-vector (pair)."""
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return x * y


def mat_power_naive(a: Mat2, m: int) -> Mat2:
    """A^m by repeated multiplication (reference oracle); A^0 = I."""
    if m < 0:
        raise ValueError("nonnegative powers only")
    result = Mat2.identity_like(a.a)
    for _ in range(m):
        result = result * a
    return result


def mat_power_binexp(a: Mat2, m: int) -> Mat2:
    """A^m by binary exponentiation, O(log m) multiplications."""
    if m < 0:
        raise ValueError("nonnegative powers only")
    result = Mat2.identity_like(a.a)
    base = a
    while m:
        if m & 1:
            result = result * base
        if m > 1:
            base = base * base
        m >>= 1
    return result


def mat_power_cheb(a: Mat2, m: int) -> Mat2:
    """A^m via scaled Chebyshev values of the trace and determinant.

    m = 0 is special-cased to the identity: the closed form at m = 0 would
    need S_{-2} = -1/det, and A^0 = I regardless.
    """
    if m < 0:
        raise ValueError("nonnegative powers only")
    if m == 0:
        return Mat2.identity_like(a.a)
    t = a.trace()
    d = a.det()
    s1, s2 = scaled_u_pair(m - 1, t, d)  # S_{m-1}, S_{m-2}
    ident = Mat2.identity_like(a.a)
    return a.scale(s1) - ident.scale(d * s2)
