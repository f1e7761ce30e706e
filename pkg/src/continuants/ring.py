"""Exact coefficient rings.

Three interchangeable exact rings back everything in this package:

* big rationals -- the stdlib ``fractions.Fraction``,
* integer-coefficient Laurent polynomials in one variable ``q``
  (``LaurentPoly``),
* modular integers for benchmarking (``ModInt``, prime modulus).

``LaurentFraction`` is the fraction field of ``LaurentPoly``: a normalized
numerator/denominator pair.  Normalization is by integer content, a power
of ``q`` (lowest denominator exponent becomes 0) and the denominator's
leading sign; no polynomial gcd is attempted, so equality compares
cross-multiplied products.

Elements of different rings never mix: arithmetic between them raises
``TypeError`` (``ValueError`` for ``ModInt`` values with different moduli).
All values are immutable and all operations pure.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

#: Default benchmark modulus: the Mersenne prime 2^61 - 1.
DEFAULT_MODULUS = (1 << 61) - 1

_modint_ops = 0


def reset_modint_ops() -> None:
    """Zero the global ModInt operation counter."""
    global _modint_ops
    _modint_ops = 0


def modint_ops() -> int:
    """Number of ModInt ring operations since the last reset."""
    return _modint_ops


class LaurentPoly:
    """Finitely supported map from integer exponents to integer coefficients.

    The zero polynomial has an empty term map; stored coefficients are
    never zero.  Instances are immutable by convention.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if not isinstance(c, int):
                    raise TypeError(f"Laurent coefficients must be int, got {type(c).__name__}")
                if c:
                    clean[int(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # --- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    # --- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self.terms)

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def coeff(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    # --- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * k: 1 if c == 1 or k % 2 == 0 else -1})
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide by ``other``, requiring the quotient to exist in the ring.

        Raises ``ZeroDivisionError`` for a zero divisor and ``ValueError``
        when ``other`` does not divide ``self`` exactly over the integers.
        """
        o = self._coerce(other)
        if o is None:
            raise TypeError("cannot divide LaurentPoly by %r" % (other,))
        if o.is_zero():
            raise ZeroDivisionError("Laurent polynomial division by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        # Strip q-powers so both sides are ordinary polynomials.
        ns, ds = self.min_exp(), o.min_exp()
        num = self.shift(-ns)
        den = o.shift(-ds)
        nd, dd = num.max_exp(), den.max_exp()
        if nd < dd:
            raise ValueError("not divisible: degree too small")
        rem = [num.coeff(i) for i in range(nd + 1)]
        div = [den.coeff(i) for i in range(dd + 1)]
        quot = [0] * (nd - dd + 1)
        lead = div[dd]
        for k in range(nd - dd, -1, -1):
            qc, r = divmod(rem[k + dd], lead)
            if r:
                raise ValueError("not divisible over the integers")
            quot[k] = qc
            if qc:
                for i, dc in enumerate(div):
                    rem[k + i] -= qc * dc
        if any(rem):
            raise ValueError("not divisible: nonzero remainder")
        return LaurentPoly({k + ns - ds: c for k, c in enumerate(quot) if c})

    def evaluate(self, x):
        """Evaluate at a numeric value of q (Fraction, int or float)."""
        total = x * 0
        for e, c in self.terms.items():
            total += c * x ** e
        return total

    # --- text ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


_LAURENT_TERM = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+)\s*(?:\*?\s*(?P<var1>q)(?:\^(?P<exp1>[+-]?\d+))?)?
          | (?P<var2>q)(?:\^(?P<exp2>[+-]?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial like ``"1 + 2*q - q^-1"``.

    Whitespace-insensitive; ``*`` is optional; ``^`` introduces an integer
    exponent (possibly negative).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _LAURENT_TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial at {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing +/- between terms near {s[pos:]!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") is not None else 1
        if sign == "-":
            coeff = -coeff
        has_var = m.group("var1") is not None or m.group("var2") is not None
        if m.group("exp1") is not None:
            exp = int(m.group("exp1"))
        elif m.group("exp2") is not None:
            exp = int(m.group("exp2"))
        elif has_var:
            exp = 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
        first = False
    return LaurentPoly(terms)


class ModInt:
    """Integer residue modulo a fixed odd prime (benchmark ring)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int = DEFAULT_MODULUS):
        object.__setattr__(self, "value", value % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ModInt is immutable")

    def _lift(self, other):
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return None

    def __add__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        global _modint_ops
        _modint_ops += 1
        return ModInt(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        global _modint_ops
        _modint_ops += 1
        return ModInt(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        global _modint_ops
        _modint_ops += 1
        return ModInt(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        global _modint_ops
        _modint_ops += 1
        return ModInt(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        global _modint_ops
        _modint_ops += 1
        return ModInt(-self.value, self.modulus)

    def __truediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("ModInt division by zero")
        global _modint_ops
        _modint_ops += 1
        return ModInt(self.value * pow(v, self.modulus - 2, self.modulus), self.modulus)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        global _modint_ops
        _modint_ops += 1
        return ModInt(pow(self.value, k, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ModInt({self.value}, mod={self.modulus})"


class LaurentFraction:
    """Quotient of two integer Laurent polynomials, kept normalized.

    Normal form: the denominator's lowest exponent is 0, its leading
    (highest-exponent) coefficient is positive, and the gcd of both
    contents is 1.  When the denominator divides the numerator exactly the
    pair collapses to ``poly / 1``.  Equality is by cross-multiplication,
    so unreduced-but-equal fractions compare equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None):
        num = self._as_poly(num)
        den = LaurentPoly.one() if den is None else self._as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("LaurentFraction with zero denominator")
        if num.is_zero():
            num, den = LaurentPoly.zero(), LaurentPoly.one()
        else:
            shift = -den.min_exp()
            num, den = num.shift(shift), den.shift(shift)
            g = math.gcd(num.content(), den.content())
            if g > 1:
                num = LaurentPoly({e: c // g for e, c in num.terms.items()})
                den = LaurentPoly({e: c // g for e, c in den.terms.items()})
            if den.terms[den.max_exp()] < 0:
                num, den = -num, -den
            if den != LaurentPoly.one():
                try:
                    q = num.exact_div(den)
                except ValueError:
                    pass
                else:
                    num, den = q, LaurentPoly.one()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentFraction is immutable")

    @staticmethod
    def _as_poly(x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        raise TypeError(f"expected LaurentPoly, got {type(x).__name__}")

    @classmethod
    def zero(cls) -> "LaurentFraction":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "LaurentFraction":
        return cls(LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentFraction):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return LaurentFraction(LaurentFraction._as_poly(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentFraction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LaurentFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("LaurentFraction division by zero")
        return LaurentFraction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        # Hash only a cross-multiplication invariant: equal fractions in
        # different written forms must collide.
        return hash(self.num.is_zero())

    def evaluate(self, x):
        return Fraction(self.num.evaluate(x), self.den.evaluate(x))

    def __str__(self):
        if self.den == LaurentPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"LaurentFraction({self})"


# --- ring-generic helpers ----------------------------------------------


def ring_zero(x):
    """The additive identity of the ring that ``x`` lives in."""
    if isinstance(x, Fraction):
        return Fraction(0)
    if isinstance(x, LaurentPoly):
        return LaurentPoly.zero()
    if isinstance(x, ModInt):
        return ModInt(0, x.modulus)
    if isinstance(x, LaurentFraction):
        return LaurentFraction.zero()
    if isinstance(x, int):
        return 0
    raise TypeError(f"not a ring element: {type(x).__name__}")


def ring_one(x):
    """The multiplicative identity of the ring that ``x`` lives in."""
    if isinstance(x, Fraction):
        return Fraction(1)
    if isinstance(x, LaurentPoly):
        return LaurentPoly.one()
    if isinstance(x, ModInt):
        return ModInt(1, x.modulus)
    if isinstance(x, LaurentFraction):
        return LaurentFraction.one()
    if isinstance(x, int):
        return 1
    raise TypeError(f"not a ring element: {type(x).__name__}")


def field_div(x, y):
    """Divide in a field-capable ring.

    Laurent polynomials are lifted into their fraction field; everything
    else divides directly.  Division by zero raises ``ZeroDivisionError``.
    """
    if isinstance(x, LaurentPoly) or isinstance(y, LaurentPoly):
        return LaurentFraction._coerce(x) / LaurentFraction._coerce(y)
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def exact_div(x, y):
    """Exact division inside an integral domain (used by Bareiss)."""
    if isinstance(x, LaurentPoly):
        return x.exact_div(y)
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        if r:
            raise ValueError(f"{x} not divisible by {y}")
        return q
    return x / y


# --- named ring descriptors (parsing, printing, CLI) ---------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(\s*/\s*\d+)?$")


class RationalRing:
    name = "rational"
    is_field = True

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def parse(self, text: str) -> Fraction:
        s = text.strip()
        if not _RATIONAL_RE.match(s):
            raise ValueError(f"not a rational literal: {text!r}")
        return Fraction(s.replace(" ", ""))

    def format(self, x) -> str:
        return str(x)


class LaurentRing:
    name = "laurent"
    is_field = False

    @property
    def zero(self):
        return LaurentPoly.zero()

    @property
    def one(self):
        return LaurentPoly.one()

    def parse(self, text: str) -> LaurentPoly:
        return parse_laurent(text)

    def format(self, x) -> str:
        return str(x)


class ModIntRing:
    name = "modint"
    is_field = True

    def __init__(self, modulus: int = DEFAULT_MODULUS):
        # Inverses use Fermat's little theorem, so primality is assumed
        # (not verified) beyond this cheap sanity check.
        if modulus < 3 or modulus % 2 == 0:
            raise ValueError("modulus must be an odd prime")
        self.modulus = modulus

    @property
    def zero(self):
        return ModInt(0, self.modulus)

    @property
    def one(self):
        return ModInt(1, self.modulus)

    def parse(self, text: str) -> ModInt:
        s = text.strip()
        if not re.match(r"^[+-]?\d+$", s):
            raise ValueError(f"not an integer literal: {text!r}")
        return ModInt(int(s), self.modulus)

    def format(self, x) -> str:
        return str(x)


def ring_by_name(name: str, modulus: int | None = None):
    """Look up a ring descriptor by config name."""
    if name == "rational":
        return RationalRing()
    if name == "laurent":
        return LaurentRing()
    if name == "modint":
        return ModIntRing(modulus if modulus is not None else DEFAULT_MODULUS)
    raise ValueError(f"unknown ring {name!r}")
