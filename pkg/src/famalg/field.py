"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are :class:`fractions.Fraction`; prime-field scalars are
plain ints in ``range(p)``.  All arithmetic goes through the bound methods of
a :class:`Field` so polynomial code never needs to know which one it has.
"""

from fractions import Fraction
import re

from .errors import IncompatibleContext, ParseError


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """QQ when ``p is None``, otherwise GF(p)."""

    __slots__ = ("p", "zero", "one", "add", "sub", "mul", "neg")

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if not (2 <= p < 2**31) or not is_prime(p):
                raise ValueError(f"modulus must be a prime in [2, 2^31), got {p}")
            self.zero, self.one = 0, 1
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.mul = lambda a, b: (a * b) % p
            self.neg = lambda a: (-a) % p
        else:
            self.zero, self.one = Fraction(0), Fraction(1)
            self.add = lambda a, b: a + b
            self.sub = lambda a, b: a - b
            self.mul = lambda a, b: a * b
            self.neg = lambda a: -a
        self.p = p

    @property
    def is_prime_field(self):
        return self.p is not None

    def __call__(self, x):
        """Coerce an int, Fraction, or numeric string into this field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def signed(self, a):
        """Representative used for printing: symmetric residue for GF(p)."""
        if self.p is None:
            return a
        return a - self.p if a > self.p // 2 else a

    def elements(self):
        if self.p is None:
            raise ValueError("QQ is infinite")
        return range(self.p)

    def check_same(self, other):
        if self != other:
            raise IncompatibleContext(f"field mismatch: {self} vs {other}")

    def descriptor(self):
        return "qq" if self.p is None else f"gf:{self.p}"

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field()


def GF(p):
    return Field(p)


_DESC = re.compile(r"^\s*(?:(qq|q|rational)|(?:gf|GF)[:(]?\s*(\d+)\s*\)?)\s*$", re.I)


def parse_field(text):
    """Parse ``qq`` or ``gf:P`` (also ``GF(P)``)."""
    m = _DESC.match(text)
    if not m:
        raise ParseError("bad field descriptor", text, 0)
    if m.group(1):
        return QQ
    return Field(int(m.group(2)))
