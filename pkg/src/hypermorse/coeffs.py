"""Coefficient specifications: the integers, the rationals, or a prime field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoeffSpec:
    """Tag for the coefficient ring: 'Z', 'Q', or 'Zp' with p prime."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zp"):
            raise ValueError("unknown coefficient kind %r" % (self.kind,))
        if self.kind == "Zp":
            if self.p is None or not _is_prime(self.p):
                raise ValueError("prime field needs a prime modulus, got %r" % (self.p,))
        elif self.p is not None:
            raise ValueError("modulus only makes sense for prime fields")

    @property
    def is_field(self):
        return self.kind in ("Q", "Zp")

    def label(self):
        if self.kind == "Zp":
            return "Z/%d" % self.p
        return self.kind

    @classmethod
    def parse(cls, text):
        """Parse the CLI spelling: 'z', 'q', or 'zp:<p>'."""
        t = text.strip().lower()
        if t == "z":
            return Z
        if t == "q":
            return Q
        if t.startswith("zp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError("bad prime field spec %r" % (text,)) from None
            return cls("Zp", p)
        raise ValueError("unsupported coefficient spec %r" % (text,))

    def normalize(self, x):
        """Coerce a scalar into the canonical representation for this ring."""
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("%r is not an integer" % (x,))
                return x.numerator
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        return int(x) % self.p


Z = CoeffSpec("Z")
Q = CoeffSpec("Q")


def prime_field(p):
    return CoeffSpec("Zp", p)
