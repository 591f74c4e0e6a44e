"""Exact coefficient fields: prime fields GF(p) and the rationals QQ."""

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """A coefficient field.

    Elements are plain Python objects in canonical form: ints in
    ``range(p)`` for GF(p), ``Fraction`` instances for QQ (``Fraction``
    normalizes to lowest terms with a positive denominator by itself).
    """

    __slots__ = ("p",)

    def __init__(self, p=0):
        if p and (p >= 2**31 or not _is_prime(p)):
            raise ValueError(f"GF({p}): characteristic must be a prime below 2^31")
        self.p = p

    @classmethod
    def QQ(cls):
        return cls(0)

    @classmethod
    def GF(cls, p):
        return cls(p)

    @property
    def characteristic(self):
        return self.p

    def __call__(self, value):
        if self.p:
            if isinstance(value, Fraction):
                return (value.numerator * self.inv(value.denominator % self.p)) % self.p
            return int(value) % self.p
        return Fraction(value)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def red(self, x):
        return x % self.p if self.p else x

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in " + repr(self))
        if self.p:
            return pow(a, -1, self.p)
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_element(self, rng, bound=5):
        if self.p:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound))

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"


QQ = Field(0)


def GF(p):
    return Field(p)
