"""Exact ground fields: the rationals and prime fields GF(p).

Every scalar in the engine is either a Python int / ``fractions.Fraction``
(characteristic 0) or an int in ``[0, p)`` (characteristic p).  No floats,
ever.  Matrices and vectors are numpy arrays: dtype ``object`` over the
rationals, dtype ``int64`` over a prime field.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs here are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GroundField:
    """The base field k: rationals (``p is None``) or GF(p) for prime p."""

    def __init__(self, p: int | None = None):
        if p is not None and not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GroundField) and self.p == other.p

    def __hash__(self):
        return hash(("GroundField", self.p))

    # -- scalar arithmetic ------------------------------------------------

    def coerce(self, x):
        """Accept int, Fraction, or a string like ``"3"`` / ``"-2/7"``."""
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, float):
            raise FieldError("floating point input rejected; use exact rationals")
        if self.p is None:
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else x
            raise FieldError(f"cannot coerce {x!r} into QQ")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, int):
            return x % self.p
        raise FieldError(f"cannot coerce {x!r} into GF({self.p})")

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return Fraction(1, 1) / Fraction(a)
        return pow(int(a), -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        """Canonical serialization: ``"n"`` or ``"n/d"``."""
        if self.p is None:
            f = Fraction(a)
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        return str(int(a) % self.p)

    # -- array helpers -----------------------------------------------------

    @property
    def dtype(self):
        return object if self.p is None else np.int64

    def asarray(self, data) -> np.ndarray:
        a = np.empty(np.shape(data), dtype=object)
        a[...] = data
        flat = a.reshape(-1)
        out = np.empty(flat.shape[0], dtype=self.dtype)
        for i, x in enumerate(flat):
            out[i] = self.coerce(x)
        return out.reshape(a.shape)

    def zeros(self, *shape) -> np.ndarray:
        if self.p is None:
            a = np.empty(shape, dtype=object)
            a[...] = 0
            return a
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros(n, n)
        for i in range(n):
            a[i, i] = 1
        return a

    def reduce(self, a: np.ndarray) -> np.ndarray:
        """Normalize an array after arithmetic (mod p in characteristic p)."""
        return a if self.p is None else a % self.p

    def rand(self, rng, nonzero: bool = False):
        """Small deterministic random scalar from ``rng`` (a random.Random)."""
        while True:
            if self.p is None:
                x = rng.randint(-5, 5)
            else:
                x = rng.randrange(self.p)
            if x != 0 or not nonzero:
                return self.coerce(x)


QQ = GroundField()


def GF(p: int) -> GroundField:
    return GroundField(p)
