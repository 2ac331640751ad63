"""Finite-dimensional associative division algebras over the ground field.

An algebra is given by structure constants c[i,j,l] with
e_i * e_j = sum_l c[i,j,l] e_l and a distinguished two-sided unit.  Being a
division ring is never verified up front: every division is lazy and raises
``ZeroDivisorDetected`` with the offending element as witness.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .fields import GF, QQ, FieldError, GroundField
from . import linalg


class ReducibleMinpoly(ValueError):
    """The requested quotient would not be a field."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class ZeroDivisorDetected(ArithmeticError):
    """A singular multiplication matrix; the algebra is not a division ring."""

    def __init__(self, witness):
        super().__init__("zero divisor detected")
        self.witness = np.asarray(witness)


class DivisionAlgebra:
    """Structure-constant algebra, assumed (lazily) to be a division ring."""

    def __init__(self, field: GroundField, structure, unit_coords, name: str = "", validate=True):
        self.field = field
        self.structure = field.asarray(structure)
        if self.structure.ndim != 3 or len(set(self.structure.shape)) != 1:
            raise linalg.DimensionMismatch("structure constants must be a cubic rank-3 array")
        self.dim = self.structure.shape[0]
        self.unit = field.asarray(unit_coords)
        if self.unit.shape != (self.dim,):
            raise linalg.DimensionMismatch("unit vector has wrong length")
        self.name = name or f"alg{self.dim}"
        self._mul_flat = self.structure.reshape(self.dim, self.dim * self.dim)
        if validate:
            self._validate()

    def _validate(self):
        d = self.dim
        for i in range(d):
            e = self.basis_element(i)
            if np.any(self.mul(self.unit, e) != e) or np.any(self.mul(e, self.unit) != e):
                raise ValueError("unit_coords is not a two-sided identity")
        for i in range(d):
            for j in range(d):
                ij = self.mul(self.basis_element(i), self.basis_element(j))
                for l in range(d):
                    el = self.basis_element(l)
                    lhs = self.mul(ij, el)
                    rhs = self.mul(self.basis_element(i), self.mul(self.basis_element(j), el))
                    if np.any(lhs != rhs):
                        raise ValueError(f"structure constants not associative at ({i},{j},{l})")

    def __repr__(self):
        return f"DivisionAlgebra({self.name}, dim {self.dim} over {self.field})"

    def same_as(self, other: "DivisionAlgebra") -> bool:
        return (
            self is other
            or (
                self.field == other.field
                and self.dim == other.dim
                and bool(np.array_equal(self.structure, other.structure))
                and bool(np.array_equal(self.unit, other.unit))
            )
        )

    def element(self, coords) -> np.ndarray:
        v = self.field.asarray(coords)
        if v.shape != (self.dim,):
            raise linalg.DimensionMismatch(
                f"element of length {v.shape} in algebra of dim {self.dim}"
            )
        return v

    def basis_element(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = 1
        return v

    def scalar(self, x) -> np.ndarray:
        return self.field.reduce(self.field.coerce(x) * self.unit)

    def mul(self, a, b) -> np.ndarray:
        """Bilinear product via structure constants."""
        a = np.asarray(a)
        b = np.asarray(b)
        tmp = np.dot(a, self._mul_flat).reshape(self.dim, self.dim)  # (j, l)
        return self.field.reduce(np.dot(b, tmp))

    def left_mult_matrix(self, a) -> np.ndarray:
        """L_a with (L_a)x = a*x."""
        tmp = np.dot(np.asarray(a), self._mul_flat).reshape(self.dim, self.dim)
        return self.field.reduce(tmp.T)

    def right_mult_matrix(self, b) -> np.ndarray:
        """R_b with (R_b)x = x*b."""
        cols = [self.mul(self.basis_element(i), b) for i in range(self.dim)]
        return np.stack(cols, axis=1) if cols else self.field.zeros(0, 0)

    def inv(self, a) -> np.ndarray:
        """Two-sided inverse by linear solve; raises ZeroDivisorDetected."""
        a = np.asarray(a)
        if not np.any(a != 0):
            raise ZeroDivisorDetected(a)
        x = linalg.solve(self.field, self.left_mult_matrix(a), self.unit)
        if x is None:
            raise ZeroDivisorDetected(a)
        if np.any(self.mul(a, x) != self.unit) or np.any(self.mul(x, a) != self.unit):
            raise ZeroDivisorDetected(a)
        return x

    def is_unit_element(self, a) -> bool:
        return bool(np.array_equal(np.asarray(a), self.unit))


def alg_mul(D: DivisionAlgebra, a, b) -> np.ndarray:
    return D.mul(a, b)


def alg_inv(D: DivisionAlgebra, a) -> np.ndarray:
    return D.inv(a)


def base_field_algebra(field: GroundField, name: str = "k") -> DivisionAlgebra:
    return DivisionAlgebra(field, [[[1]]], [1], name=name)


# -- extension fields -------------------------------------------------------


def _poly_int_normalize(field: GroundField, coeffs) -> list:
    cs = [field.coerce(c) for c in coeffs]
    if len(cs) < 2:
        raise ReducibleMinpoly("minpoly must have degree >= 1")
    if cs[-1] != 1:
        raise ReducibleMinpoly("minpoly must be monic")
    return cs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_root_candidates(const: int) -> list[int]:
    if const == 0:
        return [0]
    out = []
    for d in _divisors(const):
        out.extend([d, -d])
    return out


def _poly_eval_int(cs: list[int], x: int) -> int:
    v = 0
    for c in reversed(cs):
        v = v * x + c
    return v


def _qq_irreducible(coeffs: list) -> tuple[bool, list | None]:
    """Irreducibility over Q for monic degree <= 4, via y = N*t substitution."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True, None
    if deg > 4:
        raise ReducibleMinpoly(
            "irreducibility over Q is only decided up to degree 4; use a prime field"
        )
    den = 1
    for c in coeffs:
        f = Fraction(c)
        den = den * f.denominator // gcd(den, f.denominator)
    # g(u) = den^deg * f(u/den) is monic with integer coefficients
    g = [int(Fraction(coeffs[i]) * den ** (deg - i)) for i in range(deg)] + [1]
    for r in _int_root_candidates(g[0]):
        if _poly_eval_int(g, r) == 0:
            return False, [Fraction(-r, den), 1]
    if deg < 4:
        return True, None
    # monic integer quartic: look for (u^2+pu+q)(u^2+ru+s) over Z
    a3, a2, a1, a0 = g[3], g[2], g[1], g[0]
    for q in _int_root_candidates(a0):
        if q == 0 or a0 % q != 0:
            continue
        s = a0 // q
        # p + r = a3, pr = a2 - q - s, p*s + q*r = a1
        m = a2 - q - s
        disc = a3 * a3 - 4 * m
        if disc < 0:
            continue
        root = isqrt(disc)
        if root * root != disc or (a3 - root) % 2 != 0:
            continue
        for pp in {(a3 + root) // 2, (a3 - root) // 2}:
            rr = a3 - pp
            if pp * s + q * rr == a1:
                factor = [Fraction(q, den * den), Fraction(pp, den), 1]
                return False, factor
    return True, None


def _gf_polmul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _gf_polmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - db
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _gf_irreducible(coeffs: list[int], p: int) -> tuple[bool, list | None]:
    """Exhaustive trial division by monic factors of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True, None
    for r in range(p):
        if _poly_eval_int(coeffs, r) % p == 0:
            return False, [(-r) % p, 1]
    if deg < 4:
        return True, None
    if p ** (deg // 2) > 10**6:
        raise ReducibleMinpoly("factor search budget exceeded for this prime field")
    for d in range(2, deg // 2 + 1):
        for idx in range(p**d):
            tail, k = [], idx
            for _ in range(d):
                tail.append(k % p)
                k //= p
            cand = tail + [1]
            rem = _gf_polmod(list(coeffs), cand, p)
            if rem == [0]:
                return False, cand
    return True, None


def make_extension_field(base: GroundField, minpoly, name: str = "") -> DivisionAlgebra:
    """The field base[t]/(minpoly) with power basis 1, t, ..., t^(d-1).

    minpoly is the coefficient vector c_0, ..., c_d (monic, c_d = 1).
    Raises ReducibleMinpoly when a factorization is found.
    """
    cs = _poly_int_normalize(base, minpoly)
    deg = len(cs) - 1
    if base.is_rationals:
        ok, factor = _qq_irreducible(cs)
    else:
        ok, factor = _gf_irreducible([int(c) for c in cs], base.p)
    if not ok:
        raise ReducibleMinpoly(f"minpoly factors; witness factor {factor}", factor=factor)
    if deg == 1:
        return base_field_algebra(base, name=name or "k")
    # powers of t modulo the minpoly, as coordinate vectors
    powers = [base.zeros(deg) for _ in range(2 * deg - 1)]
    for m in range(deg):
        powers[m][m] = 1
    for m in range(deg, 2 * deg - 1):
        prev = powers[m - 1]
        shifted = base.zeros(deg + 1)
        shifted[1:] = prev
        top = shifted[deg]
        red = shifted[:deg].copy()
        if top != 0:
            for i in range(deg):
                red[i] = base.sub(red[i], base.mul(top, cs[i]))
        powers[m] = red
    structure = base.zeros(deg, deg, deg)
    for i in range(deg):
        for j in range(deg):
            structure[i, j, :] = powers[i + j]
    unit = base.zeros(deg)
    unit[0] = 1
    return DivisionAlgebra(base, structure, unit, name=name or f"ext{deg}")
