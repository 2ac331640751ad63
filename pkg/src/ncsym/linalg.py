"""Exact dense linear algebra over a ground field.

Canonical representation throughout: a subspace is the reduced row echelon
form of any spanning set, with pivots 1 and pivot columns strictly
increasing.  Equality of subspaces is equality of those matrices.

Over the rationals, elimination is fraction-free (integer rows, gcd
normalization) with a single division pass at the end; over GF(p) it is the
usual mod-p reduction on int64 rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .fields import GroundField


class DimensionMismatch(ValueError):
    pass


def dot(field: GroundField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return field.reduce(np.dot(a, b))


def kron(field: GroundField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return field.reduce(np.kron(a, b))


def _int_rows(rows) -> list[list[int]]:
    """Clear denominators and common factors; rows become primitive int rows."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        r = [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row]
        g = 0
        for x in r:
            g = gcd(g, x)
        if g > 1:
            r = [x // g for x in r]
        out.append(r)
    return out


def _rref_qq(rows: list[list]) -> tuple[list[list[Fraction]], list[int]]:
    m = _int_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow, p = m[r], m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            if a == 0:
                continue
            row = m[i]
            m[i] = row = [p * x - a * y for x, y in zip(row, prow)]
            g = 0
            for x in row:
                g = gcd(g, x)
            if g > 1:
                m[i] = [x // g for x in row]
        pivots.append(c)
        r += 1
    # back-elimination above pivots, still over the integers
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        prow, p = m[k], m[k][c]
        for i in range(k):
            a = m[i][c]
            if a == 0:
                continue
            row = [p * x - a * y for x, y in zip(m[i], prow)]
            g = 0
            for x in row:
                g = gcd(g, x)
            if g > 1:
                row = [x // g for x in row]
            m[i] = row
    out = []
    for k, c in enumerate(pivots):
        p = m[k][c]
        out.append([Fraction(x, p) for x in m[k]])
    return out, pivots


def _rref_gf(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    m = [[int(x) % p for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] % p != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        prow = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [(x - a * y) % p for x, y in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def rref(field: GroundField, mat) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = np.asarray(mat)
    if a.ndim != 2:
        raise DimensionMismatch("rref expects a matrix")
    rows = [list(r) for r in a]
    if field.is_rationals:
        out, piv = _rref_qq(rows)
    else:
        out, piv = _rref_gf(rows, field.p)
    res = field.zeros(len(out), a.shape[1])
    for i, row in enumerate(out):
        for j, x in enumerate(row):
            res[i, j] = x if not isinstance(x, Fraction) or x.denominator != 1 else int(x)
    return res, tuple(piv)


def rank(field: GroundField, mat) -> int:
    return len(rref(field, mat)[1])


def nullspace(field: GroundField, mat) -> np.ndarray:
    """Canonical basis (as rows) of the right kernel {x : mat @ x = 0}."""
    a = np.asarray(mat)
    n = a.shape[1]
    r, piv = rref(field, a)
    free = [c for c in range(n) if c not in piv]
    basis = field.zeros(len(free), n)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = field.neg(r[i, fc])
    return basis


def solve(field: GroundField, mat, rhs) -> np.ndarray | None:
    """One solution of mat @ x = rhs, or None if inconsistent."""
    a = np.asarray(mat)
    b = np.asarray(rhs)
    m, n = a.shape
    aug = field.zeros(m, n + 1)
    aug[:, :n] = a
    aug[:, n] = b
    r, piv = rref(field, aug)
    if n in piv:
        return None
    x = field.zeros(n)
    for i, pc in enumerate(piv):
        x[pc] = r[i, n]
    return x


def inverse(field: GroundField, mat) -> np.ndarray:
    a = np.asarray(mat)
    n = a.shape[0]
    if a.shape[1] != n:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = field.zeros(n, 2 * n)
    aug[:, :n] = a
    for i in range(n):
        aug[i, n + i] = 1
    r, piv = rref(field, aug)
    if tuple(piv) != tuple(range(n)):
        raise DimensionMismatch("matrix is singular")
    return r[:, n:]


@dataclass(frozen=True)
class VectorSpaceK:
    """A finite-dimensional k-vector space with labelled coordinates."""

    dim: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.labels and len(self.labels) != self.dim:
            raise DimensionMismatch("label count differs from dim")


class Subspace:
    """A subspace of k^n, stored as canonical RREF rows."""

    def __init__(self, field: GroundField, ambient_dim: int, rows=None, *, _canonical=False):
        self.field = field
        self.ambient_dim = ambient_dim
        if rows is None or (hasattr(rows, "__len__") and len(rows) == 0):
            self.rows = field.zeros(0, ambient_dim)
            self.pivots: tuple[int, ...] = ()
            return
        rows = np.asarray(rows)
        if rows.shape[1] != ambient_dim:
            raise DimensionMismatch(
                f"vectors of length {rows.shape[1]} in ambient of dim {ambient_dim}"
            )
        if _canonical:
            self.rows = rows
            self.pivots = tuple(int(np.flatnonzero(r != 0)[0]) for r in rows)
        else:
            self.rows, self.pivots = rref(field, rows)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and bool(np.array_equal(self.rows, other.rows))
        )

    def __repr__(self):
        return f"Subspace(dim {self.rank} of k^{self.ambient_dim})"

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Residue of v modulo this subspace (zero iff contained)."""
        v = np.asarray(v)
        if v.shape[0] != self.ambient_dim:
            raise DimensionMismatch("vector/ambient mismatch")
        out = v.copy()
        f = self.field
        for i, c in enumerate(self.pivots):
            a = out[c]
            if a != 0:
                out = f.reduce(out - a * self.rows[i])
        return out

    def contains(self, v) -> bool:
        return not np.any(self.reduce(np.asarray(v)) != 0)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        stacked = np.concatenate([self.rows, other.rows], axis=0)
        return Subspace(self.field, self.ambient_dim, stacked)

    def intersect(self, other: "Subspace") -> "Subspace":
        """U cap W via the left kernel of the stacked basis rows."""
        self._check_ambient(other)
        r1, r2 = self.rank, other.rank
        if r1 == 0 or r2 == 0:
            return Subspace(self.field, self.ambient_dim)
        stacked = np.concatenate([self.rows, other.rows], axis=0)
        ker = nullspace(self.field, stacked.T)
        vecs = dot(self.field, ker[:, :r1], self.rows)
        return Subspace(self.field, self.ambient_dim, vecs)

    def _check_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces live in different ambients")


def span(field: GroundField, ambient: VectorSpaceK | int, vectors) -> Subspace:
    n = ambient.dim if isinstance(ambient, VectorSpaceK) else ambient
    vecs = [np.asarray(v) for v in vectors]
    for v in vecs:
        if v.shape[0] != n:
            raise DimensionMismatch(f"vector of length {v.shape[0]} in k^{n}")
    if not vecs:
        return Subspace(field, n)
    return Subspace(field, n, np.stack(vecs))


@dataclass(frozen=True)
class LinearMap:
    """A k-linear map, stored as a (codomain x domain) matrix."""

    field: GroundField
    domain_dim: int
    codomain_dim: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.matrix.shape != (self.codomain_dim, self.domain_dim):
            raise DimensionMismatch(
                f"matrix shape {self.matrix.shape} for map "
                f"k^{self.domain_dim} -> k^{self.codomain_dim}"
            )

    def __call__(self, v) -> np.ndarray:
        v = np.asarray(v)
        if v.shape[0] != self.domain_dim:
            raise DimensionMismatch("vector/domain mismatch")
        return dot(self.field, self.matrix, v)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        if inner.codomain_dim != self.domain_dim:
            raise DimensionMismatch("composition shape mismatch")
        return LinearMap(
            self.field,
            inner.domain_dim,
            self.codomain_dim,
            dot(self.field, self.matrix, inner.matrix),
        )

    @property
    def rank(self) -> int:
        return rank(self.field, self.matrix)

    def kernel(self) -> Subspace:
        return Subspace(self.field, self.domain_dim, nullspace(self.field, self.matrix))

    def image(self) -> Subspace:
        return Subspace(self.field, self.codomain_dim, self.matrix.T)

    def is_zero(self) -> bool:
        return not np.any(self.matrix != 0)


def identity_map(field: GroundField, n: int) -> LinearMap:
    return LinearMap(field, n, n, field.eye(n))


def quotient_map(field: GroundField, ambient: VectorSpaceK | int, sub: Subspace):
    """Quotient of the ambient by ``sub``.

    Returns (quotient space, projection, section).  Quotient coordinates are
    the non-pivot coordinates of the residue after reduction by ``sub``; the
    projection's kernel is exactly ``sub`` and section is a right inverse.
    """
    n = ambient.dim if isinstance(ambient, VectorSpaceK) else ambient
    if sub.ambient_dim != n:
        raise DimensionMismatch("subspace does not live in the ambient")
    nonpiv = [c for c in range(n) if c not in sub.pivots]
    q = len(nonpiv)
    proj = field.zeros(q, n)
    for k, c in enumerate(nonpiv):
        proj[k, c] = 1
        for i, pc in enumerate(sub.pivots):
            proj[k, pc] = field.neg(sub.rows[i, c])
    section = field.zeros(n, q)
    for k, c in enumerate(nonpiv):
        section[c, k] = 1
    return (
        VectorSpaceK(q),
        LinearMap(field, n, q, proj),
        LinearMap(field, q, n, section),
    )
