"""Brute-force Hilbert functions of free algebras modulo one twisted pairing.

The algebra is k<x_1,...,x_n>/(b) with b = sum_i x_i (x) sigma(x_{n+1-i})
for an invertible degree-one matrix sigma.  Degree m dimensions are computed
by exact elimination in the full word space V^(x)m, with no shared machinery
with the symmetric-algebra construction: this is the independent oracle the
comparison runs against.

The defining sum is written with x_{n+1-i} (so that it pairs x_1 with the
image of x_n and so on); a raw-relation constructor accepts any nonzero
element of V (x) V for other indexing conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import GroundField
from .linalg import rank


class SingularSigma(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


@dataclass
class ZhangAlgebra:
    field: GroundField
    n: int
    sigma: np.ndarray  # degree-one action, columns are images of the x_j
    relation: np.ndarray  # element of V (x) V, row-major length n*n

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least two generators")
        if not np.any(self.relation != 0):
            raise ValueError("relation must be nonzero")


def build_zhang(n: int, sigma, field: GroundField) -> ZhangAlgebra:
    """k<x_1..x_n> modulo sum_i x_i sigma(x_{n+1-i})."""
    f = field
    s = f.asarray(sigma)
    if s.shape != (n, n):
        raise ValueError("sigma must be n x n")
    if rank(f, s) != n:
        raise SingularSigma("sigma is not invertible")
    rel = f.zeros(n * n)
    for i in range(1, n + 1):
        col = s[:, n - i]  # sigma(x_{n+1-i}) in the basis x_1..x_n
        for c in range(n):
            if col[c] != 0:
                idx = (i - 1) * n + c
                rel[idx] = f.add(rel[idx], col[c])
    return ZhangAlgebra(f, n, s, rel)


def build_zhang_raw(n: int, relation, field: GroundField) -> ZhangAlgebra:
    """Constructor for a user-supplied quadratic relation in V (x) V."""
    f = field
    rel = f.asarray(relation)
    if rel.shape != (n * n,):
        raise ValueError("relation must have length n^2")
    return ZhangAlgebra(f, n, f.eye(n), rel)


def zhang_hilbert(Z: ZhangAlgebra, m_max: int, budget: int = 10**6) -> list[int]:
    """dim A_m for m = 0..m_max by elimination in the degree-m word space."""
    n, f = Z.n, Z.field
    if n**m_max > budget:
        raise BudgetExceeded(f"{n}^{m_max} exceeds the ambient budget {budget}")
    dims = []
    for m in range(m_max + 1):
        if m == 0:
            dims.append(1)
            continue
        if m == 1:
            dims.append(n)
            continue
        total = n**m
        rows = []
        rel = Z.relation
        nz = [(idx, rel[idx]) for idx in range(n * n) if rel[idx] != 0]
        for a in range(m - 1):
            left, right = n**a, n ** (m - 2 - a)
            for w1 in range(left):
                for w2 in range(right):
                    row = f.zeros(total)
                    for idx, c in nz:
                        row[(w1 * n * n + idx) * right + w2] = c
                    rows.append(row)
        dims.append(total - rank(f, np.stack(rows)))
    return dims


def compare_p1n(
    n: int,
    m_max: int,
    field: GroundField,
    sigma=None,
    budget: int = 10**6,
) -> dict:
    """Zhang Hilbert function against the symmetric-algebra dimension row.

    Both sides must agree degree by degree and satisfy the two-step
    recurrence d_{m+1} = n d_m - d_{m-1} forced by the Euler sequence.
    """
    from .bimodule import vector_space_bimodule
    from .window import build_ncsym, dim_table

    f = field
    s = f.eye(n) if sigma is None else f.asarray(sigma)
    Z = build_zhang(n, s, f)
    zh = zhang_hilbert(Z, m_max, budget=budget)
    W = build_ncsym(vector_space_bimodule(f, n), (0, m_max if m_max >= 2 else 2))
    row = dim_table(W).row(0)[: m_max + 1]
    rec_z = _recurrence_holds(zh, n)
    rec_s = _recurrence_holds(row, n)
    return {
        "n": n,
        "m_max": m_max,
        "zhang": zh,
        "sym": row,
        "equal": zh == row,
        "recurrence_zhang": rec_z,
        "recurrence_sym": rec_s,
        "pass": zh == row and rec_z and rec_s,
    }


def _recurrence_holds(dims: list[int], n: int) -> bool:
    return all(
        dims[m + 1] == n * dims[m] - dims[m - 1] for m in range(1, len(dims) - 1)
    )
