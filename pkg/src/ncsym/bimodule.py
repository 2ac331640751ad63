"""k-central bimodules over division algebras.

A bimodule is a k-space with commuting unital actions of a left and a right
division algebra, given by one action matrix per algebra basis element.
This module supplies:

  * basis extraction over either acting algebra (deterministic greedy
    elimination, verified afterwards by noncommutative elimination whose
    pivots are inverted with ``DivisionAlgebra.inv``),
  * right and left duals with explicit dual coordinate bases and evaluation
    data, and iterated duals in both directions,
  * the dual-basis trace vector (sum of basis tensor dual-basis) and the
    sub-bimodule it generates inside the balanced tensor square,
  * 2-periodicity and forbidden-type reports,
  * tensor products over a middle division algebra, realized as quotients
    of the k-tensor space by the balanced relations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DivisionAlgebra, base_field_algebra
from .fields import GroundField
from .linalg import (
    DimensionMismatch,
    LinearMap,
    Subspace,
    VectorSpaceK,
    dot,
    inverse,
    kron,
    quotient_map,
    span,
)


class ActionMismatch(ValueError):
    pass


class NotFree(ValueError):
    """Retained for the error contract; unreachable over division algebras."""


class Bimodule:
    """A k-central left_alg-right_alg-bimodule with explicit k-basis."""

    def __init__(
        self,
        field: GroundField,
        left_alg: DivisionAlgebra,
        right_alg: DivisionAlgebra,
        kdim: int,
        left_action,
        right_action,
        name: str = "",
        validate: bool = True,
    ):
        self.field = field
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.kdim = kdim
        self.left_action = [field.asarray(m) for m in left_action]
        self.right_action = [field.asarray(m) for m in right_action]
        self.name = name or f"bimod{kdim}"
        self._iter_cache: dict[int, "Bimodule"] = {0: self}
        self._dual_info = None
        if len(self.left_action) != left_alg.dim or len(self.right_action) != right_alg.dim:
            raise DimensionMismatch("one action matrix per algebra basis element required")
        for m in self.left_action + self.right_action:
            if m.shape != (kdim, kdim):
                raise DimensionMismatch("action matrix shape mismatch")
        if validate:
            self._validate()

    # -- validation ---------------------------------------------------------

    def _validate(self):
        f = self.field
        kd = self.kdim
        ident = f.eye(kd)
        for alg, acts, kind in (
            (self.left_alg, self.left_action, "left"),
            (self.right_alg, self.right_action, "right"),
        ):
            u = sum(alg.unit[e] * acts[e] for e in range(alg.dim))
            if np.any(f.reduce(u) != ident):
                raise ActionMismatch(f"{kind} action is not unital")
        for i in range(self.left_alg.dim):
            for j in range(self.left_alg.dim):
                want = self._combine(self.left_alg, self.left_action, i, j)
                got = dot(f, self.left_action[i], self.left_action[j])
                if np.any(want != got):
                    raise ActionMismatch(f"left action not a representation at ({i},{j})")
        for i in range(self.right_alg.dim):
            for j in range(self.right_alg.dim):
                # x*(e_i e_j) = (x*e_i)*e_j
                want = self._combine(self.right_alg, self.right_action, i, j)
                got = dot(f, self.right_action[j], self.right_action[i])
                if np.any(want != got):
                    raise ActionMismatch(f"right action not a right representation at ({i},{j})")
        for i in range(self.left_alg.dim):
            for j in range(self.right_alg.dim):
                lr = dot(f, self.left_action[i], self.right_action[j])
                rl = dot(f, self.right_action[j], self.left_action[i])
                if np.any(lr != rl):
                    raise ActionMismatch(f"actions do not commute at ({i},{j})")
        # k-centrality: both scalar actions are s*identity by unitality above.

    def _combine(self, alg, acts, i, j):
        coeffs = alg.structure[i, j]
        out = self.field.zeros(self.kdim, self.kdim)
        for g in range(alg.dim):
            if coeffs[g] != 0:
                out = out + coeffs[g] * acts[g]
        return self.field.reduce(out)

    def __repr__(self):
        return (
            f"Bimodule({self.name}: {self.left_alg.name}-{self.right_alg.name}, "
            f"kdim {self.kdim})"
        )

    def act_left(self, a, v):
        """(sum a_e e_e) . v"""
        out = self.field.zeros(self.kdim)
        for e in range(self.left_alg.dim):
            if a[e] != 0:
                out = out + a[e] * dot(self.field, self.left_action[e], v)
        return self.field.reduce(out)

    def act_right(self, v, c):
        out = self.field.zeros(self.kdim)
        for e in range(self.right_alg.dim):
            if c[e] != 0:
                out = out + c[e] * dot(self.field, self.right_action[e], v)
        return self.field.reduce(out)

    def basis_vector(self, j: int):
        v = self.field.zeros(self.kdim)
        v[j] = 1
        return v

    def space(self) -> VectorSpaceK:
        return VectorSpaceK(self.kdim)


# -- constructors ------------------------------------------------------------


def vector_space_bimodule(field: GroundField, n: int, name: str = "") -> Bimodule:
    k = base_field_algebra(field)
    ident = field.eye(n)
    return Bimodule(field, k, k, n, [ident], [ident], name=name or f"k^{n}")


def regular_bimodule(D: DivisionAlgebra, name: str = "") -> Bimodule:
    """D as a D-D-bimodule by left and right multiplication."""
    left = [D.left_mult_matrix(D.basis_element(e)) for e in range(D.dim)]
    right = [D.right_mult_matrix(D.basis_element(e)) for e in range(D.dim)]
    return Bimodule(D.field, D, D, D.dim, left, right, name=name or D.name)


def extension_as_bimodule(D: DivisionAlgebra, side: str, name: str = "") -> Bimodule:
    """D as a (k, D)- or (D, k)-bimodule, the regular action on ``side``."""
    k = base_field_algebra(D.field)
    ident = D.field.eye(D.dim)
    if side == "right":
        right = [D.right_mult_matrix(D.basis_element(e)) for e in range(D.dim)]
        return Bimodule(D.field, k, D, D.dim, [ident], right, name=name or f"{D.name}_r")
    if side == "left":
        left = [D.left_mult_matrix(D.basis_element(e)) for e in range(D.dim)]
        return Bimodule(D.field, D, k, D.dim, left, [ident], name=name or f"{D.name}_l")
    raise ValueError("side must be 'left' or 'right'")


def tensor_square_bimodule(D: DivisionAlgebra, name: str = "") -> Bimodule:
    """D (x)_k D as a D-D-bimodule; the standard type-(d,d) example."""
    f = D.field
    ident = f.eye(D.dim)
    left = [kron(f, D.left_mult_matrix(D.basis_element(e)), ident) for e in range(D.dim)]
    right = [kron(f, ident, D.right_mult_matrix(D.basis_element(e))) for e in range(D.dim)]
    return Bimodule(f, D, D, D.dim * D.dim, left, right, name=name or f"{D.name}(x){D.name}")


def change_of_basis(N: Bimodule, P) -> Bimodule:
    """Rewrite N in the k-basis with new coordinates y = P x."""
    f = N.field
    P = f.asarray(P)
    Pinv = inverse(f, P)
    left = [dot(f, dot(f, P, m), Pinv) for m in N.left_action]
    right = [dot(f, dot(f, P, m), Pinv) for m in N.right_action]
    return Bimodule(f, N.left_alg, N.right_alg, N.kdim, left, right, name=N.name + "'")


def zero_bimodule(field, left_alg, right_alg) -> Bimodule:
    z = field.zeros(0, 0)
    return Bimodule(
        field, left_alg, right_alg, 0, [z] * left_alg.dim, [z] * right_alg.dim, name="0"
    )


# -- bases -------------------------------------------------------------------


@dataclass
class ModuleBasis:
    side: str
    algebra: DivisionAlgebra
    elements: list

    @property
    def cardinality(self) -> int:
        return len(self.elements)


def skew_rref(C: DivisionAlgebra, rows: list[list]) -> tuple[list[list], int]:
    """Row reduction of a matrix with entries in the division algebra C.

    Rows are left-multiplied by algebra elements; the pivot entry is
    inverted via C.inv.  Returns (reduced rows, rank).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if np.any(m[i][c] != 0):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pinv = C.inv(m[r][c])
        m[r] = [C.mul(pinv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and np.any(m[i][c] != 0):
                a = m[i][c]
                m[i] = [
                    C.field.reduce(x - C.mul(a, y)) for x, y in zip(m[i], m[r])
                ]
        r += 1
        if r == nrows:
            break
    return m, r


def extract_basis(N: Bimodule, side: str) -> ModuleBasis:
    """A free basis of N over the acting algebra on ``side``.

    Candidates are the k-coordinate vectors in lexicographic order; each
    accepted candidate contributes its full orbit under the acting algebra
    to the spanned subspace.  The result is verified independent by
    noncommutative elimination (``skew_rref``).
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    alg = N.left_alg if side == "left" else N.right_alg
    act = N.left_action if side == "left" else N.right_action
    f = N.field
    spanned = Subspace(f, N.kdim)
    chosen = []
    for j in range(N.kdim):
        v = N.basis_vector(j)
        if spanned.contains(v):
            continue
        chosen.append(v)
        orbit = [dot(f, act[e], v) for e in range(alg.dim)]
        spanned = spanned.sum(span(f, N.kdim, orbit))
    if spanned.rank != N.kdim or len(chosen) * alg.dim != N.kdim:
        raise NotFree(f"{N} is not free over its {side} algebra")
    basis = ModuleBasis(side, alg, chosen)
    _verify_basis_independent(N, basis)
    return basis


def _coordinate_matrix(N: Bimodule, basis: ModuleBasis) -> np.ndarray:
    """Matrix of x = sum basis_t . a_t (stacked algebra coordinates) -> x."""
    alg, side = basis.algebra, basis.side
    act = N.left_action if side == "left" else N.right_action
    f = N.field
    cols = []
    for v in basis.elements:
        for e in range(alg.dim):
            cols.append(dot(f, act[e], v))
    if not cols:
        return f.zeros(N.kdim, 0)
    return np.stack(cols, axis=1)


def coordinates(N: Bimodule, basis: ModuleBasis, coord_inv: np.ndarray, x) -> list:
    """Algebra coordinates of x in the given basis, one vector per element."""
    d = basis.algebra.dim
    stacked = dot(N.field, coord_inv, np.asarray(x))
    return [stacked[t * d : (t + 1) * d] for t in range(basis.cardinality)]


def _verify_basis_independent(N: Bimodule, basis: ModuleBasis):
    if basis.cardinality == 0:
        return
    coord_inv = inverse(N.field, _coordinate_matrix(N, basis))
    rows = []
    for v in basis.elements:
        rows.append(coordinates(N, basis, coord_inv, v))
    _, r = skew_rref(basis.algebra, rows)
    if r != basis.cardinality:
        raise NotFree("extracted elements are dependent over the acting algebra")


def module_ranks(N: Bimodule) -> tuple[int, int]:
    """(left rank, right rank); patchable seam for synthetic test inputs."""
    return (
        extract_basis(N, "left").cardinality,
        extract_basis(N, "right").cardinality,
    )


# -- duals -------------------------------------------------------------------


@dataclass
class _DualInfo:
    primal: Bimodule
    side: str  # side of the primal basis the dual was built from
    basis: ModuleBasis
    coord_inv: np.ndarray


def right_dual(N: Bimodule) -> Bimodule:
    """Hom over the right algebra into itself, as a right_alg-left_alg-bimodule.

    Elements are stored by their values on the extracted right basis of N:
    coordinate block t is psi(basis_t) in the right algebra.
    """
    C, B, f = N.right_alg, N.left_alg, N.field
    rbasis = extract_basis(N, "right")
    r, dC = rbasis.cardinality, C.dim
    coord_inv = (
        inverse(f, _coordinate_matrix(N, rbasis)) if N.kdim else f.zeros(0, 0)
    )
    kd = r * dC
    left = []
    for e in range(dC):
        L = C.left_mult_matrix(C.basis_element(e))
        left.append(kron(f, f.eye(r), L))
    right = []
    for e in range(B.dim):
        m = f.zeros(kd, kd)
        for s in range(r):
            w = dot(f, N.left_action[e], rbasis.elements[s])
            gam = coordinates(N, rbasis, coord_inv, w)
            for t in range(r):
                m[s * dC : (s + 1) * dC, t * dC : (t + 1) * dC] = C.right_mult_matrix(gam[t])
        right.append(m)
    dual = Bimodule(f, C, B, kd, left, right, name=N.name + "*")
    dual._dual_info = _DualInfo(N, "right", rbasis, coord_inv)
    return dual


def left_dual(N: Bimodule) -> Bimodule:
    """Hom over the left algebra into itself, as a right_alg-left_alg-bimodule.

    Coordinate block t of phi is phi(basis_t) in the left algebra, over the
    extracted left basis of N.
    """
    B, C, f = N.left_alg, N.right_alg, N.field
    lbasis = extract_basis(N, "left")
    r, dB = lbasis.cardinality, B.dim
    coord_inv = (
        inverse(f, _coordinate_matrix(N, lbasis)) if N.kdim else f.zeros(0, 0)
    )
    kd = r * dB
    right = []
    for e in range(dB):
        R = B.right_mult_matrix(B.basis_element(e))
        right.append(kron(f, f.eye(r), R))
    left = []
    for e in range(C.dim):
        m = f.zeros(kd, kd)
        for s in range(r):
            w = dot(f, N.right_action[e], lbasis.elements[s])
            gam = coordinates(N, lbasis, coord_inv, w)
            for t in range(r):
                m[s * dB : (s + 1) * dB, t * dB : (t + 1) * dB] = B.left_mult_matrix(gam[t])
        left.append(m)
    dual = Bimodule(f, C, B, kd, left, right, name="*" + N.name)
    dual._dual_info = _DualInfo(N, "left", lbasis, coord_inv)
    return dual


def dual_evaluate(dual: Bimodule, psi, x) -> np.ndarray:
    """Evaluate an element of a constructed dual on an element of its primal."""
    info = dual._dual_info
    if info is None:
        raise ActionMismatch("bimodule was not constructed as a dual")
    N = info.primal
    alg = info.basis.algebra
    d = alg.dim
    coords = coordinates(N, info.basis, info.coord_inv, x)
    out = alg.field.zeros(d)
    for t in range(info.basis.cardinality):
        block = np.asarray(psi)[t * d : (t + 1) * d]
        if info.side == "right":
            out = out + alg.mul(block, coords[t])  # psi(b_t) * a_t
        else:
            out = out + alg.mul(coords[t], block)  # a_t * phi(b_t)
    return alg.field.reduce(out)


def iterated_dual(M: Bimodule, i: int) -> Bimodule:
    """M for i = 0, right duals upward, left duals downward; cached on M."""
    cache = M._iter_cache
    if i in cache:
        return cache[i]
    if i > 0:
        j = max(k for k in cache if 0 <= k < i)
        cur = cache[j]
        while j < i:
            cur = right_dual(cur)
            j += 1
            cache[j] = cur
    else:
        j = min(k for k in cache if i < k <= 0)
        cur = cache[j]
        while j > i:
            cur = left_dual(cur)
            j -= 1
            cache[j] = cur
    return cache[i]


@dataclass
class DualBasisPair:
    basis: ModuleBasis
    dual_basis: ModuleBasis
    certificate: np.ndarray  # (r, r, dim C); entry [p, s] = dual_p(basis_s)
    identity_certificate: bool


def dual_basis_pair(N: Bimodule) -> DualBasisPair:
    """Right basis of N with its dual left basis of the right dual."""
    dual = right_dual(N)
    info = dual._dual_info
    C = N.right_alg
    r = info.basis.cardinality
    duals = []
    for p in range(r):
        v = N.field.zeros(dual.kdim)
        v[p * C.dim : (p + 1) * C.dim] = C.unit
        duals.append(v)
    cert = N.field.zeros(r, r, C.dim)
    ok = True
    for p in range(r):
        for s in range(r):
            val = dual_evaluate(dual, duals[p], info.basis.elements[s])
            cert[p, s] = val
            want = C.unit if p == s else C.field.zeros(C.dim)
            ok = ok and bool(np.array_equal(val, want))
    return DualBasisPair(
        basis=info.basis,
        dual_basis=ModuleBasis("left", C, duals),
        certificate=cert,
        identity_certificate=ok,
    )


def double_dual_map(N: Bimodule) -> tuple[LinearMap, bool]:
    """Evaluation N -> (left_dual(N))^*; returns the map and an iso+equivariance flag."""
    ld = left_dual(N)
    ldd = right_dual(ld)
    info = ldd._dual_info  # right basis of ld
    f = N.field
    B = N.left_alg
    cols = []
    for j in range(N.kdim):
        x = N.basis_vector(j)
        blocks = [dual_evaluate(ld, phi, x) for phi in info.basis.elements]
        cols.append(np.concatenate(blocks) if blocks else f.zeros(0))
    matrix = np.stack(cols, axis=1) if cols else f.zeros(ldd.kdim, 0)
    ev = LinearMap(f, N.kdim, ldd.kdim, matrix)
    ok = N.kdim == ldd.kdim and ev.rank == N.kdim
    for e in range(B.dim):
        lhs = dot(f, matrix, N.left_action[e])
        rhs = dot(f, ldd.left_action[e], matrix)
        ok = ok and bool(np.array_equal(lhs, rhs))
    for e in range(N.right_alg.dim):
        lhs = dot(f, matrix, N.right_action[e])
        rhs = dot(f, ldd.right_action[e], matrix)
        ok = ok and bool(np.array_equal(lhs, rhs))
    return ev, ok


# -- the canonical pair and trace element ------------------------------------


def canonical_pair(M: Bimodule, i: int) -> tuple[list, list]:
    """Right basis x_p of M^{i*} with the dual elements in M^{(i+1)*}.

    The defining property is pairing(x_s, dual_p) = delta * unit, where the
    pairing is evaluation in whichever direction the dual was materialized.
    """
    A = iterated_dual(M, i)
    Bn = iterated_dual(M, i + 1)
    f = M.field
    if i >= 0:
        info = Bn._dual_info
        assert info is not None and info.primal is A
        C = A.right_alg
        xs = list(info.basis.elements)
        xds = []
        for p in range(len(xs)):
            v = f.zeros(Bn.kdim)
            v[p * C.dim : (p + 1) * C.dim] = C.unit
            xds.append(v)
        return xs, xds
    # downward: A = left_dual(Bn); pair(x, y) = x evaluated at y
    info = A._dual_info
    assert info is not None and info.primal is Bn
    S = A.right_alg  # = the middle algebra the pairing lands in
    rbasis = extract_basis(A, "right")
    xs = list(rbasis.elements)
    r, d = len(xs), S.dim
    E = f.zeros(r * d, Bn.kdim)
    for j in range(Bn.kdim):
        y = Bn.basis_vector(j)
        for s in range(r):
            E[s * d : (s + 1) * d, j] = dual_evaluate(A, xs[s], y)
    Einv = inverse(f, E)
    xds = []
    for p in range(r):
        rhs = f.zeros(r * d)
        rhs[p * d : (p + 1) * d] = S.unit
        xds.append(dot(f, Einv, rhs))
    return xs, xds


def pair_value(M: Bimodule, i: int, x, y) -> np.ndarray:
    """The evaluation pairing M^{i*} x M^{(i+1)*} -> S_{i+1}."""
    A = iterated_dual(M, i)
    Bn = iterated_dual(M, i + 1)
    if i >= 0:
        return dual_evaluate(Bn, y, x)
    return dual_evaluate(A, x, y)


@dataclass
class CanonicalQ:
    """The trace vector of a dual pair and the sub-bimodule it generates.

    ``omega`` lives in the plain k-tensor space of the two degree-one
    components; the generated sub-bimodule is materialized inside the
    balanced tensor over the middle algebra, where the vector is central.
    """

    index: int
    omega: np.ndarray
    ktensor_dim: int
    tensor: "Bimodule"
    projection: LinearMap
    section: LinearMap
    subspace: Subspace
    central: bool

    @property
    def kdim(self) -> int:
        return self.subspace.rank


def canonical_q(M: Bimodule, i: int, tensor_triple=None) -> CanonicalQ:
    A = iterated_dual(M, i)
    Bn = iterated_dual(M, i + 1)
    f = M.field
    Si = A.left_alg
    xs, xds = canonical_pair(M, i)
    omega = f.zeros(A.kdim * Bn.kdim)
    for x, xd in zip(xs, xds):
        omega = omega + np.kron(x, xd)
    omega = f.reduce(omega)
    if not np.any(omega != 0):
        raise ActionMismatch("canonical trace vector vanished")
    if tensor_triple is None:
        tensor_triple = tensor_over_division_ring(A, Bn, A.right_alg)
    T, proj, section = tensor_triple
    idA = f.eye(A.kdim)
    idB = f.eye(Bn.kdim)
    rows, central = [], True
    for e in range(Si.dim):
        left_vec = proj(dot(f, kron(f, A.left_action[e], idB), omega))
        right_vec = proj(dot(f, kron(f, idA, Bn.right_action[e]), omega))
        central = central and bool(np.array_equal(left_vec, right_vec))
        rows.append(left_vec)
        rows.append(right_vec)
    sub = span(f, T.kdim, rows)
    return CanonicalQ(
        index=i,
        omega=omega,
        ktensor_dim=A.kdim * Bn.kdim,
        tensor=T,
        projection=proj,
        section=section,
        subspace=sub,
        central=central,
    )


# -- periodicity and type reports ---------------------------------------------


def check_two_periodic(M: Bimodule, i_range) -> list[dict]:
    """Left rank of each iterated dual against the right rank of the next."""
    out = []
    for i in i_range:
        lrank = module_ranks(iterated_dual(M, i))[0]
        rrank_next = module_ranks(iterated_dual(M, i + 1))[1]
        out.append(
            {
                "i": i,
                "left_rank": lrank,
                "right_rank_next": rrank_next,
                "pass": lrank == rrank_next,
            }
        )
    return out


def check_forbidden_type(M: Bimodule) -> dict:
    lrank, rrank = module_ranks(M)
    unordered = tuple(sorted((lrank, rrank)))
    return {
        "left_rank": lrank,
        "right_rank": rrank,
        "type": unordered,
        "forbidden": unordered in ((1, 1), (1, 2), (1, 3)),
    }


# -- tensor over a division algebra -------------------------------------------


def tensor_over_division_ring(
    X: Bimodule, Y: Bimodule, D: DivisionAlgebra, validate: bool = True
) -> tuple[Bimodule, LinearMap, LinearMap]:
    """X (x)_D Y as a quotient of the k-tensor space X (x)_k Y.

    Returns (tensor bimodule, projection from the k-tensor space, section).
    Basis order of the k-tensor space is row-major in the factor bases.
    """
    if X.field != Y.field or X.field != D.field:
        raise ActionMismatch("tensor factors over different ground fields")
    if not X.right_alg.same_as(D) or not Y.left_alg.same_as(D):
        raise ActionMismatch("middle algebra does not match the factor actions")
    f = X.field
    dx, dy = X.kdim, Y.kdim
    ambient = dx * dy
    rels = []
    if D.dim > 1:
        for e in range(D.dim):
            RX = X.right_action[e]
            LY = Y.left_action[e]
            for a in range(dx):
                u = RX[:, a]
                for b in range(dy):
                    w = LY[:, b]
                    rel = f.zeros(ambient)
                    for ii in range(dx):
                        if u[ii] != 0:
                            rel[ii * dy + b] = f.add(rel[ii * dy + b], u[ii])
                    for jj in range(dy):
                        if w[jj] != 0:
                            rel[a * dy + jj] = f.sub(rel[a * dy + jj], w[jj])
                    rels.append(rel)
    sub = span(f, ambient, rels)
    _, proj, section = quotient_map(f, ambient, sub)
    q = proj.codomain_dim
    if q * D.dim != dx * dy:
        raise NotFree("tensor factors are not free over the middle algebra")
    idy = f.eye(dy)
    idx = f.eye(dx)
    left = [
        dot(f, dot(f, proj.matrix, kron(f, m, idy)), section.matrix) for m in X.left_action
    ]
    right = [
        dot(f, dot(f, proj.matrix, kron(f, idx, m)), section.matrix) for m in Y.right_action
    ]
    T = Bimodule(
        f,
        X.left_alg,
        Y.right_alg,
        q,
        left,
        right,
        name=f"{X.name}(x){Y.name}",
        validate=validate,
    )
    return T, proj, section
