"""Symmetry Lie algebras of the module quartic, computed as nullspaces.

Two Lie algebras are attached to a module with basis matrices S_i:

* ``h``: matrices X with X^T S_i + S_i X = 0 for every i (the intersection
  of the orthogonal Lie algebras of all the S_i), computed exactly;
* ``g``: the Lie algebra of the symmetry group of the quartic F, i.e. all X
  with sum_i eps_i S_i[w] (X^T S_i + S_i X)[w] = 0 identically in w,
  computed from sampled linear constraints.

Both computations exploit that conjugation by the S_j permutes basis
unknowns with signs: the unknown space splits into joint sign sectors of a
family of commuting signed-permutation involutions, the kernel splits along
the sectors, and each sector system is small.  The sampled dimensions are
probabilistic in the choice of points, so every run solves two independent
batches and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quartic import expected_degenerate, is_pure
from .repkit import CliffordRep, InvalidInputError, irrep_catalog
from .rng import stream
from .spmat import SectorDecomposition, perm_sign_of, rational_nullspace


class UnstableDimensionError(RuntimeError):
    """Two sample batches produced different nullspace dimensions."""


class ExactBudgetError(ValueError):
    """Exact mode refused; retry with mode='float'."""


FLOAT_RANK_TOL = 1e-8


@dataclass
class KernelReport:
    dimension: int
    basis: list[np.ndarray] | None  # None means dimension-only (float mode)
    method: str
    residual: float


# ---------------------------------------------------------------------------
# h = {X : X^T S_i + S_i X = 0 for all i}
# ---------------------------------------------------------------------------


def _h_generators(rep: CliffordRep):
    """X -> -S_i X^T S_i as signed permutations of matrix-entry indices."""
    m = rep.m
    perms = np.empty((rep.n, m * m), dtype=np.int64)
    signs = np.empty((rep.n, m * m), dtype=np.int64)
    a_idx, b_idx = np.divmod(np.arange(m * m), m)
    for i, s in enumerate(rep.basis):
        perm, sign = perm_sign_of(s)
        perms[i] = perm[b_idx] * m + perm[a_idx]
        signs[i] = -sign[a_idx] * sign[b_idx]
    return perms, signs


def h_kernel(rep: CliffordRep, mode: str = "exact") -> KernelReport:
    """Common solution space of the n orthogonality constraints.

    Exact mode decomposes the constraints into signed orbits of matrix
    entries; the basis consists of {-1, 0, 1} matrices and satisfies the
    constraints identically.
    """
    m = rep.m
    if mode == "exact":
        if m > 32:
            raise ExactBudgetError("exact h refused for m > 32; use mode='float'")
        perms, signs = _h_generators(rep)
        dec = SectorDecomposition(perms, signs)
        basis = []
        for vec in dec.fixed_space():
            x = np.zeros((m, m), dtype=np.int64)
            for u, s in vec.items():
                x[u // m, u % m] = s
            basis.append(x)
        for x in basis:  # exactness guarantee
            for s in rep.basis:
                assert not np.any(x.T @ s + s @ x)
        return KernelReport(len(basis), basis, "exact", 0.0)
    if mode != "float":
        raise InvalidInputError("mode must be 'exact' or 'float'")
    rows = np.zeros((rep.n * m * m, m * m))
    for i, s in enumerate(rep.basis):
        rows[i * m * m : (i + 1) * m * m] = _orth_constraint_block(s.astype(float))
    sv = np.linalg.svd(rows, compute_uv=False)
    tol = FLOAT_RANK_TOL * (sv[0] if len(sv) else 1.0)
    rank = int((sv > tol).sum())
    return KernelReport(m * m - rank, None, "float-svd", float(sv[-1] if len(sv) else 0.0))


def _orth_constraint_block(s: np.ndarray) -> np.ndarray:
    """Rows of the linear map X -> X^T S + S X on vec(X) (row-major).

    With K the commutation matrix (vec(X^T) = K vec(X)), the map is
    (I (x) S^T) K + (S (x) I).
    """
    m = s.shape[0]
    eye = np.eye(m)
    k = np.zeros((m * m, m * m))
    a_idx, b_idx = np.divmod(np.arange(m * m), m)
    k[np.arange(m * m), b_idx * m + a_idx] = 1.0
    return np.kron(eye, s.T) @ k + np.kron(s, eye)


# ---------------------------------------------------------------------------
# g = Lie algebra of the symmetry group of the quartic (sampled)
# ---------------------------------------------------------------------------


def _g_generators(rep: CliffordRep):
    """X -> S_j X S_j as signed permutations of matrix-entry indices."""
    m = rep.m
    perms = np.empty((rep.n, m * m), dtype=np.int64)
    signs = np.empty((rep.n, m * m), dtype=np.int64)
    a_idx, b_idx = np.divmod(np.arange(m * m), m)
    for j, s in enumerate(rep.basis):
        perm, sign = perm_sign_of(s)
        perms[j] = perm[a_idx] * m + perm[b_idx]
        signs[j] = sign[a_idx] * sign[b_idx]
    return perms, signs


def _sample_w(rep: CliffordRep, seed: int, batch: int, count: int) -> np.ndarray:
    gen = stream(seed, batch)
    return gen.integers(-9, 10, size=(count, rep.m))


def _g_constraint_matrix(rep: CliffordRep, w: np.ndarray) -> np.ndarray:
    """One row per sample w: entries grad_a(w) w_b on unknown X_ab."""
    m = rep.m
    n = rep.n
    ws = w.astype(np.int64)
    grad = np.zeros_like(ws)
    for eps, s in zip(rep.eps, rep.basis):
        sw = ws @ s.T
        si = (ws * sw).sum(axis=1)
        grad += eps * si[:, None] * sw
    rows = grad[:, :, None] * ws[:, None, :]
    return rows.reshape(w.shape[0], m * m)


def _sector_nullity(a_int: np.ndarray, sectors, mode: str):
    """Total kernel dimension of the sampled system, sector by sector."""
    total = 0
    residual = 0.0
    per_sector = []
    basis_cols = []
    af = a_int.astype(float)
    scale = max(1.0, float(np.abs(a_int).max(initial=0)))
    for chi, cols in sectors:
        mat = np.stack(
            [af[:, idxs] @ coefs.astype(float) for idxs, coefs in cols], axis=1
        )
        dim = len(cols)
        if mode == "exact":
            amat = np.stack(
                [a_int[:, idxs] @ coefs for idxs, coefs in cols], axis=1
            )
            null = rational_nullspace(amat.tolist(), dim)
            nullity = len(null)
            basis_cols.append((chi, cols, null))
        else:
            sv = np.linalg.svd(mat, compute_uv=False)
            smax = sv[0] if len(sv) else 0.0
            nullity = int((sv <= FLOAT_RANK_TOL * max(smax, 1.0)).sum()) + max(
                0, dim - len(sv)
            )
            if len(sv) and nullity:
                residual = max(residual, float(sv[-1]) / max(scale, 1.0))
        total += nullity
        per_sector.append(nullity)
    return total, per_sector, residual, basis_cols


def g_kernel_dim(
    rep: CliffordRep, samples: int | None = None, seed: int = 0, mode: str = "float"
) -> KernelReport:
    """Dimension of the symmetry Lie algebra of the quartic.

    Each integer sample w imposes grad F(w) . (X w) = 0 on X; the joint
    kernel over enough samples equals g with overwhelming probability, and
    two disjoint batches must agree on every sector dimension.
    """
    m = rep.m
    if samples is None:
        samples = m * m + 64
    if samples < m * m + 64:
        raise InvalidInputError("need at least m^2 + 64 samples")
    if mode == "exact" and m > 16:
        raise ExactBudgetError("exact g refused for m > 16; use mode='float'")
    perms, signs = _g_generators(rep)
    sectors = list(SectorDecomposition(perms, signs).sectors().items())
    results = []
    for batch in (1, 2):
        w = _sample_w(rep, seed, batch, samples)
        a = _g_constraint_matrix(rep, w)
        results.append(_sector_nullity(a, sectors, mode))
    if results[0][:2] != results[1][:2]:
        raise UnstableDimensionError(
            f"g dimension unstable: {results[0][0]} vs {results[1][0]}"
        )
    total, _, residual, basis_cols = results[0]
    basis = None
    if mode == "exact":
        basis = []
        for chi, cols, null in basis_cols:
            for vec in null:
                x = np.zeros(m * m, dtype=object)
                for coord, (idxs, coefs) in zip(vec, cols):
                    if coord:
                        for u, c in zip(idxs, coefs):
                            x[u] += coord * int(c)
                basis.append(x.reshape(m, m))
        return KernelReport(total, basis, "exact", 0.0)
    return KernelReport(total, None, "float-svd", residual)


def g_contains(rep: CliffordRep, x: np.ndarray, trials: int = 24, seed: int = 11) -> bool:
    """Exact membership test of an integer matrix in g (sampled identity)."""
    gen = stream(seed, 3)
    for w in gen.integers(-9, 10, size=(trials, rep.m)):
        w = [int(c) for c in w]
        xw = [sum(int(x[a, b]) * w[b] for b in range(rep.m)) for a in range(rep.m)]
        total = 0
        for eps, s in zip(rep.eps, rep.basis):
            sw = [sum(int(s[a, b]) * w[b] for b in range(rep.m)) for a in range(rep.m)]
            si = sum(a * b for a, b in zip(w, sw))
            total += eps * si * 2 * sum(a * b for a, b in zip(sw, xw))
        if total != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# The only-antisymmetric-combinations condition on symmetric solution tuples
# ---------------------------------------------------------------------------


def _sharp_generators(rep: CliffordRep):
    """(X_1..X_n) -> (c_ij S_j X_i S_j) on symmetric-pair unknowns."""
    m, n = rep.m, rep.n
    pairs = [(a, b) for a in range(m) for b in range(a, m)]
    pair_index = {ab: t for t, ab in enumerate(pairs)}
    npairs = len(pairs)
    nunk = n * npairs
    perms = np.empty((n, nunk), dtype=np.int64)
    signs = np.empty((n, nunk), dtype=np.int64)
    for j, s in enumerate(rep.basis):
        perm, sign = perm_sign_of(s)
        for i in range(n):
            cij = 1 if i == j else -rep.eps[i] * rep.eps[j]
            for t, (a, b) in enumerate(pairs):
                ra, rb = int(perm[a]), int(perm[b])
                key = (ra, rb) if ra <= rb else (rb, ra)
                perms[j, i * npairs + t] = i * npairs + pair_index[key]
                signs[j, i * npairs + t] = cij * int(sign[a]) * int(sign[b])
    return perms, signs, pairs


def _sharp_constraint_matrix(rep: CliffordRep, w: np.ndarray, pairs) -> np.ndarray:
    """Rows of sum_i S_i[w] X_i[w] = 0 on the (i, pair) unknowns."""
    ws = w.astype(np.int64)
    count = w.shape[0]
    q = np.empty((count, rep.n), dtype=np.int64)
    for i, s in enumerate(rep.basis):
        q[:, i] = (ws * (ws @ s.T)).sum(axis=1)
    pa = np.array([a for a, b in pairs])
    pb = np.array([b for a, b in pairs])
    mults = np.where(pa == pb, 1, 2)
    pairvals = ws[:, pa] * ws[:, pb] * mults
    rows = q[:, :, None] * pairvals[:, None, :]
    return rows.reshape(count, rep.n * len(pairs))


def sharp_check(rep: CliffordRep, seed: int = 0) -> bool:
    """Do symmetric solutions of sum_i S_i[w] X_i[w] = 0 reduce to the span
    of the antisymmetric combinations X_i = sum_j a_ij S_j?

    Computes the solution dimension from two sampled batches (sector by
    sector) and compares with n(n-1)/2, the dimension of the forced span.
    """
    dim, forced = sharp_solution_dim(rep, seed)
    return dim == forced


def sharp_solution_dim(rep: CliffordRep, seed: int = 0) -> tuple[int, int]:
    m, n = rep.m, rep.n
    perms, signs, pairs = _sharp_generators(rep)
    sectors = list(SectorDecomposition(perms, signs).sectors().items())
    max_dim = max(len(cols) for _, cols in sectors)
    count = max_dim + 64
    dims = []
    for batch in (1, 2):
        w = _sample_w(rep, seed, 10 + batch, count)
        a = _sharp_constraint_matrix(rep, w, pairs)
        total, per_sector, _, _ = _sector_nullity(a, sectors, "float")
        dims.append((total, per_sector))
    if dims[0] != dims[1]:
        raise UnstableDimensionError(f"sharp dimension unstable: {dims[0][0]} vs {dims[1][0]}")
    return dims[0][0], n * (n - 1) // 2


def expected_sharp(p: int, q: int, mults) -> bool:
    """Classification-table prediction for the sharp condition.

    Fails exactly at the tabulated (p+q, m) pairs, and for rank-2 split
    modules that are pure with m >= 2 (a pure module on the line satisfies
    the condition trivially, the solution space being one dimensional).
    """
    cat = irrep_catalog(p, q)
    m = sum(mults) * cat.dim
    n = p + q
    bad = {
        (3, 2),
        (3, 4),
        (4, 4),
        (4, 8),
        (5, 8),
        (6, 8),
        (6, 16),
        (7, 16),
        (8, 16),
        (9, 16),
        (10, 16),
        (10, 32),
        (11, 32),
    }
    if (n, m) in bad:
        return False
    if n == 2 and {p, q} == {1, 1} and is_pure(p, q, mults) and m >= 2:
        return False
    return True


# ---------------------------------------------------------------------------
# Structure-table predictions
# ---------------------------------------------------------------------------


def _alg(name: str, dim: int) -> tuple[str, int]:
    return name, dim


def h_algebra(p: int, q: int, mults) -> tuple[str, int]:
    """Name and real dimension of h from the structure table."""
    cat = irrep_catalog(p, q)
    ks = tuple(mults)
    shape, field, even = cat.shape, cat.field, cat.even_field
    if shape == "(T,T')":
        (k,) = ks
        return {
            ("R", "C"): _alg(f"so({k},C)", k * (k - 1)),
            ("C", "R"): _alg(f"sp({k},R)", k * (2 * k + 1)),
            ("C", "H"): _alg(f"so*({2 * k})", k * (2 * k - 1)),
            ("H", "C"): _alg(f"sp({k},C)", 2 * k * (2 * k + 1)),
        }[(field, even)]
    if shape == "(T,2T')":
        (k,) = ks
        if field == "R":
            return _alg(f"gl({k},R)", k * k)
        return _alg(f"gl({k},H)", 4 * k * k)
    if shape == "(2T,T')":
        k1, k2 = ks
        kk = k1 + k2
        if field == "R":
            return _alg(f"so({k1},{k2})", kk * (kk - 1) // 2)
        if field == "C":
            return _alg(f"u({k1},{k2})", kk * kk)
        return _alg(f"sp({k1},{k2})", kk * (2 * kk + 1))
    if shape == "(2T,2T')":
        k1, k2 = ks
        if even == "R":
            return _alg(
                f"sp({k1},R)+sp({k2},R)", k1 * (2 * k1 + 1) + k2 * (2 * k2 + 1)
            )
        return _alg(
            f"so*({2 * k1})+so*({2 * k2})", k1 * (2 * k1 - 1) + k2 * (2 * k2 - 1)
        )
    k1, k2, k3, k4 = ks
    if field == "R":
        ka, kb = k1 + k2, k3 + k4
        return _alg(
            f"so({k1},{k2})+so({k3},{k4})", ka * (ka - 1) // 2 + kb * (kb - 1) // 2
        )
    ka, kb = k1 + k2, k3 + k4
    return _alg(
        f"sp({k1},{k2})+sp({k3},{k4})", ka * (2 * ka + 1) + kb * (2 * kb + 1)
    )


def pure_over_c(p: int, q: int, mults) -> bool:
    """Is the complexified restriction to the even subalgebra isotypic?"""
    cat = irrep_catalog(p, q)
    if cat.shape == "(T,2T')":
        return False  # the single class already mixes both even classes
    if cat.even_field == "C":
        return False  # complexification splits the even class in two
    used = {cat.halfspin[i] for i, k in enumerate(mults) if k}
    return len(used) <= 1


_EXCEPTIONAL_NM = {(3, 4), (4, 8), (5, 8), (6, 16), (7, 16), (8, 16), (9, 16), (10, 32), (11, 32)}
_DEGENERATE_NM = {(3, 2), (4, 4), (6, 8), (10, 16)}


def classification_status(n: int, m: int, pure: bool = False) -> str:
    """degenerate / exceptional / generic from the low-dimension tables."""
    if (n, m) in _DEGENERATE_NM or (n == 2 and pure):
        return "degenerate"
    if (n, m) in _EXCEPTIONAL_NM:
        return "exceptional"
    return "generic"


def exceptional_g_dim(p: int, q: int, mults) -> int | None:
    """Stated symmetry-algebra dimension in the exceptional cases.

    For p+q in {6, 10} the value is only identified after complexification
    and depends on purity over C; the real dimension of the real form equals
    the complex dimension of the stated complexification.
    """
    cat = irrep_catalog(p, q)
    n = p + q
    m = sum(mults) * cat.dim
    table = {
        (3, 4): 6,
        (4, 8): 13,
        (5, 8): 28,
        (7, 16): 31,
        (8, 16): 57,
        (9, 16): 120,
        (11, 32): 66,
    }
    if (n, m) in table:
        return table[(n, m)]
    if (n, m) == (6, 16):
        return 30 if pure_over_c(p, q, mults) else 22
    if (n, m) == (10, 32):
        return 48 if pure_over_c(p, q, mults) else 46
    return None


@dataclass
class SymmetryPrediction:
    h_algebra: str
    h_dim: int
    g_dim: int | None
    exceptional: bool
    degenerate: bool
    g_dim_exceptional: int | None


def predict(p: int, q: int, mults) -> SymmetryPrediction:
    """Structure-table prediction for the h and g dimensions."""
    cat = irrep_catalog(p, q)
    if len(mults) != cat.count or sum(mults) < 1 or min(mults) < 0:
        raise InvalidInputError("invalid multiplicity vector")
    name, h_dim = h_algebra(p, q, mults)
    n = p + q
    m = sum(mults) * cat.dim
    degenerate = expected_degenerate(p, q, mults)
    status = classification_status(n, m, pure=(n == 2 and degenerate))
    if degenerate:
        return SymmetryPrediction(name, h_dim, m * m, False, True, None)
    if status == "exceptional":
        gexc = exceptional_g_dim(p, q, mults)
        return SymmetryPrediction(name, h_dim, gexc, True, False, gexc)
    return SymmetryPrediction(name, h_dim, n * (n - 1) // 2 + h_dim, False, False, None)
