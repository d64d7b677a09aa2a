"""Centroid computation and the orthogonal decomposition into irreducible factors.

The centroid of an algebra is the space of operators f with
f([X,Y]) = [f(X),Y] for all X, Y.  Its symmetric part (with respect to the
Gram matrix) is a commuting family of G-self-adjoint operators whose
eigenprojections are orthogonal projections onto factors.  Decomposition
proceeds by drawing a seeded generic symmetric-centroid element, splitting
along its eigenprojections and recursing until every factor has a
one-dimensional symmetric centroid, which is the irreducibility criterion.

Eigenvalues are extracted exactly from the minimal polynomial when they are
rational; otherwise the whole computation falls back to the float backend
and reports backend="numeric".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import sympy

from . import linalg
from .core import (
    EXACT,
    NUMERIC,
    MetricLieAlgebra,
    Subspace,
    bracket,
    has_abelian_factor,
    restrict,
    to_numeric,
)
from .errors import (
    AbelianFactorPresent,
    GenericityFailure,
    InternalAssertionFailure,
    NotAProjection,
)

GENERIC_COEFF_BOUND = 7
MAX_RETRIES = 20


class _NeedNumeric(Exception):
    """Internal: a minimal polynomial has irrational roots."""


@dataclass(frozen=True)
class OperatorSubspace:
    """Canonical basis of a linear space of n x n operators."""

    ambient: MetricLieAlgebra
    basis: tuple  # tuple of matrices

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, M) -> bool:
        n = self.ambient.dim
        if not self.basis:
            return linalg.is_zero(linalg.max_abs(M), self.ambient.tol)
        A = linalg.transpose(linalg.mat([linalg.vectorize(B) for B in self.basis]))
        return linalg.solve(A, linalg.vectorize(M), self.ambient.tol) is not None


def _canonical_operator_space(A: MetricLieAlgebra, vectors) -> OperatorSubspace:
    n = A.dim
    rows = linalg.canonical_rows(vectors, n * n, A.tol)
    return OperatorSubspace(A, tuple(linalg.unvectorize(r, n) for r in rows))


def _centroid_equations(A: MetricLieAlgebra):
    """Sparse rows of the linear system cutting out the centroid.

    Unknowns are the entries M[r][s] at index r*n + s.  For every ordered
    basis pair (i, j), including i == j, the condition reads
    M [X_i, X_j] + ad(X_j) M X_i = 0.
    """
    n = A.dim
    ads = [A.algebra.ad_matrix(j) for j in range(n)]
    cij = {(i, j): A.algebra.bracket_basis(i, j) for i in range(n) for j in range(n)}
    for i in range(n):
        for j in range(n):
            c = cij[(i, j)]
            Aj = ads[j]
            for r in range(n):
                row = {}
                for s in range(n):
                    if not linalg.is_zero(c[s], A.tol):
                        row[r * n + s] = row.get(r * n + s, 0) + c[s]
                    if not linalg.is_zero(Aj[r][s], A.tol):
                        row[s * n + i] = row.get(s * n + i, 0) + Aj[r][s]
                row = {k: v for k, v in row.items() if not linalg.is_zero(v, A.tol)}
                if row:
                    yield row


def _adjoint_constraint_rows(A: MetricLieAlgebra, sign):
    """Rows of G M - sign * M^T G = 0 (sign=+1 symmetric, -1 skew)."""
    n = A.dim
    G = A.gram
    for r in range(n):
        for s in range(r, n):
            row = {}
            for t in range(n):
                if not linalg.is_zero(G[r][t], A.tol):
                    row[t * n + s] = row.get(t * n + s, 0) + G[r][t]
                if not linalg.is_zero(G[t][s], A.tol):
                    row[t * n + r] = row.get(t * n + r, 0) - sign * G[t][s]
            row = {k: v for k, v in row.items() if not linalg.is_zero(v, A.tol)}
            if row:
                yield row


def centroid(A: MetricLieAlgebra) -> OperatorSubspace:
    """Solution space of f([X,Y]) = [f(X),Y]; always contains the identity."""
    n = A.dim
    basis = linalg.nullspace_sparse(list(_centroid_equations(A)), n * n, A.tol)
    return _canonical_operator_space(A, basis)


def symmetric_centroid(A: MetricLieAlgebra) -> OperatorSubspace:
    eqs = list(_centroid_equations(A)) + list(_adjoint_constraint_rows(A, 1))
    basis = linalg.nullspace_sparse(eqs, A.dim * A.dim, A.tol)
    return _canonical_operator_space(A, basis)


def skew_centroid(A: MetricLieAlgebra) -> OperatorSubspace:
    eqs = list(_centroid_equations(A)) + list(_adjoint_constraint_rows(A, -1))
    basis = linalg.nullspace_sparse(eqs, A.dim * A.dim, A.tol)
    return _canonical_operator_space(A, basis)


def centroid_residual(A: MetricLieAlgebra, M) -> object:
    """Max residual of M over the defining centroid condition."""
    n = A.dim
    worst = 0
    for i in range(n):
        ei = linalg.basis_vec(n, i, numeric=A.backend == NUMERIC)
        Mei = linalg.mat_vec(M, ei)
        for j in range(n):
            ej = linalg.basis_vec(n, j, numeric=A.backend == NUMERIC)
            res = linalg.vec_sub(
                linalg.mat_vec(M, A.algebra.bracket_basis(i, j)),
                bracket(A, Mei, ej),
            )
            worst = max(worst, linalg.max_abs_vec(res))
    return worst


@dataclass(frozen=True)
class ProjectionCertificate:
    idempotent_residual: object
    bracket_residual: object  # condition (i)
    symmetry_residual: object  # condition (ii)
    passed: bool

    def residuals(self):
        return {
            "idempotent": self.idempotent_residual,
            "bracket": self.bracket_residual,
            "symmetry": self.symmetry_residual,
        }


def is_orthogonal_projection(A: MetricLieAlgebra, P) -> ProjectionCertificate:
    """Check p∘p = p, the bracket condition and G-symmetry, with residuals."""
    tol = A.tol
    idem = linalg.mat_max_diff(linalg.mat_mul(P, P), P)
    br = centroid_residual(A, P)
    G = A.gram
    sym = linalg.mat_max_diff(linalg.mat_mul(G, P), linalg.mat_mul(linalg.transpose(P), G))
    passed = all(linalg.is_zero(r, tol) for r in (idem, br, sym))
    return ProjectionCertificate(idem, br, sym, passed)


@dataclass(frozen=True)
class Factor:
    carrier: Subspace
    projection: tuple
    induced: MetricLieAlgebra
    certificate: dict


@dataclass(frozen=True)
class Decomposition:
    algebra: MetricLieAlgebra
    factors: tuple
    backend: str
    seed: int

    @property
    def k(self) -> int:
        return len(self.factors)

    def carriers(self):
        return [f.carrier for f in self.factors]


def _image_subspace(A: MetricLieAlgebra, P) -> Subspace:
    cols = linalg.transpose(P)
    return Subspace.from_vectors(len(P), list(cols), A.tol)


def _kernel_subspace(A: MetricLieAlgebra, P) -> Subspace:
    return Subspace.from_vectors(len(P), linalg.nullspace(P, A.tol), A.tol)


def split_by_projection(A: MetricLieAlgebra, P):
    """Split A into the factors carried by im(P) and ker(P)."""
    cert = is_orthogonal_projection(A, P)
    if not cert.passed:
        raise NotAProjection(f"operator fails projection axioms: {cert.residuals()}")
    n = A.dim
    im = _image_subspace(A, P)
    ker = _kernel_subspace(A, P)
    Q = linalg.mat_sub(linalg.identity(n, numeric=A.backend == NUMERIC), P)
    f1 = Factor(im, P, restrict(A, im), {"projection": cert.residuals()})
    f2 = Factor(ker, Q, restrict(A, ker), {"projection": is_orthogonal_projection(A, Q).residuals()})
    return f1, f2


def _rational_roots(coeffs):
    """All roots of a squarefree rational polynomial, if they are all rational.

    Returns a list of Fractions or raises _NeedNumeric.
    """
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(coeffs))
    rts = sympy.roots(expr, x)
    if sum(rts.values()) != len(coeffs) - 1 or any(not r.is_rational for r in rts):
        raise _NeedNumeric
    return [Fraction(int(r.p), int(r.q)) for r in rts]


def _numeric_eigenvalues(M, tol):
    import numpy as np

    vals = np.linalg.eigvals(np.array(M, dtype=float))
    vals = sorted(float(v.real) for v in vals)
    clusters = []
    for v in vals:
        if clusters and abs(v - clusters[-1][-1]) <= max(tol, 1e-8) * 100:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    return [sum(c) / len(c) for c in clusters]


def _eigenprojections(a, eigenvalues, numeric):
    """Lagrange interpolation projections onto the eigenspaces of a."""
    n = len(a)
    projections = []
    I = linalg.identity(n, numeric=numeric)
    for lam in eigenvalues:
        P = I
        for mu in eigenvalues:
            if mu == lam:
                continue
            P = linalg.mat_mul(P, linalg.mat_scale(1 / (lam - mu), linalg.mat_sub(a, linalg.mat_scale(mu, I))))
        projections.append(P)
    return projections


def _random_generic_element(S: OperatorSubspace, rng):
    coeffs = []
    for _ in range(S.dim):
        c = 0
        while c == 0:
            c = rng.randint(-GENERIC_COEFF_BOUND, GENERIC_COEFF_BOUND)
        coeffs.append(c)
    n = S.ambient.dim
    numeric = S.ambient.backend == NUMERIC
    a = linalg.zeros(n, n, numeric=numeric)
    for c, B in zip(coeffs, S.basis):
        a = linalg.mat_add(a, linalg.mat_scale(float(c) if numeric else Fraction(c), B))
    return a


def _irreducible_carriers(sub: MetricLieAlgebra, embed, rng, max_retries):
    """Recursively split ``sub`` and return ambient carrier spanning sets.

    ``embed`` is an (ambient_dim x sub_dim) matrix mapping sub coordinates
    into ambient coordinates.
    """
    S = symmetric_centroid(sub)
    if S.dim == 0:
        raise InternalAssertionFailure("symmetric centroid lost the identity operator")
    if S.dim == 1:
        return [list(linalg.transpose(embed))]
    numeric = sub.backend == NUMERIC
    for _ in range(max_retries):
        a = _random_generic_element(S, rng)
        mp = linalg.minimal_polynomial(a, sub.tol)
        if len(mp) <= 2:
            continue  # scalar element, resample
        if numeric:
            eigenvalues = _numeric_eigenvalues(a, sub.tol)
        else:
            eigenvalues = _rational_roots(mp)
        if len(eigenvalues) < 2:
            continue
        carriers = []
        for P in _eigenprojections(a, eigenvalues, numeric):
            im = _image_subspace(sub, P)
            induced = restrict(sub, im)
            C = im.matrix_columns()
            embed2 = linalg.mat_mul(embed, C)
            carriers.extend(_irreducible_carriers(induced, embed2, rng, max_retries))
        return carriers
    raise GenericityFailure(
        f"no separating symmetric centroid element found in {max_retries} draws"
    )


def _orthogonal_projection_onto(A: MetricLieAlgebra, carrier: Subspace):
    """G-orthogonal projection with image = carrier."""
    C = carrier.matrix_columns()
    Ct = linalg.transpose(C)
    G = A.gram
    M = linalg.inverse(linalg.mat_mul(Ct, linalg.mat_mul(G, C)), A.tol)
    return linalg.mat_mul(C, linalg.mat_mul(M, linalg.mat_mul(Ct, G)))


def _carrier_sort_key(f: Factor):
    return (f.carrier.dim, tuple(tuple(x for x in row) for row in f.carrier.basis))


def decompose(A: MetricLieAlgebra, seed: int = 0, max_retries: int = MAX_RETRIES) -> Decomposition:
    """Unique orthogonal decomposition into irreducible factors.

    Refuses algebras with a non-zero abelian factor, for which uniqueness
    fails.  The result is canonically ordered by (dim, carrier basis), so
    different seeds produce identical output.
    """
    if A.dim == 0:
        return Decomposition(A, (), A.backend, seed)
    if has_abelian_factor(A):
        raise AbelianFactorPresent(
            "algebra has a non-zero abelian factor; decomposition is not unique"
        )
    work = A
    backend = A.backend
    rng = random.Random(seed)
    embed0 = linalg.identity(A.dim, numeric=A.backend == NUMERIC)
    try:
        spans = _irreducible_carriers(work, embed0, rng, max_retries)
    except _NeedNumeric:
        work = to_numeric(A)
        backend = NUMERIC
        rng = random.Random(seed)
        spans = _irreducible_carriers(work, linalg.identity(work.dim, numeric=True), rng, max_retries)

    factors = []
    for span in spans:
        carrier = Subspace.from_vectors(work.dim, span, work.tol)
        P = _orthogonal_projection_onto(work, carrier)
        cert = is_orthogonal_projection(work, P)
        if not cert.passed:
            raise InternalAssertionFailure(
                f"factor projection failed verification: {cert.residuals()}"
            )
        induced = restrict(work, carrier)
        sdim = symmetric_centroid(induced).dim
        if sdim != 1:
            raise InternalAssertionFailure(
                f"factor is not irreducible: symmetric centroid dim {sdim}"
            )
        factors.append(Factor(carrier, P, induced, {
            "projection": cert.residuals(),
            "symmetric_centroid_dim": sdim,
        }))
    factors.sort(key=_carrier_sort_key)

    # completeness: projections sum to the identity
    n = work.dim
    total = linalg.zeros(n, n, numeric=work.backend == NUMERIC)
    for f in factors:
        total = linalg.mat_add(total, f.projection)
    if not linalg.is_zero(
        linalg.mat_max_diff(total, linalg.identity(n, numeric=work.backend == NUMERIC)), work.tol
    ):
        raise InternalAssertionFailure("factor projections do not sum to the identity")
    return Decomposition(work, tuple(factors), backend, seed)


def is_irreducible(A: MetricLieAlgebra) -> bool:
    """No abelian factor and a one-dimensional symmetric centroid."""
    if has_abelian_factor(A):
        raise AbelianFactorPresent("irreducibility criterion needs no abelian factor")
    return symmetric_centroid(A).dim == 1
