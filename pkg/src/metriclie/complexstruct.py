"""Orthogonal bi-invariant complex structures: verification, enumeration,
complexification, eigenspace splits and the doubling isometry.

A complex structure here is an operator J with J^2 = -I that is
bi-invariant (J[X,Y] = [JX,Y]) and skew-symmetric with respect to the Gram
matrix (equivalently, an isometry).  On an algebra with no abelian factor
the full set of such J is either empty or has exactly 2^k elements, one per
sign choice on the k irreducible factors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .centroid import decompose, skew_centroid
from .core import (
    DEFAULT_TOL,
    EXACT,
    NUMERIC,
    Metric,
    MetricLieAlgebra,
    Subspace,
    bracket,
    direct_sum,
    make_algebra,
)
from .errors import (
    DimensionMismatch,
    InternalAssertionFailure,
    InvalidComplexStructure,
    IrrationalNormalizer,
)


@dataclass(frozen=True)
class ComplexStructureCertificate:
    square_residual: object  # J^2 = -I
    bracket_residual: object  # bi-invariance
    skew_residual: object  # G J = -J^T G
    passed: bool

    def residuals(self):
        return {
            "square": self.square_residual,
            "bracket": self.bracket_residual,
            "skew": self.skew_residual,
        }


@dataclass(frozen=True)
class ComplexStructure:
    J: tuple
    certificate: ComplexStructureCertificate
    backend: str = EXACT
    signs: tuple = ()


@dataclass(frozen=True)
class HermitianValue:
    re: object
    im: object


def _biinvariance_residual(A: MetricLieAlgebra, J):
    n = A.dim
    worst = 0
    numeric = A.backend == NUMERIC
    for i in range(n):
        Jei = linalg.mat_vec(J, linalg.basis_vec(n, i, numeric=numeric))
        for j in range(n):
            ej = linalg.basis_vec(n, j, numeric=numeric)
            res = linalg.vec_sub(
                linalg.mat_vec(J, A.algebra.bracket_basis(i, j)),
                bracket(A, Jei, ej),
            )
            worst = max(worst, linalg.max_abs_vec(res))
    return worst


def verify_complex_structure(A: MetricLieAlgebra, J, tol=None) -> ComplexStructureCertificate:
    """Residuals for J^2 = -I, bi-invariance and skewness w.r.t. the Gram."""
    n = A.dim
    if len(J) != n or any(len(r) != n for r in J):
        raise DimensionMismatch("operator dimension differs from algebra dimension")
    if tol is None:
        tol = A.tol
        if any(isinstance(x, float) for row in J for x in row):
            tol = tol or DEFAULT_TOL
    numeric = A.backend == NUMERIC
    sq = linalg.mat_max_diff(
        linalg.mat_mul(J, J), linalg.mat_scale(-1, linalg.identity(n, numeric=numeric))
    )
    br = _biinvariance_residual(A, J)
    G = A.gram
    sk = linalg.max_abs(
        linalg.mat_add(linalg.mat_mul(G, J), linalg.mat_mul(linalg.transpose(J), G))
    )
    passed = all(linalg.is_zero(r, tol) for r in (sq, br, sk))
    return ComplexStructureCertificate(sq, br, sk, passed)


def _hermitian(A: MetricLieAlgebra, J, u, v) -> HermitianValue:
    G = A.gram
    re = linalg.bilinear(G, u, v)
    im = linalg.bilinear(G, u, linalg.mat_vec(J, v))
    return HermitianValue(re / 2, im / 2)


def hermitian_form(A: MetricLieAlgebra, J, u, v) -> HermitianValue:
    """The Hermitian inner product (<X,Y> + i <X,JY>) / 2 on (g, J)."""
    cert = verify_complex_structure(A, J)
    if not cert.passed:
        raise InvalidComplexStructure(f"residuals {cert.residuals()}")
    return _hermitian(A, J, u, v)


# ---------------------------------------------------------------------------
# Complexification as a real doubling.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexifiedAlgebra:
    """Real doubling of an algebra, with the multiplication-by-i operator.

    Coordinates are (real block, imaginary block) over the original basis.
    """

    real_form: MetricLieAlgebra
    i_op: tuple
    sigma_op: tuple
    base: MetricLieAlgebra

    @property
    def dim(self) -> int:
        return self.real_form.dim


def complexify(A: MetricLieAlgebra) -> ComplexifiedAlgebra:
    """Real 2n-dim algebra with bracket [(a,b),(c,d)] = ([a,c]-[b,d], [a,d]+[b,c])."""
    n = A.dim
    numeric = A.backend == NUMERIC
    one = 1.0 if numeric else Fraction(1)
    z = 0.0 if numeric else Fraction(0)
    brackets = {}
    for (i, j), terms in A.algebra.structure:
        brackets[(i, j)] = [(k, c) for k, c in terms]
        brackets[(i, n + j)] = [(n + k, c) for k, c in terms]
        brackets[(j, n + i)] = [(n + k, -c) for k, c in terms]
        brackets[(n + i, n + j)] = [(k, -c) for k, c in terms]
    G = A.gram
    gram = [
        [G[i % n][j % n] if (i < n) == (j < n) else z for j in range(2 * n)]
        for i in range(2 * n)
    ]
    labels = tuple(A.algebra.basis_labels) + tuple(f"i{l}" for l in A.algebra.basis_labels)
    real_form = make_algebra(2 * n, brackets, gram, f"{A.name}^C", A.backend, A.tol, labels, check=False)
    i_op = tuple(
        tuple(
            (-one if (r < n and c == r + n) else (one if (r >= n and c == r - n) else z))
            for c in range(2 * n)
        )
        for r in range(2 * n)
    )
    sigma = tuple(
        tuple((one if r < n else -one) if r == c else z for c in range(2 * n))
        for r in range(2 * n)
    )
    return ComplexifiedAlgebra(real_form, i_op, sigma, A)


def hermitian_form_complexified(AC: ComplexifiedAlgebra, u, v) -> HermitianValue:
    """The extended inner product on g^C (orthonormal-basis extension)."""
    n = AC.base.dim
    G = AC.base.gram
    a, b = u[:n], u[n:]
    c, d = v[:n], v[n:]
    re = linalg.bilinear(G, a, c) + linalg.bilinear(G, b, d)
    im = linalg.bilinear(G, b, c) - linalg.bilinear(G, a, d)
    return HermitianValue(re, im)


def extend_operator(AC: ComplexifiedAlgebra, f) -> tuple:
    """C-linear extension of an operator on the base algebra: block diag(f, f)."""
    n = AC.base.dim
    if len(f) != n:
        raise DimensionMismatch("operator does not act on the base algebra")
    numeric = AC.base.backend == NUMERIC
    z = 0.0 if numeric else Fraction(0)
    return tuple(
        tuple(f[r % n][c % n] if (r < n) == (c < n) else z for c in range(2 * n))
        for r in range(2 * n)
    )


def eigensplit(A: MetricLieAlgebra, J):
    """Images of (I -+ i_op J^C)/2 in the complexification: the +-i eigenspaces."""
    cert = verify_complex_structure(A, J)
    if not cert.passed:
        raise InvalidComplexStructure(f"residuals {cert.residuals()}")
    AC = complexify(A)
    n2 = AC.dim
    numeric = A.backend == NUMERIC
    I = linalg.identity(n2, numeric=numeric)
    Jc = extend_operator(AC, J)
    iJ = linalg.mat_mul(AC.i_op, Jc)
    half = 0.5 if numeric else Fraction(1, 2)
    Pplus = linalg.mat_scale(half, linalg.mat_sub(I, iJ))
    Pminus = linalg.mat_scale(half, linalg.mat_add(I, iJ))
    g1 = Subspace.from_vectors(n2, list(linalg.transpose(Pplus)), A.tol)
    gm1 = Subspace.from_vectors(n2, list(linalg.transpose(Pminus)), A.tol)
    return g1, gm1


@dataclass(frozen=True)
class DoublingCertificate:
    bracket_residual: object
    intertwine_residual: object
    embedded_metric_residual: object
    isometry_residual: object
    rank: int
    passed: bool

    def residuals(self):
        return {
            "bracket": self.bracket_residual,
            "intertwine": self.intertwine_residual,
            "embedded_metric": self.embedded_metric_residual,
            "isometry": self.isometry_residual,
        }


def verify_doubling_isometry(A: MetricLieAlgebra, J) -> DoublingCertificate:
    """Check that (a,b) -> (a + Jb, a - Jb) is an isometric isomorphism
    from the complexification onto (g, J) + (g, -J)."""
    cert = verify_complex_structure(A, J)
    if not cert.passed:
        raise InvalidComplexStructure(f"residuals {cert.residuals()}")
    n = A.dim
    numeric = A.backend == NUMERIC
    AC = complexify(A)
    n2 = AC.dim
    minusJ = linalg.mat_scale(-1, J)
    # Phi as a block matrix [[I, J], [I, -J]]
    I = linalg.identity(n, numeric=numeric)
    Phi = tuple(
        tuple(I[r % n][c] if c < n else (J if r < n else minusJ)[r % n][c - n] for c in range(n2))
        for r in range(n2)
    )
    D = direct_sum(A, A)  # bracket container for the codomain

    worst_br = 0
    for p in range(n2):
        ep = linalg.basis_vec(n2, p, numeric=numeric)
        for q in range(p + 1, n2):
            eq = linalg.basis_vec(n2, q, numeric=numeric)
            lhs = linalg.mat_vec(Phi, bracket(AC.real_form, ep, eq))
            rhs = bracket(D, linalg.mat_vec(Phi, ep), linalg.mat_vec(Phi, eq))
            worst_br = max(worst_br, linalg.max_abs_vec(linalg.vec_sub(lhs, rhs)))

    JJ = tuple(
        tuple((J if r < n else minusJ)[r % n][c % n] if (r < n) == (c < n) else (0.0 if numeric else Fraction(0))
              for c in range(n2))
        for r in range(n2)
    )
    inter = linalg.mat_max_diff(linalg.mat_mul(Phi, AC.i_op), linalg.mat_mul(JJ, Phi))

    # the embedded copy phi(X) = (X, X) recovers the original inner product
    worst_emb = 0
    for i in range(n):
        ei = linalg.basis_vec(n, i, numeric=numeric)
        for j in range(n):
            ej = linalg.basis_vec(n, j, numeric=numeric)
            h1 = _hermitian(A, J, ei, ej)
            h2 = _hermitian(A, minusJ, ei, ej)
            worst_emb = max(
                worst_emb,
                abs(h1.re + h2.re - A.gram[i][j]),
                abs(h1.im + h2.im),
            )

    # full Hermitian isometry of Phi on basis pairs of the complexification
    worst_iso = 0
    for p in range(n2):
        ep = linalg.basis_vec(n2, p, numeric=numeric)
        fp = linalg.mat_vec(Phi, ep)
        for q in range(n2):
            eq = linalg.basis_vec(n2, q, numeric=numeric)
            fq = linalg.mat_vec(Phi, eq)
            h1 = _hermitian(A, J, fp[:n], fq[:n])
            h2 = _hermitian(A, minusJ, fp[n:], fq[n:])
            hc = hermitian_form_complexified(AC, ep, eq)
            worst_iso = max(
                worst_iso,
                abs(h1.re + h2.re - hc.re),
                abs(h1.im + h2.im - hc.im),
            )

    rk = linalg.rank(Phi, A.tol)
    tol = A.tol
    passed = rk == n2 and all(
        linalg.is_zero(r, tol) for r in (worst_br, inter, worst_emb, worst_iso)
    )
    return DoublingCertificate(worst_br, inter, worst_emb, worst_iso, rk, passed)


@dataclass(frozen=True)
class CommuteReport:
    commute: bool
    commutator_image_in_center: bool
    residual: object

    def __bool__(self):
        return self.commute


def commute_check(A: MetricLieAlgebra, J1, J2) -> CommuteReport:
    """Do J1 and J2 commute?  Also reports whether the commutator image
    lies in the center, the weaker fact for merely bi-invariant pairs."""
    from .core import center

    comm = linalg.mat_sub(linalg.mat_mul(J1, J2), linalg.mat_mul(J2, J1))
    res = linalg.max_abs(comm)
    Z = center(A)
    in_center = all(Z.contains(col) for col in linalg.transpose(comm))
    return CommuteReport(linalg.is_zero(res, A.tol), in_center, res)


def jlambda(lam, backend: str = EXACT, tol: float = DEFAULT_TOL):
    """The 4x4 rotation family J_lambda on abelian R^4, prefactor 1/sqrt(lam^2+1)."""
    if backend == EXACT:
        lam = Fraction(lam)
        s = linalg.frac_sqrt(lam * lam + 1)
        if s is None:
            raise IrrationalNormalizer(
                f"lambda^2 + 1 = {lam * lam + 1} is not a rational square"
            )
        f = 1 / s
        z, one = Fraction(0), Fraction(1)
    else:
        lam = float(lam)
        f = 1.0 / math.sqrt(lam * lam + 1.0)
        z, one = 0.0, 1.0
    rows = (
        (z, one, -lam, z),
        (-one, z, z, lam),
        (lam, z, z, one),
        (z, -lam, -one, z),
    )
    return linalg.mat_scale(f, rows)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _normalize_sign(J, tol):
    """Fix the global sign so the first nonzero entry in row-major order is positive."""
    for row in J:
        for x in row:
            if not linalg.is_zero(x, tol):
                return J if x > 0 else linalg.mat_scale(-1, J)
    return J


def _factor_complex_structure(induced: MetricLieAlgebra):
    """The canonical J on one irreducible factor, or None.

    Returns (J, numeric_flag).  The skew centroid of an irreducible factor
    has dimension 0 or 1; anything larger contradicts the theory and is a
    hard error.
    """
    K_space = skew_centroid(induced)
    if K_space.dim == 0:
        return None
    if K_space.dim > 1:
        raise InternalAssertionFailure(
            f"skew centroid of an irreducible factor has dim {K_space.dim}; "
            f"basis dump: {K_space.basis}"
        )
    K = K_space.basis[0]
    s = induced.dim
    numeric = induced.backend == NUMERIC
    K2 = linalg.mat_mul(K, K)
    lam = K2[0][0]
    scal_res = linalg.mat_max_diff(
        K2, linalg.mat_scale(lam, linalg.identity(s, numeric=numeric))
    )
    if not linalg.is_zero(scal_res, induced.tol) or not lam < 0:
        raise InternalAssertionFailure(
            f"skew centroid element has non-scalar or non-negative square (lam={lam})"
        )
    if numeric:
        J = linalg.mat_scale(1.0 / math.sqrt(-lam), K)
        return _normalize_sign(J, induced.tol), True
    root = linalg.frac_sqrt(-lam)
    if root is None:
        J = linalg.mat_scale(1.0 / math.sqrt(float(-lam)), linalg.to_float_mat(K))
        return _normalize_sign(J, DEFAULT_TOL), True
    return _normalize_sign(linalg.mat_scale(1 / root, K), 0.0), False


def enumerate_complex_structures(A: MetricLieAlgebra, seed: int = 0):
    """All orthogonal bi-invariant complex structures, assembled factor-wise.

    Returns the empty list or exactly 2^k verified structures, ordered by
    sign vector (+1 before -1).  Refuses algebras with an abelian factor.
    """
    dec = decompose(A, seed=seed)
    work = dec.algebra
    pieces = []
    any_numeric = dec.backend == NUMERIC
    for f in dec.factors:
        res = _factor_complex_structure(f.induced)
        if res is None:
            return []
        Jf, numeric = res
        any_numeric = any_numeric or numeric
        C = f.carrier.matrix_columns()
        Ct = linalg.transpose(C)
        G = work.gram
        M = linalg.inverse(linalg.mat_mul(Ct, linalg.mat_mul(G, C)), work.tol)
        R = linalg.mat_mul(M, linalg.mat_mul(Ct, G))
        if numeric:
            C, R = linalg.to_float_mat(C), linalg.to_float_mat(R)
        pieces.append(linalg.mat_mul(C, linalg.mat_mul(Jf, R)))

    n = work.dim
    tol = work.tol or (DEFAULT_TOL if any_numeric else 0.0)
    out = []
    for signs in itertools.product((1, -1), repeat=len(pieces)):
        numeric_out = any_numeric
        J = linalg.zeros(n, n, numeric=numeric_out)
        if numeric_out:
            J = linalg.to_float_mat(J)
        for s, piece in zip(signs, pieces):
            term = linalg.mat_scale(s, piece)
            if numeric_out:
                term = linalg.to_float_mat(term)
            J = linalg.mat_add(J, term)
        cert = verify_complex_structure(work, J, tol=tol)
        if not cert.passed:
            raise InternalAssertionFailure(
                f"assembled structure failed verification: {cert.residuals()}"
            )
        out.append(ComplexStructure(J, cert, NUMERIC if numeric_out else work.backend, signs))
    return out
