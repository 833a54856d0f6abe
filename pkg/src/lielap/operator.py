"""Laplace-type operators D_V(s) and their numeric cross-check path.

For a symmetric coefficient matrix S the operator on the irreducible V is

    D_V(s) = - sum_{p,q} S_pq rho_*(X_p) rho_*(X_q),

exact and independent of how s is written as a sum of symmetric products
because S is symmetric.  With s the tensor of a metric-orthonormal basis
(the exact inverse of the gram matrix) this is the Laplace operator on the
V-isotypic part; with the identity tensor it is the Casimir element.

The numeric path conjugates D by the diagonal square-root of the invariant
inner product weights, which makes it honestly hermitian, then uses the
dense hermitian eigensolver and clusters eigenvalues by relative gap.  It
is a cross-check only: verdicts always come from the exact path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra_core import (
    GroupSpec,
    SymTensor,
    build_group_spec,
    embed_factor_tensor,
    identity_tensor,
)
from .errors import DomainError
from .gaussian import GQ
from .irreps import IrrepLabel, build_irrep, orthonormal_weights
from .linalg import Matrix, add_product, finish_rows


@dataclass(eq=False)
class OperatorMatrix:
    """Exact matrix of D_V(s) together with its provenance."""

    spec: GroupSpec
    label: IrrepLabel
    tensor: SymTensor
    matrix: Matrix

    @property
    def dim(self) -> int:
        return self.matrix.nrows


def casimir_tensor(spec: GroupSpec) -> SymTensor:
    """The identity coefficient matrix: sum of squares of the basis."""
    return identity_tensor(spec.dim)


def build_DV(spec: GroupSpec, lab: IrrepLabel, tensor: SymTensor) -> OperatorMatrix:
    if tensor.n != spec.dim:
        raise DomainError(
            f"tensor has size {tensor.n}, algebra has dimension {spec.dim}"
        )
    rep = build_irrep(spec, lab)
    gens = rep.generators
    acc = [dict() for _ in range(rep.dim)]
    for p in range(spec.dim):
        for q in range(spec.dim):
            c = tensor[p, q]
            if c:
                add_product(acc, gens[p], gens[q], GQ(-c))
    return OperatorMatrix(
        spec=spec, label=lab, tensor=tensor,
        matrix=finish_rows(rep.dim, rep.dim, acc),
    )


# -- numeric cross-check -------------------------------------------------------


@dataclass(frozen=True)
class NumericSpectrum:
    eigenvalues: tuple[float, ...]
    clusters: tuple[tuple[float, int], ...]
    tolerance: float


def cluster_values(values, tol: float) -> tuple[tuple[float, int], ...]:
    """Group sorted values whose gaps are below tol * max(1, scale)."""
    vals = sorted(values)
    if not vals:
        return ()
    scale = max(1.0, max(abs(v) for v in vals))
    thresh = tol * scale
    clusters = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > thresh:
            chunk = vals[start:i]
            clusters.append((sum(chunk) / len(chunk), len(chunk)))
            start = i
    return tuple(clusters)


def eigen_decompose_numeric(op: OperatorMatrix, tol: float = 1e-8) -> NumericSpectrum:
    """Hermitian eigenvalues of D in an orthonormal basis, clustered.

    The monomial basis is orthogonal but not normalized; conjugating by
    diag(sqrt(w)) with w the squared norms yields an honestly hermitian
    matrix.  If the conjugated matrix fails hermiticity beyond rounding,
    the operator construction is broken and this raises ArithmeticError.
    """
    n = op.dim
    if n == 0:
        return NumericSpectrum((), (), tol)
    w = orthonormal_weights(op.label)
    C = np.zeros((n, n), dtype=complex)
    for i, j, v in op.matrix.entries():
        # exact ratio first: the weights are huge factorials but their
        # ratios along matrix bands stay small
        C[i, j] = complex(v) * math.sqrt(Fraction(w[i], w[j]))
    scale = max(1.0, float(np.max(np.abs(C))) if n else 1.0)
    asym = float(np.max(np.abs(C - C.conj().T)))
    if asym > 1e-9 * scale:
        raise ArithmeticError(
            f"operator is not hermitian after conjugation (residue {asym:g})"
        )
    evals = np.linalg.eigvalsh((C + C.conj().T) / 2)
    eigenvalues = tuple(float(x) for x in evals)
    return NumericSpectrum(eigenvalues, cluster_values(eigenvalues, tol), tol)


def factor_spec_and_label(
    spec: GroupSpec, lab: IrrepLabel, factor: int
) -> tuple[GroupSpec, IrrepLabel]:
    """The standalone group and label of one factor block."""
    if factor < spec.k:
        return build_group_spec(1, 0), IrrepLabel((lab.spins[factor],), ())
    if spec.n == 0:
        raise DomainError("no torus block")
    return build_group_spec(0, spec.n), IrrepLabel((), lab.weight)


def kronecker_spectrum_check(
    spec: GroupSpec,
    lab: IrrepLabel,
    s1: SymTensor,
    s2: SymTensor,
    eps,
    tol: float = 1e-8,
) -> bool:
    """Verify the product structure of D on a two-block group.

    Exact half: the operator of iota_1(s1) + eps * iota_2(s2) built on the
    product equals the Kronecker sum D_1 x I + eps I x D_2 of the factor
    operators, entry for entry.  Numeric half: its clustered spectrum is
    the Minkowski multiset {mu_i + eps nu_j} within clustering tolerance.
    """
    if spec.factor_count != 2:
        raise DomainError("kronecker_spectrum_check needs exactly two factor blocks")
    eps = Fraction(eps)
    full = embed_factor_tensor(spec, 0, s1) + embed_factor_tensor(spec, 1, s2).scale(eps)
    D_full = build_DV(spec, lab, full)

    spec1, lab1 = factor_spec_and_label(spec, lab, 0)
    spec2, lab2 = factor_spec_and_label(spec, lab, 1)
    D1 = build_DV(spec1, lab1, s1)
    D2 = build_DV(spec2, lab2, s2)
    I1 = Matrix.identity(D1.dim)
    I2 = Matrix.identity(D2.dim)
    ksum = D1.matrix.kron(I2) + (I1.kron(D2.matrix) * GQ(eps))
    if D_full.matrix != ksum:
        return False

    n1 = eigen_decompose_numeric(D1, tol)
    n2 = eigen_decompose_numeric(D2, tol)
    feps = float(eps)
    sums = sorted(
        mu + feps * nu for mu in n1.eigenvalues for nu in n2.eigenvalues
    )
    got = sorted(eigen_decompose_numeric(D_full, tol).eigenvalues)
    if len(sums) != len(got):
        return False
    scale = max(1.0, max(abs(v) for v in sums + got))
    return all(abs(a - b) <= tol * scale for a, b in zip(sums, got))
