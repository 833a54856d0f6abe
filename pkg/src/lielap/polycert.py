"""Exact characteristic polynomials and resultant certificates.

Every verdict in this package reduces to the nonvanishing of an integer
resultant.  Three certificate kinds:

  a  res(p_V, p_W) != 0        V, W share no eigenvalue
  b  res(p_V, p_V') != 0       p_V is squarefree (all eigenvalues simple)
  c  res(p_V, p_V'') != 0      no eigenvalue of multiplicity >= 3

Kind a is only meaningful when W is neither V nor its dual (those always
share the full spectrum); kind c is only meaningful on quaternionic type,
where every eigenvalue is forced to even multiplicity and "all double" is
the best possible.  The domain checks below enforce exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra_core import GroupSpec, SymTensor, tensor_hash
from .errors import DomainError
from .irreps import IrrepLabel, classify_type, dual_label, format_label
from .linalg import Matrix, charpoly_gq
from .operator import OperatorMatrix, build_DV
from .poly import Poly, resultant, squarefree_decomposition


def charpoly_real(M: Matrix) -> Poly:
    """det(M - X*I) as a rational polynomial.

    The sign convention keeps the constant term equal to det(M).  Raises
    ArithmeticError if any coefficient has a nonzero imaginary part: the
    operators this is applied to are similar to hermitian matrices, so an
    imaginary coefficient means the construction upstream is wrong.
    """
    coeffs = charpoly_gq(M)  # det(X*I - M), monic, ascending
    n = M.nrows
    sign = Fraction(-1 if n % 2 else 1)
    out = []
    for c in coeffs:
        if c.im:
            raise ArithmeticError(
                f"characteristic polynomial has imaginary coefficient {c}"
            )
        out.append(sign * c.re)
    return Poly(out)


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial det(D_V(s) - X*I) with its provenance."""

    label: IrrepLabel
    tensor_hash: str
    poly: Poly

    @property
    def degree(self) -> int:
        return self.poly.degree


def char_poly_exact(op: OperatorMatrix) -> CharPoly:
    return CharPoly(
        label=op.label,
        tensor_hash=tensor_hash(op.tensor),
        poly=charpoly_real(op.matrix),
    )


def char_poly_of(spec: GroupSpec, lab: IrrepLabel, tensor: SymTensor) -> CharPoly:
    return char_poly_exact(build_DV(spec, lab, tensor))


@dataclass(frozen=True)
class MultiplicityProfile:
    """Squarefree split of a charpoly: entries (multiplicity, factor)."""

    degree: int
    entries: tuple[tuple[int, Poly], ...]

    def __post_init__(self):
        total = sum(i * f.degree for i, f in self.entries)
        if total != self.degree:
            raise ArithmeticError("multiplicity profile does not cover the degree")

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def is_all_simple(self) -> bool:
        return self.multiplicities in ((), (1,))

    @property
    def is_all_double(self) -> bool:
        return self.multiplicities in ((), (2,))


def multiplicity_profile(p: Poly) -> MultiplicityProfile:
    if p.degree < 0:
        raise DomainError("zero polynomial has no multiplicity profile")
    return MultiplicityProfile(
        degree=p.degree, entries=tuple(squarefree_decomposition(p))
    )


@dataclass(frozen=True)
class Certificate:
    """An integer resultant whose nonvanishing proves a spectral fact."""

    kind: str  # "a", "b", or "c"
    labels: tuple[IrrepLabel, ...]
    tensor_hash: str
    value: Fraction

    @property
    def verdict(self) -> bool:
        return self.value != 0

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "labels": [format_label(l) for l in self.labels],
            "tensor": self.tensor_hash,
            "value": str(self.value),
            "nonzero": self.verdict,
        }


def cert_a_from_polys(p: CharPoly, q: CharPoly) -> Certificate:
    if q.label in (p.label, dual_label(p.label)):
        raise DomainError(
            "separation certificate needs distinct, non-dual labels; "
            f"got {format_label(p.label)} and {format_label(q.label)}"
        )
    if p.tensor_hash != q.tensor_hash:
        raise DomainError("certificate operands use different coefficient tensors")
    return Certificate(
        kind="a",
        labels=(p.label, q.label),
        tensor_hash=p.tensor_hash,
        value=resultant(p.poly, q.poly),
    )


def cert_b_from_poly(p: CharPoly) -> Certificate:
    return Certificate(
        kind="b",
        labels=(p.label,),
        tensor_hash=p.tensor_hash,
        value=resultant(p.poly, p.poly.derivative()),
    )


def cert_c_from_poly(p: CharPoly) -> Certificate:
    if classify_type(p.label) != "quaternionic":
        raise DomainError(
            f"certificate kind c applies to quaternionic labels only, "
            f"got {format_label(p.label)}"
        )
    return Certificate(
        kind="c",
        labels=(p.label,),
        tensor_hash=p.tensor_hash,
        value=resultant(p.poly, p.poly.derivative().derivative()),
    )


def cert_a(
    spec: GroupSpec, labV: IrrepLabel, labW: IrrepLabel, tensor: SymTensor
) -> Certificate:
    if labW in (labV, dual_label(labV)):
        raise DomainError(
            "separation certificate needs distinct, non-dual labels; "
            f"got {format_label(labV)} and {format_label(labW)}"
        )
    return cert_a_from_polys(
        char_poly_of(spec, labV, tensor), char_poly_of(spec, labW, tensor)
    )


def cert_b(spec: GroupSpec, lab: IrrepLabel, tensor: SymTensor) -> Certificate:
    return cert_b_from_poly(char_poly_of(spec, lab, tensor))


def cert_c(spec: GroupSpec, lab: IrrepLabel, tensor: SymTensor) -> Certificate:
    if classify_type(lab) != "quaternionic":
        raise DomainError(
            f"certificate kind c applies to quaternionic labels only, "
            f"got {format_label(lab)}"
        )
    return cert_c_from_poly(char_poly_of(spec, lab, tensor))


def charpoly_from_eigenvalues(values) -> Poly:
    """prod (e - X) over the multiset: the charpoly in the det(D - X) sign."""
    p = Poly([1])
    for e in values:
        p = p * Poly([Fraction(e), Fraction(-1)])
    return p
