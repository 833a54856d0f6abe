"""Group data and symmetric 2-tensors on the Lie algebra su(2)^k + R^n.

The fixed ordered basis of the Lie algebra is
    H_1, A_1, B_1, ..., H_k, A_k, B_k, e_1, ..., e_n
where (H, A, B) is the standard su(2) triple and e_i span the torus
directions; indices into tensors are 0-based throughout the Python API.

A symmetric 2-tensor s = sum S_pq X_p.X_q is stored as its exact rational
coefficient matrix S.  A left-invariant metric enters as the gram matrix G
of the basis; the tensor dual to it (the tensor of any g-orthonormal
basis) is G^{-1}, computed exactly.

Central subgroups are given by generators: a sign per SU(2) factor
(+1 or -1, i.e. the identity or -Id) together with a torus point written
as fractions of the full period per coordinate.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .gaussian import format_rational, parse_rational


# -- group data ---------------------------------------------------------------


@dataclass(frozen=True)
class CentralElement:
    """A central element: sign per SU(2) factor, torus point mod 1."""

    signs: tuple[int, ...]
    torus: tuple[Fraction, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise DomainError("central element signs must be +1 or -1")
        object.__setattr__(
            self, "torus", tuple(Fraction(t) % 1 for t in self.torus)
        )


@dataclass(frozen=True)
class GroupSpec:
    """SU(2)^k x T^n modulo the central subgroup generated by `central`."""

    k: int
    n: int
    central: tuple[CentralElement, ...] = ()
    name: str | None = None

    def __post_init__(self):
        if self.k < 0 or self.n < 0 or self.k + self.n == 0:
            raise DomainError("need k >= 0, n >= 0, k + n >= 1")
        for g in self.central:
            if len(g.signs) != self.k or len(g.torus) != self.n:
                raise DomainError("central element shape does not match (k, n)")

    @property
    def dim(self) -> int:
        return 3 * self.k + self.n

    @property
    def basis_names(self) -> tuple[str, ...]:
        names = []
        for j in range(1, self.k + 1):
            names += [f"H{j}", f"A{j}", f"B{j}"]
        names += [f"e{i}" for i in range(1, self.n + 1)]
        return tuple(names)

    @property
    def factor_count(self) -> int:
        """Number of factor blocks: one per SU(2) plus one torus block."""
        return self.k + (1 if self.n else 0)

    def factor_block(self, factor: int) -> tuple[int, int]:
        """(offset, size) of a factor block, 0-based; torus block is last."""
        if factor < 0 or factor >= self.factor_count:
            raise DomainError(f"factor index {factor} out of range")
        if factor < self.k:
            return 3 * factor, 3
        return 3 * self.k, self.n


def build_group_spec(
    k: int,
    n: int,
    central: Iterable[CentralElement] = (),
    name: str | None = None,
) -> GroupSpec:
    return GroupSpec(k=k, n=n, central=tuple(central), name=name)


_MINUS = -1


def preset(name: str) -> GroupSpec:
    """Named groups: su2, so3, u2, so4, spin4 (= su2xsu2), t1, t2, t3."""
    key = name.lower().replace("-", "").replace("_", "")
    if key == "su2":
        return build_group_spec(1, 0, name="su2")
    if key == "so3":
        return build_group_spec(
            1, 0, [CentralElement((_MINUS,), ())], name="so3"
        )
    if key == "u2":
        return build_group_spec(
            1, 1, [CentralElement((_MINUS,), (Fraction(1, 2),))], name="u2"
        )
    if key in ("spin4", "su2xsu2"):
        return build_group_spec(2, 0, name="spin4")
    if key == "so4":
        return build_group_spec(
            2, 0, [CentralElement((_MINUS, _MINUS), ())], name="so4"
        )
    if key in ("t1", "t2", "t3"):
        return build_group_spec(0, int(key[1]), name=key)
    raise DomainError(f"unknown group preset: {name!r}")


# -- symmetric tensors --------------------------------------------------------


def _freeze_symmetric(entries: Iterable[Iterable]) -> tuple[tuple[Fraction, ...], ...]:
    rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("tensor matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise DomainError("tensor matrix must be symmetric")
    return rows


@dataclass(frozen=True)
class SymTensor:
    """Coefficient matrix of a symmetric 2-tensor on the Lie algebra."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _freeze_symmetric(self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "SymTensor") -> "SymTensor":
        if self.n != other.n:
            raise DomainError("tensor size mismatch")
        return SymTensor(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def scale(self, c) -> "SymTensor":
        c = Fraction(c)
        return SymTensor(tuple(tuple(c * x for x in r) for r in self.entries))


@dataclass(frozen=True)
class MetricSpec:
    """Gram matrix of a left-invariant metric in the fixed basis."""

    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "gram", _freeze_symmetric(self.gram))

    @property
    def n(self) -> int:
        return len(self.gram)


def identity_tensor(n: int) -> SymTensor:
    return SymTensor(
        tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n))
            for i in range(n)
        )
    )


def is_positive_definite(entries) -> bool:
    """Exact Sylvester criterion: all leading principal minors positive.

    Accepts a SymTensor, MetricSpec, or raw symmetric rows.  Runs a
    division-controlled elimination; the pivot sequence is positive iff
    the leading minors are."""
    if isinstance(entries, SymTensor):
        rows = entries.entries
    elif isinstance(entries, MetricSpec):
        rows = entries.gram
    else:
        rows = _freeze_symmetric(entries)
    n = len(rows)
    work = [list(r) for r in rows]
    for c in range(n):
        pivot = work[c][c]
        if pivot <= 0:
            return False
        for r in range(c + 1, n):
            f = work[r][c] / pivot
            if f:
                wr, wc = work[r], work[c]
                for j in range(c, n):
                    wr[j] -= f * wc[j]
    return True


def metric_to_tensor(metric: MetricSpec) -> SymTensor:
    """Exact inverse of the gram matrix: the tensor of a g-orthonormal
    basis, so that the operator it induces is the metric Laplacian."""
    n = metric.n
    if not is_positive_definite(metric):
        raise DomainError("gram matrix is not positive definite")
    work = [list(r) + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, r in enumerate(metric.gram)]
    for c in range(n):
        piv = next((r for r in range(c, n) if work[r][c]), None)
        if piv is None:
            raise DomainError("gram matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        pv = work[c][c]
        work[c] = [x / pv for x in work[c]]
        for r in range(n):
            if r != c and work[r][c]:
                f = work[r][c]
                work[r] = [x - f * y for x, y in zip(work[r], work[c])]
    return SymTensor(tuple(tuple(row[n:]) for row in work))


def symmetric_product(n: int, p: int, q: int, coeff=1) -> SymTensor:
    """coeff * X_p.X_q as a coefficient matrix (0-based indices): coeff on
    the diagonal slot for p == q, coeff/2 on each of (p,q) and (q,p)."""
    if not (0 <= p < n and 0 <= q < n):
        raise DomainError("basis index out of range")
    c = Fraction(coeff)
    rows = [[Fraction(0)] * n for _ in range(n)]
    if p == q:
        rows[p][p] = c
    else:
        rows[p][q] = c / 2
        rows[q][p] = c / 2
    return SymTensor(tuple(tuple(r) for r in rows))


def square_of_vector(coeffs: Sequence) -> SymTensor:
    """(sum u_p X_p)^2: the rank-one coefficient matrix u u^T."""
    u = [Fraction(x) for x in coeffs]
    return SymTensor(tuple(tuple(a * b for b in u) for a in u))


def embed_factor_tensor(spec: GroupSpec, factor: int, tensor: SymTensor) -> SymTensor:
    """Extend a tensor on one factor block by zero to the full algebra."""
    off, size = spec.factor_block(factor)
    if tensor.n != size:
        raise DomainError(
            f"factor {factor} has block size {size}, tensor has {tensor.n}"
        )
    N = spec.dim
    rows = [[Fraction(0)] * N for _ in range(N)]
    for i in range(size):
        for j in range(size):
            rows[off + i][off + j] = tensor[i, j]
    return SymTensor(tuple(tuple(r) for r in rows))


# -- JSON ---------------------------------------------------------------------


def tensor_to_json(tensor: SymTensor) -> dict:
    return {
        "tensor": [[format_rational(x) for x in row] for row in tensor.entries]
    }


def metric_to_json(metric: MetricSpec) -> dict:
    return {"gram": [[format_rational(x) for x in row] for row in metric.gram]}


def tensor_from_json(doc: dict) -> SymTensor:
    """Accepts {"tensor": rows} directly or {"gram": rows} via inversion."""
    if "tensor" in doc:
        rows = [[parse_rational(x) for x in r] for r in doc["tensor"]]
        return SymTensor(tuple(tuple(r) for r in rows))
    if "gram" in doc:
        rows = [[parse_rational(x) for x in r] for r in doc["gram"]]
        return metric_to_tensor(MetricSpec(tuple(tuple(r) for r in rows)))
    raise DomainError('expected a JSON object with "tensor" or "gram"')


def tensor_hash(tensor: SymTensor) -> str:
    """Short stable identifier for certificates."""
    doc = json.dumps(tensor_to_json(tensor), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(doc.encode()).hexdigest()[:12]


def group_from_json(doc: dict) -> GroupSpec:
    central = []
    for g in doc.get("central", []):
        central.append(
            CentralElement(
                tuple(int(s) for s in g.get("signs", [])),
                tuple(parse_rational(t) for t in g.get("torus", [])),
            )
        )
    return build_group_spec(
        int(doc["k"]), int(doc["n"]), central, name=doc.get("name")
    )


def group_to_json(spec: GroupSpec) -> dict:
    doc: dict = {"k": spec.k, "n": spec.n}
    if spec.name:
        doc["name"] = spec.name
    if spec.central:
        doc["central"] = [
            {
                "signs": list(g.signs),
                "torus": [format_rational(t) for t in g.torus],
            }
            for g in spec.central
        ]
    return doc
