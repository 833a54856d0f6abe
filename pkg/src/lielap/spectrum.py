"""Exact Laplace spectrum assembly below a cutoff.

The pipeline:

  1. Certify a rational lower bound c on the smallest eigenvalue of the
     coefficient tensor S, exactly (positive definiteness of S - c*I).
     Since D_V(s) dominates c times the Casimir operator, every irreducible
     contributing an eigenvalue <= L satisfies Casimir(V) <= L / c, which
     cuts the enumeration down to a finite ball.
  2. Compute the characteristic polynomial of D_V(s) exactly for each
     candidate label of the dual-reduced, quotient-descended list.
  3. Refine all squarefree factors into a gcd-free basis, so eigenvalue
     coincidences across different labels are decided by exact
     divisibility, never by floating-point comparison.
  4. Emit one entry per real root, with the full contributor list and the
     real multiplicity accounting (complex-type labels stand for their
     dual pair and count twice).

Eigenspace irreducibility per entry: exactly one contributing label, with
multiplicity class 1 (real or complex type) or class 2 (quaternionic).
Failures are tagged with the letter of the violated condition: "a" for a
cross-representation collision, "b" for a repeated eigenvalue inside a
real/complex-type representation, "c" for a quaternionic class above two.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra_core import (
    GroupSpec,
    SymTensor,
    group_to_json,
    is_positive_definite,
    tensor_hash,
    tensor_to_json,
)
from .concurrency import parallel_map
from .errors import DomainError
from .irreps import (
    IrrepLabel,
    canonical_dual_rep,
    casimir_eigenvalue,
    classify_type,
    descends_to_quotient,
    format_label,
    is_self_dual,
)
from .poly import (
    Poly,
    div_exact,
    divides,
    from_int,
    gcd,
    int_sign_at,
    primitive_int,
    real_root_brackets,
    sturm_chain,
    sturm_variations,
)
from .polycert import char_poly_of, multiplicity_profile
from .operator import build_DV  # noqa: F401  (re-exported for callers)


def certified_lower_bound(tensor: SymTensor) -> Fraction:
    """A positive rational c with tensor - c*I exactly positive definite."""
    n = tensor.n
    dense = np.array([[float(tensor[i, j]) for j in range(n)] for i in range(n)])
    lam = float(np.linalg.eigvalsh(dense)[0])
    c = Fraction(max(lam, 0.0)).limit_denominator(10**12) * Fraction(999, 1000)
    if c <= 0:
        c = Fraction(1, 10**6)

    def shifted_ok(c: Fraction) -> bool:
        rows = [
            [tensor[i, j] - (c if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        return is_positive_definite(rows)

    while not shifted_ok(c):
        c /= 2
        if c < Fraction(1, 10**40):
            raise ArithmeticError("failed to certify a spectral lower bound")
    return c


def enumerate_irreps(
    spec: GroupSpec, tensor: SymTensor, cutoff
) -> list[IrrepLabel]:
    """Dual-reduced labels that can contribute an eigenvalue <= cutoff."""
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise DomainError("eigenvalue cutoff must be nonnegative")
    if not is_positive_definite(tensor):
        raise DomainError("coefficient tensor must be positive definite")
    if tensor.n != spec.dim:
        raise DomainError(
            f"tensor has size {tensor.n}, algebra has dimension {spec.dim}"
        )
    radius = cutoff / certified_lower_bound(tensor)

    found: list[IrrepLabel] = []

    def weights(idx: int, budget: Fraction, acc: tuple[int, ...], spins):
        if idx == spec.n:
            lab = IrrepLabel(spins, acc)
            if lab == canonical_dual_rep(lab) and descends_to_quotient(spec, lab):
                found.append(lab)
            return
        top = math.isqrt(int(budget))
        for w in range(-top, top + 1):
            weights(idx + 1, budget - w * w, acc + (w,), spins)

    def spins(idx: int, budget: Fraction, acc: tuple[int, ...]):
        if idx == spec.k:
            weights(0, budget, (), acc)
            return
        m = 0
        while m * (m + 2) <= budget:
            spins(idx + 1, budget - m * (m + 2), acc + (m,))
            m += 1

    spins(0, radius, ())
    found.sort(key=lambda l: (casimir_eigenvalue(l), l.spins, l.weight))
    return found


@dataclass(frozen=True)
class Contribution:
    """One label's share of an eigenvalue."""

    label: IrrepLabel
    multiplicity: int  # eigenspace dimension inside the complex irreducible
    rep_type: str
    dim: int
    dual_pair: bool

    @property
    def real_multiplicity(self) -> int:
        return self.multiplicity * self.dim * (2 if self.dual_pair else 1)


@dataclass(frozen=True)
class SpectrumEntry:
    value: float
    exact_value: Fraction | None  # rational roots only
    factor: Poly  # irreducible-over-the-table squarefree factor it solves
    real_multiplicity: int
    contributions: tuple[Contribution, ...]
    irreducible: bool
    failed_condition: str | None


@dataclass(frozen=True)
class SpectrumTable:
    spec: GroupSpec
    tensor: SymTensor
    tensor_hash: str
    cutoff: Fraction
    lower_bound: Fraction
    labels: tuple[IrrepLabel, ...]
    entries: tuple[SpectrumEntry, ...]

    @property
    def all_irreducible(self) -> bool:
        return all(e.irreducible for e in self.entries)


def gcd_free_basis(polys: list[Poly]) -> list[Poly]:
    """Pairwise coprime squarefree polynomials spanning the inputs.

    Inputs must be squarefree with positive integer leading coefficient
    (Yun output).  Every input is then a product of basis elements times a
    constant, so divisibility against the basis classifies shared roots.
    """
    def div_primitive(a: Poly, b: Poly) -> Poly:
        return from_int(primitive_int(div_exact(a, b)))

    basis: list[Poly] = []
    for f in polys:
        f = from_int(primitive_int(f))
        i = 0
        while i < len(basis) and f.degree > 0:
            b = basis[i]
            g = gcd(f, b)
            if g.degree == 0:
                i += 1
                continue
            if g.degree < b.degree:
                basis[i] = g
                basis.insert(i + 1, div_primitive(b, g))
            f = div_primitive(f, basis[i])
            i += 1
        if f.degree > 0:
            basis.append(f)
    return basis


def _horner(cs, xq: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * xq + c
    return acc


def _polish_newton(monic, deriv, x: float) -> float:
    # exact-arithmetic Newton: float evaluation of the large monic
    # coefficients stalls well short of double precision
    for _ in range(25):
        xq = Fraction(x)
        px = _horner(monic, xq)
        if not px:
            break
        dpx = _horner(deriv, xq)
        if not dpx:
            break
        nxt = float(xq - px / dpx)
        if nxt == x:
            break
        x = nxt
    return x


def _ulp_pinned(cs, x: float) -> bool:
    """True when a sign change of the integer polynomial brackets x within
    one float step on either side."""
    lo = Fraction(math.nextafter(x, -math.inf))
    hi = Fraction(math.nextafter(x, math.inf))
    slo = int_sign_at(cs, lo)
    shi = int_sign_at(cs, hi)
    return slo == 0 or shi == 0 or slo != shi


def _alternation_certified(cs, xs) -> bool:
    """Exact sign alternation across the gaps between the sorted values xs
    proves each gap cell holds exactly one root of the degree-len(xs)
    polynomial cs, i.e. the value list is a complete bracketing."""
    bound = 1 + max(abs(c) for c in cs[:-1]) // abs(cs[-1]) + 1
    cuts = [Fraction(-bound)]
    cuts += [Fraction((u + v) / 2) for u, v in zip(xs, xs[1:])]
    cuts.append(Fraction(bound))
    signs = [int_sign_at(cs, c) for c in cuts]
    return all(signs) and all(s != t for s, t in zip(signs, signs[1:]))


def _refine_bracket(chain, cs, monic, deriv, a: Fraction, b: Fraction):
    """One simple root in (a, b]: pin it to double precision exactly."""
    sb = int_sign_at(cs, b)
    if sb == 0:
        return float(b), b

    x = _polish_newton(monic, deriv, (float(a) + float(b)) / 2)
    if math.isfinite(x) and a < Fraction(x) <= b and _ulp_pinned(cs, x):
        return x, None

    sa = int_sign_at(cs, a)
    for _ in range(300):
        if float(a) == float(b):
            break
        mid = (a + b) / 2
        sm = int_sign_at(cs, mid)
        if sm == 0:
            return float(mid), mid
        if sa == 0:
            # left endpoint sits on an adjacent root; split on counts
            if sturm_variations(chain, mid) - sturm_variations(chain, b):
                a = mid
                sa = sm
            else:
                b = mid
        elif sm == sa:
            a = mid
        else:
            b = mid
    return float((a + b) / 2), None


def real_roots(h: Poly) -> list[tuple[float, Fraction | None]]:
    """All roots of a squarefree factor known to split over the reals.

    Fast route: companion-matrix eigensolver seeds polished by exact
    Newton, accepted only under two exact certificates (sign alternation
    between consecutive values, and a sign change within one float step
    of each value).  When that fails (the companion matrix turns
    unreliable past degree thirty or so) the roots are isolated with a
    Sturm chain, seeded by the same values as hints, and bisected; that
    route cannot misplace a root.
    """
    if h.degree <= 0:
        return []
    if h.degree == 1:
        r = -h.coeffs[0] / h.coeffs[1]
        return [(float(r), r)]

    monic = [c / h.coeffs[-1] for c in h.coeffs]
    deriv = [i * c for i, c in enumerate(monic)][1:]
    cs = primitive_int(h)
    seeds = np.roots(np.array([float(c) for c in reversed(monic)]))
    xs = None
    if all(math.isfinite(z.real) and math.isfinite(z.imag) for z in seeds):
        xs = sorted(_polish_newton(monic, deriv, float(z.real)) for z in seeds)
        if _alternation_certified(cs, xs) and \
                all(_ulp_pinned(cs, x) for x in xs):
            return [(x, None) for x in xs]

    brackets = real_root_brackets(h, hints=xs)
    if len(brackets) != h.degree:
        raise ArithmeticError(
            f"factor of degree {h.degree} has only {len(brackets)} real "
            "roots; hermitian eigenvalue factors must split over the reals"
        )
    chain = sturm_chain(h)
    return [
        _refine_bracket(chain, chain[0], monic, deriv, a, b)
        for a, b in brackets
    ]


def assemble_spectrum(spec: GroupSpec, tensor: SymTensor, cutoff) -> SpectrumTable:
    cutoff = Fraction(cutoff)
    labels = enumerate_irreps(spec, tensor, cutoff)
    bound = certified_lower_bound(tensor)

    def profile_of(lab: IrrepLabel):
        return multiplicity_profile(char_poly_of(spec, lab, tensor).poly)

    profiles = parallel_map(profile_of, labels)

    # (label, class multiplicity, squarefree factor), quaternionic sanity
    pieces: list[tuple[IrrepLabel, int, Poly]] = []
    for lab, prof in zip(labels, profiles):
        rep_type = classify_type(lab)
        for mult, factor in prof.entries:
            if rep_type == "quaternionic" and mult % 2:
                raise ArithmeticError(
                    f"odd eigenvalue multiplicity {mult} on quaternionic "
                    f"label {format_label(lab)}"
                )
            pieces.append((lab, mult, factor))

    basis = gcd_free_basis([factor for _, _, factor in pieces])

    entries: list[SpectrumEntry] = []
    for h in basis:
        contribs = []
        for lab, mult, factor in pieces:
            if divides(h, factor):
                contribs.append(
                    Contribution(
                        label=lab,
                        multiplicity=mult,
                        rep_type=classify_type(lab),
                        dim=lab.dim,
                        dual_pair=not is_self_dual(lab),
                    )
                )
        real_mult = sum(c.real_multiplicity for c in contribs)
        if len(contribs) > 1:
            irreducible, failed = False, "a"
        else:
            (c,) = contribs
            if c.rep_type == "quaternionic":
                irreducible = c.multiplicity == 2
                failed = None if irreducible else "c"
            else:
                irreducible = c.multiplicity == 1
                failed = None if irreducible else "b"
        for approx, exact in real_roots(h):
            if exact is not None:
                if exact > cutoff:
                    continue
            elif approx > float(cutoff) + 1e-9 * max(1.0, abs(approx)):
                continue
            entries.append(
                SpectrumEntry(
                    value=approx,
                    exact_value=exact,
                    factor=h,
                    real_multiplicity=real_mult,
                    contributions=tuple(contribs),
                    irreducible=irreducible,
                    failed_condition=failed,
                )
            )

    entries.sort(key=lambda e: e.value)
    return SpectrumTable(
        spec=spec,
        tensor=tensor,
        tensor_hash=tensor_hash(tensor),
        cutoff=cutoff,
        lower_bound=bound,
        labels=tuple(labels),
        entries=tuple(entries),
    )


# -- reporting -----------------------------------------------------------------


def _fmt_float(x: float) -> float:
    return float(f"{x:.12g}")


def entry_to_json(e: SpectrumEntry) -> dict:
    return {
        "eigenvalue": _fmt_float(e.value),
        "exact": str(e.exact_value) if e.exact_value is not None else None,
        "multiplicity": e.real_multiplicity,
        "irreducible": e.irreducible,
        "failed_condition": e.failed_condition,
        "contributors": [
            {
                "label": format_label(c.label),
                "eigenspace_dim": c.multiplicity,
                "type": c.rep_type,
                "dim": c.dim,
                "dual_pair": c.dual_pair,
            }
            for c in e.contributions
        ],
    }


def table_to_json(t: SpectrumTable) -> dict:
    return {
        "group": group_to_json(t.spec),
        "tensor": tensor_to_json(t.tensor),
        "tensor_hash": t.tensor_hash,
        "cutoff": str(t.cutoff),
        "certified_lower_bound": str(t.lower_bound),
        "labels_considered": [format_label(l) for l in t.labels],
        "entries": [entry_to_json(e) for e in t.entries],
        "irreducible_spectrum": t.all_irreducible,
    }


def table_to_csv(t: SpectrumTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        ["eigenvalue", "exact", "multiplicity", "irreducible",
         "failed_condition", "contributors"]
    )
    for e in t.entries:
        w.writerow(
            [
                f"{e.value:.12g}",
                str(e.exact_value) if e.exact_value is not None else "",
                e.real_multiplicity,
                "yes" if e.irreducible else "no",
                e.failed_condition or "",
                ";".join(
                    f"{format_label(c.label)}*{c.multiplicity}"
                    for c in e.contributions
                ),
            ]
        )
    return buf.getvalue()


def table_to_text(t: SpectrumTable) -> str:
    lines = [
        f"group {t.spec.name}  cutoff {t.cutoff}  "
        f"tensor {t.tensor_hash}",
        f"{'eigenvalue':>16}  {'mult':>5}  {'irr':>3}  contributors",
    ]
    for e in t.entries:
        val = str(e.exact_value) if e.exact_value is not None else f"{e.value:.9g}"
        contribs = ", ".join(
            f"{format_label(c.label)} (x{c.multiplicity})" for c in e.contributions
        )
        flag = "yes" if e.irreducible else f"no:{e.failed_condition}"
        lines.append(f"{val:>16}  {e.real_multiplicity:>5}  {flag:>3}  {contribs}")
    lines.append(
        "all eigenspaces irreducible"
        if t.all_irreducible
        else "reducible eigenspaces present"
    )
    return "\n".join(lines)


def verdict_report(t: SpectrumTable) -> dict:
    return {
        "irreducible_spectrum": t.all_irreducible,
        "entries": len(t.entries),
        "violations": [
            {
                "eigenvalue": _fmt_float(e.value),
                "condition": e.failed_condition,
                "labels": [format_label(c.label) for c in e.contributions],
            }
            for e in t.entries
            if not e.irreducible
        ],
    }
