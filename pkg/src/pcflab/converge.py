"""Exact convergence decisions for periodic continued fractions.

The decision runs entirely on sign tests in the coefficient field and its
quadratic extension: a periodic continued fraction diverges exactly when its
conjugation matrix is a scalar, acts as a rotation of the line (eigenvalues
on the unit circle with distinct roots), or some cyclic shift of the period
has a vanishing lower-left entry with |lower-right| > 1.  Otherwise it
converges to the fixed point whose eigenvalue has modulus above 1 (or to the
double fixed point in the tangent case, sub-exponentially).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .continuant import INF, Mat2, Value, cf_matrix, finite_cf_value
from .intervals import Interval, log10_interval, value_interval
from .pcf import Pcf, QuadPoly, e_matrix, quad_poly_of_matrix, quad_roots
from .ring import ExtElem, RingElem, sign_under_embedding

# divergence reasons
IDENTITY_MULTIPLE = "IdentityMultiple"
ELLIPTIC = "Elliptic"
INEQ = "Ineq"
# convergence modes
LOXODROMIC = "Loxodromic"
PARABOLIC = "Parabolic"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the convergence decision."""

    converges: bool
    reason: str
    value: Optional[Value] = None
    eigenvalue: Optional[Union[RingElem, ExtElem]] = None
    eigen_modulus_sq_minus_1: Optional[Union[RingElem, ExtElem]] = None
    pariah_index: Optional[int] = None
    pariah_limit: Optional[Value] = None
    note: str = ""

    def __str__(self):
        if self.converges:
            return f"Converges({self.value!r}, {self.reason})"
        extra = f", j={self.pariah_index}" if self.pariah_index is not None else ""
        return f"Diverges({self.reason}{extra})"


def ineq_check(per: Sequence) -> Optional[int]:
    """Smallest shift j whose period matrix has entry21 = 0 and entry22^2 > 1."""
    per = [RingElem._wrap(c) for c in per]
    k = len(per)
    for j in range(k):
        m = cf_matrix(per[j:] + per[:j])
        if not m.e21 and (m.e22 * m.e22 - 1).sign_under_embedding() > 0:
            return j
    return None


def _eigenvalue_at(E: Mat2, z: Value):
    if z is INF:
        return E.e11
    return E.e21 * z + E.e22


def verdict(P: Pcf) -> Verdict:
    """Exact convergence decision; a total function over PCFs."""
    E = e_matrix(P)
    if E.is_identity_multiple():
        return Verdict(False, IDENTITY_MULTIPLE)
    tr = E.trace()
    det = E.det()  # always +-1
    disc = tr * tr - 4 * det  # also the discriminant of the fixed-point quadratic
    s_disc = disc.sign_under_embedding()
    if s_disc == 0:
        # tangent case: double fixed point, sub-exponential convergence
        lam = tr / 2  # +-1 here
        pair = quad_roots(quad_poly_of_matrix(E), P.ambient_d())
        note = "all-roots-infinite" if pair.first is INF else ""
        return Verdict(
            True,
            PARABOLIC,
            value=pair.first,
            eigenvalue=lam,
            eigen_modulus_sq_minus_1=RingElem(0),
            note=note,
        )
    if s_disc < 0:
        # complex conjugate eigenvalues; |lambda|^2 = det = +1: a rotation
        return Verdict(False, ELLIPTIC)
    if det == -1 and not tr:
        # real eigenvalues +1 and -1: an involution of the line
        return Verdict(False, ELLIPTIC)
    j = ineq_check(P.per)
    if j is not None:
        limit = finite_cf_value(list(P.pre) + list(P.per[:j]))
        return Verdict(False, INEQ, pariah_index=j, pariah_limit=limit)
    pair = quad_roots(quad_poly_of_matrix(E), P.ambient_d())
    for z in pair:
        lam = _eigenvalue_at(E, z)
        m1 = lam * lam - 1
        if sign_under_embedding(m1) > 0:
            return Verdict(
                True, LOXODROMIC, value=z, eigenvalue=lam, eigen_modulus_sq_minus_1=m1
            )
    raise AssertionError(f"no expanding fixed point found for {P}")


# ---------------------------------------------------------------------------
# Moebius iteration classifier


@dataclass(frozen=True)
class MobiusClassification:
    """How the orbit z, A(z), A(A(z)), ... behaves.

    Cases: 1 scalar matrix, 2 rotation started at a fixed point, 3 tangent
    (double fixed point), 4 started at the repelling fixed point, 5 rotation
    elsewhere, 6 anything else (pulled to the attracting fixed point).
    """

    case: int
    outcome: str  # "fixed" | "converges" | "diverges"
    limit: Optional[Value] = None


def _fixed_point_poly(A: Mat2) -> QuadPoly:
    return QuadPoly(A.e21, A.e22 - A.e11, -A.e12)


def classify_mobius(A: Mat2, z: Value) -> MobiusClassification:
    """Classify the orbit of ``z`` under a determinant +-1 matrix."""
    det = A.det()
    if det != 1 and det != -1:
        raise ValueError("classification needs determinant +1 or -1")
    if A.is_identity_multiple():
        return MobiusClassification(1, "fixed", z)
    poly = _fixed_point_poly(A)

    def fixed(pt: Value) -> bool:
        return poly.is_root(pt)

    tr = A.trace()
    disc = tr * tr - 4 * det
    s_disc = disc.sign_under_embedding()
    if s_disc == 0:
        # tangent: unique fixed point attracts every orbit
        beta = (A.e11 - A.e22) / (2 * A.e21) if A.e21 else INF
        return MobiusClassification(3, "converges", beta)
    if s_disc < 0 or (det == -1 and not tr):
        if fixed(z):
            return MobiusClassification(2, "fixed", z)
        return MobiusClassification(5, "diverges", None)
    if fixed(z):
        # the start already sits on a fixed point; which one decides the case
        lam = _eigenvalue_at(A, z)
        if sign_under_embedding(lam * lam - 1) > 0:
            return MobiusClassification(6, "converges", z)
        return MobiusClassification(4, "fixed", z)
    amb = None
    cands = list(A.entries())
    if isinstance(z, RingElem):
        cands.append(z)
    for e in cands:
        if e.d is not None:
            amb = e.d
            break
    pair = quad_roots(poly, amb)
    for pt in pair:
        lam = _eigenvalue_at(A, pt)
        if sign_under_embedding(lam * lam - 1) > 0:
            return MobiusClassification(6, "converges", pt)
    raise AssertionError("no attracting fixed point in the generic case")


# ---------------------------------------------------------------------------
# convergence rate


@dataclass(frozen=True)
class RateResult:
    """Growth data of the convergent sequence, as certified enclosures."""

    parabolic: bool
    eigen_abs: Optional[Interval] = None
    digits_per_period: Optional[Interval] = None
    convergents_per_digit: Optional[Interval] = None
    precision: int = 12

    def __str__(self):
        if self.parabolic:
            return "sub-exponential (tangent case)"
        return (
            f"|eigenvalue| in [{float(self.eigen_abs.lo):.6g}, {float(self.eigen_abs.hi):.6g}], "
            f"~{float(self.convergents_per_digit.mid):.6g} convergents per digit"
        )


def rate(P: Pcf, digits: int = 12) -> RateResult:
    """Decimal digits gained per period and its reciprocal flavor.

    Only meaningful for a convergent PCF; the tangent (double-root) case has
    no exponential rate and comes back flagged instead of with numbers.
    """
    v = verdict(P)
    if not v.converges:
        raise ValueError(f"{P} diverges ({v.reason}); it has no convergence rate")
    if v.reason == PARABOLIC:
        return RateResult(parabolic=True, precision=digits)
    lam = v.eigenvalue
    sgn = sign_under_embedding(lam)
    iv = value_interval(lam, digits + 8)
    if sgn < 0:
        iv = -iv
    lg = log10_interval(iv, digits + 8)
    k = P.k
    dpp = lg * Fraction(2, k)
    cpd = Fraction(k, 2) / lg
    return RateResult(
        parabolic=False,
        eigen_abs=iv,
        digits_per_period=dpp,
        convergents_per_digit=cpd,
        precision=digits,
    )
