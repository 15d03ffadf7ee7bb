"""Classification of dynamical regimes from the characteristic cubic.

Substituting an exponential ansatz into the coupled operator equations turns
the probed-coupler dynamics (κ != 0) into a real cubic for the oscillation
frequencies λ of the signal mode:

    λ³ + 2Δ λ² + (Δ² - κ² + Γ²) λ + ΔΓ² = 0.

Coefficients follow the convention a_s ∝ e^{-iλt}; equivalently the roots are
the rotating-frame generator's eigenvalues shifted by -Δ/2.  The opposite
substitution a_s ∝ e^{+iλt} yields the sign-mirrored cubic (all roots
negated), which classifies identically because the depressed discriminant is
invariant under λ -> -λ.

Three distinct real roots (negative discriminant) mean bounded oscillatory
evolution -- conversion is frozen.  A complex-conjugate pair (positive
discriminant) means exponential growth -- the probe coupling compensates the
mismatch.  The boundary sits where the discriminant vanishes; for weak gain
it is approximated by κ² = Δ² + (3/2)Γ² ± √8 Δ Γ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .params import (
    BoundaryNotFoundError,
    CouplerParams,
    DomainError,
    require_finite as _require,
)

REGIME_OSCILLATORY = "oscillatory"
REGIME_HYPERBOLIC = "hyperbolic"
REGIME_BOUNDARY = "boundary"

#: Number of scan points used to bracket discriminant sign changes.
_SCAN_POINTS = 4096
#: Bisection tolerance on κ for :func:`boundary_exact`.
_BISECT_TOL = 1e-10


@dataclass(frozen=True)
class CubicCoefficients:
    """Monic cubic λ³ + c2 λ² + c1 λ + c0 for the signal frequencies."""

    c2: float
    c1: float
    c0: float


@dataclass(frozen=True)
class RegimeReport:
    """Everything :func:`classify_regime` knows about one parameter point."""

    coefficients: CubicCoefficients
    discriminant: float
    roots: tuple[complex, complex, complex]
    regime: str
    boundary_kappas: tuple[float, float] | None


def characteristic_cubic(params: CouplerParams) -> CubicCoefficients:
    """Coefficients (c2, c1, c0) = (2Δ, Δ² - κ² + Γ², ΔΓ²) of the frequency cubic.

    Undefined at κ = 0, where the probe decouples and the cubic degenerates
    (one frequency splits off); use the unprobed closed forms there instead.
    """
    if params.kappa == 0.0:
        raise DomainError(
            "characteristic cubic requires kappa != 0; "
            "the unprobed case is classified by the sign of gamma^2 - delta^2/4"
        )
    g2 = params.gamma * params.gamma
    d = params.delta
    return CubicCoefficients(
        c2=2.0 * d,
        c1=d * d - params.kappa * params.kappa + g2,
        c0=d * g2,
    )


def _depressed(coeffs: CubicCoefficients) -> tuple[float, float]:
    """(p, q) of the depressed form μ³ + pμ + q after λ = μ - c2/3."""
    c2, c1, c0 = coeffs.c2, coeffs.c1, coeffs.c0
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2 ** 3 / 27.0 - c2 * c1 / 3.0 + c0
    return p, q


def cubic_discriminant(coeffs: CubicCoefficients) -> float:
    """Depressed-cubic discriminant D = (q/2)² + (p/3)³.

    D < 0: three distinct real roots (oscillatory).  D > 0: one real root and
    a complex-conjugate pair (hyperbolic).  D = 0: repeated roots (boundary).
    """
    p, q = _depressed(coeffs)
    return (0.5 * q) ** 2 + (p / 3.0) ** 3


def discriminant_tolerance(coeffs: CubicCoefficients) -> float:
    """Scale-aware zero test for the discriminant: 1e-12 · max(1, |p|³, q²)."""
    p, q = _depressed(coeffs)
    return 1e-12 * max(1.0, abs(p) ** 3, q * q)


def discriminant_weak_gamma(params: CouplerParams) -> float:
    """Weak-gain approximation of the discriminant, exact at Γ = 0:

        D ≈ -(κ²/27) [(κ² - Δ²)² - (5Δ² + 3κ²) Γ²],

    with O(Γ⁴) truncation error.
    """
    g2 = params.gamma * params.gamma
    k2 = params.kappa * params.kappa
    d2 = params.delta * params.delta
    return -(k2 / 27.0) * ((k2 - d2) ** 2 - (5.0 * d2 + 3.0 * k2) * g2)


def regime_boundaries(gamma: float, delta: float) -> tuple[float, float]:
    """Weak-gain boundary couplings κ1 >= κ2 with κ² = Δ² + (3/2)Γ² ± √8 |Δ| Γ.

    Between them the evolution is hyperbolic; outside, oscillatory.  Raises
    DomainError when the inner radicand of κ2 is negative (boundaries merge
    and vanish; happens once Γ grows beyond ~Δ/√2-scale gain).
    """
    gamma = _require("gamma", gamma)
    delta = _require("delta", delta, nonnegative=False)
    base = delta * delta + 1.5 * gamma * gamma
    split = math.sqrt(8.0) * abs(delta) * gamma
    inner = base - split
    if inner < 0.0:
        raise DomainError(
            f"no real lower boundary: delta^2 + 1.5*gamma^2 - sqrt(8)|delta|*gamma = {inner}"
        )
    return math.sqrt(base + split), math.sqrt(inner)


def boundary_exact(gamma: float, delta: float) -> tuple[float, float]:
    """Exact boundary couplings: zeros of the true discriminant in κ.

    Scans κ over (0, |Δ| + 4Γ + 1] with 4096 points, brackets each sign
    change, and bisects to 1e-10.  Returns the pair (κ1, κ2), κ1 >= κ2.
    Raises BoundaryNotFoundError when no sign change exists in the interval.
    """
    gamma = _require("gamma", gamma)
    delta = _require("delta", delta, nonnegative=False)
    if gamma == 0.0 or delta == 0.0:
        raise DomainError("boundary scan requires gamma > 0 and delta != 0")

    def disc(kappa: float) -> float:
        return cubic_discriminant(
            characteristic_cubic(CouplerParams(gamma, kappa, delta, 0.0))
        )

    k_max = abs(delta) + 4.0 * gamma + 1.0
    step = k_max / _SCAN_POINTS
    crossings: list[float] = []
    k_prev = step
    f_prev = disc(k_prev)
    for i in range(2, _SCAN_POINTS + 1):
        k_next = i * step
        f_next = disc(k_next)
        if f_prev == 0.0:
            crossings.append(k_prev)
        elif f_prev * f_next < 0.0:
            a, b, fa = k_prev, k_next, f_prev
            while b - a > _BISECT_TOL:
                mid = 0.5 * (a + b)
                fm = disc(mid)
                if fa * fm <= 0.0:
                    b = mid
                else:
                    a, fa = mid, fm
            crossings.append(0.5 * (a + b))
        k_prev, f_prev = k_next, f_next
    if len(crossings) < 2:
        raise BoundaryNotFoundError(
            f"expected two discriminant sign changes in (0, {k_max}], found {len(crossings)}"
        )
    return max(crossings), min(crossings)


def _cubic_roots(
    coeffs: CubicCoefficients, disc: float
) -> tuple[complex, complex, complex]:
    """Roots of the monic cubic, branch-selected by the discriminant sign.

    Non-positive discriminant uses the three-cosine (trigonometric) form,
    which is exactly the region where its arccos argument is in [-1, 1];
    positive uses a cancellation-safe Cardano.  The selection keys on the
    true sign, not on the regime-tag tolerance: a cubic with all-tiny
    coefficients can sit inside the tag tolerance while its roots are still
    a decisively complex triple, and the trigonometric form would silently
    clamp its way to garbage there.
    """
    p, q = _depressed(coeffs)
    shift = -coeffs.c2 / 3.0
    if disc <= 0.0 and p < 0.0:
        amp = 2.0 * math.sqrt(-p / 3.0)
        # arccos argument: (3q)/(2p) * sqrt(-3/p), clamped against rounding
        arg = 1.5 * q / p * math.sqrt(-3.0 / p)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        mus = [amp * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
        return tuple(complex(mu + shift, 0.0) for mu in mus)  # type: ignore[return-value]
    sq = math.sqrt(max(disc, 0.0))
    # pick the larger-magnitude cube-root argument to avoid cancellation
    w = -0.5 * q - sq if q >= 0.0 else -0.5 * q + sq
    if w == 0.0:
        # p and q both vanish: triple root at the shift point
        return (complex(shift), complex(shift), complex(shift))
    u = math.copysign(abs(w) ** (1.0 / 3.0), w)
    v = -p / (3.0 * u)
    real = u + v + shift
    re_pair = -0.5 * (u + v) + shift
    im_pair = 0.5 * math.sqrt(3.0) * (u - v)
    return (complex(real), complex(re_pair, im_pair), complex(re_pair, -im_pair))


def classify_regime(params: CouplerParams) -> RegimeReport:
    """Full regime report: coefficients, discriminant, roots, tag, boundaries.

    The tag is "oscillatory" for discriminant < -tol (frozen conversion),
    "hyperbolic" for discriminant > +tol (compensated growth), "boundary"
    within the scale-aware tolerance.  ``boundary_kappas`` holds the weak-gain
    approximate pair when it exists, None when it does not.
    """
    coeffs = characteristic_cubic(params)
    disc = cubic_discriminant(coeffs)
    tol = discriminant_tolerance(coeffs)
    if disc < -tol:
        regime = REGIME_OSCILLATORY
    elif disc > tol:
        regime = REGIME_HYPERBOLIC
    else:
        regime = REGIME_BOUNDARY
    roots = _cubic_roots(coeffs, disc)
    try:
        boundaries: tuple[float, float] | None = regime_boundaries(params.gamma, params.delta)
    except DomainError:
        boundaries = None
    return RegimeReport(
        coefficients=coeffs,
        discriminant=disc,
        roots=roots,
        regime=regime,
        boundary_kappas=boundaries,
    )
