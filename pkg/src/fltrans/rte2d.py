"""Closed-form solution of the 2-D isotropic radiative transfer problem.

A point flash of energy A0 at the origin propagates at celerity c with
extinction length ell and isotropic in-scattering.  The angular average
i(r, t) of the radiance splits into an unscattered ballistic shell
delta(r - c t)/r and a smooth multiply-scattered part supported inside
the light cone:

    i(r, t) = A0/(2 pi) * [ delta(r - c t)/r
              + exp(sqrt(c^2 t^2 - r^2)/ell) / (ell sqrt(c^2 t^2 - r^2))
                * Theta(c t - r) ] * exp(-c t / ell).

In the Fourier-Laplace domain the same solution is the resolvent of the
free propagator gbar(k, s) = 1/sqrt(s^2 + c^2 k^2):

    ihat(k, s) = A0 gbar(k, s + c/ell) / (1 - (c/ell) gbar(k, s + c/ell)),

and the two forms are connected by the proper-time transform pair (row
2.1 of the registry at d = 2) applied to f with image s/(s - c/ell).
The mixed-domain harness verifies that chain numerically.

The paper-facing convention sets c = 1 in gbar; here the celerity is
restored explicitly so TransportParams carries honest physical units.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .laplace import TimeOriginal, inverse_laplace, sqrt_s2k2
from .numerics import DomainError, QuadratureSpec, integrate_adaptive
from .radial_fourier import QuadratureError, kernel_ghat
from .verify import VerificationReport, _rel_error, _settings


class PoleError(ValueError):
    """The resolvent denominator vanishes at the requested (k, s)."""


@dataclass(frozen=True)
class TransportParams:
    """Wave celerity c, extinction length ell, initial energy A0."""

    c: float = 1.0
    ell: float = 1.0
    A0: float = 1.0

    def __post_init__(self) -> None:
        if not (self.c > 0.0 and self.ell > 0.0 and self.A0 > 0.0):
            raise DomainError("transport parameters must be positive")


@dataclass(frozen=True)
class IntensityValue:
    """Pointwise intensity split into smooth part and ballistic atom weight.

    The atom lives at r = c t; smooth is zero outside the light cone.
    """

    smooth: float
    ballistic_weight: float


def intensity(p: TransportParams, r: float, t: float) -> IntensityValue:
    """Closed-form i(r, t) away from the shell r = c t."""
    if not t > 0.0:
        raise DomainError("time must be positive")
    if r < 0.0:
        raise DomainError("radius must be nonnegative")
    ct = p.c * t
    if abs(r - ct) <= 1e-9 * max(1.0, ct):
        raise DomainError(
            f"r = c t = {ct:.6g} is the atom location; the pointwise smooth "
            "value is undefined there")
    damping = math.exp(-ct / p.ell)
    weight = p.A0 / (2.0 * math.pi) * damping
    if r > ct:
        return IntensityValue(0.0, weight)
    q = math.sqrt(ct * ct - r * r)
    smooth = (p.A0 / (2.0 * math.pi) * math.exp(q / p.ell)
              / (p.ell * q) * damping)
    return IntensityValue(smooth, weight)


def fl_greens_avg(p: TransportParams, k: float, s: complex) -> complex:
    """Directionally averaged free propagator 1/sqrt(s^2 + c^2 k^2)."""
    if k < 0.0:
        raise DomainError("wavenumber must be nonnegative")
    s = complex(s)
    value = sqrt_s2k2(s, p.c * k)
    if value == 0.0:
        raise PoleError(f"propagator singular at (k, s) = ({k}, {s})")
    return 1.0 / value


def fl_intensity(p: TransportParams, k: float, s: complex) -> complex:
    """Fourier-Laplace intensity A0 g / (1 - (c/ell) g), g shifted by c/ell."""
    g = fl_greens_avg(p, k, s + p.c / p.ell)
    denom = 1.0 - (p.c / p.ell) * g
    if abs(denom) < 1e-14:
        raise PoleError(
            f"resolvent pole encountered at (k, s) = ({k}, {s})")
    return p.A0 * g / denom


def resolvent_original() -> TimeOriginal:
    """Original of s/(s - c/ell) in units c = ell = 1: delta(t) + e^t.

    The unit atom at t = 0 plus the growing exponential c/ell * e^{c t/ell}
    (returned in scaled units; multiply rates back in for other
    parameters).
    """
    return TimeOriginal(
        eval=lambda t: math.exp(t),
        sigma0=1.0,
        atom_location=0.0,
        atom_weight=1.0,
    )


def resolvent_original_scaled(p: TransportParams) -> TimeOriginal:
    """Original of s/(s - c/ell) for explicit transport parameters."""
    rate = p.c / p.ell
    return TimeOriginal(
        eval=lambda t: rate * math.exp(rate * t),
        sigma0=rate,
        atom_location=0.0,
        atom_weight=1.0,
    )


def check_energy(p: TransportParams, t: float, spec: QuadratureSpec) -> float:
    """Plane integral of i(., t): smooth part by quadrature + atom mass.

    Conservation demands the result equal A0 exactly for every t.
    """
    if not t > 0.0:
        raise DomainError("time must be positive")
    ct = p.c * t
    damping = math.exp(-ct / p.ell)

    # r = c t sin(theta) regularizes the light-cone edge
    def integrand(theta: float) -> float:
        r = ct * math.sin(theta)
        q = ct * math.cos(theta)
        smooth = (p.A0 / (2.0 * math.pi) * math.exp(q / p.ell)
                  / (p.ell * q) * damping)
        return 2.0 * math.pi * r * smooth * ct * math.cos(theta)

    res = integrate_adaptive(integrand, 0.0, 0.5 * math.pi, spec)
    if not res.converged:
        raise QuadratureError(f"energy quadrature did not converge at t={t}")
    atom_energy = p.A0 * damping
    return float(res.value) + atom_energy


def fl_radiance(p: TransportParams, k: float, s: complex, mu: float) -> complex:
    """Directional radiance in the FL domain for cos(angle(k, u)) = mu.

    Algebraic consequence of the transport resolvent: the directional free
    propagator 1/(s + c/ell + i c k mu) applied to the initial condition
    A0/(2 pi) plus the in-scattering source (c/ell) ihat(k, s).  Space-time
    reconstruction of this quantity is out of scope.
    """
    if not -1.0 <= mu <= 1.0:
        raise DomainError("mu must lie in [-1, 1]")
    shifted = s + p.c / p.ell + 1j * p.c * k * mu
    if shifted == 0.0:
        raise PoleError("directional propagator singular")
    source = (p.A0 + (p.c / p.ell) * fl_intensity(p, k, s)) / (2.0 * math.pi)
    return source / shifted


def verify_rte_mixed(p: TransportParams, samples: Sequence[tuple],
                     spec: Optional[QuadratureSpec] = None, nodes: int = 48,
                     tolerance: float = 1e-5) -> VerificationReport:
    """Mixed-domain check of the closed form against the FL resolvent.

    LHS'(k, t): analytic transform of the ballistic atom,
    A0 J0(k c t) exp(-c t/ell), plus the numeric d = 2 radial transform of
    the smooth part; RHS'(k, t): Talbot inversion of fl_intensity.
    """
    if spec is None:
        spec = QuadratureSpec()
    start = time.perf_counter()
    points, lhs, rhs, aerr, rerr, failures = [], [], [], [], [], []
    for k, t in samples:
        try:
            ct = p.c * t
            damping = math.exp(-ct / p.ell)
            atom_part = p.A0 * kernel_ghat(2, k, ct) * damping

            def integrand(theta: float) -> float:
                r = ct * math.sin(theta)
                q = ct * math.cos(theta)
                smooth = (p.A0 / (2.0 * math.pi) * math.exp(q / p.ell)
                          / (p.ell * q) * damping)
                return (2.0 * math.pi * r * smooth * kernel_ghat(2, k, r)
                        * ct * math.cos(theta))

            res = integrate_adaptive(integrand, 0.0, 0.5 * math.pi, spec)
            if not res.converged:
                raise QuadratureError(
                    f"smooth-part transform did not converge at (k,t)=({k},{t})")
            lv = atom_part + float(res.value)
            rv = inverse_laplace(lambda s: fl_intensity(p, k, s), t, nodes,
                                 branch_height=p.c * k)
        except (DomainError, QuadratureError, PoleError) as exc:
            failures.append(((k, t), str(exc)))
            continue
        points.append((k, t))
        lhs.append(lv)
        rhs.append(rv)
        aerr.append(abs(lv - rv))
        rerr.append(_rel_error(lv, rv))
    passed = not failures and bool(rerr) and max(rerr) <= tolerance
    return VerificationReport(
        pair_id="rte2d", dimension=2, test_original="transport-resolvent",
        sample_points=tuple(points), lhs_values=tuple(lhs),
        rhs_values=tuple(rhs), abs_errors=tuple(aerr), rel_errors=tuple(rerr),
        tolerance=tolerance, passed=passed,
        wall_time=time.perf_counter() - start,
        engine_settings=_settings(spec, nodes),
        failures=tuple(failures))
