"""Symmetric strictly convex 1-D potentials and their validation.

Every potential knows its value and first two derivatives analytically.
Supported families: monomial lam*x^(2k), quartic anharmonic
(omega^2/2)x^2 + lam*x^4, general even polynomials, and shifted copies
of any of these (minimum moved to x = xi).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import AlreadyShifted, DegeneratePotential, NotConvex, NotSymmetric

SYMMETRY_RTOL = 1e-12
SCAN_POINTS = 1001


class Potential:
    """Base class; subclasses implement evaluate() and are immutable."""

    xi = 0.0

    def evaluate(self, x):
        """Return (U, U', U'') at x (scalar or ndarray)."""
        raise NotImplementedError

    def __call__(self, x):
        return self.evaluate(x)[0]


@dataclass(frozen=True)
class Monomial(Potential):
    """U(x) = lam * x^(2*kappa), kappa >= 1 integer."""

    kappa: int
    lam: float

    def __post_init__(self):
        if int(self.kappa) != self.kappa or self.kappa < 1:
            raise ValueError("kappa must be an integer >= 1")
        object.__setattr__(self, "kappa", int(self.kappa))
        object.__setattr__(self, "lam", float(self.lam))

    def evaluate(self, x):
        k, lam = self.kappa, self.lam
        x = np.asarray(x, dtype=float)
        u = lam * x ** (2 * k)
        du = 2 * k * lam * x ** (2 * k - 1)
        d2u = 2 * k * (2 * k - 1) * lam * x ** (2 * k - 2) if k > 1 \
            else np.full_like(x, 2 * lam)
        return u[()], du[()], d2u[()]


@dataclass(frozen=True)
class QuarticAnharmonic(Potential):
    """U(x) = (omega^2/2) x^2 + lam x^4."""

    omega: float
    lam: float

    def __post_init__(self):
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "lam", float(self.lam))

    def evaluate(self, x):
        w2, lam = self.omega ** 2, self.lam
        x = np.asarray(x, dtype=float)
        u = 0.5 * w2 * x ** 2 + lam * x ** 4
        du = w2 * x + 4 * lam * x ** 3
        d2u = w2 + 12 * lam * x ** 2
        return u[()], du[()], d2u[()]


@dataclass(frozen=True)
class EvenPolynomial(Potential):
    """U(x) = c2 x^2 + c4 x^4 + ... ; coeffs = (c2, c4, ...)."""

    coeffs: Tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        while c and c[-1] == 0.0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        y = x * x
        u = np.zeros_like(x)
        du = np.zeros_like(x)
        d2u = np.zeros_like(x)
        for j, c in enumerate(reversed(self.coeffs)):
            p = 2 * (len(self.coeffs) - j)          # power of this term
            u = u * y + c
            du = du * y + p * c
            d2u = d2u * y + p * (p - 1) * c
        u = u * y
        du = du * x
        return u[()], du[()], d2u[()]


@dataclass(frozen=True)
class Shifted(Potential):
    """U(x) = inner(x - xi); minimum moved from 0 to xi."""

    inner: Potential
    xi: float

    def __post_init__(self):
        object.__setattr__(self, "xi", float(self.xi))

    def evaluate(self, x):
        return self.inner.evaluate(np.asarray(x, dtype=float) - self.xi)


def evaluate(spec: Potential, x):
    """Value and first two derivatives of the potential at x."""
    return spec.evaluate(x)


def _scan_radius(spec: Potential) -> float:
    """Radius R with |U(xi+R)| >= 1e6*|U(xi)| + 1, capped for pathological input."""
    u0 = abs(float(spec.evaluate(spec.xi)[0]))
    target = 1e6 * u0 + 1.0
    r = 1.0
    for _ in range(60):
        if abs(float(spec.evaluate(spec.xi + r)[0])) >= target:
            return r
        r *= 2.0
    return r


def _scan_offsets(radius: float) -> np.ndarray:
    """Geometric grid of SCAN_POINTS offsets in [0, R], including 0."""
    pos = radius * np.logspace(-12.0, 0.0, SCAN_POINTS - 1)
    return np.concatenate(([0.0], pos))


def validate(spec: Potential) -> Potential:
    """Check symmetry about xi, convexity, and a unique non-trivial minimum.

    Returns the spec unchanged on success.  Raises NotSymmetric, NotConvex,
    or DegeneratePotential.  Convexity is a sampled scan: isolated zeros of
    U'' are fine, negative curvature anywhere on the grid is not.
    """
    xi = spec.xi
    r = _scan_radius(spec)
    d = _scan_offsets(r)

    u_plus = np.asarray(spec.evaluate(xi + d)[0], dtype=float)
    u_minus = np.asarray(spec.evaluate(xi - d)[0], dtype=float)
    scale = np.maximum(np.maximum(np.abs(u_plus), np.abs(u_minus)), 1.0)
    if np.max(np.abs(u_plus - u_minus) / scale) > SYMMETRY_RTOL:
        raise NotSymmetric(f"U(xi+d) != U(xi-d) beyond {SYMMETRY_RTOL:g} relative")

    x = np.concatenate((xi - d[:0:-1], xi + d))
    _, du, d2u = spec.evaluate(x)
    d2u = np.asarray(d2u, dtype=float)
    if not np.all(np.isfinite(d2u)):
        raise NotConvex("U'' not finite on the scan grid")
    d2_scale = float(np.max(np.abs(d2u)))
    if d2_scale == 0.0:
        raise DegeneratePotential("all potential coefficients are zero")
    if np.min(d2u) < -1e-12 * max(1.0, d2_scale):
        raise NotConvex("U'' < 0 on part of the scan grid")

    du0 = float(spec.evaluate(xi)[1])
    du_scale = max(1.0, float(np.max(np.abs(np.asarray(du)))))
    if abs(du0) > 1e-10 * du_scale:
        raise NotConvex(f"U'(xi) = {du0:g}, expected a stationary minimum at xi")
    return spec


def translate(spec: Potential, xi: float) -> Potential:
    """Shift the minimum of a validated, unshifted spec to x = xi."""
    if isinstance(spec, Shifted):
        raise AlreadyShifted("spec already carries a shift")
    if xi == 0.0:
        return spec
    return Shifted(inner=spec, xi=xi)


def unshifted(spec: Potential) -> Potential:
    """The centered potential underlying a (possibly shifted) spec."""
    return spec.inner if isinstance(spec, Shifted) else spec


def parse_potential(text: str) -> Potential:
    """Build a potential from key=value configuration text.

    Recognized keys: kind (monomial | quartic_anharmonic | even_polynomial),
    kappa, lambda, omega, coeffs (comma-separated), xi.  Lines starting
    with '#' are ignored.
    """
    entries = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        entries[key.strip().lower()] = value.strip()
    return potential_from_mapping(entries)


def potential_from_mapping(entries) -> Potential:
    """Same as parse_potential but from an existing mapping of strings."""
    kind = entries.get("kind", "monomial").lower().replace("-", "_")
    if kind == "monomial":
        spec = Monomial(kappa=int(entries.get("kappa", 1)),
                        lam=float(entries.get("lambda", 1.0)))
    elif kind == "quartic_anharmonic":
        spec = QuarticAnharmonic(omega=float(entries.get("omega", 1.0)),
                                 lam=float(entries.get("lambda", 0.0)))
    elif kind == "even_polynomial":
        raw = entries.get("coeffs", "")
        coeffs = tuple(float(v) for v in raw.split(",") if v.strip())
        if not coeffs:
            raise ValueError("even_polynomial requires coeffs=c2,c4,...")
        spec = EvenPolynomial(coeffs=coeffs)
    else:
        raise ValueError(f"unknown potential kind {kind!r}")
    xi = float(entries.get("xi", 0.0))
    if xi != 0.0:
        spec = Shifted(inner=spec, xi=xi)
    return spec


def describe(spec: Potential) -> dict:
    """Plain-dict description used in report metadata."""
    base = unshifted(spec)
    out = {"xi": spec.xi}
    if isinstance(base, Monomial):
        out.update(kind="monomial", kappa=base.kappa, coupling=base.lam)
    elif isinstance(base, QuarticAnharmonic):
        out.update(kind="quartic_anharmonic", omega=base.omega, coupling=base.lam)
    elif isinstance(base, EvenPolynomial):
        out.update(kind="even_polynomial", coeffs=list(base.coeffs))
    else:
        out.update(kind=type(base).__name__.lower())
    return out
