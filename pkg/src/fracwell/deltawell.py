"""Spectral problem of a delta well in fractional-dimensional space.

The Hamiltonian combines a Riesz-type kinetic term D_alpha |p|^alpha
(1 < alpha <= 2) with an attractive point interaction -gamma
delta^lam(x) acting against the lam-dimensional measure of
fracwell.measure.  The well supports a single bound state E < 0
whenever 0 < lam < alpha; with lam <= 1 and alpha > 1 that window is
automatic, but it is asserted anyway because out-of-range lam inputs
must fail loudly before any quadrature runs.

Two independent energy routes are provided.  energy_closed_form
evaluates the analytic eigenvalue obtained by pushing the bound-state
condition through the gamma-function integral identity; energy_oracle
solves the same condition numerically (split quadrature plus
bisection) and shares no code with the closed form beyond the gamma
kernel.  The acceptance suite treats the oracle as the arbiter.

Note on the closed form: source texts for this eigenvalue print the
exponent (alpha-lam)/alpha and a pi^lam power, which contradicts the
classical alpha=2, lam=1 limit -m gamma^2/(2 hbar^2) with m = 1/(2 D).
Rederiving the condition gives exponent alpha/(alpha-lam) and
pi^(lam/2); that form passes both the classical limit and the oracle,
so it is the one implemented.  The discrepancy is documented here
rather than silently absorbed.

Wavefunctions come in three flavours: the momentum profile is an
explicit rational expression, the position profile is either the
direct cosine transform of that profile (position_wavefunction_
quadrature, the trustworthy route) or the reduced H-function form
C * (pi hbar / alpha) * H^{1,0}_{0,1}[kappa |x| | (0,1)], i.e. a pure
exponential exp(-kappa |x|) in disguise (position_wavefunction_hfox).
The reduction chain behind the exponential form cancels parameter
pairs at positions that are only valid classically, and it also drops
a factor of kappa relative to the direct transform, so the hfox route
carries a per-configuration `verified` flag: profiles from both routes
are normalised at the first point of a 16-point grid and the flag is
set only if they agree to 1e-4.  At alpha=2, lam=1 the flag comes out
true; elsewhere whatever the comparison measures is reported, never
asserted.

Stationary states carry a free phase and the source derivation never
fixes the overall constant, so the convention here is phi(0) > 0 with
magnitude set by normalize() against the lam-measure.  Energies and
lengths are dimensionless program units.
"""

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .gammafn import gamma_real
from .hfox import HFoxParams, eval_auto
from .measure import MeasureDim, integrate as measure_integrate
from .quadrature import (QuadSpec, QuadFailure, integrate_adaptive,
                         integrate_oscillatory, root_bisect)


class DomainError(Exception):
    """Physical parameters outside the admissible window."""


class BracketFailure(Exception):
    """Doubling/halving search could not bracket the energy root."""


@dataclass(frozen=True)
class PotentialConfig:
    """Well parameters: kinetic exponent alpha, coefficient d_alpha,
    well depth gamma_strength, hbar, and measure dimension lam."""

    alpha: float
    d_alpha: float = 1.0
    gamma_strength: float = 1.0
    hbar: float = 1.0
    lam: float = 1.0

    def __post_init__(self):
        a = float(self.alpha)
        lam = float(self.lam)
        if not 1.0 < a <= 2.0:
            raise DomainError(f"alpha must satisfy 1 < alpha <= 2, got {a}")
        for name in ("d_alpha", "gamma_strength", "hbar"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")
        # existence window of the bound-state integral; redundant for
        # lam <= 1 < alpha but out-of-range lam must still die here,
        # before any quadrature is attempted
        if lam >= a:
            raise DomainError(
                f"bound state exists only in the window 0 < lam < alpha; "
                f"got lam={lam}, alpha={a}")
        if not 0.0 < lam <= 1.0:
            raise DomainError(f"lam must lie in (0, 1], got {lam}")

    @property
    def dim(self):
        return MeasureDim(self.lam)

    @property
    def measure_norm(self):
        """Surface factor 2 pi^(lam/2) / Gamma(lam/2) of the measure."""
        return 2.0 * math.pi ** (0.5 * self.lam) / gamma_real(0.5 * self.lam)


@dataclass(frozen=True)
class BoundState:
    """Single bound level: energy E < 0, position decay scale kappa
    with kappa^alpha * d_alpha * hbar^alpha = |E|, and the free
    normalization amplitude (> 0, fixed by normalize())."""

    energy: float
    kappa: float
    amplitude: float = 1.0
    provenance: str = "closed_form"

    def __post_init__(self):
        if not self.energy < 0:
            raise DomainError(f"bound energy must be negative, got {self.energy}")
        if not (self.kappa > 0 and self.amplitude > 0):
            raise DomainError("kappa and amplitude must be positive")
        if self.provenance not in ("closed_form", "oracle"):
            raise DomainError(f"unknown provenance {self.provenance!r}")


def _kappa(cfg, abs_e):
    return (abs_e / (cfg.d_alpha * cfg.hbar ** cfg.alpha)) ** (1.0 / cfg.alpha)


def energy_closed_form(cfg):
    """Analytic bound-state energy.

    E = -[ gamma G(lam/alpha) G(1-lam/alpha) 2^(1-lam)
           / (pi^(lam/2) hbar^lam G(lam/2) alpha D^(lam/alpha)) ]^(alpha/(alpha-lam))

    (see the module docstring for why the exponent and pi power differ
    from some printed forms of this result).
    """
    a, lam = cfg.alpha, cfg.lam
    bracket = (cfg.gamma_strength
               * gamma_real(lam / a) * gamma_real(1.0 - lam / a)
               * 2.0 ** (1.0 - lam)
               / (math.pi ** (0.5 * lam) * cfg.hbar ** lam
                  * gamma_real(0.5 * lam) * a
                  * cfg.d_alpha ** (lam / a)))
    abs_e = bracket ** (a / (a - lam))
    return BoundState(energy=-abs_e, kappa=_kappa(cfg, abs_e),
                      provenance="closed_form")


def _radial_integral(cfg, abs_e, spec):
    """int_0^inf p^(lam-1) / (D p^alpha + |E|) dp, split at the knee.

    Below p0 = (|E|/D)^(1/alpha) the substitution u = p^lam absorbs the
    endpoint power; above it v = p^(lam-alpha) turns the algebraic tail
    into a bounded integral on [0, p0^(lam-alpha)].  Both pieces are
    O(1)-scaled for any |E|, which keeps the bracket search stable over
    many decades.
    """
    a, lam, d = cfg.alpha, cfg.lam, cfg.d_alpha
    p0 = (abs_e / d) ** (1.0 / a)

    def head(u):
        return 1.0 / (d * np.power(u, a / lam) + abs_e)

    def tail(v):
        return 1.0 / (d + abs_e * np.power(v, a / (a - lam)))

    i1, e1 = integrate_adaptive(head, 0.0, p0 ** lam, spec)
    i2, e2 = integrate_adaptive(tail, 0.0, p0 ** (lam - a), spec)
    return i1 / lam + i2 / (a - lam), e1 / lam + e2 / (a - lam)


def energy_oracle(cfg, spec=QuadSpec()):
    """Bound-state energy with no closed-form input.

    The defining condition is
    (2 pi^(lam/2)/Gamma(lam/2)) int_0^inf p^(lam-1)/(D p^alpha + |E|) dp
    = (2 pi hbar)^lam / gamma; the left side is strictly decreasing in
    |E|, so g(|E|) = lhs - rhs has one root, bracketed by doubling or
    halving from |E| = 1 and then bisected.
    """
    nm = cfg.measure_norm
    rhs = (2.0 * math.pi * cfg.hbar) ** cfg.lam / cfg.gamma_strength

    def g(abs_e):
        val, _ = _radial_integral(cfg, abs_e, spec)
        return nm * val - rhs

    lo = hi = 1.0
    glo = ghi = g(1.0)
    for _ in range(200):
        if glo > 0 and ghi <= 0:
            break
        if ghi > 0:          # integral still too large: root lies higher
            lo, glo = hi, ghi
            hi *= 2.0
            ghi = g(hi)
        else:                # root lies below
            hi, ghi = lo, glo
            lo *= 0.5
            glo = g(lo)
    else:
        raise BracketFailure(
            f"no sign change in [{lo:.3e}, {hi:.3e}] after 200 expansions")
    abs_e = root_bisect(g, lo, hi, tol=1e-12 * hi)
    return BoundState(energy=-abs_e, kappa=_kappa(cfg, abs_e),
                      provenance="oracle")


def momentum_wavefunction(state, cfg, p):
    """Momentum profile amplitude*(gamma/(2 pi hbar)^lam)/(D|p|^alpha+|E|).

    Positive, even, strictly decreasing in |p|.  Accepts scalars or
    arrays.
    """
    abs_e = -state.energy
    pref = (state.amplitude * cfg.gamma_strength
            / (2.0 * math.pi * cfg.hbar) ** cfg.lam)
    p = np.asarray(p, dtype=float)
    out = pref / (cfg.d_alpha * np.abs(p) ** cfg.alpha + abs_e)
    return float(out) if out.ndim == 0 else out


def _position_prefactor(state, cfg):
    # gamma/(2 pi hbar)^(2 lam) times the measure surface factor; the
    # 2 lam power follows the transform convention whose constant is
    # absorbed into the amplitude anyway
    return (state.amplitude * cfg.gamma_strength
            / (2.0 * math.pi * cfg.hbar) ** (2.0 * cfg.lam)
            * cfg.measure_norm)


def cosine_profile_integral(state, cfg, x, spec=QuadSpec()):
    """int_0^inf cos(p|x|/hbar) p^(lam-1) / (D p^alpha + |E|) dp.

    At x = 0 this reduces to the radial integral of the energy
    condition, whose value at the bound energy must equal
    (2 pi hbar)^lam Gamma(lam/2) / (gamma 2 pi^(lam/2)); the identity
    is measured, not substituted.
    """
    abs_e = -state.energy
    if x == 0.0:
        return _radial_integral(cfg, abs_e, spec)
    lam, a, d = cfg.lam, cfg.alpha, cfg.d_alpha

    def envelope(p):
        return np.power(p, lam - 1.0) / (d * np.power(p, a) + abs_e)

    return integrate_oscillatory(envelope, abs(x) / cfg.hbar, spec,
                                 singularity_power=lam - 1.0)


def position_wavefunction_quadrature(state, cfg, x, spec=QuadSpec()):
    """Position profile by direct cosine transform of the momentum one.

    Real, even, positive at 0.  This is the reference route: it makes
    no use of the H-function reduction chain.
    """
    val, _ = cosine_profile_integral(state, cfg, x, spec)
    return _position_prefactor(state, cfg) * val


_REDUCED_EXP = HFoxParams(m=1, n=0, upper=(), lower=((0.0, 1.0),))


def _hfox_profile(state, cfg, x):
    """C * (pi hbar / alpha) * H^{1,0}_{0,1}[kappa|x| | (0,1)], the
    closed reduction of the cosine transform."""
    a, lam = cfg.alpha, cfg.lam
    abs_e = -state.energy
    c_pref = (_position_prefactor(state, cfg)
              * cfg.d_alpha ** (-(lam - 1.0) / a)
              * abs_e ** (-(a + 1.0 - lam) / a))
    w = state.kappa * abs(x)
    if w == 0.0:
        h = 1.0   # series limit: only the k = 0 term survives
    else:
        h = eval_auto(_REDUCED_EXP, w).value
    return c_pref * (math.pi * cfg.hbar / a) * h


@dataclass(frozen=True)
class ShapeCheck:
    """Profile comparison of the two position routes on a fixed grid.

    Profiles are normalised at the first grid point before comparing,
    because the closed reduction drops a kappa factor relative to the
    direct transform (visible even at alpha=2, lam=1) and the overall
    constant is a free normalization anyway.  ratio_mean records the
    raw hfox/quadrature ratio averaged over the grid.
    """

    passed: bool
    max_rel_dev: float
    ratio_mean: float
    xs: tuple


def hfox_shape_check(state, cfg, spec=QuadSpec(), tol=1e-4):
    """Compare the H-function position route against the quadrature
    route on 16 points spanning [0.25, 4] decay lengths."""
    xs = np.linspace(0.25, 4.0, 16) / state.kappa
    hq = np.array([position_wavefunction_quadrature(state, cfg, t, spec)
                   for t in xs])
    hh = np.array([_hfox_profile(state, cfg, t) for t in xs])
    rq = hq / hq[0]
    rh = hh / hh[0]
    dev = float(np.max(np.abs(rh - rq) / np.abs(rq)))
    return ShapeCheck(passed=dev <= tol, max_rel_dev=dev,
                      ratio_mean=float(np.mean(hh / hq)),
                      xs=tuple(float(t) for t in xs))


@lru_cache(maxsize=64)
def _cached_shape(state, cfg, spec):
    return hfox_shape_check(state, cfg, spec)


def position_wavefunction_hfox(state, cfg, x, spec=QuadSpec()):
    """Position profile via the reduced H-function form.

    Returns (value, verified).  The flag is per-configuration: true
    only if the profile shape matches the quadrature route to 1e-4 on
    a 16-point grid (see hfox_shape_check).  The check is cached, so
    repeated point evaluations of one configuration pay for it once.
    """
    key = replace(state, amplitude=1.0)   # shape does not see the amplitude
    check = _cached_shape(key, cfg, spec)
    return _hfox_profile(state, cfg, x), check.passed


@dataclass(frozen=True)
class ComparisonReport:
    """Quadrature-vs-H-form diagnostic for one configuration.

    x0_rel_err measures the bound-energy identity at x = 0 (the
    radial integral against its closed value).  The tail block fits
    log phi_quadrature against x (exponential hypothesis, rate should
    be kappa if the reduced form held) and against log x (power
    hypothesis); residuals are max absolute log-space misfits.  Nothing
    here asserts which hypothesis wins; the numbers are the report.
    """

    alpha: float
    lam: float
    energy: float
    kappa: float
    x0_value: float
    x0_expected: float
    x0_rel_err: float
    shape: ShapeCheck
    tail_exp_rate: float
    tail_exp_residual: float
    tail_pow_exponent: float
    tail_pow_residual: float


def hfox_comparison_report(cfg, spec=QuadSpec()):
    """Produce the full comparison record for one configuration."""
    state = energy_closed_form(cfg)
    abs_e = -state.energy
    x0_val, _ = _radial_integral(cfg, abs_e, spec)
    x0_exp = ((2.0 * math.pi * cfg.hbar) ** cfg.lam
              * gamma_real(0.5 * cfg.lam)
              / (cfg.gamma_strength * 2.0 * math.pi ** (0.5 * cfg.lam)))
    shape = hfox_shape_check(state, cfg, spec)

    xs = np.linspace(4.0, 12.0, 8) / state.kappa
    phi = np.array([position_wavefunction_quadrature(state, cfg, t, spec)
                    for t in xs])
    diag = {}
    if np.all(phi > 0):
        ly = np.log(phi)
        for name, t in (("exp", xs), ("pow", np.log(xs))):
            des = np.stack([t, np.ones_like(t)], axis=1)
            coef, *_ = np.linalg.lstsq(des, ly, rcond=None)
            diag[name] = (-coef[0], float(np.max(np.abs(des @ coef - ly))))
    else:
        # sign changes in the tail: neither single-sign fit applies
        diag["exp"] = diag["pow"] = (math.nan, math.inf)

    return ComparisonReport(
        alpha=cfg.alpha, lam=cfg.lam, energy=state.energy, kappa=state.kappa,
        x0_value=x0_val, x0_expected=x0_exp,
        x0_rel_err=abs(x0_val - x0_exp) / abs(x0_exp),
        shape=shape,
        tail_exp_rate=float(diag["exp"][0]),
        tail_exp_residual=float(diag["exp"][1]),
        tail_pow_exponent=float(diag["pow"][0]),
        tail_pow_residual=float(diag["pow"][1]),
    )


def normalize(state, cfg, spec=QuadSpec()):
    """Fix the amplitude so that int |phi(x)|^2 d^lam x = 1.

    The norm is computed on the quadrature route from a unit-amplitude
    copy, so the operation is idempotent by construction.  phi is even,
    hence twice the half-line integral.
    """
    base = replace(state, amplitude=1.0)

    def f(xs):
        xs = np.asarray(xs, dtype=float)
        flat = xs.reshape(-1)
        out = np.array([position_wavefunction_quadrature(base, cfg, t, spec) ** 2
                        for t in flat])
        return out.reshape(xs.shape)

    half, err = measure_integrate(cfg.dim, f, (0.0, np.inf), spec)
    nrm2 = 2.0 * half
    if not (nrm2 > 0 and np.isfinite(nrm2)):
        raise QuadFailure(f"norm integral came out {nrm2}")
    return replace(state, amplitude=1.0 / math.sqrt(nrm2))
