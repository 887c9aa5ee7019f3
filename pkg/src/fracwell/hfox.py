"""Fox H-function engine: residue series, Mellin-Barnes contour, Mellin
transform, and the parameter algebra (argument rescaling, pair
cancellation, cosine transform).

Conventions
-----------
The engine evaluates

    H^{m,n}_{p,q}[w] = (1/2 pi i) integral_L h(s) w^{-s} ds,

    h(s) = prod_{j<=m} Gamma(b_j + B_j s) * prod_{j<=n} Gamma(1 - a_j - A_j s)
         / ( prod_{j>m} Gamma(1 - b_j - B_j s) * prod_{j>n} Gamma(a_j + A_j s) ),

with w = arg_scale * z.  Source texts for this function family disagree
on the sign of the A_j s / B_j s terms and on the kernel power (z^s vs
z^{-s}); the convention above is the one fixed by the anchor values
H^{1,0}_{0,1}[z|(0,1)] = exp(-z), H^{1,1}_{1,1}[z|(0,1);(0,1)] =
1/(1+z), and the Mellin transform value Gamma(1/2)^2 = pi of the
rational family at s = 1/2, all of which are enforced by the test
suite against the quadrature oracle.

Pole families: Gamma(b_j + B_j s), j <= m, contributes the left set
s = -(b_j + k)/B_j; Gamma(1 - a_j - A_j s), j <= n, the right set
s = (1 - a_j + k)/A_j.  The residue series over the left set gives the
ascending expansion; when it converges only inside |w| < radius, the
engine continues it through the inversion identity

    H^{m,n}_{p,q}[w | (a,A); (b,B)] = H^{n,m}_{q,p}[1/w | (1-b,B); (1-a,A)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .gammafn import gammaln_sign, loggamma
from .quadrature import QuadFailure, QuadSpec, integrate_adaptive, integrate_oscillatory

__all__ = [
    "COINCIDENCE_TOL",
    "HFoxParams",
    "ConvergenceProfile",
    "EvalOutcome",
    "ValidationReport",
    "CosineTransform",
    "MellinCheck",
    "CosineTransformCheck",
    "NonSimplePoles",
    "SeriesDiverged",
    "OutOfRegion",
    "NoSeparatingContour",
    "OutOfStrip",
    "NoMatchingPair",
    "StripViolation",
    "validate",
    "convergence_profile",
    "eval_series",
    "eval_contour",
    "eval_auto",
    "mellin",
    "mellin_numeric_check",
    "rescale_power",
    "cancel_pairs",
    "reduce_fully",
    "cosine_transform",
    "cosine_transform_check",
]

COINCIDENCE_TOL = 1e-12


class NonSimplePoles(Exception):
    """Two series poles coincide; the plain residue formula is invalid."""


class SeriesDiverged(Exception):
    """Residue terms failed to decay within the term budget."""


class OutOfRegion(Exception):
    """The argument sits where neither residue series converges."""


class NoSeparatingContour(Exception):
    """Left and right pole families interleave; no vertical line splits them."""


class OutOfStrip(Exception):
    """Mellin variable outside the fundamental strip."""


class NoMatchingPair(Exception):
    """No upper/lower parameter pair is positioned for cancellation."""


class StripViolation(Exception):
    """Cosine-transform existence conditions fail for these parameters."""


@dataclass(frozen=True)
class HFoxParams:
    """Parameter block of H^{m,n}_{p,q}[arg_scale * z].

    upper holds the (a_j, A_j) pairs (length p), lower the (b_j, B_j)
    pairs (length q); m and n are the leading-gamma counts.  The first
    m lower and first n upper pairs are numerator gammas; order inside
    each of the four groups is immaterial, order across groups is not.
    """

    m: int
    n: int
    upper: tuple
    lower: tuple
    arg_scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple((float(a), float(A)) for a, A in self.upper))
        object.__setattr__(self, "lower", tuple((float(b), float(B)) for b, B in self.lower))

    @property
    def p(self):
        return len(self.upper)

    @property
    def q(self):
        return len(self.lower)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple


@dataclass(frozen=True)
class ConvergenceProfile:
    """delta: contour decay exponent; mu: series growth exponent;
    series_radius: where the left residue series converges (inf when
    mu > 0, the finite radius when mu == 0, 0.0 when mu < 0)."""

    delta: float
    mu: float
    series_radius: float


@dataclass(frozen=True)
class EvalOutcome:
    value: float
    err_est: float
    method: str
    terms: int = 0


@dataclass(frozen=True)
class CosineTransform:
    """Right-hand side of the cosine-transform identity: the value is
    multiplier * H[argument | params].  verified stays False until a
    numeric check has passed for this instance; the printed identity in
    the source material is not trusted sight unseen."""

    params: HFoxParams
    multiplier: float
    argument: float
    verified: bool = False


@dataclass(frozen=True)
class MellinCheck:
    analytic: float
    numeric: float
    rel_err: float
    quad_err: float


@dataclass(frozen=True)
class CosineTransformCheck:
    lhs: float
    rhs: float
    rel_err: float
    passed: bool
    transform: CosineTransform


def validate(params):
    """Structural validation; returns a report rather than raising."""
    v = []
    m, n, p, q = params.m, params.n, params.p, params.q
    if not (0 <= n <= p):
        v.append(f"need 0 <= n <= p, got n={n}, p={p}")
    if not (0 <= m <= q):
        v.append(f"need 0 <= m <= q, got m={m}, q={q}")
    if m == 0 and n == 0:
        v.append("m^2 + n^2 != 0 violated (no numerator gammas at all)")
    for tag, sym, pairs in (("upper", "A_j", params.upper), ("lower", "B_j", params.lower)):
        for i, (_, scale) in enumerate(pairs):
            if not scale > 0:
                v.append(f"{sym} > 0 violated at {tag}[{i}]: got {scale}")
    if not params.arg_scale > 0:
        v.append(f"arg_scale must be positive, got {params.arg_scale}")
    if not v and m > 0 and n > 0:
        left_max = max(-b / B for b, B in params.lower[:m])
        right_min = min((1.0 - a) / A for a, A in params.upper[:n])
        if left_max >= right_min - COINCIDENCE_TOL:
            lefts = _poles_above(params.lower[:m], right_min - 1e-9)
            rights = _poles_below(params.upper[:n], left_max + 1e-9)
            for l in lefts:
                for r in rights:
                    if abs(l - r) < COINCIDENCE_TOL * max(1.0, abs(l)):
                        v.append(f"left pole {l} coincides with right pole {r}")
    return ValidationReport(ok=not v, violations=tuple(v))


def _require_valid(params):
    rep = validate(params)
    if not rep.ok:
        raise ValueError("invalid H-function parameters: " + "; ".join(rep.violations))


def _poles_above(lower_pairs, bound, cap=4096):
    """Left poles s = -(b+k)/B with s >= bound."""
    out = []
    for b, B in lower_pairs:
        kmax = int(math.floor(-bound * B - b)) + 1
        for k in range(0, max(0, min(kmax + 1, cap))):
            s = -(b + k) / B
            if s >= bound:
                out.append(s)
    return out


def _poles_below(upper_pairs, bound, cap=4096):
    """Right poles s = (1 - a + k)/A with s <= bound."""
    out = []
    for a, A in upper_pairs:
        kmax = int(math.floor(bound * A - 1.0 + a)) + 1
        for k in range(0, max(0, min(kmax + 1, cap))):
            s = (1.0 - a + k) / A
            if s <= bound:
                out.append(s)
    return out


def convergence_profile(params):
    m, n = params.m, params.n
    A = [A for _, A in params.upper]
    B = [B for _, B in params.lower]
    delta = sum(A[:n]) - sum(A[n:]) + sum(B[:m]) - sum(B[m:])
    mu = sum(B) - sum(A)
    log_beta = sum(b * math.log(b) for b in B) - sum(a * math.log(a) for a in A)
    beta = math.exp(log_beta)
    if mu > COINCIDENCE_TOL:
        radius = math.inf
    elif mu < -COINCIDENCE_TOL:
        radius = 0.0
    else:
        radius = beta
    return ConvergenceProfile(delta=delta, mu=mu, series_radius=radius)


def _swap(params):
    """Inversion identity: H[w | params] = H[1/w | swapped].

    Exchanges the roles of the two pole families, so an argument beyond
    the series radius becomes one inside the swapped radius.
    """
    new_upper = tuple((1.0 - b, B) for b, B in params.lower)
    new_lower = tuple((1.0 - a, A) for a, A in params.upper)
    return HFoxParams(m=params.n, n=params.m, upper=new_upper, lower=new_lower)


# --- residue series -------------------------------------------------------

def _series_core(params, w, tol, max_terms, raise_on_exhaust=True):
    """Left-pole residue series at scaled arguments w (positive ndarray).

    Caller guarantees the series converges for every element in exact
    arithmetic.  Floating point is another matter: at large w the
    alternating terms overflow or cancel catastrophically before the
    factorial decay wins.  Elements that go non-finite are frozen and
    come back with err_est = inf; the roundoff term 2e-16 * max|term|
    reports the cancellation loss on the rest.  Returns
    (values, err_ests, terms_used).
    """
    m, n = params.m, params.n
    upper, lower = params.upper, params.lower
    if m == 0:
        raise OutOfRegion("no left pole family; the residue series is empty")

    # coincidence scan over the truncation horizon
    if m > 1:
        all_poles = np.concatenate([
            -(b + np.arange(max_terms)) / B for b, B in lower[:m]])
        sp = np.sort(all_poles)
        gaps = np.diff(sp)
        if np.any(gaps < COINCIDENCE_TOL * np.maximum(1.0, np.abs(sp[:-1]))):
            raise NonSimplePoles(
                "coinciding left poles within the truncation horizon; "
                "reduce the parameter block (pair cancellation) first")

    w = np.asarray(w, dtype=float)
    logw = np.log(w)
    acc = np.zeros_like(w)
    max_mag = np.zeros_like(w)
    live = np.ones_like(w, dtype=bool)
    tail_small = 0
    prev_norms = []
    kused = max_terms
    exhausted = True
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        for k in range(max_terms):
            term = np.zeros_like(w)
            for j in range(m):
                b, B = lower[j]
                s0 = -(b + k) / B
                logabs = -math.lgamma(k + 1) - math.log(B)
                sign = 1.0 if k % 2 == 0 else -1.0
                ok = True
                for i in range(m):
                    if i == j:
                        continue
                    la, sg = gammaln_sign(lower[i][0] + lower[i][1] * s0)
                    if sg == 0.0:
                        raise NonSimplePoles(
                            f"numerator gamma pole at series pole s={s0}")
                    logabs += la
                    sign *= sg
                for i in range(n):
                    la, sg = gammaln_sign(1.0 - upper[i][0] - upper[i][1] * s0)
                    if sg == 0.0:
                        raise NonSimplePoles(
                            f"left pole s={s0} sits on a right-family pole")
                    logabs += la
                    sign *= sg
                for i in range(m, len(lower)):
                    la, sg = gammaln_sign(1.0 - lower[i][0] - lower[i][1] * s0)
                    if sg == 0.0:
                        ok = False   # reciprocal gamma vanishes: term is zero
                        break
                    logabs -= la
                    sign *= sg
                if ok:
                    for i in range(n, len(upper)):
                        la, sg = gammaln_sign(upper[i][0] + upper[i][1] * s0)
                        if sg == 0.0:
                            ok = False
                            break
                        logabs -= la
                        sign *= sg
                if not ok:
                    continue
                term = term + sign * np.exp(logabs + ((b + k) / B) * logw)
            acc = np.where(live, acc + term, acc)
            dead_now = live & ~np.isfinite(acc)
            if np.any(dead_now):
                live &= ~dead_now
                if not np.any(live):
                    break
            mag = np.where(live, np.abs(term), 0.0)
            max_mag = np.maximum(max_mag, mag)
            norm = float(np.max(mag))
            prev_norms.append(norm)
            scale = max(1.0, float(np.max(np.abs(acc[live]))))
            if norm < tol * scale:
                tail_small += 1
            else:
                tail_small = 0
            if tail_small >= 3 and len(prev_norms) >= 5:
                recent = [x for x in prev_norms[-5:] if x > 0.0]
                ratios = [recent[i + 1] / recent[i] for i in range(len(recent) - 1)]
                r = max(ratios) if ratios else 0.0
                if r < 0.9:
                    kused = k + 1
                    exhausted = False
                    break

    if exhausted and np.any(live) and raise_on_exhaust:
        recent = prev_norms[-8:]
        if len(recent) >= 2 and recent[-1] > recent[0]:
            raise SeriesDiverged(
                f"series terms growing after {max_terms} terms "
                f"(last {recent[-1]:.3e})")
        raise SeriesDiverged(f"series not converged within {max_terms} terms")

    tail = prev_norms[-1] * (0.9 / 0.1) if prev_norms else 0.0
    errs = np.full_like(w, tail) + 2e-16 * max_mag
    if exhausted and np.any(live):
        errs = np.where(live, np.inf, errs)
    errs = np.where(live, errs, np.inf)
    acc = np.where(live, acc, np.nan)
    return acc, errs, kused


_ZERO_CUT = 1e-18
_BOUND_SPEC = QuadSpec(abs_tol=1e-6, rel_tol=1e-4, max_subdivisions=400)


def _magnitude_bound(params, c):
    """M(c) = (1/pi) * integral_0^inf |h(c+it)| dt, so |H(w)| <= M(c) w^{-c}.

    Rough quadrature is fine: the bound only certifies far-tail values
    as negligible, with the bound itself recorded as the error.
    """
    prof = convergence_profile(params)
    if prof.delta <= 0:
        return math.inf

    def absh(t):
        s = c + 1j * np.asarray(t, dtype=float)
        return np.abs(np.exp(_log_h(params, s)))

    t_max = max(16.0, 2.0 * 80.0 / (math.pi * prof.delta))
    try:
        val, _ = integrate_adaptive(absh, 0.0, t_max, _BOUND_SPEC)
    except QuadFailure:
        return math.inf
    return val / math.pi


def _eval_band(params, w, quad, tol, max_terms):
    """Series over a band of scaled arguments with per-element rescue.

    Elements the series handles cleanly keep their series values.  The
    rest (overflow, catastrophic cancellation) are first tested against
    the Mellin-magnitude bound |H(w)| <= M(c) w^{-c} on a ladder of
    contour positions; certified-negligible values are returned as 0
    with the bound as the error.  Whatever survives both goes through
    eval_contour one element at a time.
    """
    try:
        vals, errs, _ = _series_core(params, w, tol, max_terms,
                                     raise_on_exhaust=False)
        bad = ~np.isfinite(vals) | (errs > np.maximum(5e-14, 1e-8 * np.abs(vals)))
    except NonSimplePoles:
        vals = np.full_like(w, np.nan)
        errs = np.full_like(w, np.inf)
        bad = np.ones_like(w, dtype=bool)

    if not np.any(bad):
        return vals, errs

    m, n = params.m, params.n
    left_max = max(-b / B for b, B in params.lower[:m]) if m > 0 else -math.inf
    right_min = min((1.0 - a) / A for a, A in params.upper[:n]) if n > 0 else math.inf
    ladder = [left_max + step for step in (0.5, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0)]
    ladder = [c for c in ladder if c <= right_min - 1e-3]
    for c in ladder:
        if not np.any(bad):
            break
        M = _magnitude_bound(params, c)
        if not math.isfinite(M):
            break
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            bound = M * np.power(w, -c)
        certified = bad & (bound < _ZERO_CUT)
        vals[certified] = 0.0
        errs[certified] = bound[certified]
        bad &= ~certified

    for idx in np.argwhere(bad):
        out = eval_contour(params, float(w[tuple(idx)]), quad)
        vals[tuple(idx)] = out.value
        errs[tuple(idx)] = out.err_est
    return vals, errs


def _dispatch_regions(params, z, quad, tol, max_terms):
    """Vectorised evaluation with per-element region choice.

    Uses the direct series inside the convergence region, the inversion
    identity outside it, and the contour in the borderline annulus.
    Returns (values, err_ests).
    """
    _require_valid(params)
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise ValueError("arguments must be positive")
    w = params.arg_scale * z
    prof = convergence_profile(params)
    base = replace(params, arg_scale=1.0)

    vals = np.empty_like(w)
    errs = np.empty_like(w)
    if prof.mu > COINCIDENCE_TOL:
        vals[...], errs[...] = _eval_band(base, w, quad, tol, max_terms)
        return vals, errs
    if prof.mu < -COINCIDENCE_TOL:
        sw = _swap(base)
        vals[...], errs[...] = _eval_band(sw, 1.0 / w, quad, tol, max_terms)
        return vals, errs

    radius = prof.series_radius
    direct = w <= 0.8 * radius
    inverted = w >= 1.25 * radius
    annulus = ~direct & ~inverted
    if np.any(direct):
        vals[direct], errs[direct] = _eval_band(base, w[direct], quad, tol, max_terms)
    if np.any(inverted):
        sw = _swap(base)
        vals[inverted], errs[inverted] = _eval_band(sw, 1.0 / w[inverted], quad, tol, max_terms)
    if np.any(annulus):
        for idx in np.argwhere(annulus):
            out = eval_contour(base, float(w[tuple(idx)]), quad)
            vals[tuple(idx)] = out.value
            errs[tuple(idx)] = out.err_est
    return vals, errs


def eval_series(params, z, tol=1e-12, max_terms=512):
    """Residue-series value of H[arg_scale * z] at scalar z > 0.

    Converges inside the profile's region; arguments beyond the series
    radius are continued through the inversion identity.  In the
    borderline annulus around the radius OutOfRegion is raised and the
    caller should fall back to eval_contour.  err_est combines the
    geometric tail bound with a roundoff term from the largest summand
    (alternating series with large arguments lose digits to
    cancellation; the estimate reports that honestly).
    """
    _require_valid(params)
    if not z > 0:
        raise ValueError(f"argument must be positive, got {z!r}")
    w = params.arg_scale * float(z)
    prof = convergence_profile(params)
    base = replace(params, arg_scale=1.0)
    if prof.mu > COINCIDENCE_TOL:
        target, arg = base, w
    elif prof.mu < -COINCIDENCE_TOL:
        target, arg = _swap(base), 1.0 / w
    else:
        if w <= 0.8 * prof.series_radius:
            target, arg = base, w
        elif w >= 1.25 * prof.series_radius:
            target, arg = _swap(base), 1.0 / w
        else:
            raise OutOfRegion(
                f"argument {w} lies in the borderline annulus around the "
                f"series radius {prof.series_radius}; use eval_contour")
    vals, errs, k = _series_core(target, np.asarray([arg]), tol, max_terms)
    if not np.isfinite(vals[0]):
        raise SeriesDiverged(
            f"series overflowed in floating point at scaled argument {arg}; "
            "use eval_contour")
    return EvalOutcome(value=float(vals[0]), err_est=float(errs[0]),
                       method="series", terms=k)


# --- contour --------------------------------------------------------------

def _log_habs_real(params, c):
    """log |h(c)| on the real axis, or None when a gamma pole interferes."""
    m, n = params.m, params.n
    total = 0.0
    for j, (b, B) in enumerate(params.lower):
        arg = b + B * c if j < m else 1.0 - b - B * c
        la, sg = gammaln_sign(arg)
        if sg == 0.0:
            return None
        total += la if j < m else -la
    for j, (a, A) in enumerate(params.upper):
        arg = 1.0 - a - A * c if j < n else a + A * c
        la, sg = gammaln_sign(arg)
        if sg == 0.0:
            return None
        total += la if j < n else -la
    return total


def _saddle_position(params, w, left_max):
    """Contour position minimizing the t = 0 integrand amplitude
    |h(c)| w^{-c} over a geometric ladder right of the left poles.

    Only used when there is no right pole family (n = 0), where c is
    unconstrained from above.  Keeps the integrand amplitude comparable
    to the function value, so exponentially small H values come out of
    the quadrature with relative (not just absolute) accuracy.
    """
    logw = math.log(w)
    best_c, best_f = left_max + 0.5, math.inf
    for step in (0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0):
        c = left_max + step
        f = _log_habs_real(params, c)
        if f is None:
            continue
        f -= c * logw
        if f < best_f:
            best_c, best_f = c, f
    return best_c


def _contour_position(params, c=None, w=None):
    m, n = params.m, params.n
    left_max = max(-b / B for b, B in params.lower[:m]) if m > 0 else -math.inf
    right_min = min((1.0 - a) / A for a, A in params.upper[:n]) if n > 0 else math.inf
    if c is not None:
        if not (left_max + 1e-3 <= c <= right_min - 1e-3):
            raise ValueError(
                f"contour position {c} not at least 1e-3 inside the strip "
                f"({left_max}, {right_min})")
        return float(c)
    if math.isinf(left_max) and math.isinf(right_min):
        raise NoSeparatingContour("no poles at all to separate")
    if math.isinf(right_min):
        if w is not None:
            return _saddle_position(params, w, left_max)
        return left_max + 0.5
    if math.isinf(left_max):
        return right_min - 0.5
    if right_min - left_max < 2e-3:
        raise NoSeparatingContour(
            f"pole families leave no usable gap: left max {left_max}, "
            f"right min {right_min}")
    return 0.5 * (left_max + right_min)


def _log_h(params, s):
    """log h(s) on a complex array; branch choice is irrelevant because
    the value is only ever exponentiated."""
    m, n = params.m, params.n
    out = np.zeros_like(np.asarray(s, dtype=complex))
    with np.errstate(divide="ignore", invalid="ignore"):
        for j, (b, B) in enumerate(params.lower):
            if j < m:
                out = out + loggamma(b + B * s)
            else:
                out = out - loggamma(1.0 - b - B * s)
        for j, (a, A) in enumerate(params.upper):
            if j < n:
                out = out + loggamma(1.0 - a - A * s)
            else:
                out = out - loggamma(a + A * s)
    return out


def eval_contour(params, z, quad=QuadSpec(), c=None):
    """Mellin-Barnes line integral of H[arg_scale * z] at scalar z > 0.

    The line Re(s) = c must separate the pole families (auto-placed at
    the strip midpoint, at least 1e-3 from each family).  Requires the
    profile's delta > 0 so the integrand decays like exp(-delta pi|t|/2).
    """
    _require_valid(params)
    if not z > 0:
        raise ValueError(f"argument must be positive, got {z!r}")
    w = params.arg_scale * float(z)
    prof = convergence_profile(params)
    if prof.delta <= 0:
        raise QuadFailure(
            f"contour integrand does not decay (delta = {prof.delta})")
    cpos = _contour_position(params, c, w=w)
    logw = math.log(w)

    def integrand(t):
        s = cpos + 1j * np.asarray(t, dtype=float)
        vals = np.exp(_log_h(params, s) - s * logw)
        return vals.real / np.pi

    t_max = max(8.0, 2.0 * (-math.log(quad.tail_cutoff) + abs(logw) + 5.0)
                / (math.pi * prof.delta))
    total, err = integrate_adaptive(integrand, 0.0, t_max, quad)
    block_lo = t_max
    for _ in range(8):
        block, berr = integrate_adaptive(integrand, block_lo, 2.0 * block_lo, quad)
        total += block
        err += berr
        if abs(block) < max(quad.abs_tol, quad.rel_tol * abs(total)):
            break
        block_lo *= 2.0
    else:
        raise QuadFailure("contour tail did not settle within the block budget")
    return EvalOutcome(value=total, err_est=err + abs(block), method="contour")


def eval_auto(params, z, quad=QuadSpec(), tol=1e-12, max_terms=512):
    """Series evaluation with automatic contour fallback."""
    try:
        out = eval_series(params, z, tol=tol, max_terms=max_terms)
        if out.err_est <= max(1e-8, 1e-8 * abs(out.value)):
            return out
        series_out = out
    except (OutOfRegion, NonSimplePoles, SeriesDiverged):
        series_out = None
    try:
        return eval_contour(params, z, quad)
    except (QuadFailure, NoSeparatingContour):
        if series_out is not None:
            return series_out
        raise


def _values_on_grid(params, z, quad, tol=1e-12, max_terms=512):
    """Vectorised H values used inside quadrature integrands."""
    z = np.asarray(z, dtype=float)
    flat = z.reshape(-1)
    vals, _ = _dispatch_regions(params, flat, quad, tol, max_terms)
    return vals.reshape(z.shape)


# --- Mellin transform -----------------------------------------------------

def _strip_bounds(params):
    m, n = params.m, params.n
    lo = max((-b / B for b, B in params.lower[:m]), default=-math.inf)
    hi = min(((1.0 - a) / A for a, A in params.upper[:n]), default=math.inf)
    return lo, hi


def mellin(params, s):
    """Closed-form Mellin transform: integral_0^inf z^{s-1} H[a z] dz.

    Equals a^{-s} h(s) inside the fundamental strip, which is fixed by
    positivity of every numerator gamma argument.
    """
    _require_valid(params)
    s = float(s)
    lo, hi = _strip_bounds(params)
    if not (lo < s < hi):
        raise OutOfStrip(f"s = {s} outside the fundamental strip ({lo}, {hi})")
    m, n = params.m, params.n
    logabs = -s * math.log(params.arg_scale)
    sign = 1.0
    # on_pole="raise": any gamma argument at a non-positive integer is a
    # GammaPole error here, denominator or not
    for j, (b, B) in enumerate(params.lower):
        arg = b + B * s if j < m else 1.0 - b - B * s
        la, sg = gammaln_sign(arg, on_pole="raise")
        logabs += la if j < m else -la
        sign *= sg
    for j, (a, A) in enumerate(params.upper):
        arg = 1.0 - a - A * s if j < n else a + A * s
        la, sg = gammaln_sign(arg, on_pole="raise")
        logabs += la if j < n else -la
        sign *= sg
    return sign * math.exp(logabs)


def mellin_numeric_check(params, s, quad=QuadSpec(), tol=1e-12, max_terms=512):
    """Quadrature cross-check of the closed-form Mellin transform.

    Integrates z^{s-1} H[a z] with H supplied by the evaluation engine,
    so this exercises the whole chain.  The integral is split at z = 1
    and each half is substituted into resolvable form: the head takes
    u = z^s to absorb the endpoint power (s < 1), the tail takes
    v = z^{s-r} with r the leading right-pole exponent whenever the
    decay is algebraic (n > 0), which turns z^{s-1} H ~ z^{s-1-r} into
    a bounded integrand on (0, 1].  Exponential-type tails (n = 0) are
    integrated directly; the mapped mesh resolves them unaided.
    """
    analytic = mellin(params, s)   # raises OutOfStrip outside the strip

    if s >= 1.0:
        def head(z):
            return z ** (s - 1.0) * _values_on_grid(params, z, quad, tol, max_terms)
        i1, e1 = integrate_adaptive(head, 0.0, 1.0, quad)
    else:
        def head(u):
            with np.errstate(divide="ignore"):
                zz = np.power(u, 1.0 / s)
            return _values_on_grid(params, zz, quad, tol, max_terms) / s
        i1, e1 = integrate_adaptive(head, 0.0, 1.0, quad)

    if params.n == 0:
        def tail(z):
            return z ** (s - 1.0) * _values_on_grid(params, z, quad, tol, max_terms)
        i2, e2 = integrate_adaptive(tail, 1.0, np.inf, quad)
    else:
        r = min((1.0 - a) / A for a, A in params.upper[:params.n])
        g = r - s   # > 0 inside the strip

        def tail(v):
            with np.errstate(over="ignore"):
                zz = np.power(v, -1.0 / g)
                pref = np.power(v, -r / g) / g
            return pref * _values_on_grid(params, zz, quad, tol, max_terms)
        i2, e2 = integrate_adaptive(tail, 0.0, 1.0, quad)

    numeric = i1 + i2
    rel = abs(numeric - analytic) / max(abs(analytic), 1e-300)
    return MellinCheck(analytic=analytic, numeric=numeric, rel_err=rel,
                       quad_err=e1 + e2)


# --- parameter algebra ----------------------------------------------------

def rescale_power(params, mu):
    """Argument-power identity: H[a z^mu | params] = (1/mu) H[a^{1/mu} z | out].

    Purely symbolic: every A_j and B_j is divided by mu and the scale is
    re-expressed; returns (new_params, multiplier).
    """
    _require_valid(params)
    if not mu > 0:
        raise ValueError(f"power must be positive, got {mu!r}")
    new = HFoxParams(
        m=params.m, n=params.n,
        upper=tuple((a, A / mu) for a, A in params.upper),
        lower=tuple((b, B / mu) for b, B in params.lower),
        arg_scale=params.arg_scale ** (1.0 / mu),
    )
    return new, 1.0 / mu


def _shift(params, sigma):
    """Argument-power shift: z^sigma H[z | params] = H[z | shifted].

    Every coefficient moves by sigma times its scale.  Kept private: the
    engine itself never needs it, but it documents how the reduced
    spectral parameter block arises from the rescaled one (the tests and
    the wavefunction report lean on it).
    """
    return HFoxParams(
        m=params.m, n=params.n,
        upper=tuple((a + sigma * A, A) for a, A in params.upper),
        lower=tuple((b + sigma * B, B) for b, B in params.lower),
        arg_scale=params.arg_scale,
    )


def _pairs_match(x, y):
    return (abs(x[0] - y[0]) < COINCIDENCE_TOL * max(1.0, abs(x[0]))
            and abs(x[1] - y[1]) < COINCIDENCE_TOL * max(1.0, abs(x[1])))


def cancel_pairs(params):
    """Remove one matched upper/lower gamma pair, preferring the
    upper-numerator vs lower-denominator match.

    The defining product is order-free inside each of the four gamma
    groups, so the match is searched group-wide rather than only at the
    literal first/last slots.  One call does one cancellation; repeat to
    reduce fully.  Raises NoMatchingPair when nothing cancels.
    """
    _require_valid(params)
    m, n = params.m, params.n
    upper, lower = list(params.upper), list(params.lower)

    for i in range(n):                      # upper numerator ...
        for j in range(m, len(lower)):      # ... against lower denominator
            if _pairs_match(upper[i], lower[j]):
                del lower[j]
                del upper[i]
                return HFoxParams(m=m, n=n - 1, upper=tuple(upper),
                                  lower=tuple(lower), arg_scale=params.arg_scale)
    for i in range(m):                      # lower numerator ...
        for j in range(n, len(upper)):      # ... against upper denominator
            if _pairs_match(lower[i], upper[j]):
                del upper[j]
                del lower[i]
                return HFoxParams(m=m - 1, n=n, upper=tuple(upper),
                                  lower=tuple(lower), arg_scale=params.arg_scale)
    raise NoMatchingPair("no equal (coefficient, scale) pair in cancelling positions")


def reduce_fully(params):
    """Apply cancel_pairs until nothing matches."""
    while True:
        try:
            params = cancel_pairs(params)
        except NoMatchingPair:
            return params


# --- cosine transform -----------------------------------------------------

def cosine_transform(params, k, s, mu):
    """Symbolic right-hand side of

        integral_0^inf z^{s-1} cos(k z) H[a z^mu | params] dz
            = multiplier * H[argument | out_params],

    emitted exactly as the source identity prints it: orders
    (m+1, n; q+1, p+2), multiplier pi/(k s), argument k^mu / a, upper
    row (1-b_j, B_j)_q then ((1+s)/2, mu/2), lower row (s, mu) then
    (1-a_j, A_j)_p then ((1+s)/2, mu/2).  The result carries
    verified=False until cosine_transform_check passes for the
    instance; the identity is applied per instance, never assumed.
    """
    _require_valid(params)
    if not k > 0:
        raise ValueError(f"transform frequency must be positive, got {k!r}")
    if not mu > 0:
        raise ValueError(f"argument power must be positive, got {mu!r}")
    m, n = params.m, params.n
    if m > 0:
        zero_power = s + mu * min(b / B for b, B in params.lower[:m])
        if not zero_power > 0:
            raise StripViolation(
                f"integrand not integrable at 0: s + mu*min(b/B) = {zero_power}")
    if n > 0:
        inf_power = s + mu * max((a - 1.0) / A for a, A in params.upper[:n])
        if not inf_power < 1.0:
            raise StripViolation(
                f"integrand envelope does not decay: s + mu*max((a-1)/A) = {inf_power}")
    new_upper = tuple((1.0 - b, B) for b, B in params.lower) + (((1.0 + s) / 2.0, mu / 2.0),)
    new_lower = ((float(s), float(mu)),) \
        + tuple((1.0 - a, A) for a, A in params.upper) \
        + (((1.0 + s) / 2.0, mu / 2.0),)
    out = HFoxParams(m=params.m + 1, n=params.n, upper=new_upper, lower=new_lower)
    return CosineTransform(params=out, multiplier=np.pi / (k * s),
                           argument=k ** mu / params.arg_scale, verified=False)


def cosine_transform_check(params, k, s, mu, quad=QuadSpec(), tol=1e-6):
    """Numeric verification of the cosine-transform identity.

    Left side by oscillatory quadrature of the defining integral (the
    H values come from the evaluation engine), right side by series or
    contour evaluation of the emitted parameter block after full pair
    cancellation.  Returns the measured relative error and a transform
    object whose verified flag reflects it.
    """
    ct = cosine_transform(params, k, s, mu)

    lead = s - 1.0
    if params.m > 0:
        lead += mu * min(b / B for b, B in params.lower[:params.m])

    def envelope(p):
        return p ** (s - 1.0) * _values_on_grid(params, p ** mu, quad)

    lhs, _ = integrate_oscillatory(envelope, k, quad, singularity_power=lead)

    reduced = reduce_fully(ct.params)
    rhs = ct.multiplier * eval_auto(reduced, ct.argument, quad).value
    rel = abs(lhs - rhs) / max(abs(lhs), 1e-300)
    passed = rel <= tol
    return CosineTransformCheck(lhs=lhs, rhs=rhs, rel_err=rel, passed=passed,
                                transform=replace(ct, verified=passed))
