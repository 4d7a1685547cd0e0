"""Nontrivial zeta zeros: file ingestion, on-site refinement, derivatives.

A zeros file is UTF-8 text with one positive decimal ordinate per line in
strictly ascending order (the format of the published tables).  Loaded
ordinates are refined against this package's own Xi implementation by a
bracketed root find, after which zeta'(1/2 + i gamma) is attached for use
in the zero sums.  The repo ships a 100-ordinate sample generated by
scanning Xi sign changes with scan_zero_brackets, so nothing external is
required to exercise the pipeline.
"""

import numpy as np

from .specfun import zeta
from .xikernel import xi_cap


class ZeroRecord:
    """Ordinate of a nontrivial zero, refinement flag, zeta'(rho)."""

    def __init__(self, gamma, refined=False, zeta_prime=None):
        gamma = float(gamma)
        if gamma <= 0.0:
            raise ValueError("ZeroRecord: ordinate must be positive")
        self.gamma = gamma
        self.refined = bool(refined)
        self.zeta_prime = zeta_prime

    def __repr__(self):
        return ("ZeroRecord(gamma=%.9f, refined=%r, zeta_prime=%r)"
                % (self.gamma, self.refined, self.zeta_prime))


def load_zeros(path, max_count):
    """Parse at most max_count ordinates from a zeros file.

    Raises ValueError naming the offending line for anything that does
    not parse as a positive decimal or that breaks ascending order.
    Records come back unrefined, with no derivative attached.
    """
    records = []
    prev = 0.0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if len(records) >= max_count:
                break
            try:
                g = float(line)
            except ValueError:
                raise ValueError("%s:%d: not a decimal ordinate: %r"
                                 % (path, lineno, line)) from None
            if not np.isfinite(g) or g <= 0.0:
                raise ValueError("%s:%d: ordinate must be positive, got %r"
                                 % (path, lineno, line))
            if g <= prev:
                raise ValueError("%s:%d: ordinates must be strictly "
                                 "ascending (%r after %r)"
                                 % (path, lineno, g, prev))
            prev = g
            records.append(ZeroRecord(g))
    return records


def _xi_real(t):
    return float(np.real(np.asarray(xi_cap(float(t)))))


def refine_zero(gamma0):
    """Refine an approximate ordinate against Xi on [gamma0 - 0.5, gamma0 + 0.5].

    Looks for a sign change of the real-valued Xi(t) over the bracket
    (falling back to a 0.02-step scan when the endpoints agree in sign),
    then alternates secant steps with bisection safeguards until the
    bracket collapses below 1e-12.  Raises ValueError when Xi does not
    change sign anywhere in the window.
    """
    lo, hi = gamma0 - 0.5, gamma0 + 0.5
    flo, fhi = _xi_real(lo), _xi_real(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        grid = np.arange(lo, hi + 1e-12, 0.02)
        vals = np.real(np.asarray(xi_cap(grid)))
        sign_flip = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
        if len(sign_flip) == 0:
            raise ValueError("refine_zero: Xi does not change sign on "
                             "[%.6f, %.6f]" % (lo, hi))
        i = int(sign_flip[0])
        lo, hi = float(grid[i]), float(grid[i + 1])
        flo, fhi = float(vals[i]), float(vals[i + 1])
    for _ in range(200):
        if hi - lo < 1e-12:
            break
        # secant proposal, clipped into the bracket interior
        denom = fhi - flo
        if denom != 0.0:
            x = hi - fhi * (hi - lo) / denom
        else:
            x = 0.5 * (lo + hi)
        margin = 0.01 * (hi - lo)
        if not (lo + margin < x < hi - margin):
            x = 0.5 * (lo + hi)
        fx = _xi_real(x)
        if fx == 0.0:
            return x
        if flo * fx < 0.0:
            hi, fhi = x, fx
        else:
            lo, flo = x, fx
    return 0.5 * (lo + hi)


def zeta_derivative(gamma):
    """zeta'(1/2 + i gamma) by Richardson-extrapolated central differences.

    Holomorphy makes the direction of differentiation irrelevant, so the
    step is taken along the real axis: D(h) = (zeta(s+h) - zeta(s-h))/(2h)
    with h = 1e-6, combined as (4 D(h/2) - D(h)) / 3.
    """
    s = 0.5 + 1j * float(gamma)
    h = 1e-6
    d1 = (zeta(s + h) - zeta(s - h)) / (2.0 * h)
    d2 = (zeta(s + 0.5 * h) - zeta(s - 0.5 * h)) / h
    return complex((4.0 * d2 - d1) / 3.0)


def prepare_zeros(path, max_count):
    """Load, refine, and attach derivatives; the one-call pipeline."""
    records = load_zeros(path, max_count)
    out = []
    for rec in records:
        g = refine_zero(rec.gamma)
        out.append(ZeroRecord(g, refined=True, zeta_prime=zeta_derivative(g)))
    return out


def scan_zero_brackets(t_min, t_max, step=0.05):
    """Sign-change brackets of Xi on a uniform grid over [t_min, t_max].

    The minimal gap between ordinates below 240 is about 0.7, so the
    default step cannot straddle two zeros in one cell; each returned
    (lo, hi) pair brackets exactly one ordinate.
    """
    grid = np.arange(t_min, t_max + step, step)
    vals = np.real(np.asarray(xi_cap(grid)))
    flips = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    return [(float(grid[i]), float(grid[i + 1])) for i in flips]
