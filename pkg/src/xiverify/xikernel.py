"""Composite kernels built from the special functions.

This module assembles the completed zeta function xi(s) and its
critical-line restriction Xi(t), the hypergeometric kernel
rho(x, z, s) = x^(1/2-s) e^(-z^2/8) 1F1((1-s)/2; 1/2; z^2/4), its
symmetrization nabla = rho(x,z,s) + rho(x,z,1-s), and the digamma
remainder lambda(x) = psi(x) + 1/(2x) - log x.

nabla generalizes 2 cos((t/2) log x): at z = 0 and s = (1+it)/2 the
two rho terms are x^(-it/2) and x^(it/2).  Kummer's transformation of
1F1 makes nabla invariant under (x, z) -> (1/x, iz) on the critical
line, which is the engine behind every verified identity here.
"""

import numpy as np

from .specfun import (EULER_GAMMA, _STIELTJES_1, _STIELTJES_2, _merge,
                      _split, digamma, gamma_fn, hyp1f1, lngamma, zeta)

_QUARTER_LOG_PI = 0.28618247146235004  # log(pi) / 4


class KernelParams:
    """Parameter pair (alpha, z) with beta always derived as 1/alpha."""

    def __init__(self, alpha, z=0.0):
        alpha = float(alpha)
        if alpha <= 0.0:
            raise ValueError("KernelParams: alpha must be positive")
        self.alpha = alpha
        self.z = complex(z)

    @property
    def beta(self):
        return 1.0 / self.alpha

    def __repr__(self):
        return "KernelParams(alpha=%r, z=%r)" % (self.alpha, self.z)


def xi_small(s):
    """Completed zeta xi(s) = (1/2) s (s-1) pi^(-s/2) Gamma(s/2) zeta(s).

    Entire; the zeta pole at s = 1 is cancelled by the (s-1) factor and is
    evaluated through the truncated Laurent product
    (s-1) zeta(s) = 1 + g0 (s-1) - g1 (s-1)^2 + g2 (s-1)^3 / 2.
    Arguments with Re s < 1/2 are reflected first through xi(s) = xi(1-s),
    so the Gamma factor never meets its poles.
    """
    w, scalar = _split(s, np.complex128)
    if w.ndim == 0:
        w = w[np.newaxis]
        squeeze = True
    else:
        squeeze = False
    w = np.where(w.real < 0.5, 1.0 - w, w)
    out = np.empty_like(w)
    near1 = np.abs(w - 1.0) < 1e-6
    if np.any(~near1):
        v = w[~near1]
        out[~near1] = (0.5 * v * (v - 1.0)
                       * np.exp(-0.5 * v * np.log(np.pi) + lngamma(0.5 * v))
                       * zeta(v))
    if np.any(near1):
        v = w[near1]
        u = v - 1.0
        pole_product = (1.0 + EULER_GAMMA * u - _STIELTJES_1 * u * u
                        + 0.5 * _STIELTJES_2 * u ** 3)
        out[near1] = (0.5 * v
                      * np.exp(-0.5 * v * np.log(np.pi) + lngamma(0.5 * v))
                      * pole_product)
    if squeeze:
        out = out[0]
    return _merge(np.asarray(out), scalar)


def xi_cap(t):
    """Xi(t) = xi(1/2 + it).

    For real t the value is computed in explicitly real form so the
    imaginary part vanishes identically: with theta(t) the phase of
    pi^(-it/2) Gamma(1/4 + it/2),

        Xi(t) = -(1/2) (t^2 + 1/4) pi^(-1/4) |Gamma(1/4 + it/2)|
                * Re[e^(i theta(t)) zeta(1/2 + it)],

    where the bracket is the classical real-valued combination of zeta
    with its critical-line phase.  Complex t falls back to xi_small.
    """
    w, scalar = _split(t, np.complex128)
    if np.any(w.imag != 0.0):
        return _merge(np.asarray(xi_small(0.5 + 1j * w)), scalar)
    tv = w.real
    lg = lngamma(0.25 + 0.5j * tv)
    theta = lg.imag - 0.5 * tv * np.log(np.pi)
    zval = zeta(0.5 + 1j * tv)
    hardy_z = (np.exp(1j * theta) * zval).real
    mag = np.exp(lg.real - _QUARTER_LOG_PI)
    out = (-0.5 * (tv * tv + 0.25) * mag * hardy_z).astype(np.complex128)
    return _merge(out, scalar)


def rho_kernel(x, z, s):
    """rho(x, z, s) = x^(1/2 - s) e^(-z^2/8) 1F1((1-s)/2; 1/2; z^2/4), x > 0."""
    xv = np.asarray(x, np.float64)
    if np.any(xv <= 0.0):
        raise ValueError("rho_kernel: x must be positive")
    sv = np.asarray(s, np.complex128)
    zc = complex(z)
    w = 0.25 * zc * zc
    power = np.exp((0.5 - sv) * np.log(xv))
    out = power * np.exp(-0.5 * w) * hyp1f1(0.5 * (1.0 - sv), 0.5, w)
    if np.ndim(x) == 0 and np.ndim(s) == 0:
        return complex(out)
    return out


def nabla_kernel(x, z, s):
    """nabla(x, z, s) = rho(x, z, s) + rho(x, z, 1-s); symmetric in s <-> 1-s."""
    sv = np.asarray(s, np.complex128)
    out = rho_kernel(x, z, sv) + rho_kernel(x, z, 1.0 - sv)
    if np.ndim(x) == 0 and np.ndim(s) == 0:
        return complex(out)
    return out


def lambda_kernel(x):
    """lambda(x) = psi(x) + 1/(2x) - log x; decays like -1/(12 x^2)."""
    xv, scalar = _split(x, np.float64)
    if np.any(xv <= 0.0):
        raise ValueError("lambda_kernel: x must be positive")
    return _merge(digamma(xv) + 0.5 / xv - np.log(xv), scalar)


def fit_decay_envelope(alpha, z, window=(10.0, 60.0), samples=401):
    """Fit C, A with |Xi(t/2) nabla(alpha, z, (1+it)/2)| <= C t^A e^(-pi t/4).

    Least-squares fit of log(|f| e^(pi t/4)) against log t on the window,
    then C is inflated so the bound majorizes every sample.  The envelope
    certifies quadrature truncation points; it is a window bound and is
    deliberately conservative when extrapolated.
    """
    t = np.linspace(window[0], window[1], samples)
    vals = np.abs(xi_cap(0.5 * t) * nabla_kernel(alpha, z, 0.5 * (1.0 + 1j * t)))
    g = np.log(np.maximum(vals, 1e-300)) + 0.25 * np.pi * t
    lt = np.log(t)
    A, logC = np.polyfit(lt, g, 1)
    resid = g - (A * lt + logC)
    logC += resid.max()
    return float(np.exp(logC)), float(A)
