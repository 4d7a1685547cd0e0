"""Infinite series with certified truncation.

Each sum here feeds one side of an identity check: theta-type Gaussian
sums, sums of the modified Bessel function K0, the Bessel-difference sum
behind the z = 0 Ferrar reduction, the digamma-remainder sum, the
conditionally convergent Moebius sum, and the sum over nontrivial zeta
zeros with conjugate-pair bracketing.

Truncation policy: absolutely convergent sums stop when a rigorous term
bound drops below 1e-17 or switch to an Euler-Maclaurin tail once terms
follow their asymptotic power law; the Moebius sum is a reported partial
sum by construction (its convergence is conjecture-grade) and carries an
oscillation proxy instead of an error bound.
"""

import numpy as np

from .specfun import (EULER_GAMMA, besselk0, besselk0_scaled, hyp1f1,
                      lngamma)
from .xikernel import lambda_kernel

_LOG_TERM_CUTOFF = 39.2  # -log(1e-17)

# coefficients of the large-x expansion e^x K0(x) ~ sqrt(pi/2x) (1 + sum a_k x^-k)
_K0_ASYMP = np.array([-1.0 / 8.0, 9.0 / 128.0, -75.0 / 1024.0, 3675.0 / 32768.0])

# B_{2j}/(2j) for the lambda(x) tail, lambda(x) = -sum_j B_{2j}/(2j x^{2j})
_LAMBDA_TAIL = np.array([1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0])

_TWO_PI = 2.0 * np.pi


def _zeta_tail(N, m):
    """Euler-Maclaurin tail sum_{n > N} n^(-m) for integer N, real m > 1."""
    return (N ** (1.0 - m) / (m - 1.0) - 0.5 * N ** (-m)
            + (m / 12.0) * N ** (-m - 1.0)
            - (m * (m + 1.0) * (m + 2.0) / 720.0) * N ** (-m - 3.0))


def theta_sum(alpha, z):
    """sum_{n>=1} e^(-pi alpha^2 n^2) cos(sqrt(pi) alpha n z).

    Truncated once the term bound e^(-pi a^2 n^2 + sqrt(pi) a n |Im z|)
    falls below 1e-17; the bound is the positive root of the exponent
    quadratic, so no trial summation is needed.
    """
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError("theta_sum: alpha must be positive")
    z = complex(z)
    a = np.pi * alpha * alpha
    b = np.sqrt(np.pi) * alpha * abs(z.imag)
    N = int(np.ceil((b + np.sqrt(b * b + 4.0 * a * _LOG_TERM_CUTOFF))
                    / (2.0 * a))) + 1
    n = np.arange(1.0, N + 1.0)
    terms = np.exp(-a * n * n) * np.cos(np.sqrt(np.pi) * alpha * n * z)
    return complex(terms[::-1].sum())


def cosh_theta_sum(beta, z):
    """sum_{n>=1} e^(-pi beta^2 n^2) cosh(sqrt(pi) beta n z).

    Independent twin of theta_sum (cosh in place of cos, bound driven by
    |Re z|); kept as separate code so the two sides of the transformation
    identities are not computed by the same expression.
    """
    beta = float(beta)
    if beta <= 0.0:
        raise ValueError("cosh_theta_sum: beta must be positive")
    z = complex(z)
    a = np.pi * beta * beta
    b = np.sqrt(np.pi) * beta * abs(z.real)
    N = int(np.ceil((b + np.sqrt(b * b + 4.0 * a * _LOG_TERM_CUTOFF))
                    / (2.0 * a))) + 1
    n = np.arange(1.0, N + 1.0)
    terms = np.exp(-a * n * n) * np.cosh(np.sqrt(np.pi) * beta * n * z)
    return complex(terms[::-1].sum())


def _k0_sum_direct(t):
    """sum_n K0(n t) by direct summation; t is a 1-d array, min(t) >= 0.2."""
    tmin = float(t.min())
    N = max(2, int(np.ceil(45.0 / tmin)))
    n = np.arange(1.0, N + 1.0)
    args = np.outer(t, n)
    vals = besselk0(args.ravel()).reshape(args.shape)
    return vals[:, ::-1].sum(axis=1)


def sqrt_lattice_sum(t):
    """S(t) = sum_n (1/sqrt(t^2 + 4 pi^2 n^2) - 1/(2 pi n)), vectorized.

    Direct terms to n = 500 plus the tail from expanding the square root,
    sum_{n>N} = -t^2/(2 c^3) T(3) + 3 t^4/(8 c^5) T(5) with c = 2 pi and
    T(m) the Euler-Maclaurin tail of n^(-m); next order is O(t^6 N^-7).
    """
    N = 500
    n = np.arange(1.0, N + 1.0)
    tt = np.atleast_1d(np.asarray(t, np.float64))
    direct = (1.0 / np.sqrt(tt[:, None] ** 2 + (_TWO_PI * n[None, :]) ** 2)
              - 1.0 / (_TWO_PI * n[None, :]))
    head = direct[:, ::-1].sum(axis=1)
    c = _TWO_PI
    tail = (-tt ** 2 / (2.0 * c ** 3) * _zeta_tail(N, 3.0)
            + 3.0 * tt ** 4 / (8.0 * c ** 5) * _zeta_tail(N, 5.0))
    return head + tail


def k0_sum(t):
    """sum_{n>=1} K0(n t) for t > 0.

    Direct Bessel summation for t >= 0.2.  Below that the direct sum needs
    O(1/t) terms and loses digits against the emerging pole, so the sum is
    evaluated through its lattice representation
    pi/(2t) + (gamma + log(t/(4 pi)))/2 + pi S(t), which is smooth in t;
    the two branches agree to ~1e-12 across an overlap window.
    """
    tv = np.atleast_1d(np.asarray(t, np.float64))
    if np.any(tv <= 0.0):
        raise ValueError("k0_sum: t must be positive")
    out = np.empty_like(tv)
    small = tv < 0.2
    if np.any(~small):
        out[~small] = _k0_sum_direct(tv[~small])
    if np.any(small):
        ts = tv[small]
        out[small] = (0.5 * np.pi / ts
                      + 0.5 * (EULER_GAMMA + np.log(ts) - np.log(4.0 * np.pi))
                      + np.pi * sqrt_lattice_sum(ts))
    return float(out[0]) if np.ndim(t) == 0 else out


def k0_sum_minus_pole(t):
    """The regularized bracket sum_n K0(n t) - pi/(2t), stable near t = 0.

    For t >= 0.2 the pole subtraction is harmless; below, the subtraction
    is performed analytically inside the lattice representation so no
    cancellation of large terms occurs.
    """
    tv = np.atleast_1d(np.asarray(t, np.float64))
    if np.any(tv <= 0.0):
        raise ValueError("k0_sum_minus_pole: t must be positive")
    out = np.empty_like(tv)
    small = tv < 0.2
    if np.any(~small):
        tl = tv[~small]
        out[~small] = _k0_sum_direct(tl) - 0.5 * np.pi / tl
    if np.any(small):
        ts = tv[small]
        out[small] = (0.5 * (EULER_GAMMA + np.log(ts) - np.log(4.0 * np.pi))
                      + np.pi * sqrt_lattice_sum(ts))
    return float(out[0]) if np.ndim(t) == 0 else out


def ferrar_bessel_sum(alpha):
    """sum_{n>=1} (e^(x_n) K0(x_n) - 1/(n alpha)), x_n = pi alpha^2 n^2 / 2.

    Each term is (E(x_n))/(n alpha) with E(x) = e^x K0(x) sqrt(2x/pi) - 1,
    which decays like -1/(8x), so the terms are O(n^-3).  Direct summation
    runs to N and the remainder uses the asymptotic coefficients of E
    against Euler-Maclaurin power tails; the result carries ~1e-12
    absolute error.
    """
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError("ferrar_bessel_sum: alpha must be positive")
    N = min(20000, max(400, int(np.ceil(20.0 / alpha))))
    n = np.arange(1.0, N + 1.0)
    x = 0.5 * np.pi * alpha * alpha * n * n
    E = besselk0_scaled(x) * np.sqrt(2.0 * x / np.pi) - 1.0
    head = (E / (n * alpha))[::-1].sum()
    scale = 2.0 / (np.pi * alpha * alpha)
    tail = sum(_K0_ASYMP[k] * scale ** (k + 1) * _zeta_tail(N, 2.0 * k + 3.0)
               for k in range(len(_K0_ASYMP))) / alpha
    return float(head + tail)


def lambda_sum(alpha):
    """sum_{k>=1} lambda(k alpha) with lambda(x) = psi(x) + 1/(2x) - log x.

    lambda(k alpha) ~ -1/(12 (k alpha)^2), so after K direct terms the
    remainder is the Bernoulli expansion of lambda against power tails:
    sum_{k>K} lambda(k alpha) = -sum_j B_{2j}/(2j alpha^{2j}) T(2j).
    Direct cutoff K scales like 1/alpha so small alpha keeps its accuracy.
    """
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError("lambda_sum: alpha must be positive")
    K = max(1000, int(np.ceil(50.0 / alpha)))
    k = np.arange(1.0, K + 1.0)
    head = lambda_kernel(k * alpha)[::-1].sum()
    tail = -sum(_LAMBDA_TAIL[j] * alpha ** (-2.0 * (j + 1))
                * _zeta_tail(K, 2.0 * (j + 1))
                for j in range(len(_LAMBDA_TAIL)))
    return float(head + tail)


def mobius_theta_sum(alpha, z, table, n_terms=None):
    """Partial sum to N of sum mu(n)/n e^(-pi alpha^2/n^2) cos(sqrt(pi) alpha z / n).

    Conditionally convergent at prime-number-theorem rate; the value
    returned is the plain partial sum at N = n_terms (default: the whole
    table), in ascending n.  Use mobius_partial_oscillation for an error
    proxy; no rigorous bound exists short of deep zero-free regions.
    """
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError("mobius_theta_sum: alpha must be positive")
    N = table.limit if n_terms is None else int(n_terms)
    if N > table.limit:
        raise ValueError("mobius_theta_sum: table holds %d values, "
                         "%d requested" % (table.limit, N))
    if N < 1:
        raise ValueError("mobius_theta_sum: need at least one term")
    z = complex(z)
    n = np.arange(1.0, N + 1.0)
    mu = table.values[1:N + 1].astype(np.float64)
    terms = (mu / n) * np.exp(-np.pi * alpha * alpha / (n * n))
    if z != 0.0:
        terms = terms * np.cos(np.sqrt(np.pi) * alpha * z / n)
    return complex(terms.sum())


def mobius_partial_oscillation(alpha, z, table, n_terms=None):
    """Spread (max - min of |partial sums|) over the last decade of terms.

    Reported as the error proxy for mobius_theta_sum: the partial sums
    oscillate at the scale of the neglected tail, so their spread over
    n in [N/10, N] estimates how settled the value is.
    """
    alpha = float(alpha)
    N = table.limit if n_terms is None else int(n_terms)
    if N > table.limit:
        raise ValueError("mobius_partial_oscillation: table holds %d values, "
                         "%d requested" % (table.limit, N))
    z = complex(z)
    n = np.arange(1.0, N + 1.0)
    mu = table.values[1:N + 1].astype(np.float64)
    terms = (mu / n) * np.exp(-np.pi * alpha * alpha / (n * n))
    if z != 0.0:
        terms = terms * np.cos(np.sqrt(np.pi) * alpha * z / n)
    partials = np.cumsum(terms)
    window = partials[max(0, N // 10 - 1):]
    spread = (window.real.max() - window.real.min())
    if z != 0.0:
        spread = max(spread, window.imag.max() - window.imag.min())
    return float(spread)


def _bracket_edges(gammas, a1=0.1):
    """Split ordinates into brackets: consecutive zeros whose gap is below
    exp(-a1 g/log g) + exp(-a1 g'/log g') share a bracket."""
    edges = [0]
    for i in range(1, len(gammas)):
        g0, g1 = gammas[i - 1], gammas[i]
        close = (np.exp(-a1 * g0 / np.log(max(g0, 2.0)))
                 + np.exp(-a1 * g1 / np.log(max(g1, 2.0))))
        if g1 - g0 >= close:
            edges.append(i)
    edges.append(len(gammas))
    return edges


def zero_sum_bracketed(zeros, alpha, z, a1=0.1):
    """Bracketed sum over nontrivial zeros rho = 1/2 + i gamma and conjugates:

        sum_rho Gamma((1-rho)/2) / zeta'(rho) 1F1((1-rho)/2; 1/2; -z^2/4)
                pi^(rho/2) alpha^rho.

    Each ordinate contributes its conjugate pair in one bracket, which
    makes the sum real for real alpha and z^2; ordinates closer than the
    closeness criterion (constant a1) are additionally grouped, though at
    desk height the gaps never trigger it.  Terms decay like e^(-pi g/4)
    through the Gamma factor, so the bracketed partial sums settle after
    a handful of zeros.
    """
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError("zero_sum_bracketed: alpha must be positive")
    if len(zeros) == 0:
        return 0.0 + 0.0j
    z = complex(z)
    gammas = np.array([rec.gamma for rec in zeros], dtype=np.float64)
    zp = []
    for rec in zeros:
        if rec.zeta_prime is None:
            raise ValueError("zero_sum_bracketed: zero at gamma=%.6f has no "
                             "zeta derivative" % rec.gamma)
        zp.append(complex(rec.zeta_prime))
    zp = np.array(zp, dtype=np.complex128)
    rho = 0.5 + 1j * gammas
    arg = -0.25 * z * z
    def term(r, d):
        return (np.exp(lngamma(0.5 * (1.0 - r)) + 0.5 * r * np.log(np.pi)
                       + r * np.log(alpha))
                / d * hyp1f1(0.5 * (1.0 - r), 0.5, arg))
    upper = term(rho, zp)
    if arg.imag == 0.0:
        pair = 2.0 * upper.real + 0.0j
    else:
        pair = upper + term(np.conj(rho), np.conj(zp))
    edges = _bracket_edges(gammas, a1)
    brackets = np.add.reduceat(pair, edges[:-1])
    return complex(brackets.sum())
