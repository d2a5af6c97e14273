"""Welch-Berlekamp unique decoding for HRS codes under the NRT metric.

For a received s x r matrix y and an error bound e, the decoder looks for a
monic locator E of degree exactly e and an N of degree at most e+t-1 tied
together by one linear constraint per matrix position:

    d^(l-1)N(alpha_i) = sum_{j=1..l} y_{j,i} * d^(l-j)E(alpha_i)

(d^(k) is the order-k hyperderivative).  Any solution with E dividing N
yields the message N/E; re-encoding and checking the NRT distance against y
makes the procedure never return a wrong message.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ParameterError
from .hrs import CodeParams, _check_received, encode, hermite_interpolate
from .linalg import solve
from .nrt import NrtMatrix, nrt_distance
from .poly import Poly


def decoding_radius(params: CodeParams) -> int:
    """Largest error weight with a guaranteed unique decoding: (rs-t)//2."""
    return (params.r * params.s - params.t) // 2


class FailureReason(str, Enum):
    # The linear system has no solution at all.
    NO_SOLUTION = "no_solution"
    # A solution exists but its locator does not divide its N.
    NON_DIVISIBLE = "non_divisible"
    # N/E is a polynomial but its codeword is farther than e from y.
    DISTANCE_EXCEEDED = "distance_exceeded"


@dataclass(frozen=True)
class DecodeSuccess:
    message: Poly
    error_weight: int
    locator: Poly
    evaluator: Poly

    ok = True


@dataclass(frozen=True)
class DecodeFailure:
    reason: FailureReason

    ok = False


@dataclass(frozen=True)
class WbSystem:
    """The rs x (2e+t) linear system behind one decoding attempt.

    Column layout: columns 0..e+t-1 hold the coefficients a_0..a_{e+t-1} of
    N, columns e+t..2e+t-1 hold b_0..b_{e-1} of E.  The top coefficient
    b_e = 1 (E monic of degree exactly e) is folded into the right-hand
    side.  Row (l-1)*r + (i-1) states the order-(l-1) constraint at
    alpha_i.
    """

    matrix: np.ndarray
    rhs: np.ndarray
    e: int
    t: int

    @property
    def unknown_count(self) -> int:
        return 2 * self.e + self.t

    def split(self, field, x) -> tuple[Poly, Poly]:
        """Read (N, E) off an unknown vector, restoring the monic top of E."""
        cut = self.e + self.t
        n_poly = Poly(field, [int(c) for c in x[:cut]])
        e_poly = Poly(field, [int(c) for c in x[cut:]] + [1])
        return n_poly, e_poly


def build_wb_system(params: CodeParams, y: NrtMatrix, e: int) -> WbSystem:
    """Assemble the key-equation system for the given error bound.

    y is used as-is; callers with a non-unit multiplier matrix divide it
    out first (see decode).
    """
    _check_received(params, y)
    radius = decoding_radius(params)
    if not 0 <= e <= radius:
        raise ParameterError(f"error bound {e} outside [0, {radius}]")
    field, p = params.field, params.p
    r, s, t = params.r, params.s, params.t
    n_cols = e + t
    pow_tab = params.power_table(n_cols)
    binom = params.binomial_table(n_cols, s)
    yv = y.entries

    m = np.zeros((s * r, n_cols + e), dtype=field.dtype)
    rhs = np.zeros(s * r, dtype=field.dtype)
    for d in range(s):
        rows = slice(d * r, (d + 1) * r)
        # N side: coefficient of a_k at order d is C(k, d) * alpha**(k-d).
        if d < n_cols:
            m[rows, d:n_cols] = pow_tab[:, : n_cols - d] * binom[d:, d] % p
        # E side: coefficient of b_k collects orders m = l-j over 0..d,
        # each contributing -y[d-m] * C(k, m) * alpha**(k-m).
        if e > 0:
            acc = np.zeros((r, e), dtype=field.dtype)
            for j in range(min(d, e - 1) + 1):
                term = pow_tab[:, : e - j] * binom[j:e, j] % p
                acc[:, j:] += term * yv[d - j, :][:, np.newaxis] % p
            m[rows, n_cols:] = -acc % p
        # Monic fold: b_e = 1 contributes +y[d-m] * C(e, m) * alpha**(e-m).
        vec = np.zeros(r, dtype=field.dtype)
        for j in range(min(d, e) + 1):
            c = int(binom[e, j])
            vec += pow_tab[:, e - j] * c % p * yv[d - j, :] % p
        rhs[d * r : (d + 1) * r] = vec % p
    return WbSystem(matrix=m, rhs=rhs, e=e, t=t)


def decode(params: CodeParams, y: NrtMatrix, e: int | None = None):
    """Run the full pipeline: solve, divide, re-encode, verify.

    Returns DecodeSuccess or DecodeFailure; received words beyond the error
    bound are an expected condition, never an exception.  Whenever y is
    within NRT distance e of a codeword of the code, that codeword's
    message is returned.
    """
    _check_received(params, y)
    radius = decoding_radius(params)
    if e is None:
        e = radius
    elif not 0 <= e <= radius:
        raise ParameterError(f"error bound {e} outside [0, {radius}]")

    work = y
    if not params.unit_multipliers:
        scaled = y.entries * params.inverse_multipliers() % params.p
        work = NrtMatrix(params.field, scaled)

    system = build_wb_system(params, work, e)
    sol = solve(params.field, system.matrix, system.rhs, nullspace=False)
    if sol is None:
        return DecodeFailure(FailureReason.NO_SOLUTION)
    n_poly, e_poly = system.split(params.field, sol.particular)
    assert e_poly.degree == e
    quotient, remainder = divmod(n_poly, e_poly)
    if not remainder.is_zero:
        return DecodeFailure(FailureReason.NON_DIVISIBLE)
    if quotient.degree > params.t - 1:
        return DecodeFailure(FailureReason.DISTANCE_EXCEEDED)
    weight = nrt_distance(encode(params, quotient), y)
    if weight > e:
        return DecodeFailure(FailureReason.DISTANCE_EXCEEDED)
    return DecodeSuccess(
        message=quotient, error_weight=weight, locator=e_poly, evaluator=n_poly
    )


def existence_witness(
    params: CodeParams, message: Poly, y: NrtMatrix, e: int
) -> tuple[Poly, Poly]:
    """A hand-built (E1, N1) solving the key equation for a close message.

    With Q the gap between the message and the degree-< rs interpolant of
    y, the locator E1 = X**(e-delta) * prod (X-alpha_j)**(s-nu_j) collects
    the deficient vanishing orders nu_j of Q, and N1 = E1 * message.  Used
    as a test oracle: it certifies the solved system is satisfiable
    whenever y lies within distance e of the code.
    """
    _check_received(params, y)
    params.field.require_same(message.field)
    field, p, s = params.field, params.p, params.s
    if not 0 <= e <= decoding_radius(params):
        raise ParameterError(f"error bound {e} outside [0, {decoding_radius(params)}]")
    if nrt_distance(encode(params, message), y) > e:
        raise ParameterError("message is farther than e from y")

    work = y
    if not params.unit_multipliers:
        scaled = y.entries * params.inverse_multipliers() % p
        work = NrtMatrix(field, scaled)
    gap = message - hermite_interpolate(params, work)
    orders = [gap.vanishing_order(alpha, cap=s) for alpha in params.alphas]
    delta = sum(s - nu for nu in orders)
    if delta < e and 0 in params.alphas:
        raise ParameterError(
            "witness padding X**(e-delta) would vanish at the evaluation point 0"
        )
    locator = Poly.monomial(field, e - delta)
    for alpha, nu in zip(params.alphas, orders):
        lin = Poly(field, (-alpha % p, 1))
        for _ in range(s - nu):
            locator = locator * lin
    return locator, locator * message
