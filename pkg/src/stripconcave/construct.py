"""Witness construction for feasible boundary data.

The triangular case is solved by a recursion that peels off the last column
difference; the output is always a vertex of the corresponding polytope and
is integral for integer data.  The trapezoidal case repeatedly truncates
matching extreme entries of the two boundary tuples and otherwise lowers a
run of entries of both tuples by a common step, rebuilding the array through
a ramp lift.  The default step is the largest one that keeps the tuples
ordered (with the lift applied in exact sub-steps); a unit-step mode matching
the inductive argument verbatim is available for integer data and serves as
a differential-testing oracle.
"""
from __future__ import annotations

from typing import Sequence

from .core import (
    BoundarySpec,
    ConvexConfig,
    GTPattern,
    InfeasibleError,
    InputError,
    InternalError,
    Rat,
    StripConcaveArray,
    derivative,
    extend_to_trapezoid,
    integrate,
    is_weakly_decreasing,
    prefix_sum,
    restrict_to,
    shift_mu,
)
from .feasibility import Certificate, check_general, check_trapezoid


def _majorization_violation(lam: Sequence[Rat], nu: Sequence[Rat]):
    """Return a violated subset certificate, or None if nu is majorized."""
    n = len(nu)
    order = sorted(range(n), key=lambda i: (-nu[i], i))
    running = 0
    for k in range(1, n + 1):
        running = running + nu[order[k - 1]]
        if running > prefix_sum(lam, k):
            subset = tuple(sorted(i + 1 for i in order[:k]))
            lhs = prefix_sum(lam, k) - running
            return Certificate("subset", subset=subset, lhs=lhs, deficit=0)
    if sum(lam, 0) != sum(nu, 0):
        return Certificate("balance", lhs=sum(lam, 0) - sum(nu, 0))
    return None


def _triangular_rows(lam: tuple, nu: tuple) -> list:
    """Pattern rows (row i of length i) for the triangular recursion."""
    n = len(lam)
    if n == 0:
        return [()]
    if n == 1:
        return [(), (lam[0],)]
    # smallest p with lam_p >= nu_n >= lam_{p+1}
    p = next((p for p in range(1, n) if lam[p] <= nu[-1]), None)
    if p is None:
        raise InternalError("no pivot position for a feasible triangular boundary")
    lam_prime = lam[: p - 1] + (lam[p - 1] + lam[p] - nu[-1],) + lam[p + 1 :]
    rows = _triangular_rows(lam_prime, nu[:-1])
    rows.append(lam)
    return rows


def build_triangular(lam: Sequence[Rat], nu: Sequence[Rat]) -> StripConcaveArray:
    """Witness array with boundary ``(lam, 0^n, nu)`` on the triangle.

    Requires ``lam`` weakly decreasing, ``|lam| = |nu|`` and every partial
    sum of ``nu`` bounded by the matching prefix of ``lam`` (majorization).
    The output has ``x_{nj} = lam[1,j]``, is integral for integer data, and
    is a vertex: its tight rhombus equalities determine it uniquely.
    """
    lam = tuple(lam)
    nu = tuple(nu)
    if len(lam) != len(nu):
        raise InputError("lambda and nu must have equal length")
    if not is_weakly_decreasing(lam):
        raise InputError("lambda must be weakly decreasing")
    violation = _majorization_violation(lam, nu)
    if violation is not None:
        raise InfeasibleError(violation)
    rows = _triangular_rows(lam, nu)
    return integrate(GTPattern(ConvexConfig.triangle(len(lam)), tuple(rows)))


# ---------------------------------------------------------------------------
# trapezoid construction
# ---------------------------------------------------------------------------

def _pick_rs(lam, lab):
    """Indices of the runs to lower: lam_r >= lab_1 = .. = lab_s > next."""
    m = len(lab)
    top = lab[0]
    r = max(j for j in range(1, len(lam) + 1) if lam[j - 1] >= top)
    s = 1
    while s < m and lab[s] == top:
        s += 1
    return r, s


def _ramp_shape(rows, alpha, s):
    """Positions receiving the lift: for each row the s slots after p(i).

    ``p(i)`` is the number of entries strictly greater than ``alpha`` (rows
    are weakly decreasing).
    """
    shape = []
    for row in rows:
        p = 0
        while p < len(row) and row[p] > alpha:
            p += 1
        shape.append(p)
    return shape


def _apply_lift(rows, shape, s, step):
    for i, p in enumerate(shape):
        row = rows[i]
        for j in range(p, min(p + s, len(row))):
            row[j] = row[j] + step


def _max_substep(rows, shape, s, cap):
    """Largest lift step keeping the pattern rhombus inequalities valid.

    The lift adds ``step`` to positions ``p(i) < j <= p(i) + s`` of row
    ``i``; an inequality constrains the step only where the added indicator
    decreases across it, and then the current slack is the bound.
    """
    bound = cap

    def chi(i, j):  # 1-based column j
        return 1 if shape[i] < j <= shape[i] + s else 0

    n = len(rows) - 1
    for i in range(1, n + 1):
        row = rows[i]
        up = rows[i - 1]
        for j in range(1, len(row) + 1):
            if j <= len(up) and chi(i, j) < chi(i - 1, j):
                bound = min(bound, row[j - 1] - up[j - 1])
            if j <= len(up) and j + 1 <= len(row) and chi(i - 1, j) < chi(i, j + 1):
                bound = min(bound, up[j - 1] - row[j])
    return bound


def _solve_trapezoid(lam: tuple, lab: tuple, nu: tuple, verbatim: bool) -> list:
    """Pattern rows for a feasible normalized spec (mu = 0, lam nonnegative)."""
    n = len(nu)
    size = len(lam)
    ops = []
    outer_cap = 10 * (size + 1) ** 2 + (sum(lam, 0) if verbatim else 0) + size + 2
    outer = 0
    while True:
        outer += 1
        if outer > outer_cap:
            raise InternalError("trapezoid construction exceeded its iteration cap")
        m = len(lab)
        if m == 0:
            rows = [list(r) for r in _triangular_rows(lam, nu)]
            break
        if lam[-1] == lab[-1]:
            ops.append(("column", lab[-1]))
            lam, lab = lam[:-1], lab[:-1]
            continue
        if lam[0] == lab[0]:
            ops.append(("prepend", lam[0]))
            lam, lab = lam[1:], lab[1:]
            continue
        r, s = _pick_rs(lam, lab)
        after = max(lam[r] if r < len(lam) else 0, lab[s] if s < m else 0)
        step = 1 if verbatim else lab[0] - after
        ops.append(("lift", r, s, step))
        lam = tuple(v - step if r - s + 1 <= j + 1 <= r else v for j, v in enumerate(lam))
        lab = tuple(v - step if j < s else v for j, v in enumerate(lab))
    for op in reversed(ops):
        if op[0] == "column":
            # re-add the truncated column: every row derivative there is value
            value = op[1]
            for row in rows:
                row.append(value)
        elif op[0] == "prepend":
            value = op[1]
            for row in rows:
                row.insert(0, value)
        else:
            _, r, s, step = op
            if step == 1 and all(isinstance(v, int) for row in rows for v in row):
                alpha = rows[-1][r - s]
                shape = _ramp_shape(rows, alpha, s)
                _apply_lift(rows, shape, s, 1)
            else:
                remaining = step
                inner_cap = 10 * (size + 1) ** 2
                inner = 0
                while remaining > 0:
                    inner += 1
                    if inner > inner_cap:
                        raise InternalError("lift phase exceeded its iteration cap")
                    alpha = rows[-1][r - s]
                    shape = _ramp_shape(rows, alpha, s)
                    eps = _max_substep(rows, shape, s, remaining)
                    if eps <= 0:
                        raise InternalError("lift phase stalled with zero slack")
                    _apply_lift(rows, shape, s, eps)
                    remaining = remaining - eps
    return rows


def build_trapezoid(
    lam: Sequence[Rat],
    lam_bar: Sequence[Rat],
    nu: Sequence[Rat],
    verbatim: bool = False,
) -> StripConcaveArray:
    """Witness array with boundary ``(lam, lam_bar, 0^n, nu)`` on the trapezoid.

    ``verbatim=True`` lowers the boundary tuples one unit at a time (integer
    data only); the default takes the largest exact step at once.  Integer
    inputs yield an integer array either way.
    """
    lam = tuple(lam)
    lam_bar = tuple(lam_bar)
    nu = tuple(nu)
    n, m = len(nu), len(lam_bar)
    if len(lam) != n + m:
        raise InputError("lambda must have length n+m")
    spec = BoundarySpec(lam, lam_bar, (0,) * n, nu)
    verdict = check_trapezoid(spec, n, m)
    if not verdict.feasible:
        raise InfeasibleError(verdict.certificate)
    if verbatim and not all(
        isinstance(v, int) for v in lam + lam_bar + nu
    ):
        raise InputError("the unit-step mode requires integer data")
    # shift so that lambda is nonnegative (adds a constant to every pattern
    # entry and to each nu entry)
    t = -min(lam) if min(lam, default=0) < 0 else 0
    rows = _solve_trapezoid(
        tuple(v + t for v in lam),
        tuple(v + t for v in lam_bar),
        tuple(v + t for v in nu),
        verbatim,
    )
    if t:
        rows = [[v - t for v in row] for row in rows]
    pattern = GTPattern(ConvexConfig.trapezoid(n, m), tuple(tuple(r) for r in rows))
    return integrate(pattern)


def mu_general_build(
    config: ConvexConfig,
    spec: BoundarySpec,
    c: Rat = None,
    verbatim: bool = False,
) -> StripConcaveArray:
    """Witness array for an arbitrary convex configuration and boundary.

    Extends to the trapezoid, normalizes the left boundary away, builds a
    trapezoidal witness, then undoes the shift and restricts back.
    """
    verdict = check_general(config, spec, c)
    if not verdict.feasible:
        raise InfeasibleError(verdict.certificate)
    tconfig, tspec, _ = extend_to_trapezoid(config, spec, c)
    normalized = shift_mu(tspec)
    flat = build_trapezoid(normalized.lam, normalized.lam_bar, normalized.nu, verbatim)
    witness = integrate(derivative(flat), tspec.mu)
    return restrict_to(witness, config)


def reduce_to_triangle(lam: Sequence[Rat], lam_bar: Sequence[Rat]) -> tuple:
    """Triangular boundary tuple with the same feasible right boundaries.

    ``lam'_k`` accumulates, over ``t = k..n+m``, the overlap length of the
    segment between consecutive ``lam`` entries with the segment between
    ``lam_1`` and ``lam_bar_{t-k+1}`` (missing entries read as zero); both
    segments are taken between the min and max of their endpoints.  The
    result is weakly decreasing with ``|lam'| = |lam| - |lam_bar|``, and a
    right boundary ``nu`` is feasible for ``(lam, lam_bar)`` exactly when it
    is majorized by ``lam'``.
    """
    lam = tuple(lam)
    lam_bar = tuple(lam_bar)
    if not is_weakly_decreasing(lam) or not is_weakly_decreasing(lam_bar):
        raise InputError("boundary tuples must be weakly decreasing")
    if lam and lam[-1] < 0:
        raise InputError("lambda must be nonnegative (shift first)")
    n = len(lam) - len(lam_bar)
    if n < 0:
        raise InputError("lambda must be at least as long as lambda_bar")
    for j in range(len(lam_bar)):
        below = lam[j + n] if j + n < len(lam) else 0
        if not below <= lam_bar[j] <= lam[j]:
            raise InputError(
                "incompatible shapes: need lam_{j+n} <= lam_bar_j <= lam_j"
            )
    size = len(lam)
    top = lam[0] if lam else 0

    def ext_lam(j):  # 1-based with lam_{n+m+1} = 0
        return lam[j - 1] if j <= size else 0

    def ext_bar(j):  # 1-based with trailing zeros
        return lam_bar[j - 1] if j <= len(lam_bar) else 0

    def overlap(a1, b1, a2, b2):
        lo = max(min(a1, b1), min(a2, b2))
        hi = min(max(a1, b1), max(a2, b2))
        return hi - lo if hi > lo else 0

    out = []
    for k in range(1, n + 1):
        total = 0
        for t in range(k, size + 1):
            total = total + overlap(ext_lam(t + 1), ext_lam(t), ext_bar(t - k + 1), top)
        out.append(total)
    return tuple(out)
