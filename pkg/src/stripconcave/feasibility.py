"""Feasibility of boundary data for strip-concave arrays.

Nonemptiness of the set of arrays with prescribed boundary quadruple
``(lam, lam_bar, mu, nu)`` is decided by deficit-corrected partial-sum
inequalities indexed by subsets ``I`` of the rows.  Only ``n + 1`` subsets
ever need evaluating: for each size ``k`` the one maximizing
``(nu - mu)(I)``.  An exhaustive mode evaluating all ``2^n`` subsets is kept
for differential testing.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .core import (
    BoundarySpec,
    ConvexConfig,
    DeficitProfile,
    InputError,
    Rat,
    deficits,
    extend_to_trapezoid,
    is_weakly_decreasing,
    prefix_sum,
    rat_to_json,
)


@dataclass(frozen=True)
class Certificate:
    """Description of a violated condition, independently re-checkable.

    ``kind`` is one of ``monotone_lambda``, ``monotone_lambda_bar``,
    ``balance`` (structural) or ``subset`` (a partial-sum inequality, with
    the violated index set ``I``, its left-hand-side value and the deficit
    used).
    """

    kind: str
    subset: Optional[tuple] = None
    lhs: Optional[Rat] = None
    deficit: Optional[Rat] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.subset is not None:
            out["I"] = list(self.subset)
        if self.lhs is not None:
            out["lhs"] = rat_to_json(self.lhs)
        if self.deficit is not None:
            out["deficit"] = rat_to_json(self.deficit)
        return out


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    certificate: Optional[Certificate] = None

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
        }


def best_subset(weights: Sequence[Rat], k: int) -> tuple:
    """The size-``k`` subset of ``1..n`` maximizing the given weights.

    Ties are broken toward the lexicographically smallest index set, which
    keeps verdicts deterministic; any maximizer is equivalent for the
    decision itself.
    """
    order = sorted(range(len(weights)), key=lambda i: (-weights[i], i))
    return tuple(sorted(i + 1 for i in order[:k]))


def _structural(spec: BoundarySpec) -> Optional[Certificate]:
    if not is_weakly_decreasing(spec.lam):
        return Certificate("monotone_lambda")
    if not is_weakly_decreasing(spec.lam_bar):
        return Certificate("monotone_lambda_bar")
    if spec.balance() != 0:
        return Certificate("balance", lhs=spec.balance())
    return None


def _subset_values(spec: BoundarySpec, subset) -> Rat:
    return sum((spec.mu[i - 1] - spec.nu[i - 1] for i in subset), 0)


def _check_subsets(spec: BoundarySpec, n: int, lhs_base, exhaustive: bool):
    """Run the inequality family; ``lhs_base(k)`` gives the subset-free part."""
    weights = [spec.nu[i] - spec.mu[i] for i in range(n)]
    if exhaustive:
        for k in range(n + 1):
            for subset in combinations(range(1, n + 1), k):
                lhs = lhs_base(k) + _subset_values(spec, subset)
                if lhs < 0:
                    return Certificate("subset", subset=subset, lhs=lhs)
        return None
    for k in range(n + 1):
        subset = best_subset(weights, k)
        lhs = lhs_base(k) + _subset_values(spec, subset)
        if lhs < 0:
            return Certificate("subset", subset=subset, lhs=lhs)
    return None


def check_trapezoid(spec: BoundarySpec, n: int, m: int, exhaustive: bool = False) -> FeasibilityVerdict:
    """Feasibility for the trapezoid of size ``(n, m)``.

    Feasible iff both boundary tuples are weakly decreasing, the quadruple is
    balanced, and ``lam[1,|I|] + mu(I) - nu(I) - D_{|I|} >= 0`` for every
    subset ``I`` of ``1..n``.
    """
    if len(spec.lam) != n + m or len(spec.lam_bar) != m:
        raise InputError("lambda must have length n+m and lambda_bar length m")
    if len(spec.mu) != n or len(spec.nu) != n:
        raise InputError("mu and nu must have length n")
    cert = _structural(spec)
    if cert is not None:
        return FeasibilityVerdict(False, cert)
    profile = deficits(spec.lam, spec.lam_bar, n)

    def lhs_base(k):
        return prefix_sum(spec.lam, k) - profile[k]

    cert = _check_subsets(spec, n, lhs_base, exhaustive)
    if cert is not None and cert.kind == "subset":
        cert = Certificate("subset", cert.subset, cert.lhs, profile[len(cert.subset)])
    return FeasibilityVerdict(cert is None, cert)


def check_parallelogram(spec: BoundarySpec, n: int, m: int, exhaustive: bool = False) -> FeasibilityVerdict:
    """Feasibility for the parallelogram of size ``(n, m)``.

    For ``|I| <= m`` the inequality reads
    ``lam[1,|I|] - lam_bar[m-|I|+1, m] + mu(I) - nu(I) - D_{|I|} >= 0``;
    for larger subsets the deficit saturates and it degenerates to
    ``|lam| - |lam_bar| + mu(I) - nu(I) >= 0``.
    """
    if len(spec.lam) != m or len(spec.lam_bar) != m:
        raise InputError("lambda and lambda_bar must both have length m")
    if len(spec.mu) != n or len(spec.nu) != n:
        raise InputError("mu and nu must have length n")
    cert = _structural(spec)
    if cert is not None:
        return FeasibilityVerdict(False, cert)
    profile = deficits(spec.lam, spec.lam_bar, n)
    total = sum(spec.lam, 0) - sum(spec.lam_bar, 0)

    def lhs_base(k):
        if k <= m:
            tail = sum(spec.lam_bar[m - k:], 0)
            return prefix_sum(spec.lam, k) - tail - profile[k]
        return total

    cert = _check_subsets(spec, n, lhs_base, exhaustive)
    if cert is not None and cert.kind == "subset":
        k = len(cert.subset)
        cert = Certificate("subset", cert.subset, cert.lhs, profile[k] if k <= m else None)
    return FeasibilityVerdict(cert is None, cert)


def check_general(
    config: ConvexConfig,
    spec: BoundarySpec,
    c: Rat = None,
    exhaustive: bool = False,
) -> FeasibilityVerdict:
    """Feasibility for an arbitrary convex configuration.

    Reduces to the trapezoid of size ``(n, b_0)`` by the boundary extension;
    the extension preserves feasibility in both directions, and the violated
    subset of a negative verdict indexes the original rows.
    """
    tconfig, tspec, _ = extend_to_trapezoid(config, spec, c)
    return check_trapezoid(tspec, tconfig.n, tconfig.m, exhaustive)
