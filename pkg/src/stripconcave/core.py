"""Domain types for convex grids, strip-concave arrays and their boundary data.

All arithmetic is exact: entries are Python ints or ``fractions.Fraction``
values, never floats.  An array ``X = (x_{ij})`` lives on a convex
configuration with row bounds ``a_i <= j <= b_i``; its row derivative
``dx_{ij} = x_{ij} - x_{i,j-1}`` is a (generalized) Gelfand-Tsetlin pattern
when the two rhombus inequalities hold on every strip.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

Rat = Union[int, Fraction]


class InputError(ValueError):
    """Malformed or precondition-violating input (CLI exit code 2)."""


class InfeasibleError(Exception):
    """Raised when a witness is requested for infeasible boundary data.

    Carries the violation certificate (CLI exit code 1).
    """

    def __init__(self, certificate):
        super().__init__(f"infeasible boundary data: {certificate}")
        self.certificate = certificate


class InternalError(RuntimeError):
    """An internal guard tripped, e.g. an iteration cap (CLI exit code 3)."""


def rat(value) -> Rat:
    """Parse an exact rational from an int, Fraction or ``"p/q"`` string."""
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value if value.denominator != 1 else int(value)
    if isinstance(value, str):
        try:
            f = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
        return int(f) if f.denominator == 1 else f
    raise InputError(f"not a rational: {value!r} (floats are not accepted)")


def rat_to_json(value: Rat):
    """Encode an exact rational as an int, or ``"p/q"`` when non-integral."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    return value


def canonical_json(obj) -> str:
    """Serialize with sorted keys and fixed separators for byte-stable output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def prefix_sum(seq: Sequence[Rat], k: int) -> Rat:
    """Sum of the first ``k`` entries (``lam[1,k]`` in boundary notation)."""
    return sum(seq[:k], 0)


def is_weakly_decreasing(seq: Sequence[Rat]) -> bool:
    return all(x >= y for x, y in zip(seq, seq[1:]))


@dataclass(frozen=True)
class ConvexConfig:
    """Row bounds ``a_i <= j <= b_i`` of a convex triangular grid.

    Convexity: ``a_0 = 0``, the increments of ``a`` weakly increase from 0 to
    at most 1, the increments of ``b`` weakly decrease from at most 1 to 0.
    """

    n: int
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        n, a, b = self.n, self.a, self.b
        if n < 1 or len(a) != n + 1 or len(b) != n + 1:
            raise InputError(f"config needs n >= 1 and bound rows of length n+1, got n={n}")
        if a[0] != 0:
            raise InputError("config must have a_0 = 0")
        if any(a[i] > b[i] for i in range(n + 1)):
            raise InputError("config must have a_i <= b_i")
        da = [a[i + 1] - a[i] for i in range(n)]
        if any(d < 0 or d > 1 for d in da) or any(x > y for x, y in zip(da, da[1:])):
            raise InputError("increments of a must weakly increase within {0,1}")
        db = [b[i + 1] - b[i] for i in range(n)]
        if any(d < 0 or d > 1 for d in db) or any(x < y for x, y in zip(db, db[1:])):
            raise InputError("increments of b must weakly decrease within {0,1}")

    # -- constructors for the special shapes -------------------------------
    @classmethod
    def triangle(cls, n: int) -> "ConvexConfig":
        return cls(n, (0,) * (n + 1), tuple(range(n + 1)))

    @classmethod
    def trapezoid(cls, n: int, m: int) -> "ConvexConfig":
        return cls(n, (0,) * (n + 1), tuple(i + m for i in range(n + 1)))

    @classmethod
    def parallelogram(cls, n: int, m: int) -> "ConvexConfig":
        return cls(n, (0,) * (n + 1), (m,) * (n + 1))

    # -- classification ----------------------------------------------------
    @property
    def m(self) -> int:
        return self.b[0]

    @property
    def is_trapezoidal(self) -> bool:
        return all(x == 0 for x in self.a) and all(
            self.b[i] == i + self.m for i in range(self.n + 1)
        )

    @property
    def is_triangular(self) -> bool:
        return self.is_trapezoidal and self.m == 0

    @property
    def is_parallelogram(self) -> bool:
        return all(x == 0 for x in self.a) and all(x == self.m for x in self.b)

    def nodes(self) -> Iterator[tuple]:
        for i in range(self.n + 1):
            for j in range(self.a[i], self.b[i] + 1):
                yield (i, j)

    def size(self) -> int:
        return sum(self.b[i] - self.a[i] + 1 for i in range(self.n + 1))


@dataclass(frozen=True)
class StripConcaveArray:
    """Entries ``x_{ij}`` on a convex configuration, stored densely per row.

    Row ``i`` holds the values for ``j = a_i .. b_i``.  Construction checks
    shape only; concavity is checked explicitly by :func:`validate_array` so
    that intentionally invalid fixtures can be built.
    """

    config: ConvexConfig
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        c = self.config
        if len(rows) != c.n + 1:
            raise InputError("array must have n+1 rows")
        for i, row in enumerate(rows):
            if len(row) != c.b[i] - c.a[i] + 1:
                raise InputError(f"row {i} must have {c.b[i] - c.a[i] + 1} entries")

    def entry(self, i: int, j: int) -> Rat:
        return self.rows[i][j - self.config.a[i]]


@dataclass(frozen=True)
class GTPattern:
    """Row derivative ``dx_{ij} = x_{ij} - x_{i,j-1}`` of an array.

    Row ``i`` holds the values for ``j = a_i + 1 .. b_i``.
    """

    config: ConvexConfig
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        c = self.config
        if len(rows) != c.n + 1:
            raise InputError("pattern must have n+1 rows")
        for i, row in enumerate(rows):
            if len(row) != c.b[i] - c.a[i]:
                raise InputError(f"pattern row {i} must have {c.b[i] - c.a[i]} entries")

    def entry(self, i: int, j: int) -> Rat:
        return self.rows[i][j - self.config.a[i] - 1]


@dataclass(frozen=True)
class BoundarySpec:
    """Boundary quadruple (lambda, lambda_bar, mu, nu) of local differences."""

    lam: tuple
    lam_bar: tuple
    mu: tuple
    nu: tuple

    def __post_init__(self):
        for name in ("lam", "lam_bar", "mu", "nu"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def balance(self) -> Rat:
        """``|lam| - |lam_bar| + |mu| - |nu|`` (zero for any valid boundary)."""
        return (
            sum(self.lam, 0) - sum(self.lam_bar, 0) + sum(self.mu, 0) - sum(self.nu, 0)
        )


@dataclass(frozen=True)
class DeficitProfile:
    """Deficits ``D_k = sum_j max(0, lam_bar_{j-k} - lam_j)`` for k = 0..n."""

    values: tuple
    per_column: dict

    def __getitem__(self, k: int) -> Rat:
        return self.values[k]


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def pattern_constraints(config: ConvexConfig) -> Iterator[tuple]:
    """Yield the rhombus-inequality instances for a configuration.

    Each item is ``("upper", i, j)`` meaning ``dx_{ij} >= dx_{i-1,j}`` or
    ``("lower", i, j)`` meaning ``dx_{i-1,j} >= dx_{i,j+1}``.
    """
    a, b = config.a, config.b
    for i in range(1, config.n + 1):
        for j in range(a[i] + 1, b[i] + 1):
            if a[i - 1] + 1 <= j <= b[i - 1]:
                yield ("upper", i, j)
            if j < b[i] and a[i - 1] + 1 <= j <= b[i - 1]:
                yield ("lower", i, j)


def validate_pattern(p: GTPattern) -> bool:
    """True iff every rhombus inequality holds on the pattern entries."""
    for kind, i, j in pattern_constraints(p.config):
        if kind == "upper":
            if not p.entry(i, j) >= p.entry(i - 1, j):
                return False
        else:
            if not p.entry(i - 1, j) >= p.entry(i, j + 1):
                return False
    return True


def validate_array(x: StripConcaveArray) -> bool:
    """True iff ``x_00 = 0`` and the array is strip-concave."""
    if x.config.a[0] != 0 or x.rows[0][0] != 0:
        return False
    return validate_pattern(derivative(x))


def derivative(x: StripConcaveArray) -> GTPattern:
    """Row derivative ``dx_{ij} = x_{ij} - x_{i,j-1}``."""
    rows = tuple(
        tuple(row[k] - row[k - 1] for k in range(1, len(row))) for row in x.rows
    )
    return GTPattern(x.config, rows)


def integrate(p: GTPattern, mu: Sequence[Rat] = None) -> StripConcaveArray:
    """Rebuild an array from its row derivative and left boundary ``mu``.

    With ``mu`` omitted the left boundary is normalized to zero
    (``x_{i,a_i} = 0`` for every row).
    """
    c = p.config
    if mu is None:
        mu = (0,) * c.n
    if len(mu) != c.n:
        raise InputError("mu must have length n")
    rows = []
    left = 0
    for i in range(c.n + 1):
        if i > 0:
            left = left + mu[i - 1]
        row = [left]
        for d in p.rows[i]:
            row.append(row[-1] + d)
        rows.append(tuple(row))
    return StripConcaveArray(c, tuple(rows))


def boundary(x: StripConcaveArray) -> BoundarySpec:
    """Boundary quadruple of an array: lower/upper derivatives, side steps."""
    c = x.config
    p = derivative(x)
    lam = p.rows[c.n]
    lam_bar = p.rows[0]
    mu = tuple(x.entry(i, c.a[i]) - x.entry(i - 1, c.a[i - 1]) for i in range(1, c.n + 1))
    nu = tuple(x.entry(i, c.b[i]) - x.entry(i - 1, c.b[i - 1]) for i in range(1, c.n + 1))
    return BoundarySpec(lam, lam_bar, mu, nu)


def shift_mu(spec: BoundarySpec) -> BoundarySpec:
    """Normalize the left boundary to zero: ``(lam, lam_bar, 0^n, nu - mu)``.

    Corresponds to the row shift ``x'_{ij} = x_{ij} + q_i`` with
    ``q_i = -(mu_1 + ... + mu_i)``, which preserves the row derivative and
    hence feasibility.
    """
    n = len(spec.mu)
    nu = tuple(spec.nu[i] - spec.mu[i] for i in range(n))
    return BoundarySpec(spec.lam, spec.lam_bar, (0,) * n, nu)


def deficits(lam: Sequence[Rat], lam_bar: Sequence[Rat], n: int = None) -> DeficitProfile:
    """Deficit profile of a pair of weakly decreasing tuples.

    ``delta_k(j) = max(0, lam_bar_{j-k} - lam_j)`` with out-of-range indices
    contributing zero; ``D_k`` sums over the index range of ``lam``.
    """
    lam = tuple(lam)
    lam_bar = tuple(lam_bar)
    if not is_weakly_decreasing(lam) or not is_weakly_decreasing(lam_bar):
        raise InputError("deficits need weakly decreasing inputs")
    if n is None:
        n = len(lam) - len(lam_bar)
    if n < 0:
        raise InputError("lam must be at least as long as lam_bar")
    m = len(lam_bar)
    per_column = {}
    values = []
    for k in range(n + 1):
        total = 0
        for j in range(1, len(lam) + 1):
            if 1 <= j - k <= m:
                d = max(0, lam_bar[j - k - 1] - lam[j - 1])
            else:
                d = 0
            per_column[(k, j)] = d
            total = total + d
        values.append(total)
    return DeficitProfile(tuple(values), per_column)


def rough_bound(config: ConvexConfig, spec: BoundarySpec) -> Rat:
    """Default reduction constant: ``alpha * |V|^|V|`` (1 when alpha = 0).

    ``alpha`` is the largest absolute value among the boundary entries; the
    exponential bound is crude but exact, and arbitrary-precision integers
    absorb the size.
    """
    entries = spec.lam + spec.lam_bar + spec.mu + spec.nu
    alpha = max((abs(e) for e in entries), default=0)
    if alpha == 0:
        return 1
    size = config.size()
    return alpha * size**size


def extend_to_trapezoid(config: ConvexConfig, spec: BoundarySpec, c: Rat = None):
    """Embed a convex configuration into the trapezoid of size ``(n, b_0)``.

    New nodes on the left take derivative ``c`` and shift ``mu``; new nodes
    on the right take derivative ``-c`` and shift ``nu``.  For large enough
    ``c`` (default :func:`rough_bound`) feasibility is preserved in both
    directions and restricting any extended witness to the original index
    set yields a witness.

    Returns ``(trapezoid_config, extended_spec, embedding)`` where the
    embedding maps original index pairs to their (identical) images.
    """
    n = config.n
    a, b = config.a, config.b
    if len(spec.lam) != b[n] - a[n] or len(spec.lam_bar) != b[0]:
        raise InputError("boundary lengths do not match the configuration")
    if len(spec.mu) != n or len(spec.nu) != n:
        raise InputError("mu and nu must have length n")
    embedding = {(i, j): (i, j) for (i, j) in config.nodes()}
    if config.is_trapezoidal:
        return config, spec, embedding
    if c is None:
        c = rough_bound(config, spec)
    lam = list(spec.lam)
    mu = list(spec.mu)
    nu = list(spec.nu)
    if a[n] != 0:
        p = max(i for i in range(n + 1) if a[i] == 0)
        lam = [c] * (n - p) + lam
        for i in range(p, n):
            mu[i] = mu[i] - c
    if b[n] < b[0] + n:
        q = max(i for i in range(n + 1) if b[i] == b[0] + i)
        lam = lam + [-c] * (n - q)
        for i in range(q, n):
            nu[i] = nu[i] - c
    new_config = ConvexConfig.trapezoid(n, b[0])
    new_spec = BoundarySpec(tuple(lam), spec.lam_bar, tuple(mu), tuple(nu))
    return new_config, new_spec, embedding


def restrict_to(x: StripConcaveArray, config: ConvexConfig) -> StripConcaveArray:
    """Restrict an array on a larger configuration to a sub-configuration."""
    big = x.config
    if big.n != config.n:
        raise InputError("restriction requires equal row counts")
    for i in range(config.n + 1):
        if config.a[i] < big.a[i] or config.b[i] > big.b[i]:
            raise InputError("target configuration is not contained in the source")
    rows = tuple(
        tuple(x.entry(i, j) for j in range(config.a[i], config.b[i] + 1))
        for i in range(config.n + 1)
    )
    return StripConcaveArray(config, rows)


# ---------------------------------------------------------------------------
# JSON encoding
# ---------------------------------------------------------------------------

def config_to_json(config: ConvexConfig) -> dict:
    return {"n": config.n, "a": list(config.a), "b": list(config.b)}


def config_from_json(obj) -> ConvexConfig:
    if not isinstance(obj, dict) or not {"n", "a", "b"} <= set(obj):
        raise InputError("config JSON must be an object with keys n, a, b")
    return ConvexConfig(int(obj["n"]), tuple(obj["a"]), tuple(obj["b"]))


def _rows_to_json(rows) -> list:
    return [[rat_to_json(v) for v in row] for row in rows]


def _rows_from_json(obj) -> tuple:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise InputError("rows must be a list of lists")
    return tuple(tuple(rat(v) for v in row) for row in obj)


def _infer_array_config(rows) -> ConvexConfig:
    n = len(rows) - 1
    m = len(rows[0]) - 1
    config = ConvexConfig.trapezoid(n, m)
    for i, row in enumerate(rows):
        if len(row) != i + m + 1:
            raise InputError("bare array rows must form a trapezoid; pass a config otherwise")
    return config


def array_to_json(x: StripConcaveArray) -> dict:
    return {"config": config_to_json(x.config), "rows": _rows_to_json(x.rows)}


def array_from_json(obj, config: ConvexConfig = None) -> StripConcaveArray:
    if isinstance(obj, dict):
        config = config_from_json(obj.get("config")) if "config" in obj else config
        rows = _rows_from_json(obj.get("rows"))
    else:
        rows = _rows_from_json(obj)
    if config is None:
        config = _infer_array_config(rows)
    return StripConcaveArray(config, rows)


def pattern_to_json(p: GTPattern) -> dict:
    return {"config": config_to_json(p.config), "rows": _rows_to_json(p.rows)}


def pattern_from_json(obj, config: ConvexConfig = None) -> GTPattern:
    if isinstance(obj, dict):
        config = config_from_json(obj.get("config")) if "config" in obj else config
        rows = _rows_from_json(obj.get("rows"))
    else:
        rows = _rows_from_json(obj)
    if config is None:
        n = len(rows) - 1
        m = len(rows[0])
        config = ConvexConfig.trapezoid(n, m)
        for i, row in enumerate(rows):
            if len(row) != i + m:
                raise InputError("bare pattern rows must form a trapezoid; pass a config otherwise")
    return GTPattern(config, rows)


def spec_to_json(spec: BoundarySpec) -> dict:
    return {
        "lambda": [rat_to_json(v) for v in spec.lam],
        "lambda_bar": [rat_to_json(v) for v in spec.lam_bar],
        "mu": [rat_to_json(v) for v in spec.mu],
        "nu": [rat_to_json(v) for v in spec.nu],
    }


def spec_from_json(obj) -> BoundarySpec:
    if not isinstance(obj, dict) or "lambda" not in obj:
        raise InputError('boundary JSON must be an object with a "lambda" key')
    lam = tuple(rat(v) for v in obj["lambda"])
    lam_bar = tuple(rat(v) for v in obj.get("lambda_bar", []))
    nu = tuple(rat(v) for v in obj.get("nu", []))
    mu = tuple(rat(v) for v in obj.get("mu", (0,) * len(nu)))
    return BoundarySpec(lam, lam_bar, mu, nu)
