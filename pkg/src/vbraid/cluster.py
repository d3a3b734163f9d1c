"""Cluster seeds, mutations, the diamond-chain quiver, and the explicit
7-vertex R-operator in x- and y-coordinates.

Vertices are 1-based everywhere.  Matrix entries are plain Python ints; seeds
hold exact field values (Fractions or RationalFunctions, never mixed within
one seed).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .algebra import (
    FieldValue,
    Fraction,
    RationalFunction,
    as_function,
    field_pow,
    format_field_value,
    one_like,
    parse_field_value,
)
from .errors import InvalidStrandCount, SingularPoint

__all__ = [
    "ExchangeMatrix",
    "Seed",
    "YSeed",
    "build_quiver",
    "load_seed",
    "mutate_x",
    "mutate_y",
    "parse_mutation_script",
    "r_operator_x",
    "r_operator_x_inverse",
    "r_operator_y",
    "r_operator_y_inverse",
    "seed_to_json",
    "symbolic_seed",
    "symbolic_y_seed",
    "y_from_x",
]


@dataclass(frozen=True)
class ExchangeMatrix:
    """Antisymmetric integer exchange matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if any(len(row) != n for row in rows):
            raise ValueError("exchange matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"matrix not antisymmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "rows", rows)

    @property
    def n_vertices(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """b_ij with 1-based indices."""
        return self.rows[i - 1][j - 1]

    def _check_vertex(self, k: int) -> int:
        if not 1 <= k <= self.n_vertices:
            raise IndexError(f"vertex index {k} out of range 1..{self.n_vertices}")
        return k - 1

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Exchange-matrix mutation at vertex k:

        b'_ij = -b_ij when i = k or j = k, else
        b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
        """
        k0 = self._check_vertex(k)
        b = self.rows
        new_rows = []
        for i in range(len(b)):
            row = []
            for j in range(len(b)):
                if i == k0 or j == k0:
                    row.append(-b[i][j])
                else:
                    row.append(b[i][j] + (abs(b[i][k0]) * b[k0][j] + b[i][k0] * abs(b[k0][j])) // 2)
            new_rows.append(tuple(row))
        return ExchangeMatrix(tuple(new_rows))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def build_quiver(strands: int) -> ExchangeMatrix:
    """Adjacency matrix of the chain of ``strands`` diamonds on 3n+1 vertices.

    Diamond i uses vertices (3i-2, 3i-1, 3i, 3i+1) = (left, bottom, top,
    right); consecutive diamonds share the left/right corner.  Each diamond is
    the oriented 4-cycle left -> bottom -> right -> top -> left.
    """
    if strands < 2:
        raise InvalidStrandCount(f"strand count must be >= 2, got {strands}")
    size = 3 * strands + 1
    b = [[0] * size for _ in range(size)]

    def arrow(src: int, dst: int) -> None:
        b[src - 1][dst - 1] = 1
        b[dst - 1][src - 1] = -1

    for i in range(1, strands + 1):
        left, bottom, top, right = 3 * i - 2, 3 * i - 1, 3 * i, 3 * i + 1
        arrow(left, bottom)
        arrow(bottom, right)
        arrow(right, top)
        arrow(top, left)
    return ExchangeMatrix(tuple(tuple(row) for row in b))


def _check_seed(values: tuple[FieldValue, ...], matrix: ExchangeMatrix, label: str) -> None:
    if len(values) != matrix.n_vertices:
        raise ValueError(
            f"{label} tuple has {len(values)} entries for a {matrix.n_vertices}-vertex matrix"
        )


@dataclass(frozen=True)
class Seed:
    x: tuple[FieldValue, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        _check_seed(self.x, self.matrix, "x")


@dataclass(frozen=True)
class YSeed:
    y: tuple[FieldValue, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        _check_seed(self.y, self.matrix, "y")


def mutate_x(seed: Seed, k: int) -> Seed:
    """Seed mutation at vertex k:

    x'_k = (prod_{b_jk > 0} x_j^{b_jk} + prod_{b_jk < 0} x_j^{-b_jk}) / x_k,
    other coordinates unchanged, matrix mutated by the exchange rule.
    """
    matrix = seed.matrix
    matrix._check_vertex(k)
    pos = one_like(seed.x[0])
    neg = one_like(seed.x[0])
    for j in range(1, matrix.n_vertices + 1):
        b = matrix.entry(j, k)
        if b > 0:
            pos = pos * field_pow(seed.x[j - 1], b)
        elif b < 0:
            neg = neg * field_pow(seed.x[j - 1], -b)
    new_xk = (pos + neg) / seed.x[k - 1]
    new_x = seed.x[: k - 1] + (new_xk,) + seed.x[k:]
    return Seed(new_x, matrix.mutate(k))


def mutate_y(yseed: YSeed, k: int) -> YSeed:
    """Induced mutation on y-variables:

    y'_k = 1/y_k;  for i != k,
    y'_i = y_i (1 + 1/y_k)^{-b_ki}  when b_ki >= 0,
    y'_i = y_i (1 + y_k)^{-b_ki}    when b_ki <= 0.
    """
    matrix = yseed.matrix
    matrix._check_vertex(k)
    yk = yseed.y[k - 1]
    try:
        new_y = []
        for i in range(1, matrix.n_vertices + 1):
            if i == k:
                new_y.append(field_pow(yk, -1))
                continue
            b = matrix.entry(k, i)
            if b == 0:
                new_y.append(yseed.y[i - 1])
            elif b > 0:
                new_y.append(yseed.y[i - 1] * field_pow(1 + field_pow(yk, -1), -b))
            else:
                new_y.append(yseed.y[i - 1] * field_pow(1 + yk, -b))
    except SingularPoint:
        raise
    except ZeroDivisionError as exc:
        raise SingularPoint(f"y-mutation at vertex {k}: {exc}") from exc
    return YSeed(tuple(new_y), matrix.mutate(k))


def y_from_x(seed: Seed) -> tuple[FieldValue, ...]:
    """y_j = prod_k x_k^{b_kj} (empty product = 1)."""
    matrix = seed.matrix
    out = []
    for j in range(1, matrix.n_vertices + 1):
        val = one_like(seed.x[0])
        for k in range(1, matrix.n_vertices + 1):
            b = matrix.entry(k, j)
            if b:
                val = val * field_pow(seed.x[k - 1], b)
        out.append(val)
    return tuple(out)


def _guard_singular(fn):
    def wrapped(values):
        values = tuple(values)
        if len(values) != 7:
            raise ValueError(f"expected a 7-tuple, got {len(values)} entries")
        try:
            return fn(*values)
        except SingularPoint:
            raise
        except ZeroDivisionError as exc:
            raise SingularPoint(str(exc)) from exc

    return wrapped


@_guard_singular
def r_operator_x(x1, x2, x3, x4, x5, x6, x7):
    """The birational R-operator on the 7-vertex (two-diamond) quiver,
    x-coordinates.  Inverse of :func:`r_operator_x_inverse`."""
    return (
        x1,
        x5,
        (x1 * x3 * x5 + x3 * x4 * x5 + x1 * x2 * x6) / (x2 * x4),
        (x1 * x3 * x4 * x5 + x3 * x4 * x4 * x5 + x1 * x3 * x5 * x7 + x3 * x4 * x5 * x7 + x1 * x2 * x6 * x7)
        / (x2 * x4 * x6),
        (x3 * x4 * x5 + x3 * x5 * x7 + x2 * x6 * x7) / (x4 * x6),
        x3,
        x7,
    )


@_guard_singular
def r_operator_x_inverse(x1, x2, x3, x4, x5, x6, x7):
    return (
        x1,
        (x1 * x3 * x5 + x1 * x2 * x6 + x2 * x4 * x6) / (x3 * x4),
        x6,
        (x1 * x2 * x4 * x6 + x2 * x4 * x4 * x6 + x1 * x3 * x5 * x7 + x1 * x2 * x6 * x7 + x2 * x4 * x6 * x7)
        / (x3 * x4 * x5),
        x2,
        (x2 * x4 * x6 + x3 * x5 * x7 + x2 * x6 * x7) / (x4 * x5),
        x7,
    )


@_guard_singular
def r_operator_y(y1, y2, y3, y4, y5, y6, y7):
    """The same R-operator written in y-coordinates (y_j = prod x_k^{b_kj}).

    Setting y1 = y4 = y7 = -1 fixes coordinates 1, 4 and 7 at -1, and the
    remaining four coordinates reduce to the 4-window crossing kernel in
    (y2, y3, y5, y6)."""
    d = 1 + y2 + y6 + y2 * y6 + y2 * y4 * y6
    return (
        y1 * (1 + y2 + y2 * y4),
        y2 * y4 * y5 * y6 / d,
        d / (y2 * y4),
        y4 / ((1 + y2 + y2 * y4) * (1 + y6 + y4 * y6)),
        d / (y4 * y6),
        y2 * y3 * y4 * y6 / d,
        (1 + y6 + y4 * y6) * y7,
    )


@_guard_singular
def r_operator_y_inverse(y1, y2, y3, y4, y5, y6, y7):
    e = 1 + y4 + y3 * y4 + y4 * y5 + y3 * y4 * y5
    return (
        y1 * y3 * y4 / (1 + y4 + y3 * y4),
        y5 / e,
        e * y6,
        (1 + y4 + y3 * y4) * (1 + y4 + y4 * y5) / (y3 * y4 * y5),
        y2 * e,
        y3 / e,
        y4 * y5 * y7 / (1 + y4 + y4 * y5),
    )


# --- seed JSON and mutation scripts ----------------------------------------


def seed_to_json(seed: Seed | YSeed) -> dict:
    key, values, prefix = ("y", seed.y, "y") if isinstance(seed, YSeed) else ("x", seed.x, "x")
    return {
        "n_vertices": seed.matrix.n_vertices,
        key: [format_field_value(v, prefix) for v in values],
        "B": seed.matrix.to_lists(),
    }


def _parse_values(raw: list[str]) -> tuple[FieldValue, ...]:
    values = tuple(parse_field_value(str(s)) for s in raw)
    if any(isinstance(v, RationalFunction) for v in values):
        values = tuple(as_function(v) for v in values)
    return values


def load_seed(source: dict | str | Path) -> Seed | YSeed:
    """Load a seed from JSON: {"n_vertices": N, "x": [...], "B": [[...]]}.

    Entries may be exact rationals ("2/3") or symbolic expressions ("x1");
    if any entry is symbolic the whole tuple is promoted to rational
    functions.  A "y" key instead of "x" yields a YSeed.
    """
    if not isinstance(source, dict):
        source = json.loads(Path(source).read_text())
    matrix = ExchangeMatrix(tuple(tuple(int(v) for v in row) for row in source["B"]))
    n = int(source.get("n_vertices", matrix.n_vertices))
    if n != matrix.n_vertices:
        raise ValueError(f"n_vertices={n} does not match a {matrix.n_vertices}-vertex matrix")
    if "y" in source:
        return YSeed(_parse_values(source["y"]), matrix)
    if "x" not in source:
        raise ValueError("seed JSON needs an 'x' (or 'y') array")
    return Seed(_parse_values(source["x"]), matrix)


def parse_mutation_script(text: str) -> list[int]:
    """Comma-separated vertex list, e.g. ``7,4,2``."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty mutation script")
    return [int(p) for p in parts]


def symbolic_seed(matrix: ExchangeMatrix) -> Seed:
    """Seed whose x-tuple is the fresh variables x1..xN."""
    return Seed(tuple(RationalFunction.variable(i) for i in range(1, matrix.n_vertices + 1)), matrix)


def symbolic_y_seed(matrix: ExchangeMatrix) -> YSeed:
    return YSeed(tuple(RationalFunction.variable(i) for i in range(1, matrix.n_vertices + 1)), matrix)
