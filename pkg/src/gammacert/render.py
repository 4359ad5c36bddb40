"""Human-readable rendering: quadratic forms, regrouped forms, ASCII grids.

The gamma monomials print as ``g0^2`` / ``g0*g2``.  Plain quadratic forms are
listed diagonal by diagonal (index sum ascending, spread ascending within a
diagonal).  The regrouped view rewrites each diagonal through its prefix sums

    sum_t c_t m_t  =  A_0 (m_0 - m_1) + A_1 (m_1 - m_2) + ... + A_last m_last

which exhibits the form as visibly nonnegative whenever the gamma vector is
log-concave without internal zeros (every bracketed difference m_t - m_{t+1}
is then nonnegative, and the prefix sums A_t always are).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import CoeffTable
from .paths import LatticePath, PathConfig


def monomial(j: int, k: int) -> str:
    return f"g{j}^2" if j == k else f"g{j}*g{k}"


def _join_terms(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out: list[str] = []
    for coeff, text in parts:
        if not out:
            out.append(f"-{abs(coeff)} {text}" if coeff < 0 else f"{coeff} {text}")
        else:
            out.append(f"{'-' if coeff < 0 else '+'} {abs(coeff)} {text}")
    return " ".join(out)


def format_quadratic_form(table: CoeffTable, include_zeros: bool = False) -> str:
    """One-line rendering like ``h_3^2 - h_2*h_4 = 175 g0^2 + 120 g0*g1 + ...``."""
    parts: list[tuple[int, str]] = []
    for s in range(2 * table.kmax + 1):
        for j, k in table.diagonal_pairs(s):
            c = table.value(j, k)
            if c != 0 or include_zeros:
                parts.append((c, monomial(j, k)))
    i = table.i
    return f"h_{i}^2 - h_{i - 1}*h_{i + 1} = " + _join_terms(parts)


@dataclass(frozen=True)
class RegroupedDiagonal:
    """One diagonal rewritten through prefix sums."""

    index_sum: int
    pairs: tuple[tuple[int, int], ...]
    values: tuple[int, ...]
    prefix_sums: tuple[int, ...]


def regroup(table: CoeffTable) -> list[RegroupedDiagonal]:
    out = []
    for s in range(2 * table.kmax + 1):
        pairs = tuple(table.diagonal_pairs(s))
        values = tuple(table.value(j, k) for j, k in pairs)
        prefix: list[int] = []
        running = 0
        for v in values:
            running += v
            prefix.append(running)
        out.append(RegroupedDiagonal(s, pairs, values, tuple(prefix)))
    return out


def format_regrouped(table: CoeffTable) -> str:
    """Rendering with each diagonal bracketed into telescoping differences."""
    chunks: list[str] = []
    for diag in regroup(table):
        if all(v == 0 for v in diag.values):
            continue
        if len(diag.pairs) == 1:
            chunks.append(_join_terms([(diag.values[0], monomial(*diag.pairs[0]))]))
            continue
        inner: list[str] = []
        for t, a in enumerate(diag.prefix_sums):
            if a == 0:
                continue
            if t + 1 < len(diag.pairs):
                inner.append(f"{a} ({monomial(*diag.pairs[t])} - {monomial(*diag.pairs[t + 1])})")
            else:
                inner.append(f"{a} {monomial(*diag.pairs[t])}")
        chunks.append("[" + " + ".join(inner) + "]")
    i = table.i
    return f"h_{i}^2 - h_{i - 1}*h_{i + 1} = " + (" + ".join(chunks) if chunks else "0")


def render_grid(cfg: PathConfig, path: LatticePath | None = None) -> str:
    """ASCII picture of the configuration, optionally with one path overlaid.

    Legend: ``o`` base diagonal, ``x`` shifted diagonal, ``*`` path vertex,
    ``B``/``S`` path vertex on the base/shifted diagonal, ``O`` origin,
    ``D`` destination.
    """
    xmax = max(cfg.dest[0], cfg.n - cfg.i + 1, 0)
    ymax = max(cfg.dest[1], cfg.i, 0)
    cells = {}
    for pt in cfg.base.points:
        cells[pt] = "o"
    for pt in cfg.shifted.points:
        cells[pt] = "x"
    cells.setdefault(cfg.origin, "O")
    if cfg.dest[1] >= 0:
        cells[cfg.dest] = "D"
    if path is not None:
        base_pts, shifted_pts = cfg.base.point_set, cfg.shifted.point_set
        for v in path.vertices():
            if v in base_pts:
                cells[v] = "B"
            elif v in shifted_pts:
                cells[v] = "S"
            else:
                cells[v] = "*"
    lines = [
        f"n={cfg.n} i={cfg.i} r={cfg.r}: O={cfg.origin} D={cfg.dest} "
        f"P={cfg.p} Q={cfg.q} P'={cfg.p_prime} Q'={cfg.q_prime}"
    ]
    for y in range(ymax, -1, -1):
        row = " ".join(cells.get((x, y), ".") for x in range(xmax + 1))
        lines.append(f"y={y:<2} {row}")
    lines.append(f"     x = 0 .. {xmax}")
    lines.append("legend: o base diagonal, x shifted diagonal, * path, B/S path on diagonal, O origin, D end")
    return "\n".join(lines)
