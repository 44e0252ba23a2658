"""Bounded meanders: the cofactors ``F_{k,l}`` and their generating function.

``F_{k,l}`` is the ``(l, 0)`` cofactor of ``1 - A_k``, so the generating
function of meanders of height at most ``k`` ending at ``l`` is
``F_{k,l} / F_{k+1}``.  The cofactors are produced by a second transfer
matrix ``Tt`` built like ``T`` on ``(a-1)``-subsets of ``[-b-1, a-2]`` with
weights ``beta~_s = -beta_{s+1}``, and a 0/1 matrix ``U`` linking a subset
``I`` of the shifted system to ``I + {a-1}``:

    F_{k,l} = (Tt^l  U  T^(k-l))[I~_0, I_0].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .errors import DegreeMismatch, IdentityFailed, IndexOutOfRange
from .linalg import PolyMatrix, cofactor, cofactors_in_column
from .model import StepModel, beta, one_minus_A
from .ring import ONE, ZERO, MPoly, rational_series, reduce_fraction
from .transfer import (
    TransferMatrix,
    _apply,
    _fail,
    _sparse_rows,
    build_T,
    D_of_z,
    dot_nodes_and_edges,
    iterate_F,
    unique_arc_violations,
    forced_cycle_violations,
    one_minus_zT,
    transfer_matrix,
)

__all__ = [
    "MeanderSystem",
    "MeanderTable",
    "MeanderSum",
    "build_meander_system",
    "iterate_Fkl",
    "Fkl_by_cofactor",
    "Fkl_column",
    "D_tilde_and_N_tilde",
    "meander_sums",
    "bivariate_gf_residual",
    "hgraph_violations",
    "export_hgraph",
    "table_to_json",
]


@dataclass(frozen=True)
class MeanderSystem:
    model: StepModel
    base: TransferMatrix
    tilde: TransferMatrix
    U: PolyMatrix

    @property
    def I0(self) -> int:
        return self.base.I0

    @property
    def It0(self) -> int:
        return self.tilde.I0


def build_meander_system(model: StepModel) -> MeanderSystem:
    model.require_transfer()
    a, b = model.a, model.b
    base = build_T(model)
    tilde_betas = {s: -beta(model, s + 1) for s in range(-b - 1, a)}
    tilde = transfer_matrix(a - 1, b + 1, tilde_betas)
    rows = []
    for I in tilde.index.masks:
        elems = tilde.index.elements(I)
        target = None
        if -b - 1 not in elems:
            target = base.index.mask_of(elems + (a - 1,))
        rows.append([ONE if J == target else ZERO for J in base.index.masks])
    U = PolyMatrix(rows, cols=len(base.index), row_labels=tilde.index.masks, col_labels=base.index.masks)
    return MeanderSystem(model, base, tilde, U)


@dataclass(frozen=True)
class MeanderTable:
    """Triangular table ``F[k][l]`` for ``0 <= l <= k <= kmax``."""

    kmax: int
    rows: tuple[tuple[MPoly, ...], ...]

    def __getitem__(self, kl: tuple[int, int]) -> MPoly:
        k, l = kl
        if not 0 <= l <= k <= self.kmax:
            raise IndexOutOfRange(f"F_{{{k},{l}}} outside the table")
        return self.rows[k][l]

    def G(self, k: int) -> MPoly:
        acc = ZERO
        for f in self.rows[k]:
            acc = acc + f
        return acc

    def bivariate(self) -> MPoly:
        """``sum F_{k,l} u^l z^k`` over the table."""
        u, z = MPoly.var("u"), MPoly.var("z")
        acc = ZERO
        for k, row in enumerate(self.rows):
            for l, f in enumerate(row):
                if f:
                    acc = acc + f * u**l * z**k
        return acc


def iterate_Fkl(sys: MeanderSystem, kmax: int) -> MeanderTable:
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    Fs = iterate_F(sys.base, kmax)
    trows = _sparse_rows(sys.tilde.mat)
    urows = _sparse_rows(sys.U)
    pos = sys.tilde.index.position[sys.It0]
    table = [[ZERO] * (k + 1) for k in range(kmax + 1)]
    for j in range(kmax + 1):
        vec = _apply(urows, list(Fs[j].entries))
        table[j][0] = vec[pos]
        for l in range(1, kmax - j + 1):
            vec = _apply(trows, vec)
            table[j + l][l] = vec[pos]
    return MeanderTable(kmax, tuple(tuple(r) for r in table))


def Fkl_by_cofactor(model: StepModel, k: int, l: int) -> MPoly:
    """``(l, 0)`` cofactor of ``1 - A_k``."""
    if not 0 <= l <= k:
        raise IndexOutOfRange(f"need 0 <= l <= k, got k={k}, l={l}")
    return cofactor(one_minus_A(model, k), l, 0)


def Fkl_column(model: StepModel, k: int) -> list[MPoly]:
    """``[F_{k,0}, ..., F_{k,k}]`` from one fraction-free solve."""
    return cofactors_in_column(one_minus_A(model, k), 0)


def D_tilde_and_N_tilde(sys: MeanderSystem) -> tuple[MPoly, MPoly]:
    """``det(1 - z Tt)`` and the numerator of ``sum F_{k,l} u^l z^k``.

    The numerator is ``sum over U[I,J]=1`` of
    ``cofactor(1 - u z Tt, I, I~_0) * cofactor(1 - z T, I_0, J)``.
    """
    a, b = sys.base.a, sys.base.b
    Dt = D_of_z(sys.tilde)
    uz = MPoly.var("u") * MPoly.var("z")
    tilde_m = one_minus_zT(sys.tilde, uz)
    base_m = one_minus_zT(sys.base)
    left = cofactors_in_column(tilde_m, sys.tilde.index.position[sys.It0])
    right = cofactors_in_column(base_m.transpose(), sys.base.index.position[sys.I0])
    Nt = ZERO
    for i, I in enumerate(sys.tilde.index.masks):
        for j, J in enumerate(sys.base.index.masks):
            if sys.U[i, j] == ONE and left[i] and right[j]:
                Nt = Nt + left[i] * right[j]
    z_deg = comb(a + b + 1, a) - a - b - 1
    u_deg = comb(a + b, a - 1) - a
    if Nt.degree("z") != z_deg:
        _fail(sys.base, DegreeMismatch, f"deg_z Nt = {Nt.degree('z')}, expected {z_deg}")
    elif Nt.coeff("z", z_deg).degree("u") != u_deg:
        _fail(sys.base, DegreeMismatch, f"u-degree of the dominant z-term of Nt is not {u_deg}")
    return Dt, Nt


def bivariate_gf_residual(table: MeanderTable, Dt: MPoly, D: MPoly, Nt: MPoly) -> MPoly:
    """``(sum F_{k,l} u^l z^k) * Dt(uz) * D(z) - Nt`` truncated at ``z^kmax``.

    Zero exactly when the generating-function identity holds to that order.
    """
    K = table.kmax
    z = MPoly.var("z")
    Dt_uz = Dt.substitute({"z": MPoly.var("u") * z})
    prod = table.bivariate() * Dt_uz * D - Nt
    parts = prod.coeffs_in("z")
    out = ZERO
    for e, c in parts.items():
        if e <= K:
            out = out + c * z**e
    return out


@dataclass(frozen=True)
class MeanderSum:
    """``M_k = G / F_next`` with ``G = sum_l F_{k,l}`` and ``F_next = F_{k+1}``."""

    k: int
    G: MPoly
    F_next: MPoly

    def reduced(self) -> tuple[MPoly, MPoly]:
        return reduce_fraction(self.G, self.F_next)


def meander_sums(sys: MeanderSystem, kmax: int, check: bool = True) -> list[MeanderSum]:
    """``(G_k, F_{k+1})`` for ``k <= kmax``.

    With ``check``, the generating function of the ``G_k`` is confirmed to be
    ``Nt(1, z) / (Dt(z) D(z))`` on the computed range, i.e. the ``G_k`` obey
    the linear recurrence of order ``C(a+b+1, a)`` given by ``Dt(z) D(z)``.
    """
    table = iterate_Fkl(sys, kmax)
    Fs = [v[sys.I0] for v in iterate_F(sys.base, kmax + 1)]
    out = [MeanderSum(k, table.G(k), Fs[k + 1]) for k in range(kmax + 1)]
    if check:
        D = D_of_z(sys.base)
        Dt, Nt = D_tilde_and_N_tilde(sys)
        num = Nt.substitute({"u": 1})
        series = rational_series(num, Dt * D, kmax, "z")
        for m in out:
            if series[m.k] != m.G:
                raise IdentityFailed(f"G_{m.k} disagrees with Nt(1,z)/(Dt D)", k=m.k)
    return out


def hgraph_violations(sys: MeanderSystem) -> list[str]:
    """Unique-arc and forced-cycle checks on both graphs plus the conditions on the U arcs."""
    out = [f"G: {v}" for v in unique_arc_violations(sys.base) + forced_cycle_violations(sys.base)]
    out += [f"Gt: {v}" for v in unique_arc_violations(sys.tilde) + forced_cycle_violations(sys.tilde)]
    a, b = sys.base.a, sys.base.b
    for i, I in enumerate(sys.tilde.index.masks):
        elems = sys.tilde.index.elements(I)
        ones = [J for j, J in enumerate(sys.base.index.masks) if sys.U[i, j]]
        if any(sys.U[i, j] not in (ZERO, ONE) for j in range(sys.U.cols)):
            out.append(f"U row {sys.tilde.index.label(I)} has an entry other than 0/1")
        if -b - 1 in elems and ones:
            out.append(f"U arc leaves {sys.tilde.index.label(I)} which contains -b-1")
        for J in ones:
            if sys.base.index.elements(J) != tuple(sorted(elems + (a - 1,))):
                out.append(f"U arc {sys.tilde.index.label(I)} -> {sys.base.index.label(J)} is not I + {{a-1}}")
        if -b - 1 not in elems and len(ones) != 1:
            out.append(f"U row {sys.tilde.index.label(I)} has {len(ones)} arcs")
    return out


def export_hgraph(sys: MeanderSystem) -> str:
    """Graphviz text for both graphs and the U arcs (``w*`` nodes are shifted subsets)."""
    lines = ["digraph H {"]
    lines += dot_nodes_and_edges(sys.tilde, "w", sys.It0)
    lines += dot_nodes_and_edges(sys.base, "v", sys.I0)
    for i, I in enumerate(sys.tilde.index.masks):
        for j, J in enumerate(sys.base.index.masks):
            if sys.U[i, j]:
                lines.append(f'  w{I} -> v{J} [label="1", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def table_to_json(table: MeanderTable) -> str:
    doc = {f"F_{k},{l}": str(table[k, l]) for k in range(table.kmax + 1) for l in range(k + 1)}
    return json.dumps(doc, indent=2)
