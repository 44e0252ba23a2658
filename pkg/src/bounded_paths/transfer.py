"""Transfer matrix on a-subsets for the determinants ``F_k``.

The vertices are the ``a``-subsets ``I`` of ``[-b, a-1]``; ``T[I, J]`` is
``eps_s(I) * beta_s`` when ``I + {a} == (J + 1) + {s}`` as sets, where
``eps_s(I)`` is the parity sign of the number of elements of ``I`` below
``s``.  Starting from the indicator of ``I_0 = [0, a-1]`` the iterates
``T^k e_{I_0}`` carry ``F_k = det(1 - A_{k-1})`` at ``I_0``, so
``sum F_k z^k = N(z)/D(z)`` with ``D = det(1 - zT)`` and ``N`` the
``(I_0, I_0)`` cofactor of ``1 - zT``.

The same construction with a shifted universe and other step weights gives
the auxiliary matrix used for meanders, so :class:`TransferMatrix` is
parametrised by the top step ``a``, the depth ``b`` and a table of betas.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .errors import DegreeMismatch, LeadingTermMismatch
from .linalg import PolyMatrix, cofactor, det
from .model import StepModel, beta
from .ring import ONE, ZERO, MPoly, rational_series

__all__ = [
    "SubsetIndex",
    "TransferMatrix",
    "FVector",
    "epsilon_s",
    "build_T",
    "transfer_matrix",
    "iterate_F",
    "D_of_z",
    "N_of_z",
    "det_T_closed_form",
    "unique_arc_violations",
    "forced_cycle_violations",
    "export_graph",
    "T_to_json",
]


def _comb(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


class SubsetIndex:
    """All ``size``-subsets of ``[lo, lo + n - 1]`` as bitmasks, ascending.

    Bit ``i`` of a mask stands for the element ``lo + i``.
    """

    def __init__(self, lo: int, n: int, size: int):
        if n < 0 or not 0 <= size <= n:
            raise ValueError("bad subset index parameters")
        self.lo = lo
        self.n = n
        self.size = size
        masks = [sum(1 << i for i in c) for c in itertools.combinations(range(n), size)]
        self.masks: tuple[int, ...] = tuple(sorted(masks))
        self.position: dict[int, int] = {m: i for i, m in enumerate(self.masks)}

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self):
        return iter(self.masks)

    def elements(self, mask: int) -> tuple[int, ...]:
        return tuple(self.lo + i for i in range(self.n) if mask >> i & 1)

    def mask_of(self, elems: Iterable[int]) -> int:
        m = 0
        for x in elems:
            i = x - self.lo
            if not 0 <= i < self.n:
                raise ValueError(f"{x} is outside [{self.lo}, {self.lo + self.n - 1}]")
            m |= 1 << i
        return m

    def marks(self, mask: int) -> str:
        """``y``/``n`` per universe element from ``lo`` upward."""
        return "".join("y" if mask >> i & 1 else "n" for i in range(self.n))

    def label(self, mask: int) -> str:
        return "{" + ",".join(str(x) for x in self.elements(mask)) + "}"


def epsilon_s(I: Iterable[int], s: int) -> int:
    """``(-1) ** #{i in I : i < s}``."""
    return -1 if sum(1 for i in I if i < s) % 2 else 1


@dataclass(frozen=True)
class TransferMatrix:
    """``T`` together with its subset index and distinguished vertices.

    ``a`` is the top step and ``b`` the depth, so vertices are ``a``-subsets
    of ``[-b, a-1]``; ``betas`` holds ``beta_s`` for ``-b <= s <= a``.
    """

    index: SubsetIndex
    a: int
    b: int
    betas: Mapping[int, MPoly]
    mat: PolyMatrix

    @property
    def dim(self) -> int:
        return len(self.index)

    @property
    def I0(self) -> int:
        return self.I(0)

    def I(self, m: int) -> int:
        """``[m, m+a-1]`` reduced modulo ``a+b`` into ``[-b, a-1]``."""
        if not -self.b <= m <= self.a:
            raise ValueError(f"I_m defined for {-self.b} <= m <= {self.a}")
        period = self.a + self.b
        elems = [((x + self.b) % period) - self.b for x in range(m, m + self.a)]
        return self.index.mask_of(elems)

    def entry(self, I: int, J: int) -> MPoly:
        return self.mat[self.index.position[I], self.index.position[J]]

    def nonzero(self) -> list[tuple[int, int, MPoly]]:
        out = []
        for i, I in enumerate(self.index.masks):
            for j, J in enumerate(self.index.masks):
                e = self.mat[i, j]
                if e:
                    out.append((I, J, e))
        return out


def transfer_matrix(a: int, b: int, betas: Mapping[int, MPoly]) -> TransferMatrix:
    """Assemble ``T`` for top step ``a`` and depth ``b`` from ``beta_s``."""
    if a < 0 or b < 1:
        raise ValueError("need a >= 0 and b >= 1")
    index = SubsetIndex(-b, a + b, a)
    top_bit = 1 << (a + b)  # the element a sits just above the universe
    rows = []
    for I in index.masks:
        X = I | top_bit
        row = []
        for J in index.masks:
            Y = J << 1
            entry = ZERO
            if not Y & ~X:
                rest = X & ~Y
                # |X| = |Y| + 1, so a single element s remains
                assert rest and rest & (rest - 1) == 0, "multiset condition admits two steps"
                bit = rest.bit_length() - 1
                s = -b + bit
                entry = betas.get(s, ZERO)
                if bin(I & (rest - 1)).count("1") % 2:
                    entry = -entry
            row.append(entry)
        rows.append(row)
    mat = PolyMatrix(rows, cols=len(index), row_labels=index.masks, col_labels=index.masks)
    return TransferMatrix(index, a, b, dict(betas), mat)


def build_T(model: StepModel) -> TransferMatrix:
    model.require_transfer()
    a, b = model.a, model.b
    return transfer_matrix(a, b, {s: beta(model, s) for s in range(-b, a + 1)})


@dataclass(frozen=True)
class FVector:
    index: SubsetIndex
    k: int
    entries: tuple[MPoly, ...]

    def __getitem__(self, mask: int) -> MPoly:
        return self.entries[self.index.position[mask]]

    def as_dict(self) -> dict[int, MPoly]:
        return dict(zip(self.index.masks, self.entries))


def _sparse_rows(mat: PolyMatrix) -> list[list[tuple[int, MPoly]]]:
    return [[(j, e) for j, e in enumerate(row) if e] for row in mat.entries]


def _apply(rows: list[list[tuple[int, MPoly]]], vec: list[MPoly]) -> list[MPoly]:
    out = []
    for row in rows:
        acc = ZERO
        for j, e in row:
            v = vec[j]
            if v:
                acc = acc + e * v
        out.append(acc)
    return out


def iterate_F(T: TransferMatrix, kmax: int) -> list[FVector]:
    """``F_0 = e_{I_0}`` and ``F_{k+1} = T F_k`` for ``k < kmax``."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    rows = _sparse_rows(T.mat)
    vec = [ONE if m == T.I0 else ZERO for m in T.index.masks]
    out = [FVector(T.index, 0, tuple(vec))]
    for k in range(1, kmax + 1):
        vec = _apply(rows, vec)
        out.append(FVector(T.index, k, tuple(vec)))
    return out


def F_sequence(T: TransferMatrix, kmax: int) -> list[MPoly]:
    """``F_0 .. F_kmax`` read at ``I_0``."""
    return [v[T.I0] for v in iterate_F(T, kmax)]


def one_minus_zT(T: TransferMatrix, zvar: MPoly | None = None) -> PolyMatrix:
    zvar = MPoly.var("z") if zvar is None else zvar
    n = T.dim
    return PolyMatrix.from_function(
        n,
        n,
        lambda i, j: (ONE if i == j else ZERO) - zvar * T.mat[i, j],
        row_labels=T.index.masks,
        col_labels=T.index.masks,
    )


def det_T_closed_form(T: TransferMatrix) -> tuple[MPoly, MPoly]:
    """``det(T)`` and the unsigned product ``beta_{-b}^C(a+b-1,a-1) * beta_a^C(a+b-1,a)``."""
    a, b = T.a, T.b
    expected = T.betas.get(-b, ZERO) ** _comb(a + b - 1, a - 1) * T.betas.get(a, ZERO) ** _comb(a + b - 1, a)
    return det(T.mat), expected


def _degenerate(T: TransferMatrix) -> bool:
    return not T.betas.get(-T.b) or not T.betas.get(T.a)


def _fail(T: TransferMatrix, exc: type[Exception], msg: str) -> None:
    if _degenerate(T):
        warnings.warn(msg + " (extreme step has zero weight; degree formula does not apply)", RuntimeWarning, stacklevel=3)
    else:
        raise exc(msg)


def D_of_z(T: TransferMatrix) -> MPoly:
    """``det(1 - zT)``; checks degree ``C(a+b, a)`` and the leading coefficient."""
    D = det(one_minus_zT(T))
    d = T.dim
    if D.degree("z") != d:
        _fail(T, DegreeMismatch, f"deg_z D = {D.degree('z')}, expected {d}")
    lead = D.coeff("z", d)
    _, expected = det_T_closed_form(T)
    if lead != expected and lead != -expected:
        _fail(T, LeadingTermMismatch, f"leading coefficient {lead} is not +-{expected}")
    return D


def N_of_z(T: TransferMatrix, D: MPoly | None = None) -> MPoly:
    """``(I_0, I_0)`` cofactor of ``1 - zT``; checks degree and ``D * sum F_k z^k``."""
    p = T.index.position[T.I0]
    N = cofactor(one_minus_zT(T), p, p)
    d = T.dim
    expected = d - T.a - T.b
    if N.degree("z") != expected:
        _fail(T, DegreeMismatch, f"deg_z N = {N.degree('z')}, expected {expected}")
    D = D_of_z(T) if D is None else D
    K = 2 * d
    Fs = F_sequence(T, K)
    series = rational_series(N, D, K, "z")
    for k, (f, c) in enumerate(zip(Fs, series.coeffs)):
        if f != c:
            raise AssertionError(f"N/D series disagrees with transfer iteration at z^{k}")
    return N


# -- structural checks ----------------------------------------------------------


def unique_arc_violations(T: TransferMatrix) -> list[str]:
    """Rows through ``-b`` and columns missing ``a-1`` must each have one arc.

    A row ``I`` containing ``-b`` has its only nonzero entry equal to
    ``beta_{-b}`` at ``J`` with ``I + {a} == (J+1) + {-b}``; a column ``J``
    without ``a-1`` has its only nonzero entry ``(-1)^a beta_a`` at ``J+1``.
    """
    idx = T.index
    low = idx.mask_of([-T.b])
    top = idx.mask_of([T.a - 1])
    out = []
    nz = T.nonzero()
    for I in idx.masks:
        if I & low:
            arcs = [(J, e) for (I2, J, e) in nz if I2 == I]
            if len(arcs) > 1 or any(e != T.betas.get(-T.b, ZERO) for _, e in arcs):
                out.append(f"row {idx.label(I)}: {[(idx.label(J), str(e)) for J, e in arcs]}")
            for J, _ in arcs:
                if (I | (1 << (T.a + T.b))) != ((J << 1) | 1):
                    out.append(f"row {idx.label(I)}: arc to {idx.label(J)} breaks the -b shift")
    sign = -1 if T.a % 2 else 1
    for J in idx.masks:
        if not J & top:
            arcs = [(I, e) for (I, J2, e) in nz if J2 == J]
            if len(arcs) > 1 or any(e != sign * T.betas.get(T.a, ZERO) for _, e in arcs):
                out.append(f"column {idx.label(J)}: {[(idx.label(I), str(e)) for I, e in arcs]}")
            for I, _ in arcs:
                if I != J << 1:
                    out.append(f"column {idx.label(J)}: arc from {idx.label(I)} is not J+1")
    return out


def forced_cycle_violations(T: TransferMatrix) -> list[str]:
    """The cycle ``I_a -> I_{a-1} -> ... -> I_0`` is forced in both directions."""
    out = []
    nz = T.nonzero()
    for m in range(1, T.a + 1):
        succ = [J for (I, J, _) in nz if I == T.I(m)]
        if succ != [T.I(m - 1)]:
            out.append(f"out-neighbours of I_{m}: {[T.index.label(J) for J in succ]}")
    for m in range(-T.b, 0):
        pred = [I for (I, J, _) in nz if J == T.I(m)]
        if pred != [T.I(m + 1)]:
            out.append(f"in-neighbours of I_{m}: {[T.index.label(I) for I in pred]}")
    return out


# -- export -------------------------------------------------------------------


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def dot_nodes_and_edges(T: TransferMatrix, prefix: str, gray: int) -> list[str]:
    lines = []
    for I in T.index.masks:
        attrs = f'label="{T.index.marks(I)}"'
        if I == gray:
            attrs += ", style=filled, fillcolor=gray"
        lines.append(f"  {prefix}{I} [{attrs}];")
    for I, J, e in T.nonzero():
        lines.append(f'  {prefix}{I} -> {prefix}{J} [label="{_dot_escape(str(e))}"];')
    return lines


def export_graph(T: TransferMatrix, name: str = "G") -> str:
    """Graphviz text: one node per subset (``y``/``n`` marks), one arc per nonzero entry."""
    lines = [f"digraph {name} {{"]
    lines += dot_nodes_and_edges(T, "v", T.I0)
    lines.append("}")
    return "\n".join(lines) + "\n"


def T_to_json(T: TransferMatrix) -> str:
    labels = [T.index.label(I) for I in T.index.masks]
    doc = {
        "a": T.a,
        "b": T.b,
        "subsets": labels,
        "I0": T.index.label(T.I0),
        "entries": [[str(T.mat[i, j]) for j in range(T.dim)] for i in range(T.dim)],
    }
    return json.dumps(doc, indent=2)
