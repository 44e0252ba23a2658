"""Folded determinants for symmetric step sets.

When ``-S = S`` with mirrored weights, entry ``(i, j)`` of ``A_k`` equals
entry ``(k-i, k-j)`` and ``1 - A_k`` splits into two blocks of about half
the size, ``1 - A_k^+`` and ``1 - A_k^-``.  Their determinants ``F^+`` and
``F^-`` factor ``F_k``, and their column-0 cofactors ``F^+_{k,l}``,
``F^-_{k,l}`` give the sums and differences of mirrored meander series.

All identities here are checked after clearing denominators, as exact
polynomial equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IdentityFailed, NotSymmetric, TailNotZero
from .linalg import cofactors_in_column, det
from .meander import Fkl_column, build_meander_system, D_tilde_and_N_tilde
from .model import StepModel, one_minus_A, sym_band
from .ring import ONE, ZERO, MPoly
from .transfer import D_of_z

__all__ = [
    "SymReport",
    "sym_F",
    "sym_Fkl",
    "sym_meander_identities",
    "sym_meander_sum",
    "sym_numerators",
    "SymNumerators",
    "report_to_json",
]


def _require_symmetric(model: StepModel) -> None:
    if not model.is_symmetric():
        raise NotSymmetric(f"step model {model} is not symmetric")


def sym_F(model: StepModel, kmax: int) -> tuple[list[MPoly], list[MPoly]]:
    """``F^+_k`` and ``F^-_k`` for ``k <= kmax`` (both 1 at ``k = 0``)."""
    _require_symmetric(model)
    plus, minus = [ONE], [ONE]
    for k in range(1, kmax + 1):
        blocks = sym_band(model, k - 1)
        plus.append(det(blocks.plus))
        minus.append(det(blocks.minus))
    return plus, minus


def sym_Fkl(model: StepModel, k: int) -> tuple[list[MPoly], list[MPoly]]:
    """Column-0 cofactors of ``1 - A_k^+`` (``l <= k/2``) and ``1 - A_k^-`` (``l < k/2``)."""
    _require_symmetric(model)
    blocks = sym_band(model, k)
    minus = cofactors_in_column(blocks.minus, 0) if blocks.minus.rows else []
    return cofactors_in_column(blocks.plus, 0), minus


@dataclass
class SymReport:
    kmax: int
    F: list[MPoly]
    F_plus: list[MPoly]
    F_minus: list[MPoly]
    Fkl_plus: list[list[MPoly]]
    Fkl_minus: list[list[MPoly]]
    verdicts: list[tuple[str, bool]] = field(default_factory=list)
    failures: list[tuple[str, int, int | None]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(h for _, h in self.verdicts)


def _record(report: SymReport, name: str, results: list[tuple[bool, int, int | None]], strict: bool) -> None:
    holds = all(r for r, _, _ in results)
    report.verdicts.append((name, holds))
    for r, k, l in results:
        if not r:
            report.failures.append((name, k, l))
            if strict:
                raise IdentityFailed(f"{name} fails at k={k}, l={l}", k=k, ell=l)


def sym_meander_identities(model: StepModel, kmax: int, strict: bool = True) -> SymReport:
    """Check ``F_k = F^+_k F^-_k`` and the mirrored meander identities up to ``kmax``.

    For ``0 <= l < k/2``::

        (F_{k,l} + F_{k,k-l}) F^+_{k+1} == F^+_{k,l} F_{k+1}
        (F_{k,l} - F_{k,k-l}) F^-_{k+1} == F^-_{k,l} F_{k+1}

    and for even ``k`` the middle height ``F_{k,k/2} F^+_{k+1} == F^+_{k,k/2} F_{k+1}``.
    """
    _require_symmetric(model)
    F = [ONE] + [det(one_minus_A(model, k)) for k in range(kmax + 1)]
    plus, minus = sym_F(model, kmax + 1)
    report = SymReport(kmax, F, plus, minus, [], [])
    _record(
        report,
        "F_plus_times_F_minus_equals_F",
        [(plus[k] * minus[k] == F[k], k, None) for k in range(kmax + 2)],
        strict,
    )
    sums, diffs, middles = [], [], []
    for k in range(kmax + 1):
        col = Fkl_column(model, k)
        fp, fm = sym_Fkl(model, k)
        report.Fkl_plus.append(fp)
        report.Fkl_minus.append(fm)
        for l in range((k + 1) // 2):
            sums.append(((col[l] + col[k - l]) * plus[k + 1] == fp[l] * F[k + 1], k, l))
            diffs.append(((col[l] - col[k - l]) * minus[k + 1] == fm[l] * F[k + 1], k, l))
        if k % 2 == 0:
            m = k // 2
            middles.append((col[m] * plus[k + 1] == fp[m] * F[k + 1], k, m))
    _record(report, "mirrored_sum_plus", sums, strict)
    _record(report, "mirrored_difference_minus", diffs, strict)
    _record(report, "middle_height_plus", middles, strict)
    return report


def sym_meander_sum(model: StepModel, kmax: int, strict: bool = True) -> list[tuple[MPoly, MPoly]]:
    """``(P_k, F^+_{k+1})`` with ``P_k = sum_{l <= k/2} F^+_{k,l}`` and ``M_k = P_k / F^+_{k+1}``.

    Verifies ``G_k F^+_{k+1} == P_k F_{k+1}`` and the cancelled form
    ``G_k == P_k F^-_{k+1}``.
    """
    _require_symmetric(model)
    plus, minus = sym_F(model, kmax + 1)
    out = []
    for k in range(kmax + 1):
        G = ZERO
        for c in Fkl_column(model, k):
            G = G + c
        P = ZERO
        for c in sym_Fkl(model, k)[0]:
            P = P + c
        F_next = plus[k + 1] * minus[k + 1]
        if strict and (G * plus[k + 1] != P * F_next or G != P * minus[k + 1]):
            raise IdentityFailed(f"symmetric meander sum fails at k={k}", k=k)
        out.append((P, plus[k + 1]))
    return out


@dataclass(frozen=True)
class SymNumerators:
    """Numerators over ``D(z^2)`` and ``Dt(u z^2) D(z^2)`` with the bounds used."""

    N_plus: MPoly
    N_minus: MPoly
    Nt_plus: MPoly
    Nt_minus: MPoly
    bound: int
    order: int
    bound_bivariate: int
    order_bivariate: int


def _truncate(p: MPoly, lo: int, hi: int) -> MPoly:
    z = MPoly.var("z")
    out = ZERO
    for e, c in p.coeffs_in("z").items():
        if lo <= e <= hi:
            out = out + c * z**e
    return out


def _series_times(seq: list[MPoly], den: MPoly, order: int) -> MPoly:
    """``(sum seq[k] z^k) * den`` up to ``z^order``."""
    dparts = sorted(den.coeffs_in("z").items())
    z = MPoly.var("z")
    out = ZERO
    for n in range(order + 1):
        acc = ZERO
        for e, c in dparts:
            if e > n:
                break
            if seq[n - e]:
                acc = acc + c * seq[n - e]
        if acc:
            out = out + acc * z**n
    return out


def sym_numerators(
    model: StepModel,
    order: int | None = None,
    margin: int | None = None,
    order_bivariate: int | None = None,
) -> SymNumerators:
    """Numerators of the folded generating functions, by series matching.

    ``sum F^+_k z^k`` times ``D(z^2)`` must be a polynomial; its coefficients
    are computed up to ``order`` and those past ``bound = deg D(z^2) + margin``
    must vanish (``margin`` defaults to ``2a + 2``; the folded recurrence only
    starts once ``k - 1 > 2a``).  The bivariate series with denominator
    ``Dt(u z^2) D(z^2)`` is treated the same way.  Raises
    :class:`TailNotZero` when a trailing coefficient survives.
    """
    _require_symmetric(model)
    a = model.a
    sys = build_meander_system(model)
    z, u = MPoly.var("z"), MPoly.var("u")
    D2 = D_of_z(sys.base).substitute({"z": z**2})
    Dt, _ = D_tilde_and_N_tilde(sys)
    den_b = Dt.substitute({"z": u * z**2}) * D2
    margin = 2 * a + 2 if margin is None else margin
    bound = D2.degree("z") + margin
    order = 2 * bound if order is None else order
    bound_b = den_b.degree("z") + margin
    order_b = bound_b + max(margin, 2 * a + 2) if order_bivariate is None else order_bivariate
    if order < bound or order_b < bound_b:
        raise ValueError("series order must reach the numerator bound")

    plus, minus = sym_F(model, order)
    nums = []
    for name, seq in (("F_plus", plus), ("F_minus", minus)):
        prod = _series_times(seq, D2, order)
        tail = _truncate(prod, bound + 1, order)
        if tail:
            raise TailNotZero(f"D(z^2) * sum {name} z^k has terms past degree {bound}")
        nums.append(_truncate(prod, 0, bound))

    kmax_b = order_b
    rows_p, rows_m = [], []
    for k in range(kmax_b + 1):
        fp, fm = sym_Fkl(model, k)
        rows_p.append(fp)
        rows_m.append(fm)
    for name, rows in (("F_plus", rows_p), ("F_minus", rows_m)):
        seq = []
        for k, row in enumerate(rows):
            acc = ZERO
            for l, f in enumerate(row):
                if f:
                    acc = acc + f * u**l
            seq.append(acc)
        prod = _series_times(seq, den_b, order_b)
        tail = _truncate(prod, bound_b + 1, order_b)
        if tail:
            raise TailNotZero(f"Dt(uz^2) D(z^2) * sum {name}_kl u^l z^k has terms past degree {bound_b}")
        nums.append(_truncate(prod, 0, bound_b))
    return SymNumerators(*nums, bound, order, bound_b, order_b)


def report_to_json(report: SymReport) -> dict:
    polys = {}
    for k, (p, m) in enumerate(zip(report.F_plus, report.F_minus)):
        polys[f"F_plus_{k}"] = str(p)
        polys[f"F_minus_{k}"] = str(m)
    return {
        "polynomials": polys,
        "verdicts": [{"identity": n, "holds": h} for n, h in report.verdicts],
    }
