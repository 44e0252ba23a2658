"""Brute-force ground truth.

Two independent oracles: a dynamic program that counts weighted paths step
by step between height 0 and a ceiling, and an enumeration of
I-permutations that evaluates the signed beta-products defining the
determinant vectors directly.  Neither uses the transfer matrices or the
determinant code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Union

from .errors import OrderTooLarge
from .model import StepModel
from .ring import ONE, ZERO, MPoly, RESERVED, rational_series

__all__ = [
    "PathCountTable",
    "IPermRecord",
    "SeriesReport",
    "dp_count",
    "iperm_sums",
    "verify_series",
    "MAX_IPERM_ORDER",
]

MAX_IPERM_ORDER = 8


@dataclass(frozen=True)
class PathCountTable:
    """``counts[n][h]``: weighted paths of length ``n`` from 0 to ``h`` inside ``[0, k]``."""

    k: int | None
    nmax: int
    counts: tuple[tuple[MPoly, ...], ...]

    def excursions(self, n: int) -> MPoly:
        return self.counts[n][0]

    def meanders(self, n: int, h: int) -> MPoly:
        row = self.counts[n]
        return row[h] if 0 <= h < len(row) else ZERO

    def all_meanders(self, n: int) -> MPoly:
        acc = ZERO
        for c in self.counts[n]:
            acc = acc + c
        return acc


def dp_count(model: StepModel, k: int | None, nmax: int) -> PathCountTable:
    """Weighted path counts up to length ``nmax`` with heights in ``[0, k]``.

    ``k=None`` removes the ceiling; a path of length ``n`` never climbs above
    ``n * max(S, 0)`` so the table is cut there.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    top = k if k is not None else nmax * max(max(model.steps), 0)
    if top < 0:
        raise ValueError("k must be >= 0")
    steps = [(s, model.weights[s]) for s in model.steps if model.weights[s]]
    layer = [ONE] + [ZERO] * top
    rows = [tuple(layer)]
    for _ in range(nmax):
        nxt = [ZERO] * (top + 1)
        for h in range(top + 1):
            acc = ZERO
            for s, w in steps:
                prev = h - s
                if 0 <= prev <= top and layer[prev]:
                    acc = acc + layer[prev] * w
            nxt[h] = acc
        layer = nxt
        rows.append(tuple(layer))
    return PathCountTable(k, nmax, tuple(rows))


@dataclass(frozen=True)
class IPermRecord:
    """Signed beta-product sums keyed by the subset ``I`` (a sorted tuple)."""

    k: int
    sums: dict[tuple[int, ...], MPoly] = field(hash=False)


def _beta(model: StepModel, s: int) -> MPoly:
    w = model.weights.get(s, ZERO)
    return ONE - w if s == 0 else -w


def iperm_sums(model: StepModel, k: int) -> IPermRecord:
    """Sum of ``sign(sigma) * prod beta_{sigma(i)-i}`` over I-permutations of order ``k``.

    An I-permutation of order ``k`` maps ``{0..k-1}`` bijectively onto
    ``I + [a, k-1]`` (for ``k >= a``) or onto ``I & [-b, k-1]`` when
    ``[k, a-1]`` lies inside ``I`` (for ``k < a``), fixing everything from
    ``k`` on.  Terms with a vanishing beta factor are pruned.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > MAX_IPERM_ORDER:
        raise OrderTooLarge(f"I-permutation enumeration is limited to k <= {MAX_IPERM_ORDER}")
    a, b = model.a, model.b
    betas = {s: _beta(model, s) for s in range(-b - k, a + k + 1)}
    sums: dict[tuple[int, ...], MPoly] = {}
    for I in itertools.combinations(range(-b, a), a):
        if k >= a:
            targets = list(I) + list(range(a, k))
        elif all(x in I for x in range(k, a)):
            targets = [x for x in I if x < k]
        else:
            sums[I] = ZERO
            continue
        sums[I] = _signed_sum(sorted(targets), k, betas)
    return IPermRecord(k, sums)


def _signed_sum(targets: list[int], k: int, betas: dict[int, MPoly]) -> MPoly:
    total = ZERO
    used = [False] * len(targets)

    def walk(i: int, inv: int, acc: MPoly) -> None:
        nonlocal total
        if i == k:
            total = total + (acc if inv % 2 == 0 else -acc)
            return
        for j, v in enumerate(targets):
            if used[j]:
                continue
            f = betas.get(v - i, ZERO)
            if not f:
                continue
            # chosen values larger than v, placed earlier, form inversions with it
            new_inv = sum(1 for jj in range(j + 1, len(targets)) if used[jj])
            used[j] = True
            walk(i + 1, inv + new_inv, acc * f)
            used[j] = False

    walk(0, 0, ONE)
    return total


Target = Union[str, int]


@dataclass(frozen=True)
class SeriesReport:
    """Coefficient-by-coefficient comparison of a fraction with DP counts."""

    model: str
    k: int
    target: Target
    nmax: int
    expected: tuple[MPoly, ...]
    actual: tuple[MPoly, ...]
    first_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def _degree_slices(p: MPoly, nmax: int) -> list[MPoly]:
    parts = p.homogeneous_components(RESERVED)
    return [parts.get(d, ZERO) for d in range(nmax + 1)]


def verify_series(
    model: StepModel,
    k: int,
    target: Target = "excursion",
    nmax: int = 10,
    route: str = "transfer",
) -> SeriesReport:
    """Compare ``num/F_{k+1}`` with path counts, degree by degree up to ``nmax``.

    ``target`` is ``"excursion"`` (num ``F_k``), an integer final height
    ``l`` (num ``F_{k,l}``) or ``"sum"`` (num ``G_k``, all final heights).
    ``route`` picks how the polynomials are produced: ``"transfer"`` uses
    the transfer matrices, ``"determinant"`` the band-matrix cofactors.
    Every step weight has no constant term, so a path of length ``n``
    contributes only in degrees ``>= n`` and the DP up to ``nmax`` steps is
    exact through degree ``nmax``.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if k < 0:
        raise ValueError("k must be >= 0")
    num, den = _fraction(model, k, target, route)
    table = dp_count(model, k, nmax)
    counted = ZERO
    for n in range(nmax + 1):
        if target == "excursion":
            c = table.excursions(n)
        elif target == "sum":
            c = table.all_meanders(n)
        else:
            c = table.meanders(n, int(target))
        counted = counted + c
    expected = _degree_slices(counted, nmax)
    actual = list(rational_series(num, den, nmax, None).coeffs)
    mismatch = next((d for d in range(nmax + 1) if expected[d] != actual[d]), None)
    return SeriesReport(model.to_text(), k, target, nmax, tuple(expected), tuple(actual), mismatch)


def _fraction(model: StepModel, k: int, target: Target, route: str) -> tuple[MPoly, MPoly]:
    # deferred imports keep the DP above free of any dependency on these paths
    if route == "transfer":
        from .meander import build_meander_system, iterate_Fkl
        from .transfer import F_sequence

        sys = build_meander_system(model)
        Fs = F_sequence(sys.base, k + 1)
        if target == "excursion":
            return Fs[k], Fs[k + 1]
        table = iterate_Fkl(sys, k)
        if target == "sum":
            return table.G(k), Fs[k + 1]
        l = int(target)
        return (table[k, l] if 0 <= l <= k else ZERO), Fs[k + 1]
    if route == "determinant":
        from .linalg import det
        from .meander import Fkl_column
        from .model import one_minus_A

        den = det(one_minus_A(model, k))
        col = Fkl_column(model, k)
        if target == "excursion":
            return col[0], den
        if target == "sum":
            acc = ZERO
            for c in col:
                acc = acc + c
            return acc, den
        l = int(target)
        return (col[l] if 0 <= l <= k else ZERO), den
    raise ValueError(f"unknown route {route!r}")
