"""Step sets with formal weights and the band matrices they define.

A :class:`StepModel` is a finite set of integer steps ``S`` with a weight
polynomial attached to each step.  Heights are confined to ``0..k`` by the
adjacency matrix ``A_k`` of the graph on ``{0, ..., k}`` with an arc
``i -> j`` whenever ``j - i`` is a step; the entry ``(i, j)`` of
``1 - A_k`` is ``beta(j - i)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import InvalidModel, NotSymmetric, ParseError
from .linalg import PolyMatrix
from .ring import ONE, RESERVED, ZERO, MPoly, parse

__all__ = [
    "StepModel",
    "SymBandMatrices",
    "parse_steps",
    "default_weight_name",
    "beta",
    "one_minus_A",
    "sym_band",
]


def default_weight_name(s: int) -> str:
    """``w_2`` for step 2, ``w_m1`` for step -1."""
    return f"w_{s}" if s >= 0 else f"w_m{-s}"


@dataclass(frozen=True)
class StepModel:
    """A validated step set ``S`` with weights ``omega_s``.

    Steps with weight 0 stay in ``S`` (so ``a`` and ``b`` are unchanged) but
    contribute nothing to any matrix.
    """

    steps: tuple[int, ...]
    weights: Mapping[int, MPoly] = field(compare=False)
    _key: tuple = field(init=False, repr=False, compare=True)

    def __post_init__(self):
        steps = tuple(sorted(set(int(s) for s in self.steps)))
        if not steps:
            raise InvalidModel("the step set must be nonempty")
        weights = {}
        for s in steps:
            w = self.weights.get(s) if self.weights is not None else None
            w = MPoly.var(default_weight_name(s)) if w is None else MPoly.coerce(w)
            bad = set(w.gens) & set(RESERVED)
            if bad:
                raise InvalidModel(f"weight of step {s} uses reserved variable(s) {sorted(bad)}")
            if w.constant_term():
                raise InvalidModel(f"weight of step {s} has a nonzero constant term: {w}")
            weights[s] = w
        extra = set(self.weights or {}) - set(steps)
        if extra:
            raise InvalidModel(f"weights given for steps not in S: {sorted(extra)}")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "weights", MappingProxyType(weights))
        object.__setattr__(self, "_key", (steps, tuple(weights[s] for s in steps)))

    @classmethod
    def from_text(cls, text: str) -> "StepModel":
        steps, weights = parse_steps(text)
        return cls(steps, weights)

    @property
    def a(self) -> int:
        return max(self.steps)

    @property
    def b(self) -> int:
        return -min(self.steps)

    def omega(self, s: int) -> MPoly:
        return self.weights.get(s, ZERO)

    def beta(self, s: int) -> MPoly:
        return beta(self, s)

    def weight_variables(self) -> tuple[str, ...]:
        names = set()
        for w in self.weights.values():
            names.update(w.gens)
        return tuple(sorted(names))

    def require_transfer(self) -> None:
        """Raise unless there is a positive and a negative step."""
        if self.a < 1 or self.b < 1:
            raise InvalidModel(f"transfer matrices need a >= 1 and b >= 1 (got a={self.a}, b={self.b})")

    def is_symmetric(self) -> bool:
        return set(self.steps) == {-s for s in self.steps} and all(
            self.weights[s] == self.weights[-s] for s in self.steps
        )

    def to_text(self) -> str:
        return ",".join(f"{s}:{self.weights[s]}" for s in self.steps)

    def __str__(self) -> str:
        return self.to_text()


_PAIR_RE = re.compile(r"^\s*([+-]?\d+)\s*:\s*(.+?)\s*$")


def parse_steps(text: str) -> tuple[list[int], dict[int, MPoly]]:
    """Parse ``"1:t,-1:t"``.  A bare step (``"2"``) gets its default weight."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty step-set text")
    steps: list[int] = []
    weights: dict[int, MPoly] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty entry in step set {text!r}")
        m = _PAIR_RE.match(chunk)
        if m:
            s = int(m.group(1))
            w = parse(m.group(2))
        elif re.fullmatch(r"[+-]?\d+", chunk):
            s = int(chunk)
            w = MPoly.var(default_weight_name(s))
        else:
            raise ParseError(f"cannot read step entry {chunk!r}")
        if s in weights:
            raise ParseError(f"step {s} listed twice")
        steps.append(s)
        weights[s] = w
    return steps, weights


def beta(model: StepModel, s: int) -> MPoly:
    """``delta(s, 0)`` minus the weight of ``s`` (0 when ``s`` is not a step)."""
    w = model.weights.get(s, ZERO)
    return (ONE - w) if s == 0 else -w


def one_minus_A(model: StepModel, k: int) -> PolyMatrix:
    """The ``(k+1) x (k+1)`` matrix ``1 - A_k`` with entry ``beta(j - i)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    betas = {d: beta(model, d) for d in range(-k, k + 1)}
    return PolyMatrix.from_function(k + 1, k + 1, lambda i, j: betas[j - i])


@dataclass(frozen=True)
class SymBandMatrices:
    """``1 - A_k^+`` (indices ``0..floor(k/2)``) and ``1 - A_k^-`` (``0..ceil(k/2)-1``)."""

    k: int
    plus: PolyMatrix
    minus: PolyMatrix


def sym_band(model: StepModel, k: int) -> SymBandMatrices:
    if k < 0:
        raise ValueError("k must be >= 0")
    if not model.is_symmetric():
        raise NotSymmetric(f"step model {model} is not symmetric")
    w = model.omega
    n_plus = k // 2 + 1
    n_minus = k - k // 2

    def plus(i: int, j: int) -> MPoly:
        # 2*j == k is the middle vertex: no reflected term
        a = w(j - i) + (w(k - j - i) if 2 * j < k else ZERO)
        return (ONE if i == j else ZERO) - a

    def minus(i: int, j: int) -> MPoly:
        return (ONE if i == j else ZERO) - (w(j - i) - w(k - j - i))

    return SymBandMatrices(
        k,
        PolyMatrix.from_function(n_plus, n_plus, plus),
        PolyMatrix.from_function(n_minus, n_minus, minus),
    )
