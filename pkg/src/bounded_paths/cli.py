"""Batch command-line front end.

Every subcommand takes ``--steps`` and emits one document on stdout::

    bounded-paths fk --steps "1:t,-1:t" --kmax 4
    bounded-paths recurrence --steps "0:0,1:t1,-1:t1,2:t2,-2:t2" --output json
    bounded-paths series --steps "1:t,-1:t" --k 0 --nmax 5 --verify
    bounded-paths graph --steps "1:t,-2:t" --which H

Exit status is 0 on success, 1 when ``--verify`` finds a failing identity
and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .errors import (
    BoundedPathsError,
    DegreeMismatch,
    IdentityFailed,
    InvalidModel,
    LeadingTermMismatch,
    ParseError,
)
from .linalg import det
from .meander import (
    D_tilde_and_N_tilde,
    Fkl_column,
    bivariate_gf_residual,
    build_meander_system,
    export_hgraph,
    hgraph_violations,
    iterate_Fkl,
)
from .model import StepModel, one_minus_A
from .oracle import verify_series
from .ring import ONE, MPoly, rational_series, reduce_fraction
from .symmetric import sym_meander_identities, sym_meander_sum
from .transfer import (
    D_of_z,
    F_sequence,
    N_of_z,
    T_to_json,
    build_T,
    det_T_closed_form,
    export_graph,
    unique_arc_violations,
    forced_cycle_violations,
)

__all__ = ["RunConfig", "Result", "run", "emit_json", "emit_text", "main", "max_degree"]

MAX_DEGREE_ENV = "BOUNDED_PATHS_MAX_DEGREE"
DEFAULT_MAX_DEGREE = 200

EXIT_OK, EXIT_FALSIFIED, EXIT_INVALID = 0, 1, 2


@dataclass
class RunConfig:
    steps: str
    command: str
    k: int | None = None
    kmax: int | None = None
    l: int | None = None
    nmax: int | None = None
    output: str = "text"
    verify: bool = False
    reduce: bool = False
    target: str = "excursion"
    which: str = "G"


@dataclass
class Result:
    steps: str
    command: str
    polynomials: dict[str, MPoly] = field(default_factory=dict)
    verdicts: list[tuple[str, bool]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    # text/json/dot renderings that replace the default ones when present
    dot: str | None = None
    text: str | None = None

    def add(self, name: str, holds: bool) -> None:
        self.verdicts.append((name, bool(holds)))

    @property
    def ok(self) -> bool:
        return all(h for _, h in self.verdicts)


def max_degree() -> int:
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise InvalidModel(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise InvalidModel(f"{MAX_DEGREE_ENV} must be >= 0")
    return value


def _bounded(name: str, value: int | None, default: int) -> int:
    v = default if value is None else value
    if v < 0:
        raise InvalidModel(f"--{name} must be >= 0")
    cap = max_degree()
    if v > cap:
        raise InvalidModel(f"--{name} {v} exceeds {MAX_DEGREE_ENV}={cap}")
    return v


# -- subcommands ---------------------------------------------------------------


def _cmd_fk(model: StepModel, cfg: RunConfig, res: Result) -> None:
    kmax = _bounded("kmax", cfg.kmax, 10)
    Fs = F_sequence(build_T(model), kmax) if _has_transfer(model) else _det_sequence(model, kmax)
    for k, f in enumerate(Fs):
        res.polynomials[f"F_{k}"] = f
    res.text = ", ".join(str(f) for f in Fs) + "\n"
    if cfg.verify:
        dets = _det_sequence(model, kmax)
        res.add("transfer_equals_determinant", all(x == y for x, y in zip(Fs, dets)))
        checks = [verify_series(model, k, "excursion", 10).ok for k in range(min(kmax, 6) + 1)]
        res.add("excursion_series_matches_dp", all(checks))


def _has_transfer(model: StepModel) -> bool:
    return model.a >= 1 and model.b >= 1


def _det_sequence(model: StepModel, kmax: int) -> list[MPoly]:
    return [ONE] + [det(one_minus_A(model, k - 1)) for k in range(1, kmax + 1)]


def _cmd_recurrence(model: StepModel, cfg: RunConfig, res: Result) -> None:
    model.require_transfer()
    T = build_T(model)
    a, b = model.a, model.b
    D = D_of_z(T)
    N = N_of_z(T, D)
    res.polynomials["D"] = D
    res.polynomials["N"] = N
    detT, expected = det_T_closed_form(T)
    res.polynomials["det_T"] = detT
    if cfg.reduce:
        n_red, d_red = reduce_fraction(N, D)
        res.polynomials["N_reduced"] = n_red
        res.polynomials["D_reduced"] = d_red
    res.notes += [
        f"transfer matrix dimension C(a+b,a) = {T.dim}",
        f"deg_z D = {D.degree('z')} (expected {comb(a + b, a)})",
        f"deg_z N = {N.degree('z')} (expected {comb(a + b, a) - a - b})",
        f"det(T) = +-({expected})",
    ]
    if cfg.verify:
        res.add("deg_D_equals_C(a+b,a)", D.degree("z") == comb(a + b, a))
        res.add("deg_N_equals_C(a+b,a)-a-b", N.degree("z") == comb(a + b, a) - a - b)
        res.add("det_T_closed_form", detT == expected or detT == -expected)
        kmax = _bounded("kmax", cfg.kmax, 2 * T.dim)
        Fs = F_sequence(T, kmax)
        series = rational_series(N, D, kmax, "z")
        res.add("N_over_D_expands_to_F_k", all(series[k] == Fs[k] for k in range(kmax + 1)))
        res.add("unique_arcs", not unique_arc_violations(T))
        res.add("forced_cycle", not forced_cycle_violations(T))


def _cmd_meander(model: StepModel, cfg: RunConfig, res: Result) -> None:
    sys_ = build_meander_system(model)
    kmax = _bounded("kmax", cfg.kmax if cfg.kmax is not None else cfg.k, 6)
    table = iterate_Fkl(sys_, kmax)
    Fs = F_sequence(sys_.base, kmax + 1)
    for k in range(kmax + 1):
        for l in range(k + 1):
            res.polynomials[f"F_{k},{l}"] = table[k, l]
    D = D_of_z(sys_.base)
    Dt, Nt = D_tilde_and_N_tilde(sys_)
    res.polynomials["D_tilde"] = Dt
    res.polynomials["N_tilde"] = Nt
    for k in range(kmax + 1):
        G = table.G(k)
        res.polynomials[f"G_{k}"] = G
        num, den = reduce_fraction(G, Fs[k + 1]) if cfg.reduce else (G, Fs[k + 1])
        res.polynomials[f"M_{k}_num"] = num
        res.polynomials[f"M_{k}_den"] = den
    if cfg.verify:
        res.add("iterate_equals_cofactor", all(
            list(table.rows[k]) == Fkl_column(model, k) for k in range(min(kmax, 8) + 1)
        ))
        res.add("bivariate_gf_identity", not bivariate_gf_residual(table, Dt, D, Nt))
        nmax = _bounded("nmax", cfg.nmax, 10)
        ok = True
        for k in range(min(kmax, 6) + 1):
            for target in ["sum", *range(k + 1)]:
                ok = ok and verify_series(model, k, target, nmax).ok
        res.add("meander_series_matches_dp", ok)
        res.add("hgraph_conditions", not hgraph_violations(sys_))


def _cmd_symmetric(model: StepModel, cfg: RunConfig, res: Result) -> None:
    kmax = _bounded("kmax", cfg.kmax, 8)
    report = sym_meander_identities(model, kmax, strict=False)
    for k, (p, m) in enumerate(zip(report.F_plus, report.F_minus)):
        res.polynomials[f"F_plus_{k}"] = p
        res.polynomials[f"F_minus_{k}"] = m
    for k, row in enumerate(report.Fkl_plus):
        for l, f in enumerate(row):
            res.polynomials[f"F_plus_{k},{l}"] = f
    for k, row in enumerate(report.Fkl_minus):
        for l, f in enumerate(row):
            res.polynomials[f"F_minus_{k},{l}"] = f
    for name, holds in report.verdicts:
        res.add(name, holds)
    try:
        sums = sym_meander_sum(model, kmax, strict=True)
        held = True
    except IdentityFailed:
        sums = sym_meander_sum(model, kmax, strict=False)
        held = False
    for k, (P, Fp) in enumerate(sums):
        res.polynomials[f"P_{k}"] = P
    res.add("meander_sum_over_F_plus", held)


def _cmd_series(model: StepModel, cfg: RunConfig, res: Result) -> None:
    k = _bounded("k", cfg.k, 0)
    nmax = _bounded("nmax", cfg.nmax, 10)
    target: str | int = cfg.target
    if target not in ("excursion", "sum"):
        try:
            target = int(target)
        except ValueError:
            raise InvalidModel(f"--target must be excursion, sum or a height, got {cfg.target!r}") from None
        if not 0 <= target <= k:
            raise InvalidModel(f"--target height {target} outside 0..{k}")
    route = "transfer" if _has_transfer(model) else "determinant"
    report = verify_series(model, k, target, nmax, route=route)
    for n, c in enumerate(report.actual):
        res.polynomials[f"c_{n}"] = c
    if cfg.verify:
        res.add("series_matches_dp", report.ok)
        if not report.ok:
            res.notes.append(f"first mismatch at degree {report.first_mismatch}")


def _cmd_graph(model: StepModel, cfg: RunConfig, res: Result) -> None:
    which = cfg.which.upper()
    if which == "G":
        T = build_T(model)
        res.dot = export_graph(T)
        violations = unique_arc_violations(T) + forced_cycle_violations(T)
        res.text = T_to_json(T) + "\n" if cfg.output == "text" else None
    elif which == "H":
        sys_ = build_meander_system(model)
        res.dot = export_hgraph(sys_)
        violations = hgraph_violations(sys_)
    else:
        raise InvalidModel(f"--which must be G or H, got {cfg.which!r}")
    if cfg.verify:
        res.add("structural_properties", not violations)
        res.notes += violations


COMMANDS: dict[str, Callable[[StepModel, RunConfig, Result], None]] = {
    "fk": _cmd_fk,
    "recurrence": _cmd_recurrence,
    "meander": _cmd_meander,
    "symmetric": _cmd_symmetric,
    "series": _cmd_series,
    "graph": _cmd_graph,
}


# -- output --------------------------------------------------------------------


def emit_json(result: Result) -> str:
    doc = {
        "steps": result.steps,
        "command": result.command,
        "polynomials": {name: str(p) for name, p in result.polynomials.items()},
        "verdicts": [{"identity": n, "holds": h} for n, h in result.verdicts],
    }
    return json.dumps(doc, indent=2) + "\n"


def emit_text(result: Result) -> str:
    if result.text is not None:
        body = result.text
    else:
        body = "".join(f"{name} = {p}\n" for name, p in result.polynomials.items())
    body += "".join(f"# {n}\n" for n in result.notes)
    body += "".join(f"{n}: {'holds' if h else 'FAILS'}\n" for n, h in result.verdicts)
    return body


def _emit(result: Result, output: str) -> str:
    if output == "json":
        return emit_json(result)
    if output == "dot":
        if result.dot is None:
            raise InvalidModel("--output dot is only available for the graph command")
        return result.dot
    return emit_text(result)


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one configuration; returns ``(exit_code, document)``."""
    if cfg.command not in COMMANDS:
        return EXIT_INVALID, f"error: unknown command {cfg.command!r}\n"
    try:
        model = StepModel.from_text(cfg.steps)
        res = Result(model.to_text(), cfg.command)
        COMMANDS[cfg.command](model, cfg, res)
        doc = _emit(res, cfg.output)
    except (IdentityFailed, DegreeMismatch, LeadingTermMismatch) as exc:
        return EXIT_FALSIFIED, f"identity failed: {exc}\n"
    except ParseError as exc:
        return EXIT_INVALID, f"parse error: {exc}\n"
    except (BoundedPathsError, ValueError) as exc:
        return EXIT_INVALID, f"error: {exc}\n"
    code = EXIT_FALSIFIED if cfg.verify and not res.ok else EXIT_OK
    return code, doc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bounded-paths", description="Height-bounded excursions and meanders.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "fk": "list F_0..F_kmax",
        "recurrence": "D(z), N(z), degrees and det(T)",
        "meander": "F_{k,l} table, D~, N~, G_k and M_k",
        "symmetric": "folded determinants for symmetric step sets",
        "series": "series coefficients of a bounded generating function",
        "graph": "Graphviz export of the transfer graph",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--steps", required=True, help='step set, e.g. "1:t,-1:t"')
        p.add_argument("--k", type=int)
        p.add_argument("--kmax", type=int)
        p.add_argument("--l", type=int)
        p.add_argument("--nmax", type=int)
        p.add_argument("--output", choices=["text", "json", "dot"], default="dot" if name == "graph" else "text")
        p.add_argument("--verify", action="store_true", help="run identity and oracle checks")
        p.add_argument("--reduce", action="store_true", help="gcd-reduce fractions")
        if name == "series":
            p.add_argument("--target", default="excursion", help="excursion, sum, or a final height")
        if name == "graph":
            p.add_argument("--which", default="G", help="G (transfer graph) or H (meander graph)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    cfg = RunConfig(
        steps=ns.steps,
        command=ns.command,
        k=ns.k,
        kmax=ns.kmax,
        l=ns.l,
        nmax=ns.nmax,
        output=ns.output,
        verify=ns.verify,
        reduce=ns.reduce,
        target=str(getattr(ns, "target", "excursion")),
        which=getattr(ns, "which", "G"),
    )
    if cfg.command == "series" and ns.l is not None:
        cfg.target = str(ns.l)
    code, doc = run(cfg)
    stream = sys.stderr if doc.startswith(("error:", "parse error:", "identity failed:")) else sys.stdout
    stream.write(doc)
    return code
