"""Command-line front end: ``polybridge <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bridge_cov import bridge_model
from .exact_core import (
    dumps,
    format_bipoly,
    format_unipoly,
    unipoly_to_json,
)
from .green_bvp import bvp_solve, bvp_verify, green_function, green_report, is_symmetric
from .index_sets import (
    BadIndexSet,
    IndexSetI,
    IndexSetJ,
    NotABridge,
    dual_set,
    enumerate_sets,
    i_to_j,
    is_admissible,
    j_to_i,
)
from .mc_sim import SimConfig, compare_covariance, make_bridge_paths, simulate_xn, terminal_residuals
from .parsing import ParseError, parse_poly, parse_rational, parse_set
from .prediction import BadHorizon, predict, verify_prediction
from .render import latex_bipoly, latex_piecewise, latex_set, latex_unipoly

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
SEED_ENV = "POLYBRIDGE_SEED"
TERMINAL_TOL = 1e-10


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    plain: list[str]
    json: dict
    latex: list[str]
    code: int = EXIT_OK


def _tf(flag: bool) -> str:
    return "true" if flag else "false"


def _set_list(s) -> list[int]:
    return list(s.elems)


def _jset(n: int, text: str) -> IndexSetJ:
    return IndexSetJ(n, parse_set(text))


def _iset(n: int, text: str) -> IndexSetI:
    return IndexSetI(n, parse_set(text))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_map(args) -> Outcome:
    n = args.n
    if (args.j is None) == (args.i is None):
        raise UsageError("give exactly one of --j or --i")
    if args.j is not None:
        J = _jset(n, args.j)
        I = j_to_i(J)
    else:
        I = _iset(n, args.i)
        J = i_to_j(I) if is_admissible(I) else None
    admissible = is_admissible(I)
    dual = dual_set(I)
    plain = [
        f"n = {n}",
        f"J = {J if J is not None else 'not a bridge'}",
        f"I = {I}",
        f"admissible = {_tf(admissible)}",
        f"dual = {dual}",
    ]
    payload = {
        "command": "map",
        "n": n,
        "J": _set_list(J) if J is not None else None,
        "I": _set_list(I),
        "admissible": admissible,
        "dual": _set_list(dual),
    }
    j_latex = latex_set(J) if J is not None else r"\text{not a bridge}"
    latex = [
        rf"J = {j_latex}",
        rf"I = {latex_set(I)}",
        rf"\{{0,\dots,{2 * n - 1}\}} \setminus ({2 * n - 1} - I) = {latex_set(dual)}",
    ]
    return Outcome(plain, payload, latex)


def cmd_green(args) -> Outcome:
    n = args.n
    I = _iset(n, args.i)
    if args.report:
        rep = green_report(n, I, args.normalization)
        latex = [
            rf"G_{{I_1}}(s,t) = {latex_bipoly(rep.green_lt)} \quad (s<t)",
            rf"G_{{I_1}}(t,s) = {latex_bipoly(rep.green_gt)} \quad (s<t)",
            rf"I_2 = {latex_set(rep.I2)}",
            rf"G_{{I_1}}(s,t) - G_{{I_2}}(s,t) = {latex_bipoly(rep.diff_lt)} \quad (s<t)",
            rf"G_{{I_1}}(t,s) - G_{{I_2}}(t,s) = {latex_bipoly(rep.diff_gt)} \quad (s<t)",
        ]
        return Outcome(rep.lines(), {"command": "green_report", **rep.to_json()}, latex)
    g = green_function(n, I)
    plain = [
        f"n = {n}",
        f"I = {I}",
        f"admissible = {_tf(is_admissible(I))}",
        f"G_I(s,t) for s <= t = {format_bipoly(g.piece.lower)}",
        f"G_I(s,t) for s > t = {format_bipoly(g.piece.upper)}",
        f"symmetric = {_tf(is_symmetric(g))}",
    ]
    plain += [f"R_{iota}(t) = {format_unipoly(R)}" for iota, R in g.basis.items()]
    latex = [latex_piecewise(g.piece, name=rf"G_{{{latex_set(I)}}}")]
    latex += [rf"R_{{I,{iota}}}(t) = {latex_unipoly(R)}" for iota, R in g.basis.items()]
    return Outcome(plain, {"command": "green", **g.to_json()}, latex)


def cmd_bridge(args) -> Outcome:
    model = bridge_model(args.n, _jset(args.n, args.j))
    plain = [f"n = {model.n}", f"J = {model.J}", f"I = {model.I}"]
    plain += [f"P_{j}(t) = {format_unipoly(P)}" for j, P in model.drift.items()]
    plain += [f"psi~_{k}(t) = {format_unipoly(p)}" for k, p in enumerate(model.psi_tilde)]
    plain += [
        f"c(s,t) for s <= t = {format_bipoly(model.cov.lower)}",
        f"c(s,t) for s > t = {format_bipoly(model.cov.upper)}",
    ]
    drift = " ".join(rf"- \left({latex_unipoly(P)}\right) X_{{{j}}}(1)" for j, P in model.drift.items())
    latex = [
        rf"Y(t) = X_{{{model.n}}}(t) {drift}".rstrip(),
        latex_piecewise(model.cov),
    ]
    return Outcome(plain, {"command": "bridge", **model.to_json()}, latex)


def cmd_predict(args) -> Outcome:
    t0 = parse_rational(args.t0)
    model = predict(args.n, _jset(args.n, args.j), t0)
    ok = verify_prediction(model)
    shown = model.absolute_time() if args.absolute_time else model
    clock = "absolute time t in [t0, 1]" if args.absolute_time else "shifted clock t in [0, 1-t0]"
    plain = [f"n = {model.n}", f"J = {model.J}", f"t0 = {t0}", f"clock = {clock}"]
    plain += [f"Ptilde_{j}(t) = {format_unipoly(p)}" for j, p in shown.p_tilde.items()]
    plain += [f"Q_{i}(t) = {format_unipoly(q)}" for i, q in enumerate(shown.q)]
    plain.append(f"verified = {_tf(ok)}")
    payload = {"command": "predict", **shown.to_json(), "absolute_time": args.absolute_time, "verified": ok}
    terms = " ".join(
        rf"+ \left({latex_unipoly(q)}\right) Y^{{({i})}}(t_0)" for i, q in enumerate(shown.q) if not q.is_zero()
    )
    lhs = r"Y(t)" if args.absolute_time else r"Y(t+t_0)"
    latex = [rf"{lhs} = \tilde{{Y}}_{{t_0}}(t) {terms}, \quad t_0 = {_latex_rational(t0)}"]
    return Outcome(plain, payload, latex, EXIT_OK if ok else EXIT_FAILED)


def _latex_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else rf"\frac{{{x.numerator}}}{{{x.denominator}}}"


def cmd_simulate(args) -> Outcome:
    seed = args.seed
    if os.environ.get(SEED_ENV):
        try:
            seed = int(os.environ[SEED_ENV], 0)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer") from None
    J = _jset(args.n, args.j)
    cfg = SimConfig(args.n, args.steps, args.paths, seed, J)
    if args.paths < 2:
        raise UsageError("covariance comparison needs at least two paths")
    ens = simulate_xn(cfg, workers=args.workers)
    bridge = make_bridge_paths(ens, J)
    cmp = compare_covariance(bridge, J, args.stride)
    resid = terminal_residuals(bridge)
    max_terminal = float(abs(resid).max()) if resid.size else 0.0
    ok = cmp.passed(args.z_cap, args.abs_tol) and max_terminal <= TERMINAL_TOL
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(cmp.to_csv())
    plain = [
        f"n = {cfg.n}, J = {J}, paths = {cfg.num_paths}, steps = {cfg.steps}, seed = {cfg.seed}",
        cmp.table(),
        f"max terminal residual = {max_terminal:.3e}",
        f"result = {'pass' if ok else 'fail'}",
    ]
    payload = {
        "command": "simulate",
        "n": cfg.n,
        "J": _set_list(J),
        "paths": cfg.num_paths,
        "steps": cfg.steps,
        "seed": cfg.seed,
        **cmp.to_json(),
        "max_terminal_residual": max_terminal,
        "passed": ok,
    }
    rows = [
        rf"{float(s):.2f} & {float(t):.2f} & {e:.6f} & {x:.6f} & {z:.3f} \\"
        for (s, t), e, x, z in zip(cmp.grid, cmp.empirical, cmp.exact, cmp.z_scores)
    ]
    latex = [r"\begin{tabular}{rrrrr}", r"$s$ & $t$ & empirical & exact & $z$ \\ \hline", *rows, r"\end{tabular}"]
    return Outcome(plain, payload, latex, EXIT_OK if ok else EXIT_FAILED)


def cmd_verify(args) -> Outcome:
    n = args.n
    I = _iset(n, args.i)
    u = parse_poly(args.u)
    v = parse_poly(args.v) if args.v is not None else bvp_solve(n, I, u)
    rep = bvp_verify(v, u, n, I)
    plain = [
        f"n = {n}",
        f"I = {I}",
        f"u(t) = {format_unipoly(u)}",
        f"v(t) = {format_unipoly(v)}",
        f"ode residual = {format_unipoly(rep.ode_residual)}",
        "values at 0 = [" + ", ".join(str(x) for x in rep.bc0_values) + "]",
        "values at 1 = [" + ", ".join(str(x) for x in rep.bc1_values) + "]",
        f"passed = {_tf(rep.passed)}",
    ]
    payload = {"command": "verify", "n": n, "I": _set_list(I), "u": unipoly_to_json(u), "v": unipoly_to_json(v)}
    payload.update(rep.to_json())
    latex = [rf"v(t) = {latex_unipoly(v)}", rf"u(t) = {latex_unipoly(u)}"]
    return Outcome(plain, payload, latex, EXIT_OK if rep.passed else EXIT_FAILED)


def cmd_enumerate(args) -> Outcome:
    n = args.n
    sets = enumerate_sets(n, args.filter)
    plain, items, latex = [], [], []
    if args.filter == "non_admissible_pairs":
        for I1, I2 in sets:
            plain.append(f"I_1 = {I1}  I_2 = {I2}")
            items.append({"I1": _set_list(I1), "I2": _set_list(I2)})
            latex.append(rf"{latex_set(I1)} & {latex_set(I2)} \\")
    else:
        for I in sets:
            ok = is_admissible(I)
            J = i_to_j(I) if ok else None
            plain.append(f"I = {I}  J = {J if J is not None else '-'}")
            items.append({"I": _set_list(I), "admissible": ok, "J": _set_list(J) if J is not None else None})
            j_latex = latex_set(J) if J is not None else "-"
            latex.append(rf"{latex_set(I)} & {j_latex} \\")
    plain.append(f"count = {len(sets)}")
    payload = {"command": "enumerate", "n": n, "filter": args.filter, "count": len(sets), "sets": items}
    return Outcome(plain, payload, latex)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format",
        choices=("plain", "json", "latex"),
        default=default if suppress else "plain",
        help="output format (default plain)",
    )
    parser.add_argument("--output", default=default, help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polybridge", description="Bridges of iterated Brownian integrals.")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", parents=[common], help="translate between conditioning and differentiating sets")
    p.add_argument("n", type=int)
    p.add_argument("--j", help="conditioning set, e.g. 1,2 (use {} for the empty set)")
    p.add_argument("--i", help="differentiating set, e.g. 0,3")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("green", parents=[common], help="Green function of a boundary value problem")
    p.add_argument("n", type=int)
    p.add_argument("--i", required=True)
    p.add_argument("--report", action="store_true", help="session-style report including the dual set")
    p.add_argument(
        "--normalization",
        choices=("maple", "theorem"),
        default="maple",
        help="report kernels for v^(2n) = u (maple) or v^(2n) = (-1)^n u (theorem)",
    )
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("bridge", parents=[common], help="drift polynomials and covariance of a bridge")
    p.add_argument("n", type=int)
    p.add_argument("--j", required=True)
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("predict", parents=[common], help="prediction decomposition at time t0")
    p.add_argument("n", type=int)
    p.add_argument("--j", required=True)
    p.add_argument("--t0", required=True, help="rational in [0, 1), e.g. 1/2")
    p.add_argument("--absolute-time", action="store_true", help="express polynomials in t in [t0, 1]")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo covariance check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", default="{}")
    p.add_argument("--paths", type=int, default=200_000)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0, help=f"overridden by ${SEED_ENV}")
    p.add_argument("--stride", type=int, default=10, help="grid stride in steps")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--z-cap", type=float, default=4.0)
    p.add_argument("--abs-tol", type=float, default=0.01)
    p.add_argument("--csv", help="write (s, t, empirical, exact, z) rows to this file")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", parents=[common], help="solve and check a boundary value problem")
    p.add_argument("n", type=int)
    p.add_argument("--i", required=True)
    p.add_argument("--u", required=True, help="right-hand side, e.g. '1 - 3/2 t^2'")
    p.add_argument("--v", help="candidate solution to check instead of the computed one")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list differentiating sets")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=("all", "admissible", "non_admissible_pairs"), default="all")
    p.set_defaults(func=cmd_enumerate)
    return parser


def render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        return dumps(outcome.json) + "\n"
    lines = outcome.latex if fmt == "latex" else outcome.plain
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        outcome = args.func(args)
    except (UsageError, ParseError, BadIndexSet, BadHorizon, NotABridge, ValueError) as exc:
        print(f"polybridge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(outcome, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return outcome.code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
