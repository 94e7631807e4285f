"""Command-line front end.

Four commands share one reporting vocabulary:

  constant     evaluate a catalog constant
  kernel-norm  compare one constant against its kernel quadrature
  probe        push widening indicators through the reduction kernels
  verify       run the whole check battery

Exit codes: 0 every check passed, 1 at least one check failed, 2 invalid
parameters or usage.  Reports are JSON lines, CSV, or plain text; when a
report goes to a file via --output, probe and verify also render a PNG
figure next to it unless --no-figures is given.  Reports written to
stdout never render figures.
"""

import argparse
import json
import sys
from pathlib import Path

from .constants import FORMULA_PARAMS, ConstantResult, evaluate
from .errors import (
    DivergenceError,
    DomainError,
    HypothesisViolation,
    QuadratureError,
    TailTruncationError,
)
from .verify import (
    PROBE_FORMULAS,
    check_constant_vs_kernel,
    probe_operator,
    run_all,
)

__all__ = ["main"]

# catalog parameter name -> CLI flag.  lambda is always derived from the
# constraint that fixes it, never a flag; the Riesz composition exponents
# ride the first two weight flags instead.
_FLAG_OF = {
    "n": "n",
    "m": "m",
    "p": "p",
    "alpha": "alpha",
    "beta": "beta",
    "sigma": "sigma",
    "rho": "rho",
    "gamma_w": "gamma",
    "order_m": "m",
    "lam": "alpha",
    "mu": "beta",
}

_USER_ERRORS = (HypothesisViolation, DomainError)
_NUMERIC_REFUSALS = (QuadratureError, TailTruncationError, DivergenceError)


def _add_param_flags(sub) -> None:
    sub.add_argument("--n", type=int, help="dimension")
    sub.add_argument("--m", type=int,
                     help="second dimension, or the iteration order")
    sub.add_argument("--p", type=float, help="Lebesgue exponent")
    for flag in ("alpha", "beta", "sigma", "rho", "gamma"):
        sub.add_argument(f"--{flag}", type=float, help=f"{flag} weight exponent")


def _add_output_flags(sub, figures: bool) -> None:
    sub.add_argument("--format", choices=("json", "csv", "text"),
                     default="text")
    sub.add_argument("--output", help="write the report here instead of stdout")
    if figures:
        sub.add_argument("--no-figures", action="store_true",
                         help="skip the PNG rendered next to --output")


def _widths(text: str):
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"widths must be comma-separated integers, got {text!r}")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharpineq",
        description="Sharp constants of weighted inequalities: closed forms, "
                    "kernel quadrature, operator probes, check batteries.")
    commands = parser.add_subparsers(dest="command", required=True)

    constant = commands.add_parser(
        "constant", help="evaluate a catalog constant")
    constant.add_argument("formula_id", choices=sorted(FORMULA_PARAMS))
    _add_param_flags(constant)
    _add_output_flags(constant, figures=False)

    norm = commands.add_parser(
        "kernel-norm", help="kernel quadrature against the closed form")
    norm.add_argument("formula_id", choices=sorted(PROBE_FORMULAS))
    _add_param_flags(norm)
    norm.add_argument("--tol", type=float, default=1e-7,
                      help="relative tolerance for the comparison")
    _add_output_flags(norm, figures=False)

    probe = commands.add_parser(
        "probe", help="operator-norm probe on the multiplicative group")
    probe.add_argument("formula_id", choices=sorted(PROBE_FORMULAS))
    _add_param_flags(probe)
    probe.add_argument("--widths", type=_widths, default=(8, 16, 32, 64),
                       help="comma-separated indicator half-widths")
    _add_output_flags(probe, figures=True)

    verify = commands.add_parser(
        "verify", help="run the check battery")
    verify.add_argument("what", choices=("all",))
    verify.add_argument("--tol", type=float, default=1e-7,
                        help="tolerance for the kernel quadrature checks")
    _add_output_flags(verify, figures=True)

    return parser


def _collect_params(args, formula_id: str) -> dict:
    """Assemble catalog parameters from flags, strict in both directions."""
    names = FORMULA_PARAMS[formula_id][1]
    wanted = {}
    for name in names:
        flag = _FLAG_OF[name]
        value = getattr(args, flag)
        if value is None:
            raise DomainError(f"{formula_id} requires --{flag}")
        wanted[name] = value
    used_flags = {_FLAG_OF[name] for name in names}
    for flag in ("n", "m", "p", "alpha", "beta", "sigma", "rho", "gamma"):
        if getattr(args, flag) is not None and flag not in used_flags:
            raise DomainError(f"--{flag} is not a parameter of {formula_id}")
    return wanted


def _params_text(params: dict) -> str:
    return ";".join(f"{k}={v!r}" if isinstance(v, float) else f"{k}={v}"
                    for k, v in params.items())


def _emit(text: str, args, figure=None) -> None:
    if args.output:
        path = Path(args.output)
        path.write_text(text, encoding="utf-8")
        if figure is not None and not getattr(args, "no_figures", True):
            figure(path.with_suffix(".png"))
    else:
        sys.stdout.write(text)


def _report_lines(reports, fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r.as_dict()) + "\n" for r in reports)
    if fmt == "csv":
        header = ("check_id,formula_id,params,closed_form,numeric,"
                  "abs_err,rel_err,tol,pass,runtime_ms\n")
        rows = [
            f"{r.check_id},{r.formula_id},{_params_text(r.params)},"
            f"{r.closed_form!r},{r.numeric!r},{r.abs_err!r},{r.rel_err!r},"
            f"{r.tol!r},{str(r.passed).lower()},{r.runtime_ms!r}\n"
            for r in reports
        ]
        return header + "".join(rows)
    lines = []
    for r in reports:
        verdict = "PASS" if r.passed else "FAIL"
        lines.append(f"{verdict}  {r.check_id}  closed={r.closed_form:.12g}  "
                     f"numeric={r.numeric:.12g}  rel={r.rel_err:.3e}  "
                     f"tol={r.tol:g}\n")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed\n")
    return "".join(lines)


def _cmd_constant(args) -> int:
    params = _collect_params(args, args.formula_id)
    result = evaluate(args.formula_id, **params)
    if isinstance(result, ConstantResult):
        payload = {
            "formula_id": result.formula_id,
            "params": result.params_echo.as_dict(),
            "value": result.value,
            "log_value": result.log_value,
            "certificate": result.certificate,
        }
    else:
        # the log-uncertainty slope is sign-indefinite; no log form exists
        payload = {
            "formula_id": args.formula_id,
            "params": dict(params),
            "value": float(result),
            "log_value": None,
            "certificate": "hypotheses verified",
        }
    if args.format == "json":
        text = json.dumps(payload) + "\n"
    elif args.format == "csv":
        log_text = "" if payload["log_value"] is None \
            else repr(payload["log_value"])
        text = ("formula_id,params,value,log_value,certificate\n"
                f"{payload['formula_id']},{_params_text(payload['params'])},"
                f"{payload['value']!r},{log_text},{payload['certificate']}\n")
    else:
        shown = ", ".join(f"{k}={v:g}" for k, v in payload["params"].items())
        text = f"{payload['formula_id']}({shown}) = {payload['value']:.12g}\n"
        if payload["log_value"] is not None:
            text += f"log value {payload['log_value']:.12g}\n"
        text += f"{payload['certificate']}\n"
    _emit(text, args)
    return 0


def _cmd_kernel_norm(args) -> int:
    params = _collect_params(args, args.formula_id)
    report = check_constant_vs_kernel(args.formula_id, params, tol=args.tol)
    _emit(_report_lines([report], args.format), args)
    return 0 if report.passed else 1


def _cmd_probe(args) -> int:
    from .figures import probe_figure

    params = _collect_params(args, args.formula_id)
    probe = probe_operator(args.formula_id, params, widths=args.widths)
    if args.format == "csv":
        rows = "".join(
            f"{w},{r!r},{probe.bound!r},{r / probe.bound!r}\n"
            for w, r in zip(probe.widths, probe.ratios))
        text = "width,ratio,bound,fraction\n" + rows
    elif args.format == "json":
        text = json.dumps(probe.as_check_report().as_dict()) + "\n"
    else:
        lines = [f"probe {probe.formula_id} "
                 f"({', '.join(f'{k}={v:g}' for k, v in probe.params.items())})\n"]
        for w, r in zip(probe.widths, probe.ratios):
            lines.append(f"  width {w:5g}  ratio {r:.12g}  "
                         f"fraction {r / probe.bound:.6f}\n")
        lines.append(f"closed form {probe.bound:.12g}\n")
        lines.append(("PASS" if probe.passed else "FAIL")
                     + f"  final fraction {probe.final_fraction:.6f}\n")
        text = "".join(lines)
    _emit(text, args, figure=lambda path: probe_figure(probe, path))
    return 0 if probe.passed else 1


def _cmd_verify(args) -> int:
    from .figures import summary_figure

    reports = run_all(tol=args.tol)
    text = _report_lines(reports, args.format)
    _emit(text, args, figure=lambda path: summary_figure(reports, path))
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "constant": _cmd_constant,
        "kernel-norm": _cmd_kernel_norm,
        "probe": _cmd_probe,
        "verify": _cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except _USER_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except _NUMERIC_REFUSALS as err:
        print(f"error: parameters outside the rated numerical range: {err}",
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
