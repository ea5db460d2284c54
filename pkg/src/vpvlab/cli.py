"""Command-line front end for identity verification, scans, probes,
audits, and lattice enumeration, with JSON/CSV/human output.

Exit codes: 0 success; 1 usage, domain, or validation error; 2
tolerance unachievable (tail bound or non-convergence); 3 internal
error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError, NonConvergence, TailBoundExceedsTol
from .explorer import (
    DEFAULT_T_VALUES,
    audit_special_values,
    critical_line_scan,
    euler_zagier_31,
    run_catalog,
    trivial_zero_probe,
)
from .lattice import visible_points_2d, visible_points_3d
from .polylog import polylog
from .products import (
    DEFAULT_DEGREE_CAP_MAX,
    IdentityCase,
    IdentityReport,
    report_to_dict,
    verify,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TOLERANCE = 2
EXIT_INTERNAL = 3

_DEFAULT_DELTAS = (0.5, 0.4, 0.3, 0.2)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems must map to exit 1, not argparse's default 2
    def error(self, message):
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# value parsing
# ---------------------------------------------------------------------------

def _parse_complex(text: str) -> complex:
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        value = complex(cleaned)
    except ValueError:
        raise _UsageError(f"cannot parse complex value {text!r}; use forms like 0.5, -2+3i")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise _UsageError(f"complex value {text!r} must be finite")
    return value


def _parse_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise _UsageError(f"cannot parse number {text!r}")
    if not math.isfinite(value):
        raise _UsageError(f"number {text!r} must be finite")
    return value


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"cannot parse integer {text!r}")


def _parse_float_list(text: str) -> tuple[float, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise _UsageError(f"empty number list {text!r}")
    return tuple(_parse_float(p) for p in parts)


def _parse_precision(text: str) -> Optional[int]:
    if text == "double":
        return None
    if text.startswith("extended:"):
        digits = _parse_int(text[len("extended:"):])
        if digits < 1:
            raise _UsageError("extended precision digits must be >= 1")
        return digits
    raise _UsageError(
        f"cannot parse precision {text!r}; use 'double' or 'extended:<digits>'"
    )


def _parse_format(text: str) -> str:
    if text not in ("json", "csv", "human"):
        raise _UsageError(f"format must be json, csv, or human, got {text!r}")
    return text


_PARSERS = {
    "complex": _parse_complex,
    "float": _parse_float,
    "int": _parse_int,
    "float_list": _parse_float_list,
    "precision": _parse_precision,
    "format": _parse_format,
    "str": lambda s: s,
}


# ---------------------------------------------------------------------------
# option schema: one row per flag, shared by argparse, config files, and
# defaulting (flag > config > default)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Opt:
    name: str  # config key / dest, e.g. "degree_cap_max"
    kind: str  # key into _PARSERS
    default: object = None
    required: bool = False
    help: str = ""


_COMMON = (
    _Opt("format", "format", "human", help="output format: json, csv, or human"),
    _Opt("output", "str", None, help="write output to this path instead of stdout"),
)

_COMMANDS: dict[str, tuple[_Opt, ...]] = {
    "verify2": (
        _Opt("s", "complex", required=True, help="leading order s (a+bi); the second order is 1-s"),
        _Opt("x", "complex", required=True, help="first argument; x=1 switches to the zeta mode"),
        _Opt("y", "complex", required=True, help="second argument, |y| < 1"),
        _Opt("tol", "float", 1e-8, help="target tolerance for both sides"),
        _Opt("degree_cap_max", "int", DEFAULT_DEGREE_CAP_MAX, help="largest degree cap to consider"),
    ),
    "verify3": (
        _Opt("s", "complex", required=True, help="first order s (a+bi)"),
        _Opt("t", "complex", required=True, help="second order t; the third order is 1-s-t"),
        _Opt("x", "complex", required=True, help="first argument, |x| < 1"),
        _Opt("y", "complex", required=True, help="second argument, |y| < 1"),
        _Opt("z", "complex", required=True, help="third argument, |z| < 1"),
        _Opt("tol", "float", 1e-8, help="target tolerance for both sides"),
        _Opt("degree_cap_max", "int", DEFAULT_DEGREE_CAP_MAX, help="largest degree cap to consider"),
    ),
    "catalog": (
        _Opt("tol", "float", 1e-8, help="tolerance applied to every catalog case"),
        _Opt("degree_cap_max", "int", DEFAULT_DEGREE_CAP_MAX, help="largest degree cap to consider"),
        _Opt("threads", "int", 1, help="verify this many cases concurrently"),
    ),
    "scan": (
        _Opt("T", "float_list", tuple(DEFAULT_T_VALUES), help="comma-separated T values for s = 1/2 + iT"),
        _Opt("x", "complex", complex(0.2), help="first argument"),
        _Opt("y", "complex", complex(0.2), help="second argument"),
        _Opt("tol", "float", 1e-8, help="per-row tolerance"),
        _Opt("degree_cap_max", "int", DEFAULT_DEGREE_CAP_MAX, help="largest degree cap to consider"),
        _Opt("threads", "int", 1, help="verify this many rows concurrently"),
    ),
    "probe": (
        _Opt("order", "int", 3, help="positive order (2, 3, or 4); the probed factor has order 1-order"),
        _Opt("x", "complex", complex(0.5), help="first argument, held fixed"),
        _Opt("deltas", "float_list", _DEFAULT_DELTAS, help="comma-separated deltas; y = 1 - delta"),
        _Opt("tol", "float", 1e-8, help="per-row tolerance"),
        _Opt("degree_cap_max", "int", DEFAULT_DEGREE_CAP_MAX, help="largest degree cap to consider"),
    ),
    "audit": (
        _Opt("tol", "float", 1e-12, help="tolerance for accepting a printed form"),
        _Opt("precision", "precision", None, help="'double' or 'extended:<digits>'"),
    ),
    "ez31": (
        _Opt("tol", "float", 1e-10, help="certified bound target (>= 1e-14)"),
    ),
    "visible": (
        _Opt("dimension", "int", 2, help="2 or 3"),
        _Opt("degree_cap", "int", 30, help="maximum coordinate sum"),
    ),
    "polylog": (
        _Opt("s", "complex", required=True, help="order (a+bi)"),
        _Opt("z", "complex", required=True, help="argument, |z| < 1"),
        _Opt("tol", "float", 1e-12, help="certified truncation bound target"),
        _Opt("precision", "precision", None, help="'double' or 'extended:<digits>'"),
    ),
}

_COMMAND_HELP = {
    "verify2": "verify a 2D product identity with orders (s, 1-s)",
    "verify3": "verify a 3D product identity with orders (s, t, 1-s-t)",
    "catalog": "verify every named identity instance",
    "scan": "verify along the critical line s = 1/2 + iT",
    "probe": "verify near y = 1 at a negative integer order",
    "audit": "check printed half-argument constants against the series",
    "ez31": "evaluate the alternating double zeta sum",
    "visible": "list visible lattice points up to a coordinate sum",
    "polylog": "evaluate one polylogarithm value",
}


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="vpvlab",
        description=(
            "Evaluate complex-order polylogarithms and verify visible-point "
            "lattice product identities with certified truncation bounds."
        ),
        epilog=(
            "Complex flags accept a+bi syntax (use --s=-2-3i for negative "
            "values, or the split --s-re/--s-im forms). A --config file "
            "supplies the same keys as flat key=value lines; flags win."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    for command, opts in _COMMANDS.items():
        p = sub.add_parser(command, help=_COMMAND_HELP[command], description=_COMMAND_HELP[command])
        for opt in opts + _COMMON:
            flag = "--" + opt.name.replace("_", "-")
            p.add_argument(flag, dest=opt.name, default=None, help=opt.help, metavar="V")
            if opt.kind == "complex":
                p.add_argument(f"{flag}-re", dest=f"{opt.name}_re", default=None,
                               help=f"real part of --{opt.name}", metavar="V")
                p.add_argument(f"{flag}-im", dest=f"{opt.name}_im", default=None,
                               help=f"imaginary part of --{opt.name}", metavar="V")
        p.add_argument("--config", dest="config", default=None, metavar="PATH",
                       help="flat key=value file supplying any of the above keys")
    return parser


def _load_config(path: str) -> dict[str, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise _UsageError(f"cannot read config file {path!r}: {exc}")
    out: dict[str, str] = {}
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise _UsageError(f"{path}:{i}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def _resolve_options(args: argparse.Namespace, command: str) -> dict:
    config = _load_config(args.config) if args.config else {}
    opts = _COMMANDS[command] + _COMMON
    known_keys = set()
    for opt in opts:
        known_keys.add(opt.name)
        if opt.kind == "complex":
            known_keys.add(f"{opt.name}_re")
            known_keys.add(f"{opt.name}_im")
    unknown = sorted(set(config) - known_keys)
    if unknown:
        raise _UsageError(f"unknown config key(s) for {command}: {', '.join(unknown)}")

    def pick(name: str) -> Optional[str]:
        flag_value = getattr(args, name, None)
        if flag_value is not None:
            return flag_value
        return config.get(name)

    resolved: dict = {}
    for opt in opts:
        whole = pick(opt.name)
        if opt.kind == "complex":
            re_part = pick(f"{opt.name}_re")
            im_part = pick(f"{opt.name}_im")
            if whole is not None and (re_part is not None or im_part is not None):
                raise _UsageError(
                    f"give --{opt.name} or the split --{opt.name}-re/--{opt.name}-im, not both"
                )
            if re_part is not None or im_part is not None:
                resolved[opt.name] = complex(
                    _parse_float(re_part) if re_part is not None else 0.0,
                    _parse_float(im_part) if im_part is not None else 0.0,
                )
                continue
        if whole is not None:
            resolved[opt.name] = _PARSERS[opt.kind](whole)
        elif opt.required:
            raise _UsageError(f"--{opt.name.replace('_', '-')} is required (flag or config)")
        else:
            resolved[opt.name] = opt.default
    return resolved


def _validate_common(res: dict) -> None:
    if "tol" in res and not res["tol"] > 0:
        raise DomainError(f"tol must be positive, got {res['tol']!r}")
    if "degree_cap_max" in res and res["degree_cap_max"] < 2:
        raise DomainError(f"degree-cap-max must be >= 2, got {res['degree_cap_max']!r}")
    if "threads" in res and res["threads"] < 1:
        raise DomainError(f"threads must be >= 1, got {res['threads']!r}")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _fmt_complex(v: complex) -> str:
    sign = "+" if v.imag >= 0 else "-"
    return f"{v.real!r} {sign} {abs(v.imag)!r}i"


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]],
              comments: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    text = buf.getvalue()
    for comment in comments:
        text += f"# {comment}\n"
    return text


_REPORT_HEADER = (
    "label", "lhs_log_re", "lhs_log_im", "rhs_log_re", "rhs_log_im",
    "abs_err", "rel_err", "degree_cap", "tail_bound", "terms",
)


def _report_row(label: str, r: IdentityReport) -> tuple:
    return (
        label, r.lhs_log.real, r.lhs_log.imag, r.rhs_log.real, r.rhs_log.imag,
        r.abs_err, r.rel_err, r.degree_cap, r.tail_bound, r.terms,
    )


def _report_human(label: str, r: IdentityReport) -> str:
    return "\n".join([
        f"case: {label}",
        f"lhs_log: {_fmt_complex(r.lhs_log)}",
        f"rhs_log: {_fmt_complex(r.rhs_log)}",
        f"abs_err: {r.abs_err!r}",
        f"rel_err: {r.rel_err!r}",
        f"degree_cap: {r.degree_cap}",
        f"tail_bound: {r.tail_bound!r}",
        f"terms: {r.terms}",
    ]) + "\n"


def _render_verify(report: IdentityReport, fmt: str) -> str:
    label = report.case.label or f"verify{report.case.dimension}"
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if fmt == "csv":
        return _csv_text(_REPORT_HEADER, [_report_row(label, report)])
    return _report_human(label, report)


def _render_catalog(reports, fmt: str) -> str:
    if fmt == "json":
        payload = [dict(label=r.case.label, **report_to_dict(r)) for r in reports]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return _csv_text(_REPORT_HEADER, [_report_row(r.case.label, r) for r in reports])
    lines = [
        f"{r.case.label:14s} abs_err={r.abs_err:.3e} rel_err={r.rel_err:.3e} "
        f"degree_cap={r.degree_cap} tail_bound={r.tail_bound:.3e} terms={r.terms}"
        for r in reports
    ]
    return "\n".join(lines) + "\n"


_SCAN_HEADER = (
    "T", "lhs_log_re", "lhs_log_im", "rhs_log_re", "rhs_log_im", "abs_err",
    "li_s_x_re", "li_s_x_im", "li_t_y_re", "li_t_y_im",
    "exponent_dev", "degree_cap", "tail_bound",
)


def _render_scan(rows, fmt: str) -> str:
    if fmt == "json":
        payload = [
            {
                "T": r.t_value,
                "lhs_log": {"re": r.lhs_log.real, "im": r.lhs_log.imag},
                "rhs_log": {"re": r.rhs_log.real, "im": r.rhs_log.imag},
                "abs_err": r.abs_err,
                "li_s_x": {"re": r.li_s_x.real, "im": r.li_s_x.imag},
                "li_t_y": {"re": r.li_t_y.real, "im": r.li_t_y.imag},
                "exponent_dev": r.exponent_dev,
                "degree_cap": r.degree_cap,
                "tail_bound": r.tail_bound,
            }
            for r in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        data = [
            (r.t_value, r.lhs_log.real, r.lhs_log.imag, r.rhs_log.real, r.rhs_log.imag,
             r.abs_err, r.li_s_x.real, r.li_s_x.imag, r.li_t_y.real, r.li_t_y.imag,
             r.exponent_dev, r.degree_cap, r.tail_bound)
            for r in rows
        ]
        return _csv_text(_SCAN_HEADER, data)
    lines = [
        f"T={r.t_value:<12g} abs_err={r.abs_err:.3e} exponent_dev={r.exponent_dev:.3e} "
        f"lhs_log={_fmt_complex(r.lhs_log)} degree_cap={r.degree_cap}"
        for r in rows
    ]
    return "\n".join(lines) + "\n"


_PROBE_HEADER = (
    "delta", "y", "lhs_log_re", "lhs_log_im", "rhs_log_re", "rhs_log_im",
    "abs_err", "rhs_exponent_magnitude", "closed_factor_re", "closed_factor_im",
    "degree_cap", "tail_bound", "error",
)


def _render_probe(order, rows, note, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "order": order,
            "rows": [
                {
                    "delta": r.delta,
                    "y": r.y,
                    "lhs_log": None if r.lhs_log is None else {"re": r.lhs_log.real, "im": r.lhs_log.imag},
                    "rhs_log": None if r.rhs_log is None else {"re": r.rhs_log.real, "im": r.rhs_log.imag},
                    "abs_err": r.abs_err,
                    "rhs_exponent_magnitude": r.rhs_exponent_magnitude,
                    "closed_factor": None if r.closed_factor is None else
                        {"re": r.closed_factor.real, "im": r.closed_factor.imag},
                    "degree_cap": r.degree_cap,
                    "tail_bound": r.tail_bound,
                    "error": r.error,
                }
                for r in rows
            ],
            "note": note,
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        data = []
        for r in rows:
            data.append((
                r.delta, r.y,
                None if r.lhs_log is None else r.lhs_log.real,
                None if r.lhs_log is None else r.lhs_log.imag,
                None if r.rhs_log is None else r.rhs_log.real,
                None if r.rhs_log is None else r.rhs_log.imag,
                r.abs_err, r.rhs_exponent_magnitude,
                None if r.closed_factor is None else r.closed_factor.real,
                None if r.closed_factor is None else r.closed_factor.imag,
                r.degree_cap, r.tail_bound, r.error,
            ))
        return _csv_text(_PROBE_HEADER, data, comments=[f"note: {note}"])
    lines = []
    for r in rows:
        if r.error is not None:
            lines.append(f"delta={r.delta:<8g} error: {r.error}")
        else:
            lines.append(
                f"delta={r.delta:<8g} abs_err={r.abs_err:.3e} "
                f"|rhs_log|={r.rhs_exponent_magnitude:.6e} degree_cap={r.degree_cap}"
            )
    return "\n".join(lines) + f"\n\nnote: {note}\n"


_AUDIT_HEADER = (
    "name", "verdict", "printed_re", "printed_im", "series_re", "series_im",
    "discrepancy", "corrected_re", "corrected_im", "corrected_formula", "note",
)


def _render_audit(records, fmt: str) -> str:
    if fmt == "json":
        payload = [
            {
                "name": r.name,
                "verdict": r.verdict,
                "printed_form_value": {"re": r.printed_form_value.real, "im": r.printed_form_value.imag},
                "series_value": {"re": r.series_value.real, "im": r.series_value.imag},
                "discrepancy": r.discrepancy,
                "candidate_corrected_value": None if r.candidate_corrected_value is None else
                    {"re": r.candidate_corrected_value.real, "im": r.candidate_corrected_value.imag},
                "corrected_formula": r.corrected_formula,
                "note": r.note,
            }
            for r in records
        ]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        data = [
            (r.name, r.verdict, r.printed_form_value.real, r.printed_form_value.imag,
             r.series_value.real, r.series_value.imag, r.discrepancy,
             None if r.candidate_corrected_value is None else r.candidate_corrected_value.real,
             None if r.candidate_corrected_value is None else r.candidate_corrected_value.imag,
             r.corrected_formula, r.note)
            for r in records
        ]
        return _csv_text(_AUDIT_HEADER, data)
    lines = [
        f"{r.name:9s} {r.verdict:17s} discrepancy={r.discrepancy:.3e}  {r.note}"
        for r in records
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------

def _cmd_verify2(res: dict) -> str:
    case = IdentityCase(2, res["s"], res["x"], res["y"], label="verify2")
    report = verify(case, res["tol"], degree_cap_max=res["degree_cap_max"])
    return _render_verify(report, res["format"])


def _cmd_verify3(res: dict) -> str:
    case = IdentityCase(3, res["s"], res["x"], res["y"], t=res["t"], z=res["z"], label="verify3")
    report = verify(case, res["tol"], degree_cap_max=res["degree_cap_max"])
    return _render_verify(report, res["format"])


def _cmd_catalog(res: dict) -> str:
    reports = run_catalog(res["tol"], threads=res["threads"],
                          degree_cap_max=res["degree_cap_max"])
    return _render_catalog(reports, res["format"])


def _cmd_scan(res: dict) -> str:
    rows = critical_line_scan(res["T"], res["x"], res["y"], res["tol"],
                              threads=res["threads"], degree_cap_max=res["degree_cap_max"])
    return _render_scan(rows, res["format"])


def _cmd_probe(res: dict) -> str:
    rows, note = trivial_zero_probe(res["order"], res["x"], res["deltas"],
                                    tol=res["tol"], degree_cap_max=res["degree_cap_max"])
    return _render_probe(res["order"], rows, note, res["format"])


def _cmd_audit(res: dict) -> str:
    records = audit_special_values(res["tol"], dps=res["precision"])
    return _render_audit(records, res["format"])


def _cmd_ez31(res: dict) -> str:
    result = euler_zagier_31(res["tol"])
    value = result.value.real if isinstance(result.value, complex) else result.value
    if res["format"] == "json":
        payload = {"value": value, "terms": result.terms_used, "tail_bound": result.tail_bound}
        return json.dumps(payload, indent=2) + "\n"
    if res["format"] == "csv":
        return _csv_text(("value", "terms", "tail_bound"),
                         [(value, result.terms_used, result.tail_bound)])
    return (f"value: {value!r}\nterms: {result.terms_used}\n"
            f"tail_bound: {result.tail_bound!r}\n")


def _cmd_visible(res: dict) -> str:
    dimension = res["dimension"]
    cap = res["degree_cap"]
    if dimension == 2:
        points = [(p.a, p.b) for p in visible_points_2d(cap)]
        header = ("a", "b")
    elif dimension == 3:
        points = [(p.a, p.b, p.c) for p in visible_points_3d(cap)]
        header = ("a", "b", "c")
    else:
        raise DomainError(f"dimension must be 2 or 3, got {dimension!r}")
    if res["format"] == "json":
        payload = {"dimension": dimension, "degree_cap": cap,
                   "points": [list(p) for p in points]}
        return json.dumps(payload, indent=2) + "\n"
    if res["format"] == "csv":
        return _csv_text(header, points)
    return "\n".join(" ".join(str(c) for c in p) for p in points) + "\n"


def _cmd_polylog(res: dict) -> str:
    result = polylog(res["s"], res["z"], res["tol"], dps=res["precision"])
    if res["precision"] is not None and res["format"] == "human":
        import mpmath

        # extended mode: print all computed digits, not the ambient default
        digits = mpmath.nstr(result.value, res["precision"])
        return (f"value: {digits}\nterms: {result.terms_used}\n"
                f"tail_bound: {result.tail_bound!r}\n")
    value = complex(result.value)
    if res["format"] == "json":
        payload = {
            "value": {"re": value.real, "im": value.imag},
            "terms": result.terms_used,
            "tail_bound": result.tail_bound,
        }
        return json.dumps(payload, indent=2) + "\n"
    if res["format"] == "csv":
        return _csv_text(("value_re", "value_im", "terms", "tail_bound"),
                         [(value.real, value.imag, result.terms_used, result.tail_bound)])
    return (f"value: {_fmt_complex(value)}\nterms: {result.terms_used}\n"
            f"tail_bound: {result.tail_bound!r}\n")


_DISPATCH = {
    "verify2": _cmd_verify2,
    "verify3": _cmd_verify3,
    "catalog": _cmd_catalog,
    "scan": _cmd_scan,
    "probe": _cmd_probe,
    "audit": _cmd_audit,
    "ez31": _cmd_ez31,
    "visible": _cmd_visible,
    "polylog": _cmd_polylog,
}


def _run(argv: Optional[Sequence[str]]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    res = _resolve_options(args, args.command)
    _validate_common(res)
    text = _DISPATCH[args.command](res)
    if res["output"]:
        with open(res["output"], "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return _run(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TailBoundExceedsTol, NonConvergence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
