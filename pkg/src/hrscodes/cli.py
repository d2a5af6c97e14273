"""Command-line front end: encode, decode, corrupt, interpolate, simulate,
mindist.

Inputs come from a JSON job file (matrices and coefficient lists are too
awkward as flags); `--param k=v` overrides scalar keys.  Polynomial
coefficients are listed low degree first everywhere.  Exit codes: 0 when a
result was computed (a decode "fail" status is a result), 2 for invalid
input, 3 when a brute-force budget is exceeded.
"""

import argparse
import json
import sys

from .channel import CSV_HEADER, ChannelSpec, run_trials, sample_error
from .decoder import DecodeSuccess, decode
from .errors import BudgetExceededError
from .errors import ParameterError
from .hrs import (
    DEFAULT_BUDGET,
    CodeParams,
    brute_force_min_distance,
    encode,
    hermite_interpolate,
)
from .nrt import NrtMatrix
from .poly import Poly

_JOB_HELP = """\
job file keys:
  p, r, s, t      code parameters (integers)
  alphas          r distinct evaluation points
  multipliers     optional s x r rows of nonzero scalars (default all ones)
  poly            message coefficients, low degree first (encode)
  matrix          s rows of r entries (decode, corrupt, interpolate)
  e               error bound (decode; default floor((rs-t)/2))
  weight          target NRT error weight (corrupt, simulate)
  trials          trial count (simulate; default 100)
  seed            64-bit RNG seed (corrupt, simulate; default 0)
  budget          enumeration cap (mindist; default 10**6)

matrix JSON form: {"s": 2, "r": 4, "entries": [[...], [...]]} with row 1
holding the order-0 derivative values; a bare list of rows is also accepted
on input.
"""


def _require(job: dict, key: str):
    if key not in job:
        raise ParameterError(f"job is missing required key '{key}'")
    return job[key]


def _as_int(value, label: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterError(f"{label} must be an integer, got {value!r}")
    return value


def _reduce_ints(p: int, values, label: str) -> list[int]:
    """Reduce a flat list into [0, p), warning once if anything was out."""
    out = []
    clipped = 0
    for v in values:
        v = _as_int(v, label)
        if not 0 <= v < p:
            clipped += 1
        out.append(v % p)
    if clipped:
        print(
            f"warning: {clipped} value(s) in '{label}' reduced mod {p}",
            file=sys.stderr,
        )
    return out


def _params_from_job(job: dict) -> CodeParams:
    p = _as_int(_require(job, "p"), "p")
    r = _as_int(_require(job, "r"), "r")
    s = _as_int(_require(job, "s"), "s")
    t = _as_int(_require(job, "t"), "t")
    alphas = _require(job, "alphas")
    if not isinstance(alphas, list):
        raise ParameterError("'alphas' must be a list")
    alphas = _reduce_ints(p, alphas, "alphas")
    multipliers = job.get("multipliers")
    if multipliers is not None:
        if not isinstance(multipliers, list):
            raise ParameterError("'multipliers' must be a list of rows")
        multipliers = [_reduce_ints(p, row, "multipliers") for row in multipliers]
    return CodeParams(p, r, s, t, alphas, multipliers)


def _poly_from_job(params: CodeParams, job: dict) -> Poly:
    coeffs = _require(job, "poly")
    if not isinstance(coeffs, list):
        raise ParameterError("'poly' must be a list of coefficients")
    return Poly(params.field, _reduce_ints(params.p, coeffs, "poly"))


def _matrix_from_job(params: CodeParams, job: dict) -> NrtMatrix:
    raw = _require(job, "matrix")
    if isinstance(raw, dict):
        raw = _require(raw, "entries")
    if not isinstance(raw, list) or not all(isinstance(row, list) for row in raw):
        raise ParameterError("'matrix' must be a list of rows")
    rows = [_reduce_ints(params.p, row, "matrix") for row in raw]
    m = NrtMatrix(params.field, rows)
    if m.shape != (params.s, params.r):
        raise ParameterError(
            f"matrix shape {m.shape} does not match code shape {(params.s, params.r)}"
        )
    return m


def _matrix_json(m: NrtMatrix) -> dict:
    return {"s": m.s, "r": m.r, "entries": m.to_lists()}


def _cmd_encode(job: dict, out) -> int:
    params = _params_from_job(job)
    codeword = encode(params, _poly_from_job(params, job))
    print(json.dumps(_matrix_json(codeword)), file=out)
    return 0


def _cmd_decode(job: dict, out) -> int:
    params = _params_from_job(job)
    y = _matrix_from_job(params, job)
    e = job.get("e")
    if e is not None:
        e = _as_int(e, "e")
    outcome = decode(params, y, e)
    if isinstance(outcome, DecodeSuccess):
        payload = {
            "status": "ok",
            "poly": outcome.message.to_list(),
            "error_weight": outcome.error_weight,
        }
    else:
        payload = {"status": "fail", "reason": outcome.reason.value}
    print(json.dumps(payload), file=out)
    return 0


def _cmd_corrupt(job: dict, out) -> int:
    params = _params_from_job(job)
    y = _matrix_from_job(params, job)
    weight = _as_int(_require(job, "weight"), "weight")
    seed = _as_int(job.get("seed", 0), "seed")
    spec = ChannelSpec(p=params.p, s=params.s, r=params.r, weight=weight, seed=seed)
    error = sample_error(spec)
    payload = {"error": _matrix_json(error), "corrupted": _matrix_json(y + error)}
    print(json.dumps(payload), file=out)
    return 0


def _cmd_interpolate(job: dict, out) -> int:
    params = _params_from_job(job)
    h = hermite_interpolate(params, _matrix_from_job(params, job))
    print(json.dumps({"poly": h.to_list()}), file=out)
    return 0


def _cmd_simulate(job: dict, out) -> int:
    params = _params_from_job(job)
    weight = _as_int(_require(job, "weight"), "weight")
    trials = _as_int(job.get("trials", 100), "trials")
    seed = _as_int(job.get("seed", 0), "seed")
    report = run_trials(params, weight, trials, seed)
    print(CSV_HEADER, file=out)
    print(report.csv_row(), file=out)
    return 0


def _cmd_mindist(job: dict, out) -> int:
    params = _params_from_job(job)
    budget = _as_int(job.get("budget", DEFAULT_BUDGET), "budget")
    d = brute_force_min_distance(params, budget)
    singleton = params.r * params.s - params.t + 1
    print(json.dumps({"min_distance": d, "mds": d == singleton}), file=out)
    return 0


_COMMANDS = {
    "encode": (_cmd_encode, "evaluate a message polynomial into a codeword matrix"),
    "decode": (_cmd_decode, "run the unique decoder on a received matrix"),
    "corrupt": (_cmd_corrupt, "add a random error of exact NRT weight"),
    "interpolate": (_cmd_interpolate, "fit the degree-< rs interpolant to a matrix"),
    "simulate": (_cmd_simulate, "Monte-Carlo decode trials, CSV output"),
    "mindist": (_cmd_mindist, "exhaustive minimum distance and MDS check"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hrscodes",
        description=__doc__,
        epilog=_JOB_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (handler, help_text) in _COMMANDS.items():
        cmd = sub.add_parser(
            name,
            help=help_text,
            epilog=_JOB_HELP,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        cmd.add_argument("--job", required=True, help="path to the JSON job file")
        cmd.add_argument(
            "--param",
            action="append",
            default=[],
            metavar="K=V",
            help="override a scalar job key, e.g. --param e=2 (repeatable)",
        )
        cmd.add_argument("--seed", type=int, default=None, help="override the job seed")
        cmd.add_argument(
            "--output", default="-", help="output path, or - for standard output"
        )
        cmd.set_defaults(handler=handler)
    return parser


def _apply_overrides(job: dict, args) -> dict:
    for item in args.param:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ParameterError(f"--param expects K=V, got {item!r}")
        try:
            job[key] = int(value)
        except ValueError:
            raise ParameterError(f"--param value for '{key}' must be an integer")
    if args.seed is not None:
        job["seed"] = args.seed
    return job


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        with open(args.job) as fh:
            job = json.load(fh)
        if not isinstance(job, dict):
            raise ParameterError("job file must hold a JSON object")
        job = _apply_overrides(job, args)
        if args.output == "-":
            return args.handler(job, sys.stdout)
        with open(args.output, "w") as out:
            return args.handler(job, out)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
