"""Command line interface.

Every subcommand except ``verify`` takes a single JSON document from
``--json LITERAL``, ``--file PATH``, or stdin, and prints a JSON result.

Exit codes: 0 success, 1 mathematical failure (point outside a slice or
chart, vanishing minor, verification failures), 2 usage or input errors,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InternalError, SlicelabError
from .gauss import (SlicePoint, gauss_decompose, project_pi,
                    slice_membership)
from .ihr import act, multiply, phi_alpha, split_F, xi_alpha, zeta_alpha
from .liedata import Partition, alpha_mu, equiv_quiver, mv_quiver
from .matrix import MatQt
from .sampling import sample_slice, sample_zastava
from .suites import SUITE_NAMES, run_suite
from .zastava import CorootInterval, zastava_to_matrix


class UsageError(Exception):
    """Bad input document or flags; maps to exit code 2."""


def _load_payload(args) -> dict:
    if args.json is not None:
        text = args.json
    elif args.file is not None:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
    else:
        text = sys.stdin.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("input must be a JSON object")
    return data


def _need(data: dict, key: str):
    if key not in data:
        raise UsageError(f"missing input field {key!r}")
    return data[key]


def _coweight(data, key="mu") -> tuple[int, ...]:
    raw = _need(data, key)
    if not isinstance(raw, list) or not all(isinstance(x, int) for x in raw):
        raise UsageError(f"{key!r} must be a list of integers")
    return tuple(raw)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_decompose(args) -> int:
    data = _load_payload(args)
    x = MatQt.from_json(_need(data, "matrix"))
    out = {"gauss": gauss_decompose(x).to_json()}
    code = 0
    if "mu" in data:
        report = slice_membership(x, _coweight(data))
        out["membership"] = report.to_json()
        code = 0 if report.ok else 1
    _emit(out)
    return code


def _cmd_project(args) -> int:
    data = _load_payload(args)
    x = MatQt.from_json(_need(data, "matrix"))
    y, nw, mw = project_pi(x, _coweight(data))
    _emit({"point": y.to_json(), "n_witness": nw.to_json(),
           "n_minus_witness": mw.to_json()})
    return 0


def _cmd_multiply(args) -> int:
    data = _load_payload(args)
    y1 = SlicePoint.from_json(_need(data, "y1"))
    y2 = SlicePoint.from_json(_need(data, "y2"))
    _emit(multiply(y1, y2).to_json())
    return 0


def _alpha_of(data) -> CorootInterval:
    return CorootInterval.from_json(_need(data, "alpha"))


def _cmd_split(args) -> int:
    data = _load_payload(args)
    pair = split_F(SlicePoint.from_json(_need(data, "y")), _alpha_of(data))
    _emit(pair.to_json())
    return 0


def _cmd_act(args) -> int:
    data = _load_payload(args)
    v = _need(data, "v")
    if not isinstance(v, list):
        raise UsageError("'v' must be a list of rationals")
    from .field import rational_from_json
    vv = tuple(rational_from_json(x) for x in v)
    y = SlicePoint.from_json(_need(data, "y"))
    _emit(act(vv, y, _alpha_of(data)).to_json())
    return 0


def _moment_cmd(fn):
    def runner(args) -> int:
        data = _load_payload(args)
        y = SlicePoint.from_json(_need(data, "y"))
        _emit(fn(y, _alpha_of(data)).to_json())
        return 0

    return runner


_cmd_phi = _moment_cmd(phi_alpha)
_cmd_zeta = _moment_cmd(zeta_alpha)
_cmd_xi = _moment_cmd(xi_alpha)


def _cmd_sample(args) -> int:
    data = _load_payload(args)
    seed = data.get("seed", 0)
    if not isinstance(seed, int):
        raise UsageError("'seed' must be an integer")
    if "alpha" in data:
        z = sample_zastava(_alpha_of(data), seed=seed)
        _emit({"zastava": z.to_json(),
               "matrix": zastava_to_matrix(z).to_json()})
        return 0
    if "mu" not in data:
        raise UsageError("sample needs either 'alpha' (zastava point) or "
                         "'mu' + 'recipe' (slice point)")
    n = _need(data, "n")
    mu = _coweight(data)
    recipe = []
    for item in _need(data, "recipe"):
        if isinstance(item, dict) and "interval" in item:
            recipe.append(CorootInterval.from_json(item["interval"]))
        elif isinstance(item, dict) and "shift" in item:
            recipe.append(tuple(item["shift"]))
        else:
            raise UsageError("recipe items are {'interval': {...}} or "
                             "{'shift': [...]}")
    stats: dict = {"rejected": 0}
    y = sample_slice(n, mu, recipe, seed=seed, stats=stats)
    _emit({"point": y.to_json(), "rejected": stats["rejected"]})
    return 0


def _cmd_quiver(args) -> int:
    data = _load_payload(args)
    mu = Partition.from_json(_need(data, "mu"))
    _emit({"partition": mu.to_json(),
           "alpha_mu": list(alpha_mu(mu, mu.N)),
           "mv_quiver": mv_quiver(mu).to_json(),
           "equivariant_quiver": equiv_quiver(mu).to_json()})
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, n=args.n, trials=args.trials,
                       seed=args.seed)
    doc = report.to_json()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    _emit(doc)
    return report.exit_code


def _add_io_flags(sub) -> None:
    sub.add_argument("--json", help="inline JSON input document")
    sub.add_argument("--file", help="path to a JSON input document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicelab",
        description="Exact matrix computations in loop-group slices: "
                    "Gauss factorization, slice projection, chart "
                    "coordinates, moments, splitting, and verification "
                    "suites.")
    subs = parser.add_subparsers(dest="command", required=True)

    specs = [
        ("decompose", _cmd_decompose,
         "Gauss-factor a matrix; optionally check slice membership"),
        ("project", _cmd_project,
         "project a matrix to the slice of the given coweight"),
        ("multiply", _cmd_multiply, "multiply two slice points"),
        ("split", _cmd_split, "split a point into chart and rest factors"),
        ("act", _cmd_act, "apply the translation action"),
        ("phi", _cmd_phi, "phi moment vector of a point"),
        ("zeta", _cmd_zeta, "zeta moment vector of a point"),
        ("xi", _cmd_xi, "chart coordinates of a point"),
        ("sample", _cmd_sample, "sample a chart point or a slice point"),
        ("quiver", _cmd_quiver,
         "quiver dimension data attached to a partition"),
    ]
    for name, fn, help_text in specs:
        sub = subs.add_parser(name, help=help_text)
        _add_io_flags(sub)
        sub.set_defaults(handler=fn)

    verify = subs.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=SUITE_NAMES)
    verify.add_argument("--n", type=int, required=True,
                        help="rank parameter: work in PGL_n")
    verify.add_argument("--trials", type=int, default=20)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--report", help="also write the report JSON here")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except SlicelabError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 1
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
