"""Command-line front end.

Exit codes: 0 success, 1 computational disagreement (verify/corpus),
2 input error.  All output is deterministic for fixed inputs, flags and
seed; --json mirrors the plain fields one for one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .indices import (
    CoprimalityViolated,
    index_closed_form,
    index_fortes,
    index_reflection,
)
from .isometry import (
    NotOrthogonal,
    RationalIsometry,
    compose,
    from_rational_matrix,
    random_corpus,
    reflection,
)
from .matrices import (
    format_int_matrix,
    format_rat_matrix,
    parse_int_matrix,
    parse_rat_matrix,
)
from .normalform import smith_normal_form
from .oracle import CapExceeded, index_by_counting, index_by_hnf
from .spectrum import (
    WitnessNotFound,
    coprime_witness,
    four_square_odd_decompose,
    reflection_spectrum,
    three_square_decompose,
)

CAP_ENV_VAR = "CSLINDEX_CAP"


class InputError(Exception):
    pass


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return 10**7
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
        return cap
    except ValueError:
        raise InputError(f"{CAP_ENV_VAR} must be a positive integer, got {raw!r}")


def _read_isometry(path: str) -> RationalIsometry:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    try:
        return from_rational_matrix(parse_rat_matrix(text))
    except NotOrthogonal as exc:
        raise InputError(f"{path} is not orthogonal: {exc}")
    except ValueError as exc:
        raise InputError(f"{path}: {exc}")


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad vector {text!r}; expected comma-separated integers")
    if not coords:
        raise InputError("empty vector")
    if not any(coords):
        raise InputError("vector must be nonzero")
    return coords


def _emit(args, plain_lines, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in plain_lines:
            print(line)


def _cmd_index(args) -> int:
    if (args.matrix is None) == (args.reflect is None):
        raise InputError("index needs exactly one of --matrix or --reflect")
    if args.reflect is not None:
        report = index_reflection(_parse_vector(args.reflect))
        _emit(
            args,
            [f"sigma={report.sigma} method={report.method}"],
            {"sigma": report.sigma, "method": report.method, "factors": list(report.factors)},
        )
        return 0
    y = _read_isometry(args.matrix)
    methods = {"fortes": index_fortes, "closed": index_closed_form}
    wanted = list(methods) if args.method == "all" else [args.method]
    lines = []
    payload = {}
    for name in wanted:
        report = methods[name](y)
        lines.append(f"sigma={report.sigma} method={report.method} factors={list(report.factors)}")
        payload[report.method] = {"sigma": report.sigma, "factors": list(report.factors)}
    _emit(args, lines, payload)
    return 0


def _cmd_snf(args) -> int:
    try:
        a = parse_int_matrix(Path(args.matrix).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.matrix}: {exc}")
    except ValueError as exc:
        raise InputError(str(exc))
    dec = smith_normal_form(a)
    if args.json:
        print(
            json.dumps(
                {
                    "d": list(dec.d),
                    "p": dec.p.to_rows(),
                    "q": dec.q_right.to_rows(),
                },
                sort_keys=True,
            )
        )
    else:
        print("d " + " ".join(str(x) for x in dec.d))
        print("P")
        print(format_int_matrix(dec.p), end="")
        print("Q")
        print(format_int_matrix(dec.q_right), end="")
    return 0


def _cmd_reflect(args) -> int:
    iso = reflection(_parse_vector(args.vector))
    if args.json:
        print(json.dumps({"q": iso.q, "z": iso.z.to_rows()}, sort_keys=True))
    else:
        print(format_rat_matrix(iso.as_rational()), end="")
    return 0


def _cmd_compose(args) -> int:
    iso = compose(_read_isometry(args.left), _read_isometry(args.right))
    if args.json:
        print(json.dumps({"q": iso.q, "z": iso.z.to_rows()}, sort_keys=True))
    else:
        print(format_rat_matrix(iso.as_rational()), end="")
    return 0


def _verify_reports(y: RationalIsometry, cap: int):
    reports = [index_fortes(y), index_closed_form(y), index_by_hnf(y)]
    if y.q**y.n <= cap:
        reports.append(index_by_counting(y, cap))
    return reports


def _cmd_verify(args) -> int:
    y = _read_isometry(args.matrix)
    cap = args.cap if args.cap is not None else _default_cap()
    reports = _verify_reports(y, cap)
    agree = len({r.sigma for r in reports}) == 1
    lines = [f"{r.method} {r.sigma}" for r in reports]
    lines.append(f"verdict {'agree' if agree else 'DISAGREE'}")
    _emit(
        args,
        lines,
        {"methods": {r.method: r.sigma for r in reports}, "agree": agree},
    )
    return 0 if agree else 1


def _cmd_corpus(args) -> int:
    cap = args.cap if args.cap is not None else _default_cap()
    corpus = random_corpus(
        args.dim,
        args.count,
        args.seed,
        max_reflections=args.reflections,
        coordinate_bound=args.bound,
    )
    records = []
    ok = True
    for y in corpus:
        reports = _verify_reports(y, cap)
        agree = len({r.sigma for r in reports}) == 1
        ok = ok and agree
        records.append({"q": y.q, "sigma": reports[0].sigma, "agree": agree})
    if args.json:
        print(json.dumps(records, sort_keys=True))
    else:
        for rec in records:
            print(f"q={rec['q']} sigma={rec['sigma']} agree={'yes' if rec['agree'] else 'no'}")
    return 0 if ok else 1


def _cmd_spectrum(args) -> int:
    table = reflection_spectrum(args.dim, args.max)
    if args.json:
        print(
            json.dumps(
                {str(s): list(w.axes[0].coords) for s, w in sorted(table.items())},
                sort_keys=True,
            )
        )
    else:
        for sigma in sorted(table):
            coords = ",".join(str(c) for c in table[sigma].axes[0].coords)
            print(f"{sigma}\t{coords}")
    return 0


def _cmd_decompose(args) -> int:
    if (args.odd is None) == (args.three is None):
        raise InputError("decompose needs exactly one of --odd or --three")
    if args.odd is not None:
        if args.odd < 1 or args.odd % 2 == 0:
            raise InputError("--odd expects an odd positive integer")
        w = four_square_odd_decompose(args.odd)
        _emit(
            args,
            [f"{w.target} = " + " + ".join(f"{x}^2" for x in w.squares) + f" gcd={w.content}"],
            {"target": w.target, "squares": list(w.squares), "content": w.content},
        )
        return 0
    if args.three < 1:
        raise InputError("--three expects a positive integer")
    w = three_square_decompose(args.three)
    if w is None:
        _emit(
            args,
            [f"{args.three} not representable (form 4^a(8k+7))"],
            {"target": args.three, "squares": None},
        )
    else:
        _emit(
            args,
            [f"{w.target} = " + " + ".join(f"{x}^2" for x in w.squares)],
            {"target": w.target, "squares": list(w.squares), "content": w.content},
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cslindex",
        description="Exact coincidence indices of the hypercubic lattice Z^n",
    )
    parser.add_argument("--version", action="version", version=f"cslindex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
        p.set_defaults(func=func)
        return p

    p = add("index", _cmd_index, "compute Sigma by formula")
    p.add_argument("--matrix", help="rational matrix file")
    p.add_argument("--reflect", help="axis vector, e.g. 1,1,1")
    p.add_argument("--method", choices=["fortes", "closed", "all"], default="all")

    p = add("snf", _cmd_snf, "Smith normal form with transforms")
    p.add_argument("matrix", help="integer matrix file")

    p = add("reflect", _cmd_reflect, "reflection matrix for an axis")
    p.add_argument("--vector", required=True, help="axis vector, e.g. 1,1,1")

    p = add("compose", _cmd_compose, "compose two isometries")
    p.add_argument("left", help="rational matrix file")
    p.add_argument("right", help="rational matrix file")

    p = add("verify", _cmd_verify, "run all formulas and oracles, compare")
    p.add_argument("--matrix", required=True, help="rational matrix file")
    p.add_argument("--cap", type=int, help="residue cap for the counting oracle")

    p = add("corpus", _cmd_corpus, "seeded random corpus with cross-validation")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--reflections", type=int, default=3, help="max reflections per element")
    p.add_argument("--bound", type=int, default=4, help="axis coordinate bound")
    p.add_argument("--cap", type=int, help="residue cap for the counting oracle")

    p = add("spectrum", _cmd_spectrum, "attainable reflection indices with witnesses")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max", type=int, required=True)

    p = add("decompose", _cmd_decompose, "square decompositions")
    p.add_argument("--odd", type=int, help="four squares with gcd 1 for an odd integer")
    p.add_argument("--three", type=int, help="three squares when representable")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CoprimalityViolated, WitnessNotFound, CapExceeded, NotOrthogonal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
