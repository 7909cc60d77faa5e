"""Command line front end.  All inputs and outputs are JSON.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 internal
invariant breach.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import binsys, cohomology, gin, orders, sequences
from .binsys import BinomialSystem
from .hilbert import QPolynomial
from .orders import RLEX, Ordering, as_order
from .polyalg import IdealGB, MonomialIdeal, initial_ideal

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


class CheckFailed(Exception):
    """Raised after the output is written when a verification failed."""


# -- input ------------------------------------------------------------------

def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _vector(path: str) -> tuple:
    obj = _read_json(path)
    if not isinstance(obj, list) or not all(isinstance(x, int) and x >= 0 for x in obj):
        raise InputError(f"{path} must hold a list of nonnegative integers")
    return tuple(obj)


def load_source(obj):
    """Binomial system, monomial ideal, sequence node or Groebner basis from JSON."""
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if "kind" in obj:
        return sequences.Node.from_json(obj)
    if "rho" in obj:
        return BinomialSystem.from_json(obj)
    if "order" in obj:
        return IdealGB.from_json(obj)
    if "gens" in obj:
        return MonomialIdeal.from_json(obj)
    raise InputError("expected a system (rho), a monomial ideal (gens) or a basis (order, gens)")


def _source(path: str):
    return load_source(_read_json(path))


def _system(path: str) -> BinomialSystem:
    x = _source(path)
    if not isinstance(x, BinomialSystem):
        raise InputError(f"{path} does not describe a binomial system")
    return x


def _ideal(x) -> IdealGB:
    if isinstance(x, BinomialSystem):
        return binsys.gb_rlex(x, certify=False)
    if isinstance(x, MonomialIdeal):
        return x.to_ideal(RLEX)
    if isinstance(x, sequences.Node):
        return x.ideal
    return x


def _window(text: str | None):
    if text is None:
        return None
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError as exc:
        raise InputError(f"--window expects lo:hi, got {text!r}") from exc
    if lo > hi:
        raise InputError("--window needs lo <= hi")
    return lo, hi


def _gens(J: MonomialIdeal) -> dict:
    return J.to_json()


# -- commands ---------------------------------------------------------------

def cmd_order(args):
    a, b = _vector(args.a), _vector(args.b)
    if len(a) != len(b):
        raise InputError("vectors have different lengths")
    if sum(a) != sum(b):
        raise InputError(f"degree mismatch: {sum(a)} != {sum(b)}")
    if args.action == "cmp":
        if args.rel == "hlex":
            return orders.cmp_hlex(a, b).name
        if args.rel == "rlex":
            return orders.cmp_rlex(a, b).name
        if a == b:
            return Ordering.EQ.name
        if orders.borel_geq(a, b):
            return Ordering.GT.name
        if orders.borel_geq(b, a):
            return Ordering.LT.name
        return "INCOMPARABLE"
    if not orders.borel_geq(a, b):
        raise CheckFailed(json.dumps({"witness": None, "reason": "a is not Borel-greater than b"}))
    return {"witness": [list(r) for r in orders.borel_witness(a, b)]}


def cmd_binsys(args):
    if args.action == "validate":
        obj = _read_json(args.system)
        try:
            BinomialSystem.from_json(obj)
        except ValueError as exc:
            raise CheckFailed(json.dumps({"valid": False, "reason": str(exc)}))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed system: {exc}") from exc
        return {"valid": True}
    S = _system(args.system)
    if args.action == "classify":
        return str(binsys.classify(S))
    if args.action == "gb":
        return binsys.gb_rlex(S).to_json()
    if args.action == "sat":
        return binsys.sat_gb(S).to_json()
    if args.action == "inhlex":
        return _gens(binsys.initial_hlex(S, verify=True))
    if args.action == "filtration":
        if args.i is None:
            raise InputError("filtration needs --i")
        return binsys.filtration_ideal(S, args.i).to_json()
    raise InputError(f"unknown binsys action {args.action}")


def _need_seed(args):
    if args.seed is None:
        raise InputError("randomised commands need an explicit --seed")
    return args.seed


def cmd_gin(args):
    seed = _need_seed(args)
    if args.action == "compute":
        I = _ideal(_source(args.input))
        res = gin.gin_with_witness(I, as_order(args.order), args.trials, seed)
        return {"order": res.order, "ideal": _gens(res.ideal), "rounds": res.rounds,
                "matrices": [[list(r) for r in g] for g in res.matrices]}
    S = _system(args.input)
    ok = gin.check_unipotent_fixed(S, args.trials, seed)
    out = {"unipotent_fixed": ok, "class": str(binsys.classify(S))}
    if not ok:
        raise CheckFailed(json.dumps(out, sort_keys=True))
    return out


def _cohom_source(x):
    if isinstance(x, sequences.Node):
        x = x.cohom_source() or x.ideal
    if isinstance(x, IdealGB):
        if not x.is_monomial():
            raise InputError("cohomology needs a Borel monomial ideal or a binomial system")
        x = initial_ideal(x)
    return x


def cmd_cohom(args):
    x = _cohom_source(_source(args.input))
    window = _window(args.window)
    if window is None:
        n = x.n
        d = x.d if isinstance(x, BinomialSystem) else max(x.max_degree(), 1)
        window = cohomology.default_window(n, d)
    if args.action == "profile":
        prof = cohomology.cohom_profile(x, args.saturated, window)
        return {"window": list(window),
                "h": {str(i): [_num(prof[i](j)) for j in range(window[0], window[1] + 1)]
                      for i in range(prof.n + 1)}}
    seed = _need_seed(args)
    mono = cohomology.hs_monotone_check(x, as_order(args.order), window, args.saturated)
    out = {"order": args.order, "monotone": mono}
    if args.order == "rlex":
        out["equality"] = cohomology.hs_equality_check(x, window, args.saturated,
                                                       args.trials, seed)
    if not all(v for k, v in out.items() if k != "order"):
        raise CheckFailed(json.dumps(out, sort_keys=True))
    return out


def _num(v):
    return int(v) if v.denominator == 1 else str(v)


def cmd_connect(args):
    inputs = list(args.inputs)
    bounds = sequences.BoundSpec.from_json(_read_json(args.bounds)) if args.bounds else None
    if inputs and inputs[0] == "verify":
        if len(inputs) != 2:
            raise InputError("usage: connect verify seq.json")
        seed = _need_seed(args)
        obj = _read_json(inputs[1])
        seq = sequences.ConnectingSequence.from_json(obj)
        if bounds is None:
            mode = (obj.get("report") or {}).get("mode", "equal")
            bounds = sequences.default_bounds(seq.nodes[0], seq.nodes[-1], mode, seed)
        report = sequences.verify_sequence(seq, bounds, seed, _window(args.window))
        if not report["pass"]:
            raise CheckFailed(json.dumps(report, sort_keys=True))
        return report
    if len(inputs) != 2:
        raise InputError("usage: connect --mode equal|leq a.json b.json")
    seed = _need_seed(args)
    a, b = _source(inputs[0]), _source(inputs[1])
    if args.mode == "equal":
        seq = sequences.connect_equal_hf(a, b, bounds, seed)
    else:
        p = QPolynomial.from_json(_read_json(args.p)) if args.p else None
        seq = sequences.connect_leq_hf(a, b, p, bounds, seed)
    out = seq.to_json()
    if not seq.report.get("pass", True):
        raise CheckFailed(json.dumps(out, sort_keys=True))
    return out


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="groebdeform",
                                description="Borel sets, binomial ideals and Groebner deformations.")
    p.add_argument("--out", help="write the result to this file instead of stdout")
    p.add_argument("--seed", type=int, help="seed for randomised steps (required by them)")
    p.add_argument("--window", help="degree window lo:hi")
    p.add_argument("--trials", type=int, default=2, help="random trials for Gin")
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("order", help="compare exponent vectors")
    o.add_argument("action", choices=["cmp", "witness"])
    o.add_argument("--rel", choices=["hlex", "rlex", "borel"], default="hlex")
    o.add_argument("a")
    o.add_argument("b")
    o.set_defaults(func=cmd_order)

    b = sub.add_parser("binsys", help="binomial systems")
    b.add_argument("action", choices=["validate", "classify", "gb", "sat", "inhlex", "filtration"])
    b.add_argument("system")
    b.add_argument("--i", type=int)
    b.set_defaults(func=cmd_binsys)

    g = sub.add_parser("gin", help="generic initial ideals")
    g.add_argument("action", choices=["compute", "unipotent-check"])
    g.add_argument("input")
    g.add_argument("--order", choices=["rlex", "hlex"], default="rlex")
    g.set_defaults(func=cmd_gin)

    c = sub.add_parser("connect", help="connecting sequences; 'connect verify seq.json' re-checks one")
    c.add_argument("inputs", nargs="+")
    c.add_argument("--mode", choices=["equal", "leq"], default="equal")
    c.add_argument("--bounds")
    c.add_argument("--p", help="ideal-side Hilbert polynomial (leq mode)")
    c.set_defaults(func=cmd_connect)

    h = sub.add_parser("cohom", help="cohomological Hilbert functions")
    h.add_argument("action", choices=["profile", "hs-check"])
    h.add_argument("input")
    h.add_argument("--order", choices=["rlex", "hlex"], default="rlex")
    h.add_argument("--saturated", action="store_true")
    h.set_defaults(func=cmd_cohom)
    # global options are also accepted after the subcommand
    for sp in (o, b, g, c, h):
        sp.add_argument("--out", default=argparse.SUPPRESS)
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        sp.add_argument("--window", default=argparse.SUPPRESS)
        sp.add_argument("--trials", type=int, default=argparse.SUPPRESS)
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _render(result) -> str:
    if isinstance(result, str):
        return result
    return json.dumps(result, sort_keys=True, indent=2)


def _join_window(argv: list) -> list:
    """Let "--window -3:5" through; argparse takes -3:5 for an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--window":
            out.append("--window=" + next(it, ""))
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _join_window(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except CheckFailed as exc:
        _emit(str(exc), args.out)
        return EXIT_FAIL
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(_render(result), args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
