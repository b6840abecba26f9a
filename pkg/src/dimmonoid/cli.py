"""Command-line front end.

Exit status: 0 success, 1 domain failure (non-member, inadmissible support,
not full affine, failed verification), 2 parse or dimension errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import hilbert, order, realize, supports, system
from .errors import DimensionError, DomainError, UsageError
from .extnat import format_vector, parse_vector, to_json_value
from .system import format_system, load_system, system_to_dict

DEFAULT_BOUND = 4


def _vec_json(v):
    return [to_json_value(a) for a in v]


def _read_vector(tokens, k):
    x = parse_vector(" ".join(tokens))
    if len(x) != k:
        raise DimensionError(f"vector has {len(x)} entries, system has {k} variables")
    return x


def load_generators(path):
    """One vector per line (entries separated by spaces or commas), '#' comments."""
    gens = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                gens.append(parse_vector(line))
    if not gens:
        raise UsageError(f"{path}: no generators")
    if len({len(g) for g in gens}) != 1:
        raise DimensionError(f"{path}: generators of different lengths")
    return gens


def load_matrix(path):
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                try:
                    rows.append(tuple(int(t) for t in line.replace(",", " ").split()))
                except ValueError:
                    raise UsageError(f"{path}: bad matrix row {line!r}") from None
    return rows


class Output:
    """Collects text lines and a JSON payload; emits one of them."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.payload = {}

    def emit(self, command, stream):
        if self.fmt == "json":
            stream.write(json.dumps({"command": command, **self.payload}, sort_keys=True) + "\n")
        else:
            stream.write("".join(line + "\n" for line in self.lines))


def _gens_out(out, G):
    out.lines += G.lines()
    out.payload["generators"] = [_vec_json(g) for g in G]


def _system_out(out, S):
    out.lines.append(format_system(S).rstrip("\n"))
    out.payload["system"] = system_to_dict(S)


def _finite_gens_source(args):
    if args.system:
        return list(hilbert.solve_V(load_system(args.input)))
    return load_generators(args.input)


def cmd_member(args, out):
    S = load_system(args.input)
    x = _read_vector(args.vector, S.k)
    res = system.is_member(x, S)
    out.lines.append("true" if res else "false")
    out.payload["result"] = res


def cmd_classify(args, out):
    S = load_system(args.input)
    res = system.classify(_read_vector(args.vector, S.k), S)
    out.lines.append(str(res))
    out.payload["result"] = str(res)


def cmd_gens(args, out):
    _gens_out(out, supports.generators_extended(load_system(args.input)))


def cmd_w_gens(args, out):
    _gens_out(out, hilbert.solve_W(load_system(args.input)))


def cmd_v_gens(args, out):
    _gens_out(out, hilbert.solve_V(load_system(args.input)))


def cmd_dual(args, out):
    _system_out(out, system.dual(load_system(args.input)))


def cmd_idempotents(args, out):
    ids = order.idempotents(load_system(args.input))
    out.lines += [format_vector(v) for v in ids]
    out.payload["idempotents"] = [_vec_json(v) for v in ids]
    out.payload["count"] = len(ids)


def cmd_minimals(args, out):
    mins = order.minimal_elements(load_system(args.input), args.mode)
    out.lines += [format_vector(v) for v in mins]
    out.payload["mode"] = args.mode
    out.payload["minimal"] = [_vec_json(v) for v in mins]


def cmd_superdecomposable(args, out):
    S = load_system(args.input)
    res = order.is_superdecomposable(_read_vector(args.vector, S.k), S)
    out.lines.append("true" if res else "false")
    out.payload["result"] = res


def cmd_full_affine(args, out):
    ok, witness = order.is_full_affine(_finite_gens_source(args))
    out.lines.append("true" if ok else f"false witness {format_vector(witness)}")
    out.payload["result"] = ok
    out.payload["witness"] = None if witness is None else _vec_json(witness)


def cmd_synthesize(args, out):
    _system_out(out, order.synthesize_equations(_finite_gens_source(args)))


def cmd_compose(args, out):
    outer = load_system(args.outer)
    inner = load_system(args.inner)
    _system_out(out, system.pullback(outer, load_matrix(args.matrix), inner))


def cmd_realize(args, out):
    S = load_system(args.input)
    T = realize.compile_system(S)
    if S.unit is not None and not realize.validate_unit(S):
        print("warning: unit is not a strictly positive element of M n D(M)", file=sys.stderr)
    out.lines.append(realize.format_trace(T).rstrip("\n"))
    out.payload["trace"] = realize.trace_to_dict(T)


def cmd_verify_realize(args, out):
    S = load_system(args.input)
    if S.unit is not None and not realize.validate_unit(S):
        print("warning: unit is not a strictly positive element of M n D(M)", file=sys.stderr)
    bad = realize.counterexample(realize.compile_system(S), S, args.bound)
    out.payload["bound"] = args.bound
    if bad is None:
        out.lines.append("true")
        out.payload["result"] = True
        out.payload["counterexample"] = None
        return 0
    x, side = bad
    out.lines.append(f"false counterexample {format_vector(x)} {side}")
    out.payload["result"] = False
    out.payload["counterexample"] = {"vector": _vec_json(x), "side": side}
    return 1


def cmd_report(args, out):
    S = load_system(args.input)
    rep = order.invariant_report(S)
    out.lines += rep.lines()
    out.payload["report"] = rep.to_dict()
    other = None
    if args.dual:
        other = system.dual(S)
    elif args.compare:
        other = load_system(args.compare)
    if other is not None:
        rep2 = order.invariant_report(other)
        diff = order.distinguishing_invariants(rep, rep2)
        verdict = "non-isomorphic" if diff else "undecided"
        out.lines.append("compare " + verdict + (" by " + ",".join(diff) if diff else ""))
        out.payload["other"] = rep2.to_dict()
        out.payload["verdict"] = verdict
        out.payload["distinguishing"] = diff


def cmd_oracle(args, out):
    sols = hilbert.brute_solutions(load_system(args.input), args.bound)
    out.lines += [format_vector(v) for v in sols]
    out.payload["bound"] = args.bound
    out.payload["solutions"] = [_vec_json(v) for v in sols]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dimmonoid",
        description="Monoids in (N0 u {inf})^k defined by congruences and inequalities. "
        "Vectors are space-separated tokens, 'inf' for infinity.",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    # also accepted after the verb
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, help, vector=False, bound=False):
        sp = sub.add_parser(name, help=help, parents=[fmt])
        sp.add_argument("input", help="system file (text or JSON)")
        if vector:
            sp.add_argument("vector", nargs="+", help="vector entries")
        if bound:
            sp.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                            help=f"grid bound B (default {DEFAULT_BOUND})")
        sp.set_defaults(func=func)
        return sp

    verb("member", cmd_member, "test membership", vector=True)
    verb("classify", cmd_classify, "NotMember / V / W_minus_V / InfinitePart", vector=True)
    verb("gens", cmd_gens, "generators of M over N0*")
    verb("w-gens", cmd_w_gens, "minimal generators of the finite part W")
    verb("v-gens", cmd_v_gens, "minimal generators of V = M n D(M) n N0^k")
    verb("dual", cmd_dual, "the dual system")
    verb("idempotents", cmd_idempotents, "idempotent elements")
    sp = verb("minimals", cmd_minimals, "minimal elements of W or W minus V")
    sp.add_argument("--mode", choices=("W", "W_minus_V"), default="W")
    verb("superdecomposable", cmd_superdecomposable, "superdecomposability of a member", vector=True)
    for name, func, help in (
        ("full-affine", cmd_full_affine, "full-affineness of a finite generator set"),
        ("synthesize", cmd_synthesize, "equations and congruences for a full affine set"),
    ):
        sp = sub.add_parser(name, help=help, parents=[fmt])
        sp.add_argument("input", help="generator file, one vector per line")
        sp.add_argument("--system", action="store_true",
                        help="read a system file and use its V generators")
        sp.set_defaults(func=func)
    sp = sub.add_parser("compose", help="pullback of OUTER along MATRIX over INNER", parents=[fmt])
    sp.add_argument("outer")
    sp.add_argument("matrix", help="matrix file, one row per line")
    sp.add_argument("inner")
    sp.set_defaults(func=cmd_compose)
    verb("realize", cmd_realize, "pullback construction trace")
    verb("verify-realize", cmd_verify_realize, "check the trace against M and D(M) on a grid", bound=True)
    sp = verb("report", cmd_report, "invariant report")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--dual", action="store_true", help="compare with the dual system")
    group.add_argument("--compare", metavar="FILE", help="compare with another system")
    verb("oracle", cmd_oracle, "brute-force finite members up to the bound", bound=True)
    return p


def main(argv=None) -> int:
    stdout, stderr = sys.stdout, sys.stderr
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    try:
        status = args.func(args, out) or 0
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        if exc.witness is not None:
            w = exc.witness
            shown = supports.format_support(w) if isinstance(w, frozenset) else format_vector(w)
            print(f"witness {shown}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    out.emit(args.verb, stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
