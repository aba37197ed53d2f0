"""Command-line front end.  Every command prints JSON (or DOT) on stdout.

Exit codes: 0 success, 1 validation failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Sequence

from . import acceptance
from .core_category import (
    DObject,
    Preinjective,
    Preprojective,
    Regular,
    ShiftedIndec,
    hom_dim_obj,
    n_coords,
    pair_triangle,
    standard_triangle,
)
from .coslicing import (
    CostabSlicing,
    ExceptionalCoslicing,
    InsertedCoslicing,
    coarser_witness_check,
    coslicing_from_json,
    hn_filtration,
    metric_distance,
    phase_from_json,
    phase_to_json,
    validate_coslicing,
    verify_tower,
)
from .costability import (
    CostabCondition,
    Quintuple,
    component_walk,
    costab_distance,
    from_quintuple,
    raw_condition,
    same_component,
    to_quintuple,
    validate_condition,
    walk_gap,
)
from .cotstructure import (
    CoTStructureSpec,
    approximation_triangle,
    bounded_above,
    bounded_below,
    classify_all,
    co_heart,
    complete_almost_silting,
    from_triple,
    is_partial_silting,
    is_silting,
    member_aisle,
    member_coaisle,
    stable,
    verify_cotstructure_axioms,
)
from .matrix_oracle import hom_dim_oracle_shifted
from .window import WindowConfig, ar_quiver_dot

FAMILY_CODES = {"P": Preprojective, "I": Preinjective, "R": Regular}


class InputError(ValueError):
    """Malformed command-line JSON; the message names the offending field."""


# JSON codecs


def indec_to_json(x: ShiftedIndec) -> dict:
    ind = x.indec
    if isinstance(ind, Preprojective):
        return {"family": "P", "t": ind.t, "shift": x.shift}
    if isinstance(ind, Preinjective):
        return {"family": "I", "t": ind.s, "shift": x.shift}
    return {"family": "R", "tube": ind.tube, "len": ind.length, "shift": x.shift}


def object_to_json(x: DObject) -> list[dict]:
    return [indec_to_json(s) for s in x.summands()]


def _field(d: dict, key: str, where: str, kind: type = int) -> Any:
    if key not in d:
        raise InputError(f"{where}.{key}: missing")
    value = d[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise InputError(f"{where}.{key}: expected an integer, got {value!r}")
    return kind(value)


def indec_from_json(d: Any, where: str = "object") -> ShiftedIndec:
    if not isinstance(d, dict):
        raise InputError(f"{where}: expected an object")
    fam = d.get("family")
    if fam not in FAMILY_CODES:
        raise InputError(f"{where}.family: expected one of P, I, R, got {fam!r}")
    shift = _field(d, "shift", where) if "shift" in d else 0
    try:
        if fam == "R":
            ind: Any = Regular(str(_field(d, "tube", where, str)), _field(d, "len", where))
        else:
            ind = FAMILY_CODES[fam](_field(d, "t", where))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{where}: {exc}") from exc
    return ShiftedIndec(ind, shift)


def object_from_json(text: str | Any, where: str = "object") -> DObject:
    data = _loads(text, where) if isinstance(text, str) else text
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise InputError(f"{where}: expected a list of summands")
    return DObject(indec_from_json(d, f"{where}[{i}]") for i, d in enumerate(data))


def _loads(text: str, where: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}: invalid JSON ({exc.msg} at char {exc.pos})") from exc


def _json_safe(value: Any) -> Any:
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def tower_to_json(tower) -> dict:
    return {
        "layers": [object_to_json(x) for x in tower.layers],
        "quotients": [{"object": object_to_json(q), "phase": phase_to_json(ph)} for q, ph in tower.quotients],
    }


def _coslicing(text: str):
    data = _loads(text, "coslicing")
    try:
        return coslicing_from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"coslicing.{exc.args[0] if exc.args else ''}: missing or invalid") from exc
    except ValueError as exc:
        raise InputError(f"coslicing: {exc}") from exc


def _spec(text: str) -> CoTStructureSpec:
    data = _loads(text, "spec")
    try:
        return CoTStructureSpec.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"spec.{exc.args[0] if exc.args else ''}: missing or invalid") from exc
    except ValueError as exc:
        raise InputError(f"spec: {exc}") from exc


def _quintuple(text: str, where: str) -> Quintuple:
    data = _loads(text, where)
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    try:
        return Quintuple.from_json(data)
    except KeyError as exc:
        raise InputError(f"{where}.{exc.args[0]}: missing") from exc
    except (TypeError, ValueError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def _condition(text: str, where: str) -> CostabCondition:
    q = _quintuple(text, where)
    try:
        return from_quintuple(q)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from exc


def _window(args: argparse.Namespace) -> WindowConfig:
    try:
        w = WindowConfig.load(args.window)
    except (OSError, ValueError, TypeError) as exc:
        raise InputError(f"window: {exc}") from exc
    if args.seed is not None:
        w = WindowConfig.from_json({**w.to_json(), "seed": args.seed})
    return w


# Commands. Each returns (payload, exit_code).


def cmd_hom(args, w):
    x, y = object_from_json(args.x, "x"), object_from_json(args.y, "y")
    out: dict[str, Any] = {"dim": hom_dim_obj(x, y)}
    if args.oracle:
        out["oracle"] = sum(
            ma * mb * hom_dim_oracle_shifted(a, b) for a, ma in x.items for b, mb in y.items
        )
        out["agree"] = out["oracle"] == out["dim"]
        return out, 0 if out["agree"] else 1
    return out, 0


def cmd_triangle(args, w):
    x = object_from_json(args.x, "x")
    if len(x) != 1:
        raise InputError("x: expected a single indecomposable")
    s = x.distinct()[0]
    if args.pair is None:
        left, mid, right = standard_triangle(s.indec)
        left, mid, right = left.suspend(s.shift), mid.suspend(s.shift), right.suspend(s.shift)
    else:
        left, right = pair_triangle(s, args.pair)
        mid = x
    return {"left": object_to_json(left), "mid": object_to_json(mid), "right": object_to_json(right)}, 0


def cmd_hn(args, w):
    x = object_from_json(args.x, "x")
    if not x:
        raise InputError("x: the zero object has no HN tower")
    c = _coslicing(args.coslicing)
    tower = hn_filtration(x, c)
    return {"tower": tower_to_json(tower), "verified": verify_tower(tower, c, x)}, 0


def _coslicing_from_args(args) -> Any:
    if args.spec:
        return _coslicing(args.spec)
    data: dict[str, Any] = {"type": args.type}
    for key in ("n", "t", "p"):
        val = getattr(args, key, None)
        if val is not None:
            data[key] = val
    try:
        return coslicing_from_json(data)
    except (KeyError, ValueError) as exc:
        raise InputError(f"coslicing: {exc}") from exc


def cmd_coslice_build(args, w):
    c = _coslicing_from_args(args)
    bound = args.bound
    return {
        "coslicing": c.presentation(),
        "phases": [
            {"phase": phase_to_json(ph), "generators": object_to_json(DObject(c.gens(ph, bound)))}
            for ph in c.phases(bound)
        ],
    }, 0


def cmd_coslice_validate(args, w):
    c = _coslicing_from_args(args)
    if args.insert_object:
        if args.insert_phase is None:
            raise InputError("insert-phase: required with --insert-object")
        obj = object_from_json(args.insert_object, "insert-object")
        if len(obj) != 1:
            raise InputError("insert-object: expected a single indecomposable")
        c = InsertedCoslicing(c, phase_from_json(c, _loads(args.insert_phase, "insert-phase")), obj.distinct()[0])
    rep = validate_coslicing(c, w.corpus(), w.max_shift + 1, w.n_range())
    return rep, 0 if rep["valid"] else 1


def cmd_coslice_compare(args, w):
    fine, coarse = _coslicing(args.fine), _coslicing(args.coarse)
    if fine.presentation() == coarse.presentation():
        r = lambda ph: ph  # noqa: E731
    elif hasattr(coarse, "refinement") and coarse.refinement()[0] == fine:
        r = coarse.refinement()[1]
    else:
        return {"coarser": False, "reason": "no library refinement map from fine to coarse"}, 1
    ok = coarser_witness_check(fine, coarse, r, w.indecomposables(), w.max_shift, n_range=w.n_range())
    return {"coarser": ok}, 0 if ok else 1


def _costab_slicing(text: str, where: str) -> CostabSlicing:
    data = _loads(text, where)
    try:
        return CostabSlicing(int(data["n"]), float(data["phi1"]), float(data["phi0"]))
    except KeyError as exc:
        raise InputError(f"{where}.{exc.args[0]}: missing") from exc
    except (TypeError, ValueError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def cmd_coslice_distance(args, w):
    return {"distance": metric_distance(_costab_slicing(args.q, "q"), _costab_slicing(args.r, "r"))}, 0


def _spec_from_args(args) -> CoTStructureSpec:
    if args.spec:
        return _spec(args.spec)
    fam, n = args.family, args.n
    if fam is None or n is None:
        raise InputError("spec: give --spec JSON or --family with --n")
    if fam == "stable":
        return stable(n)
    if fam == "bounded":
        if args.m is None or args.p is None:
            raise InputError("bounded: --m and --p are required")
        try:
            return from_triple(args.m, n, args.p)
        except ValueError as exc:
            raise InputError(f"p: {exc}") from exc
    if args.k is None:
        raise InputError(f"{fam}: --k is required")
    return bounded_below(n, args.k) if fam == "bounded_below" else bounded_above(n, args.k)


def cmd_cotstr_classify(args, w):
    specs = classify_all(w, crosscheck=not args.fast)
    return {"count": len(specs), "specs": [s.to_json() for s in specs]}, 0


def cmd_cotstr_member(args, w):
    s = _spec_from_args(args)
    x = object_from_json(args.x, "x")
    a, b = approximation_triangle(x, s) if x else (x, x)
    return {
        "spec": s.to_json(),
        "aisle": member_aisle(x, s),
        "coaisle": member_coaisle(x, s),
        "approximation": {"a": object_to_json(a), "b": object_to_json(b)},
    }, 0


def cmd_cotstr_coheart(args, w):
    s = _spec_from_args(args)
    return {"spec": s.to_json(), "co_heart": [indec_to_json(x) for x in sorted(co_heart(s))]}, 0


def cmd_cotstr_verify(args, w):
    s = _spec_from_args(args)
    rep = verify_cotstructure_axioms(s, w.corpus(), samples=args.samples, seed=w.seed)
    return rep, 0 if rep["pass"] else 1


def cmd_cotstr_silting(args, w):
    objs = object_from_json(args.set, "set").distinct()
    partial = is_partial_silting(objs)
    out: dict[str, Any] = {"partial_silting": partial, "silting": partial and is_silting(objs, w)}
    if len(objs) == 1 and n_coords(objs[0]) is not None and partial:
        out["completions"] = [
            [indec_to_json(x) for x in sorted(c)] for c in complete_almost_silting(objs, w)
        ]
    return out, 0


def _condition_json(c: CostabCondition) -> dict:
    return {
        "quintuple": to_quintuple(c).to_json(),
        "charge": {"Z(N_n)": c.charge.z0, "Z(N_n+1)": c.charge.z1},
        "slicing": c.slicing.presentation(),
    }


def cmd_costab_build(args, w):
    return _condition_json(_condition(args.q, "q")), 0


def cmd_costab_validate(args, w):
    # unchecked, so the report can name the broken inequality
    rep = validate_condition(raw_condition(_quintuple(args.q, "q")))
    return rep, 0 if rep["pass"] else 1


def cmd_costab_component(args, w):
    c1, c2 = _condition(args.q1, "q1"), _condition(args.q2, "q2")
    return {"same_component": same_component(c1, c2), "pair_indices": [c1.n, c2.n]}, 0


def cmd_costab_distance(args, w):
    c1, c2 = _condition(args.q1, "q1"), _condition(args.q2, "q2")
    return {"distance": costab_distance(c1, c2)}, 0


def cmd_costab_walk(args, w):
    c1, c2 = _condition(args.q1, "q1"), _condition(args.q2, "q2")
    if args.steps < 1:
        raise InputError("steps: must be >= 1")
    try:
        path = component_walk(c1, c2, args.steps)
    except ValueError as exc:
        return {"error": str(exc)}, 1
    steps = [costab_distance(a, b) for a, b in zip(path, path[1:])]
    return {
        "path": [to_quintuple(c).to_json() for c in path],
        "max_step": max(steps) if steps else 0.0,
        "bound": 2 * walk_gap(c1, c2) / args.steps,
    }, 0


def cmd_export(args, w):
    if args.what != "ar-quiver":
        raise InputError(f"export: unknown target {args.what!r}")
    if args.dot:
        return ar_quiver_dot(w), 0
    nodes = [indec_to_json(x) for x in sorted(w.non_regular())]
    return {"vertices": nodes}, 0


def cmd_selftest(args, w):
    results = acceptance.run_all(w)
    if args.pretty:
        return "\n".join(r.line() for r in results) + "\n", 0 if all(r.passed for r in results) else 1
    payload = {
        "window": w.to_json(),
        "criteria": [
            {"number": r.number, "name": r.name, "pass": r.passed, "detail": r.detail} for r in results
        ],
        "pass": all(r.passed for r in results),
    }
    return payload, 0 if payload["pass"] else 1


# Parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 2 with a JSON error
        sys.stderr.write(json.dumps({"error": message}) + "\n")
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kcoslice", description=__doc__)
    parser.add_argument("--window", help="path to a window JSON file (default: $KCOSLICE_WINDOW)")
    parser.add_argument("--seed", type=int, help="override the window seed")
    parser.add_argument("--pretty", action="store_true", help="indented output")
    # the same flags are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hom", parents=[common], help="Hom dimension between two objects")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--oracle", action="store_true", help="cross-check against the matrix oracle")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("triangle", parents=[common], help="standard triangle of an indecomposable")
    p.add_argument("x")
    p.add_argument("--pair", type=int, help="use the pair {N_n, N_n+1} instead of {P_0, P_1}")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("hn", parents=[common], help="HN tower with respect to a co-slicing")
    p.add_argument("x")
    p.add_argument("--coslicing", required=True, help='e.g. {"type":"exceptional","n":1,"p":3}')
    p.set_defaults(func=cmd_hn)

    cs = sub.add_parser("coslice").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func in (("build", cmd_coslice_build), ("validate", cmd_coslice_validate)):
        p = cs.add_parser(name, parents=[common])
        p.add_argument("--spec", help="co-slicing JSON presentation")
        p.add_argument(
            "--type",
            default="exceptional",
            choices=["exceptional", "two_object", "stable_two_phase", "z_inf", "trivial"],
        )
        p.add_argument("--n", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--p", help="order parameter (integer or inf)")
        p.add_argument("--bound", type=int, default=2)
        if name == "validate":
            p.add_argument("--insert-object", help="indecomposable added to one slice orbit")
            p.add_argument("--insert-phase", help="phase JSON, e.g. [0,0]")
        p.set_defaults(func=func)
    p = cs.add_parser("hn", parents=[common])
    p.add_argument("x")
    p.add_argument("--coslicing", required=True)
    p.set_defaults(func=cmd_hn)
    p = cs.add_parser("compare", parents=[common])
    p.add_argument("--fine", required=True)
    p.add_argument("--coarse", required=True)
    p.set_defaults(func=cmd_coslice_compare)
    p = cs.add_parser("distance", parents=[common])
    p.add_argument("q", help='{"n":..,"phi1":..,"phi0":..}')
    p.add_argument("r")
    p.set_defaults(func=cmd_coslice_distance)

    ct = sub.add_parser("cotstr").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = ct.add_parser("classify", parents=[common])
    p.add_argument("--fast", action="store_true", help="skip the silting cross-check")
    p.set_defaults(func=cmd_cotstr_classify)
    for name, func in (("member", cmd_cotstr_member), ("coheart", cmd_cotstr_coheart), ("verify", cmd_cotstr_verify)):
        p = ct.add_parser(name, parents=[common])
        if name == "member":
            p.add_argument("x")
        p.add_argument("--spec", help="spec JSON")
        p.add_argument("--family", choices=["bounded", "bounded_below", "bounded_above", "stable"])
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int, help="bounded: shift of N_n in the co-heart")
        p.add_argument("--p", type=int, help="bounded: shift gap of the co-heart")
        p.add_argument("--k", type=int, help="one-sided: cut index")
        if name == "verify":
            p.add_argument("--samples", type=int, default=500)
        p.set_defaults(func=func)
    p = ct.add_parser("silting", parents=[common])
    p.add_argument("set", help="objects as a DObject JSON list")
    p.set_defaults(func=cmd_cotstr_silting)

    cb = sub.add_parser("costab").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func in (("build", cmd_costab_build), ("validate", cmd_costab_validate)):
        p = cb.add_parser(name, parents=[common])
        p.add_argument("q", help='{"n":..,"phi1":..,"phi0":..,"m1":..,"m0":..}')
        p.set_defaults(func=func)
    for name, func in (("component", cmd_costab_component), ("distance", cmd_costab_distance), ("walk", cmd_costab_walk)):
        p = cb.add_parser(name, parents=[common])
        p.add_argument("q1")
        p.add_argument("q2")
        if name == "walk":
            p.add_argument("--steps", type=int, default=10)
        p.set_defaults(func=func)

    p = sub.add_parser("export", parents=[common])
    p.add_argument("what", choices=["ar-quiver"])
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "p", None) is not None and args.func in (cmd_coslice_build, cmd_coslice_validate):
        args.p = "inf" if args.p == "inf" else _int_arg(args.p, "p")
    try:
        payload, code = args.func(args, _window(args))
    except InputError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 2
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        indent = 2 if args.pretty else None
        sys.stdout.write(json.dumps(_json_safe(payload), sort_keys=True, indent=indent) + "\n")
    return code


def _int_arg(value: str, name: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InputError(f"{name}: expected an integer or inf, got {value!r}") from None


def main() -> None:
    try:
        code = run()
    except InputError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        code = 2
    raise SystemExit(code)


__all__ = ["run", "main", "build_parser", "object_from_json", "object_to_json", "InputError", "ExceptionalCoslicing"]
