"""Command-line front end.

Verbs: validate, dims, center-simples, crossing-table, smatrix, modular,
coend, gen-example, compare-dpi, selftest.  Reports are deterministic;
`--format structured` emits JSON built from the canonical serializations.

Exit codes: 0 success, 2 parse error, 3 validation failure, 4 non-split
field, 5 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from gcenter import braiding, center, coend, crossing, monad
from gcenter.category import EngineLimitation, FusionData
from gcenter.examples import (BUNDLED_EPIS, bundled_epi, bundled_category,
                              compare_center_vs_dpi, check_dpi_axioms,
                              dpi_reference, pointed_pushforward)
from gcenter.linalg import NonSemisimpleError, NonSplitFieldError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NONSPLIT = 4
EXIT_INTERNAL = 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def load_category(args) -> FusionData:
    if getattr(args, "example", None):
        try:
            return bundled_category(args.example)
        except KeyError as exc:
            raise CliError(EXIT_PARSE, str(exc)) from exc
    path = args.input
    try:
        with open(path, "r", encoding="utf-8") as fh:
            blob = json.load(fh)
        return FusionData.from_json(blob)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        raise CliError(EXIT_PARSE, f"cannot load category spec: {exc}") \
            from exc


def require_valid(data: FusionData) -> None:
    rep = data.validate()
    if not rep.ok:
        lines = "; ".join(f"{name}: {detail}" if detail else name
                          for name, detail in rep.failures())
        raise CliError(EXIT_VALIDATION, f"validation failed: {lines}")


def cmd_validate(args, out) -> int:
    data = load_category(args)
    rep = data.validate(check_pentagon=args.pentagon)
    if args.format == "structured":
        json.dump({"name": data.name,
                   "checks": [{"name": n, "ok": ok, "detail": d}
                              for n, ok, d in rep.checks],
                   "ok": rep.ok}, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for n, ok, d in rep.checks:
            out.write(f"{'PASS' if ok else 'FAIL'} {n}"
                      f"{': ' + d if d and not ok else ''}\n")
        out.write(f"{'all checks passed' if rep.ok else 'INVALID'}\n")
    return EXIT_OK if rep.ok else EXIT_VALIDATION


def cmd_dims(args, out) -> int:
    data = load_category(args)
    require_valid(data)
    rows = [{"grade": alpha,
             "simples": [data.label(i)
                         for i in data.simples_of_grade(alpha)],
             "dim": data.dim_component(alpha).to_json()}
            for alpha in data.group.elements()]
    if args.format == "structured":
        json.dump({"name": data.name, "components": rows}, out,
                  indent=2, sort_keys=True)
        out.write("\n")
    else:
        for row in rows:
            out.write(f"grade {row['grade']}: "
                      f"simples {', '.join(row['simples'])}; "
                      f"dim = {_fmt_cyc_json(row['dim'])}\n")
    return EXIT_OK


def _fmt_cyc_json(blob) -> str:
    from gcenter.scalars import Cyclotomic
    return _fmt_cyc(Cyclotomic.from_json(blob))


def _fmt_cyc(c) -> str:
    if c.is_rational():
        return str(c.as_rational())
    return repr(c)[4:-1]


def cmd_center_simples(args, out) -> int:
    data = load_category(args)
    require_valid(data)
    rows = []
    for alpha in data.group.elements():
        for s in center.simple_objects(data, alpha):
            rows.append({
                "label": s.label,
                "grade": alpha,
                "parent": data.label(s.parent),
                "block": s.block,
                "multiplicities": {data.label(i): s.hb.A.mult[i]
                                   for i in s.hb.A.support()},
                "dim": data.dim_l_obj(s.hb.A).to_json(),
            })
    if args.format == "structured":
        json.dump({"name": data.name, "simples": rows}, out, indent=2,
                  sort_keys=True)
        out.write("\n")
    else:
        for row in rows:
            mults = ", ".join(f"{k}:{v}"
                              for k, v in row["multiplicities"].items())
            out.write(f"{row['label']} grade={row['grade']} "
                      f"parent={row['parent']} block={row['block']} "
                      f"underlying[{mults}] "
                      f"dim={_fmt_cyc_json(row['dim'])}\n")
    return EXIT_OK


def cmd_crossing_table(args, out) -> int:
    data = load_category(args)
    require_valid(data)
    sims = center.all_simple_objects(data)
    rows = []
    for alpha in data.group.elements():
        for s in sims:
            img = crossing.phi_alpha(data, alpha, s.hb)
            target = None
            for t in sims:
                if center.hom_center_dim(img.gamma, t.hb) > 0:
                    target = t.label
                    break
            rows.append({"alpha": alpha, "source": s.label,
                         "image": target})
    if args.format == "structured":
        json.dump({"name": data.name, "crossing": rows}, out, indent=2,
                  sort_keys=True)
        out.write("\n")
    else:
        for row in rows:
            out.write(f"phi_{row['alpha']}({row['source']}) ~= "
                      f"{row['image']}\n")
    return EXIT_OK


def _modular_payload(data: FusionData) -> dict:
    rep = braiding.s_matrix(data)
    n = rep.s_matrix.rows
    return {
        "labels": rep.labels,
        "s_matrix": [[rep.s_matrix[i, j].to_json() for j in range(n)]
                     for i in range(n)],
        "determinant": rep.determinant.to_json(),
        "is_invertible": rep.is_invertible,
        "ribbon_ok": rep.ribbon_ok,
        "spherical_ok": rep.spherical_ok,
        "dim_neutral": rep.dim_neutral.to_json(),
        "twists": [t.to_json() for t in rep.twists],
        "component_sizes": {str(k): v
                            for k, v in rep.component_sizes.items()},
        "is_g_modular": rep.is_g_modular,
    }


def cmd_smatrix(args, out) -> int:
    data = load_category(args)
    require_valid(data)
    payload = _modular_payload(data)
    if args.format == "structured":
        json.dump({"name": data.name, "modular": payload}, out, indent=2,
                  sort_keys=True)
        out.write("\n")
    else:
        out.write("S-matrix over simples "
                  + ", ".join(payload["labels"]) + "\n")
        n = len(payload["labels"])
        for i in range(n):
            out.write("  [" + ", ".join(
                _fmt_cyc_json(payload["s_matrix"][i][j])
                for j in range(n)) + "]\n")
        out.write(f"determinant = "
                  f"{_fmt_cyc_json(payload['determinant'])}\n")
    return EXIT_OK


def cmd_modular(args, out) -> int:
    data = load_category(args)
    require_valid(data)
    payload = _modular_payload(data)
    if args.format == "structured":
        json.dump({"name": data.name, "modular": payload}, out, indent=2,
                  sort_keys=True)
        out.write("\n")
    else:
        out.write(f"neutral dimension   : "
                  f"{_fmt_cyc_json(payload['dim_neutral'])}\n")
        out.write(f"simples per grade   : {payload['component_sizes']}\n")
        out.write(f"twists              : "
                  + ", ".join(_fmt_cyc_json(t)
                              for t in payload["twists"]) + "\n")
        out.write(f"S-matrix invertible : {payload['is_invertible']}\n")
        out.write(f"ribbon              : {payload['ribbon_ok']}\n")
        out.write(f"spherical           : {payload['spherical_ok']}\n")
        out.write(f"Verdict: G-modular = {payload['is_g_modular']}\n")
    return EXIT_OK


def cmd_coend(args, out) -> int:
    data = load_category(args)
    require_valid(data)
    alpha, beta = args.alpha, args.beta
    if not (0 <= alpha < data.group.size and 0 <= beta < data.group.size):
        raise CliError(EXIT_PARSE, "grades out of range")
    co = coend.build_coend(data, alpha, beta)
    errs = coend.check_action_axioms(data, co)
    hb_ok = center.check_half_braiding(co.hb) == []
    rel_ok = all(coend.check_defining_relation(data, co, data.obj_simple(j))
                 for j in data.simples_of_grade(beta))
    universal_ok = coend.verify_universality(data, co)
    sims = center.all_simple_objects(data)
    decomposition = {s.label: center.hom_center_dim(s.hb, co.hb)
                     for s in sims}
    payload = {
        "alpha": alpha, "beta": beta,
        "grade": co.grade(data),
        "multiplicities": {data.label(i): co.underlying.mult[i]
                           for i in co.underlying.support()},
        "action_axioms_ok": errs == [],
        "half_braiding_ok": hb_ok,
        "defining_relation_ok": rel_ok,
        "universality_ok": universal_ok,
        "decomposition": decomposition,
    }
    if args.format == "structured":
        json.dump({"name": data.name, "coend": payload}, out, indent=2,
                  sort_keys=True)
        out.write("\n")
    else:
        mults = ", ".join(f"{k}:{v}"
                          for k, v in payload["multiplicities"].items())
        out.write(f"C_({alpha},{beta}): underlying[{mults}] "
                  f"grade={payload['grade']}\n")
        out.write(f"action axioms ok      : {payload['action_axioms_ok']}\n")
        out.write(f"half braiding ok      : {payload['half_braiding_ok']}\n")
        out.write(f"defining relation ok  : "
                  f"{payload['defining_relation_ok']}\n")
        out.write(f"universality ok       : {payload['universality_ok']}\n")
        decs = ", ".join(f"{k}({v})" for k, v in
                         sorted(payload["decomposition"].items()) if v)
        out.write(f"decomposition         : {decs}\n")
    ok = errs == [] and hb_ok and rel_ok and universal_ok
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_gen_example(args, out) -> int:
    try:
        epi = bundled_epi(args.name)
    except KeyError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    data = pointed_pushforward(epi, args.order)
    blob = data.to_json()
    if args.output == "-":
        json.dump(blob, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(blob, fh, indent=2, sort_keys=True)
            fh.write("\n")
        out.write(f"wrote {args.output}\n")
    return EXIT_OK


def cmd_compare_dpi(args, out) -> int:
    try:
        epi = bundled_epi(args.name)
    except KeyError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    model = dpi_reference(epi)
    errs = check_dpi_axioms(model)
    rep = compare_center_vs_dpi(epi)
    payload = {
        "example": args.name,
        "model_axioms_ok": errs == [],
        "match_found": rep.success,
        "matching": [{"center": lab, "h": m.h, "chi": list(m.chi)}
                     for lab, m in rep.matched],
        "detail": rep.detail,
    }
    if args.format == "structured":
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(f"model axioms ok : {payload['model_axioms_ok']}\n")
        out.write(f"matching found  : {payload['match_found']}"
                  f"{' (' + rep.detail + ')' if rep.detail else ''}\n")
        for row in payload["matching"]:
            out.write(f"  {row['center']} -> (h={row['h']}, "
                      f"chi={tuple(row['chi'])})\n")
    return EXIT_OK if rep.success and errs == [] else EXIT_INTERNAL


def cmd_selftest(args, out) -> int:
    data = load_category(args)
    require_valid(data)
    failures: list[str] = []

    def check(name: str, ok: bool):
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
        if not ok:
            failures.append(name)

    rep = data.validate()
    check("category axioms", rep.ok)
    u = data.group.unit
    for alpha in data.group.elements():
        for i in data.simples_of_grade(alpha):
            hb = center.free_object(data, u, data.obj_simple(i))
            check(f"half braiding F1({data.label(i)})",
                  center.check_half_braiding(hb) == [])
    x = data.obj_simple(data.representative(u))
    mu = monad.monad_mu(data, x)
    z = monad.z_obj(data, u, x)
    check("monad unit law",
          mu @ monad.eta_unit(data, z.output) == data.identity(z.output))
    g = monad.gamma_separability(data, x)
    check("separability", mu @ g == monad.eta_unit(data, x))
    sims = center.all_simple_objects(data)
    check("simples enumerated", len(sims) > 0)
    for s in sims:
        check(f"simple {s.label} half braiding",
              center.check_half_braiding(s.hb) == [])
    check("ribbon criterion", braiding.ribbon_check(data))
    mod = braiding.s_matrix(data)
    check("neutral S-matrix invertible", mod.is_invertible)
    check("G-modular verdict", mod.is_g_modular)
    if failures:
        out.write(f"selftest FAILED: {', '.join(failures)}\n")
        return EXIT_INTERNAL
    out.write("selftest passed\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcenter",
        description="exact graded-center computations for spherical "
                    "G-fusion categories")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_input(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--input", help="path to a category spec file")
        g.add_argument("--example", choices=sorted(BUNDLED_EPIS),
                       help="bundled example name")
        p.add_argument("--format", choices=["text", "structured"],
                       default="text")

    p = sub.add_parser("validate", help="run the axiom validator")
    add_input(p)
    p.add_argument("--pentagon", action="store_true",
                   help="also check the pentagon identity of the "
                        "associator data")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dims", help="graded component dimensions")
    add_input(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("center-simples",
                       help="enumerate simple objects of the G-center")
    add_input(p)
    p.set_defaults(func=cmd_center_simples)

    p = sub.add_parser("crossing-table",
                       help="the permutation action of the crossing on "
                            "center simples")
    add_input(p)
    p.set_defaults(func=cmd_crossing_table)

    p = sub.add_parser("smatrix", help="neutral S-matrix")
    add_input(p)
    p.set_defaults(func=cmd_smatrix)

    p = sub.add_parser("modular", help="full modularity report")
    add_input(p)
    p.set_defaults(func=cmd_modular)

    p = sub.add_parser("coend", help="the canonical coend object C_(a,b)")
    add_input(p)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.set_defaults(func=cmd_coend)

    p = sub.add_parser("gen-example",
                       help="write a bundled example spec file")
    p.add_argument("name", choices=sorted(BUNDLED_EPIS))
    p.add_argument("--order", type=int, default=None,
                   help="cyclotomic order override")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_gen_example)

    p = sub.add_parser("compare-dpi",
                       help="match the computed center against the "
                            "group-theoretic reference model")
    p.add_argument("name", choices=sorted(BUNDLED_EPIS))
    p.add_argument("--format", choices=["text", "structured"],
                   default="text")
    p.set_defaults(func=cmd_compare_dpi)

    p = sub.add_parser("selftest", help="run every invariant suite")
    add_input(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0,) else 0
    try:
        return args.func(args, sys.stdout)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NonSplitFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONSPLIT
    except (NonSemisimpleError, EngineLimitation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except AssertionError as exc:  # invariant breach: never expected
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
