"""Command-line surface.

Subcommands: poset build|flag|check, transform, index, systems
enum|limit, ineq make|check, cone verify|dual, glue.  Outputs are JSON
(or CSV / PORTA text where noted), byte-identical across runs; files are
written atomically (temp file + rename).  Exit codes: 0 success, 1
domain error (JSON diagnostics on stderr), 2 usage error.
"""

import argparse
import json
import os
import sys
import tempfile

from .cone import porta_ieq, porta_poi, rays_from_facets, facets_from_rays, verify_rank
from .constructions import glue, parse_construction
from .forms import LinearForm, facet_theorem_candidates, ijk_form, inequality_lemma_form
from .posets import GradedPoset, flag_f_vector, is_eulerian, is_half_eulerian, validate
from .subsets import mask_key, mask_of
from .systems import (IntervalSystem, doubled_limit_L_vector, enumerate_even_systems,
                      lambda_encode, limit_ell_vector)
from .vectors import FlagVector
from .words import ab_index, ce_index, ce_to_cd


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".flagcone-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None):
    if out:
        _write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    with open(path) as handle:
        return json.load(handle)


def _poset_from_args(args) -> GradedPoset:
    if getattr(args, "construct", None):
        return parse_construction(args.construct)
    if getattr(args, "infile", None):
        return GradedPoset.from_dict(_load_json(args.infile))
    raise ValueError("either --construct or --in is required")


def _parse_rank_list(text: str) -> list:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _parse_intervals(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    parts = text.replace(" ", "").strip("{}").split("],[")
    out = []
    for part in parts:
        nums = part.strip("[]").split(",")
        if len(nums) != 2:
            raise ValueError(f"bad interval {part!r}, expected [a,b]")
        out.append((int(nums[0]), int(nums[1])))
    return out


def _flag_csv(v: FlagVector) -> str:
    lines = ["subset,value"]
    lines.extend(f"{mask_key(m)},{v.get(m)}" for m in sorted(v.entries))
    return "\n".join(lines) + "\n"


def _cmd_poset(args):
    if args.action == "build":
        _emit(_dump_json(_poset_from_args(args).to_dict()), args.out)
    elif args.action == "flag":
        v = flag_f_vector(_poset_from_args(args)).to_basis(args.basis)
        if args.format == "csv":
            _emit(_flag_csv(v), args.out)
        else:
            _emit(_dump_json(v.to_dict()), args.out)
    elif args.action == "check":
        p = _poset_from_args(args)
        problems = validate(p)
        report = {"valid": not problems, "problems": problems}
        if not problems:
            ok_e, wit_e = is_eulerian(p)
            ok_h, wit_h = is_half_eulerian(p)
            report["eulerian"] = ok_e
            report["half_eulerian"] = ok_h
            if wit_e:
                report["eulerian_witness"] = list(wit_e)
            if wit_h:
                report["half_eulerian_witness"] = list(wit_h)
        _emit(_dump_json(report), args.out)
    return 0


def _cmd_transform(args):
    v = FlagVector.from_dict(_load_json(args.infile))
    _emit(_dump_json(v.to_basis(args.to).to_dict()), args.out)
    return 0


def _cmd_index(args):
    v = FlagVector.from_dict(_load_json(args.infile))
    if args.kind == "ab":
        poly = ab_index(v.to_basis("H"))
    elif args.kind == "ce":
        poly = ce_index(v.to_basis("L"))
    else:
        poly = ce_to_cd(ce_index(v.to_basis("L")))
    _emit(_dump_json(poly.to_dict()), args.out)
    return 0


def _cmd_systems(args):
    if args.action == "enum":
        systems = enumerate_even_systems(args.n)
        if args.format == "csv":
            lines = ["intervals,lambda"]
            for s in systems:
                body = ";".join(f"[{a},{b}]" for a, b in s.intervals)
                lam = "".join("+" if x > 0 else "-" for x in lambda_encode(s))
                lines.append(f"{body},{lam}")
            _emit("\n".join(lines) + "\n", args.out)
        else:
            payload = [{"intervals": [list(iv) for iv in s.intervals],
                        "lambda": list(lambda_encode(s))} for s in systems]
            _emit(_dump_json({"n": args.n, "count": len(systems), "systems": payload}),
                  args.out)
    else:  # limit
        system = IntervalSystem(args.n, _parse_intervals(args.intervals))
        v = (doubled_limit_L_vector(args.n, system) if args.doubled
             else limit_ell_vector(args.n, system))
        _emit(_dump_json(v.to_dict()), args.out)
    return 0


def _cmd_ineq(args):
    if args.action == "make":
        if args.kind == "lemma":
            form = inequality_lemma_form(args.n, mask_of(_parse_rank_list(args.V)),
                                         mask_of(_parse_rank_list(args.T)),
                                         basis=args.basis)
            payload = form.to_dict()
        elif args.kind == "ijk":
            payload = ijk_form(args.n, args.i, args.j, args.k).to_dict()
        else:  # facetthm
            forms = facet_theorem_candidates(args.n, strict=not args.all)
            payload = {"n": args.n, "count": len(forms),
                       "forms": [f.to_dict() for f in forms]}
        _emit(_dump_json(payload), args.out)
    else:  # check
        form = LinearForm.from_dict(_load_json(args.form))
        value = form.evaluate(flag_f_vector(_poset_from_args(args)))
        _emit(_dump_json({"provenance": form.provenance, "value": str(value),
                          "nonnegative": value >= 0}), args.out)
    return 0


def _cmd_cone(args):
    if args.action == "verify":
        report = verify_rank(args.rank)
        _emit(_dump_json(report), args.out)
        if args.format == "porta":
            if not args.out:
                raise ValueError("--format porta requires --out")
            base = args.out[:-5] if args.out.endswith(".json") else args.out
            rays = [tuple(r["coords"]) for r in report["rays"]]
            facets = [tuple(f["normal"]) for f in report["facets"]]
            _write_atomic(base + ".poi", porta_poi(rays, report["dim"]))
            _write_atomic(base + ".ieq", porta_ieq(facets, report["dim"]))
    else:  # dual
        data = _load_json(args.infile)
        if "rays" in data:
            facets = facets_from_rays([tuple(r) for r in data["rays"]])
            payload = {"dim": len(facets[0]), "facets": [list(f) for f in facets]}
        elif "facets" in data:
            rays = rays_from_facets([tuple(f) for f in data["facets"]])
            payload = {"dim": len(rays[0]), "rays": [list(r) for r in rays]}
        else:
            raise ValueError("cone input needs a 'rays' or 'facets' key")
        _emit(_dump_json(payload), args.out)
    return 0


def _cmd_glue(args):
    left = parse_construction(args.left)
    right = parse_construction(args.right)
    glued = glue(left, right, _parse_rank_list(args.ranks))
    _emit(_dump_json(glued.to_dict()), args.out)
    return 0


def _add_io(sub, construct=True, infile=True):
    if construct:
        sub.add_argument("--construct", help="construction expression, e.g. chain(4)")
    if infile:
        sub.add_argument("--in", dest="infile", help="input JSON file")
    sub.add_argument("--out", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcone",
        description="Flag vectors of Eulerian and half-Eulerian posets, "
                    "exact cone computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    poset = sub.add_parser("poset", help="build, flag-count or check a poset")
    poset.add_argument("action", choices=["build", "flag", "check"])
    poset.add_argument("--basis", default="F", choices=["F", "H", "ELL", "L"])
    poset.add_argument("--format", default="json", choices=["json", "csv"])
    _add_io(poset)
    poset.set_defaults(func=_cmd_poset)

    tr = sub.add_parser("transform", help="change the basis of a flag vector")
    tr.add_argument("--to", required=True, choices=["F", "H", "ELL", "L"])
    _add_io(tr, construct=False)
    tr.set_defaults(func=_cmd_transform)

    idx = sub.add_parser("index", help="ab/ce/cd index of a flag vector")
    idx.add_argument("--kind", required=True, choices=["ab", "ce", "cd"])
    _add_io(idx, construct=False)
    idx.set_defaults(func=_cmd_index)

    systems = sub.add_parser("systems", help="even interval systems and limit vectors")
    systems.add_argument("action", choices=["enum", "limit"])
    systems.add_argument("--n", type=int, required=True)
    systems.add_argument("--intervals", default="", help='e.g. "[1,2],[2,6]"')
    systems.add_argument("--doubled", action="store_true",
                         help="emit the L-vector of the doubled limit")
    systems.add_argument("--format", default="json", choices=["json", "csv"])
    systems.add_argument("--out")
    systems.set_defaults(func=_cmd_systems)

    ineq = sub.add_parser("ineq", help="build or evaluate inequality forms")
    ineq.add_argument("action", choices=["make", "check"])
    ineq.add_argument("--kind", choices=["lemma", "ijk", "facetthm"])
    ineq.add_argument("--n", type=int)
    ineq.add_argument("--V", default="", help="comma-joined ranks of V")
    ineq.add_argument("--T", default="", help="comma-joined ranks of T")
    ineq.add_argument("--i", type=int)
    ineq.add_argument("--j", type=int)
    ineq.add_argument("--k", type=int)
    ineq.add_argument("--basis", default="F", choices=["F", "ELL", "L"])
    ineq.add_argument("--all", action="store_true",
                      help="facetthm: include non-strict (M,V) pairs")
    ineq.add_argument("--form", help="form JSON file (check)")
    _add_io(ineq)
    ineq.set_defaults(func=_cmd_ineq)

    cone = sub.add_parser("cone", help="verify rank theorems / dualize cones")
    cone.add_argument("action", choices=["verify", "dual"])
    cone.add_argument("--rank", type=int, default=7)
    cone.add_argument("--format", default="json", choices=["json", "porta"])
    _add_io(cone, construct=False)
    cone.set_defaults(func=_cmd_cone)

    gl = sub.add_parser("glue", help="identify two constructions at given ranks")
    gl.add_argument("--left", required=True)
    gl.add_argument("--right", required=True)
    gl.add_argument("--ranks", default="", help="comma-joined mid ranks to identify")
    gl.add_argument("--out")
    gl.set_defaults(func=_cmd_glue)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(_dump_json({"error": str(exc), "type": type(exc).__name__}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
