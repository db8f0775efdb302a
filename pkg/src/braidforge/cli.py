"""Command-line front end: ``braidforge braid|family|paper ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .braid_core import BraidError, BraidWord, format_braid, parse_braid
from .families import (
    FamilyError,
    FamilyParams,
    companion_mid_t,
    companion_t,
    companion_v,
    default_grid,
    parse_tlink,
    parse_vlink,
    satellite_family_t,
    satellite_family_v,
    t_link_braid,
    v_link_braid,
)
from .garside import extract_full_twists, normal_form
from .invariants import closure_components, invariant_bundle, linking_matrix
from .report import verify_all
from .satellite_ops import adjoin_axis, delete_components, match_case2_form

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _nf_dict(nf) -> dict:
    return {
        "strands": nf.strands,
        "delta_power": nf.delta_power,
        "factors": [list(f.word()) for f in nf.factors],
        "word": format_braid(nf.word()),
    }


def _input_braid(args) -> BraidWord:
    given = [x for x in (args.braid, args.tlink, args.vlink) if x]
    if len(given) != 1:
        raise BraidError("give exactly one of BRAID, --tlink, --vlink")
    if args.tlink:
        return t_link_braid(parse_tlink(args.tlink))
    if args.vlink:
        return v_link_braid(parse_vlink(args.vlink))
    return parse_braid(args.braid)


def _cmd_braid(args) -> dict:
    w = _input_braid(args)
    out: dict = {"input": format_braid(w)}
    sub = args.braid_cmd
    if sub == "normalize":
        out["normal_form"] = _nf_dict(normal_form(w))
    elif sub == "components":
        parts = closure_components(w)
        out["components"] = [list(c) for c in parts.cycles]
        out["count"] = len(parts)
    elif sub == "linking":
        lk = linking_matrix(w)
        out["ids"] = list(lk.ids)
        out["matrix"] = lk.matrix.tolist()
        out["multiset"] = list(lk.multiset())
    elif sub == "twists":
        k, rem = extract_full_twists(w)
        out["full_twists"] = k
        out["remainder"] = _nf_dict(rem)
    elif sub == "invariants":
        out["bundle"] = invariant_bundle(w).to_dict()
    elif sub == "delete":
        try:
            ids = [int(x) for x in args.components.split(",") if x.strip()]
        except ValueError:
            raise BraidError(f"component ids must be integers: {args.components!r}") from None
        res = delete_components(w, ids)
        out["braid"] = format_braid(res.braid)
        out["removed_letters"] = res.removed_letters
        out["strand_map"] = {str(k): v for k, v in sorted(res.strand_map.items())}
    elif sub == "adjoin-axis":
        out["braid"] = format_braid(adjoin_axis(w))
    elif sub == "match-case2":
        m = match_case2_form(w, wheel_cap=args.wheel_cap)
        out.update(matched=m.matched, a=m.a, wheel_power=m.wheel_power,
                   b0=format_braid(m.b0) if m.b0 is not None else None)
    return out


_MAKERS = {
    "satellite-t": lambda p: satellite_family_t(p),
    "satellite-v": lambda p: satellite_family_v(p),
    "companion-t": lambda p: companion_t(p.k),
    "companion-mid-t": lambda p: companion_mid_t(p.k),
    "companion-v": lambda p: companion_v(p.k),
}


def _cmd_family(args) -> dict:
    if args.family_cmd == "tlink":
        spec = parse_tlink(args.spec)
        w = t_link_braid(spec)
    elif args.family_cmd == "vlink":
        spec = parse_vlink(args.spec)
        w = v_link_braid(spec)
    else:
        spec = _MAKERS[args.kind](FamilyParams(args.a, args.b, args.c, args.k))
        w = v_link_braid(spec) if str(spec).startswith("V") else t_link_braid(spec)
    return {"spec": str(spec), "braid": format_braid(w), "strands": w.strands, "length": len(w)}


def parse_grid(text: str | None) -> list[FamilyParams]:
    """``default`` or ``a,b,c,k;a,b,c,k;...``."""
    if text is None or text.strip() == "default":
        return default_grid()
    out = []
    for item in text.split(";"):
        if not item.strip():
            continue
        try:
            vals = [int(x) for x in item.split(",")]
        except ValueError:
            vals = []
        if len(vals) != 4:
            raise FamilyError(f"grid point needs a,b,c,k: {item!r}")
        out.append(FamilyParams(*vals).validate())
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidforge", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="group", required=True)

    braid = top.add_parser("braid", help="operations on a single braid")
    bsub = braid.add_subparsers(dest="braid_cmd", required=True)
    for name in ("normalize", "components", "linking", "twists", "invariants",
                 "delete", "adjoin-axis", "match-case2"):
        p = bsub.add_parser(name)
        p.add_argument("braid", nargs="?", help='braid text, e.g. "3: 1 2 1 2 1 2"')
        p.add_argument("--tlink", help='e.g. "T((3,1),(7,3))"')
        p.add_argument("--vlink", help='e.g. "V((2,2),(3,3))"')
        if name == "delete":
            p.add_argument("--components", required=True, help="comma-separated component ids")
        if name == "match-case2":
            p.add_argument("--wheel-cap", type=int, default=None)

    fam = top.add_parser("family", help="build T-/V-link braids")
    fsub = fam.add_subparsers(dest="family_cmd", required=True)
    fsub.add_parser("tlink").add_argument("spec")
    fsub.add_parser("vlink").add_argument("spec")
    mk = fsub.add_parser("make")
    mk.add_argument("--kind", choices=sorted(_MAKERS), required=True)
    for name in "abc":
        mk.add_argument(f"--{name}", type=int, default=1)
    mk.add_argument("--k", type=int, default=0)

    paper = top.add_parser("paper", help="run the verification pipelines")
    psub = paper.add_subparsers(dest="paper_cmd", required=True)
    va = psub.add_parser("verify-all")
    va.add_argument("--kmax", type=int, default=5)
    va.add_argument("--grid", default=None, help='"default" or "a,b,c,k;a,b,c,k"')
    va.add_argument("--format", choices=("json", "text"), default="json")
    va.add_argument("--out", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.group == "paper":
            report = verify_all(args.kmax, parse_grid(args.grid))
            text = report.to_json() if args.format == "json" else report.to_text()
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text + "\n")
            else:
                print(text)
            return EXIT_OK if report.ok else EXIT_FAIL
        out = _cmd_braid(args) if args.group == "braid" else _cmd_family(args)
    except (BraidError, FamilyError) as exc:
        print(f"braidforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
