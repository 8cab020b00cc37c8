"""Command line front end.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .presentations import FAMILIES, FamilySpec, PresentationError, make_family
from .scalars import parse_scalar

COMMANDS = ("make", "verify", "report", "grouplikes", "primitives", "twistor", "iso", "classify", "suite")

_FAMILY_ALIASES = {f.lower(): f for f in FAMILIES}
_FAMILY_ALIASES.update({"polynomial": "PolynomialLine", "laurent": "LaurentLine", "kd": "Dihedral", "b": "Liu", "h": "Taft"})


class InputError(ValueError):
    pass


def _family_args(p: argparse.ArgumentParser, suffix: str = "", required: bool = True) -> None:
    tag = f" (second algebra)" if suffix else ""
    p.add_argument(f"--family{suffix}", required=required, help=f"one of {', '.join(FAMILIES)}{tag}")
    p.add_argument(f"--n{suffix}", type=int)
    p.add_argument(f"--t{suffix}", type=int)
    p.add_argument(f"--w{suffix}", type=int)
    p.add_argument(f"--xi{suffix}", help='primitive n-th root of 1, e.g. "z(4)^3"')
    p.add_argument(f"--theta{suffix}", help="Liu only: theta (xi is derived from it)")
    p.add_argument(f"--i0{suffix}", type=int, help="Liu only: override i0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primehopf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, help="truncation degree D (default 2n)")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--out", help="also write the output to this file")

    for name, helptext in [
        ("make", "build a family and print its presentation"),
        ("verify", "check the Hopf axioms on generators and random elements"),
        ("report", "invariant report (io, im, PI-degree, fixed rings, J_iq, dichotomy)"),
        ("grouplikes", "group-like elements in the window"),
        ("primitives", "(a,1)-skew-primitive elements in the window"),
        ("twistor", "twistor tables and their structural identities"),
        ("suite", "run every check on one algebra"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        _family_args(p)
        if name == "verify":
            p.add_argument("--samples", type=int, default=50)
            p.add_argument("--seed", type=int, default=0)
        if name == "report":
            p.add_argument("--figures", metavar="DIR", help="write figures into DIR")
        if name == "primitives":
            p.add_argument("--a", default=None, help="group-like word, e.g. 'g' (default: the skew generator's partner)")

    p = sub.add_parser("iso", parents=[common], help="Hopf isomorphism between two algebras")
    _family_args(p)
    _family_args(p, "2")

    p = sub.add_parser("classify", parents=[common], help="families with given io, im and dichotomy")
    p.add_argument("--io", type=int, required=True)
    p.add_argument("--im", type=int, required=True)
    p.add_argument("--dichotomy", choices=("primitive", "grouplike", "any"), default="any")
    return parser


def spec_from_args(args, suffix: str = "") -> FamilySpec:
    get = lambda k: getattr(args, k + suffix, None)
    fam = _FAMILY_ALIASES.get((get("family") or "").lower())
    if fam is None:
        raise InputError(f"unknown family {get('family')!r}; expected one of {', '.join(FAMILIES)}")
    try:
        xi = parse_scalar(get("xi")) if get("xi") else None
        theta = parse_scalar(get("theta")) if get("theta") else None
    except ValueError as e:
        raise InputError(str(e)) from None
    if fam == "Taft":
        if get("n") is None or get("t") is None:
            raise InputError("Taft needs --n and --t")
        return FamilySpec.taft(get("n"), get("t"), xi)
    if fam == "Liu":
        if get("n") is None or get("w") is None:
            raise InputError("Liu needs --n and --w")
        return FamilySpec.liu(get("n"), get("w"), theta=theta, i0=get("i0"), xi=xi)
    return {"PolynomialLine": FamilySpec.polynomial_line, "LaurentLine": FamilySpec.laurent_line,
            "Dihedral": FamilySpec.dihedral}[fam]()


# commands -----------------------------------------------------------------------------


def _window(args, H):
    from .hopf import TruncationWindow

    return TruncationWindow(args.window if args.window is not None else H.default_window())


def cmd_make(args, H):
    from .hopf import antipode, coproduct, counit

    doc = {
        "family": H.family,
        "params": H.spec.params(),
        "generators": list(H.generators),
        "relations": [f"{r.name}" for r in H.relations],
        "coalgebra": {
            g: {
                "Delta": str(coproduct(H.generator(g))),
                "epsilon": str(counit(H.generator(g))),
                "S": str(antipode(H.generator(g))),
            }
            for g in H.generators
        },
    }
    if H.family == "Liu":
        conv = H.conversion()
        w = lambda word: " ".join(f"{g}^{e}" if e != 1 else g for g, e in word if e)
        doc["conversion"] = {**{k: w(v) for k, v in conv.to_hf.items()}, **{k: w(v) for k, v in conv.to_xg.items()}}
    return doc, True


def cmd_verify(args, H):
    from .hopf import verify_hopf_axioms

    rep = verify_hopf_axioms(H, n_random=args.samples, seed=args.seed)
    doc = {
        "presentation": H.name,
        "passed": rep.passed,
        "summary": {k: f"{ok}/{tot}" for k, (ok, tot) in rep.summary().items()},
        "records": rep.records if args.format == "structured" else rep.failures()[:10],
    }
    return doc, rep.passed


def cmd_report(args, H):
    from .classify import report

    rep = report(H)
    doc = rep.to_dict()
    if args.figures:
        from .plotting import report_figures

        doc["figures"] = report_figures(H, rep, args.figures)
    return doc, True


def cmd_grouplikes(args, H):
    from .hopf import grouplike_certificate, grouplikes

    w = _window(args, H)
    found = grouplikes(H, w)
    return {"window": w.D, "grouplikes": [str(a) for a in found], "certificate": grouplike_certificate(H, w)}, True


def cmd_primitives(args, H):
    from .hopf import skew_primitives

    word = args.a
    if word is None:
        word = {"Taft": f"g^{H.spec.t}", "Liu": "g", "Dihedral": "g"}.get(H.family, "1")
    a = H.normalize(word)
    w = _window(args, H)
    try:
        basis = skew_primitives(H, a, w)
    except ValueError as e:
        raise InputError(str(e)) from None
    return {"a": str(a), "window": w.D, "dimension": len(basis), "basis": [str(z) for z in basis]}, True


def cmd_twistor(args, H):
    from .twistor import TwistorError, coproduct_table, twistor, verify_section6

    try:
        T = twistor(H)
    except TwistorError as e:
        raise InputError(str(e)) from None
    checks = verify_section6(T)
    doc = {"dimension": T.dimension, "q": str(T.q), "checks": checks}
    if args.format == "structured":
        doc["tables"] = T.to_dict()
    else:
        doc["c^0j_ss"] = {f"j={j}": [str(T.c(0, j, s, s)) for s in range(T.n)] for j in range(T.n)}
    return doc, all(checks.values())


def cmd_suite(args, H):
    from .classify import run_suite

    res = run_suite(H)
    return res.to_dict(), res.passed


def cmd_iso(args, H):
    from .classify import family_iso

    B = make_family(spec_from_args(args, "2"))
    verdict = family_iso(H, B)
    return {"A": H.name, "B": B.name, **verdict.to_dict()}, True


def cmd_classify(args):
    from .classify import ClassificationQuery, classify

    try:
        q = ClassificationQuery(args.io, args.im, args.dichotomy)
    except ValueError as e:
        raise InputError(str(e)) from None
    return {"io": q.io, "im": q.im, "dichotomy": q.dichotomy, **classify(q).to_dict()}, True


HANDLERS = {
    "make": cmd_make,
    "verify": cmd_verify,
    "report": cmd_report,
    "grouplikes": cmd_grouplikes,
    "primitives": cmd_primitives,
    "twistor": cmd_twistor,
    "suite": cmd_suite,
    "iso": cmd_iso,
}


# output --------------------------------------------------------------------------------


def render_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(doc))
    return "\n".join(lines)


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "pass" if v else "FAIL"
    if v == [] or v == {}:
        return "none"
    return str(v)


def emit(doc, fmt: str, out=None) -> None:
    text = json.dumps(doc, indent=2) if fmt == "structured" else render_text(doc)
    print(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            doc, ok = cmd_classify(args)
        else:
            H = make_family(spec_from_args(args))
            doc, ok = HANDLERS[args.command](args, H)
    except (InputError, PresentationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    emit(doc, args.format, args.out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
