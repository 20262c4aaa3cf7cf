"""Command-line front end.

Every command takes an algebra FILE: a quiver presentation, a structure
constant ``.json`` file, or ``builtin:NAME:N``.  Exit codes: 0 success,
1 usage error, 2 parse error, 3 failed verification, 4 inconclusive
Frobenius detection.
"""

import argparse
import json
import sys
from pathlib import Path

from . import exactmath as em
from .algebra import algebra_from_json, center, radical, socle_left, socle_right
from .checks import run_all
from .errors import AlgebraError, ParseError, TargetNotFrobenius
from .fixtures import FixtureSet
from .frobenius import (
    Counit, frobenius_check, frobenius_from_counit, frobenius_space, handle,
    separability_element, symbolic_handle,
)
from .presentations import build_algebra, parse_builtin_spec, parse_presentation
from .schur import (
    parse_morphism, schur_element, verify_casimir_transport, verify_handle_transport,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


# -- loading ----------------------------------------------------------------------

def load_algebra(spec, maxlen=None):
    """(algebra, presentation or None, basis paths or None)"""
    if spec.startswith("builtin:"):
        A, _ = parse_builtin_spec(spec)
        return A, None, None
    path = Path(spec)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {spec}: {e.strerror}") from None
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno, spec) from None
        try:
            return algebra_from_json(data), None, None
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad structure-constant file: {e}", source=spec) from None
    pres = parse_presentation(text, source=spec)
    A, paths = build_algebra(pres, maxlen=maxlen)
    return A, pres, paths


def _vec(v):
    return [em.fmt(x) for x in v]


def _mat(m):
    return [_vec(r) for r in m]


def _elt(x):
    return {"coords": _vec(x.coords), "text": repr(x)}


def _subspace(S):
    return {"dim": S.dim, "basis": [repr(x) for x in S.elements()]}


def _summary(A):
    return {"name": A.name, "dim": A.dim, "labels": list(A.labels)}


# -- commands ---------------------------------------------------------------------
# each returns (report, text lines, exit code)

def cmd_build(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    rep = {"algebra": _summary(A)}
    return rep, [f"algebra {A.name}", f"dim {A.dim}", "basis " + " ".join(A.labels)], 0


def cmd_frobspace(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    E = frobenius_space(A)
    rep = {"algebra": _summary(A), "frobdim": E.dim,
           "basis": [_mat(d.t1.coeff) for d in E.basis],
           "basis_text": [repr(d.t1) for d in E.basis]}
    lines = [f"algebra {A.name} (dim {A.dim})", f"frobdim {E.dim}"]
    lines += [f"  Delta_{k + 1}(1) = {d.t1!r}" for k, d in enumerate(E.basis)]
    return rep, lines, 0


def cmd_handle(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    E = frobenius_space(A)
    hs = [handle(d) for d in E.basis]
    sym = symbolic_handle(E)
    rep = {"algebra": _summary(A), "frobdim": E.dim,
           "handles": [_elt(h) for h in hs], "symbolic": sym}
    lines = [f"algebra {A.name} (dim {A.dim})", f"frobdim {E.dim}"]
    lines += [f"  omega(Delta_{k + 1}) = {h!r}" for k, h in enumerate(hs)]
    lines.append(f"omega = {sym}")
    return rep, lines, 0


def cmd_socle(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    J = radical(A)
    rep = {"algebra": _summary(A)}
    lines = [f"algebra {A.name} (dim {A.dim})"]
    sides = ("right", "left") if args.side == "both" else (args.side,)
    for side in sides:
        S = socle_right(A, J) if side == "right" else socle_left(A, J)
        rep[f"socle_{side}"] = _subspace(S)
        lines.append(f"socle_{side} {S!r}")
    return rep, lines, 0


def cmd_radical(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    J = radical(A)
    return ({"algebra": _summary(A), "radical": _subspace(J)},
            [f"algebra {A.name} (dim {A.dim})", f"radical {J!r}"], 0)


def cmd_center(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    Z = center(A)
    return ({"algebra": _summary(A), "center": _subspace(Z)},
            [f"algebra {A.name} (dim {A.dim})", f"center {Z!r}"], 0)


def cmd_separable(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    e = separability_element(A)
    rep = {"algebra": _summary(A), "separable": e is not None,
           "element": _mat(e.coeff) if e is not None else None,
           "element_text": repr(e) if e is not None else None}
    lines = [f"algebra {A.name} (dim {A.dim})",
             "separable" if e is not None else "not separable"]
    if e is not None:
        lines.append(f"separability element {e!r}")
    return rep, lines, 0


def cmd_frobcheck(args):
    A, _, _ = load_algebra(args.file, args.maxlen)
    v = frobenius_check(A, trials=args.trials, seed=args.seed)
    rep = {"algebra": _summary(A), "status": v.status, "trials": v.trials, "seed": args.seed}
    lines = [f"algebra {A.name} (dim {A.dim})", f"status {v.status}"]
    if v.status == "frobenius":
        rep["counit"] = _vec(v.counit.eps)
        rep["coproduct"] = _mat(v.coproduct.t1.coeff)
        rep["coproduct_text"] = repr(v.coproduct.t1)
        lines += [f"counit [{', '.join(_vec(v.counit.eps))}] (trial {v.trials})",
                  f"Delta(1) = {v.coproduct.t1!r}"]
    elif v.status == "not_frobenius":
        rep["certificate"] = {"side": v.certificate_side, "span": _subspace(v.certificate)}
        lines.append(f"certificate: 1 is not in the {v.certificate_side}-leg span "
                     f"{v.certificate!r}")
    else:
        lines.append(f"no nondegenerate counit found in {v.trials} trials")
    return rep, lines, 4 if v.status == "inconclusive" else 0


def _parse_vector(text, n, what):
    try:
        vals = [em.frac(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad {what} {text!r}: expected comma-separated rationals") from None
    if len(vals) != n:
        raise UsageError(f"{what} needs {n} values, got {len(vals)}")
    return vals


def cmd_schur(args):
    A, presA, pathsA = load_algebra(args.source, args.maxlen)
    B, _, _ = load_algebra(args.target, args.maxlen)
    try:
        text = Path(args.morphism).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {args.morphism}: {e.strerror}") from None
    phi = parse_morphism(text, A, B, pres=presA, paths=pathsA, source=args.morphism)
    if args.counit is not None:
        eps = Counit(B, _parse_vector(args.counit, B.dim, "counit"))
    else:
        v = frobenius_check(B, trials=args.trials, seed=args.seed)
        if not v.is_frobenius:
            raise TargetNotFrobenius(f"target is {v.status}; pass --counit explicitly")
        eps = v.counit
    degenerate = not eps.is_nondegenerate()
    if degenerate and not args.allow_degenerate:
        raise TargetNotFrobenius("counit on the target has a singular Gram matrix "
                           "(use --allow-degenerate to evaluate the sum anyway)")
    E = frobenius_space(A)
    if args.coproduct is not None:
        members = [("given", E.combination(_parse_vector(args.coproduct, E.dim, "coproduct")))]
    else:
        members = [(f"Delta_{k + 1}", d) for k, d in enumerate(E.basis)]
    cB = None if degenerate else frobenius_from_counit(B, eps)
    rep = {"source": _summary(A), "target": _summary(B), "morphism": phi.name,
           "surjective": phi.is_surjective, "counit": _vec(eps.eps),
           "counit_nondegenerate": not degenerate, "frobdim": E.dim, "results": []}
    lines = [f"morphism {phi.name}: {A.name} -> {B.name}",
             f"surjective {str(phi.is_surjective).lower()}",
             f"counit [{', '.join(_vec(eps.eps))}]" + (" (degenerate)" if degenerate else "")]
    for label, c in members:
        data = schur_element(phi, c, eps, require_frobenius=not degenerate)
        r = {"coproduct": label, "s_phi": _elt(data.s_phi), "central": data.central,
             "invertible": data.invertible,
             "inverse": _elt(data.inverse) if data.inverse is not None else None}
        line = f"  {label}: s_phi = {data.s_phi!r}, central {str(data.central).lower()}, " \
               f"invertible {str(data.invertible).lower()}"
        if cB is not None:
            r["casimir_transport"] = verify_casimir_transport(phi, c, cB, eps)
            r["casimir_transport_second_leg"] = verify_casimir_transport(phi, c, cB, eps, leg="second")
            r["handle_transport"] = verify_handle_transport(phi, c, cB, eps)
            line += f", transport {str(r['casimir_transport'] and r['handle_transport']).lower()}"
        if data.section is not None:
            sec = data.section
            r["section"] = {"matrix": _mat(sec.matrix), "splits": sec.splits,
                            "right_linear": sec.right_linear, "left_linear": sec.left_linear}
            line += f", section splits {str(sec.splits).lower()}"
        rep["results"].append(r)
        lines.append(line)
    return rep, lines, 0


def cmd_suite(args):
    fx = FixtureSet(args.fixtures) if args.fixtures else None
    results = run_all(fx, seed=args.seed)
    rep = {"results": [{"criterion": r.number, "name": r.name, "passed": r.passed,
                        "details": r.lines} for r in results],
           "passed": all(r.passed for r in results)}
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.number} {r.name}")
        if args.verbose or not r.passed:
            lines += [f"        {l}" for l in r.lines]
    failed = [r for r in results if not r.passed]
    if failed:
        lines.append(f"first failing criterion: {failed[0].number} {failed[0].name}")
    return rep, lines, 3 if failed else 0


# -- entry point ------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="nearfrob", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--maxlen", type=int, help="override the length bound of a presentation")
    common.add_argument("--seed", type=int, default=0, help="seed for the counit search")
    common.add_argument("--trials", type=int, default=20, help="random counits to try")

    for name, fn, helptext in [
        ("build", cmd_build, "dimension and basis"),
        ("frobspace", cmd_frobspace, "basis of all nearly Frobenius coproducts"),
        ("handle", cmd_handle, "handle elements, per basis coproduct and symbolic"),
        ("radical", cmd_radical, "Jacobson radical"),
        ("center", cmd_center, "center"),
        ("separable", cmd_separable, "separability element"),
        ("frobcheck", cmd_frobcheck, "Frobenius detection"),
    ]:
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        s.set_defaults(func=fn)

    s = sub.add_parser("socle", parents=[common], help="right and left socles")
    s.add_argument("file")
    s.add_argument("--side", choices=["left", "right", "both"], default="both")
    s.set_defaults(func=cmd_socle)

    s = sub.add_parser("schur", parents=[common], help="Schur element of an epimorphism")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("morphism")
    s.add_argument("--counit", help="comma-separated values of the target counit on its basis")
    s.add_argument("--coproduct", help="comma-separated coefficients over the source's "
                                       "coproduct basis (default: each basis member)")
    s.add_argument("--allow-degenerate", action="store_true",
                   help="evaluate the Schur sum for a singular counit")
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("suite", parents=[common], help="run the verification suite")
    s.add_argument("--fixtures", help="directory of replacement fixture files")
    s.add_argument("-v", "--verbose", action="store_true", help="show every sub-check")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits on --help and on usage errors; report the code instead
        return e.code if isinstance(e.code, int) else 1
    try:
        rep, lines, code = args.func(args)
    except UsageError as e:
        print(f"nearfrob: error: {e}", file=sys.stderr)
        return 1
    except ParseError as e:
        print(f"nearfrob: parse error: {e}", file=sys.stderr)
        return 2
    except AlgebraError as e:
        print(f"nearfrob: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(rep, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
