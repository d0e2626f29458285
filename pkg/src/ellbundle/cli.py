"""Command line front end.

Exit codes: 0 on success, 1 on domain errors (a JSON error object goes to
stderr), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bundles as bd
from . import chern_formulas as cf
from . import fibration as fb
from . import identities
from . import spectral as sp
from . import stability as st
from .cohomology import BACKEND, chern_class, chern_character, fibration_ring, series_ratio
from .curve import Field, WeierstrassCurve, discriminant, format_rational
from .errors import EllBundleError


class UsageError(Exception):
    pass


def load_json(text: str):
    """Inline JSON, ``@path`` or a path to a JSON file."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return json.load(fh)
    if not text.lstrip().startswith(("{", "[")) and os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise EllBundleError(f"invalid JSON: {exc}") from None


def _curve(args) -> WeierstrassCurve:
    if getattr(args, "curve", None):
        return WeierstrassCurve.from_json(load_json(args.curve))
    if args.g2 is None or args.g3 is None:
        raise UsageError("give --g2 and --g3 (or --curve JSON)")
    return WeierstrassCurve(args.g2, args.g3, Field.from_name(args.field))


def _point(curve: WeierstrassCurve, text: str):
    text = text.strip()
    if text.lower() in ("o", "p0", "inf", "identity"):
        return curve.identity
    if text.startswith("{"):
        return curve.point_from_json(json.loads(text))
    parts = text.strip("()").split(",")
    if len(parts) != 2:
        raise EllBundleError(f"cannot read point {text!r}; use x,y or p0")
    return curve.point(parts[0], parts[1])


def _points(curve: WeierstrassCurve, text: str) -> list:
    return [_point(curve, p) for p in text.split(";") if p.strip()]


def _vector(text: str) -> tuple:
    text = text.strip()
    if text.startswith("["):
        return tuple(int(x) for x in json.loads(text))
    return tuple(int(x) for x in text.split(","))


# -- verbs -----------------------------------------------------------------------


def cmd_curve(args):
    C = _curve(args)
    act = args.action
    if act == "classify":
        kind = C.classify()
        data = {"curve": C.to_json(), "type": kind.value, "discriminant": str(C.discriminant)}
        if C.node_is_split is not None:
            data["split"] = C.node_is_split
        return str(kind), data
    if act == "discriminant":
        d = discriminant(C.g2, C.g3)
        return str(d), {"discriminant": str(d)}
    if act == "singular-point":
        P = C.singular_point
        return ("none" if P is None else str(P)), (None if P is None else P.to_json())
    if act == "add":
        R = C.add(_point(C, args.P), _point(C, args.Q))
        return str(R), R.to_json()
    if act == "neg":
        R = C.neg(_point(C, args.P))
        return str(R), R.to_json()
    if act == "mul":
        R = C.scalar_mul(args.k, _point(C, args.P))
        return str(R), R.to_json()
    if act == "torsion":
        pts = sorted(C.torsion_points(args.n), key=lambda P: P.sort_key())
        return "\n".join(map(str, pts)), [P.to_json() for P in pts]
    if act == "in-system":
        pts = _points(C, args.points)
        ok = C.in_linear_system(pts, args.n if args.n is not None else len(pts))
        return str(ok).lower(), {"inLinearSystem": ok}
    if act == "points":
        pts = C.points()
        return "\n".join(map(str, pts)), [P.to_json() for P in pts]
    if act == "order":
        k = C.group_order()
        return str(k), {"order": k, "split": C.node_is_split}
    raise UsageError(f"unknown curve action {act!r}")  # pragma: no cover


def _bundle(args, key="bundle") -> bd.AtiyahBundle:
    text = getattr(args, key)
    if text is None:
        raise UsageError(f"--{key} is required")
    return bd.AtiyahBundle.from_json(load_json(text))


def _divisor_text(D: bd.LinearSystemDivisor) -> str:
    flag = "" if D.in_linear_system else f"  [class {D.det_class}]"
    return str(D) + flag


def cmd_zeta(args):
    act = args.action
    if act == "h0-bound":
        profile = [tuple(x) for x in load_json(args.profile)]
        bound = bd.h0_bound(profile)
        data = {"bound": format_rational(bound)}
        if args.h0 is not None:
            data["holds"] = bd.h0_bound_check(profile, args.h0)
            return f"{format_rational(bound)} {str(data['holds']).lower()}", data
        return format_rational(bound), data
    V = _bundle(args)
    if act == "divisor":
        D = bd.zeta(V)
        return _divisor_text(D), D.to_json()
    if act == "dim-hom":
        W = _bundle(args, "other") if args.other else V
        k = bd.dim_hom(V, W)
        return str(k), {"dimHom": k}
    if act == "is-regular":
        ok = bd.is_regular(V)
        return str(ok).lower(), {"regular": ok}
    if act == "h0-twist":
        lam = _point(V.curve, args.P)
        k = bd.h0_twist(V, lam)
        return str(k), {"h0": k}
    if act == "dual":
        W = bd.dual(V)
        return str(W), W.to_json()
    if act == "det":
        P = bd.det_point(V)
        return str(P), P.to_json()
    raise UsageError(f"unknown zeta action {act!r}")  # pragma: no cover


def _divisor(args) -> bd.LinearSystemDivisor:
    C = _curve(args)
    if args.points is None:
        raise UsageError("--points is required")
    return bd.LinearSystemDivisor.from_points(C, _points(C, args.points))


def cmd_regular_rep(args):
    V = bd.regular_representative(_divisor(args))
    return str(V), V.to_json()


def cmd_spectral(args):
    act = args.action
    if act == "fiber":
        Fb = sp.fiber(_divisor(args))
        return str(Fb), Fb.to_json()
    if act == "ramification":
        C = _curve(args)
        divs = sorted(sp.full_ramification_locus(C, args.n), key=str)
        return "\n".join(map(str, divs)), [D.to_json() for D in divs]
    if act == "fiber-of-r":
        C = _curve(args)
        divs = sorted(sp.fiber_of_r(C, args.n, _point(C, args.P), args.samples, args.seed), key=str)
        return "\n".join(map(str, divs)), [D.to_json() for D in divs]
    if act == "irreducible":
        C = _curve(args)
        fam = [bd.LinearSystemDivisor.from_points(C, _points(C, s)) for s in args.family.split("|")]
        ok = sp.cover_is_irreducible(fam)
        return str(ok).lower(), {"irreducible": ok}
    raise UsageError(f"unknown spectral-fiber action {act!r}")  # pragma: no cover


def _emit_class(x, weight):
    if weight is not None:
        x = x.weight_part(weight)
    return str(x), x.to_json()


def cmd_chern(args):
    act, n, N = args.action, args.n, args.truncation
    if act == "series-ratio":
        R = fibration_ring(N)
        x = series_ratio(args.c, R.gen("L"))
        return _emit_class(x, args.weight)
    if n is None:
        raise UsageError("--n is required")
    kind = args.kind
    if args.ring == "curve":
        if act == "ua":
            _need(args, "a")
            data = (cf.ch_Ua_twist_singlecurve(n, args.a, args.b, N) if kind == "ch"
                    else (cf.c_Ua_singlecurve(n, args.a, N) if args.b == 0
                          else cf.ch_Ua_twist_singlecurve(n, args.a, args.b, N).to_c()))
        elif act == "u0":
            data = cf.ch_U0_singlecurve(n, N) if kind == "ch" else cf.c_U0_singlecurve(n, N)
        elif act == "ud":
            _need(args, "d")
            data = cf.ch_Ud_singlecurve(n, args.d, N) if kind == "ch" else cf.c_Ud_singlecurve(n, args.d, N)
        elif act == "poincare":
            data = cf.ch_U_poincare(n, N) if kind == "ch" else cf.c_U_poincare(n, N)
        else:
            raise EllBundleError(f"{act} has no single-curve form")
        x = data.total
        if args.convert:
            x = data.to_ch().total if kind == "c" else data.to_c().total
        return _emit_class(x, args.weight)
    if act == "ua":
        _need(args, "a")
        x = (cf.ch_Ua_fibration(n, args.a, N) if kind == "ch"
             else cf.c_Ua_fibration(n, args.a, N, args.branch))
    elif act == "u0":
        x = cf.ch_Ua_fibration(n, 0, N) if kind == "ch" else cf.c_Ua_fibration(n, 0, N)
    elif act == "ud":
        _need(args, "d")
        x = cf.ch_Ud_fibration(n, args.d, N) if kind == "ch" else cf.c_Ud_fibration(n, args.d, N)
    elif act == "vn":
        x = cf.ch_Vn(n, N)
    elif act == "wn-sigma":
        x = cf.ch_Wn_on_sigma(n, N)
    elif act == "wn":
        x = cf.ch_Wn(n, N)
    elif act == "recursion":
        _need(args, "a")
        x = cf.modification_increment(n, args.a, N)
    elif act == "c1-displayed":
        _need(args, "a")
        x = cf.c1_Ua_displayed(n, args.a, N)
    elif act == "c2-displayed":
        _need(args, "a")
        x = cf.c2_Ua_displayed(n, args.a, N)
    else:
        raise EllBundleError(f"{act} has no fibration form")
    if args.convert:
        x = chern_character(x, n) if kind == "c" else chern_class(x)[0]
    if args.specialize:
        x = cf.specialize(x, n)
    return _emit_class(x, args.weight)


def _need(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"--{name} is required")


def _section(args) -> fb.SectionSpec:
    if args.section:
        return fb.SectionSpec.from_json(load_json(args.section))
    if args.L is None or args.n is None:
        raise UsageError("give --section JSON or --L, --alpha and --n")
    L = _vector(args.L)
    alpha = _vector(args.alpha) if args.alpha else (0,) * len(L)
    return fb.SectionSpec(fb.PicModel(len(L), L, alpha, None, args.dimB), args.n,
                          not any(alpha) and args.trivial)


def cmd_section(args):
    act = args.action
    if act == "splitting":
        _need(args, "n")
        _need(args, "a")
        T = fb.splitting_type_slice(args.n, args.a, args.at_p0, args.generic_line)
        return str(T), T.to_json()
    if act == "surface-c2":
        _need(args, "n")
        c = fb.surface_c2(args.n, args.a or 0, args.truncation)
        return f"c2 = {format_rational(c)} * sigma.alpha", {"sigmaAlpha": format_rational(c)}
    S = _section(args)
    a = args.a if args.a is not None else 0
    if act == "ch":
        return _emit_class(fb.ch_VAa_section(S, a, args.truncation), args.weight)
    if act == "det":
        v = fb.det_VAa(S, a)
        return str(list(v)), {"det": list(v)}
    if act == "trivial-det":
        sol = fb.trivial_det_solve(S)
        if sol is None:
            return "none", None
        return (f"a = {sol.a} mod {S.n}, N0 = {list(sol.N0)}",
                {"a": sol.a, "N0": list(sol.N0), "det": list(sol.det)})
    if act == "c1-twist":
        v = fb.c1_VA0_twist(S, _vector(args.pushforward) if args.pushforward else (0,) * S.pic.rank)
        return str(list(v)), {"c1": list(v)}
    if act == "parity":
        verdict = fb.symmetric_parity_check(S)
        return str(verdict), {"verdict": verdict.value}
    if act == "reducible-step":
        step = fb.reducible_step(S, a, args.truncation)
        return (f"increment = {step.increment}\nD = {list(step.D)}",
                {"increment": step.increment.to_json(), "D": list(step.D)})
    if act == "cover-class":
        c = fb.spectral_cover_class(S)
        return str(c), {"sigma": c.sigma_multiple, "alpha": list(c.alpha)}
    if act == "normal-bundle":
        return _emit_class(fb.normal_bundle_ch_section(S, args.truncation), args.weight)
    raise UsageError(f"unknown section action {act!r}")  # pragma: no cover


def _lattice(args) -> st.SurfaceLattice:
    text = args.lattice
    if text in st.SHIPPED_LATTICES:
        return st.SHIPPED_LATTICES[text]()
    return st.SurfaceLattice.from_json(load_json(text))


def _numerics(lat: st.SurfaceLattice, text: str) -> st.BundleNumerics:
    obj = load_json(text)
    return st.BundleNumerics(int(obj["rank"]), lat.vector(obj.get("c1", [0] * lat.rank)),
                             int(obj.get("c2", 0)))


def cmd_stability(args):
    act = args.action
    if act == "threshold":
        t0 = st.stability_threshold(args.n, args.c2)
        return format_rational(t0), {"t0": format_rational(t0)}
    if act == "modify":
        step = st.allowable_modification_c2(args.c2, args.e)
        text = str(step.c2) + ("  [violates c2 >= 0]" if step.floor_violated else "")
        return text, {"c2": step.c2, "floorViolated": step.floor_violated}
    lat = _lattice(args)
    if act == "slope":
        W = _numerics(lat, args.bundle)
        pol = lat.vector(load_json(args.polarization)) if args.polarization else lat.H0
        s = st.slope(lat, W, pol)
        return format_rational(s), {"slope": format_rational(s)}
    if act == "bogomolov":
        b = st.bogomolov(lat, _numerics(lat, args.bundle))
        return str(b), {"bogomolov": b}
    if act == "identity":
        V1, V2 = _numerics(lat, args.bundle), _numerics(lat, args.other)
        ok = st.bogomolov_identity_check(lat, V1, V2)
        return str(ok).lower(), {"holds": ok, "D": list(st.destabilizing_divisor(V1, V2))}
    if act == "walls":
        t = Fraction(args.t) if args.t is not None else st.stability_threshold(args.n, args.c2)
        walls = st.wall_search(lat, args.n, args.c2, t, args.bound)
        text = "\n".join(str(list(D)) for D in walls) or "none"
        return text, {"t": format_rational(t), "walls": [list(D) for D in walls]}
    raise UsageError(f"unknown stability action {act!r}")  # pragma: no cover


def cmd_verify(args):
    results = identities.run(args.suite, args.nmax, args.truncation)
    lines = [f"{r.name}: {r.passed}/{r.checked} passed" for r in results]
    total = sum(r.passed for r in results)
    lines.append(f"total: {total} passed, {sum(len(r.failures) for r in results)} failed")
    data = {"results": [r.to_json() for r in results], "passed": total}
    if any(not r.ok for r in results):
        raise SuiteFailure("\n".join(lines), data)
    return "\n".join(lines), data


class SuiteFailure(EllBundleError):
    def __init__(self, text, data):
        super().__init__("identity suite failed")
        self.text, self.data = text, data


# -- parser ----------------------------------------------------------------------


def _curve_flags(p):
    p.add_argument("--g2")
    p.add_argument("--g3")
    p.add_argument("--field", default="Q", help="Q or GF(p)")
    p.add_argument("--curve", help="curve JSON {field, g2, g3}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ellbundle", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--backend", action="store_true", help="print the product kernel in use")
    sub = parser.add_subparsers(dest="verb", metavar="verb")

    p = sub.add_parser("curve", help="Weierstrass cubic arithmetic")
    p.add_argument("action", choices=("classify", "discriminant", "singular-point", "add", "neg",
                                      "mul", "torsion", "in-system", "points", "order"))
    _curve_flags(p)
    p.add_argument("--P")
    p.add_argument("--Q")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--points", help="points x,y separated by ';'")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("zeta", help="Atiyah bundle algebra")
    p.add_argument("action", nargs="?", default="divisor",
                   choices=("divisor", "dim-hom", "is-regular", "h0-twist", "dual", "det", "h0-bound"))
    p.add_argument("--bundle", help="bundle JSON {curve, components}")
    p.add_argument("--other", help="second bundle JSON")
    p.add_argument("--P", help="point of the line bundle for h0-twist")
    p.add_argument("--profile", help="JSON list of [rank, degree]")
    p.add_argument("--h0", type=int)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("regular-rep", help="regular bundle with a given divisor")
    _curve_flags(p)
    p.add_argument("--points", required=True)
    p.set_defaults(func=cmd_regular_rep)

    p = sub.add_parser("spectral-fiber", help="spectral cover fibers")
    p.add_argument("action", nargs="?", default="fiber",
                   choices=("fiber", "ramification", "fiber-of-r", "irreducible"))
    _curve_flags(p)
    p.add_argument("--points")
    p.add_argument("--n", type=int)
    p.add_argument("--P")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", help="divisors separated by '|', points by ';'")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("chern", help="characteristic classes of universal bundles")
    p.add_argument("action", choices=("ua", "u0", "ud", "poincare", "vn", "wn", "wn-sigma",
                                      "recursion", "c1-displayed", "c2-displayed", "series-ratio"))
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--ring", choices=("fibration", "curve"), default="fibration")
    p.add_argument("--kind", choices=("ch", "c"), default="ch")
    p.add_argument("--branch", choices=cf.C_UA_BRANCHES)
    p.add_argument("--convert", action="store_true", help="convert c <-> ch by Newton's identities")
    p.add_argument("--specialize", action="store_true", help="restrict to a single curve")
    p.add_argument("--weight", type=int)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("section", help="bundles attached to a section")
    p.add_argument("action", choices=("ch", "det", "trivial-det", "c1-twist", "parity",
                                      "reducible-step", "cover-class", "normal-bundle",
                                      "splitting", "surface-c2"))
    p.add_argument("--section", help="JSON {picRank, L, alpha, n, dimB, flags}")
    p.add_argument("--L")
    p.add_argument("--alpha")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--dimB", type=int)
    p.add_argument("--trivial", action="store_true")
    p.add_argument("--pushforward")
    p.add_argument("--at-p0", action="store_true")
    p.add_argument("--generic-line", action="store_true")
    p.add_argument("--weight", type=int)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("stability", help="elliptic surface stability numerics")
    p.add_argument("action", choices=("slope", "bogomolov", "identity", "threshold", "walls", "modify"))
    p.add_argument("--lattice", default="rational",
                   help="shipped name (" + ", ".join(st.SHIPPED_LATTICES) + ") or JSON")
    p.add_argument("--bundle", help="JSON {rank, c1, c2}")
    p.add_argument("--other", help="JSON {rank, c1, c2}")
    p.add_argument("--polarization")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--c2", type=int, default=1)
    p.add_argument("--t")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--e", type=int, default=-1)
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("verify-identities", help="run the identity suites")
    p.add_argument("--suite", choices=tuple(identities.SUITES) + ("all",), default="all")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.backend:
        print(BACKEND)
        if args.verb is None:
            return 0
    if args.verb is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        text, data = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ellbundle: error: {exc}", file=sys.stderr)
        return 2
    except SuiteFailure as exc:
        print(exc.text if args.format == "text" else _dump(exc.data))
        print(_dump({"error": "SuiteFailure", "message": str(exc)}), file=sys.stderr)
        return 1
    except (EllBundleError, ZeroDivisionError, ValueError, KeyError, TypeError, OSError) as exc:
        print(_dump({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    print(text if args.format == "text" else _dump(data))
    return 0


# Every library operation and a command line that reaches it.
OPERATION_ROUTES = {
    "curve.discriminant": ["curve", "discriminant", "--g2", "1", "--g3", "0"],
    "curve.classify": ["curve", "classify", "--g2", "0", "--g3", "0"],
    "curve.singular_point": ["curve", "singular-point", "--g2", "3", "--g3", "1"],
    "curve.add": ["curve", "add", "--g2", "4", "--g3", "0", "--P=-1,0", "--Q", "0,0"],
    "curve.neg": ["curve", "neg", "--g2", "4", "--g3", "0", "--P", "0,0"],
    "curve.scalar_mul": ["curve", "mul", "--g2", "4", "--g3", "0", "--P", "0,0", "--k", "2"],
    "curve.torsion_points": ["curve", "torsion", "--g2", "4", "--g3", "0", "--n", "2"],
    "curve.in_linear_system": ["curve", "in-system", "--g2", "4", "--g3", "0",
                               "--points", "0,0;1,0;-1,0", "--n", "3"],
    "curve.points": ["curve", "points", "--g2", "4", "--g3", "0", "--field", "GF(5)"],
    "curve.group_order": ["curve", "order", "--g2", "0", "--g3", "0", "--field", "GF(7)"],
    "bundles.zeta": ["zeta", "divisor", "--bundle",
                     '{"curve": {"field": "Q", "g2": "4", "g3": "0"}, "components": '
                     '[{"point": {"X": "0", "Y": "0", "Z": "1"}, "partition": [1]}, '
                     '{"point": {"X": "1", "Y": "0", "Z": "1"}, "partition": [1]}, '
                     '{"point": {"X": "-1", "Y": "0", "Z": "1"}, "partition": [1]}]}'],
    "bundles.dim_hom": ["zeta", "dim-hom", "--bundle",
                        '{"curve": {"field": "Q", "g2": "4", "g3": "0"}, "components": '
                        '[{"point": {"X": "0", "Y": "1", "Z": "0"}, "partition": [2, 1]}]}'],
    "bundles.is_regular": ["zeta", "is-regular", "--bundle",
                           '{"curve": {"field": "Q", "g2": "4", "g3": "0"}, "components": '
                           '[{"point": {"X": "0", "Y": "1", "Z": "0"}, "partition": [3]}]}'],
    "bundles.h0_twist": ["zeta", "h0-twist", "--P", "p0", "--bundle",
                         '{"curve": {"field": "Q", "g2": "4", "g3": "0"}, "components": '
                         '[{"point": {"X": "0", "Y": "1", "Z": "0"}, "partition": [1, 1]}]}'],
    "bundles.dual": ["zeta", "dual", "--bundle",
                     '{"curve": {"field": "GF(5)", "g2": "4", "g3": "0"}, "components": '
                     '[{"point": {"X": "2", "Y": "2", "Z": "1"}, "partition": [2]}]}'],
    "bundles.det_point": ["zeta", "det", "--bundle",
                          '{"curve": {"field": "GF(5)", "g2": "4", "g3": "0"}, "components": '
                          '[{"point": {"X": "2", "Y": "2", "Z": "1"}, "partition": [2]}]}'],
    "bundles.h0_bound_check": ["zeta", "h0-bound", "--profile", "[[1, 2], [2, 0]]", "--h0", "6"],
    "bundles.regular_representative": ["regular-rep", "--g2", "4", "--g3", "0",
                                       "--points", "0,0;0,0;p0;p0"],
    "spectral.fiber": ["spectral-fiber", "fiber", "--g2", "4", "--g3", "0", "--field", "GF(5)",
                       "--points", "2,2;2,3"],
    "spectral.full_ramification_locus": ["spectral-fiber", "ramification", "--g2", "4",
                                         "--g3", "0", "--n", "2"],
    "spectral.fiber_of_r": ["spectral-fiber", "fiber-of-r", "--g2", "4", "--g3", "0",
                            "--field", "GF(5)", "--n", "3", "--P", "2,2", "--samples", "5"],
    "spectral.cover_is_irreducible": ["spectral-fiber", "irreducible", "--g2", "4", "--g3", "0",
                                      "--field", "GF(5)", "--family", "p0;2,2;2,3|p0;0,0;0,0"],
    "cohomology.ring_ops": ["chern", "ud", "--n", "3", "--d", "1"],
    "cohomology.exp": ["chern", "vn", "--n", "2"],
    "cohomology.series_ratio": ["chern", "series-ratio", "--c", "3", "--truncation", "3"],
    "cohomology.c_to_ch": ["chern", "u0", "--n", "3", "--ring", "curve", "--kind", "c", "--convert"],
    "cohomology.ch_to_c": ["chern", "ua", "--n", "3", "--a", "0", "--convert", "--weight", "2"],
    "chern_formulas.ch_U0_singlecurve": ["chern", "u0", "--n", "3", "--ring", "curve"],
    "chern_formulas.c_U0_singlecurve": ["chern", "u0", "--n", "3", "--ring", "curve", "--kind", "c"],
    "chern_formulas.ch_Ua_twist_singlecurve": ["chern", "ua", "--n", "3", "--a", "1", "--b", "1",
                                               "--ring", "curve"],
    "chern_formulas.ch_U_poincare": ["chern", "poincare", "--n", "4", "--ring", "curve"],
    "chern_formulas.ch_Ud_singlecurve": ["chern", "ud", "--n", "3", "--d", "1", "--ring", "curve"],
    "chern_formulas.c_Ud_singlecurve": ["chern", "ud", "--n", "3", "--d", "2", "--ring", "curve",
                                        "--kind", "c"],
    "chern_formulas.ch_Ud_fibration": ["chern", "ud", "--n", "2", "--d", "1", "--weight", "1"],
    "chern_formulas.ch_Ua_fibration": ["chern", "ua", "--n", "3", "--a", "0", "--ring", "fibration"],
    "chern_formulas.c_Ua_fibration": ["chern", "ua", "--n", "3", "--a", "-4", "--kind", "c",
                                      "--branch", "negative", "--weight", "2"],
    "chern_formulas.c_Ud_fibration": ["chern", "ud", "--n", "3", "--d", "2", "--kind", "c"],
    "chern_formulas.ch_Vn": ["chern", "vn", "--n", "3"],
    "chern_formulas.ch_Wn_on_sigma": ["chern", "wn-sigma", "--n", "3"],
    "chern_formulas.modification_increment": ["chern", "recursion", "--n", "3", "--a", "1"],
    "fibration.ch_VAa": ["section", "ch", "--L", "1", "--alpha", "0", "--n", "2", "--a", "0"],
    "fibration.det_VAa": ["section", "det", "--L", "0,1", "--alpha", "1,0", "--n", "2", "--a", "1"],
    "fibration.trivial_det_solve": ["section", "trivial-det", "--L", "1", "--alpha", "3", "--n", "2"],
    "fibration.c1_VA0_twist": ["section", "c1-twist", "--L", "1", "--alpha", "3", "--n", "2",
                               "--pushforward", "5"],
    "fibration.symmetric_parity_check": ["section", "parity", "--L", "1", "--alpha", "1", "--n", "2"],
    "fibration.reducible_step": ["section", "reducible-step", "--L", "1", "--alpha", "2",
                                 "--n", "2", "--a", "0", "--truncation", "3"],
    "fibration.spectral_cover_class": ["section", "cover-class", "--L", "1", "--alpha", "2",
                                       "--n", "3"],
    "fibration.normal_bundle_ch": ["section", "normal-bundle", "--L", "1", "--n", "2",
                                   "--truncation", "2"],
    "fibration.splitting_type_slice": ["section", "splitting", "--n", "3", "--a", "1", "--at-p0",
                                       "--generic-line"],
    "fibration.surface_c2": ["section", "surface-c2", "--n", "3"],
    "stability.slope": ["stability", "slope", "--bundle", '{"rank": 2, "c1": {"f": 1}, "c2": 0}',
                        "--polarization", '{"sigma": 1}'],
    "stability.bogomolov": ["stability", "bogomolov", "--bundle", '{"rank": 2, "c1": [0, 0], "c2": 1}'],
    "stability.bogomolov_identity_check": ["stability", "identity",
                                           "--bundle", '{"rank": 1, "c1": [1, 0], "c2": 0}',
                                           "--other", '{"rank": 1, "c1": [0, 1], "c2": 0}'],
    "stability.stability_threshold": ["stability", "threshold", "--n", "2", "--c2", "1"],
    "stability.wall_search": ["stability", "walls", "--n", "2", "--c2", "1", "--t", "0"],
    "stability.allowable_modification_c2": ["stability", "modify", "--c2", "5", "--e", "-2"],
    "identities.run": ["verify-identities", "--suite", "master", "--nmax", "3"],
}


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
