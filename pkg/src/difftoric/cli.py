"""Command-line front end.

One request per invocation: parse the input (file, inline JSON, or stdin),
dispatch to the library, and emit a JSON or pretty report.  Exit codes:
0 ok, 2 invalid input, 3 precondition violated, 4 resource bound exceeded.
Output is deterministic: identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import jsonio
from .errors import InputError, PreconditionError, ResourceExhausted
from .order_bound import MINUS_INF, jacobi_number, order_bound
from .poly_core import PolyParseError, format_poly
from .saturation import is_toric, sat_zx, z_factor, zx_factor
from .semimodule import (
    Bounds,
    Face,
    Semimodule,
    enumerate_faces,
    face_saturated_necessary,
    is_pointed,
)
from .syzygy_transform import (
    MonomialMap,
    NotToricError,
    format_sigma_monomial,
    implicitize,
    lattice_intersection,
    matvec,
    orth_complement,
    parametrize,
    syzygy_basis,
)
from .zx_lattice import (
    LatticeVector,
    ZxLattice,
    buchberger,
    grem,
    is_ghnf,
    lattices_equal,
    member,
    rank,
)

@dataclass
class Request:
    command: str
    payload: object
    options: dict = field(default_factory=dict)


@dataclass
class Response:
    status: str
    payload: dict
    certificates: dict | None = None
    exit_code: int = 0

    def to_json(self) -> dict:
        out = {"status": self.status, "payload": self.payload}
        if self.certificates is not None:
            out["certificates"] = self.certificates
        return out


def _bounds_from(options: dict) -> Bounds:
    kw = {}
    if options.get("degree_bound") is not None:
        kw["degree"] = options["degree_bound"]
    if options.get("coeff_bound") is not None:
        kw["height"] = options["coeff_bound"]
    if options.get("subset_cap") is not None:
        kw["subset_cap"] = options["subset_cap"]
    return Bounds(**kw)


# --- command handlers: each returns (payload, certificates | None) ----------

def _cmd_ghnf(payload, options):
    cols = jsonio.parse_matrix(payload)
    basis = buchberger(cols)
    blocks = [
        {"pivot_row": row + 1, "columns": [i + 1 for i in idxs]}
        for row, idxs in basis.blocks()
    ]
    out = {
        "columns": jsonio.matrix_json(basis.columns),
        "dimension": basis.dim,
        "blocks": blocks,
    }
    certs = None
    if options.get("verify"):
        ok, violations = is_ghnf(list(basis.columns))
        inp = ZxLattice(cols)
        outl = ZxLattice.from_ghnf(basis)
        certs = {
            "is_ghnf": ok,
            "violations": violations,
            "module_equality": lattices_equal(inp, outl),
        }
        if not ok or not certs["module_equality"]:
            raise AssertionError("ghnf verification failed")
    return out, certs


def _cmd_is_ghnf(payload, options):
    cols = jsonio.parse_matrix(payload)
    ok, violations = is_ghnf(cols)
    return {"is_ghnf": ok, "violations": violations}, None


def _cmd_member(payload, options):
    if not isinstance(payload, dict) or "vector" not in payload or "generators" not in payload:
        raise InputError('member input must be {"vector": [...], "generators": [[...], ...]}')
    f = jsonio.parse_vector(payload["vector"])
    gens = jsonio.parse_matrix(payload["generators"])
    if f.dim != gens[0].dim:
        raise PreconditionError("vector and lattice dimensions differ")
    lat = ZxLattice(gens)
    basis = lat.ghnf
    if basis.is_empty():
        nf = f
    else:
        nf = grem(f, list(basis.columns))
    out = {"member": nf.is_zero(), "normal_form": jsonio.vector_json(nf)}
    certs = None
    if options.get("verify"):
        if not basis.is_empty():
            _, quot = grem(f, list(basis.columns), track=True)
            recomposed = matvec(list(basis.columns), basis.dim, LatticeVector(quot)) + nf
            certs = {
                "quotients": [format_poly(q) for q in quot],
                "recomposition": recomposed == f,
            }
            if not certs["recomposition"]:
                raise AssertionError("membership trace failed to recompose")
        else:
            certs = {"quotients": [], "recomposition": nf == f}
    return out, certs


def _witness_payload(witnesses):
    return [jsonio.witness_json(w) for w in witnesses]


def _verify_witnesses(witnesses, basis):
    checks = []
    for w in witnesses:
        checks.append(
            member(w.vector.scale(w.multiplier), basis) and not member(w.vector, basis)
        )
    if not all(checks):
        raise AssertionError("witness verification failed")
    return {"witness_checks": checks}


def _cmd_zfactor(payload, options):
    cols = jsonio.parse_matrix(payload)
    basis = buchberger(cols)
    ws = z_factor(basis)
    certs = _verify_witnesses(ws, basis) if options.get("verify") else None
    return {"witnesses": _witness_payload(ws)}, certs


def _cmd_zxfactor(payload, options):
    cols = jsonio.parse_matrix(payload)
    basis = buchberger(cols)
    ws = zx_factor(basis)
    certs = _verify_witnesses(ws, basis) if options.get("verify") else None
    return {"witnesses": _witness_payload(ws)}, certs


def _cmd_saturate(payload, options):
    cols = jsonio.parse_matrix(payload)
    result = sat_zx(cols)
    rounds = [
        {"kind": r.kind, "witnesses": _witness_payload(r.witnesses)}
        for r in result.rounds
    ]
    out = {
        "generators": jsonio.matrix_json(result.lattice.generators),
        "rounds": rounds,
        "growth_rounds": result.growth_rounds,
        "multiplier": format_poly(result.multiplier),
    }
    certs = None
    if options.get("verify"):
        inp = ZxLattice(cols)
        chain = [
            member(g.scale(result.multiplier), inp)
            for g in result.lattice.generators
        ]
        contains = [member(g, result.lattice) for g in cols]
        if not all(chain) or not all(contains):
            raise AssertionError("saturation certificate failed")
        certs = {"multiplier_chain": chain, "input_contained": contains}
    return out, certs


def _cmd_is_toric(payload, options):
    cols = jsonio.parse_matrix(payload)
    verdict = is_toric(cols)
    out = {
        "is_toric": verdict.is_toric,
        "witnesses": _witness_payload(verdict.witnesses),
        "saturated_generators": jsonio.matrix_json(verdict.saturated_lattice.generators),
    }
    certs = None
    if options.get("verify"):
        basis = buchberger(cols)
        certs = _verify_witnesses(verdict.witnesses, basis)
        if verdict.is_toric:
            eq = lattices_equal(ZxLattice(cols), verdict.saturated_lattice)
            certs["saturation_fixed_point"] = eq
            if not eq:
                raise AssertionError("toric verdict inconsistent with saturation")
    return out, certs


def _cmd_syzygy(payload, options):
    cols = jsonio.parse_matrix(payload)
    gens = syzygy_basis(cols, cols[0].dim)
    certs = None
    if options.get("verify"):
        checks = [matvec(cols, cols[0].dim, s).is_zero() for s in gens]
        if not all(checks):
            raise AssertionError("syzygy exactness failed")
        certs = {"exactness": checks}
    return {"generators": jsonio.matrix_json(gens), "ambient": len(cols)}, certs


def _cmd_complement(payload, options):
    cols = jsonio.parse_matrix(payload)
    lat = ZxLattice(cols)
    comp = orth_complement(lat)
    out = {
        "generators": jsonio.matrix_json(comp.generators),
        "rank": rank(comp),
        "input_rank": rank(lat),
        "ambient": lat.dim,
    }
    certs = None
    if options.get("verify"):
        dots = [
            format_poly(f.dot(g)) for f in comp.generators for g in cols
        ]
        if any(d != "0" for d in dots):
            raise AssertionError("complement generators are not orthogonal")
        certs = {"orthogonal": True, "rank_law": rank(comp) == lat.dim - rank(lat)}
    return out, certs


def _cmd_intersect(payload, options):
    if not isinstance(payload, dict) or "first" not in payload or "second" not in payload:
        raise InputError('intersect input must be {"first": [[...]], "second": [[...]]}')
    g1 = jsonio.parse_matrix(payload["first"])
    g2 = jsonio.parse_matrix(payload["second"])
    if g1[0].dim != g2[0].dim:
        raise PreconditionError("lattices live in different ambient dimensions")
    meet = lattice_intersection(ZxLattice(g1), ZxLattice(g2))
    certs = None
    if options.get("verify"):
        l1, l2 = ZxLattice(g1), ZxLattice(g2)
        checks = [member(g, l1) and member(g, l2) for g in meet.generators]
        if not all(checks):
            raise AssertionError("intersection generators escape a factor")
        certs = {"membership_both": checks}
    return {"generators": jsonio.matrix_json(meet.generators)}, certs


def _cmd_implicitize(payload, options):
    cols = jsonio.parse_matrix(payload)
    result = implicitize(MonomialMap(tuple(cols)))
    binomials = [
        {
            "plus": jsonio.vector_json(b.plus),
            "minus": jsonio.vector_json(b.minus),
            "display": b.display(),
        }
        for b in result.binomials
    ]
    out = {
        "lattice": jsonio.matrix_json(result.lattice.generators),
        "binomials": binomials,
        "dimension": result.dimension,
    }
    certs = None
    if options.get("verify"):
        checks = [
            matvec(cols, cols[0].dim, g).is_zero()
            for g in result.lattice.generators
        ]
        recon = [
            (b.plus - b.minus) == b.source for b in result.binomials
        ]
        if not all(checks) or not all(recon):
            raise AssertionError("implicitization certificate failed")
        certs = {"kernel_exactness": checks, "binomial_reconstruction": recon}
    return out, certs


def _cmd_parametrize(payload, options):
    cols = jsonio.parse_matrix(payload)
    result = parametrize(cols, saturate_first=options.get("saturate_first", False))
    out = {
        "map_columns": jsonio.matrix_json(result.map.columns),
        "monomials": [format_sigma_monomial(u, "t") for u in result.map.columns],
        "complement": jsonio.matrix_json(result.complement.generators),
        "saturated_first": result.saturated,
    }
    certs = None
    if options.get("verify"):
        back = implicitize(result.map)
        target = (
            sat_zx(cols).lattice if result.saturated else ZxLattice(cols)
        )
        eq = lattices_equal(back.lattice, target)
        if not eq:
            raise AssertionError("parametrize round trip failed")
        certs = {"round_trip": eq}
    return out, certs


def _cmd_faces(payload, options):
    gens = jsonio.parse_semimodule_payload(payload)
    bounds = _bounds_from(options)
    S = Semimodule(tuple(gens))
    faces = enumerate_faces(S, bounds)
    out = {
        "faces": [
            {
                "indices": [i + 1 for i in sorted(f.indices)],
                "generators": jsonio.matrix_json(f.generators()),
                "confirmed": f.confirmed,
            }
            for f in faces
        ]
    }
    return out, None


def _cmd_is_pointed(payload, options):
    gens = jsonio.parse_semimodule_payload(payload)
    verdict = is_pointed(Semimodule(tuple(gens)), _bounds_from(options))
    return {"pointed": "unknown" if verdict is None else verdict}, None


def _cmd_face_sat(payload, options):
    if not isinstance(payload, dict) or "face" not in payload:
        raise InputError('face-sat input must be {"generators": [[...]], "face": [indices]}')
    gens = jsonio.parse_semimodule_payload(payload)
    idx = payload["face"]
    if not isinstance(idx, list) or not all(
        isinstance(i, int) and 1 <= i <= len(gens) for i in idx
    ):
        raise InputError("face indices must be 1-based generator positions")
    S = Semimodule(tuple(gens))
    F = Face(S, frozenset(i - 1 for i in idx))
    report = face_saturated_necessary(S, F)
    return {
        "holds": report.holds,
        "violations": jsonio.matrix_json(report.violations),
    }, None


def _cmd_jacobi(payload, options):
    rows = jsonio.parse_jacobi_matrix(payload)
    value = jacobi_number(rows)
    out = {"jacobi": "-inf" if value == MINUS_INF else value}
    certs = None
    if options.get("verify") and len(rows) <= 7:
        from itertools import permutations

        best = MINUS_INF
        for perm in permutations(range(len(rows))):
            entries = [rows[i][perm[i]] for i in range(len(rows))]
            if any(e == MINUS_INF for e in entries):
                continue
            best = max(best, sum(entries)) if best != MINUS_INF else sum(entries)
        if best != value:
            raise AssertionError("jacobi brute-force check failed")
        certs = {"brute_force": True}
    return out, certs


def _cmd_order_bound(payload, options):
    cols = jsonio.parse_matrix(payload)
    report = order_bound(MonomialMap(tuple(cols)))
    out = {
        "rows": [{"o": o, "o_low": ol} for o, ol in report.rows],
        "bound": report.bound,
    }
    return out, None


_HANDLERS = {
    "ghnf": _cmd_ghnf,
    "is-ghnf": _cmd_is_ghnf,
    "member": _cmd_member,
    "is-toric": _cmd_is_toric,
    "saturate": _cmd_saturate,
    "zfactor": _cmd_zfactor,
    "zxfactor": _cmd_zxfactor,
    "syzygy": _cmd_syzygy,
    "complement": _cmd_complement,
    "intersect": _cmd_intersect,
    "implicitize": _cmd_implicitize,
    "parametrize": _cmd_parametrize,
    "faces": _cmd_faces,
    "is-pointed": _cmd_is_pointed,
    "face-sat": _cmd_face_sat,
    "jacobi": _cmd_jacobi,
    "order-bound": _cmd_order_bound,
}


def run(request: Request) -> Response:
    try:
        handler = _HANDLERS[request.command]
    except KeyError:
        return Response("error", {"error": {"code": 2, "message": f"unknown command {request.command!r}"}}, exit_code=2)
    try:
        payload, certs = handler(request.payload, request.options)
        return Response("ok", payload, certs, 0)
    except (InputError, PolyParseError) as exc:
        return Response("error", {"error": {"code": 2, "message": str(exc)}}, exit_code=2)
    except NotToricError as exc:
        detail = {
            "code": 3,
            "message": str(exc),
            "witnesses": _witness_payload(exc.verdict.witnesses),
        }
        return Response("error", {"error": detail}, exit_code=3)
    except PreconditionError as exc:
        return Response("error", {"error": {"code": 3, "message": str(exc)}}, exit_code=3)
    except ResourceExhausted as exc:
        return Response("error", {"error": {"code": 4, "message": str(exc)}}, exit_code=4)


# --- pretty rendering --------------------------------------------------------

def _pretty_matrix(cols: list[list[str]]) -> str:
    if not cols:
        return "  (zero lattice)"
    width = max(len(s) for col in cols for s in col)
    nrows = len(cols[0])
    lines = []
    for r in range(nrows):
        cells = ", ".join(col[r].rjust(width) for col in cols)
        lines.append(f"  [ {cells} ]")
    return "\n".join(lines)


def render_pretty(command: str, payload: dict) -> str:
    if "error" in payload:
        return f"error: {payload['error']['message']}"
    lines = []
    if command == "ghnf":
        lines.append("generalized Hermite normal form:")
        lines.append(_pretty_matrix(payload["columns"]))
    elif command == "is-ghnf":
        lines.append("GHNF" if payload["is_ghnf"] else "not a GHNF")
        lines.extend(f"  {v}" for v in payload["violations"])
    elif command == "member":
        lines.append("member" if payload["member"] else "not a member")
        lines.append("normal form: (" + ", ".join(payload["normal_form"]) + ")")
    elif command in ("zfactor", "zxfactor"):
        ws = payload["witnesses"]
        if not ws:
            lines.append("saturated: no witnesses")
        for w in ws:
            lines.append(f"witness ({', '.join(w['h'])}) with multiplier {w['p']}")
    elif command == "saturate":
        lines.append(f"saturation reached after {payload['growth_rounds']} growth round(s)")
        lines.append(_pretty_matrix(payload["generators"]))
        lines.append(f"multiplier chain product: {payload['multiplier']}")
    elif command == "is-toric":
        lines.append("toric" if payload["is_toric"] else "not toric")
        for w in payload["witnesses"]:
            lines.append(f"witness ({', '.join(w['h'])}) with multiplier {w['p']}")
    elif command == "syzygy":
        lines.append("kernel generators:")
        lines.append(_pretty_matrix(payload["generators"]))
    elif command == "complement":
        lines.append("orthogonal complement generators:")
        lines.append(_pretty_matrix(payload["generators"]))
        lines.append(f"rank {payload['rank']} (input rank {payload['input_rank']})")
    elif command == "intersect":
        lines.append("intersection generators:")
        lines.append(_pretty_matrix(payload["generators"]))
    elif command == "implicitize":
        lines.append("support lattice:")
        lines.append(_pretty_matrix(payload["lattice"]))
        lines.append("binomials: " + "; ".join(b["display"] for b in payload["binomials"]))
        lines.append(f"dimension: {payload['dimension']}")
    elif command == "parametrize":
        lines.append("monomial map: " + ", ".join(payload["monomials"]))
    elif command == "faces":
        for f in payload["faces"]:
            tag = "" if f["confirmed"] else "  (unconfirmed)"
            idx = ", ".join(str(i) for i in f["indices"]) or "0"
            lines.append(f"face {{{idx}}}{tag}")
    elif command == "is-pointed":
        lines.append(f"pointed: {payload['pointed']}")
    elif command == "face-sat":
        lines.append("necessary condition holds" if payload["holds"] else "necessary condition fails")
        for v in payload["violations"]:
            lines.append(f"  violation: ({', '.join(v)})")
    elif command == "jacobi":
        lines.append(f"Jacobi number: {payload['jacobi']}")
    elif command == "order-bound":
        for i, row in enumerate(payload["rows"]):
            lines.append(f"row {i + 1}: o = {row['o']}, o_low = {row['o_low']}")
        lines.append(f"order bound: {payload['bound']}")
    else:
        lines.append(jsonio.dumps(payload).strip())
    return "\n".join(lines)


# --- argument parsing --------------------------------------------------------

def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    stripped = source.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return source
    path = Path(source)
    if not path.exists():
        raise InputError(f"input file not found: {source}")
    return path.read_text()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="difftoric",
        description="Exact computations for toric difference varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="file path, inline JSON, or - for stdin")
        p.add_argument("--format", choices=("json", "pretty"), default="json")
        p.add_argument("--verify", action="store_true", help="re-check certificates before emission")
        p.add_argument("--degree-bound", type=int, default=None)
        p.add_argument("--coeff-bound", type=int, default=None)
        p.add_argument("--subset-cap", type=int, default=None)
        if name == "parametrize":
            p.add_argument("--saturate-first", action="store_true")
        return p

    add("ghnf", "reduced Groebner basis of a Z[x]-lattice")
    add("is-ghnf", "check the normal-form conditions of a matrix")
    add("member", "lattice membership with normal form")
    add("is-toric", "decide whether a lattice is Z[x]-saturated")
    add("saturate", "compute the Z[x]-saturation with its witness trace")
    add("zfactor", "Z-saturation witnesses")
    add("zxfactor", "Z[x]-saturation witnesses")
    add("syzygy", "kernel of a Z[x] matrix")
    add("complement", "orthogonal complement lattice")
    add("intersect", "intersection of two lattices")
    add("implicitize", "support lattice and binomials of a monomial map")
    add("parametrize", "monomial map of a toric lattice")
    add("faces", "enumerate faces of an affine N[x]-semimodule")
    add("is-pointed", "pointedness of a semimodule")
    add("face-sat", "necessary face-saturation condition")
    add("jacobi", "Jacobi number of a matrix over N and -inf")
    add("order-bound", "order bound of a toric difference variety")

    rep = sub.add_parser("report", help="CSV summary plus figure for an analysis")
    rep.add_argument("analysis", choices=("faces", "order-bound"))
    rep.add_argument("input", help="file path, inline JSON, or - for stdin")
    rep.add_argument("--out-dir", default=".", help="directory for the rendered files")
    rep.add_argument("--degree-bound", type=int, default=None)
    rep.add_argument("--coeff-bound", type=int, default=None)
    rep.add_argument("--subset-cap", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        text = _read_input(args.input)
        payload = jsonio.loads(text)
    except InputError as exc:
        sys.stdout.write(jsonio.dumps({"status": "error", "payload": {"error": {"code": 2, "message": str(exc)}}}))
        return 2

    if args.command == "report":
        from .report import run_report

        options = {
            "degree_bound": args.degree_bound,
            "coeff_bound": args.coeff_bound,
            "subset_cap": args.subset_cap,
        }
        resp = run_report(args.analysis, payload, Path(args.out_dir), options)
        sys.stdout.write(jsonio.dumps(resp.to_json()))
        return resp.exit_code

    options = {
        "verify": args.verify,
        "degree_bound": args.degree_bound,
        "coeff_bound": args.coeff_bound,
        "subset_cap": args.subset_cap,
        "saturate_first": getattr(args, "saturate_first", False),
    }
    resp = run(Request(args.command, payload, options))
    if args.format == "pretty":
        sys.stdout.write(render_pretty(args.command, resp.payload) + "\n")
    else:
        sys.stdout.write(jsonio.dumps(resp.to_json()))
    return resp.exit_code


if __name__ == "__main__":
    sys.exit(main())
