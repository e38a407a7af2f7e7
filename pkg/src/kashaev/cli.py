"""Command-line interface.

    kashaev faces 3_1
    kashaev tau "X(1,1,2,2)" --laurent
    kashaev signature 3_1 --v 1
    kashaev profile 4_1 --grid 16 --out profile.csv
    kashaev verify --all-catalog --grid 8 --mutations 4
    kashaev alexander hopf_pos

A diagram argument is a catalog name, a path to a JSON diagram, or a PD
code.  Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction

from .algebra import circle_param, format_poly, format_t, herm_signature
from .catalog import CatalogEntry, load_catalog
from .diagram import Diagram, load_json, parse_pd, random_mutation, winding_numbers
from .errors import AlgebraError, DiagramError, KashaevError, OmegaIsOne, VerificationError
from .kernel import verify_kernel
from .seifert import (
    Certificate,
    alexander_certificate,
    alexander_via_tau,
    build_disjoint_seifert,
    build_Q,
    lt_signature,
    main_theorem_check,
)
from .tau import build_tau, eval_tau, kashaev_invariant, reduce_tau, tau_laurent

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
INVARIANCE_X = (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(3, 4), Fraction(-3, 4),
                Fraction(2), Fraction(-2))


class InputError(KashaevError, ValueError):
    pass


def v_grid(n: int) -> list[Fraction]:
    """The ``2m`` rationals ``+-k/m``, ``k = 1..m``, ``m = n // 2``, sorted.

    Parameters in ``[-1, 1]`` reach every circle point once (``v`` and
    ``-1/v`` give the same ``omega``), except that ``+-1`` both give
    ``omega = -1``.  ``omega = 1`` is avoided.
    """
    if n < 2:
        raise InputError("grid needs at least 2 points")
    m = n // 2
    return sorted(s * Fraction(k, m) for k in range(1, m + 1) for s in (1, -1))


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def resolve(arg: str) -> tuple[str, Diagram, CatalogEntry | None]:
    catalog = load_catalog()
    if arg in catalog:
        entry = catalog[arg]
        return arg, entry.diagram, entry
    if arg.endswith(".json") and os.path.exists(arg):
        with open(arg) as fh:
            return arg, load_json(fh.read()), None
    return arg, parse_pd(arg), None


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _grid_text(rows) -> str:
    width = max((len(c) for r in rows for c in r), default=1)
    return "\n".join("  ".join(c.rjust(width) for c in r) for r in rows)


# ----------------------------------------------------------------- commands


def cmd_faces(args) -> int:
    name, d, _ = resolve(args.diagram)
    fs = d.face_structure
    w = winding_numbers(fs, args.exterior)
    ext = fs.exterior if args.exterior is None else args.exterior
    payload = fs.to_json()
    payload["winding"] = {str(f): k for f, k in w.items()}
    payload["exterior"] = ext
    for f in payload["faces"]:
        f["winding"] = w[f["id"]]
    lines = [f"{len(fs)} faces, exterior {ext}"]
    for f in fs.faces:
        bd = " ".join(f"{lab}{side}" for lab, side in f.boundary) or "-"
        lines.append(f"face {f.id}  winding {w[f.id]:+d}  boundary {bd}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_tau(args) -> int:
    name, d, _ = resolve(args.diagram)
    k = build_tau(d)
    faces = list(k.faces)
    rows = [list(r) for r in k.entries]
    if args.reduce is not None:
        pair = (None, None) if args.reduce == "auto" else _pair(args.reduce)
        rows = reduce_tau(k, *pair)
        fi, fj = pair if pair[0] is not None else _default_pair(k)
        faces = [f for f in faces if f not in (fi, fj)]
    x = args.at if args.at is not None else args.x
    if x is not None:
        _warn_x(x)
        cells = [[str(v) for v in r] for r in eval_tau(rows, x)]
    elif args.laurent:
        cells = [[format_t(e) for e in r] for r in tau_laurent(rows)]
    else:
        cells = [[format_poly(_u_to_x(e), "x") for e in r] for r in rows]
    payload = {"diagram": name, "faces": faces, "entries": cells, "writhe": k.writhe}
    _emit(args, payload, f"faces {' '.join(map(str, faces))}\n" + _grid_text(cells))
    return EXIT_OK


def _u_to_x(e):
    from .tau import u_to_x

    return u_to_x(e)


def _default_pair(k):
    from .tau import default_reduction_pair

    return default_reduction_pair(k)


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(p) for p in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected a face pair like 0,3, got {text!r}") from exc
    return a, b


def _warn_x(x):
    if abs(Fraction(x)) > 1:
        print(f"warning: |x| = {abs(Fraction(x))} > 1; the invariant is defined there but "
              "has no known Levine-Tristram interpretation", file=sys.stderr)


def _sigma(d: Diagram, entry: CatalogEntry | None, omega) -> int:
    """From the catalog Seifert matrix, or else from the diagram's own form."""
    if entry is not None:
        return lt_signature(entry.seifert_matrix, omega)
    if omega == 1:
        return 0
    return herm_signature(build_Q(build_disjoint_seifert(d), omega).q) // 2


def profile_row(d: Diagram, entry: CatalogEntry | None, v) -> dict:
    cp = circle_param(v)
    return {
        "v": str(cp.v),
        "theta": f"{cp.theta:.6f}",
        "sigma": _sigma(d, entry, cp.omega),
        "invariant": kashaev_invariant(d, cp.x),
    }


def cmd_signature(args) -> int:
    name, d, entry = resolve(args.diagram)
    if args.x is not None:
        _warn_x(args.x)
        inv = kashaev_invariant(d, args.x)
        payload = {"diagram": name, "x": str(args.x), "invariant": inv}
        _emit(args, payload, f"x={args.x} invariant={inv}")
        return EXIT_OK
    row = profile_row(d, entry, args.v)
    row["diagram"] = name
    row["sigma_source"] = "catalog" if entry else "diagram"
    _emit(args, row, f"v={row['v']} theta={row['theta']} sigma={row['sigma']} invariant={row['invariant']}")
    return EXIT_OK


def cmd_profile(args) -> int:
    name, d, entry = resolve(args.diagram)
    rows = sorted((profile_row(d, entry, v) for v in v_grid(args.grid)), key=lambda r: float(r["theta"]))
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=["v", "theta", "sigma", "invariant"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_alexander(args) -> int:
    name, d, entry = resolve(args.diagram)
    pair = _pair(args.pair) if args.pair else None
    _, square, delta = alexander_via_tau(d, pair)
    payload = {"diagram": name, "delta_squared": format_t(square), "delta": format_t(delta)}
    _emit(args, payload, f"Delta^2 = {format_t(square)}\nDelta = {format_t(delta)}")
    return EXIT_OK


def _invariance_certificate(name, d0, d, desc) -> Certificate:
    before = [kashaev_invariant(d0, x) for x in INVARIANCE_X]
    after = [kashaev_invariant(d, x) for x in INVARIANCE_X]
    return Certificate(
        kind="invariance",
        diagram=name,
        passed=before == after,
        details={"mutations": desc, "pd": d.to_pd(), "x": [str(x) for x in INVARIANCE_X],
                 "before": before, "after": after},
    )


def _kernel_certificate(d, name) -> Certificate:
    try:
        return verify_kernel(d, name)
    except VerificationError as exc:
        return Certificate(kind="kernel", diagram=name, passed=False, details={"error": str(exc)})


def verify_diagram(name: str, d: Diagram, entry: CatalogEntry | None, grid: int, mutations: int,
                   seed: int = 0) -> list[Certificate]:
    seifert = entry.seifert_matrix if entry else None
    certs = [main_theorem_check(d, v, seifert, name) for v in v_grid(grid)]
    certs.append(alexander_certificate(d, seifert, name=name))
    certs.append(_kernel_certificate(d, name))
    rng = random.Random(f"{seed}:{name}")
    cur, descs = d, []
    for i in range(mutations):
        cur, desc = random_mutation(cur, rng)
        descs.append(desc)
        certs.append(_invariance_certificate(name, d, cur, list(descs)))
        certs.append(_kernel_certificate(cur, f"{name}+{i + 1}"))
    return certs


def cmd_verify(args) -> int:
    if args.all_catalog:
        targets = [(n, e.diagram, e) for n, e in sorted(load_catalog().items())]
    elif args.diagram:
        targets = [resolve(args.diagram)]
    else:
        raise InputError("verify needs a diagram or --all-catalog")
    failed = total = 0
    for name, d, entry in targets:
        for c in verify_diagram(name, d, entry, args.grid, args.mutations, args.seed):
            total += 1
            failed += not c.passed
            if args.json:
                print(json.dumps(c.to_json(), sort_keys=True))
            else:
                print(_cert_line(c))
    if not args.json:
        print(f"{total} certificates, {failed} failed")
    return EXIT_FAIL if failed else EXIT_OK


def _cert_line(c: Certificate) -> str:
    status = "PASS" if c.passed else "FAIL"
    if c.kind == "main_theorem":
        extra = f"v={c.v} invariant={c.invariant}"
        if c.lt_signature_doubled is not None:
            extra += f" 2sigma={c.lt_signature_doubled}"
        extra += f" schur={'ok' if c.schur_match else 'MISMATCH'}"
    elif c.kind == "alexander":
        extra = f"Delta={c.details['delta']}"
        if c.alexander_match is not None:
            extra += f" catalog={'ok' if c.alexander_match else 'MISMATCH'}"
    elif c.kind == "kernel":
        extra = (f"rank={c.details['rank']}/{c.details['faces']} kernel={c.details['kernel_dim']}"
                 if "rank" in c.details else c.details.get("error", ""))
    else:
        extra = f"after {len(c.details['mutations'])} moves: {c.details['after']}"
    return f"{status} {c.kind} {c.diagram} {extra}"


# --------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kashaev", description="Kashaev signature invariant of link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, diagram=True):
        p = sub.add_parser(name, help=help_text)
        if diagram:
            p.add_argument("diagram", help="catalog name, JSON file, or PD code")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("faces", cmd_faces, "list faces and winding numbers")
    p.add_argument("--exterior", type=int, help="face id taken as winding 0")

    p = add("tau", cmd_tau, "print the Kashaev matrix")
    p.add_argument("--at", type=rational, help="evaluate at x = p/q")
    p.add_argument("--x", type=rational, help="same as --at")
    p.add_argument("--reduce", nargs="?", const="auto", metavar="I,J",
                   help="drop two adjacent faces (default: exterior and a neighbour)")
    p.add_argument("--laurent", action="store_true", help="substitute 2x = t^1/2 + t^-1/2")

    p = add("signature", cmd_signature, "invariant and signature at one point")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--v", type=rational, help="circle parameter v")
    g.add_argument("--x", type=rational, help="evaluate the invariant at x directly")

    p = add("profile", cmd_profile, "CSV signature profile over a v-grid")
    p.add_argument("--grid", type=int, default=16)
    p.add_argument("--out", help="CSV path (default: stdout)")

    p = add("verify", cmd_verify, "emit certificates; exit 1 if any fails", diagram=False)
    p.add_argument("diagram", nargs="?", help="catalog name, JSON file, or PD code")
    p.add_argument("--all-catalog", action="store_true")
    p.add_argument("--grid", type=int, default=8)
    p.add_argument("--mutations", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = add("alexander", cmd_alexander, "Alexander polynomial from the Kashaev matrix")
    p.add_argument("--pair", metavar="I,J", help="adjacent faces to drop")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, InputError, OmegaIsOne) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"verification failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
