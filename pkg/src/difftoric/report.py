"""Report rendering: delimited summaries with matplotlib figures.

`report faces` writes faces.csv plus a Hasse diagram of the face lattice;
`report order-bound` writes order_bound.csv plus a per-row degree-span chart.
Figures use the Agg backend so rendering works headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

from . import jsonio
from .errors import InputError, PreconditionError, ResourceExhausted
from .order_bound import order_bound
from .semimodule import Bounds, Semimodule, enumerate_faces
from .syzygy_transform import MonomialMap


def _bounds_from(options: dict) -> Bounds:
    kw = {}
    if options.get("degree_bound") is not None:
        kw["degree"] = options["degree_bound"]
    if options.get("coeff_bound") is not None:
        kw["height"] = options["coeff_bound"]
    if options.get("subset_cap") is not None:
        kw["subset_cap"] = options["subset_cap"]
    return Bounds(**kw)


def _figure():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _faces_report(payload, out_dir: Path, options) -> list[str]:
    gens = jsonio.parse_semimodule_payload(payload)
    S = Semimodule(tuple(gens))
    faces = enumerate_faces(S, _bounds_from(options))

    csv_path = out_dir / "faces.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["face", "indices", "generators", "confirmed"])
        for k, f in enumerate(faces):
            idx = " ".join(str(i + 1) for i in sorted(f.indices))
            gen = "; ".join("(" + ", ".join(jsonio.vector_json(g)) + ")" for g in f.generators())
            writer.writerow([k, idx or "0", gen or "0", f.confirmed])

    plt = _figure()
    fig, ax = plt.subplots(figsize=(6, 4))
    by_size: dict[int, list[int]] = {}
    for k, f in enumerate(faces):
        by_size.setdefault(len(f.indices), []).append(k)
    pos = {}
    for size, ks in sorted(by_size.items()):
        for slot, k in enumerate(ks):
            pos[k] = (slot - (len(ks) - 1) / 2.0, size)
    for a, fa in enumerate(faces):
        for b, fb in enumerate(faces):
            if fa.indices < fb.indices and len(fb.indices) == len(fa.indices) + 1:
                xa, ya = pos[a]
                xb, yb = pos[b]
                ax.plot([xa, xb], [ya, yb], color="gray", lw=1, zorder=1)
    for k, f in enumerate(faces):
        x, y = pos[k]
        label = "{" + ",".join(str(i + 1) for i in sorted(f.indices)) + "}" if f.indices else "{0}"
        ax.scatter([x], [y], s=400, color="#4878cf" if f.confirmed else "#d65f5f", zorder=2)
        ax.annotate(label, (x, y), ha="center", va="center", color="white", fontsize=8)
    ax.set_title("face lattice (by generator subset)")
    ax.set_xticks([])
    ax.set_yticks(sorted(by_size))
    ax.set_ylabel("number of generators")
    fig.tight_layout()
    png_path = out_dir / "faces.png"
    fig.savefig(png_path)
    plt.close(fig)
    return [str(csv_path), str(png_path)]


def _order_bound_report(payload, out_dir: Path, options) -> list[str]:
    cols = jsonio.parse_matrix(payload)
    report = order_bound(MonomialMap(tuple(cols)))

    csv_path = out_dir / "order_bound.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["row", "o", "o_low", "span"])
        for i, (o, ol) in enumerate(report.rows):
            writer.writerow([i + 1, o, ol, o - ol])
        writer.writerow(["bound", "", "", report.bound])

    plt = _figure()
    fig, ax = plt.subplots(figsize=(6, 1.2 + 0.6 * len(report.rows)))
    ys = range(len(report.rows), 0, -1)
    for y, (o, ol) in zip(ys, report.rows):
        ax.hlines(y, ol, o, color="#4878cf", lw=6)
        ax.scatter([ol, o], [y, y], color="#2d4a84", zorder=3)
    ax.set_yticks(list(ys))
    ax.set_yticklabels([f"row {i + 1}" for i in range(len(report.rows))])
    ax.set_xlabel("x-degree range (o_low to o)")
    ax.set_title(f"order bound {report.bound}")
    fig.tight_layout()
    png_path = out_dir / "order_bound.png"
    fig.savefig(png_path)
    plt.close(fig)
    return [str(csv_path), str(png_path)]


def run_report(analysis: str, payload, out_dir: Path, options: dict):
    from .cli import Response

    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        if analysis == "faces":
            written = _faces_report(payload, out_dir, options)
        elif analysis == "order-bound":
            written = _order_bound_report(payload, out_dir, options)
        else:
            raise InputError(f"unknown report analysis {analysis!r}")
        return Response("ok", {"written": written}, exit_code=0)
    except InputError as exc:
        return Response("error", {"error": {"code": 2, "message": str(exc)}}, exit_code=2)
    except PreconditionError as exc:
        return Response("error", {"error": {"code": 3, "message": str(exc)}}, exit_code=3)
    except ResourceExhausted as exc:
        return Response("error", {"error": {"code": 4, "message": str(exc)}}, exit_code=4)
