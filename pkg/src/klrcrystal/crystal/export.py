"""DOT, CSV and JSON output for generated crystal graphs."""

from __future__ import annotations

import csv
import io
import json

from .binf import CrystalGraph, binf_stats, weight_multiplicities


def _coords(t: tuple) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def _node_ids(g: CrystalGraph) -> dict:
    return {ref: f"n{k}" for k, ref in enumerate(g.nodes)}


def _weight_label(g: CrystalGraph, nu) -> str:
    parts = [f"{c}a{lab}" for lab, c in zip(g.labels, g.datum.coords(nu)) if c]
    body = "+".join(parts) if parts else "0"
    return f"L-({body})" if g.kind == "BLambda" else f"-({body})"


def to_dot(g: CrystalGraph) -> str:
    """Nodes in generation order, labelled by reference coordinates and weight."""
    ids = _node_ids(g)
    lines = [f'digraph "{g.kind}" {{', "  rankdir=TB;"]
    for ref, b in g.nodes.items():
        lines.append(f'  {ids[ref]} [label="{_coords(ref)}\\n{_weight_label(g, b.nu)}"];')
    for src, lab, dst in g.edges:
        lines.append(f'  {ids[src]} -> {ids[dst]} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def multiplicities_csv(g: CrystalGraph) -> str:
    """Rows ``weight_coords,count`` with nu given in label order."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight_coords", "count"])
    for nu, count in weight_multiplicities(g).items():
        w.writerow([" ".join(str(x) for x in nu), count])
    return buf.getvalue()


def graph_to_json(g: CrystalGraph) -> dict:
    nodes = []
    for ref, b in g.nodes.items():
        stats = {}
        for i in g.labels:
            s = binf_stats(b, i, g.Lambda, model=g.model)
            entry = {"eps": s.eps, "eps_vee": s.eps_vee, "wt": s.wt, "jump": s.jump, "phi": s.phi}
            if s.phi_lambda is not None:
                entry["phi_lambda"] = s.phi_lambda
            stats[i] = entry
        nodes.append({
            "ref_coords": list(ref),
            "nu": list(g.datum.coords(b.nu)),
            "depth": b.depth,
            "path": list(b.path),
            "stats": stats,
        })
    out = {
        "kind": g.kind,
        "labels": list(g.labels),
        "depth": g.depth,
        "complete": g.complete,
        "nodes": nodes,
        "edges": [{"src": list(s), "label": lab, "dst": list(t)} for s, lab, t in g.edges],
    }
    if g.Lambda is not None:
        out["Lambda"] = [g.Lambda.get(i) for i in g.labels]
    return out


def graph_to_json_text(g: CrystalGraph) -> str:
    return json.dumps(graph_to_json(g), indent=2, sort_keys=True) + "\n"
