"""Schematic drawings of instances and cuts.

Vertices are placed by a barycentric (Tutte) layout: the outer walk of the
2-connected view of the graph is pinned to a regular polygon and every other
vertex sits at the average of its neighbours.  Each inner face first gets an
auxiliary centre vertex joined to its corners, which keeps the drawing planar
on faces with many corners.  Copies made for articulation vertices are drawn
at their mean position.
"""

from __future__ import annotations

import io
import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from scipy.sparse import lil_matrix  # noqa: E402
from scipy.sparse.linalg import spsolve  # noqa: E402

from .graph import PlanarGraph, biconnected_view, normalize  # noqa: E402
from .instances import Instance, MCCInstance, MinMCInstance  # noqa: E402
from .mtc import CutSolution  # noqa: E402

plt.rcParams["svg.hashsalt"] = "planarcut"


def _tutte(graph: PlanarGraph) -> np.ndarray:
    """Barycentric positions with the outer walk on a regular polygon."""
    n = graph.vertex_count
    if not graph.edges:
        return np.array([[float(i), 0.0] for i in range(n)]).reshape(n, 2)
    boundary = graph.boundary_vertices
    adj: list[list[int]] = [list(graph.neighbors(v)) for v in range(n)]
    # stellate inner faces
    k = n
    for f in graph.faces:
        if f.face_id == graph.outer_face.face_id:
            continue
        corners = sorted(set(f.vertices))
        adj.append(corners)
        for v in corners:
            adj[v].append(k)
        k += 1
    pos = np.zeros((k, 2))
    pinned = {}
    b = len(boundary)
    for i, v in enumerate(boundary):
        ang = math.pi / 2 - 2 * math.pi * i / b
        pinned[v] = (math.cos(ang), math.sin(ang))
    free = [v for v in range(k) if v not in pinned]
    index = {v: i for i, v in enumerate(free)}
    for v, p in pinned.items():
        pos[v] = p
    if free:
        a = lil_matrix((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for v in free:
            i = index[v]
            a[i, i] = len(adj[v])
            for u in adj[v]:
                if u in pinned:
                    rhs[i] += pinned[u]
                else:
                    a[i, index[u]] -= 1
        sol = spsolve(a.tocsr(), rhs)
        pos[free] = np.asarray(sol).reshape(len(free), 2)
    return pos[:n]


def layout(graph: PlanarGraph) -> np.ndarray:
    """Coordinates for every vertex of ``graph``; components are placed side by side."""
    coords = np.zeros((graph.vertex_count, 2))
    offset = 0.0
    for part in normalize(graph):
        g = part.graph
        if g.vertex_count == 1:
            local = np.zeros((1, 2))
        else:
            aug = biconnected_view(g)
            big = _tutte(aug.graph)
            local = np.zeros((g.vertex_count, 2))
            count = np.zeros(g.vertex_count)
            for b, v in enumerate(aug.vertex_origin):
                if v >= 0:
                    local[v] += big[b]
                    count[v] += 1
            local /= count[:, None]
        local[:, 0] += offset - local[:, 0].min()
        offset = local[:, 0].max() + 1.0
        coords[list(part.vertex_origin)] = local
    return coords


def _segments_cross(p1, p2, p3, p4) -> bool:
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return 0 if abs(v) < 1e-12 else (1 if v > 0 else -1)

    o1, o2 = orient(p1, p2, p3), orient(p1, p2, p4)
    o3, o4 = orient(p3, p4, p1), orient(p3, p4, p2)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return False


def crossing_pairs(graph: PlanarGraph, coords: np.ndarray | None = None) -> list[tuple[int, int]]:
    """Edge pairs without a common endpoint whose straight segments properly cross."""
    coords = layout(graph) if coords is None else coords
    es = [e for e in graph.edges if e.u != e.v]
    out = []
    for i, e in enumerate(es):
        for f in es[i + 1:]:
            if {e.u, e.v} & {f.u, f.v}:
                continue
            if _segments_cross(coords[e.u], coords[e.v], coords[f.u], coords[f.v]):
                out.append((e.id, f.id))
    return out


def _terminal_groups(instance: Instance) -> list[Sequence[int]]:
    if isinstance(instance, MinMCInstance):
        return [list(p) for p in instance.pairs]
    if isinstance(instance, MCCInstance):
        return [list(c) for c in instance.clusters]
    return [[t] for t in instance.terminals]


def render_figure(instance: Instance, solution: CutSolution | None = None):
    g = instance.graph
    coords = layout(g)
    cut = set() if solution is None else set(solution.cut_edges)
    fig, ax = plt.subplots(figsize=(6, 6))
    for e in g.edges:
        (x0, y0), (x1, y1) = coords[e.u], coords[e.v]
        if e.id in cut:
            ax.plot([x0, x1], [y0, y1], color="tab:red", linestyle="--", linewidth=1.6, zorder=1)
        else:
            ax.plot([x0, x1], [y0, y1], color="0.35", linewidth=1.0, zorder=1)
    ax.scatter(coords[:, 0], coords[:, 1], s=18, color="0.2", zorder=2)
    colors = plt.get_cmap("tab10")
    for i, grp in enumerate(_terminal_groups(instance)):
        pts = coords[list(grp)]
        ax.scatter(pts[:, 0], pts[:, 1], s=80, color=colors(i % 10), edgecolors="black", zorder=3,
                   label=f"group {i + 1}")
    for v in range(g.vertex_count):
        ax.annotate(str(v), coords[v], textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_aspect("equal")
    ax.axis("off")
    if solution is not None:
        ax.set_title(f"cut weight {solution.total_weight}, {len(cut)} edges")
    return fig


def render_svg(instance: Instance, solution: CutSolution | None = None) -> str:
    fig = render_figure(instance, solution)
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def plot_scaling(rows: Sequence[dict], path: str, slope: float | None = None) -> None:
    """Log-log wall time against vertex count, one line per (family, k)."""
    fig, ax = plt.subplots(figsize=(5, 4))
    groups: dict[tuple, list[dict]] = {}
    for r in rows:
        groups.setdefault((r["family"], r["k"]), []).append(r)
    for (family, k), rs in sorted(groups.items()):
        rs = sorted(rs, key=lambda r: r["n"])
        ax.loglog([r["n"] for r in rs], [max(r["wall_time"], 1e-6) for r in rs], marker="o",
                  label=f"{family}, k={k}")
    ax.set_xlabel("vertices n")
    ax.set_ylabel("wall time [s]")
    if slope is not None:
        ax.set_title(f"log-log slope {slope:.2f}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None} if path.endswith(".png") else None)
    plt.close(fig)
