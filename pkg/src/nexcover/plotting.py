"""Minimal SVG emission for showcase figures.

A deterministic force-directed layout (circular start, fixed cooling, no
randomness) keeps repeated runs byte-identical; selected nodes are drawn
larger and filled.
"""

from __future__ import annotations

import math

import numpy as np

from .graphs import Graph


def layout(g: Graph, iterations: int = 200) -> np.ndarray:
    """Fruchterman-Reingold positions in the unit square."""
    n = g.n
    angles = 2.0 * math.pi * np.arange(n) / max(n, 1)
    pos = 0.5 + 0.4 * np.stack([np.cos(angles), np.sin(angles)], axis=1)
    if n == 1:
        return pos
    k = 1.0 / math.sqrt(n)
    temp = 0.1
    cool = temp / iterations
    edges = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta ** 2).sum(axis=2)) + 1e-9
        repulse = (k * k / dist ** 2)[:, :, None] * delta
        disp = repulse.sum(axis=1)
        if len(edges):
            dvec = pos[edges[:, 0]] - pos[edges[:, 1]]
            dlen = np.sqrt((dvec ** 2).sum(axis=1)) + 1e-9
            pull = (dlen / k)[:, None] * dvec
            np.add.at(disp, edges[:, 1], pull)
            np.add.at(disp, edges[:, 0], -pull)
        dnorm = np.sqrt((disp ** 2).sum(axis=1)) + 1e-9
        step = np.minimum(dnorm, temp)
        pos += disp / dnorm[:, None] * step[:, None]
        pos = np.clip(pos, 0.02, 0.98)
        temp = max(temp - cool, 1e-4)
    span = pos.max(axis=0) - pos.min(axis=0)
    span[span < 1e-9] = 1.0
    return 0.05 + 0.9 * (pos - pos.min(axis=0)) / span


def write_selection_svg(g: Graph, selected, path, title: str = "",
                        size: int = 640) -> None:
    pos = layout(g) * size
    sel = set(selected)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size + 30}" viewBox="0 0 {size} {size + 30}">',
        f'<rect width="{size}" height="{size + 30}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{size / 2:.0f}" y="20" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{title}</text>'
        )
    for u, v in g.edges:
        parts.append(
            f'<line x1="{pos[u, 0]:.1f}" y1="{pos[u, 1] + 30:.1f}" '
            f'x2="{pos[v, 0]:.1f}" y2="{pos[v, 1] + 30:.1f}" '
            f'stroke="#999" stroke-width="1"/>'
        )
    for v in range(g.n):
        if v in sel:
            style = 'fill="#d62728" stroke="#7f1d1d"'
            r = 11
        else:
            style = 'fill="#c7c7c7" stroke="#555"'
            r = 7
        parts.append(
            f'<circle cx="{pos[v, 0]:.1f}" cy="{pos[v, 1] + 30:.1f}" '
            f'r="{r}" {style} stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{pos[v, 0]:.1f}" y="{pos[v, 1] + 33.5:.1f}" '
            f'text-anchor="middle" font-family="sans-serif" '
            f'font-size="9">{v}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
