"""Orthographic sphere plots of point multisets, written as plain SVG.

Two hemisphere views are drawn side by side: the front view looks along +y
(north pole up, azimuth 0 toward the viewer's right), the back view shows
the opposite hemisphere mirrored so walking around the sphere reads
naturally.  Sites are white dots with a multiplicity badge when points
coincide; optional circles (plane cuts of the sphere) are overlaid dashed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .plane import SpherePoint, sphere_xyz, to_sphere
from .symstate import RootMultiset

_RADIUS = 130.0
_CENTERS = ((160.0, 170.0), (480.0, 170.0))
_WIDTH, _HEIGHT = 640, 360
_RIM_EPS = 1e-9


@dataclass(frozen=True)
class PlotSpec:
    """Sites (sphere point, multiplicity) plus optional overlay circles given
    as (nx, ny, nz, offset) plane cuts of the unit sphere."""

    sites: tuple[tuple[SpherePoint, int], ...]
    circles: tuple[tuple[float, float, float, float], ...] = field(default_factory=tuple)
    title: str = ""


def spec_from_roots(r: RootMultiset, tol: float = 1e-7, title: str = "") -> PlotSpec:
    from .classify import degeneracy_configuration

    _, clustered = degeneracy_configuration(r, tol)
    sites = tuple(
        (to_sphere(site), mult) for site, mult in clustered.sites
    )
    return PlotSpec(sites, circles=((0.0, 0.0, 1.0, 0.0),), title=title)


def _fmt(x: float) -> str:
    return format(x, ".6g")


def _project(xyz: tuple[float, float, float], view: int) -> tuple[float, float, bool]:
    x, y, z = xyz
    cx, cy = _CENTERS[view]
    visible = y <= _RIM_EPS if view == 0 else y >= -_RIM_EPS
    px = cx + _RADIUS * (x if view == 0 else -x)
    py = cy - _RADIUS * z
    return px, py, visible


def _circle_polyline(circle, view: int) -> list[str]:
    nx, ny, nz, h = circle
    norm = math.sqrt(nx * nx + ny * ny + nz * nz)
    if norm == 0.0 or abs(h) / norm >= 1.0:
        return []
    nx, ny, nz = nx / norm, ny / norm, nz / norm
    h = h / norm
    rho = math.sqrt(1.0 - h * h)
    # orthonormal basis of the cutting plane
    if abs(nz) < 0.9:
        ux, uy, uz = ny * 1.0 - nz * 0.0, nz * 0.0 - nx * 1.0, nx * 0.0 - ny * 0.0
    else:
        ux, uy, uz = ny * 0.0 - nz * 1.0, nz * 0.0 - nx * 0.0, nx * 1.0 - ny * 0.0
    un = math.sqrt(ux * ux + uy * uy + uz * uz)
    ux, uy, uz = ux / un, uy / un, uz / un
    vx = ny * uz - nz * uy
    vy = nz * ux - nx * uz
    vz = nx * uy - ny * ux
    pieces = []
    current: list[str] = []
    for i in range(181):
        ang = 2.0 * math.pi * i / 180.0
        ca, sa = math.cos(ang), math.sin(ang)
        p = (
            h * nx + rho * (ca * ux + sa * vx),
            h * ny + rho * (ca * uy + sa * vy),
            h * nz + rho * (ca * uz + sa * vz),
        )
        px, py, vis = _project(p, view)
        if vis:
            current.append(f"{_fmt(px)},{_fmt(py)}")
        elif current:
            pieces.append(current)
            current = []
    if current:
        pieces.append(current)
    return [
        f'<polyline points="{" ".join(piece)}" fill="none" stroke="#999999" '
        f'stroke-width="1" stroke-dasharray="4 3"/>'
        for piece in pieces
        if len(piece) >= 2
    ]


def render_svg(spec: PlotSpec) -> str:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]
    if spec.title:
        safe = (
            spec.title.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        )
        parts.append(
            f'<text x="16" y="24" font-family="sans-serif" font-size="14">{safe}</text>'
        )
    for view, label in ((0, "front"), (1, "back")):
        cx, cy = _CENTERS[view]
        parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(_RADIUS)}" '
            f'fill="none" stroke="black" stroke-width="1.5"/>'
        )
        parts.append(
            f'<line x1="{_fmt(cx - _RADIUS)}" y1="{_fmt(cy)}" x2="{_fmt(cx + _RADIUS)}" '
            f'y2="{_fmt(cy)}" stroke="#cccccc" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(cx)}" y="{_fmt(cy + _RADIUS + 28)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{label}</text>'
        )
        for circle in spec.circles:
            parts.extend(_circle_polyline(circle, view))
        for sp, mult in spec.sites:
            px, py, visible = _project(sphere_xyz(sp), view)
            if not visible:
                continue
            parts.append(
                f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="6" fill="white" '
                f'stroke="black" stroke-width="1.5"/>'
            )
            if mult > 1:
                parts.append(
                    f'<text x="{_fmt(px + 9)}" y="{_fmt(py - 7)}" '
                    f'font-family="sans-serif" font-size="12">x{mult}</text>'
                )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
