"""Pure-Python geometry kernels.

Shapes are passed as integer codes (0 circle, 1 square, 2 triangle) with a
center and a ``size`` equal to the diameter of the circumscribed circle.
The compiled ``_ckernels`` module exposes the same functions with the same
signatures; :mod:`kandinsky._kernels` picks one at import time.
"""

import math

import numpy as np

CIRCLE, SQUARE, TRIANGLE = 0, 1, 2

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def vertices(code, x, y, size):
    """Counter-clockwise polygon vertices, or an empty list for circles."""
    r = 0.5 * size
    if code == SQUARE:
        h = r / SQRT2
        return [(x - h, y - h), (x + h, y - h), (x + h, y + h), (x - h, y + h)]
    if code == TRIANGLE:
        dx = r * SQRT3 / 2.0
        return [(x, y + r), (x - dx, y - 0.5 * r), (x + dx, y - 0.5 * r)]
    return []


def extent(code, x, y, size):
    """Axis-aligned bounding box ``(xmin, xmax, ymin, ymax)``."""
    r = 0.5 * size
    if code == SQUARE:
        h = r / SQRT2
        return x - h, x + h, y - h, y + h
    if code == TRIANGLE:
        dx = r * SQRT3 / 2.0
        return x - dx, x + dx, y - 0.5 * r, y + r
    return x - r, x + r, y - r, y + r


def _segment_distance(px, py, ax, ay, bx, by):
    ex, ey = bx - ax, by - ay
    ll = ex * ex + ey * ey
    t = ((px - ax) * ex + (py - ay) * ey) / ll
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(px - ax - t * ex, py - ay - t * ey)


def _signed_polygon_distance(px, py, verts):
    """Signed distance to a CCW convex polygon boundary (negative inside)."""
    n = len(verts)
    inside = True
    best = math.inf
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        if (bx - ax) * (py - ay) - (by - ay) * (px - ax) < 0.0:
            inside = False
        d = _segment_distance(px, py, ax, ay, bx, by)
        if d < best:
            best = d
    return -best if inside else best


def signed_distance(code, x, y, size, px, py):
    """Signed distance from ``(px, py)`` to the boundary of a shape."""
    if code == CIRCLE:
        return math.hypot(px - x, py - y) - 0.5 * size
    return _signed_polygon_distance(px, py, vertices(code, x, y, size))


def _polygon_clearance(va, vb):
    max_sep = -math.inf
    for verts, other in ((va, vb), (vb, va)):
        n = len(verts)
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            nx, ny = by - ay, ax - bx
            norm = math.hypot(nx, ny)
            nx /= norm
            ny /= norm
            pa = [vx * nx + vy * ny for vx, vy in verts]
            pb = [vx * nx + vy * ny for vx, vy in other]
            sep = max(min(pb) - max(pa), min(pa) - max(pb))
            if sep > max_sep:
                max_sep = sep
    if max_sep <= 0.0:
        return max_sep
    best = math.inf
    for verts, other in ((va, vb), (vb, va)):
        m = len(other)
        for px, py in verts:
            for j in range(m):
                ax, ay = other[j]
                bx, by = other[(j + 1) % m]
                d = _segment_distance(px, py, ax, ay, bx, by)
                if d < best:
                    best = d
    return best


def clearance(ca, xa, ya, sa, cb, xb, yb, sb):
    """Signed clearance between two shapes.

    Positive values are the Euclidean gap between the closed regions; zero
    means the boundaries touch; negative values are the penetration depth.
    """
    if ca == CIRCLE and cb == CIRCLE:
        return math.hypot(xa - xb, ya - yb) - 0.5 * (sa + sb)
    if ca == CIRCLE:
        return signed_distance(cb, xb, yb, sb, xa, ya) - 0.5 * sa
    if cb == CIRCLE:
        return signed_distance(ca, xa, ya, sa, xb, yb) - 0.5 * sb
    return _polygon_clearance(vertices(ca, xa, ya, sa), vertices(cb, xb, yb, sb))


def min_clearance(code, x, y, size, codes, xs, ys, sizes, count):
    """Smallest clearance between one shape and the first ``count`` others."""
    best = math.inf
    for i in range(count):
        c = clearance(code, x, y, size, codes[i], xs[i], ys[i], sizes[i])
        if c < best:
            best = c
    return best


def contour_distance(kind, cx, cy, scale, px, py):
    """Unsigned distance from a point to the contour of a meta-shape."""
    return abs(signed_distance(kind, cx, cy, 2.0 * scale, px, py))


def contour_rms(kind, cx, cy, scale, xs, ys):
    total = 0.0
    n = len(xs)
    for i in range(n):
        d = contour_distance(kind, cx, cy, scale, xs[i], ys[i])
        total += d * d
    return math.sqrt(total / n)


def _contour_distance_array(kind, dx, dy, scale):
    if kind == CIRCLE:
        return np.abs(np.hypot(dx, dy) - scale)
    if kind == SQUARE:
        h = scale / SQRT2
        ax = np.abs(dx)
        ay = np.abs(dy)
        inside = (ax <= h) & (ay <= h)
        d_in = h - np.maximum(ax, ay)
        d_out = np.hypot(np.maximum(ax - h, 0.0), np.maximum(ay - h, 0.0))
        return np.where(inside, d_in, d_out)
    verts = vertices(TRIANGLE, 0.0, 0.0, 2.0 * scale)
    best = None
    for i in range(3):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % 3]
        ex, ey = bx - ax, by - ay
        t = np.clip(((dx - ax) * ex + (dy - ay) * ey) / (ex * ex + ey * ey), 0.0, 1.0)
        d = np.hypot(dx - ax - t * ex, dy - ay - t * ey)
        best = d if best is None else np.minimum(best, d)
    return best


def grid_axis(lo, hi, step):
    """Grid coordinates ``lo + i * step`` up to and including ``hi``."""
    if hi < lo:
        return np.empty(0)
    m = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(m, dtype=np.float64)


def grid_search(kind, xs, ys, xlo, xhi, ylo, yhi, slo, shi, step, cutoff=math.inf):
    """Exhaustive search for the meta-shape minimizing contour RMS.

    Scans scale (outer), then center x, then center y on a regular grid and
    returns ``(cx, cy, scale, rms)`` for the first minimum encountered, or
    ``None`` when the grid is empty or no candidate has RMS below ``cutoff``.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    gx = grid_axis(xlo, xhi, step)
    gy = grid_axis(ylo, yhi, step)
    gs = grid_axis(slo, shi, step)
    if gx.size == 0 or gy.size == 0 or gs.size == 0:
        return None
    cx, cy = np.meshgrid(gx, gy, indexing="ij")
    cx = cx.ravel()
    cy = cy.ravel()
    slack = cutoff * math.sqrt(xs.size)
    best = None
    for s in gs:
        # a candidate under the cutoff keeps every point within s + slack
        reach = s + slack
        keep = ((cx >= xs.max() - reach - 1e-9 * step) & (cx <= xs.min() + reach + 1e-9 * step)
                & (cy >= ys.max() - reach - 1e-9 * step) & (cy <= ys.min() + reach + 1e-9 * step))
        if not keep.any():
            continue
        kx, ky = cx[keep], cy[keep]
        d = _contour_distance_array(kind, xs[None, :] - kx[:, None], ys[None, :] - ky[:, None], s)
        ss = np.einsum("ij,ij->i", d, d)
        k = int(np.argmin(ss))
        if best is None or ss[k] < best[3]:
            best = (float(kx[k]), float(ky[k]), float(s), float(ss[k]))
    if best is None:
        return None
    rms = math.sqrt(best[3] / xs.size)
    if not rms < cutoff:
        return None
    return best[0], best[1], best[2], rms
