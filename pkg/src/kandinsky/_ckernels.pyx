# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels; mirrors ``_pykernels`` function for function."""

from libc.math cimport sqrt, fabs, floor, hypot, INFINITY

import numpy as np

cdef enum:
    CIRCLE = 0
    SQUARE = 1
    TRIANGLE = 2

cdef double SQRT2 = sqrt(2.0)
cdef double SQRT3 = sqrt(3.0)


cdef int _vertices(int code, double x, double y, double size,
                   double* vx, double* vy) nogil:
    cdef double r = 0.5 * size
    cdef double h, dx
    if code == SQUARE:
        h = r / SQRT2
        vx[0] = x - h; vy[0] = y - h
        vx[1] = x + h; vy[1] = y - h
        vx[2] = x + h; vy[2] = y + h
        vx[3] = x - h; vy[3] = y + h
        return 4
    if code == TRIANGLE:
        dx = r * SQRT3 / 2.0
        vx[0] = x; vy[0] = y + r
        vx[1] = x - dx; vy[1] = y - 0.5 * r
        vx[2] = x + dx; vy[2] = y - 0.5 * r
        return 3
    return 0


cdef inline double _segment_distance(double px, double py, double ax, double ay,
                                     double bx, double by) nogil:
    cdef double ex = bx - ax
    cdef double ey = by - ay
    cdef double t = ((px - ax) * ex + (py - ay) * ey) / (ex * ex + ey * ey)
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return hypot(px - ax - t * ex, py - ay - t * ey)


cdef inline double _segment_distance_sq(double px, double py, double ax, double ay,
                                        double bx, double by) nogil:
    cdef double ex = bx - ax
    cdef double ey = by - ay
    cdef double t = ((px - ax) * ex + (py - ay) * ey) / (ex * ex + ey * ey)
    cdef double qx, qy
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    qx = px - ax - t * ex
    qy = py - ay - t * ey
    return qx * qx + qy * qy


cdef double _signed_polygon_distance(double px, double py, double* vx, double* vy,
                                     int n) nogil:
    cdef bint inside = True
    cdef double best = INFINITY
    cdef double d
    cdef int i, j
    for i in range(n):
        j = (i + 1) % n
        if (vx[j] - vx[i]) * (py - vy[i]) - (vy[j] - vy[i]) * (px - vx[i]) < 0.0:
            inside = False
        d = _segment_distance_sq(px, py, vx[i], vy[i], vx[j], vy[j])
        if d < best:
            best = d
    best = sqrt(best)
    return -best if inside else best


cdef double _signed_distance(int code, double x, double y, double size,
                             double px, double py) nogil:
    cdef double vx[4]
    cdef double vy[4]
    cdef int n
    if code == CIRCLE:
        return hypot(px - x, py - y) - 0.5 * size
    n = _vertices(code, x, y, size, vx, vy)
    return _signed_polygon_distance(px, py, vx, vy, n)


cdef double _axis_sep(double* ax_, double* ay_, int na, double* bx_, double* by_,
                      int nb) nogil:
    cdef double best = -INFINITY
    cdef double nx, ny, norm, p, amin, amax, bmin, bmax, sep
    cdef int i, j, k
    for i in range(na):
        j = (i + 1) % na
        nx = ay_[j] - ay_[i]
        ny = ax_[i] - ax_[j]
        norm = hypot(nx, ny)
        nx /= norm
        ny /= norm
        amin = INFINITY; amax = -INFINITY
        bmin = INFINITY; bmax = -INFINITY
        for k in range(na):
            p = ax_[k] * nx + ay_[k] * ny
            if p < amin: amin = p
            if p > amax: amax = p
        for k in range(nb):
            p = bx_[k] * nx + by_[k] * ny
            if p < bmin: bmin = p
            if p > bmax: bmax = p
        sep = bmin - amax
        if amin - bmax > sep:
            sep = amin - bmax
        if sep > best:
            best = sep
    return best


cdef double _vertex_segment_min(double* ax_, double* ay_, int na, double* bx_,
                                double* by_, int nb) nogil:
    cdef double best = INFINITY
    cdef double d
    cdef int i, j, k
    for i in range(na):
        for j in range(nb):
            k = (j + 1) % nb
            d = _segment_distance(ax_[i], ay_[i], bx_[j], by_[j], bx_[k], by_[k])
            if d < best:
                best = d
    return best


cdef double _clearance(int ca, double xa, double ya, double sa,
                       int cb, double xb, double yb, double sb) nogil:
    cdef double vax[4]
    cdef double vay[4]
    cdef double vbx[4]
    cdef double vby[4]
    cdef int na, nb
    cdef double s1, s2, d1, d2
    if ca == CIRCLE and cb == CIRCLE:
        return hypot(xa - xb, ya - yb) - 0.5 * (sa + sb)
    if ca == CIRCLE:
        return _signed_distance(cb, xb, yb, sb, xa, ya) - 0.5 * sa
    if cb == CIRCLE:
        return _signed_distance(ca, xa, ya, sa, xb, yb) - 0.5 * sb
    na = _vertices(ca, xa, ya, sa, vax, vay)
    nb = _vertices(cb, xb, yb, sb, vbx, vby)
    s1 = _axis_sep(vax, vay, na, vbx, vby, nb)
    s2 = _axis_sep(vbx, vby, nb, vax, vay, na)
    if s2 > s1:
        s1 = s2
    if s1 <= 0.0:
        return s1
    d1 = _vertex_segment_min(vax, vay, na, vbx, vby, nb)
    d2 = _vertex_segment_min(vbx, vby, nb, vax, vay, na)
    return d1 if d1 < d2 else d2


def vertices(int code, double x, double y, double size):
    cdef double vx[4]
    cdef double vy[4]
    cdef int n = _vertices(code, x, y, size, vx, vy)
    return [(vx[i], vy[i]) for i in range(n)]


def extent(int code, double x, double y, double size):
    cdef double r = 0.5 * size
    cdef double h, dx
    if code == SQUARE:
        h = r / SQRT2
        return x - h, x + h, y - h, y + h
    if code == TRIANGLE:
        dx = r * SQRT3 / 2.0
        return x - dx, x + dx, y - 0.5 * r, y + r
    return x - r, x + r, y - r, y + r


def signed_distance(int code, double x, double y, double size, double px, double py):
    return _signed_distance(code, x, y, size, px, py)


def clearance(int ca, double xa, double ya, double sa,
              int cb, double xb, double yb, double sb):
    return _clearance(ca, xa, ya, sa, cb, xb, yb, sb)


def min_clearance(int code, double x, double y, double size,
                  codes, xs, ys, sizes, int count):
    cdef double best = INFINITY
    cdef double c
    cdef int i
    for i in range(count):
        c = _clearance(code, x, y, size, <int>codes[i], <double>xs[i],
                       <double>ys[i], <double>sizes[i])
        if c < best:
            best = c
    return best


def contour_distance(int kind, double cx, double cy, double scale,
                     double px, double py):
    return fabs(_signed_distance(kind, cx, cy, 2.0 * scale, px, py))


def contour_rms(int kind, double cx, double cy, double scale, xs, ys):
    cdef double[::1] ax = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] ay = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t n = ax.shape[0]
    cdef Py_ssize_t i
    cdef double total = 0.0
    cdef double d
    for i in range(n):
        d = _signed_distance(kind, cx, cy, 2.0 * scale, ax[i], ay[i])
        total += d * d
    return sqrt(total / n)


cdef Py_ssize_t _axis_len(double lo, double hi, double step):
    if hi < lo:
        return 0
    return <Py_ssize_t>floor((hi - lo) / step + 1e-9) + 1


cdef (Py_ssize_t, Py_ssize_t) _window(double lo, double step, Py_ssize_t m,
                                      double wlo, double whi) nogil:
    cdef Py_ssize_t a = 0
    cdef Py_ssize_t b = m
    cdef double t
    if wlo > lo:
        t = (wlo - lo) / step - 1e-9
        a = <Py_ssize_t>floor(t)
        if a < t:
            a += 1
    if whi == INFINITY:
        return a, b
    t = (whi - lo) / step + 1e-9
    if t < 0:
        return a, 0
    if <Py_ssize_t>floor(t) + 1 < b:
        b = <Py_ssize_t>floor(t) + 1
    return a, b


def grid_search(int kind, xs, ys, double xlo, double xhi, double ylo, double yhi,
                double slo, double shi, double step, double cutoff=INFINITY):
    cdef double[::1] ax = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] ay = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t n = ax.shape[0]
    cdef Py_ssize_t mx = _axis_len(xlo, xhi, step)
    cdef Py_ssize_t my = _axis_len(ylo, yhi, step)
    cdef Py_ssize_t ms = _axis_len(slo, shi, step)
    cdef Py_ssize_t i, j, k, p
    cdef double cx, cy, s, d, total
    cdef double best = cutoff * cutoff * ax.shape[0]
    cdef double bx = 0.0, by = 0.0, bs = 0.0
    cdef bint found = False
    cdef double vx[4]
    cdef double vy[4]
    cdef int nv
    if mx == 0 or my == 0 or ms == 0 or n == 0:
        return None
    cdef double slack = cutoff * sqrt(<double>n)
    cdef double pxmin = INFINITY, pxmax = -INFINITY, pymin = INFINITY, pymax = -INFINITY
    cdef Py_ssize_t i0, i1, j0, j1
    for p in range(n):
        if ax[p] < pxmin: pxmin = ax[p]
        if ax[p] > pxmax: pxmax = ax[p]
        if ay[p] < pymin: pymin = ay[p]
        if ay[p] > pymax: pymax = ay[p]
    with nogil:
        for k in range(ms):
            s = slo + step * k
            # a candidate under the cutoff keeps every point within s + slack
            i0, i1 = _window(xlo, step, mx, pxmax - s - slack, pxmin + s + slack)
            j0, j1 = _window(ylo, step, my, pymax - s - slack, pymin + s + slack)
            for i in range(i0, i1):
                cx = xlo + step * i
                for j in range(j0, j1):
                    cy = ylo + step * j
                    total = 0.0
                    nv = _vertices(kind, cx, cy, 2.0 * s, vx, vy)
                    for p in range(n):
                        if nv == 0:
                            d = hypot(ax[p] - cx, ay[p] - cy) - s
                        else:
                            d = _signed_polygon_distance(ax[p], ay[p], vx, vy, nv)
                        total += d * d
                        if total >= best:
                            break
                    if total < best:
                        found = True
                        best = total
                        bx = cx
                        by = cy
                        bs = s
    if not found:
        return None
    return bx, by, bs, sqrt(best / n)
