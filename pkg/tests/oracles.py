"""Reference implementations used as test oracles.

Nothing here imports the geometry kernels or the statement evaluator: shapes
are rebuilt from their defining formulas, predicates are brute-forced over
plain tuples, and statements are generated as text alongside a Python
closure that computes the expected truth value.
"""

import itertools
import math
import random

import numpy as np
from scipy.spatial import cKDTree

SQ3 = math.sqrt(3.0)


# --------------------------------------------------------------------------
# geometry


def ref_vertices(shape, size, x, y):
    r = size / 2.0
    if shape == "square":
        h = r * math.sqrt(0.5)
        return [(x - h, y - h), (x + h, y - h), (x + h, y + h), (x - h, y + h)]
    if shape == "triangle":
        return [(x, y + r), (x - r * SQ3 / 2, y - r / 2), (x + r * SQ3 / 2, y - r / 2)]
    return None


def ref_bbox(shape, size, x, y):
    v = ref_vertices(shape, size, x, y)
    if v is None:
        r = size / 2.0
        return x - r, x + r, y - r, y + r
    xs, ys = zip(*v)
    return min(xs), max(xs), min(ys), max(ys)


def inside_mask(shape, size, x, y, px, py):
    """Closed-region membership of pixel centers ``(px, py)``."""
    if shape == "circle":
        return (px - x) ** 2 + (py - y) ** 2 <= (size / 2.0) ** 2
    v = ref_vertices(shape, size, x, y)
    mask = np.ones_like(px, dtype=bool)
    for (ax, ay), (bx, by) in zip(v, v[1:] + v[:1]):
        mask &= (bx - ax) * (py - ay) - (by - ay) * (px - ax) >= 0.0
    return mask


def raster(a, b, res=2048):
    """Rasterize two objects over their joint bounding box.

    Returns the two masks, the pixel-center coordinates and the pixel pitch.
    """
    boxes = [ref_bbox(o.shape.value, o.size, o.x, o.y) for o in (a, b)]
    x0 = min(bx[0] for bx in boxes)
    x1 = max(bx[1] for bx in boxes)
    y0 = min(bx[2] for bx in boxes)
    y1 = max(bx[3] for bx in boxes)
    pitch = max(x1 - x0, y1 - y0) / res
    g = (np.arange(res) + 0.5) * pitch
    px, py = np.meshgrid(x0 + g, y0 + g, indexing="xy")
    ma = inside_mask(a.shape.value, a.size, a.x, a.y, px, py)
    mb = inside_mask(b.shape.value, b.size, b.x, b.y, px, py)
    return ma, mb, px, py, pitch


def raster_overlap(a, b, res=2048):
    """Pixel-set intersection at the pitch of a ``res`` grid over the joint box.

    Only the intersection of the two bounding boxes can hold shared pixels,
    so only that window is sampled.
    """
    boxes = [ref_bbox(o.shape.value, o.size, o.x, o.y) for o in (a, b)]
    x0 = min(bx[0] for bx in boxes)
    y0 = min(bx[2] for bx in boxes)
    pitch = max(max(bx[1] for bx in boxes) - x0, max(bx[3] for bx in boxes) - y0) / res
    lo_x, hi_x = max(bx[0] for bx in boxes), min(bx[1] for bx in boxes)
    lo_y, hi_y = max(bx[2] for bx in boxes), min(bx[3] for bx in boxes)
    if lo_x > hi_x or lo_y > hi_y:
        return False, pitch
    ix = np.arange(math.floor((lo_x - x0) / pitch), math.ceil((hi_x - x0) / pitch) + 1)
    iy = np.arange(math.floor((lo_y - y0) / pitch), math.ceil((hi_y - y0) / pitch) + 1)
    px, py = np.meshgrid(x0 + (ix + 0.5) * pitch, y0 + (iy + 0.5) * pitch, indexing="xy")
    ma = inside_mask(a.shape.value, a.size, a.x, a.y, px, py)
    mb = inside_mask(b.shape.value, b.size, b.x, b.y, px, py)
    return bool(np.any(ma & mb)), pitch


def raster_gap(a, b, res=2048):
    """Smallest distance between the pixel sets of two disjoint objects."""
    ma, mb, px, py, pitch = raster(a, b, res)
    pa = np.column_stack([px[ma], py[ma]])
    pb = np.column_stack([px[mb], py[mb]])
    d, _ = cKDTree(pb).query(pa, k=1)
    return float(d.min()), pitch


def _seg_dist(p, a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    e = b - a
    t = np.clip(((p - a) @ e) / (e @ e), 0.0, 1.0)
    return np.hypot(*(p - a - t[:, None] * e).T)


def ref_gap(a, b):
    """Distance between two disjoint convex objects (not valid if they overlap)."""
    va = ref_vertices(a.shape.value, a.size, a.x, a.y)
    vb = ref_vertices(b.shape.value, b.size, b.x, b.y)
    if va is None and vb is None:
        return math.hypot(a.x - b.x, a.y - b.y) - (a.size + b.size) / 2
    if va is None or vb is None:
        circ, verts = (a, vb) if va is None else (b, va)
        p = np.array([[circ.x, circ.y]])
        d = min(_seg_dist(p, verts[i], verts[(i + 1) % len(verts)])[0]
                for i in range(len(verts)))
        return d - circ.size / 2
    best = math.inf
    for src, dst in ((va, vb), (vb, va)):
        p = np.array(src, dtype=float)
        for i in range(len(dst)):
            best = min(best, float(_seg_dist(p, dst[i], dst[(i + 1) % len(dst)]).min()))
    return best


def ref_band_distance(kind, cx, cy, scale, px, py):
    """Unsigned distance from points to the contour of a big shape (vectorized)."""
    p = np.column_stack([px, py])
    if kind == "circle":
        return np.abs(np.hypot(px - cx, py - cy) - scale)
    v = ref_vertices(kind, 2.0 * scale, cx, cy)
    return np.min([_seg_dist(p, v[i], v[(i + 1) % len(v)]) for i in range(len(v))], axis=0)


# --------------------------------------------------------------------------
# brute-force predicates on plain tuples (shape, color, size, x, y)


def plain(f):
    return [(o.shape.value, o.color.value, o.size, o.x, o.y) for o in f.objects]


def pairs_oracle(objs, rel1, rel2):
    """Exhaustive enumeration of all ways to pick two disjoint pairs."""
    for quad in itertools.combinations(range(len(objs)), 4):
        i, j, k, m = quad
        for p, q in (((i, j), (k, m)), ((i, k), (j, m)), ((i, m), (j, k))):
            for first, second in ((p, q), (q, p)):
                ok = True
                for (u, v), rel in ((first, rel1), (second, rel2)):
                    if objs[u][0] != objs[v][0]:
                        ok = False
                    elif (objs[u][1] == objs[v][1]) != (rel == "same"):
                        ok = False
                if ok:
                    return True
    return False


def union_find_groups(objs, eps):
    parent = list(range(len(objs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(objs)):
        for j in range(i + 1, len(objs)):
            if math.dist(objs[i][3:], objs[j][3:]) <= eps:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(objs))})


# --------------------------------------------------------------------------
# random statements paired with brute-force truth functions

SHAPES = ("circle", "square", "triangle")
COLORS = ("red", "blue", "yellow")
OPS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}
REGION_TESTS = {
    "left_half": lambda o: o[3] < 0.5,
    "right_half": lambda o: o[3] >= 0.5,
    "lower_half": lambda o: o[4] < 0.5,
    "upper_half": lambda o: o[4] >= 0.5,
}


def random_selector(rng):
    conds, tests = [], []
    for _ in range(rng.choice((0, 1, 1, 2, 2, 3))):
        kind = rng.choice(("shape", "color", "size", "region"))
        if kind == "shape":
            v = rng.choice(SHAPES)
            conds.append(f"shape={v}")
            tests.append(lambda o, v=v: o[0] == v)
        elif kind == "color":
            v = rng.choice(COLORS)
            conds.append(f"color={v}")
            tests.append(lambda o, v=v: o[1] == v)
        elif kind == "size":
            op = rng.choice(list(OPS))
            v = round(rng.uniform(0.04, 0.2), 2)
            conds.append(f"size{op}{v}")
            tests.append(lambda o, op=op, v=v: OPS[op](o[2], v))
        else:
            v = rng.choice(list(REGION_TESTS))
            conds.append(f"region={v}")
            tests.append(REGION_TESTS[v])
    return "{" + ", ".join(conds) + "}", (lambda o: all(t(o) for t in tests))


def _relation_oracle(name, a, b, objects):
    if name == "left_of":
        return a[3] < b[3]
    if name == "right_of":
        return a[3] > b[3]
    if name == "above":
        return a[4] > b[4]
    if name == "below":
        return a[4] < b[4]
    return ref_gap(objects[0], objects[1]) <= 0.01


def random_atom(rng):
    kind = rng.choice(("count", "count2", "exists", "forall", "rel"))
    s1, m1 = random_selector(rng)
    if kind == "count":
        op, k = rng.choice(list(OPS)), rng.randint(0, 4)
        return f"count({s1}) {op} {k}", \
            lambda objs, f: OPS[op](sum(map(m1, objs)), k)
    s2, m2 = random_selector(rng)
    if kind == "count2":
        op = rng.choice(list(OPS))
        return f"count({s1}) {op} count({s2})", \
            lambda objs, f: OPS[op](sum(map(m1, objs)), sum(map(m2, objs)))
    if kind == "exists":
        return f"exists({s1})", lambda objs, f: any(map(m1, objs))
    if kind == "forall":
        return f"forall({s1}, {s2})", \
            lambda objs, f: not any(m1(o) and not m2(o) for o in objs)
    rel = rng.choice(("left_of", "right_of", "above", "below", "touching"))

    def rel_truth(objs, f):
        for i, a in enumerate(objs):
            for j, b in enumerate(objs):
                if i != j and m1(a) and m2(b) and not _relation_oracle(
                        rel, a, b, (f.objects[i], f.objects[j])):
                    return False
        return True

    return f"rel({s1}, {s2}, {rel})", rel_truth


def random_statement(rng, depth=2):
    """Random statement text and its brute-force truth function ``(objs, fig)``."""
    roll = rng.random()
    if depth == 0 or roll < 0.4:
        return random_atom(rng)
    if roll < 0.55:
        text, fn = random_statement(rng, depth - 1)
        return f"not ({text})", lambda objs, f: not fn(objs, f)
    lt, lf = random_statement(rng, depth - 1)
    rt, rf = random_statement(rng, depth - 1)
    if roll < 0.8:
        return f"({lt}) and ({rt})", lambda objs, f: lf(objs, f) and rf(objs, f)
    return f"({lt}) or ({rt})", lambda objs, f: lf(objs, f) or rf(objs, f)


def random_statements(seed, n):
    rng = random.Random(seed)
    return [random_statement(rng) for _ in range(n)]
