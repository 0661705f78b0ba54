"""Kandinsky Patterns: a universe paired with a ground-truth statement.

Provides membership, positive / negative / counterfactual sampling, the
built-in patterns and the Challenge 1 ("objects and shapes") meta-shape
generator and evaluator.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Optional, Union

import numpy as np

from . import _kernels as K
from .core import (
    Color,
    KFigure,
    KObject,
    MetaShape,
    Provenance,
    Shape,
    UniverseConfig,
    contains,
    fit_circle,
    is_cropped,
    place_objects,
    sample_figure,
    validate_figure,
)
from .dsl import Statement, parse
from .errors import BudgetExhausted, MissingGroundTruth, UniverseMismatch

DEFAULT_BUDGET = 2000
GENERATOR_ATTEMPTS = 200

FIT_THRESHOLD = 0.03
FIT_STEP = 0.01
SCALE_RANGE = (0.15, 0.45)
DEFAULT_BAND = 0.04
# grid candidates above this RMS cannot be refined below FIT_THRESHOLD
GRID_CUTOFF = 2.0 * FIT_THRESHOLD

SIDES = ("h_not_gt", "gt_not_h")

# rules that put a figure outside a universe (geometry is judged separately)
_DOMAIN_RULES = frozenset({
    "count_range", "shape_domain", "color_domain", "size_range",
    "grid_position", "uniform_size",
})

ALLOWED_COLORS = MappingProxyType({
    Shape.SQUARE: frozenset({Color.BLUE, Color.RED}),
    Shape.TRIANGLE: frozenset({Color.YELLOW, Color.RED}),
    Shape.CIRCLE: frozenset({Color.YELLOW, Color.BLUE}),
})


@dataclass(frozen=True)
class NativeStatement(Statement):
    """A ground truth implemented in code rather than in the statement language."""

    name: str

    def evaluate(self, f):
        return bool(NATIVE_EVALUATORS[self.name](f))

    def __str__(self):
        return f"native:{self.name}"


@dataclass(frozen=True)
class PatternSpec:
    name: str
    universe: UniverseConfig
    ground_truth: Optional[Statement]
    description: str = ""

    def with_ground_truth(self, statement: Statement, description: str = "") -> "PatternSpec":
        return replace(self, ground_truth=statement,
                       description=description or self.description)


@dataclass(frozen=True)
class CounterfactualSet:
    """Figures in the symmetric difference of a hypothesis and a ground truth.

    ``figures`` holds ``(tag, figure)`` pairs with tag ``h_not_gt`` or
    ``gt_not_h``; ``side_empty`` lists sides for which nothing was found
    within budget.
    """

    hypothesis: Statement
    ground_truth: Statement
    figures: tuple = ()
    side_empty: tuple = ()

    def side(self, tag: str) -> list:
        return [f for t, f in self.figures if t == tag]


def statement_from_text(text: str) -> Statement:
    """Parse a statement, accepting ``native:<id>`` references."""
    text = text.strip()
    if text.startswith("native:"):
        name = text[len("native:"):]
        if name not in NATIVE_EVALUATORS:
            raise KeyError(f"unknown native evaluator {name!r}")
        return NativeStatement(name)
    return parse(text)


def _seed_stream(seed):
    rng = random.Random(seed)
    while True:
        yield rng.getrandbits(63)


def domain_violations(p: PatternSpec, f: KFigure) -> list:
    return [v for v in validate_figure(f, p.universe).violations if v.rule in _DOMAIN_RULES]


def membership(p: PatternSpec, f: KFigure) -> bool:
    """Does ``f`` belong to the pattern, i.e. does its ground truth hold?

    Raises :class:`UniverseMismatch` when ``f`` has the wrong object count or
    attributes outside the universe domains.
    """
    if p.ground_truth is None:
        raise MissingGroundTruth(f"pattern {p.name!r} has no ground truth; supply a statement")
    bad = domain_violations(p, f)
    if bad:
        detail = "; ".join(f"{v.rule}: {v.detail}" for v in bad)
        raise UniverseMismatch(f"figure outside universe of {p.name!r}: {detail}")
    return p.ground_truth.evaluate(f)


# --------------------------------------------------------------------------
# sampling


def _tag(f, seed, name, label):
    return KFigure(f.objects, Provenance(seed=seed, pattern=name, label=label))


def _constructive(generator, accept, u, seed, budget):
    seeds = _seed_stream(seed)
    for _ in range(min(budget, GENERATOR_ATTEMPTS)):
        f = generator(u, next(seeds))
        if f is not None and validate_figure(f, u).ok and accept(f):
            return f
    return None


def _rejection(accept, u, seed, budget):
    seeds = _seed_stream(seed)
    for _ in range(budget):
        f = sample_figure(u, next(seeds))
        if accept(f):
            return f
    return None


def sample_positive(p: PatternSpec, seed: int, budget: int = DEFAULT_BUDGET) -> KFigure:
    """A figure of the pattern; constructive when a generator is registered."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if p.ground_truth is None:
        raise MissingGroundTruth(f"pattern {p.name!r} has no ground truth; supply a statement")
    accept = p.ground_truth.evaluate
    f = None
    generator = POSITIVE_GENERATORS.get(str(p.ground_truth))
    if generator is not None:
        f = _constructive(generator, accept, p.universe, seed, budget)
    if f is None:
        f = _rejection(accept, p.universe, seed, budget)
    if f is None:
        raise BudgetExhausted(f"no positive for {p.name!r} within {budget} attempts", "true")
    return _tag(f, seed, p.name, "true")


@lru_cache(maxsize=64)
def positive_count_distribution(p: PatternSpec, n_samples: int = 200) -> tuple:
    """Object-count histogram of positives as sorted ``(count, frequency)`` pairs."""
    lo, hi = p.universe.n_objects
    if lo == hi:
        return ((lo, 1),)
    hist = Counter()
    for k, s in zip(range(n_samples), _seed_stream(0)):
        try:
            hist[len(sample_positive(p, s))] += 1
        except BudgetExhausted:
            break
    if not hist:
        return tuple((n, 1) for n in range(lo, hi + 1))
    return tuple(sorted(hist.items()))


def sample_negative(p: PatternSpec, seed: int, budget: int = DEFAULT_BUDGET) -> KFigure:
    """A figure of the universe outside the pattern, count-matched to positives."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if p.ground_truth is None:
        raise MissingGroundTruth(f"pattern {p.name!r} has no ground truth; supply a statement")
    rng = random.Random(seed)
    counts, weights = zip(*positive_count_distribution(p))
    n = rng.choices(counts, weights)[0]
    u = replace(p.universe, n_objects=(n, n))
    f = _rejection(lambda g: not p.ground_truth.evaluate(g), u, rng.getrandbits(63), budget)
    if f is None:
        raise BudgetExhausted(f"no negative for {p.name!r} within {budget} attempts", "false")
    return _tag(f, seed, p.name, "false")


def sample_counterfactual(h: Statement, gt: Statement, u: UniverseConfig, side: str,
                          seed: int, budget: int = DEFAULT_BUDGET) -> KFigure:
    """One figure from one side of the symmetric difference of ``h`` and ``gt``."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if side == "h_not_gt":
        def accept(f):
            return h.evaluate(f) and not gt.evaluate(f)
    else:
        def accept(f):
            return gt.evaluate(f) and not h.evaluate(f)
    f = None
    generator = COUNTERFACTUAL_GENERATORS.get((str(h), str(gt), side))
    if generator is not None:
        f = _constructive(generator, accept, u, seed, budget)
    if f is None:
        f = _rejection(accept, u, seed, budget)
    if f is None:
        raise BudgetExhausted(f"side {side} empty within {budget} attempts", side)
    return KFigure(f.objects, Provenance(seed=seed, label=side))


def sample_counterfactuals(h: Statement, gt: Statement, u: UniverseConfig, n: int,
                           seed: int, budget: int = DEFAULT_BUDGET) -> CounterfactualSet:
    """Up to ``n`` tagged figures per side of the symmetric difference."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    figures, empty = [], []
    for side in SIDES:
        side_seed = rng.getrandbits(63)
        found = 0
        for s in _seed_stream(side_seed):
            if found == n:
                break
            try:
                figures.append((side, sample_counterfactual(h, gt, u, side, s, budget)))
            except BudgetExhausted:
                break
            found += 1
        if found == 0:
            empty.append(side)
    return CounterfactualSet(h, gt, tuple(figures), tuple(empty))


# --------------------------------------------------------------------------
# meta-shape fitting


def contour_point(meta: MetaShape, t: float) -> tuple:
    """Point at arc-length fraction ``t`` of the contour with its outward normal."""
    cx, cy = meta.center
    t = t % 1.0
    if meta.kind is Shape.CIRCLE:
        a = 2.0 * math.pi * t
        return cx + meta.scale * math.cos(a), cy + meta.scale * math.sin(a), \
            math.cos(a), math.sin(a)
    verts = K.vertices(meta.kind.code, cx, cy, 2.0 * meta.scale)
    edges = list(zip(verts, verts[1:] + verts[:1]))
    lengths = [math.dist(a, b) for a, b in edges]
    d = t * sum(lengths)
    for (a, b), length in zip(edges, lengths):
        if d <= length:
            break
        d -= length
    u = d / length
    ex, ey = b[0] - a[0], b[1] - a[1]
    return a[0] + u * ex, a[1] + u * ey, ey / length, -ex / length


def perimeter(kind: Shape, scale: float) -> float:
    if kind is Shape.CIRCLE:
        return 2.0 * math.pi * scale
    if kind is Shape.SQUARE:
        return 4.0 * math.sqrt(2.0) * scale
    return 3.0 * math.sqrt(3.0) * scale


def _snap_up(v, step):
    return math.ceil(round(v / step, 9)) * step


def _snap_down(v, step):
    return math.floor(round(v / step, 9)) * step


def _refine(kind, xs, ys, cx, cy, s, step=FIT_STEP / 2, tol=1e-4):
    """Compass search on (cx, cy, scale) starting from a grid optimum."""
    best = K.contour_rms(kind, cx, cy, s, xs, ys)
    lo, hi = SCALE_RANGE
    while step >= tol:
        improved = False
        for dx, dy, ds in ((step, 0, 0), (-step, 0, 0), (0, step, 0), (0, -step, 0),
                           (0, 0, step), (0, 0, -step)):
            ns = min(max(s + ds, lo), hi)
            r = K.contour_rms(kind, cx + dx, cy + dy, ns, xs, ys)
            if r < best:
                best, cx, cy, s = r, cx + dx, cy + dy, ns
                improved = True
                break
        if not improved:
            step /= 2.0
    return cx, cy, s, best


def _fit_polygon(kind, xs, ys):
    n = len(xs)
    # a fit within FIT_THRESHOLD keeps every point within this of the contour
    reach = SCALE_RANGE[1] + FIT_THRESHOLD * math.sqrt(n)
    xlo = _snap_up(max(max(xs) - reach, 0.0), FIT_STEP)
    xhi = _snap_down(min(min(xs) + reach, 1.0), FIT_STEP)
    ylo = _snap_up(max(max(ys) - reach, 0.0), FIT_STEP)
    yhi = _snap_down(min(min(ys) + reach, 1.0), FIT_STEP)
    found = K.grid_search(kind, xs, ys, xlo, xhi, ylo, yhi,
                          SCALE_RANGE[0], SCALE_RANGE[1], FIT_STEP,
                          GRID_CUTOFF)
    if found is None:
        return None
    return _refine(kind, xs, ys, *found[:3])


def _fit_points(xs, ys, band=DEFAULT_BAND):
    candidates = []
    circle = fit_circle(xs, ys)
    if circle is not None:
        cx, cy, r, rms = circle
        if SCALE_RANGE[0] <= r <= SCALE_RANGE[1]:
            candidates.append((rms, 0, Shape.CIRCLE, cx, cy, r))
    for order, kind in ((1, Shape.SQUARE), (2, Shape.TRIANGLE)):
        found = _fit_polygon(kind.code, xs, ys)
        if found is not None:
            cx, cy, s, rms = found
            candidates.append((rms, order, kind, cx, cy, s))
    if not candidates:
        return None
    rms, _, kind, cx, cy, s = min(candidates, key=lambda c: (c[0], c[1]))
    if rms > FIT_THRESHOLD:
        return None
    return MetaShape(kind, (cx, cy), s, band), rms


def fit_meta_shape(f: KFigure, band: float = DEFAULT_BAND) -> Optional[tuple]:
    """Best-fitting big shape for the object centers of ``f``.

    Tries circle (algebraic fit), square and triangle (grid search over
    center and scale, then local refinement) and returns ``(MetaShape,
    rms)`` for the lowest RMS contour distance, ties broken circle < square
    < triangle. Returns ``None`` for fewer than six objects or when the best
    RMS exceeds ``FIT_THRESHOLD``.
    """
    if len(f.objects) < 6:
        return None
    xs = np.array([o.x for o in f.objects])
    ys = np.array([o.y for o in f.objects])
    return _fit_points(xs, ys, band)


def _mst_split(xs, ys):
    """Two clusters obtained by cutting the longest edge of the minimum spanning tree."""
    n = len(xs)
    pts = np.column_stack([xs, ys])
    dist = np.hypot(*(pts[:, None, :] - pts[None, :, :]).transpose(2, 0, 1))
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = dist[0].copy()
    parent = np.zeros(n, dtype=int)
    edges = []
    for _ in range(n - 1):
        cand = np.where(in_tree, np.inf, best)
        j = int(np.argmin(cand))
        edges.append((float(cand[j]), int(parent[j]), j))
        in_tree[j] = True
        closer = dist[j] < best
        best = np.where(closer, dist[j], best)
        parent = np.where(closer, j, parent)
    cut = max(range(len(edges)), key=lambda k: edges[k][0])
    adj = {i: [] for i in range(n)}
    for k, (_, a, b) in enumerate(edges):
        if k != cut:
            adj[a].append(b)
            adj[b].append(a)
    labels = np.ones(n, dtype=int)
    stack = [0]
    labels[0] = 0
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if labels[j]:
                labels[j] = 0
                stack.append(j)
    return labels


def _two_means(xs, ys, iterations=50):
    pts = np.column_stack([xs, ys])
    dist = np.hypot(*(pts[:, None, :] - pts[None, :, :]).transpose(2, 0, 1))
    i, j = np.unravel_index(int(np.argmax(dist)), dist.shape)
    centers = pts[[i, j]].copy()
    labels = None
    for _ in range(iterations):
        d = np.hypot(*(pts[:, None, :] - centers[None, :, :]).transpose(2, 0, 1))
        new = np.argmin(d, axis=1)
        if labels is not None and np.array_equal(new, labels):
            break
        labels = new
        for k in range(2):
            if np.any(labels == k):
                centers[k] = pts[labels == k].mean(axis=0)
    return labels


def meta_groups(f: KFigure, band: float = DEFAULT_BAND) -> Optional[list]:
    """Explain the figure by one or two fitted meta-shapes.

    Returns ``[(MetaShape, member indices), ...]`` or ``None``. A single fit
    over all objects is tried first; failing that, the objects are split in
    two (minimum-spanning-tree cut, then 2-means) and each half, of at least
    six objects, is fitted on its own.
    """
    n = len(f.objects)
    if n < 6:
        return None
    xs = np.array([o.x for o in f.objects])
    ys = np.array([o.y for o in f.objects])
    whole = _fit_points(xs, ys, band)
    if whole is not None:
        return [(whole[0], tuple(range(n)))]
    if n < 12:
        return None
    tried = set()
    for split in (_mst_split, _two_means):
        labels = split(xs, ys)
        key = tuple(labels) if labels[0] == 0 else tuple(1 - labels)
        if key in tried:
            continue
        tried.add(key)
        groups = []
        for k in (0, 1):
            idx = tuple(int(i) for i in np.flatnonzero(labels == k))
            if len(idx) < 6:
                break
            fit = _fit_points(xs[list(idx)], ys[list(idx)], band)
            if fit is None:
                break
            groups.append((fit[0], idx))
        if len(groups) == 2:
            return groups
    return None


def challenge1_gt(f: KFigure) -> bool:
    """Ground truth of the objects-and-shapes challenge.

    Every object sits in the contour band of a fitted big shape of kind X;
    none of a shape's members is itself of kind X, and member colors are
    restricted per kind (square: blue/red, triangle: yellow/red, circle:
    yellow/blue).
    """
    groups = meta_groups(f)
    if groups is None:
        return False
    for meta, idx in groups:
        allowed = ALLOWED_COLORS[meta.kind]
        for i in idx:
            o = f.objects[i]
            if o.shape is meta.kind or o.color not in allowed or not contains(meta, o):
                return False
    return True


NATIVE_EVALUATORS = MappingProxyType({"challenge1": challenge1_gt})


# --------------------------------------------------------------------------
# constructive generators


@dataclass(frozen=True)
class Challenge1Recipe:
    per_shape: tuple = (8, 16)
    size_range: tuple = (0.04, 0.08)
    band: float = DEFAULT_BAND
    scale_range: tuple = SCALE_RANGE
    p_two: float = 0.3
    two_scale_range: tuple = (0.15, 0.25)
    min_spacing: float = 0.11
    jitter: float = 0.15


CHALLENGE1_RECIPE = Challenge1Recipe()


def _draw_meta(rng, recipe, u, others, scale_range):
    reach = recipe.band + 0.5 * recipe.size_range[1] + u.crop_margin
    for _ in range(50):
        kind = rng.choice(list(Shape))
        scale = round(rng.uniform(*scale_range), 3)
        if perimeter(kind, scale) / recipe.min_spacing < recipe.per_shape[0]:
            continue
        xmin, xmax, ymin, ymax = K.extent(kind.code, 0.0, 0.0, 2.0 * scale)
        x_lo, x_hi = reach - xmin, 1.0 - reach - xmax
        y_lo, y_hi = reach - ymin, 1.0 - reach - ymax
        if x_hi < x_lo or y_hi < y_lo:
            continue
        cx = round(rng.uniform(x_lo, x_hi), 6)
        cy = round(rng.uniform(y_lo, y_hi), 6)
        if all(math.dist((cx, cy), m.center) > scale + m.scale + 2.0 * reach
               for m in others):
            return MetaShape(kind, (cx, cy), scale, recipe.band)
    return None


def _populate(meta, rng, recipe, u, placed):
    cap = int(perimeter(meta.kind, meta.scale) / recipe.min_spacing)
    hi = min(recipe.per_shape[1], cap)
    if hi < recipe.per_shape[0]:
        return None
    n = rng.randint(recipe.per_shape[0], hi)
    phase = rng.random()
    member_shapes = [s for s in Shape if s is not meta.kind and s in u.shapes]
    colors = [c for c in Color if c in ALLOWED_COLORS[meta.kind] and c in u.colors]
    if not member_shapes or not colors:
        return None
    out = []
    for i in range(n):
        shape = rng.choice(member_shapes)
        color = rng.choice(colors)
        for _ in range(30):
            t = (phase + i + rng.uniform(-recipe.jitter, recipe.jitter)) / n
            px, py, nx, ny = contour_point(meta, t)
            off = rng.uniform(-0.5 * recipe.band, 0.5 * recipe.band)
            size = round(rng.uniform(*recipe.size_range), 6)
            o = KObject(shape, color, size, round(px + off * nx, 6), round(py + off * ny, 6))
            if is_cropped(o, u.crop_margin):
                continue
            others = placed + out
            gap = K.min_clearance(
                shape.code, o.x, o.y, o.size,
                [q.shape.code for q in others], [q.x for q in others],
                [q.y for q in others], [q.size for q in others], len(others))
            if gap >= u.min_separation:
                out.append(o)
                break
        else:
            return None
    return out


def challenge1_positive(u: UniverseConfig, seed: int,
                        recipe: Challenge1Recipe = CHALLENGE1_RECIPE) -> Optional[KFigure]:
    """Small objects laid out on the contour bands of one or two big shapes."""
    rng = random.Random(seed)
    count = 2 if rng.random() < recipe.p_two else 1
    scale_range = recipe.two_scale_range if count == 2 else recipe.scale_range
    metas = []
    for _ in range(count):
        meta = _draw_meta(rng, recipe, u, metas, scale_range)
        if meta is None:
            break
        metas.append(meta)
    if not metas:
        return None
    objects = []
    for meta in metas:
        members = _populate(meta, rng, recipe, u, objects)
        if members is None:
            return None
        objects.extend(members)
    return KFigure(tuple(objects))


def _pairs_figure(u, rng, color_relations, shape_ok=None):
    """Two same-shape pairs with the given color relations plus random extras."""
    lo, hi = u.n_objects
    if hi < 4 or len(u.colors) < 2:
        return None
    n = rng.randint(max(4, lo), hi)
    for _ in range(20):
        s1, s2 = rng.choice(u.shapes), rng.choice(u.shapes)
        if shape_ok is None or shape_ok(s1, s2):
            break
    else:
        return None
    attrs = []
    for shape, rel in ((s1, color_relations[0]), (s2, color_relations[1])):
        c1 = rng.choice(u.colors)
        c2 = c1 if rel == "same" else rng.choice([c for c in u.colors if c is not c1])
        attrs += [(shape, c1), (shape, c2)]
    attrs += [(rng.choice(u.shapes), rng.choice(u.colors)) for _ in range(n - 4)]
    rng.shuffle(attrs)
    return place_objects(u, attrs, rng.getrandbits(63))


def two_pairs_positive(u, seed):
    return _pairs_figure(u, random.Random(seed), ("same", "different"))


def h1_not_gt(u, seed):
    rng = random.Random(seed)
    rel = rng.choice(("same", "different"))
    return _pairs_figure(u, rng, (rel, rel))


def gt_not_h2(u, seed):
    # the same-color pair as circles with the different-color pair as
    # triangles is exactly what the narrower hypothesis admits
    return _pairs_figure(u, random.Random(seed), ("same", "different"),
                         lambda s1, s2: (s1, s2) != (Shape.CIRCLE, Shape.TRIANGLE))


# --------------------------------------------------------------------------
# built-in patterns

TWO_PAIRS_TEXT = "two_disjoint_pairs(shape_equal; same; different)"
H1_TEXT = (
    "two_disjoint_pairs(shape_equal; same; same)"
    " or two_disjoint_pairs(shape_equal; same; different)"
    " or two_disjoint_pairs(shape_equal; different; different)"
)


def _same_color_pair(shape):
    return "(" + " or ".join(
        f"count({{shape={shape}, color={c.value}}}) = 2" for c in Color) + ")"


H2_TEXT = (
    "count({shape=triangle}) = 2 and count({shape=circle}) = 2"
    f" and not {_same_color_pair('triangle')} and {_same_color_pair('circle')}"
)

TWO_PAIRS = parse(TWO_PAIRS_TEXT)
H1 = parse(H1_TEXT)
H2 = parse(H2_TEXT)
CHALLENGE1 = NativeStatement("challenge1")

FOUR_OBJECT_UNIVERSE = UniverseConfig(n_objects=(4, 4), size_range=(0.1, 0.3))
CHALLENGE1_UNIVERSE = UniverseConfig(n_objects=(8, 32), size_range=(0.04, 0.08))
CHALLENGE2_UNIVERSE = UniverseConfig(
    shapes=(Shape.CIRCLE,), n_objects=(9, 9), size_range=(0.12, 0.24), grid=(3, 3))
CHALLENGE3_UNIVERSE = UniverseConfig(
    shapes=(Shape.CIRCLE,), colors=(Color.BLUE, Color.YELLOW), n_objects=(2, 12),
    size_range=(0.06, 0.16), uniform_size=True)

POSITIVE_GENERATORS = MappingProxyType({
    TWO_PAIRS_TEXT: two_pairs_positive,
    str(CHALLENGE1): challenge1_positive,
})

COUNTERFACTUAL_GENERATORS = MappingProxyType({
    (str(H1), str(TWO_PAIRS), "h_not_gt"): h1_not_gt,
    (str(H2), str(TWO_PAIRS), "gt_not_h"): gt_not_h2,
})

_BUILTINS = (
    PatternSpec(
        "two-pairs", FOUR_OBJECT_UNIVERSE, TWO_PAIRS,
        "the Kandinsky Figure has two pairs of objects with the same shape, in one "
        "pair the objects have the same color, in the other pair different colors, "
        "two pairs are always disjunct, i.e. they don't share a object",
    ),
    PatternSpec(
        "h1", FOUR_OBJECT_UNIVERSE, H1,
        "the Kandinsky Figure has two pairs of objects with the same shape",
    ),
    PatternSpec(
        "h2", FOUR_OBJECT_UNIVERSE, H2,
        "the Kandinsky Figure consist of two triangles with different color and "
        "two circles of same color",
    ),
    PatternSpec(
        "challenge-1", CHALLENGE1_UNIVERSE, CHALLENGE1,
        "in a Kandinsky Figure small objects are arranged on big shapes same as "
        "object shapes, in the big shape of type X, no small object of type X "
        "exists. Big square shapes only contain blue and red objects, big triangle "
        "shapes only contain yellow and red objects and big circle shape contain "
        "only yellow and blue objects",
    ),
    PatternSpec(
        "challenge-2-universe", CHALLENGE2_UNIVERSE, None,
        "universe only: nine circles on a 3x3 grid, free colors; the ground truth "
        "is supplied by the user",
    ),
    PatternSpec(
        "challenge-3-universe", CHALLENGE3_UNIVERSE, None,
        "universe only: equally sized blue and yellow circles; the ground truth is "
        "supplied by the user",
    ),
)

BUILTIN_PATTERNS = MappingProxyType({p.name: p for p in _BUILTINS})


def builtin_patterns() -> list:
    return list(_BUILTINS)


def get_pattern(name: str) -> PatternSpec:
    try:
        return BUILTIN_PATTERNS[name]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}; known: {', '.join(BUILTIN_PATTERNS)}") \
            from None
