"""Objects, figures, universes, geometric checks and the figure sampler.

Geometry conventions: the canvas is the unit square with the origin at the
bottom left. ``size`` is the diameter of the circumscribed circle for every
shape, so a square has diagonal ``size`` and a triangle (equilateral, apex
up, never rotated) has circumradius ``size / 2``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels as K
from .errors import PlacementBudgetExhausted

MIN_RECOGNIZABLE = 0.04
MAX_SIZE = 0.35
DEFAULT_MARGIN = 0.005
DEFAULT_SEPARATION = 0.005
MIN_COLOR_DISTANCE = 120.0

OBJECT_ATTEMPTS = 1000
FIGURE_RETRIES = 100
MAX_AREA_FRACTION = 0.7

# canonical key order of a serialized object
OBJECT_FIELDS = ("shape", "color", "size", "x", "y")


class Shape(str, Enum):
    CIRCLE = "circle"
    SQUARE = "square"
    TRIANGLE = "triangle"

    @property
    def code(self) -> int:
        return _SHAPE_CODES[self]

    def area(self, size: float) -> float:
        r = 0.5 * size
        if self is Shape.CIRCLE:
            return math.pi * r * r
        if self is Shape.SQUARE:
            return 2.0 * r * r
        return 0.75 * math.sqrt(3.0) * r * r


_SHAPE_CODES = {Shape.CIRCLE: K.CIRCLE, Shape.SQUARE: K.SQUARE, Shape.TRIANGLE: K.TRIANGLE}


class Color(str, Enum):
    RED = "red"
    BLUE = "blue"
    YELLOW = "yellow"


class Palette:
    """Maps each color to an RGB triple, keeping triples pairwise distinguishable."""

    def __init__(self, rgb: Optional[dict] = None):
        self._rgb = {
            Color.RED: (255, 0, 0),
            Color.BLUE: (0, 0, 255),
            Color.YELLOW: (255, 220, 0),
        }
        for color, triple in (rgb or {}).items():
            self._rgb[Color(color)] = tuple(int(c) for c in triple)
        self._check()

    def _check(self):
        items = list(self._rgb.items())
        for i, (ca, a) in enumerate(items):
            if len(a) != 3 or not all(0 <= c <= 255 for c in a):
                raise ValueError(f"{ca.value}: RGB channels must be in 0..255")
            for cb, b in items[i + 1:]:
                if math.dist(a, b) < MIN_COLOR_DISTANCE:
                    raise ValueError(
                        f"{ca.value} and {cb.value} are too close in RGB space"
                    )

    def __getitem__(self, color) -> tuple:
        return self._rgb[Color(color)]

    def hex(self, color) -> str:
        return "#{:02x}{:02x}{:02x}".format(*self[color])


DEFAULT_PALETTE = Palette()


@dataclass(frozen=True)
class KObject:
    shape: Shape
    color: Color
    size: float
    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "shape", Shape(self.shape))
        object.__setattr__(self, "color", Color(self.color))

    @property
    def position(self) -> tuple:
        return (self.x, self.y)

    def extent(self) -> tuple:
        """Bounding box ``(xmin, xmax, ymin, ymax)``."""
        return K.extent(self.shape.code, self.x, self.y, self.size)

    def vertices(self) -> list:
        return K.vertices(self.shape.code, self.x, self.y, self.size)


@dataclass(frozen=True)
class Provenance:
    seed: Optional[int] = None
    pattern: Optional[str] = None
    label: Optional[str] = None


@dataclass(frozen=True)
class KFigure:
    objects: tuple = ()
    provenance: Optional[Provenance] = None

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)


@dataclass(frozen=True)
class UniverseConfig:
    """Value domains and placement constraints of a set of figures.

    ``grid`` is ``None`` for free placement or ``(rows, cols)`` for placement
    at cell centers. ``uniform_size`` forces every object of a figure to share
    one size.
    """

    shapes: tuple = (Shape.CIRCLE, Shape.SQUARE, Shape.TRIANGLE)
    colors: tuple = (Color.RED, Color.BLUE, Color.YELLOW)
    n_objects: tuple = (1, 6)
    size_range: tuple = (MIN_RECOGNIZABLE, MAX_SIZE)
    grid: Optional[tuple] = None
    crop_margin: float = DEFAULT_MARGIN
    min_separation: float = DEFAULT_SEPARATION
    uniform_size: bool = False

    def __post_init__(self):
        shapes = {Shape(s) for s in self.shapes}
        colors = {Color(c) for c in self.colors}
        if not shapes or not colors:
            raise ValueError("a universe needs at least one shape and one color")
        object.__setattr__(self, "shapes", tuple(s for s in Shape if s in shapes))
        object.__setattr__(self, "colors", tuple(c for c in Color if c in colors))
        lo_n, hi_n = (int(v) for v in self.n_objects)
        object.__setattr__(self, "n_objects", (lo_n, hi_n))
        lo_s, hi_s = (float(v) for v in self.size_range)
        object.__setattr__(self, "size_range", (lo_s, hi_s))
        if lo_n < 1 or hi_n < lo_n:
            raise ValueError(f"invalid object count range {self.n_objects}")
        if not MIN_RECOGNIZABLE <= lo_s <= hi_s <= MAX_SIZE:
            raise ValueError(
                f"size range {self.size_range} not within "
                f"[{MIN_RECOGNIZABLE}, {MAX_SIZE}]"
            )
        if not 0.0 <= self.crop_margin < 0.25:
            raise ValueError("crop margin must be in [0, 0.25)")
        if self.min_separation < 0.0:
            raise ValueError("min separation must be >= 0")
        if self.grid is not None:
            rows, cols = (int(v) for v in self.grid)
            if rows < 1 or cols < 1:
                raise ValueError("grid needs positive rows and cols")
            if hi_n > rows * cols:
                raise ValueError(f"{hi_n} objects do not fit a {rows}x{cols} grid")
            object.__setattr__(self, "grid", (rows, cols))

    def cell_centers(self) -> list:
        rows, cols = self.grid
        return [
            (round((c + 0.5) / cols, 6), round((r + 0.5) / rows, 6))
            for r in range(rows)
            for c in range(cols)
        ]


@dataclass(frozen=True)
class Violation:
    rule: str
    indices: tuple
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set:
        return {v.rule for v in self.violations}

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class MetaShape:
    """A virtual big shape whose contour band hosts small objects.

    ``scale`` is the circumscribed-circle radius of the big shape and
    ``band`` the half-width of the band around its contour.
    """

    kind: Shape
    center: tuple
    scale: float
    band: float = 0.04

    def __post_init__(self):
        object.__setattr__(self, "kind", Shape(self.kind))
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))
        if not 0.15 - 1e-9 <= self.scale <= 0.45 + 1e-9:
            raise ValueError(f"meta-shape scale {self.scale} outside [0.15, 0.45]")
        if not 0.0 < self.band < self.scale / 2.0:
            raise ValueError(f"meta-shape band {self.band} outside (0, scale/2)")

    def contour_distance(self, x: float, y: float) -> float:
        return K.contour_distance(self.kind.code, self.center[0], self.center[1],
                                  self.scale, x, y)

    def band_extent(self) -> tuple:
        """Bounding box of the band region."""
        xmin, xmax, ymin, ymax = K.extent(self.kind.code, self.center[0],
                                          self.center[1], 2.0 * self.scale)
        b = self.band
        return xmin - b, xmax + b, ymin - b, ymax + b


def clearance(a: KObject, b: KObject) -> float:
    """Signed gap between two objects; negative when they interpenetrate."""
    return K.clearance(a.shape.code, a.x, a.y, a.size, b.shape.code, b.x, b.y, b.size)


def objects_overlap(a: KObject, b: KObject) -> bool:
    """True iff the closed regions of ``a`` and ``b`` intersect."""
    return clearance(a, b) <= 0.0


def is_cropped(o: KObject, margin: float = DEFAULT_MARGIN) -> bool:
    xmin, xmax, ymin, ymax = o.extent()
    lo, hi = margin, 1.0 - margin
    return xmin < lo or ymin < lo or xmax > hi or ymax > hi


def contains(region: MetaShape, o: KObject) -> bool:
    """True iff the center of ``o`` lies in the contour band of ``region``."""
    return region.contour_distance(o.x, o.y) <= region.band


def geometric_violations(objects: Sequence[KObject], margin: float = DEFAULT_MARGIN,
                         min_separation: float = DEFAULT_SEPARATION) -> list:
    """Cropping, overlap and separation violations, independent of any universe."""
    out = []
    for i, o in enumerate(objects):
        if o.size <= 0.0:
            out.append(Violation("size_range", (i,), f"non-positive size {o.size}"))
            continue
        if is_cropped(o, margin):
            out.append(Violation("cropped", (i,), f"extent leaves [{margin}, {1 - margin}]²"))
    for i in range(len(objects)):
        for j in range(i + 1, len(objects)):
            if objects[i].size <= 0.0 or objects[j].size <= 0.0:
                continue
            c = clearance(objects[i], objects[j])
            if c <= 0.0:
                out.append(Violation("overlap", (i, j), f"clearance {c:.6f}"))
            elif c < min_separation:
                out.append(Violation(
                    "separation", (i, j), f"gap {c:.6f} below {min_separation}"))
    return out


def validate_figure(f: KFigure, u: UniverseConfig) -> ValidationReport:
    """List every well-formedness rule ``f`` breaks inside universe ``u``."""
    objs = f.objects
    out = []
    lo_n, hi_n = u.n_objects
    if not lo_n <= len(objs) <= hi_n:
        out.append(Violation("count_range", (), f"{len(objs)} objects, need {lo_n}..{hi_n}"))
    lo_s, hi_s = u.size_range
    for i, o in enumerate(objs):
        if o.shape not in u.shapes:
            out.append(Violation("shape_domain", (i,), f"{o.shape.value} not allowed"))
        if o.color not in u.colors:
            out.append(Violation("color_domain", (i,), f"{o.color.value} not allowed"))
        if not lo_s - 1e-9 <= o.size <= hi_s + 1e-9:
            out.append(Violation("size_range", (i,), f"size {o.size} outside [{lo_s}, {hi_s}]"))
    if u.uniform_size and len({o.size for o in objs}) > 1:
        out.append(Violation("uniform_size", tuple(range(len(objs))), "sizes differ"))
    if u.grid is not None:
        centers = u.cell_centers()
        for i, o in enumerate(objs):
            if not any(abs(o.x - cx) <= 1e-6 and abs(o.y - cy) <= 1e-6 for cx, cy in centers):
                out.append(Violation("grid_position", (i,), f"({o.x}, {o.y}) is not a cell center"))
    out.extend(geometric_violations(objs, u.crop_margin, u.min_separation))
    return ValidationReport(tuple(out))


def check_feasible(u: UniverseConfig) -> None:
    """Reject universes whose largest objects cannot plausibly fit the canvas."""
    hi = u.size_range[1]
    area = u.n_objects[1] * max(s.area(hi) for s in u.shapes)
    if area > MAX_AREA_FRACTION:
        raise PlacementBudgetExhausted(
            f"universe infeasible: {u.n_objects[1]} objects of size {hi} cover "
            f"{area:.3f} > {MAX_AREA_FRACTION} of the canvas"
        )


def _draw_size(u, rng):
    lo, hi = u.size_range
    return round(rng.uniform(lo, hi), 6)


def _fits(shape, size, x, y, u, codes, xs, ys, sizes):
    o = KObject(shape, Color.RED, size, x, y)
    if is_cropped(o, u.crop_margin):
        return False
    return K.min_clearance(shape.code, x, y, size, codes, xs, ys, sizes, len(codes)) \
        >= u.min_separation


def _place_once(u, attributes, rng, shared_size):
    codes, xs, ys, sizes = [], [], [], []
    cells = u.cell_centers() if u.grid is not None else None
    if cells is not None:
        rng.shuffle(cells)
    for k, (shape, color) in enumerate(attributes):
        shape = Shape(shape)
        for _ in range(OBJECT_ATTEMPTS):
            size = shared_size if shared_size is not None else _draw_size(u, rng)
            if cells is not None:
                x, y = cells[k]
            else:
                xmin, xmax, ymin, ymax = K.extent(shape.code, 0.0, 0.0, size)
                x_lo, x_hi = u.crop_margin - xmin, 1.0 - u.crop_margin - xmax
                y_lo, y_hi = u.crop_margin - ymin, 1.0 - u.crop_margin - ymax
                if x_hi < x_lo or y_hi < y_lo:
                    continue
                x = round(rng.uniform(x_lo, x_hi), 6)
                y = round(rng.uniform(y_lo, y_hi), 6)
            if _fits(shape, size, x, y, u, codes, xs, ys, sizes):
                break
        else:
            return None
        codes.append(shape.code)
        xs.append(x)
        ys.append(y)
        sizes.append(size)
    return [
        KObject(Shape(s), Color(c), sizes[i], xs[i], ys[i])
        for i, (s, c) in enumerate(attributes)
    ]


def _place(u, attributes, rng):
    if u.grid is not None and len(attributes) > len(u.cell_centers()):
        raise PlacementBudgetExhausted("more objects than grid cells")
    for _ in range(FIGURE_RETRIES):
        shared = _draw_size(u, rng) if u.uniform_size else None
        objs = _place_once(u, attributes, rng, shared)
        if objs is not None:
            return objs
    raise PlacementBudgetExhausted(
        f"could not place {len(attributes)} objects after {FIGURE_RETRIES} figure retries"
    )


def place_objects(u: UniverseConfig, attributes: Iterable, seed: int,
                  provenance: Optional[Provenance] = None) -> KFigure:
    """Place objects with fixed ``(shape, color)`` attributes by rejection sampling."""
    check_feasible(u)
    rng = random.Random(seed)
    return KFigure(tuple(_place(u, list(attributes), rng)), provenance)


def sample_figure(u: UniverseConfig, seed: int,
                  provenance: Optional[Provenance] = None) -> KFigure:
    """Draw a well-formed figure from ``u``; a pure function of ``(u, seed)``.

    Raises :class:`PlacementBudgetExhausted` when the universe is infeasible
    or rejection placement runs out of attempts.
    """
    check_feasible(u)
    rng = random.Random(seed)
    n = rng.randint(*u.n_objects)
    attributes = [(rng.choice(u.shapes), rng.choice(u.colors)) for _ in range(n)]
    return KFigure(tuple(_place(u, attributes, rng)), provenance)


def fit_circle(xs: Sequence[float], ys: Sequence[float]) -> Optional[tuple]:
    """Algebraic (Kasa) least-squares circle fit.

    Returns ``(cx, cy, radius, rms)`` where ``rms`` is the root-mean-square
    radial residual, or ``None`` for degenerate input.
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.size < 3:
        return None
    a = np.column_stack([x, y, np.ones_like(x)])
    b = -(x * x + y * y)
    (d, e, f), _, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    if rank < 3:
        return None
    cx, cy = -0.5 * d, -0.5 * e
    r2 = cx * cx + cy * cy - f
    if not np.isfinite(r2) or r2 <= 0.0:
        return None
    r = math.sqrt(r2)
    resid = np.hypot(x - cx, y - cy) - r
    return float(cx), float(cy), r, float(math.sqrt(np.mean(resid * resid)))
