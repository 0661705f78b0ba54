"""Figure JSON, SVG rendering and seeded dataset trees with manifests."""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .core import (
    DEFAULT_PALETTE,
    OBJECT_FIELDS,
    Color,
    KFigure,
    KObject,
    Palette,
    Provenance,
    Shape,
    UniverseConfig,
    ValidationReport,
    Violation,
    validate_figure,
)
from .dsl import Statement
from .errors import (
    BudgetExhausted,
    DatasetIOError,
    KandinskyError,
    ManifestMissing,
    SchemaError,
    UniverseMismatch,
)
from .patterns import (
    SIDES,
    PatternSpec,
    membership,
    sample_counterfactual,
    sample_negative,
    sample_positive,
    statement_from_text,
)

SPLITS = ("true", "false", "counterfactual")
SVG_NS = "http://www.w3.org/2000/svg"


def format_number(v: float) -> str:
    """Locale-independent decimal with at most six fractional digits."""
    text = f"{round(float(v), 6):.6f}".rstrip("0")
    if text.endswith("."):
        text += "0"
    return "0.0" if text == "-0.0" else text


# --------------------------------------------------------------------------
# figure JSON


def _object_json(o: KObject) -> str:
    values = {
        "shape": json.dumps(o.shape.value),
        "color": json.dumps(o.color.value),
        "size": format_number(o.size),
        "x": format_number(o.x),
        "y": format_number(o.y),
    }
    return "{" + ",".join(f'"{k}":{values[k]}' for k in OBJECT_FIELDS) + "}"


def save_figure(f: KFigure) -> str:
    """Canonical JSON text of a figure (fixed key order, six-decimal numbers)."""
    text = '{"objects":[' + ",".join(_object_json(o) for o in f.objects) + "]"
    if f.provenance is not None:
        prov = {k: getattr(f.provenance, k) for k in ("seed", "pattern", "label")}
        text += ',"provenance":' + json.dumps(prov, separators=(",", ":"))
    return text + "}\n"


def _number(value, path, lo, hi, lo_open=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(path, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value > hi or value < lo or (lo_open and value == lo):
        bracket = "(" if lo_open else "["
        raise SchemaError(path, f"{value} outside {bracket}{lo}, {hi}]")
    return value


def figure_from_data(data) -> KFigure:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected a JSON object")
    extra = set(data) - {"objects", "provenance"}
    if extra:
        raise SchemaError("$", f"unknown field(s) {sorted(extra)}")
    if "objects" not in data:
        raise SchemaError("$.objects", "missing field")
    if not isinstance(data["objects"], list):
        raise SchemaError("$.objects", "expected a list")
    objs = []
    shapes = {s.value for s in Shape}
    colors = {c.value for c in Color}
    for i, item in enumerate(data["objects"]):
        path = f"objects[{i}]"
        if not isinstance(item, dict):
            raise SchemaError(path, "expected a JSON object")
        for key in OBJECT_FIELDS:
            if key not in item:
                raise SchemaError(f"{path}.{key}", "missing field")
        extra = set(item) - set(OBJECT_FIELDS)
        if extra:
            raise SchemaError(path, f"unknown field(s) {sorted(extra)}")
        if item["shape"] not in shapes:
            raise SchemaError(f"{path}.shape", f"unknown shape {item['shape']!r}")
        if item["color"] not in colors:
            raise SchemaError(f"{path}.color", f"unknown color {item['color']!r}")
        objs.append(KObject(
            Shape(item["shape"]),
            Color(item["color"]),
            _number(item["size"], f"{path}.size", 0.0, 1.0, lo_open=True),
            _number(item["x"], f"{path}.x", 0.0, 1.0),
            _number(item["y"], f"{path}.y", 0.0, 1.0),
        ))
    prov = data.get("provenance")
    if prov is not None:
        if not isinstance(prov, dict) or set(prov) - {"seed", "pattern", "label"}:
            raise SchemaError("$.provenance", "expected {seed, pattern, label}")
        prov = Provenance(prov.get("seed"), prov.get("pattern"), prov.get("label"))
    return KFigure(tuple(objs), prov)


def load_figure(text: str) -> KFigure:
    """Parse figure JSON; raises :class:`SchemaError` with a field path."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    return figure_from_data(data)


# --------------------------------------------------------------------------
# universes and pattern specs


def universe_to_dict(u: UniverseConfig) -> dict:
    return {
        "shapes": [s.value for s in u.shapes],
        "colors": [c.value for c in u.colors],
        "n_objects": list(u.n_objects),
        "size_range": list(u.size_range),
        "placement": "free" if u.grid is None else {"grid": list(u.grid)},
        "crop_margin": u.crop_margin,
        "min_separation": u.min_separation,
        "uniform_size": u.uniform_size,
    }


def universe_from_dict(data: dict) -> UniverseConfig:
    if not isinstance(data, dict):
        raise SchemaError("$", "universe must be a JSON object")
    placement = data.get("placement", "free")
    if placement == "free":
        grid = None
    elif isinstance(placement, dict) and "grid" in placement:
        grid = tuple(placement["grid"])
    else:
        raise SchemaError("$.placement", "expected \"free\" or {\"grid\": [rows, cols]}")
    defaults = UniverseConfig()
    try:
        return UniverseConfig(
            shapes=tuple(data.get("shapes", defaults.shapes)),
            colors=tuple(data.get("colors", defaults.colors)),
            n_objects=tuple(data.get("n_objects", defaults.n_objects)),
            size_range=tuple(data.get("size_range", defaults.size_range)),
            grid=grid,
            crop_margin=data.get("crop_margin", defaults.crop_margin),
            min_separation=data.get("min_separation", defaults.min_separation),
            uniform_size=bool(data.get("uniform_size", False)),
        )
    except (ValueError, TypeError) as exc:
        raise SchemaError("$", str(exc)) from None


def pattern_to_dict(p: PatternSpec) -> dict:
    return {
        "name": p.name,
        "universe": universe_to_dict(p.universe),
        "ground_truth": None if p.ground_truth is None else str(p.ground_truth),
        "description": p.description,
    }


def pattern_from_dict(data: dict) -> PatternSpec:
    gt = data.get("ground_truth")
    return PatternSpec(
        data["name"],
        universe_from_dict(data["universe"]),
        None if gt is None else statement_from_text(gt),
        data.get("description", ""),
    )


# --------------------------------------------------------------------------
# SVG


@dataclass(frozen=True)
class RenderConfig:
    resolution: int = 512
    background: tuple = (255, 255, 255)
    stroke: Optional[str] = None  # None or "thin"
    palette: Palette = field(default=DEFAULT_PALETTE, compare=False)

    def __post_init__(self):
        if int(self.resolution) < 64:
            raise ValueError("resolution must be at least 64 pixels")
        if self.stroke not in (None, "thin"):
            raise ValueError("stroke must be None or 'thin'")


def _px(v: float) -> str:
    return f"{v:.6f}"


def render_svg(f: KFigure, cfg: RenderConfig = RenderConfig()) -> str:
    """SVG 1.1 document with one element per object, in storage order."""
    r = int(cfg.resolution)
    bg = "#{:02x}{:02x}{:02x}".format(*cfg.background)
    stroke = ' stroke="#000000" stroke-width="1"' if cfg.stroke == "thin" else ""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="{SVG_NS}" version="1.1" width="{r}" height="{r}" viewBox="0 0 {r} {r}">',
        f'<rect id="background" x="0" y="0" width="{r}" height="{r}" fill="{bg}"/>',
        '<g id="objects">',
    ]
    for o in f.objects:
        fill = cfg.palette.hex(o.color)
        if o.shape is Shape.CIRCLE:
            lines.append(
                f'<circle cx="{_px(o.x * r)}" cy="{_px((1.0 - o.y) * r)}" '
                f'r="{_px(0.5 * o.size * r)}" fill="{fill}"{stroke}/>'
            )
        elif o.shape is Shape.SQUARE:
            xmin, xmax, ymin, ymax = o.extent()
            lines.append(
                f'<rect x="{_px(xmin * r)}" y="{_px((1.0 - ymax) * r)}" '
                f'width="{_px((xmax - xmin) * r)}" height="{_px((ymax - ymin) * r)}" '
                f'fill="{fill}"{stroke}/>'
            )
        else:
            points = " ".join(f"{_px(vx * r)},{_px((1.0 - vy) * r)}" for vx, vy in o.vertices())
            lines.append(f'<polygon points="{points}" fill="{fill}"{stroke}/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# datasets


@dataclass
class DatasetManifest:
    pattern: str
    master_seed: int
    version: str
    resolution: int
    pattern_spec: dict
    cf_hypothesis: Optional[str]
    counts: dict
    splits: dict
    digest: str

    def to_json(self) -> str:
        data = {
            "pattern": self.pattern,
            "master_seed": self.master_seed,
            "version": self.version,
            "resolution": self.resolution,
            "pattern_spec": self.pattern_spec,
            "cf_hypothesis": self.cf_hypothesis,
            "counts": self.counts,
            "splits": self.splits,
            "digest": self.digest,
        }
        return json.dumps(data, indent=1, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "DatasetManifest":
        data = json.loads(text)
        return cls(**{k: data[k] for k in (
            "pattern", "master_seed", "version", "resolution", "pattern_spec",
            "cf_hypothesis", "counts", "splits", "digest")})


def derive_seed(master_seed: int, split: str, index: int) -> int:
    """63-bit per-figure seed from (master seed, split, index)."""
    digest = hashlib.sha256(f"{master_seed}:{split}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dataset_digest(root: Path, splits: dict) -> str:
    h = hashlib.sha256()
    for split in SPLITS:
        for rec in splits.get(split, []):
            h.update(rec["file"].encode() + b"\n")
            h.update((root / rec["file"]).read_bytes())
    return h.hexdigest()


def emit_dataset(p: PatternSpec, counts: tuple, cf_hypothesis: Optional[Statement],
                 master_seed: int, out_dir, resolution: int = 512,
                 budget: int = 2000) -> DatasetManifest:
    """Write a seeded ``true`` / ``false`` / ``counterfactual`` dataset tree.

    Every figure is stored as ``<split>/NNNNNN.json`` plus a rendered
    ``.svg``; ``manifest.json`` is written last. Identical arguments produce
    byte-identical trees.
    """
    n_true, n_false, n_cf = (int(c) for c in counts)
    if min(n_true, n_false, n_cf) < 0:
        raise ValueError("counts must be non-negative")
    if n_cf > 0 and cf_hypothesis is None:
        raise ValueError("counterfactual figures require a hypothesis")
    if p.ground_truth is None:
        raise ValueError(f"pattern {p.name!r} has no ground truth")
    root = Path(out_dir)
    cfg = RenderConfig(resolution=resolution)
    try:
        root.mkdir(parents=True, exist_ok=True)
        (root / "manifest.json").unlink(missing_ok=True)
    except OSError as exc:
        raise DatasetIOError(f"cannot prepare {root}: {exc}") from exc

    splits = {s: [] for s in SPLITS}
    dead_sides = set()

    def counterfactual(seed, index):
        order = SIDES if index % 2 else SIDES[::-1]
        for side in order:
            if side in dead_sides:
                continue
            try:
                return side, sample_counterfactual(
                    cf_hypothesis, p.ground_truth, p.universe, side, seed, budget)
            except BudgetExhausted:
                dead_sides.add(side)
        raise BudgetExhausted(
            "split counterfactual: both sides of the symmetric difference are empty "
            f"within budget {budget}", "counterfactual")

    for split, n in zip(SPLITS, (n_true, n_false, n_cf)):
        for index in range(1, n + 1):
            seed = derive_seed(master_seed, split, index)
            tag = None
            try:
                if split == "true":
                    fig = sample_positive(p, seed, budget)
                elif split == "false":
                    fig = sample_negative(p, seed, budget)
                else:
                    tag, fig = counterfactual(seed, index)
            except BudgetExhausted as exc:
                raise BudgetExhausted(f"split {split}: {exc}", split) from exc
            fig = KFigure(fig.objects, Provenance(seed=seed, pattern=p.name,
                                                  label=tag or split))
            stem = f"{split}/{index:06d}"
            try:
                _atomic_write(root / f"{stem}.json", save_figure(fig).encode())
                _atomic_write(root / f"{stem}.svg", render_svg(fig, cfg).encode())
            except OSError as exc:
                raise DatasetIOError(f"cannot write {stem}: {exc}") from exc
            splits[split].append({"file": f"{stem}.json", "svg": f"{stem}.svg",
                                  "seed": seed, "label": split, "tag": tag})

    manifest = DatasetManifest(
        pattern=p.name,
        master_seed=master_seed,
        version=__version__,
        resolution=resolution,
        pattern_spec=pattern_to_dict(p),
        cf_hypothesis=None if cf_hypothesis is None else str(cf_hypothesis),
        counts={s: len(splits[s]) for s in SPLITS},
        splits=splits,
        digest=dataset_digest(root, splits),
    )
    try:
        _atomic_write(root / "manifest.json", manifest.to_json().encode())
    except OSError as exc:
        raise DatasetIOError(f"cannot write manifest: {exc}") from exc
    return manifest


def load_manifest(out_dir) -> DatasetManifest:
    path = Path(out_dir) / "manifest.json"
    if not path.is_file():
        raise ManifestMissing(f"no manifest.json in {out_dir}")
    try:
        return DatasetManifest.from_json(path.read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise DatasetIOError(f"unreadable manifest {path}: {exc}") from exc


def _check_record(root, rec, split, p, hypothesis, cfg, out):
    name = rec["file"]
    path = root / name
    if not path.is_file():
        out.append(Violation("missing_file", (), name))
        return
    try:
        fig = load_figure(path.read_text(encoding="utf-8"))
    except SchemaError as exc:
        out.append(Violation("schema", (), f"{name}: {exc}"))
        return
    report = validate_figure(fig, p.universe)
    if not report.ok:
        rules = ", ".join(sorted(report.rules()))
        out.append(Violation("figure_invalid", (), f"{name}: {rules}"))
    try:
        if split == "counterfactual":
            in_h, in_gt = hypothesis.evaluate(fig), p.ground_truth.evaluate(fig)
            want = (True, False) if rec.get("tag") == "h_not_gt" else (False, True)
            if (in_h, in_gt) != want:
                out.append(Violation("label", (), f"{name}: tag {rec.get('tag')} but "
                                     f"h={in_h}, gt={in_gt}"))
        elif membership(p, fig) != (split == "true"):
            out.append(Violation("label", (), f"{name}: labelled {split} but "
                                 f"ground truth is {not split == 'true'}"))
    except UniverseMismatch as exc:
        out.append(Violation("universe", (), f"{name}: {exc}"))
    svg_name = rec.get("svg")
    if svg_name:
        svg_path = root / svg_name
        if not svg_path.is_file():
            out.append(Violation("missing_file", (), svg_name))
        elif svg_path.read_text(encoding="utf-8") != render_svg(fig, cfg):
            out.append(Violation("svg_mismatch", (), svg_name))


def validate_dataset(out_dir) -> ValidationReport:
    """Re-check every figure of a dataset against its manifest.

    Reports missing files, digest mismatches, invalid figures, labels that
    disagree with the ground truth and stale SVG renderings.
    """
    root = Path(out_dir)
    m = load_manifest(root)
    out = []
    try:
        p = pattern_from_dict(m.pattern_spec)
        hypothesis = statement_from_text(m.cf_hypothesis) if m.cf_hypothesis else None
    except (KandinskyError, KeyError) as exc:
        raise DatasetIOError(f"manifest pattern is unusable: {exc}") from exc
    cfg = RenderConfig(resolution=m.resolution)
    for split in SPLITS:
        records = m.splits.get(split, [])
        if m.counts.get(split, 0) != len(records):
            out.append(Violation("count_mismatch", (), f"{split}: manifest says "
                                 f"{m.counts.get(split)}, lists {len(records)}"))
        if split == "counterfactual" and records and hypothesis is None:
            out.append(Violation("schema", (), "counterfactual records without hypothesis"))
            continue
        for rec in records:
            _check_record(root, rec, split, p, hypothesis, cfg, out)
    try:
        digest = dataset_digest(root, m.splits)
    except OSError:
        digest = None
    if digest != m.digest:
        out.append(Violation("digest_mismatch", (), f"manifest {m.digest}, files {digest}"))
    return ValidationReport(tuple(out))
