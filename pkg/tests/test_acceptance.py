"""Acceptance gate: ten criteria, each printed as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the summary appears at the end
of the session) or directly with ``python tests/test_acceptance.py``.
"""

import math
import random
import sys
import tempfile
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import CORPUS  # noqa: E402
from oracles import pairs_oracle, plain, random_statements, union_find_groups  # noqa: E402

from kandinsky.cli import main as cli_main  # noqa: E402
from kandinsky.core import Color, KFigure, KObject, Shape, UniverseConfig, sample_figure, validate_figure  # noqa: E402
from kandinsky.dsl import circular_arrangement, parse, pretty_print, proximity_groups, two_disjoint_pairs  # noqa: E402
from kandinsky.io import emit_dataset  # noqa: E402
from kandinsky.patterns import (  # noqa: E402
    CHALLENGE2_UNIVERSE,
    CHALLENGE3_UNIVERSE,
    FOUR_OBJECT_UNIVERSE,
    H1,
    H2,
    TWO_PAIRS,
    challenge1_gt,
    fit_meta_shape,
    get_pattern,
    positive_count_distribution,
    sample_counterfactual,
    sample_counterfactuals,
    sample_positive,
)

RESULTS = {}


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}"
    RESULTS[number] = line
    print(line)
    return ok


def criterion_1():
    start = time.perf_counter()
    universes = (UniverseConfig(), CHALLENGE2_UNIVERSE, CHALLENGE3_UNIVERSE)
    bad = 0
    for i in range(10_000):
        u = universes[i % 3]
        bad += not validate_figure(sample_figure(u, i), u).ok
    took = time.perf_counter() - start
    return record(1, "figure validity", bad == 0 and took < 60,
                  f"{bad} invalid of 10000 in {took:.1f}s (limit 60s)")


def criterion_2():
    u = UniverseConfig(n_objects=(1, 8), size_range=(0.04, 0.2))
    statements = [(parse(t), fn) for t, fn in random_statements(2024, 20)]
    agree = total = 0
    for seed in range(1000):
        f = sample_figure(u, seed)
        objs = plain(f)
        for s, fn in statements:
            agree += s.evaluate(f) == fn(objs, f)
            total += 1
    return record(2, "evaluator vs brute force", agree == total, f"{agree}/{total} agree")


def criterion_3():
    small = UniverseConfig(n_objects=(4, 4), size_range=(0.04, 0.2))
    mixed = UniverseConfig(n_objects=(1, 8), size_range=(0.04, 0.15))
    agree = total = 0
    for i in range(10_000):
        f = sample_figure(small if i % 2 else mixed, i)
        objs = plain(f)
        for r1 in ("same", "different"):
            for r2 in ("same", "different"):
                agree += two_disjoint_pairs(f, r1, r2) == pairs_oracle(objs, r1, r2)
                total += 1
    return record(3, "two_disjoint_pairs vs enumeration", agree == total,
                  f"{agree}/{total} agree over 10000 figures")


def criterion_4():
    gt_not_h1 = h2_not_gt = 0
    for seed in range(10_000):
        f = sample_figure(FOUR_OBJECT_UNIVERSE, seed)
        gt = TWO_PAIRS.evaluate(f)
        gt_not_h1 += gt and not H1.evaluate(f)
        h2_not_gt += H2.evaluate(f) and not gt
    a = sample_counterfactual(H1, TWO_PAIRS, FOUR_OBJECT_UNIVERSE, "h_not_gt", 1)
    b = sample_counterfactual(H2, TWO_PAIRS, FOUR_OBJECT_UNIVERSE, "gt_not_h", 1)
    found = (H1.evaluate(a) and not TWO_PAIRS.evaluate(a)) and \
        (TWO_PAIRS.evaluate(b) and not H2.evaluate(b))
    ok = gt_not_h1 == 0 and h2_not_gt == 0 and found
    return record(4, "hypothesis set relations", ok,
                  f"gt-not-h1 {gt_not_h1}, h2-not-gt {h2_not_gt}, witnesses found: {found}")


def criterion_5():
    details, ok = [], True
    for name, h in (("h1", H1), ("h2", H2)):
        cs = sample_counterfactuals(h, TWO_PAIRS, FOUR_OBJECT_UNIVERSE, 500, seed=5)
        good = 0
        for tag, f in cs.figures:
            in_h, in_gt = h.evaluate(f), TWO_PAIRS.evaluate(f)
            good += (in_h, in_gt) == ((True, False) if tag == "h_not_gt" else (False, True))
        n = len(cs.figures)
        ok &= n >= 500 and good == n
        details.append(f"{name} {good}/{n}")
    return record(5, "counterfactual tags", ok, ", ".join(details))


def criterion_6():
    p = get_pattern("challenge-1")
    start = time.perf_counter()
    passed = sum(challenge1_gt(sample_positive(p, seed)) for seed in range(1000))
    counts, weights = zip(*positive_count_distribution(p))
    rng = random.Random(6)
    rejected = 0
    for i in range(1000):
        n = rng.choices(counts, weights)[0]
        u = UniverseConfig(n_objects=(n, n), size_range=p.universe.size_range)
        rejected += not challenge1_gt(sample_figure(u, rng.getrandbits(63)))
    uniform = UniverseConfig(n_objects=(12, 12), size_range=(0.04, 0.08))
    fp = sum(fit_meta_shape(sample_figure(uniform, 10_000 + s)) is not None for s in range(200))
    ok = passed == 1000 and rejected >= 990 and fp <= 2
    return record(6, "challenge 1", ok,
                  f"positives {passed}/1000, negatives rejected {rejected}/1000, "
                  f"fit false positives {fp}/200 ({time.perf_counter() - start:.1f}s)")


def _ring_figure(rng):
    n = rng.randint(6, 12)
    r = rng.uniform(0.2, 0.4)
    phase = rng.uniform(0, 2 * math.pi)
    objs = []
    for i in range(n):
        a = phase + 2 * math.pi * i / n
        objs.append(KObject(Shape.CIRCLE, Color.BLUE, 0.04,
                            0.5 + r * math.cos(a) + rng.uniform(-0.01, 0.01),
                            0.5 + r * math.sin(a) + rng.uniform(-0.01, 0.01)))
    return KFigure(tuple(objs))


def criterion_7():
    rng = random.Random(7)
    on_circle = sum(circular_arrangement(_ring_figure(rng)) for _ in range(100))
    u = UniverseConfig(n_objects=(8, 8), size_range=(0.04, 0.1))
    rejected = sum(not circular_arrangement(sample_figure(u, 700 + s)) for s in range(100))
    prox = UniverseConfig(n_objects=(1, 16), size_range=(0.04, 0.1))
    agree = 0
    for seed in range(1000):
        f = sample_figure(prox, seed)
        eps = rng.uniform(0.05, 0.4)
        agree += proximity_groups(f, eps) == union_find_groups(plain(f), eps)
    ok = on_circle == 100 and rejected >= 95 and agree == 1000
    return record(7, "gestalt predicates", ok,
                  f"on-circle accepted {on_circle}/100, random rejected {rejected}/100, "
                  f"proximity {agree}/1000")


def _tree(root):
    return {str(p.relative_to(root)): p.read_bytes() for p in sorted(root.rglob("*")) if p.is_file()}


def criterion_8():
    with tempfile.TemporaryDirectory() as tmp:
        hyp = Path(tmp) / "h1.kst"
        hyp.write_text(str(H1))
        trees = []
        for run in ("a", "b"):
            out = Path(tmp) / run
            code = cli_main(["generate", "--pattern", "two-pairs", "--n-true", "100",
                             "--n-false", "100", "--n-cf", "50", "--cf-hypothesis", str(hyp),
                             "--seed", "7", "--out", str(out)])
            assert code == 0
            trees.append(_tree(out))
        same = trees[0] == trees[1]
    return record(8, "deterministic generation", same,
                  f"{len(trees[0])} files, trees identical: {same}")


def criterion_9():
    good = 0
    for text in CORPUS:
        s = parse(text)
        again = parse(pretty_print(s))
        good += again == s and parse(pretty_print(again)) == again
    return record(9, "parser round trip", good == len(CORPUS), f"{good}/{len(CORPUS)} idempotent")


def criterion_10():
    with tempfile.TemporaryDirectory() as tmp:
        start = time.perf_counter()
        m = emit_dataset(get_pattern("two-pairs"), (400, 400, 200), H1, 10, tmp)
        took = time.perf_counter() - start
        files = sum(1 for _ in Path(tmp).rglob("*.svg"))
    n = sum(m.counts.values())
    return record(10, "throughput", n == 1000 and files == 1000 and took < 30,
                  f"{n} figures (JSON + SVG) in {took:.1f}s (limit 30s)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.acceptance
@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    print(f"{sum(outcomes)}/{len(outcomes)} criteria passed")
    sys.exit(0 if all(outcomes) else 1)
