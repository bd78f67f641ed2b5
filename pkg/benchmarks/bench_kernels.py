"""Time the compiled geometry kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import math
import timeit

import numpy as np

from dgcan import kernels


def workloads(rng):
    rects_a = np.column_stack([rng.uniform(0, 320, 200), rng.uniform(0, 240, 200), rng.uniform(5, 60, 200),
                               rng.uniform(5, 30, 200), rng.uniform(-math.pi / 2, math.pi / 2, 200)])
    rects_b = rects_a[:50].copy()
    xy = rng.uniform(0, 300, (3000, 2))
    boxes = np.hstack([xy, xy + rng.uniform(8, 60, (3000, 2))])
    scores = rng.random(3000)
    centers = rng.uniform(0, 320, (2000, 2))
    thetas = rng.uniform(-math.pi / 2, math.pi / 2, 2000)
    depths = rng.uniform(0.5, 0.6, 2000)
    gscores = rng.random(2000)
    return {
        "rotated_iou_matrix 200x50": lambda b: b.rotated_iou_matrix(rects_a, rects_b),
        "box_nms 3000 @0.7": lambda b: b.box_nms(boxes, scores, 0.7, 2000),
        "grasp_nms 2000": lambda b: b.grasp_nms(centers, thetas, depths, gscores, 25.0, math.pi / 6, 0.02),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.insert(0, ("compiled", kernels.compiled_backend))
    else:
        print("compiled extension not available; timing the fallback only")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<28}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in workloads(rng).items():
        times = [min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) for _, b in backends]
        speed = f"{times[-1] / times[0]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<28}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
