"""Desk-scale training experiments read back by the acceptance suite.

Produces, under ``--root`` (default ``runs/``):

    desk/                     synthetic dataset (200 train, 20 per test split)
    overfit/                  20-scene run, 2000 iterations
    <variant>_s<seed>/        variant in {regress, center, rgb}, seeds 0..2,
                              6000 iterations each, with seen.json next to it

Finished steps are skipped, so the script can be re-run after an interruption.
Everything goes through the ``dgcan`` command line.
"""
import argparse
import json
import subprocess
import sys
import time
from pathlib import Path

VARIANTS = {
    "regress": ["--depth-mode", "regress"],
    "center": ["--depth-mode", "center"],
    "rgb": ["--depth-mode", "regress", "--rgb-only"],
}
SEEDS = (0, 1, 2)


def dgcan(*args):
    cmd = [sys.executable, "-m", "dgcan.harness.cli", *map(str, args)]
    print("+", " ".join(cmd[2:]), flush=True)
    subprocess.run(cmd, check=True)


def train_once(data, out, iterations, extra):
    if (out / "summary.json").exists():
        return
    dgcan("train", "--data", data, "--out", out, "--iterations", iterations, "--log-every", 500, *extra)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--root", type=Path, default=Path("runs"))
    p.add_argument("--seeds", type=int, nargs="+", default=list(SEEDS))
    p.add_argument("--variants", nargs="+", default=list(VARIANTS), choices=list(VARIANTS))
    p.add_argument("--skip-overfit", action="store_true")
    args = p.parse_args(argv)

    data = args.root / "desk"
    if not (data / "manifest.json").exists():
        dgcan("gen", "--scenes", 200, "--test-scenes", 20, "--seed", 0, "--out", data)
    if not args.skip_overfit:
        train_once(data, args.root / "overfit", 2000, ["--scenes", 20])
    for seed in args.seeds:
        for name in args.variants:
            out = args.root / f"{name}_s{seed}"
            start = time.time()
            train_once(data, out, 6000, VARIANTS[name] + ["--seed", seed])
            if not (out / "seen.json").exists():
                dgcan("eval", "--data", data, "--split", "seen", "--ckpt", out / "final.bin",
                      "--report", out / "seen.json")
            ap = json.loads((out / "seen.json").read_text())["AP"]
            print(f"{out.name}: AP {ap:.4f} ({time.time() - start:.0f} s)", flush=True)


if __name__ == "__main__":
    main()
