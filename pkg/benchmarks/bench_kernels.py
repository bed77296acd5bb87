"""Time the numba kernels against their numpy fallbacks on WordNet 3.0.

Run: python benchmarks/bench_kernels.py [--wordnet DIR] [--pairs 200]

Both backends are called directly, so the LOSIM_DISABLE_NUMBA flag does
not matter here (it must not be set, or numba never imports).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from losim import _accel
from losim.wordnet import default_wordnet_dir, load_wordnet


def _best_of(fn, runs):
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--wordnet", default=None)
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--runs", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not importable (or LOSIM_DISABLE_NUMBA is set); nothing to compare")

    g = load_wordnet(args.wordnet or default_wordnet_dir())
    und = (g._und_indptr, g._und_indices)
    anc = (g._anc_indptr, g._anc_indices, g._depth)
    rng = np.random.default_rng(args.seed)
    nouns = np.array([g.node_index(s) for s in g.ids() if s.pos == "n"])
    pairs = rng.choice(nouns, size=(args.pairs, 2))

    # warm the jit cache so compile time is not measured
    _accel.bfs_distances_numba(*und, [0])
    _accel.bfs_pair_numba(*und, 0, 1)
    _accel.lcs_depth_numba(*anc, 0, 1)

    cases = {
        "bfs_distances (full sweep x10)": (
            lambda: [_accel.bfs_distances_numba(*und, [a]) for a in pairs[:10, 0]],
            lambda: [_accel.bfs_distances_numpy(*und, [a]) for a in pairs[:10, 0]],
        ),
        f"bfs_pair x{args.pairs}": (
            lambda: [_accel.bfs_pair_numba(*und, a, b) for a, b in pairs],
            lambda: [_accel.bfs_pair_numpy(*und, a, b) for a, b in pairs],
        ),
        f"lcs_depth x{args.pairs}": (
            lambda: [_accel.lcs_depth_numba(*anc, a, b) for a, b in pairs],
            lambda: [_accel.lcs_depth_numpy(*anc, a, b) for a, b in pairs],
        ),
        "ancestor_closure (whole graph)": (
            lambda: _accel.ancestor_closure_numba(g._up_indptr, g._up_indices),
            lambda: _accel.ancestor_closure_numpy(g._up_indptr, g._up_indices),
        ),
    }

    print(f"{len(g)} synsets, {args.pairs} random noun pairs, best of {args.runs}")
    print(f"{'kernel':<34}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  agree")
    for name, (fast, slow) in cases.items():
        t_fast, out_fast = _best_of(fast, args.runs)
        t_slow, out_slow = _best_of(slow, args.runs)
        agree = all(np.array_equal(x, y) for x, y in zip(out_fast, out_slow))
        print(f"{name:<34}{t_fast:>10.4f}{t_slow:>10.4f}{t_slow / t_fast:>8.1f}x  {agree}")


if __name__ == "__main__":
    main()
