"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py --system 40-40:6 --words 2000
"""

import argparse
import time

import numpy as np

from ksparity import _pykernels
from ksparity.parity import _masks_to_words, basis_ray_array, kernel_basis
from ksparity.subsystems import resolve


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--system", default="40-40:6")
    ap.add_argument("--words", type=int, default=2000, help="proofs fed to the criticality kernel")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    try:
        from ksparity import _ckernels
    except ImportError:
        raise SystemExit("compiled extension not built; run: pip install -e . --no-build-isolation")

    s = resolve(args.system)
    gens = _masks_to_words(kernel_basis(s).vectors)
    br = basis_ray_array(s)
    rows = []

    t_c, words = timed(_ckernels.odd_span, gens, repeat=args.repeat)
    t_p, words_p = timed(_pykernels.odd_span, gens, repeat=args.repeat)
    assert len(words) == len(words_p)
    rows.append(("odd_span", len(words), t_c, t_p))

    sample = np.ascontiguousarray(words[: args.words])
    t_c, a = timed(_ckernels.critical_flags, br, s.n_rays, sample, repeat=args.repeat)
    t_p, b = timed(_pykernels.critical_flags, br, s.n_rays, sample, repeat=1)
    assert np.array_equal(np.asarray(a, bool), np.asarray(b, bool))
    rows.append(("critical_flags", len(sample), t_c, t_p))

    print(f"system {s.label}, kernel dimension {len(gens)}")
    print(f"{'kernel':<16}{'items':>8}{'cython s':>12}{'python s':>12}{'speedup':>10}")
    for name, n, c, p in rows:
        print(f"{name:<16}{n:>8}{c:>12.4f}{p:>12.4f}{p / c:>10.1f}")


if __name__ == "__main__":
    main()
