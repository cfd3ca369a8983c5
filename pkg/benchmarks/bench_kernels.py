"""Compare the numba kernels with their pure-numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Each row times one kernel on the same input through both backends after a
warm-up call (so numba compilation is excluded) and checks that the outputs
are identical.
"""

import argparse
import time

import numpy as np

from aglab import _kernels as K


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    order3 = K.all_tables(3)
    order4 = rng.integers(0, 4, size=(20000, 4, 4)).astype(np.int8)
    perms5, invs5 = K.permutations_array(5)
    order5 = rng.integers(0, 5, size=(300, 5, 5)).astype(np.int64)
    ag = K.C_INVERTIVE
    yield ("profile, all 19683 order-3 tables",
           lambda: K._nb_profile_batch(order3),
           lambda: K._np_profile_batch(order3.astype(np.int64)))
    yield ("profile, 20000 random order-4 tables",
           lambda: K._nb_profile_batch(order4),
           lambda: K._np_profile_batch(order4.astype(np.int64)))
    yield ("pruned search, order-3 AG",
           lambda: K._nb_search(K.empty_partial(3), 3, 0, 9, ag),
           lambda: K._np_search(K.empty_partial(3).astype(np.int64), 3, 0, 9, ag))
    yield ("pruned search, order-4 AG",
           lambda: K._nb_search(K.empty_partial(4), 4, 0, 16, ag),
           lambda: K._np_search(K.empty_partial(4).astype(np.int64), 4, 0, 16, ag))
    yield ("lexmin relabeling, 300 order-5 tables",
           lambda: K._nb_lexmin_batch(order5, perms5, invs5),
           lambda: K._np_lexmin_batch(order5, perms5, invs5))


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if K.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':42s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}  match")
    for name, nb, npy in cases(rng):
        t_nb = best_of(nb, args.repeat)
        t_np = best_of(npy, args.repeat)
        ok = same(nb(), npy())
        print(f"{name:42s} {t_nb:9.4f}s {t_np:9.4f}s {t_np / t_nb:7.1f}x  {'yes' if ok else 'NO'}")


if __name__ == "__main__":
    main()
