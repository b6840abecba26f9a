"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import statistics
import time

from dimmonoid import _backend
from dimmonoid.hilbert import solve_W
from dimmonoid.system import SystemSpec


def _workload(seed=7):
    rng = random.Random(seed)
    systems = []
    for _ in range(40):
        k = rng.randint(2, 4)
        coef = lambda: tuple(rng.randint(0, 4) for _ in range(k))  # noqa: E731
        cong = [(coef(), rng.randint(2, 5)) for _ in range(rng.randint(0, 2))]
        rows = [(coef(), coef()) for _ in range(rng.randint(1, 2))]
        systems.append(SystemSpec(k, tuple(cong), tuple(rows)))
    gens = [tuple(rng.randint(0, 5) for _ in range(3)) for _ in range(6)]
    return systems, gens


def _time(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _backend._ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    systems, gens = _workload()
    backends = ["python"] + (["cython"] if _backend._ckernels is not None else [])
    results = {}
    for b in backends:
        results[b] = {
            "completion (40 systems)": _time(lambda: [solve_W(S, backend=b) for S in systems], args.repeat),
            "span_table (box 30^3)": _time(lambda: _backend.span_table(gens, [30, 30, 30], backend=b), args.repeat),
        }
    # identical answers either way
    if len(backends) == 2:
        assert [solve_W(S, backend="python") for S in systems] == [solve_W(S, backend="cython") for S in systems]
    print(f"{'kernel':28s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name in results["python"]:
        row = f"{name:28s}" + "".join(f"{results[b][name] * 1e3:10.1f}ms" for b in backends)
        if len(backends) == 2:
            row += f"{results['python'][name] / results['cython'][name]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
