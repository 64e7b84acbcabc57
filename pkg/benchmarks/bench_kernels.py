"""Time the prism sweep kernel: compiled extension vs numpy fallback.

    python3 benchmarks/bench_kernels.py [--b-range 10] [--x-max 99] [--repeat 3]
"""
import argparse
import time

from seifert_network import _kernels_py

try:
    from seifert_network import _kernels
except ImportError:
    _kernels = None


def best_of(fn, args, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--b-range", type=int, default=10)
    parser.add_argument("--x-max", type=int, default=99)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    sweep_args = (-args.b_range, args.b_range, 3, args.x_max)

    backends = [("numpy", _kernels_py.prism_sweep)]
    if _kernels is not None:
        backends.insert(0, ("compiled", _kernels.prism_sweep))
    else:
        print("compiled extension not built; timing the numpy fallback only")

    results = {}
    for name, fn in backends:
        elapsed, result = best_of(fn, sweep_args, args.repeat)
        results[name] = result
        cases = result[0]
        print(f"{name:9s} {elapsed:8.3f} s  {cases / elapsed / 1e6:9.1f} M cases/s  result={result}")
    if len(results) == 2:
        assert results["compiled"] == results["numpy"], "backends disagree"
        print("backends agree")


if __name__ == "__main__":
    main()
