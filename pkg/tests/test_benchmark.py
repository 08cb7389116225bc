import importlib.util
from pathlib import Path

import pytest

from bqzeta.kernels import BACKENDS

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


def load():
    found = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    module = importlib.util.module_from_spec(found)
    found.loader.exec_module(module)
    return module


def test_benchmark_runs_on_every_backend(capsys):
    bench = load()
    rows = bench.run(scale=0.001, repeat=1)
    assert len(rows) == 6
    for _, times in rows:
        assert set(times) == set(BACKENDS)
        assert all(t > 0 for t in times.values())
    bench.main(["--scale", "0.001", "--repeat", "1"])
    assert "r2_counts" in capsys.readouterr().out
