from __future__ import annotations

import pytest

from linearr import generators as gen


@pytest.fixture(scope="session")
def klein_arr():
    return gen.klein()


@pytest.fixture(scope="session")
def wiman_arr():
    return gen.wiman()


@pytest.fixture(scope="session")
def small_fixtures():
    """Rational arrangements with at most eight lines."""
    out = {"paper_L": gen.paper_L(), "pappus_P": gen.pappus_P(), "fermat2": gen.fermat(2)}
    for d in range(4, 9):
        out[f"near_pencil{d}"] = gen.near_pencil(d)
    for d in range(4, 9):
        for seed in range(2):
            out[f"generic{d}_{seed}"] = gen.generic_arrangement(d, seed)
    return out


@pytest.fixture(scope="session")
def small_extss(small_fixtures):
    from linearr.solver import extss_exact

    return {name: extss_exact(A) for name, A in small_fixtures.items()}


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
