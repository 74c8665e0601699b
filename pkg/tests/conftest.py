import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from layerfd import (
    ConvergenceTable,
    FittingKind,
    MeshFamily,
    MeshSpec,
    SolveConfig,
    SolveMethod,
    convergence_table,
)
from reference_tables import N_LIST


def computed_table(problem: str, method: SolveMethod, family: MeshFamily,
                   eps_values, **cfg_kwargs) -> dict:
    """Run the standard sweep and return {eps: {n: error}} plus rates."""
    cfg = SolveConfig(problem=problem, method=method, scheme=FittingKind.ASI,
                      mesh=MeshSpec(family=family, n=max(N_LIST)), **cfg_kwargs)
    table = convergence_table(cfg, sorted(eps_values, reverse=True), list(N_LIST))
    errors: dict = {}
    rates: dict = {}
    for row in table.rows:
        errors.setdefault(row.eps, {})[row.n] = row.error
        rates.setdefault(row.eps, {})[row.n] = row.rate
    return {"errors": errors, "rates": rates, "table": table}


@pytest.fixture(scope="session")
def table1():
    return computed_table("ex1", SolveMethod.DECOMPOSED, MeshFamily.SHISHKIN_N,
                          [10.0 ** -k for k in range(1, 10)])


@pytest.fixture(scope="session")
def table2():
    return computed_table("ex1", SolveMethod.DIRECT, MeshFamily.SHISHKIN_N,
                          [10.0 ** -k for k in range(1, 10)])


@pytest.fixture(scope="session")
def table3():
    return computed_table("ex1", SolveMethod.DECOMPOSED, MeshFamily.ASYMPTOTIC_EPS,
                          [10.0 ** -k for k in range(2, 10)])


@pytest.fixture(scope="session")
def table4():
    return computed_table("ex2", SolveMethod.DIRECT, MeshFamily.SHISHKIN_N,
                          [10.0 ** -k for k in range(1, 10)])


@pytest.fixture(scope="session")
def table5():
    return computed_table("ex2", SolveMethod.DIRECT, MeshFamily.ASYMPTOTIC_EPS,
                          [10.0 ** -k for k in range(2, 10)])
