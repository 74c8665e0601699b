"""Dev scratch: compare computed tables against the printed reference values."""
import numpy as np

from layerfd import (FittingKind, MeshFamily, MeshSpec, SolveConfig, SolveMethod,
                     convergence_table)

N_LIST = [32, 64, 128, 256, 512, 1024]

TABLE1 = {  # ex1, decomposed, ASI, shishkin-n
    1e-1: [1.27e-04, 3.18e-05, 7.95e-06, 1.99e-06, 4.97e-07, 1.24e-07],
    1e-2: [4.13e-04, 9.08e-05, 2.66e-05, 5.87e-06, 1.33e-06, 3.08e-07],
    1e-3: [6.88e-05, 3.02e-05, 1.18e-05, 5.41e-06, 1.87e-06, 5.29e-07],
    1e-4: [5.25e-06, 2.71e-06, 1.51e-06, 6.81e-07, 3.33e-07, 1.58e-07],
    1e-5: [7.19e-07, 3.27e-07, 1.39e-07, 7.35e-08, 3.50e-08, 1.77e-08],
    1e-6: [5.51e-07, 5.12e-08, 1.39e-08, 7.37e-08, 3.61e-09, 1.76e-09],
    1e-7: [2.37e-07, 4.04e-08, 2.83e-09, 7.00e-10, 3.52e-10, 1.76e-10],
    1e-8: [5.28e-07, 2.42e-08, 2.26e-09, 2.47e-10, 3.52e-11, 1.76e-11],
    1e-9: [5.27e-07, 3.92e-08, 2.92e-09, 2.20e-10, 1.62e-11, 1.90e-12],
}

TABLE2 = {  # ex1, direct, ASI, shishkin-n
    1e-1: [3.53e-04, 8.84e-05, 2.21e-05, 5.53e-06, 1.38e-06, 3.46e-07],
    1e-2: [1.08e-02, 2.53e-03, 7.13e-04, 1.61e-04, 3.69e-05, 8.54e-06],
    1e-3: [1.81e-02, 8.05e-03, 3.29e-03, 1.47e-03, 5.12e-04, 1.45e-04],
    1e-4: [1.47e-02, 7.54e-03, 4.09e-03, 1.89e-03, 9.22e-04, 4.37e-04],
    1e-5: [1.90e-02, 8.72e-03, 3.85e-03, 2.01e-03, 9.69e-04, 4.88e-04],
    1e-6: [1.48e-02, 7.60e-03, 3.85e-03, 2.02e-03, 9.93e-04, 4.88e-04],
    1e-7: [1.90e-02, 7.60e-03, 4.15e-03, 1.94e-03, 9.74e-04, 4.88e-04],
    1e-8: [1.48e-02, 8.72e-03, 4.15e-03, 1.94e-03, 9.75e-04, 4.88e-04],
    1e-9: [1.48e-02, 7.60e-03, 3.86e-03, 1.94e-03, 9.93e-04, 4.93e-04],
}

TABLE3 = {  # ex1, decomposed, ASI, asymptotic
    1e-2: [2.72e-04, 8.76e-05, 2.73e-05, 6.11e-06, 1.54e-06, 3.87e-07],
    1e-3: [4.96e-05, 2.48e-05, 1.17e-05, 5.37e-06, 1.78e-06, 5.14e-07],
    1e-4: [5.24e-06, 3.24e-06, 1.37e-06, 6.80e-07, 3.33e-07, 1.60e-07],
    1e-5: [5.27e-07, 3.27e-07, 1.39e-07, 6.98e-08, 3.50e-08, 1.77e-08],
    1e-6: [5.27e-08, 3.27e-08, 1.39e-08, 7.37e-09, 3.61e-09, 1.78e-09],
    1e-7: [7.20e-09, 3.27e-09, 1.53e-09, 7.00e-10, 3.52e-10, 1.76e-10],
    1e-8: [5.27e-10, 3.27e-10, 1.53e-10, 7.37e-11, 3.61e-11, 1.79e-11],
    1e-9: [5.27e-11, 2.73e-11, 1.53e-11, 7.37e-12, 3.52e-12, 1.76e-12],
}

TABLE4 = {  # ex2, direct, ASI, shishkin-n
    1e-1: [4.23e-04, 1.06e-04, 2.65e-05, 6.64e-06, 1.66e-06, 4.15e-07],
    1e-2: [2.05e-04, 7.60e-05, 2.57e-05, 8.48e-06, 2.69e-06, 8.29e-07],
    1e-3: [1.91e-05, 7.22e-06, 2.46e-06, 8.12e-07, 2.57e-07, 7.94e-08],
    1e-4: [2.28e-06, 6.20e-07, 2.39e-07, 8.03e-08, 2.56e-08, 7.90e-09],
    1e-5: [1.01e-06, 1.04e-07, 1.73e-08, 7.59e-09, 2.52e-09, 7.88e-10],
    1e-6: [2.27e-06, 1.69e-07, 1.25e-08, 7.92e-10, 2.17e-10, 7.62e-11],
    1e-7: [1.01e-06, 1.69e-07, 9.43e-09, 9.31e-10, 6.92e-11, 5.58e-12],
    1e-8: [2.27e-06, 1.04e-07, 9.43e-09, 9.31e-10, 6.93e-11, 5.15e-12],
    1e-9: [2.27e-06, 1.69e-07, 1.25e-08, 9.31e-10, 6.32e-11, 4.89e-12],
}

TABLE5 = {  # ex2, direct, ASI, asymptotic
    1e-2: [3.66e-04, 9.29e-05, 2.33e-05, 5.84e-06, 1.46e-06, 3.66e-07],
    1e-3: [6.75e-05, 1.96e-05, 4.93e-06, 1.26e-06, 3.15e-07, 7.89e-08],
    1e-4: [9.01e-06, 3.50e-06, 8.86e-07, 2.22e-07, 5.57e-08, 1.40e-08],
    1e-5: [9.88e-07, 5.16e-07, 1.32e-07, 3.48e-08, 8.71e-09, 2.18e-09],
    1e-6: [9.55e-08, 6.72e-08, 1.95e-08, 4.91e-09, 1.25e-09, 3.14e-10],
    1e-7: [8.45e-09, 8.03e-09, 2.69e-09, 6.80e-10, 1.70e-10, 4.24e-11],
    1e-8: [7.01e-10, 9.00e-10, 3.49e-10, 8.86e-11, 2.23e-11, 5.76e-12],
    1e-9: [5.54e-11, 9.62e-11, 4.32e-11, 1.10e-11, 2.86e-12, 5.74e-13],
}


def compare(label, printed, problem, method, family):
    cfg = SolveConfig(problem=problem, method=method, scheme=FittingKind.ASI,
                      mesh=MeshSpec(family=family, n=1024))
    eps_list = sorted(printed, reverse=True)
    table = convergence_table(cfg, eps_list, N_LIST)
    got = {(r.eps, r.n): r.error for r in table.rows}
    print(f"== {label} ==")
    worst = 0.0
    for eps in eps_list:
        cells = []
        for k, n in enumerate(N_LIST):
            mine = got[(eps, n)]
            ref = printed[eps][k]
            rel = abs(mine - ref) / ref
            worst = max(worst, rel if ref >= 1e-11 else 0.0)
            flag = " " if rel < 0.05 else ("~" if max(mine / ref, ref / mine) < 3 else "!")
            cells.append(f"{mine:9.2e}/{ref:8.1e}{flag}")
        print(f"eps={eps:g}: " + " ".join(cells))
    print(f"worst relative mismatch on cells >= 1e-11: {worst:.3%}\n")


compare("table1 ex1 decomposed S_N", TABLE1, "ex1", SolveMethod.DECOMPOSED, MeshFamily.SHISHKIN_N)
compare("table2 ex1 direct S_N", TABLE2, "ex1", SolveMethod.DIRECT, MeshFamily.SHISHKIN_N)
compare("table3 ex1 decomposed S_1/eps", TABLE3, "ex1", SolveMethod.DECOMPOSED, MeshFamily.ASYMPTOTIC_EPS)
compare("table4 ex2 direct S_N", TABLE4, "ex2", SolveMethod.DIRECT, MeshFamily.SHISHKIN_N)
compare("table5 ex2 direct S_1/eps", TABLE5, "ex2", SolveMethod.DIRECT, MeshFamily.ASYMPTOTIC_EPS)
