"""Lyapunov exponent of the symmetric random walk on the Riley group.

Compares the norm estimator with the trace (spectral radius) estimator at a
few parameters; the two are independent routes to the same number.
"""

from biflab.repwalk import WordMeasure, lyapunov_mc, lyapunov_trace, riley_family

fam = riley_family()
sym = WordMeasure()
for lam in (-4.0, -2.0 + 1j, 0.5j, 3.0):
    mats = fam.at(lam)
    est, se = lyapunov_mc(mats, sym, 1000, 200, seed=0)
    tr = lyapunov_trace(mats, sym, 1000, 200, seed=1)
    print(f"lambda={lam!s:>10}  norm {est:.4f} +/- {se:.4f}   spectral {tr.spectral:.4f} +/- {tr.spectral_stderr:.4f}")
