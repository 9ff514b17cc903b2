# %% [markdown]
# Snap-through of a shallow truss
#
# Two inclined bars carry a hanging bar whose lower end is pulled down.
# Under load control the apex would jump at the load peak; the arc-length
# solver follows the descending branch.  Each converged point is checked
# against the equilibrium equations written out by hand.

# %%
import numpy as np

from arcpath import run
from arcpath.benchmarks import select

from _plotting import figure, save


def hand_residual(v1, v2, lam, E1):
    y = 0.8 + v1
    L = np.hypot(0.6, y)
    return np.hypot(2 * (L - 1) * y / L + E1 * (v1 - v2), lam - E1 * (v1 - v2))


# %%
res = figure()
for case in select("planartruss3"):
    model, config = case.load()
    E1 = model.elements[1].E
    path = run(model, config)
    v1, v2 = path.monitor_values.T
    worst = max(hand_residual(a, b, lam, E1) for a, b, lam in zip(v1, v2, path.lam))
    print(f"E1 = {E1:5g}: peak lambda {path.lam.max():.4f}, restarts {path.restarts}, "
          f"avg iterations {path.average_iterations:.2f}, worst hand residual {worst:.1e}")
    if res:
        res[1].plot(-v1, path.lam, ".-", ms=3, label=f"E1 = {E1:g}")

if res:
    fig, ax = res
    ax.set_xlabel("apex deflection")
    ax.set_ylabel("load factor")
    ax.legend()
    save(fig, "04_planar_truss.png")
