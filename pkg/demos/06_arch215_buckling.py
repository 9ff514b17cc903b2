# %% [markdown]
# Hinged-clamped 215 degree arch
#
# Loads and displacements are normalized by the arch radius and bending
# stiffness.  The first peak of the normalized load is the buckling load of
# the primary path.

# %%
import numpy as np

from arcpath import run
from arcpath.benchmarks import get
from arcpath.elements import normalize_arch_outputs

from _plotting import figure, save

case = get("arch215")
model, config = case.load()
R, E, I = case.arch
path = run(model, config)

u, v = path.monitor_values.T
P, ut, vt = normalize_arch_outputs(path.lam, u, v, R, E, I)
peak = next(k for k in range(1, len(P) - 1) if P[k] >= P[k - 1] and P[k] > P[k + 1])
print(f"first load maximum {P[peak]:.3f} at step {peak + 1}")
print(f"steps {len(path)}, restarts {path.restarts}, avg iterations {path.average_iterations:.2f}")

# %%
res = figure()
if res:
    fig, ax = res
    ax.plot(-vt, P, ".-", ms=3, label="crown, vertical")
    ax.plot(ut, P, ".-", ms=3, label="crown, horizontal")
    ax.axhline(P[peak], color="grey", lw=0.5)
    ax.set_xlabel("displacement / R")
    ax.set_ylabel("P R^2 / EI")
    ax.set_ylim(-5, 15)
    ax.legend()
    save(fig, "06_arch215.png")

    fig, ax = figure()
    for k in (0, 9, 19, peak, 59, 99):
        xy = model.coords[:, :2] + model.nodal_values(path.records[k].u)[:, :2]
        ax.plot(xy[:, 0], xy[:, 1], lw=1, label=f"step {k + 1}")
    ax.set_aspect("equal")
    ax.legend(fontsize=7)
    save(fig, "06_arch215_shapes.png")
