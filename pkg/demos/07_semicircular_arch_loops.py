# %% [markdown]
# Semicircular arch: looping equilibrium paths
#
# A crown load and a slightly offset load both produce paths that turn back
# on themselves several times.  The load factor increment changes sign at
# every load limit point; the run keeps going through each of them.

# %%
import numpy as np

from arcpath import run
from arcpath.benchmarks import select

from _plotting import figure, save

res = figure()
for case in select("archsemicircle"):
    model, config = case.load()
    path = run(model, config)
    s = np.sign(path.dlam)
    turns = int(np.sum(s[1:] != s[:-1]))
    print(f"{case.name}: {len(path)} steps, {turns} load limit points, "
          f"restarts {path.restarts}, avg iterations {path.average_iterations:.2f}")
    if res:
        res[1].plot(-path.monitor_values[:, 1], path.lam, lw=1, label=case.name.split("_")[1])

if res:
    fig, ax = res
    ax.set_xlabel("vertical displacement of loaded node")
    ax.set_ylabel("load factor")
    ax.legend()
    save(fig, "07_semicircular_arch.png")
