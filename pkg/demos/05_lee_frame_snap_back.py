# %% [markdown]
# Lee frame: snap-through followed by snap-back
#
# Along the path both the load factor and the vertical displacement of the
# loaded point reverse.  The extrapolated predictor carries the solver
# through both turns with no direction test.

# %%
import numpy as np

from arcpath import run
from arcpath.benchmarks import get
from arcpath.modelio import write_deformed_shape

from _plotting import figure, save

model, config = get("leeframe").load()
path = run(model, config)
print(f"first-step arc length {path.first_ds:.4f}")
print(f"steps {len(path)}, restarts {path.restarts}, avg iterations {path.average_iterations:.2f}")

# %% turning points
u, v = path.monitor_values.T
dlam = path.dlam
dv = np.diff(np.r_[0.0, v])
for k in range(1, len(path)):
    if dlam[k] * dlam[k - 1] < 0:
        print(f"load limit point near step {k + 1}, lambda {path.lam[k]:.3f}")
    if dv[k] * dv[k - 1] < 0:
        print(f"displacement limit point near step {k + 1}, lambda {path.lam[k]:.3f}")

# %% deformed shape at the largest load, as CSV text
peak = int(np.argmax(path.lam))
print(write_deformed_shape(model, path.records[peak].u, None).splitlines()[12])

res = figure()
if res:
    fig, ax = res
    ax.plot(-v, path.lam, ".-", ms=3, label="vertical")
    ax.plot(u, path.lam, ".-", ms=3, label="horizontal")
    ax.set_xlabel("displacement of loaded point")
    ax.set_ylabel("load factor")
    ax.legend()
    save(fig, "05_lee_frame.png")
