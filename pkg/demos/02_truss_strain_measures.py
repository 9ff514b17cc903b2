# %% [markdown]
# Two truss strain measures
#
# The engineering strain (L - L0)/L0 and the Green-Lagrange strain
# (L^2 - L0^2)/(2 L0^2) agree for small stretches and part ways for large
# ones.  Both elements provide a consistent tangent.

# %%
import numpy as np

from arcpath.elements import TrussElement
from arcpath.elements.truss import strains

X = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
eng = TrussElement((0, 1), A=1.0, E=1.0, strain="engineering")
green = TrussElement((0, 1), A=1.0, E=1.0, strain="green")

# %% axial force against stretch
print(" stretch   eps_E     eps_G    N_E       N_G")
for s in (-0.5, -0.1, 0.0, 0.1, 0.5, 1.0):
    u = np.array([0, 0, 0, s, 0, 0])
    eE, eG = strains(X, u)
    print(f"{s:7.2f} {eE:9.4f} {eG:9.4f} {eng.response(X, u).force[3]:8.4f} {green.response(X, u).force[3]:8.4f}")

# %% tangent stiffness vs central differences at a random large rotation
rng = np.random.default_rng(3)
coords = rng.standard_normal((2, 3))
u = 0.4 * rng.standard_normal(6)
for el in (eng, green):
    K = el.response(coords, u).stiffness
    h = 1e-6
    Kfd = np.column_stack([
        (el.response(coords, u + h * e).force - el.response(coords, u - h * e).force) / (2 * h)
        for e in np.eye(6)
    ])
    print(f"{el.strain:12s} relative tangent error {np.abs(K - Kfd).max() / np.abs(K).max():.1e}")
