# %% [markdown]
# Bordered Newton system solved with one factorization
#
# Every corrector iteration solves K du - F dlam = -R together with the
# linearized constraint a.du + b dlam = -A.  The split below factors K once
# and back-substitutes two right-hand sides.

# %%
import numpy as np

from arcpath import schur_solve
from arcpath.linsolve import factor, solve_multi

rng = np.random.default_rng(0)
n = 6
Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
K = (Q * np.array([3.0, 2.0, 1.0, 0.5, -0.4, -1.5])) @ Q.T  # indefinite, as past a limit point
F, R, a = rng.standard_normal(n), rng.standard_normal(n), rng.standard_normal(n)
b, A = 0.7, -0.2

# %% two solves against one factorization
f = factor(K)
du_I, du_II = solve_multi(f, [F, R])
print("du_I =", np.round(du_I, 4))
print("du_II =", np.round(du_II, 4))

# %% the scalar quotient and the recombined displacement correction
dlam, du = schur_solve(K, F, R, a, b, A)
print(f"dlam = {dlam:.6f}")

# %% same answer as the enlarged (n+1) system
M = np.block([[K, -F[:, None]], [a[None, :], np.array([[b]])]])
ref = np.linalg.solve(M, -np.append(R, A))
print("max difference vs augmented solve:", np.abs(np.append(du, dlam) - ref).max())

# %% with a = 0, b = 1, A = 0 the step is plain load control: dlam = 0, du = -K^-1 R
dlam0, du0 = schur_solve(K, F, R, np.zeros(n), 1.0, 0.0)
print("load-control limit:", dlam0, np.allclose(du0, -du_II))
