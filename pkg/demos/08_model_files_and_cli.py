# %% [markdown]
# Model files and the command line
#
# A model is a small TOML document.  The same file runs from Python or from
# the ``arcpath`` command, which writes the path as CSV.

# %%
import tempfile
from pathlib import Path

from arcpath import parse_model, run
from arcpath.cli import main
from arcpath.modelio import path_csv, write_model

TEXT = """
title = "von Mises truss"
nodes = [[0, 0.0, 0.0], [1, 1.0, 0.1], [2, 2.0, 0.0]]
elements = [[0, 1, "bar"], [1, 2, "bar"]]
supports = [[0, "ux", "uy", "uz"], [2, "ux", "uy", "uz"], [1, "ux", "uz"]]
loads = [[1, "uy", -1.0]]
monitors = [[1, "uy"]]

[solver]
dlambda = 0.02
max_steps = 60

[sections.bar]
type = "truss"
strain = "green"
A = 1.0
E = 1000.0
"""

model, config = parse_model(TEXT)
path = run(model, config)
print(path_csv(path).splitlines()[:4])

# %% canonical form: parse and write again gives the same text
canonical = write_model(model, config)
assert write_model(*parse_model(canonical)) == canonical
print(canonical)

# %% the same model through the command line
with tempfile.TemporaryDirectory() as tmp:
    f = Path(tmp) / "vonmises.toml"
    f.write_text(TEXT)
    code = main(["run", "--model", str(f), "--out", str(Path(tmp) / "vonmises.csv")])
    print("exit code", code)
    code = main(["bench", "--case", "planartruss3", "--out-dir", tmp])
    print("exit code", code)
