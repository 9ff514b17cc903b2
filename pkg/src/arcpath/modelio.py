"""Model files (TOML) and CSV output of paths and deformed shapes.

Model file layout::

    title = "two-bar truss"
    nodes = [[0, 0.0, 0.0, 0.0], [1, 1.0, 0.5, 0.0], ...]   # id, X, Y, Z
    elements = [[0, 1, "bar"], ...]                         # node, node, section
    supports = [[0, "ux", "uy", "uz"], ...]                 # node, fixed components
    loads = [[1, "uy", -1.0]]                               # node, component, value
    monitors = [[1, "uy"]]                                  # node, component

    [solver]            # every key optional
    psi = 1.0
    dlambda = 0.05
    tol = 1e-06
    max_iter = 10
    max_steps = 50

    [sections.bar]
    type = "truss"      # or "beam2d" with A, I, E, nu, kappa
    strain = "green"    # or "engineering"
    A = 1.0
    E = 1.0

Components are ``ux, uy, uz`` (translations) and ``rz`` (in-plane rotation).
"""
from __future__ import annotations

import csv
import io
import math
import os
import sys

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .arclength import EquilibriumPath, SolverConfig
from .elements import Beam2DElement, TrussElement
from .model import COMPONENT_INDEX, Model, ModelError


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class ValidationError(ModelError):
    pass


TOP_KEYS = {"title", "nodes", "elements", "supports", "loads", "monitors", "solver", "sections"}
SOLVER_KEYS = {"psi", "dlambda", "tol", "max_iter", "max_steps"}
TRUSS_KEYS = {"type", "strain", "A", "E"}
BEAM_KEYS = {"type", "A", "I", "E", "nu", "kappa"}


def parse_model(text: str) -> tuple[Model, SolverConfig]:
    """Parse and validate a model file; returns the model and its solver settings."""
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        msg = str(exc).split(" (at line")[0]
        raise ParseError(msg, getattr(exc, "lineno", None), getattr(exc, "colno", None)) from None

    _no_unknown(doc, TOP_KEYS, "top level")
    for key in ("nodes", "elements", "sections"):
        if key not in doc:
            raise ValidationError(f"missing required entry {key!r}")

    solver = doc.get("solver", {})
    _no_unknown(solver, SOLVER_KEYS, "[solver]")
    try:
        config = SolverConfig(**solver)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"[solver]: {exc}") from None

    sections = {}
    for name, props in doc["sections"].items():
        kind = props.get("type")
        if kind == "truss":
            _no_unknown(props, TRUSS_KEYS, f"section {name!r}")
            sections[name] = ("truss", {k: v for k, v in props.items() if k != "type"})
        elif kind == "beam2d":
            _no_unknown(props, BEAM_KEYS, f"section {name!r}")
            sections[name] = ("beam2d", {k: v for k, v in props.items() if k != "type"})
        else:
            raise ValidationError(f"section {name!r} has unknown type {kind!r}")

    ids = []
    coords = []
    for row in doc["nodes"]:
        if len(row) not in (3, 4) or not isinstance(row[0], int):
            raise ValidationError(f"node entry {row!r} must be [id, X, Y] or [id, X, Y, Z]")
        ids.append(row[0])
        coords.append([float(x) for x in row[1:]] + [0.0] * (4 - len(row)))
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise ValidationError(f"duplicate node id {dup}")
    if sorted(ids) != list(range(len(ids))):
        raise ValidationError("node ids must be contiguous from 0")
    order = np.argsort(ids)
    coords = np.array(coords)[order]

    elements = []
    for k, row in enumerate(doc["elements"]):
        if len(row) != 3:
            raise ValidationError(f"element {k}: expected [node, node, section]")
        n1, n2, sec = row
        for n in (n1, n2):
            if not (isinstance(n, int) and 0 <= n < len(ids)):
                raise ValidationError(f"element {k} references missing node {n}")
        if sec not in sections:
            raise ValidationError(f"element {k} references unknown section {sec!r}")
        kind, props = sections[sec]
        try:
            if kind == "truss":
                elements.append(TrussElement((n1, n2), **props))
            else:
                elements.append(Beam2DElement((n1, n2), **props))
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"element {k} (section {sec!r}): {exc}") from None

    supports = [(row[0], tuple(row[1:])) for row in doc.get("supports", [])]
    loads = [tuple(row) for row in doc.get("loads", [])]
    monitors = [tuple(row) for row in doc.get("monitors", [])]
    for row in loads:
        if len(row) != 3:
            raise ValidationError(f"load entry {list(row)!r} must be [node, component, value]")
    for row in monitors:
        if len(row) != 2:
            raise ValidationError(f"monitor entry {list(row)!r} must be [node, component]")

    try:
        model = Model.build(
            coords, elements, supports, loads, monitors, title=doc.get("title", "")
        )
    except ModelError as exc:
        raise ValidationError(str(exc)) from None
    return model, config


def load_model(path) -> tuple[Model, SolverConfig]:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


def _no_unknown(table, allowed, where):
    extra = set(table) - allowed
    if extra:
        raise ValidationError(f"unknown key(s) {sorted(extra)} in {where}")


def _num(x) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    return repr(x)


def _str(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_model(model: Model, config: SolverConfig) -> str:
    """Canonical model-file text; ``parse_model`` of it rebuilds the same model."""
    sections: dict = {}
    el_rows = []
    for el in model.elements:
        if isinstance(el, TrussElement):
            key = ("truss", el.strain, el.A, el.E)
        else:
            key = ("beam2d", el.A, el.I, el.E, el.nu, el.kappa)
        name = sections.setdefault(key, f"s{len(sections)}")
        el_rows.append(f"  [{el.nodes[0]}, {el.nodes[1]}, {_str(name)}],")

    out = [f"title = {_str(model.title)}", "nodes = ["]
    for i, (x, y, z) in enumerate(model.coords):
        out.append(f"  [{i}, {_num(x)}, {_num(y)}, {_num(z)}],")
    out += ["]", "elements = ["] + el_rows + ["]", "supports = ["]
    for node, comps in model.supports:
        out.append("  [" + ", ".join([str(node)] + [_str(c) for c in comps]) + "],")
    out += ["]", "loads = ["]
    for node, comp, value in model.loads:
        out.append(f"  [{node}, {_str(comp)}, {_num(value)}],")
    out += ["]", "monitors = ["]
    for node, comp in model.monitors:
        out.append(f"  [{node}, {_str(comp)}],")
    out += [
        "]",
        "",
        "[solver]",
        f"psi = {_num(config.psi)}",
        f"dlambda = {_num(config.dlambda)}",
        f"tol = {_num(config.tol)}",
        f"max_iter = {int(config.max_iter)}",
        f"max_steps = {int(config.max_steps)}",
    ]
    for key, name in sections.items():
        out += ["", f"[sections.{name}]"]
        if key[0] == "truss":
            out += ['type = "truss"', f"strain = {_str(key[1])}", f"A = {_num(key[2])}", f"E = {_num(key[3])}"]
        else:
            out += ['type = "beam2d"'] + [
                f"{k} = {_num(v)}" for k, v in zip(("A", "I", "E", "nu", "kappa"), key[1:])
            ]
    return "\n".join(out) + "\n"


def monitor_labels(monitors) -> list[str]:
    return [f"n{node}_{comp}" for node, comp in monitors]


def path_csv(path: EquilibriumPath) -> str:
    """Comma-separated path table, one row per converged step."""
    if not path.records:
        raise ValueError("empty path")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "lambda", "ds", "iterations", "restarts"] + monitor_labels(path.monitors))
    restarts = 0
    last = 0
    for r in path.records:
        if r.step <= last:
            raise ValueError("path records out of order")
        last = r.step
        restarts += r.restarts
        w.writerow(
            [r.step, _g(r.lam), _g(r.ds), r.iterations, restarts] + [_g(v) for v in r.monitors]
        )
    return buf.getvalue()


def shape_csv(model: Model, u) -> str:
    """Reference and current nodal coordinates (plus rotation where carried)."""
    full = model.nodal_values(u)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["node", "X", "Y", "Z", "x", "y", "z", "rz"])
    for i, (X, d) in enumerate(zip(model.coords, full)):
        cur = X + d[:3]
        w.writerow([i] + [_g(v) for v in X] + [_g(v) for v in cur] + [_g(d[COMPONENT_INDEX["rz"]])])
    return buf.getvalue()


def write_path(path: EquilibriumPath, destination) -> str:
    return _write(path_csv(path), destination)


def write_deformed_shape(model: Model, u, destination) -> str:
    return _write(shape_csv(model, u), destination)


def _write(text, destination):
    if destination is not None:
        with open(os.fspath(destination), "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def _g(x) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to write non-finite value {x}")
    return f"{x:.17g}"
