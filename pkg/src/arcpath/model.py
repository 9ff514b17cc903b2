"""Mesh, DOF numbering and global assembly on the free DOFs.

Every node carries the union of the components required by the elements
attached to it: trusses use ``ux, uy, uz`` and planar beams ``ux, uy, rz``.
Supports are homogeneous and removed from the system by reduction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .elements import ElementResponse

COMPONENTS = ("ux", "uy", "uz", "rz")
COMPONENT_INDEX = {c: i for i, c in enumerate(COMPONENTS)}


class ModelError(ValueError):
    """Inconsistent model definition (names the offending entity)."""


@dataclass(frozen=True)
class DofMap:
    """``eq[node, comp]`` is the free equation number, or -1 when the
    component is fixed or not carried by the node."""

    eq: np.ndarray
    active: np.ndarray

    @property
    def n_free(self) -> int:
        return int(self.eq.max()) + 1 if self.eq.size else 0

    def index(self, node: int, comp: str) -> int:
        return int(self.eq[node, COMPONENT_INDEX[comp]])

    def element_dofs(self, elem) -> np.ndarray:
        cols = [COMPONENT_INDEX[c] for c in elem.dof_components]
        return np.concatenate([self.eq[n, cols] for n in elem.nodes])


@dataclass(frozen=True)
class GlobalResponse:
    F_int: np.ndarray
    K: np.ndarray


@dataclass(frozen=True, eq=False)
class Model:
    coords: np.ndarray
    elements: tuple
    dofs: DofMap
    F_ext: np.ndarray
    monitors: tuple[tuple[int, str], ...] = ()
    supports: tuple[tuple[int, tuple[str, ...]], ...] = ()
    loads: tuple[tuple[int, str, float], ...] = ()
    title: str = ""
    _element_dofs: tuple = field(default=(), repr=False)

    @classmethod
    def build(cls, coords, elements, supports=(), loads=(), monitors=(), title=""):
        """Number the DOFs and build the reference load vector.

        ``supports`` is a sequence of ``(node, components)``, ``loads`` of
        ``(node, component, value)`` and ``monitors`` of ``(node, component)``.
        """
        coords = np.array(coords, dtype=float)
        if coords.ndim != 2 or coords.shape[1] not in (2, 3):
            raise ModelError(f"node coordinates must be (n, 2) or (n, 3), got {coords.shape}")
        if coords.shape[1] == 2:
            coords = np.column_stack([coords, np.zeros(len(coords))])
        n_nodes = len(coords)
        elements = tuple(elements)
        if not elements:
            raise ModelError("model has no elements")

        active = np.zeros((n_nodes, len(COMPONENTS)), dtype=bool)
        for k, el in enumerate(elements):
            for n in el.nodes:
                if not 0 <= n < n_nodes:
                    raise ModelError(f"element {k} references missing node {n}")
            if el.nodes[0] == el.nodes[1]:
                raise ModelError(f"element {k} connects node {el.nodes[0]} to itself")
            for c in el.dof_components:
                active[list(el.nodes), COMPONENT_INDEX[c]] = True

        free = active.copy()
        norm_supports = []
        for node, comps in supports:
            comps = (comps,) if isinstance(comps, str) else tuple(comps)
            _check_node(node, n_nodes, "support")
            for c in comps:
                _check_comp(c, "support")
                free[node, COMPONENT_INDEX[c]] = False
            norm_supports.append((int(node), comps))

        eq = -np.ones_like(free, dtype=int)
        eq[free] = np.arange(int(free.sum()))
        dofs = DofMap(eq, active)
        if dofs.n_free == 0:
            raise ModelError("model has no free DOF")

        F = np.zeros(dofs.n_free)
        norm_loads = []
        for node, comp, value in loads:
            _check_node(node, n_nodes, "load")
            _check_comp(comp, "load")
            i = dofs.index(node, comp)
            if i < 0:
                raise ModelError(f"load on node {node} component {comp} which is not free")
            F[i] += value
            norm_loads.append((int(node), comp, float(value)))

        for node, comp in monitors:
            _check_node(node, n_nodes, "monitor")
            _check_comp(comp, "monitor")
            if not active[node, COMPONENT_INDEX[comp]]:
                raise ModelError(f"monitor on node {node} component {comp} which the node does not carry")

        el_dofs = tuple(dofs.element_dofs(el) for el in elements)
        return cls(
            coords,
            elements,
            dofs,
            F,
            tuple((int(n), c) for n, c in monitors),
            tuple(norm_supports),
            tuple(norm_loads),
            title,
            el_dofs,
        )

    @property
    def n_free(self) -> int:
        return self.dofs.n_free

    @property
    def span(self) -> float:
        return float(np.max(np.ptp(self.coords, axis=0)))

    def nodal_values(self, u) -> np.ndarray:
        """Scatter a free-DOF vector to an ``(n_nodes, 4)`` table; fixed entries are 0."""
        u = np.asarray(u, dtype=float)
        full = np.zeros(self.dofs.eq.shape)
        mask = self.dofs.eq >= 0
        full[mask] = u[self.dofs.eq[mask]]
        return full

    def monitor_values(self, u) -> np.ndarray:
        full = self.nodal_values(u)
        return np.array([full[n, COMPONENT_INDEX[c]] for n, c in self.monitors])

    @cached_property
    def _groups(self) -> tuple:
        return _build_groups(self)

    def element_response(self, k: int, u) -> ElementResponse:
        el = self.elements[k]
        idx = self._element_dofs[k]
        ue = np.where(idx >= 0, np.asarray(u)[np.maximum(idx, 0)], 0.0)
        return el.response(self.coords[list(el.nodes)], ue)


def _check_node(node, n_nodes, what):
    if not (isinstance(node, (int, np.integer)) and 0 <= node < n_nodes):
        raise ModelError(f"{what} references missing node {node}")


def _check_comp(comp, what):
    if comp not in COMPONENT_INDEX:
        raise ModelError(f"{what} uses unknown component {comp!r}")


def assemble(model: Model, u) -> GlobalResponse:
    """Internal force and tangent stiffness restricted to the free DOFs."""
    u = np.asarray(u, dtype=float)
    n = model.n_free
    if u.shape != (n,):
        raise ValueError(f"displacement of shape {u.shape}, expected ({n},)")
    # slot n collects contributions of fixed DOFs and is dropped
    u_ext = np.append(u, 0.0)
    F = np.zeros(n + 1)
    K = np.zeros((n + 1) * (n + 1))
    for group in model._groups:
        f, k = group.kind.batch(group.elements, group.coords, u_ext[group.idx])
        F += np.bincount(group.idx.ravel(), weights=f.ravel(), minlength=n + 1)
        K += np.bincount(group.flat, weights=k.ravel(), minlength=(n + 1) * (n + 1))
    return GlobalResponse(F[:n], K.reshape(n + 1, n + 1)[:n, :n])


@dataclass(frozen=True)
class _Group:
    kind: type
    elements: list
    coords: np.ndarray
    idx: np.ndarray
    flat: np.ndarray


def _build_groups(model: Model) -> tuple:
    n = model.n_free
    by_kind: dict = {}
    for k, el in enumerate(model.elements):
        by_kind.setdefault(type(el), []).append(k)
    groups = []
    for kind, ks in by_kind.items():
        elements = [model.elements[k] for k in ks]
        idx = np.array([model._element_dofs[k] for k in ks])
        idx = np.where(idx >= 0, idx, n)
        coords = model.coords[np.array([el.nodes for el in elements])]
        flat = (idx[:, :, None] * (n + 1) + idx[:, None, :]).ravel()
        groups.append(_Group(kind, elements, coords, idx, flat))
    return tuple(groups)


def residual(model: Model, u, lam: float) -> np.ndarray:
    return assemble(model, u).F_int - lam * model.F_ext
