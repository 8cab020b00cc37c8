"""Sparse exact linear algebra over cyclotomic fields.

Vectors are plain dicts ``key -> CyclotomicScalar`` with sortable keys.
Rows are stored with their minimal key as pivot, so reducing a vector only
ever introduces larger keys and elimination terminates.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Optional

from .scalars import CyclotomicScalar

Vector = dict


def axpy(target: dict, coeff: CyclotomicScalar, source: dict) -> None:
    """target += coeff * source, in place, pruning zeros."""
    for k, v in source.items():
        c = target.get(k)
        nv = coeff * v if c is None else c + coeff * v
        if nv.is_zero():
            target.pop(k, None)
        else:
            target[k] = nv


class Echelon:
    """Incremental row echelon form with optional provenance tags.

    ``tag`` vectors track which input combination produced each row; this is
    what :func:`nullspace` reads off for dependent inputs.
    """

    def __init__(self):
        self.rows: dict[Hashable, tuple[dict, Optional[dict]]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, tag: Optional[dict] = None) -> tuple[dict, Optional[dict]]:
        vec = dict(vec)
        tag = None if tag is None else dict(tag)
        while True:
            hits = [k for k in vec if k in self.rows]
            if not hits:
                return vec, tag
            p = min(hits)
            c = vec[p]
            row, rtag = self.rows[p]
            axpy(vec, -c, row)
            if tag is not None and rtag is not None:
                axpy(tag, -c, rtag)

    def add(self, vec: dict, tag: Optional[dict] = None) -> tuple[bool, Optional[dict]]:
        """Insert; returns (independent, residual tag).  For a dependent
        input the residual tag is a relation among the inputs."""
        vec, tag = self.reduce(vec, tag)
        if not vec:
            return False, tag
        p = min(vec)
        inv = vec[p].inverse()
        row = {k: v * inv for k, v in vec.items()}
        rtag = None if tag is None else {k: v * inv for k, v in tag.items()}
        self.rows[p] = (row, rtag)
        return True, None

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]


def rank(vectors: Iterable[dict]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def nullspace(columns: Iterable[tuple[Hashable, dict]]) -> list[dict]:
    """Kernel of the linear map sending basis label -> image vector.

    Returns a basis of the kernel as dicts label -> coefficient.
    """
    e = Echelon()
    kernel = []
    for label, image in columns:
        one = CyclotomicScalar.one()
        independent, relation = e.add(image, {label: one})
        if not independent:
            kernel.append(relation)
    return kernel


def span_equal(a: Iterable[dict], b: Iterable[dict]) -> bool:
    a, b = list(a), list(b)
    ea, eb = Echelon(), Echelon()
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(v) for v in b)
