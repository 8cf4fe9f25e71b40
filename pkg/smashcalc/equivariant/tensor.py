"""Balanced tensor products M ⊗_B N as quotients of M ⊗ N."""

from __future__ import annotations

import logging
from typing import Callable, List, Mapping

from ..core.algebra import tensor_vectors
from ..core.field import Scalar
from ..core.linalg import LinearMap, Subspace, Vec, vec_axpy, vec_sub
from ..core.modules import Bimodule
from ..core.report import CheckReport
from .bimodule import EquivariantBimodule
from .exceptions import EquivariantError, IndexMismatchError

logger = logging.getLogger(__name__)


class BalancedTensor:
    """M ⊗_B N for an A-B-bimodule M and a B-C-bimodule N.

    The ambient space M ⊗ N has index p * dim N + q. The relations
    m·b ⊗ n - m ⊗ b·n are taken for b running over generators of B, which
    spans the same subspace as all of B. ``lift`` is the stored section of
    the projection.

    Raises:
        EquivariantError: the middle algebras differ in dimension
    """

    def __init__(self, left: Bimodule, right: Bimodule, name: str = ""):
        if left.right_algebra.dim != right.left_algebra.dim:
            raise EquivariantError(f"Cannot tensor {left.name} with {right.name} over different algebras")
        self.left = left
        self.right = right
        self.field = left.field
        self.name = name or f"{left.name}⊗{right.name}"
        self.logger = logging.getLogger(f"smashcalc.equivariant.{self.__class__.__name__.lower()}")
        B = left.right_algebra
        n = right.dim
        relations: List[Vec] = []
        for g in B.generators():
            R = left.right_operator(g)
            L = right.left_operator(g)
            for p in range(left.dim):
                for q in range(right.dim):
                    mb = tensor_vectors(R.cols[p], {q: self.field.one}, n)
                    bn = tensor_vectors({p: self.field.one}, L.cols[q], n)
                    relations.append(vec_sub(mb, bn, self.field.domain))
        self.relations = Subspace(self.field, left.dim * n, relations)
        self.bimodule = Bimodule(
            left.left_algebra, right.right_algebra, self.dim,
            [self.induced(lambda v, P=P: self._on_left(P, v)) for P in left.left],
            [self.induced(lambda v, P=P: self._on_right(P, v)) for P in right.right],
            name=self.name,
        )
        self.logger.debug(f"{self.name}: ambient {left.dim * n}, relations {self.relations.dim}, quotient {self.dim}")

    @property
    def dim(self) -> int:
        return self.relations.codim

    @property
    def ambient_dim(self) -> int:
        return self.left.dim * self.right.dim

    def project(self, v: Mapping[int, Scalar]) -> Vec:
        return self.relations.quotient_coordinates(v)

    def lift(self, k: int) -> Vec:
        return self.relations.quotient_lift(k)

    def element(self, m: Mapping[int, Scalar], n: Mapping[int, Scalar]) -> Vec:
        """The class of m ⊗ n."""
        return self.project(tensor_vectors(m, n, self.right.dim))

    def _on_left(self, P: LinearMap, v: Mapping[int, Scalar]) -> Vec:
        n = self.right.dim
        out: Vec = {}
        for idx, c in v.items():
            p, q = divmod(idx, n)
            vec_axpy(out, c, tensor_vectors(P.cols[p], {q: self.field.one}, n))
        return out

    def _on_right(self, P: LinearMap, v: Mapping[int, Scalar]) -> Vec:
        n = self.right.dim
        out: Vec = {}
        for idx, c in v.items():
            p, q = divmod(idx, n)
            vec_axpy(out, c, tensor_vectors({p: self.field.one}, P.cols[q], n))
        return out

    def induced(self, f: Callable[[Vec], Vec]) -> LinearMap:
        """The endomorphism of the quotient induced by an ambient map preserving the relations."""
        return LinearMap(self.field, self.dim, self.dim, [self.project(f(self.lift(k))) for k in range(self.dim)])

    def descend(self, f: Callable[[Vec], Vec], target_dim: int) -> LinearMap:
        """The map out of the quotient induced by an ambient map killing the relations."""
        return LinearMap(self.field, self.dim, target_dim, [f(self.lift(k)) for k in range(self.dim)])

    def preserves_relations(self, f: Callable[[Vec], Vec]) -> bool:
        return all(self.relations.contains(f(r)) for r in self.relations.basis)

    def kills_relations(self, f: Callable[[Vec], Vec]) -> bool:
        return all(not f(r) for r in self.relations.basis)

    def __repr__(self) -> str:
        return f"BalancedTensor({self.name}, dim={self.dim})"


def tensor_h_action(D: EquivariantBimodule, D2: EquivariantBimodule, h: int, v: Mapping[int, Scalar]) -> Vec:
    """h⇀(d⊗d') = h_1⇀d ⊗ S^{2i}(h_2)⇀d' on the ambient D ⊗ D'."""
    H = D.hopf
    n = D2.dim
    out: Vec = {}
    for idx, c in v.items():
        p, q = divmod(idx, n)
        for (h1, h2), x in H.comul[h].items():
            left = D.h_ops[h1].cols[p]
            right = D2.h_act(D.twist.cols[h2], {q: D.field.one})
            vec_axpy(out, c * x, tensor_vectors(left, right, n))
    return out


class EquivariantTensor(EquivariantBimodule):
    """D ⊗_A D' at index i + j, keeping the quotient for element chasing."""

    def __init__(self, D: EquivariantBimodule, D2: EquivariantBimodule):
        if D2.action is not D.action:
            raise IndexMismatchError(f"{D.name} and {D2.name} come from different actions")
        tensor = BalancedTensor(D.bimodule, D2.bimodule, name=f"{D.name}⊗_A{D2.name}")
        self.tensor = tensor
        self.factors = (D, D2)
        self.h_stable = all(tensor.preserves_relations(lambda v, h=h: tensor_h_action(D, D2, h, v))
                            for h in range(D.hopf.dim))
        ops = [tensor.induced(lambda v, h=h: tensor_h_action(D, D2, h, v)) for h in range(D.hopf.dim)]
        super().__init__(D.action, tensor.bimodule, ops, index=D.index + D2.index, name=tensor.name)

    def element(self, d: Mapping[int, Scalar], d2: Mapping[int, Scalar]) -> Vec:
        return self.tensor.element(d, d2)

    def check(self) -> CheckReport:
        report = CheckReport(f"equivariant bimodule {self.name} (index {self.index})")
        report.record("H-action well defined on the quotient", self.h_stable)
        report.extend(super().check())
        return report


def tensor_equivariant(D: EquivariantBimodule, D2: EquivariantBimodule) -> EquivariantTensor:
    """D ⊗_A D' with h⇀(d⊗d') = h_1⇀d ⊗ S^{2i}(h_2)⇀d', of index i + j.

    Raises:
        IndexMismatchError: the factors come from different actions
    """
    return EquivariantTensor(D, D2)


def associator(D: EquivariantBimodule, D2: EquivariantBimodule, D3: EquivariantBimodule) -> LinearMap:
    """The canonical map (D⊗D')⊗D'' -> D⊗(D'⊗D'') on the quotients.

    Raises:
        EquivariantError: the ambient map does not descend
    """
    first = EquivariantTensor(D, D2)
    left = EquivariantTensor(first, D3)
    second = EquivariantTensor(D2, D3)
    right = EquivariantTensor(D, second)
    n2, n3 = D2.dim, D3.dim

    def reassociate(v: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for idx, c in v.items():
            k, r = divmod(idx, n3)
            for amb, x in first.tensor.lift(k).items():
                p, q = divmod(amb, n2)
                vec_axpy(out, c * x, right.element({p: D.field.one}, second.element({q: D.field.one}, {r: D.field.one})))
        return out

    if not left.tensor.kills_relations(reassociate):
        raise EquivariantError("Reassociation does not respect the balancing relations")
    return left.tensor.descend(reassociate, right.dim)
