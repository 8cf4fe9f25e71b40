"""H_{S^{2i}}-equivariant A-bimodules."""

from __future__ import annotations

import logging
from typing import List, Mapping, Optional, Sequence

from ..core.field import Scalar
from ..core.linalg import LinearMap, Subspace, Vec, vec_axpy
from ..core.modules import Bimodule, LeftModule
from ..core.report import CheckReport
from ..smash.action import ModuleAlgebraAction
from ..smash.delta import DeltaAlgebra
from .exceptions import EquivariantError, IndexMismatchError


class EquivariantBimodule:
    """An A-bimodule D with an H-action such that

        h⇀(a m b) = (h_1⇀a)(h_2⇀m)(S^{2i}(h_3)⇀b).

    ``h_ops[h]`` is the matrix of m -> e_h⇀m. The index i is part of the
    object; the same data read at another index is a different object.

    Raises:
        EquivariantError: the bimodule is not over the acted-on algebra or the operators have the wrong shape
        NotInvertibleError: i < 0 and the antipode is singular
    """

    def __init__(self, action: ModuleAlgebraAction, bimodule: Bimodule, h_ops: Sequence[LinearMap],
                 index: int = 0, name: str = ""):
        A, H = action.algebra, action.hopf
        if bimodule.left_algebra.dim != A.dim or bimodule.right_algebra.dim != A.dim:
            raise EquivariantError(f"{bimodule.name} is not a bimodule over {A.name}")
        if len(h_ops) != H.dim:
            raise EquivariantError(f"Expected {H.dim} H-action matrices, got {len(h_ops)}")
        for op in h_ops:
            if op.shape != (bimodule.dim, bimodule.dim):
                raise EquivariantError(f"H-action matrix of shape {op.shape} on dimension {bimodule.dim}")
        self.action = action
        self.bimodule = bimodule
        self.h_ops = list(h_ops)
        self.index = index
        self.name = name or bimodule.name
        self.twist = H.antipode_power(2 * index)
        self.logger = logging.getLogger(f"smashcalc.equivariant.{self.__class__.__name__.lower()}")

    # --- constructors -------------------------------------------------------

    @classmethod
    def regular(cls, action: ModuleAlgebraAction, index: int = 0) -> "EquivariantBimodule":
        """A over itself with the defining action."""
        A = action.algebra
        return cls(action, Bimodule.regular(A), action.operators, index=index, name=A.name)

    @classmethod
    def twisted(cls, action: ModuleAlgebraAction, mu: LinearMap, index: int = 0,
                name: str = "") -> "EquivariantBimodule":
        """A^μ: a·x·b = a x μ(b), with the defining action on the underlying space."""
        A = action.algebra
        bimodule = Bimodule.twisted(A, mu, name=name or f"{A.name}^μ")
        return cls(action, bimodule, action.operators, index=index, name=bimodule.name)

    @classmethod
    def trivial(cls, action: ModuleAlgebraAction, bimodule: Bimodule, index: int = 0) -> "EquivariantBimodule":
        """h⇀m = ε(h) m."""
        H = action.hopf
        ops = [LinearMap.identity(H.field, bimodule.dim).scale(H.counit[h]) for h in range(H.dim)]
        return cls(action, bimodule, ops, index=index, name=f"{bimodule.name} (trivial H)")

    # --- accessors ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.bimodule.dim

    @property
    def field(self):
        return self.action.field

    @property
    def hopf(self):
        return self.action.hopf

    @property
    def algebra(self):
        return self.action.algebra

    @property
    def labels(self) -> List[str]:
        return self.bimodule.labels

    def h_operator(self, h: Mapping[int, Scalar]) -> LinearMap:
        cols: List[Vec] = [dict() for _ in range(self.dim)]
        for i, c in h.items():
            for k, col in enumerate(self.h_ops[i].cols):
                vec_axpy(cols[k], c, col)
        return LinearMap(self.field, self.dim, self.dim, cols)

    def h_act(self, h: Mapping[int, Scalar], m: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for i, c in h.items():
            vec_axpy(out, c, self.h_ops[i](m))
        return out

    def three_sided(self, a: Mapping[int, Scalar], m: Mapping[int, Scalar], b: Mapping[int, Scalar]) -> Vec:
        """a m b."""
        return self.bimodule.act_left(a, self.bimodule.act_right(m, b))

    def with_index(self, index: int) -> "EquivariantBimodule":
        """The same actions read at another index."""
        return EquivariantBimodule(self.action, self.bimodule, self.h_ops, index=index, name=self.name)

    # --- verification -------------------------------------------------------

    def _equivariant_at(self, h: int, a: int, m: int, b: int) -> bool:
        A = self.algebra
        ops = self.action.operators
        lhs = self.h_ops[h](self.three_sided(A.e(a), {m: self.field.one}, A.e(b)))
        rhs: Vec = {}
        for (h1, h2, h3), c in self.hopf.basis_legs(h, 3).items():
            moved = self.action.act(self.twist.cols[h3], A.e(b))
            vec_axpy(rhs, c, self.three_sided(ops[h1].cols[a], self.h_ops[h2].cols[m], moved))
        return lhs == rhs

    def check(self) -> CheckReport:
        """Bimodule axioms, H-module axioms and the index-i equivariance law."""
        H, A = self.hopf, self.algebra
        report = CheckReport(f"equivariant bimodule {self.name} (index {self.index})")
        report.extend(self.bimodule.check())
        rh = range(H.dim)
        report.record("H unit acts trivially", self.h_operator(H.unit).is_identity())
        report.sweep(
            "H-module associativity",
            ((h, k) for h in rh for k in rh),
            lambda h, k: self.h_operator(H.algebra.basis_product(h, k)) == self.h_ops[h].compose(self.h_ops[k]),
        )
        report.sweep(
            "equivariance",
            ((h, a, m, b) for h in rh for a in range(A.dim) for m in range(self.dim) for b in range(A.dim)),
            self._equivariant_at,
        )
        return report

    def delta_module(self, delta: Optional[DeltaAlgebra] = None) -> LeftModule:
        """D as a left Δ_i-module: (a⊗b⊗h)·m = a(h⇀m)b.

        Raises:
            IndexMismatchError: ``delta`` has another index or action
        """
        if delta is None:
            delta = DeltaAlgebra(self.action, self.index)
        elif delta.index != self.index or delta.action is not self.action:
            raise IndexMismatchError(f"Δ{delta.index} cannot act on {self.name} of index {self.index}")
        A, m, n = self.algebra, self.hopf.dim, self.algebra.dim

        def act(i: int, k: int) -> Vec:
            ab, h = divmod(i, m)
            a, b = divmod(ab, n)
            return self.three_sided(A.e(a), self.h_ops[h].cols[k], A.e(b))

        return LeftModule.from_function(delta.algebra, self.dim, act, name=f"{self.name} over Δ{self.index}",
                                        labels=self.labels)

    # --- constructions ------------------------------------------------------

    def direct_sum(self, other: "EquivariantBimodule") -> "EquivariantBimodule":
        """D ⊕ D'.

        Raises:
            IndexMismatchError: different actions or indices
        """
        if other.action is not self.action or other.index != self.index:
            raise IndexMismatchError(f"Cannot add {self.name} (index {self.index}) and {other.name} (index {other.index})")
        n = self.dim
        total = n + other.dim
        ops = []
        for P, Q in zip(self.h_ops, other.h_ops):
            cols = [dict(c) for c in P.cols] + [{n + i: x for i, x in c.items()} for c in Q.cols]
            ops.append(LinearMap(self.field, total, total, cols))
        return EquivariantBimodule(self.action, self.bimodule.direct_sum(other.bimodule), ops, index=self.index,
                                   name=f"{self.name}⊕{other.name}")

    def restrict(self, vectors: Sequence[Mapping[int, Scalar]], name: str = "") -> "EquivariantBimodule":
        """The sub-bimodule on the span of ``vectors``, which must be stable under every action.

        Raises:
            EquivariantError: the span is not stable
        """
        W = Subspace(self.field, self.dim, vectors)
        B = self.bimodule

        def restricted(op: LinearMap) -> LinearMap:
            cols = []
            for v in W.basis:
                image = op(v)
                if not W.contains(image):
                    raise EquivariantError(f"Span of {len(W.basis)} vectors is not stable in {self.name}")
                cols.append(W.coordinates(image))
            return LinearMap(self.field, W.dim, W.dim, cols)

        sub = Bimodule(B.left_algebra, B.right_algebra, W.dim, [restricted(P) for P in B.left],
                       [restricted(P) for P in B.right], name=name or f"sub({self.name})")
        return EquivariantBimodule(self.action, sub, [restricted(P) for P in self.h_ops], index=self.index,
                                   name=sub.name)

    def __repr__(self) -> str:
        return f"EquivariantBimodule({self.name}, dim={self.dim}, index={self.index})"


def check_equivariant(D: EquivariantBimodule, i: Optional[int] = None) -> CheckReport:
    """Evaluate the equivariance law of D at index i (D's own index by default)."""
    if i is not None and i != D.index:
        D = D.with_index(i)
    return D.check()
