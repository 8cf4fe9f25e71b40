"""The smash product Λ = A♯H."""

from __future__ import annotations

import logging
from typing import Dict, Mapping, Tuple

from ..core.algebra import AlgebraMorphism, FinDimAlgebra, tensor_vectors
from ..core.field import Scalar
from ..core.linalg import Subspace, Vec, vec_axpy
from ..core.report import CheckReport
from . import config
from .action import ModuleAlgebraAction
from .exceptions import ActionError

logger = logging.getLogger(__name__)


def _label(a: str, h: str) -> str:
    if h == "1":
        return a
    if a == "1":
        return h
    return f"{a}#{h}"


class SmashAlgebra:
    """A♯H on the basis a#h with index a * dim H + h.

    The product is (a#h)(b#k) = a(h_1⇀b) # h_2 k.
    """

    def __init__(self, action: ModuleAlgebraAction):
        self.action = action
        self.hopf = action.hopf
        self.base = action.algebra
        self.field = action.field
        self.logger = logging.getLogger(f"smashcalc.smash.{self.__class__.__name__.lower()}")
        H, A = self.hopf, self.base
        m = H.dim
        labels = [_label(A.labels[a], H.labels[h]) for a in range(A.dim) for h in range(m)]
        mul: Dict[Tuple[int, int], Vec] = {}
        for a in range(A.dim):
            for h in range(m):
                for b in range(A.dim):
                    moved = [(c, action.operators[j].cols[b], k) for (j, k), c in H.comul[h].items()]
                    for k in range(m):
                        out: Vec = {}
                        for c, hb, h2 in moved:
                            left = A.product(A.e(a), hb)
                            right = H.algebra.basis_product(h2, k)
                            if left and right:
                                vec_axpy(out, c, tensor_vectors(left, right, m))
                        if out:
                            mul[(a * m + h, b * m + k)] = out
        degrees = [A.degrees[a] for a in range(A.dim) for _ in range(m)] if A.degrees is not None else None
        overflow = {(a * m + h, b * m + k) for (a, b) in A.overflow for h in range(m) for k in range(m)}
        gens = [tensor_vectors(g, H.unit, m) for g in A.generators()]
        gens += [tensor_vectors(A.unit, g, m) for g in H.algebra.generators()]
        self.algebra = FinDimAlgebra(self.field, labels, mul, tensor_vectors(A.unit, H.unit, m),
                                     degrees=degrees, truncation=A.truncation, overflow=overflow,
                                     name=f"{A.name}#{H.name}", generators=gens)
        self.embed_base = AlgebraMorphism(A, self.algebra, [tensor_vectors(A.e(a), H.unit, m) for a in range(A.dim)],
                                          name=f"{A.name}->{self.algebra.name}")
        self.embed_hopf = AlgebraMorphism(H.algebra, self.algebra, [tensor_vectors(A.unit, H.e(h), m) for h in range(m)],
                                          name=f"{H.name}->{self.algebra.name}")
        self.logger.debug(f"Built {self.algebra.name} of dimension {self.algebra.dim}")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def element(self, a: Mapping[int, Scalar], h: Mapping[int, Scalar]) -> Vec:
        """The element a#h."""
        return tensor_vectors(a, h, self.hopf.dim)

    def index(self, a: int, h: int) -> int:
        return a * self.hopf.dim + h

    def product(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vec:
        return self.algebra.product(u, v)

    def verify(self) -> CheckReport:
        """Associativity, both embeddings, the commutation law h·b = (h_1⇀b)h_2, generation."""
        report = CheckReport(f"smash product {self.algebra.name}")
        if self.dim <= config.VERIFY_MAX_DIM:
            report.extend(self.algebra.check())
        else:
            report.skip("associativity", f"triple sweep skipped above dimension {config.VERIFY_MAX_DIM}")
        H, A = self.hopf, self.base
        report.extend(self.embed_base.check(), prefix="base embedding ")
        report.extend(self.embed_hopf.check(), prefix="hopf embedding ")
        report.record("embeddings injective", self.embed_base.rank() == A.dim and self.embed_hopf.rank() == H.dim)
        report.sweep(
            "commutation",
            ((h, b) for h in range(H.dim) for b in range(A.dim)),
            lambda h, b: self.product(self.embed_hopf.cols[h], self.embed_base.cols[b]) == self._moved_past(h, b),
        )
        report.sweep(
            "factorisation",
            ((a, h) for a in range(A.dim) for h in range(H.dim)),
            lambda a, h: self.product(self.embed_base.cols[a], self.embed_hopf.cols[h]) == {self.index(a, h): self.field.one},
        )
        generated = self.algebra.span_closure(self.embed_base.cols + self.embed_hopf.cols)
        report.record("generated by A and H", generated.dim == self.dim,
                      detail=f"span {generated.dim} of {self.dim}")
        return report

    def _moved_past(self, h: int, b: int) -> Vec:
        out: Vec = {}
        for (j, k), c in self.hopf.comul[h].items():
            term = self.product(self.embed_base(self.action.operators[j].cols[b]), self.embed_hopf.cols[k])
            vec_axpy(out, c, term)
        return out

    def generated_subspace(self) -> Subspace:
        return self.algebra.span_closure(self.embed_base.cols + self.embed_hopf.cols)

    def __repr__(self) -> str:
        return f"SmashAlgebra({self.algebra.name}, dim={self.dim})"


def smash_product(action: ModuleAlgebraAction, check: bool = True) -> SmashAlgebra:
    """Build A♯H; the action is validated first unless ``check`` is False.

    Raises:
        ActionError: the action fails the module-algebra axioms
    """
    if check:
        report = action.check()
        if not report.passed:
            failed = ", ".join(c.name for c in report.failures())
            raise ActionError(f"{action.name} is not a module algebra action: {failed}")
    return SmashAlgebra(action)
