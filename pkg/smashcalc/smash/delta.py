"""The algebras Δ_i on A ⊗ A ⊗ H and their embedding into Λ^e."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from ..core.algebra import AlgebraMorphism, FinDimAlgebra, tensor_vectors
from ..core.field import Scalar
from ..core.linalg import LinearMap, Subspace, Vec, vec_axpy
from ..core.report import CheckReport
from . import config
from .action import ModuleAlgebraAction
from .smash import SmashAlgebra

logger = logging.getLogger(__name__)


class DeltaAlgebra:
    """Δ_i on the basis a⊗b⊗h with index (a * dim A + b) * dim H + h.

    (a⊗b⊗h)(a'⊗b'⊗k) = a(h_1⇀a') ⊗ (S^{2i}(h_3)⇀b')b ⊗ h_2 k.

    Raises:
        NotInvertibleError: i < 0 and the antipode is singular
    """

    def __init__(self, action: ModuleAlgebraAction, i: int):
        self.action = action
        self.index = i
        self.hopf = action.hopf
        self.base = action.algebra
        self.field = action.field
        self.logger = logging.getLogger(f"smashcalc.smash.{self.__class__.__name__.lower()}")
        H, A = self.hopf, self.base
        self.twist = H.antipode_power(2 * i)
        n, m = A.dim, H.dim
        self._legs = [H.basis_legs(h, 3) for h in range(m)]
        twisted_ops = [action.operator(self.twist.cols[h3]) for h3 in range(m)]
        mul: Dict[Tuple[int, int], Vec] = {}
        for a in range(n):
            for b in range(n):
                for h in range(m):
                    for a2 in range(n):
                        for b2 in range(n):
                            terms = []
                            for (h1, h2, h3), c in self._legs[h].items():
                                left = A.product(A.e(a), action.operators[h1].cols[a2])
                                if not left:
                                    continue
                                right = A.product(twisted_ops[h3].cols[b2], A.e(b))
                                if right:
                                    terms.append((c, tensor_vectors(left, right, n), h2))
                            if not terms:
                                continue
                            for k in range(m):
                                out: Vec = {}
                                for c, ab, h2 in terms:
                                    hk = H.algebra.basis_product(h2, k)
                                    if hk:
                                        vec_axpy(out, c, tensor_vectors(ab, hk, m))
                                if out:
                                    mul[(self._index(a, b, h), self._index(a2, b2, k))] = out
        labels = [f"{A.labels[a]}⊗{A.labels[b]}⊗{H.labels[h]}" for a in range(n) for b in range(n) for h in range(m)]
        unit = self.element(A.unit, A.unit, H.unit)
        gens = [self.element(g, A.unit, H.unit) for g in A.generators()]
        gens += [self.element(A.unit, g, H.unit) for g in A.generators()]
        gens += [self.element(A.unit, A.unit, g) for g in H.algebra.generators()]
        self.algebra = FinDimAlgebra(self.field, labels, mul, unit, name=f"Δ{i}({A.name},{H.name})", generators=gens)
        self.enveloping = A.enveloping()
        self.embed_enveloping = AlgebraMorphism(
            self.enveloping, self.algebra,
            [self.element(A.e(a), A.e(b), H.unit) for a in range(n) for b in range(n)],
            name=f"{self.enveloping.name}->Δ{i}")
        self.embed_hopf = AlgebraMorphism(
            H.algebra, self.algebra, [self.element(A.unit, A.unit, H.e(h)) for h in range(m)],
            name=f"{H.name}->Δ{i}")
        self.logger.debug(f"Built Δ{i} of dimension {self.algebra.dim}")

    def _index(self, a: int, b: int, h: int) -> int:
        return (a * self.base.dim + b) * self.hopf.dim + h

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def element(self, a: Mapping[int, Scalar], b: Mapping[int, Scalar], h: Mapping[int, Scalar]) -> Vec:
        return tensor_vectors(tensor_vectors(a, b, self.base.dim), h, self.hopf.dim)

    def product(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vec:
        return self.algebra.product(u, v)

    def _pure(self, a: int, b: int) -> Vec:
        return self.embed_enveloping.cols[a * self.base.dim + b]

    def _h(self, h: int) -> Vec:
        return self.embed_hopf.cols[h]

    def commuted_forward(self, h: int, a: int, b: int) -> Vec:
        """(h_1⇀a ⊗ S^{2i}(h_3)⇀b) × h_2."""
        A = self.base
        out: Vec = {}
        for (h1, h2, h3), c in self._legs[h].items():
            left = self.action.operators[h1].cols[a]
            right = self.action.act(self.twist.cols[h3], A.e(b))
            vec_axpy(out, c, self.product(self.element(left, right, self.hopf.unit), self._h(h2)))
        return out

    def commuted_backward(self, h: int, a: int, b: int) -> Vec:
        """h_2 × (S^-1(h_1)⇀a ⊗ S^{2i+1}(h_3)⇀b)."""
        H, A = self.hopf, self.base
        S_inv = H.antipode_power(-1)
        S_odd = H.antipode_power(2 * self.index + 1)
        out: Vec = {}
        for (h1, h2, h3), c in self._legs[h].items():
            left = self.action.act(S_inv.cols[h1], A.e(a))
            right = self.action.act(S_odd.cols[h3], A.e(b))
            vec_axpy(out, c, self.product(self._h(h2), self.element(left, right, H.unit)))
        return out

    def verify(self) -> CheckReport:
        """Associativity, the embeddings, and the commutation relations between H and A^e."""
        H, A = self.hopf, self.base
        report = CheckReport(f"Δ{self.index}")
        if self.dim <= config.VERIFY_MAX_DIM:
            report.extend(self.algebra.check())
        else:
            report.skip("associativity", f"triple sweep skipped above dimension {config.VERIFY_MAX_DIM}")
        report.extend(self.embed_enveloping.check(), prefix="enveloping embedding ")
        report.extend(self.embed_hopf.check(), prefix="hopf embedding ")
        triples = [(h, a, b) for h in range(H.dim) for a in range(A.dim) for b in range(A.dim)]
        report.sweep(
            "H past A^e",
            iter(triples),
            lambda h, a, b: self.product(self._h(h), self._pure(a, b)) == self.commuted_forward(h, a, b),
        )
        if H.antipode_invertible:
            report.sweep(
                "A^e past H",
                iter(triples),
                lambda h, a, b: self.product(self._pure(a, b), self._h(h)) == self.commuted_backward(h, a, b),
            )
        else:
            report.skip("A^e past H", "antipode not invertible")
        return report

    def __repr__(self) -> str:
        return f"DeltaAlgebra(i={self.index}, dim={self.dim})"


def delta_algebra(action: ModuleAlgebraAction, i: int) -> DeltaAlgebra:
    """Build Δ_i.

    Raises:
        NotInvertibleError: i < 0 and S is singular
    """
    return DeltaAlgebra(action, i)


@dataclass
class DeltaEmbedding:
    """The morphism Δ_i -> Λ^e, its retraction, and the verification record."""

    morphism: AlgebraMorphism
    retraction: LinearMap
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed


def delta_embedding(delta: DeltaAlgebra, smash: SmashAlgebra,
                    enveloping: Optional[FinDimAlgebra] = None) -> DeltaEmbedding:
    """(a⊗b)×h -> (a⊗b)×(h_1 ⊗ S^{2i+1}(h_2)) with retraction ah⊗bk -> a ⊗ S^-1(k)⇀b ⊗ h.

    Raises:
        NotInvertibleError: S is singular
    """
    H, A = delta.hopf, delta.base
    action = delta.action
    Le = enveloping if enveloping is not None else smash.algebra.enveloping()
    S_odd = H.antipode_power(2 * delta.index + 1)
    S_inv = H.antipode_power(-1)
    n, m = A.dim, H.dim

    cols: List[Vec] = []
    for a in range(n):
        for b in range(n):
            for h in range(m):
                col: Vec = {}
                for (h1, h2), c in H.comul[h].items():
                    first = smash.product(smash.embed_base.cols[a], smash.embed_hopf.cols[h1])
                    second = smash.product(smash.embed_hopf(S_odd.cols[h2]), smash.embed_base.cols[b])
                    vec_axpy(col, c, tensor_vectors(first, second, smash.dim))
                cols.append(col)
    morphism = AlgebraMorphism(delta.algebra, Le, cols, name=f"Δ{delta.index}->{Le.name}")

    retraction_cols: List[Vec] = []
    for a in range(n):
        for h in range(m):
            for b in range(n):
                for k in range(m):
                    moved = action.act(S_inv.cols[k], A.e(b))
                    retraction_cols.append(delta.element(A.e(a), moved, H.e(h)))
    # column order above is (a, h, b, k), the basis order of Λ ⊗ Λ^op
    retraction = LinearMap(delta.field, Le.dim, delta.dim, retraction_cols)

    report = CheckReport(f"Δ{delta.index} embedding")
    report.extend(morphism.check())
    report.record("retraction", retraction.compose(morphism).is_identity())
    report.record("injective", morphism.rank() == delta.dim, detail=f"rank {morphism.rank()} of {delta.dim}")
    generators = [tensor_vectors(smash.embed_base.cols[a], smash.embed_base.cols[b], smash.dim)
                  for a in range(n) for b in range(n)]
    for h in range(m):
        g: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            vec_axpy(g, c, tensor_vectors(smash.embed_hopf.cols[h1], smash.embed_hopf(S_odd.cols[h2]), smash.dim))
        generators.append(g)
    generated = Le.span_closure(generators)
    report.record("image is the generated subalgebra", generated == Subspace.image(morphism),
                  detail=f"generated {generated.dim}, image {morphism.rank()}")
    return DeltaEmbedding(morphism=morphism, retraction=retraction, report=report)
