"""Module-algebra actions h ⇀ a of a Hopf algebra on an algebra."""

from __future__ import annotations

import logging
from typing import Callable, List, Mapping, Optional, Sequence

from ..core.algebra import FinDimAlgebra
from ..core.field import Scalar
from ..core.linalg import LinearMap, Subspace, Vec, matrix_from_rows, nullspace, vec_axpy
from ..core.report import CheckReport
from ..hopf.hopf import HopfAlgebra
from .exceptions import ActionError


class ModuleAlgebraAction:
    """An action of H on A given by one matrix per basis element of H.

    ``operators[h]`` is the matrix of a -> e_h ⇀ a. An augmented A carries
    its augmentation as a covector ``augmentation``.

    Raises:
        ActionError: wrong number or shape of operators, or fields differ
    """

    def __init__(self, hopf: HopfAlgebra, algebra: FinDimAlgebra, operators: Sequence[LinearMap],
                 name: str = "", augmentation: Optional[Sequence[object]] = None):
        if hopf.field != algebra.field:
            raise ActionError(f"{hopf.name} and {algebra.name} live over different fields")
        if len(operators) != hopf.dim:
            raise ActionError(f"Expected {hopf.dim} action matrices, got {len(operators)}")
        for op in operators:
            if op.shape != (algebra.dim, algebra.dim):
                raise ActionError(f"Action matrix of shape {op.shape} on {algebra.name} of dimension {algebra.dim}")
        self.hopf = hopf
        self.algebra = algebra
        self.field = algebra.field
        self.operators = list(operators)
        self.name = name or f"{hopf.name}⇀{algebra.name}"
        self.augmentation: Optional[List[Scalar]] = None
        if augmentation is not None:
            if len(augmentation) != algebra.dim:
                raise ActionError(f"Augmentation has {len(augmentation)} values for dimension {algebra.dim}")
            self.augmentation = [self.field.element(x) for x in augmentation]
        self.logger = logging.getLogger(f"smashcalc.smash.{self.__class__.__name__.lower()}")

    # --- constructors -------------------------------------------------------

    @classmethod
    def trivial(cls, hopf: HopfAlgebra, algebra: FinDimAlgebra, **kwargs) -> "ModuleAlgebraAction":
        """h ⇀ a = ε(h) a."""
        F = hopf.field
        ops = [LinearMap.identity(F, algebra.dim).scale(hopf.counit[h]) for h in range(hopf.dim)]
        kwargs.setdefault("name", f"trivial {hopf.name}⇀{algebra.name}")
        return cls(hopf, algebra, ops, **kwargs)

    @classmethod
    def from_function(cls, hopf: HopfAlgebra, algebra: FinDimAlgebra,
                      act: Callable[[int, int], Mapping[int, Scalar]], **kwargs) -> "ModuleAlgebraAction":
        """Build from act(h, a) = e_h ⇀ e_a."""
        F = hopf.field
        ops = [LinearMap(F, algebra.dim, algebra.dim, [act(h, a) for a in range(algebra.dim)])
               for h in range(hopf.dim)]
        return cls(hopf, algebra, ops, **kwargs)

    @classmethod
    def from_group_images(cls, hopf: HopfAlgebra, algebra: FinDimAlgebra,
                          images: Mapping[int, LinearMap], **kwargs) -> "ModuleAlgebraAction":
        """A group algebra acting through automorphisms given on some group elements.

        Group elements missing from ``images`` get their operator by
        multiplying the given ones along the group table.

        Raises:
            ActionError: H is not a group algebra or the images do not generate every element
        """
        if hopf.group_table is None:
            raise ActionError(f"{hopf.name} is not a group algebra")
        F = hopf.field
        ops: dict = {0: LinearMap.identity(F, algebra.dim)}
        ops.update(images)
        table = hopf.group_table
        frontier = list(ops)
        while frontier:
            nxt = []
            for g in frontier:
                for s in images:
                    product = table[g][s]
                    if product not in ops:
                        ops[product] = ops[g].compose(images[s])
                        nxt.append(product)
            frontier = nxt
        if len(ops) != hopf.dim:
            raise ActionError(f"Images on {sorted(images)} do not generate all of {hopf.name}")
        return cls(hopf, algebra, [ops[g] for g in range(hopf.dim)], **kwargs)

    # --- evaluation -------------------------------------------------------

    def act(self, h: Mapping[int, Scalar], a: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for i, c in h.items():
            vec_axpy(out, c, self.operators[i](a))
        return out

    def act_basis(self, h: int, a: Mapping[int, Scalar]) -> Vec:
        return self.operators[h](a)

    def operator(self, h: Mapping[int, Scalar]) -> LinearMap:
        F = self.field
        cols: List[Vec] = [dict() for _ in range(self.algebra.dim)]
        for i, c in h.items():
            for k, col in enumerate(self.operators[i].cols):
                vec_axpy(cols[k], c, col)
        return LinearMap(F, self.algebra.dim, self.algebra.dim, cols)

    def is_trivial(self) -> bool:
        F = self.field
        return all(op == LinearMap.identity(F, self.algebra.dim).scale(self.hopf.counit[h])
                   for h, op in enumerate(self.operators))

    def augmentation_of(self, a: Mapping[int, Scalar]) -> Scalar:
        if self.augmentation is None:
            raise ActionError(f"{self.algebra.name} carries no augmentation")
        out = self.field.zero
        for i, c in a.items():
            out += c * self.augmentation[i]
        return out

    def invariants(self) -> Subspace:
        """A^H = {a : h ⇀ a = ε(h) a}."""
        F = self.field
        K = F.domain
        rows: List[Vec] = []
        for h, op in enumerate(self.operators):
            shifted = op - LinearMap.identity(F, self.algebra.dim).scale(self.hopf.counit[h])
            rows.extend(r for r in shifted.transpose().cols if r)
        if not rows:
            return Subspace.whole(F, self.algebra.dim)
        return Subspace(F, self.algebra.dim, nullspace(matrix_from_rows(rows, self.algebra.dim, K)))

    # --- verification -------------------------------------------------------

    def check(self) -> CheckReport:
        """Module axioms, measuring, and the grading and augmentation side conditions."""
        H, A = self.hopf, self.algebra
        report = CheckReport(f"module algebra {self.name}")
        rh, ra = range(H.dim), range(A.dim)
        report.record("unit acts trivially", self.operator(H.unit).is_identity())
        report.sweep(
            "module associativity",
            ((h, k) for h in rh for k in rh),
            lambda h, k: self.operator(H.algebra.basis_product(h, k)) == self.operators[h].compose(self.operators[k]),
        )
        report.sweep(
            "unit measured",
            ((h,) for h in rh),
            lambda h: self.operators[h](A.unit) == A.scalar(H.counit[h]),
        )
        coproducts = [H.comul[h] for h in rh]
        report.sweep(
            "measuring",
            ((h, a, b) for h in rh for a in ra for b in ra if A._safe(a, b)),
            lambda h, a, b: self.operators[h](A.basis_product(a, b)) == self._measured(coproducts[h], a, b),
        )
        if A.overflow:
            report.skip("measuring above truncation", f"{len(A.overflow)} products cut off at degree {A.truncation}")
        if A.degrees is not None:
            report.sweep(
                "grading preserved",
                ((h, a) for h in rh for a in ra),
                lambda h, a: all(A.degrees[k] == A.degrees[a] for k in self.operators[h].cols[a]),
            )
        if self.augmentation is not None:
            report.sweep(
                "augmentation multiplicative",
                ((a, b) for a in ra for b in ra if A._safe(a, b)),
                lambda a, b: self.augmentation_of(A.basis_product(a, b)) == self.augmentation[a] * self.augmentation[b],
            )
            report.sweep(
                "augmentation ideal stable",
                ((h, a) for h in rh for a in ra),
                lambda h, a: self.augmentation_of(self.operators[h].cols[a]) == H.counit[h] * self.augmentation[a],
            )
        return report

    def _measured(self, coproduct, a: int, b: int) -> Vec:
        out: Vec = {}
        A = self.algebra
        for (j, k), c in coproduct.items():
            vec_axpy(out, c, A.product(self.operators[j].cols[a], self.operators[k].cols[b]))
        return out

    def validate(self) -> "ModuleAlgebraAction":
        report = self.check()
        if not report.passed:
            raise ActionError(str(report))
        return self

    # --- derived actions ----------------------------------------------------

    def opposite(self, hopf_op: Optional[HopfAlgebra] = None) -> "ModuleAlgebraAction":
        """H^op acting on A^op by k ⇀' b = S^-1(k) ⇀ b.

        Raises:
            NotInvertibleError: S is singular
        """
        H = self.hopf
        S_inv = H.antipode_power(-1)
        hop = hopf_op if hopf_op is not None else H.op()
        ops = [self.operator(S_inv.cols[k]) for k in range(H.dim)]
        return ModuleAlgebraAction(hop, self.algebra.opposite(), ops, name=f"{self.name}^op")

    def tensor(self, other: "ModuleAlgebraAction", hopf: Optional[HopfAlgebra] = None,
               algebra: Optional[FinDimAlgebra] = None) -> "ModuleAlgebraAction":
        """H ⊗ H' acting on A ⊗ A' factorwise."""
        H = hopf if hopf is not None else self.hopf.tensor(other.hopf)
        A = algebra if algebra is not None else self.algebra.tensor(other.algebra)
        ops = [P.kron(Q) for P in self.operators for Q in other.operators]
        return ModuleAlgebraAction(H, A, ops, name=f"{self.name}⊗{other.name}")

    def enveloping(self) -> "ModuleAlgebraAction":
        """H^e acting on A^e by (h⊗k) ⇀ (a⊗b) = h⇀a ⊗ S^-1(k)⇀b."""
        H = self.hopf
        hop = H.op()
        He = H.tensor(hop, name=f"{H.name}^e")
        opposite = self.opposite(hop)
        action = self.tensor(opposite, hopf=He, algebra=self.algebra.enveloping())
        action.name = f"{self.name}^e"
        return action

    def __repr__(self) -> str:
        return f"ModuleAlgebraAction({self.name})"


def check_module_algebra(action: ModuleAlgebraAction) -> CheckReport:
    return action.check()
