"""Deformed Calabi-Yau completions Π_n(A, c) and the equivariance condition on c."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..core.linalg import LinearMap, Vec, vec_axpy, vec_scale
from ..core.report import CheckReport
from ..hopf.characters import Character
from ..smash.smash import SmashAlgebra
from .dualising import DualisingComplex
from .exceptions import CocycleError, CompletionError
from .sigma_smash import CompletionIso, completion_smash_iso
from .tensor_algebra import TruncatedTensorAlgebra, cy_completion

logger = logging.getLogger(__name__)

EQUIVARIANCE = "c(h⇀d) = h₁·c(d)·∫ℓ(h₂)·S³(h₃)"


@dataclass
class CocycleVerdict:
    """Whether c: D_A[n-1] -> A defines a deformation of Π_n(A) compatible with H."""
    holds: bool
    report: CheckReport
    witness: Optional[Tuple[Any, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"holds": self.holds, "report": self.report.to_dict()}
        if self.witness is not None:
            data["witness"] = [str(w) for w in self.witness]
        return data


def _require_bimodule_map(c: LinearMap, D: DualisingComplex) -> None:
    A = D.algebra
    bim = D.module.bimodule
    if c.shape != (A.dim, D.dim):
        raise CocycleError(f"c of shape {c.shape}, expected {(A.dim, D.dim)}")
    for i in range(A.dim):
        if c.compose(bim.left[i]) != A.left_mult(A.e(i)).compose(c):
            raise CocycleError(f"c is not left {A.name}-linear at {A.labels[i]}")
        if c.compose(bim.right[i]) != A.right_mult(A.e(i)).compose(c):
            raise CocycleError(f"c is not right {A.name}-linear at {A.labels[i]}")


def deformed_cocycle_check(c: LinearMap, D: DualisingComplex, n: int,
                           integral: Optional[Character] = None) -> CocycleVerdict:
    """Check that c has degree one, kills the image of δ and satisfies

        c(h⇀d)#1 = Σ h₁·(c(d)#1)·∫ℓ(h₂)·(1#S³(h₃))

    in A♯H on every basis pair (h, d). ∫ℓ defaults to ε. When S² = id and
    ∫ℓ = ε the condition is plain H-linearity, and the two are compared.

    Raises:
        CocycleError: c is not an A-bimodule map D_A -> A
    """
    _require_bimodule_map(c, D)
    A, H = D.algebra, D.hopf
    integral = integral if integral is not None else Character.counit(H)
    report = CheckReport(f"deformation of Π_{n}({A.name})")
    shifted = D.shifted(n - 1)
    report.sweep("c has degree one", ((k,) for k in range(D.dim)),
                 lambda k: not c.cols[k] or shifted[k] == -1)
    report.record("c∘δ = 0", c.compose(D.differential).is_zero())

    smash = SmashAlgebra(D.action)
    S3 = H.antipode_power(3)

    def equivariant_at(h: int, k: int) -> bool:
        lhs = smash.element(c(D.module.h_ops[h].cols[k]), H.unit)
        middle = smash.element(c.cols[k], H.unit)
        rhs: Vec = {}
        for (h1, h2, h3), x in H.basis_legs(h, 3).items():
            scale = x * integral.values[h2]
            if not scale:
                continue
            term = smash.product(smash.product(smash.element(A.unit, H.e(h1)), middle),
                                 smash.element(A.unit, S3.cols[h3]))
            vec_axpy(rhs, scale, term)
        return lhs == rhs

    check = report.sweep(EQUIVARIANCE, ((h, k) for h in range(H.dim) for k in range(D.dim)), equivariant_at)
    if H.antipode_power(2).is_identity() and integral.is_counit():
        linear = all(c.compose(D.module.h_ops[h]) == D.action.operators[h].compose(c) for h in range(H.dim))
        report.record("agrees with H-linearity", linear == check.passed,
                      detail=f"H-linear {linear}, condition {check.passed}")
    failures = report.failures()
    witness = failures[0].witness if failures else None
    return CocycleVerdict(report.passed, report, witness)


@dataclass
class DeformedCompletion:
    """Π_n(A, c) with the verdict on c and, when H is nontrivial, the smash comparison."""
    algebra: TruncatedTensorAlgebra
    cocycle: CocycleVerdict
    iso: Optional[CompletionIso]
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "algebra": self.algebra.to_dict(),
            "cocycle": self.cocycle.to_dict(),
            "report": self.report.to_dict(),
        }
        if self.iso is not None:
            data["iso"] = self.iso.to_dict()
        return data


def deformed_completion(D: DualisingComplex, n: int, c: LinearMap, truncation: Optional[int] = None,
                        check_iso: bool = True, bound: Optional[int] = None) -> DeformedCompletion:
    """Build Π_n(A, c) = (T_A(D_A[n-1]), ∂ + c) and, for a nontrivial H, compare its
    smash product with the deformed completion of A♯H.

    Raises:
        CocycleError: c fails the equivariance condition, or ∂² ≠ 0 on the truncation
    """
    verdict = deformed_cocycle_check(c, D, n)
    if not verdict.holds:
        failed = verdict.report.failures()[0]
        raise CocycleError(f"c fails {failed.name} at {failed.witness}")
    Pi = cy_completion(D.algebra, D, n, truncation, contraction=c)
    square = Pi.report.get("∂² = 0")
    if square is not None and not square.passed:
        raise CocycleError(f"∂² ≠ 0 on {Pi.name} at {square.witness}")
    report = CheckReport(f"deformed completion {Pi.name}")
    report.extend(verdict.report, prefix="cocycle ")
    report.extend(Pi.report, prefix="Π ")
    iso: Optional[CompletionIso] = None
    H = D.hopf
    if check_iso and H.dim > 1:
        if not H.antipode_power(2).is_identity():
            report.skip("smash isomorphism", f"S² ≠ id on {H.name}")
        else:
            try:
                iso = completion_smash_iso(D, n, Pi.truncation, contraction=c, bound=bound)
                report.extend(iso.report, prefix="smash ")
            except CompletionError as e:
                report.skip("smash isomorphism", str(e))
    logger.info(f"{Pi.name} deformed: {'pass' if report.passed else 'FAIL'}")
    return DeformedCompletion(Pi, verdict, iso, report)


def vertex_contraction(D: DualisingComplex, weights: Mapping[str, Any]) -> LinearMap:
    """c(t_v[x|y]) = λ_v y·x on the vertex summands and 0 on the arrow summands.

    With λ_v the weight of vertex v this is the deformation e_v ↦ λ_v e_v of
    the preprojective relation when n = 2.

    Raises:
        CompletionError: D is not built from a quiver
    """
    Q = D.quiver
    if Q is None or D.cells is None:
        raise CompletionError("Vertex weights need a dualising complex built from a quiver")
    A, F = D.algebra, D.field
    nv = len(Q.vertices)
    lambdas = [F.element(weights.get(v, 0)) for v in Q.vertices]
    cols: List[Vec] = []
    for s, x, y in D.cells:
        if s < nv and lambdas[s]:
            cols.append(vec_scale(lambdas[s], A.basis_product(y, x)))
        else:
            cols.append({})
    return LinearMap(F, D.dim, A.dim, cols)
