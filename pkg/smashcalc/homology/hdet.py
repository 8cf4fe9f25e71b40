"""Weak homological determinants of a module algebra with a free rank-one top Ext.

For a free generator e of the rung D = Ext^n_{A^e}(A, A^e) and the left
A-linear f: D -> A with f(e) = 1, the maps λ, w: H -> A are fixed by

    h⇀e = λ(h) e        h⇀f = f w(h)

and w is the weak homological determinant attached to e.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..core.algebra import AlgebraMorphism
from ..core.field import Scalar
from ..core.linalg import LinearMap, Vec, find_invertible_combination, matrix_from_rows, nullspace, vec_axpy
from ..core.report import CheckReport
from ..equivariant.bimodule import EquivariantBimodule
from ..equivariant.duals import LEFT, EquivariantDual
from ..hopf.characters import Character, winding_left
from ..hopf.exceptions import CharacterError
from ..smash.action import ModuleAlgebraAction
from ..smash.smash import SmashAlgebra
from .exceptions import NotFreeGeneratorError, PreconditionError
from .nakayama import find_free_generator, generator_map

logger = logging.getLogger(__name__)


def _scalar_of(v: Mapping[int, Scalar], unit: Mapping[int, Scalar], zero: Scalar) -> Optional[Scalar]:
    """c with v = c·unit, or None."""
    pivot = next(iter(unit))
    c = v.get(pivot, zero) / unit[pivot]
    if {k: c * x for k, x in unit.items() if c * x} != dict(v):
        return None
    return c


@dataclass
class WeakHdet:
    """λ, w = whdet and, when whdet lands in k·1, the homological determinant.

    Attributes:
        rung: the top Ext bimodule, equivariant of index 1
        generator: e
        dual_generator: coordinates of f in Hom_A(D, A)
        whdet: H -> A
        lambda_map: H -> A
        is_character: whdet(h) ∈ k·1 for every h
        hdet: the character when is_character holds
        report: the defining identities and their consequences
    """
    action: ModuleAlgebraAction
    rung: EquivariantBimodule
    generator: Vec
    dual_generator: Vec
    whdet: LinearMap
    lambda_map: LinearMap
    is_character: bool
    hdet: Optional[Character]
    report: CheckReport

    @property
    def w_map(self) -> LinearMap:
        return self.whdet

    def __call__(self, h: Mapping[int, Scalar]) -> Vec:
        return self.whdet(h)

    def to_dict(self) -> Dict[str, Any]:
        H, A = self.action.hopf, self.action.algebra
        data: Dict[str, Any] = {
            "whdet": {H.labels[h]: A.format(col) for h, col in enumerate(self.whdet.cols)},
            "lambda": {H.labels[h]: A.format(col) for h, col in enumerate(self.lambda_map.cols)},
            "is_character": self.is_character,
            "passed": self.report.passed,
        }
        if self.hdet is not None:
            data["hdet"] = self.hdet.to_dict()
        return data


def weak_hdet(action: ModuleAlgebraAction, rung: EquivariantBimodule, e: Optional[Vec] = None) -> WeakHdet:
    """The weak homological determinant attached to a free generator of ``rung``.

    Without ``e`` the deterministic free-generator scan picks one.

    Raises:
        PreconditionError: the rung is not equivariant of index 1
        NotFreeGeneratorError: e does not freely generate the rung as a left A-module
    """
    if rung.index != 1:
        raise PreconditionError(f"{rung.name} has index {rung.index}, expected 1")
    H, A, F = action.hopf, action.algebra, action.field
    if e is None:
        e = find_free_generator(rung)
        if e is None:
            raise NotFreeGeneratorError(f"{rung.name} has no free generator")
    L = generator_map(rung, e)
    if rung.dim != A.dim or not L.is_bijective():
        raise NotFreeGeneratorError(f"{e} does not freely generate {rung.name}")
    f_A = L.inverse()
    S2, S3 = H.antipode_power(2), H.antipode_power(3)
    Sm2, Sm3 = H.antipode_power(-2), H.antipode_power(-3)

    lam = LinearMap(F, H.dim, A.dim, [f_A(rung.h_ops[h](e)) for h in range(H.dim)])
    dual = EquivariantDual(rung, LEFT)
    f_coords = dual.dual.coordinates(f_A)
    w = LinearMap(F, H.dim, A.dim, [dual.dual.evaluate(dual.h_ops[h](f_coords), e) for h in range(H.dim)])

    report = CheckReport(f"weak homological determinant of {action.name}")
    report.sweep("h⇀f = f·whdet(h)", ((h,) for h in range(H.dim)),
                 lambda h: dual.h_ops[h](f_coords) == dual.bimodule.act_right(f_coords, w.cols[h]))

    def w_from_lambda(h: int) -> Vec:
        out: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            vec_axpy(out, c, action.act(Sm2.cols[h2], lam(Sm3.cols[h1])))
        return out

    def lambda_from_w(h: int) -> Vec:
        out: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            vec_axpy(out, c, action.act_basis(h1, w(S3.cols[h2])))
        return out

    report.sweep("w(h) = S⁻²(h₂)⇀λ(S⁻³(h₁))", ((h,) for h in range(H.dim)), lambda h: w_from_lambda(h) == w.cols[h])
    report.sweep("λ(h) = h₁⇀w(S³(h₂))", ((h,) for h in range(H.dim)), lambda h: lambda_from_w(h) == lam.cols[h])
    report.sweep("h⇀e = (h₁⇀whdet(S³(h₂)))e", ((h,) for h in range(H.dim)),
                 lambda h: rung.h_ops[h](e) == rung.bimodule.act_left(lambda_from_w(h), e))

    def product_law(h: int, k: int) -> bool:
        rhs: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            vec_axpy(rhs, c, A.product(w.cols[h1], action.act(Sm2.cols[h2], w.cols[k])))
        return w(H.algebra.basis_product(h, k)) == rhs

    report.sweep("whdet(hk) = whdet(h₁)(S⁻²(h₂)⇀whdet(k))",
                 ((h, k) for h in range(H.dim) for k in range(H.dim)), product_law)

    values = [_scalar_of(col, A.unit, F.zero) for col in w.cols]
    is_character = all(v is not None for v in values)
    hdet: Optional[Character] = None
    if is_character:
        try:
            hdet = Character(H, values, name="hdet")
        except CharacterError as err:
            report.record("hdet multiplicative", False, detail=str(err))
        if hdet is not None:
            def scaled(h: int) -> Vec:
                out: Vec = {}
                vec_axpy(out, hdet(H.antipode.cols[h]), e)
                return out

            report.record("hdet∘S² = hdet", hdet.precompose(S2) == hdet)
            report.sweep("h⇀e = hdet(S(h))e", ((h,) for h in range(H.dim)), lambda h: rung.h_ops[h](e) == scaled(h))
    logger.info(f"{action.name}: weak hdet computed, character: {is_character}")
    return WeakHdet(action, rung, dict(e), f_coords, w, lam, is_character, hdet, report)


def rescaled_whdet(weak: WeakHdet, a0: Mapping[int, Scalar]) -> Tuple[WeakHdet, CheckReport]:
    """whdet for the generator a0·e, compared to a0 whdet(h₁)(S⁻²(h₂)⇀a0⁻¹).

    Raises:
        NotInvertibleError: a0 is not a unit
    """
    action = weak.action
    H, A = action.hopf, action.algebra
    a0_inv = A.inverse(a0)
    Sm2 = H.antipode_power(-2)
    moved = weak_hdet(action, weak.rung, weak.rung.bimodule.act_left(a0, weak.generator))

    def expected(h: int) -> Vec:
        out: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            vec_axpy(out, c, A.product(A.product(a0, weak.whdet.cols[h1]), action.act(Sm2.cols[h2], a0_inv)))
        return out

    report = CheckReport(f"generator rescaled by {A.format(a0)}")
    report.sweep("whdet'(h) = a₀whdet(h₁)(S⁻²(h₂)⇀a₀⁻¹)", ((h,) for h in range(H.dim)),
                 lambda h: moved.whdet.cols[h] == expected(h))
    return moved, report


def epsilon_hdet_witness(weak: WeakHdet) -> Optional[Vec]:
    """A unit a0 with whdet(h) = a0(S⁻²(h)⇀a0⁻¹) for all h, or None.

    Such a0 exists exactly when ε is a homological determinant of the action.
    Writing b = a0⁻¹ the condition b·whdet(h) = S⁻²(h)⇀b is linear in b.
    """
    action = weak.action
    H, A = action.hopf, action.algebra
    Sm2 = H.antipode_power(-2)
    rows: List[Vec] = []
    for h in range(H.dim):
        op = A.right_mult(weak.whdet.cols[h]) - action.operator(Sm2.cols[h])
        rows.extend(row for row in op.transpose().cols if row)
    solutions = nullspace(matrix_from_rows(rows, A.dim, A.field.domain)) if rows else [A.e(i) for i in range(A.dim)]
    if not solutions:
        return None
    coeffs = find_invertible_combination([A.left_mult(b) for b in solutions])
    if coeffs is None:
        return None
    b: Vec = {}
    for c, v in zip(coeffs, solutions):
        vec_axpy(b, c, v)
    return A.inverse(b)


def theta_whdet(weak: WeakHdet, smash: Optional[SmashAlgebra] = None) -> AlgebraMorphism:
    """θ(h) = whdet(S²(h₁))#h₂, from H into A♯H."""
    action = weak.action
    H = action.hopf
    smash = smash or SmashAlgebra(action)
    S2 = H.antipode_power(2)
    cols: List[Vec] = []
    for h in range(H.dim):
        col: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            vec_axpy(col, c, smash.element(weak.whdet(S2.cols[h1]), H.e(h2)))
        cols.append(col)
    return AlgebraMorphism(H.algebra, smash.algebra, cols, name="θ[whdet]")


def theta_report(weak: WeakHdet, theta: AlgebraMorphism, smash: SmashAlgebra) -> CheckReport:
    """θ is an algebra map, and equals Ξ^ℓ_hdet followed by H -> A♯H when hdet exists."""
    report = CheckReport("θ[whdet]")
    report.extend(theta.check(), prefix="θ ")
    if weak.hdet is not None:
        expected = winding_left(weak.action.hopf, weak.hdet).then(smash.embed_hopf)
        report.record("θ = Ξℓ[hdet]", theta == expected)
    return report
