"""Homological integrals of Hopf algebras and the classification they drive."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..core.algebra import AlgebraMorphism
from ..core.linalg import Vec
from ..core.modules import LeftModule
from ..core.report import CheckReport
from ..equivariant.invertibility import check_invertible_bimodule
from ..hopf.characters import Character, winding_right
from ..hopf.exceptions import CharacterError
from ..hopf.hopf import HopfAlgebra, antipode_power
from ..hopf.inner import inner_witness
from . import config
from .exceptions import ArtinSchelterError, HomologyError
from .ext import ExtGroups, ExtLadder, bimodule_ext, ext_one_sided
from .nakayama import (
    CY,
    NONE,
    SKEW_CY,
    UNDETERMINED,
    VDB,
    NakayamaData,
    find_free_generator,
    nakayama_from_generator,
)
from .resolution import SmoothnessVerdict, module_probe, trivial_module

logger = logging.getLogger(__name__)

# Ext degrees inspected when locating the integral
INTEGRAL_DEGREES = 2


@dataclass
class HomologicalIntegral:
    """The characters by which H acts on its one-dimensional Ext^d(k, H).

    Attributes:
        degree: d
        left: ∫_ℓ, from the right H-action on Ext^d_H(k, H)
        right: ∫_r, from the left H-action on Ext^d_{H^op}(k, H)
        left_ext: the groups behind ∫_ℓ
        right_ext: the groups behind ∫_r
        report: π∘S^2 = π for both characters and ∫_ℓ = ∫_r∘S
    """
    hopf: HopfAlgebra
    degree: int
    left: Character
    right: Character
    left_ext: ExtGroups
    right_ext: ExtGroups
    report: CheckReport

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
            "left_dims": self.left_ext.dims,
            "right_dims": self.right_ext.dims,
            "passed": self.report.passed,
        }


def _integral_character(H: HopfAlgebra, groups: ExtGroups, side: str) -> Tuple[int, Character]:
    d = groups.concentrated()
    if d is None or groups.groups[d].dim != 1:
        raise ArtinSchelterError(
            f"Ext(k, {H.name}) over the {side} side is not one-dimensional in one degree: dims {groups.dims}")
    F = H.field
    values = [op.cols[0].get(0, F.zero) if op.cols else F.zero for op in groups.operators[d]]
    try:
        return d, Character(H, values, name=f"∫{side[0]}")
    except CharacterError as e:
        raise ArtinSchelterError(f"The {side} integral of {H.name} is not a character: {e}") from e


def homological_integral(H: HopfAlgebra, max_degree: int = INTEGRAL_DEGREES) -> HomologicalIntegral:
    """∫_ℓ and ∫_r of H, read off Ext^*_H(k, H) and Ext^*_{H^op}(k, H).

    Raises:
        ArtinSchelterError: either Ext is not one-dimensional in a single degree
    """
    A = H.algebra
    k = trivial_module(A, H.counit)
    left_ext = ext_one_sided(A, k, max_degree=max_degree)
    d_left, left = _integral_character(H, left_ext, "left")

    B = A.opposite()
    k_op = trivial_module(B, H.counit)
    N = LeftModule(B, A.dim, A.right_regular(), name=f"{H.name} as a left {B.name}-module", labels=A.labels)
    right_ext = ext_one_sided(B, k_op, N, max_degree=max_degree, extra_ops=A.left_regular())
    d_right, right = _integral_character(H, right_ext, "right")

    report = CheckReport(f"homological integrals of {H.name}")
    report.record("left and right degrees agree", d_left == d_right, detail=f"{d_left} vs {d_right}")
    if H.antipode_invertible:
        report.record("∫ℓ∘S² = ∫ℓ", left.compose_antipode(2) == left)
        report.record("∫r∘S² = ∫r", right.compose_antipode(2) == right)
    else:
        report.skip("∫∘S² = ∫", "antipode not invertible")
    report.record("∫ℓ = ∫r∘S", left == right.compose_antipode(1))
    logger.info(f"{H.name}: integrals in degree {d_left}: ∫ℓ = {left.to_dict()}, ∫r = {right.to_dict()}")
    return HomologicalIntegral(H, d_left, left, right, left_ext, right_ext, report)


def hopf_nakayama(H: HopfAlgebra, integral: HomologicalIntegral) -> AlgebraMorphism:
    """μ_H = S^-2∘Ξ^r_{∫ℓ}."""
    xi = winding_right(H, integral.left)
    mu = xi.then(antipode_power(H, -2))
    mu.name = f"μ[{H.name}]"
    return mu


@dataclass
class HopfClassification:
    """Verdict on a Hopf algebra with its certificates."""
    hopf: HopfAlgebra
    verdict: str
    smoothness: SmoothnessVerdict
    degree: Optional[int] = None
    integral: Optional[HomologicalIntegral] = None
    mu: Optional[AlgebraMorphism] = None
    direct: Optional[NakayamaData] = None
    ladder: Optional[ExtLadder] = None
    comparison: Optional[Vec] = None
    inner: Optional[Vec] = None
    report: CheckReport = field(default_factory=lambda: CheckReport("hopf classification"))

    def label(self) -> str:
        if self.verdict in (CY, SKEW_CY, VDB):
            return f"{self.verdict}({self.degree})"
        if self.verdict == NONE and self.smoothness.kind == SmoothnessVerdict.PERIODIC:
            return "none (NotSmoothPeriodic)"
        return self.verdict

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "hopf": self.hopf.name,
            "verdict": self.label(),
            "smoothness": self.smoothness.to_dict(),
            "degree": self.degree,
            "report": self.report.to_dict(),
        }
        if self.integral is not None:
            data["integral"] = self.integral.to_dict()
        if self.mu is not None:
            data["mu"] = self.mu.to_dict()
        if self.direct is not None:
            data["direct_nakayama"] = self.direct.to_dict()
        if self.inner is not None:
            data["inner_witness"] = self.hopf.format(self.inner)
        return data


def classify_hopf(H: HopfAlgebra, bound: Optional[int] = None) -> HopfClassification:
    """Classify H and certify μ_H = S^-2∘Ξ^r_{∫ℓ} against the Nakayama automorphism read off Ext_{H^e}(H, H^e).

    The comparison runs in the integral degree even when H is not smooth:
    every finite-dimensional Hopf algebra is Frobenius, so Ext^0 is free of
    rank one on either side and μ_H is its Frobenius Nakayama automorphism.
    """
    bound = config.RESOLUTION_BOUND if bound is None else bound
    A = H.algebra
    result = HopfClassification(hopf=H, verdict=UNDETERMINED,
                                smoothness=SmoothnessVerdict(SmoothnessVerdict.UNDETERMINED, bound=bound),
                                report=CheckReport(f"classification of {H.name}"))
    try:
        result.smoothness = module_probe(A, trivial_module(A, H.counit), bound)
    except HomologyError as e:
        logger.warning(f"Smoothness probe of {H.name} failed: {e}")
        return result
    result.report.record("smoothness decided", result.smoothness.kind != SmoothnessVerdict.UNDETERMINED,
                         detail=str(result.smoothness))

    try:
        result.integral = homological_integral(H)
    except ArtinSchelterError as e:
        result.report.record("Artin-Schelter condition", False, detail=str(e))
        result.verdict = NONE if result.smoothness.kind != SmoothnessVerdict.UNDETERMINED else UNDETERMINED
        return result
    result.report.record("Artin-Schelter condition", True, detail=f"degree {result.integral.degree}")
    result.report.extend(result.integral.report, prefix="integral ")
    result.degree = result.integral.degree
    result.mu = hopf_nakayama(H, result.integral)

    result.ladder = bimodule_ext(A, result.degree)
    rung = result.ladder.rung(result.degree)
    e = find_free_generator(rung)
    if e is None:
        result.report.record("free generator", False, detail=f"Ext^{result.degree} has dimension {rung.dim}")
    else:
        result.direct = nakayama_from_generator(rung, e, degree=result.degree)
        result.report.extend(result.direct.report, prefix="direct ")
        result.comparison = inner_witness(A, result.mu.compose(result.direct.mu.inverse()))
        result.report.record("μ_H agrees with the direct Nakayama automorphism up to inner",
                             result.comparison is not None)

    if result.smoothness.kind == SmoothnessVerdict.PERIODIC:
        result.verdict = NONE
        return result
    if not result.smoothness.smooth:
        return result
    if result.direct is None:
        result.verdict = VDB if check_invertible_bimodule(rung).invertible else NONE
        return result
    result.inner = inner_witness(A, result.mu)
    result.verdict = CY if result.inner is not None else SKEW_CY
    if result.verdict == CY:
        result.report.record("S² inner", inner_witness(A, H.antipode_power(2)) is not None)
        result.report.record("∫r = ε", result.integral.right.is_counit())
    logger.info(f"{H.name}: {result.label()}")
    return result
