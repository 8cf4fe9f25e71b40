"""The Calabi-Yau criterion for A♯H when A is a polynomial algebra."""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional

from ..core.linalg import LinearMap
from ..core.report import CheckReport
from ..homology.integrals import classify_hopf
from ..homology.nakayama import CY
from ..homology.theorems import CySmashVerdict, central_twist_unit, status_label
from ..hopf.inner import inner_witness
from .polynomial import PolynomialModuleAlgebra
from .top_ext import determinant, poly_top_ext

logger = logging.getLogger(__name__)


def graded_cy_smash(P: PolynomialModuleAlgebra, bound: Optional[int] = None) -> CySmashVerdict:
    """Decide whether A♯H is CY for A = k[x₁..x_n] and compare with conditions (a), (b), (c).

    A is CY, so (a) holds whenever the Koszul data certifies μ_A = id; (b)
    is hdet = ε; (c) asks for a central unit k with h₀k acting as the
    identity, with h₀ implementing S⁻². For H = kG with char k ∤ |G|, Λ is
    CY exactly when hdet = ε. A modular group or a Hopf algebra that is
    not a group algebra leaves the Λ side undetermined.
    """
    H, F = P.hopf, P.field
    top = poly_top_ext(P)
    report = CheckReport(f"Calabi-Yau criterion for {P.name}♯{H.name}")
    report.extend(top.report, prefix="top Ext ")
    details: Dict[str, Any] = {"top_ext": top.to_dict(), "shift": top.shift}
    conditions: Dict[str, Optional[bool]] = {"a": None, "b": None, "c": None}

    identity = report.get("top Ext μ_A = id")
    conditions["a"] = identity.passed if identity is not None else None
    if top.hdet is not None:
        conditions["b"] = top.hdet.is_counit()

    h0 = inner_witness(H, H.antipode_power(-2))
    if h0 is None:
        report.record("S⁻² inner", False)
    else:
        details["h0"] = H.format(h0)
        action = P.truncated_action()
        k = central_twist_unit(action, h0, LinearMap.identity(F, action.algebra.dim))
        conditions["c"] = k is not None
        if k is not None:
            details["k"] = H.format(k)

    smash_cy: Optional[bool] = None
    if H.group_table is None:
        hopf_class = classify_hopf(H, bound)
        details["hopf"] = hopf_class.label()
        if hopf_class.verdict != CY:
            report.skip("Λ CY", f"{H.name} is {hopf_class.label()}")
        else:
            report.skip("Λ CY", f"{H.name} is not a group algebra, the determinant criterion does not apply")
    elif F.characteristic and H.dim % F.characteristic == 0:
        details["modular"] = True
        report.skip("Λ CY", f"char {F.characteristic} divides |G| = {H.dim}")
    elif top.hdet is not None:
        smash_cy = top.hdet.is_counit()
        report.record("hdet = ε ⟺ G ⊂ SL(V)", smash_cy == all(
            determinant(M, F.one) == F.one for M in P.linear_action), detail=f"hdet {top.hdet.to_dict()}")

    verdict = CySmashVerdict(f"{P.name}♯{H.name}", conditions, smash_cy, report, details)
    if verdict.consistent is None:
        report.skip("conditions ⟺ Λ CY", "a side is undetermined")
    else:
        report.record("conditions ⟺ Λ CY", verdict.consistent,
                      detail=f"conditions {status_label(verdict.conditions_hold)}, Λ CY {status_label(smash_cy)}")
    logger.info(f"{P.name}: Λ CY {status_label(smash_cy)}, conditions {status_label(verdict.conditions_hold)}")
    return verdict
