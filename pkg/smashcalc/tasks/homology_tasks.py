"""Tasks classifying algebras and computing Nakayama, hdet and Artin-Schelter data."""

from typing import Any, Dict, List, Optional

from ..core.linalg import Vec, vec_axpy
from ..core.report import CheckReport
from ..homology.artin_schelter import as_smash_check, ss_dimension_consistency
from ..homology.exceptions import PreconditionError
from ..homology.ext import ext_bimodule
from ..homology.hdet import epsilon_hdet_witness, rescaled_whdet, theta_whdet, weak_hdet
from ..homology.integrals import classify_hopf
from ..homology.nakayama import classify_algebra
from ..homology.theorems import cy_smash_check, nakayama_smash, skew_group_cy
from ..koszul.polynomial import PolynomialModuleAlgebra
from ..koszul.top_ext import poly_top_ext
from ..smash.action import ModuleAlgebraAction
from ..smash.smash import SmashAlgebra
from .base import BaseTask, Outcome, TaskContext
from .exceptions import ExecutionError


class ClassifyTask(BaseTask):
    """CY, skew-CY, VdB or none, with the certificates behind the verdict."""

    @property
    def name(self) -> str:
        return "classify"

    @property
    def description(self) -> str:
        return "Classify a Hopf algebra, an algebra or a smash product A♯H"

    @property
    def requires_one_of(self) -> List[str]:
        return ["hopf", "algebra", "action"]

    def _execute(self, context: TaskContext) -> Outcome:
        ws, spec = context.workspace, context.spec
        bound = context.bound
        if spec.hopf is not None:
            result = classify_hopf(ws.hopf(spec.hopf), bound)
        elif spec.algebra is not None:
            result = classify_algebra(ws.algebra(spec.algebra), bound)
        else:
            result = classify_algebra(SmashAlgebra(ws.module_action(spec.action)).algebra, bound)
        data = result.to_dict()
        data.pop("report", None)
        return data, result.report


class NakayamaTask(BaseTask):
    """μ_Λ from the formula against μ_Λ read off Ext_{Λ^e}(Λ, Λ^e).

    A base that is not skew-CY is reported as not applicable, with the reason.
    """

    @property
    def name(self) -> str:
        return "nakayama"

    @property
    def description(self) -> str:
        return "Compare the Nakayama automorphism of A♯H with the one built from A and H"

    @property
    def requires(self) -> List[str]:
        return ["action"]

    def _execute(self, context: TaskContext) -> Outcome:
        action = context.workspace.module_action(context.spec.action)
        try:
            record = nakayama_smash(action, context.bound)
        except PreconditionError as e:
            report = CheckReport(f"Nakayama formula for {action.name}")
            report.skip("Nakayama formula", str(e))
            return {"applicable": False, "reason": str(e)}, report
        data = {"applicable": True, **record.to_dict()}
        data.pop("report", None)
        return data, record.report


def _top_degree(action: ModuleAlgebraAction, n: Optional[int], bound: Optional[int]) -> int:
    if n is not None:
        return n
    classification = classify_algebra(action.algebra, bound)
    if classification.degree is not None:
        return classification.degree
    if classification.has_nakayama:
        return 0
    raise ExecutionError(f"{action.algebra.name} is {classification.label()}; no top Ext degree")


def _rescaling_unit(action: ModuleAlgebraAction) -> Optional[Vec]:
    """1 + g for the first generator g making it a unit other than a scalar."""
    A = action.algebra
    for g in A.generators():
        candidate = dict(A.unit)
        vec_axpy(candidate, A.field.one, g)
        candidate = {i: c for i, c in candidate.items() if c}
        if set(candidate) != set(A.unit) and A.is_unit(candidate):
            return candidate
    return None


class HdetTask(BaseTask):
    """The weak homological determinant and, for polynomial rings, the Koszul oracle."""

    @property
    def name(self) -> str:
        return "hdet"

    @property
    def description(self) -> str:
        return "Compute whdet, λ and hdet from the top Ext bimodule and check their laws"

    @property
    def requires(self) -> List[str]:
        return ["action"]

    def _execute(self, context: TaskContext) -> Outcome:
        ws, spec = context.workspace, context.spec
        declared = ws.action(spec.action)
        if isinstance(declared, PolynomialModuleAlgebra):
            top = poly_top_ext(declared)
            data = top.to_dict()
            data.pop("report", None)
            return data, top.report
        action = ws.module_action(spec.action)
        n = _top_degree(action, spec.n, context.bound)
        ladder = ext_bimodule(action, n)
        weak = weak_hdet(action, ladder.rung(n))
        report = CheckReport(f"hdet of {action.name}")
        for rung_report in ladder.reports:
            report.extend(rung_report, prefix="Ext ")
        report.extend(weak.report, prefix="whdet ")
        theta = theta_whdet(weak)
        report.extend(theta.check(), prefix="θ_whdet ")
        data: Dict[str, Any] = {"degree": n, **weak.to_dict()}
        data.pop("passed", None)
        a0 = epsilon_hdet_witness(weak)
        data["epsilon_is_hdet"] = a0 is not None
        if a0 is not None:
            data["epsilon_witness"] = action.algebra.format(a0)
        unit = _rescaling_unit(action)
        if unit is not None:
            _, rescaling = rescaled_whdet(weak, unit)
            report.extend(rescaling, prefix="rescaled ")
            data["rescaled_by"] = action.algebra.format(unit)
        else:
            report.skip("rescaled whdet", "no non-scalar unit of the form 1 + generator")
        return data, report


class CySmashTask(BaseTask):
    """Whether A♯H is Calabi-Yau exactly when conditions (a), (b) and (c) hold."""

    @property
    def name(self) -> str:
        return "cy-smash"

    @property
    def description(self) -> str:
        return "Test the Calabi-Yau criterion for A♯H, or for A♯k⟨μ_A⟩ given an algebra"

    @property
    def requires_one_of(self) -> List[str]:
        return ["action", "algebra"]

    def _execute(self, context: TaskContext) -> Outcome:
        ws, spec = context.workspace, context.spec
        if spec.action is not None:
            declared = ws.action(spec.action)
            target = declared if isinstance(declared, PolynomialModuleAlgebra) else ws.module_action(spec.action)
            verdict = cy_smash_check(target, context.bound)
        else:
            mu = ws.morphism(spec.sigma) if spec.sigma is not None else None
            verdict = skew_group_cy(ws.algebra(spec.algebra), mu, context.bound)
        data = verdict.to_dict()
        data.pop("report", None)
        return data, verdict.report


class AsCheckTask(BaseTask):
    """Artin-Schelter data of A, H and A♯H with the λ_Λ formula."""

    @property
    def name(self) -> str:
        return "as-check"

    @property
    def description(self) -> str:
        return "Check the Artin-Schelter condition on A, H and A♯H and the formula for λ_Λ"

    @property
    def requires(self) -> List[str]:
        return ["action"]

    def _execute(self, context: TaskContext) -> Outcome:
        result = as_smash_check(context.workspace.module_action(context.spec.action), context.bound)
        data = result.to_dict()
        data.pop("report", None)
        return data, result.report


class SsCheckTask(BaseTask):
    """dim Ext^q_Λ(k, N) against the H-invariants of Ext^q_A(k, N), for N = Λ or N = k."""

    @property
    def name(self) -> str:
        return "ss-check"

    @property
    def description(self) -> str:
        return "Compare Ext over A♯H with H-invariants of Ext over A through the degree bound"

    @property
    def requires(self) -> List[str]:
        return ["action"]

    def _execute(self, context: TaskContext) -> Outcome:
        result = ss_dimension_consistency(context.workspace.module_action(context.spec.action),
                                          bound=context.max_degree,
                                          coefficients=context.spec.coefficients)
        data = result.to_dict()
        data.pop("report", None)
        return data, result.report
