"""Tasks building Calabi-Yau completions, their deformations and the smash isomorphism."""

from typing import Any, Dict, List

from ..core.report import CheckReport
from ..cycompletion.deformation import deformed_completion, vertex_contraction
from ..cycompletion.dualising import DualisingComplex, dualising_from_ext, hereditary_inverse_dualising
from ..cycompletion.ginzburg import GinzburgAlgebra
from ..cycompletion.quiver import QuiverAction
from ..cycompletion.sigma_smash import completion_smash_iso, sigma_star_smash
from ..cycompletion.tensor_algebra import cy_completion
from ..homology.ext import ext_bimodule
from .base import BaseTask, Outcome, TaskContext
from .exceptions import ValidationError
from .workspace import TaskSpec


def _dualising(context: TaskContext) -> DualisingComplex:
    """D_A from the task's quiver, its quiver action, or the Ext ladder of any other action."""
    ws, spec = context.workspace, context.spec
    if spec.quiver is not None:
        return hereditary_inverse_dualising(ws.quiver(spec.quiver), context.field)
    declared = ws.action(spec.action)
    if isinstance(declared, QuiverAction):
        return hereditary_inverse_dualising(declared.quiver, context.field, declared)
    return dualising_from_ext(ext_bimodule(ws.module_action(spec.action), context.max_degree))


def _strip(data: Dict[str, Any]) -> Dict[str, Any]:
    data.pop("report", None)
    return data


class CyCompleteTask(BaseTask):
    """Π_n(A) through the truncation, and Π_n(A)♯H when H is nontrivial."""

    @property
    def name(self) -> str:
        return "cy-complete"

    @property
    def description(self) -> str:
        return "Build the n-Calabi-Yau completion of a quiver or module algebra and check its structure"

    @property
    def requires_one_of(self) -> List[str]:
        return ["quiver", "action"]

    def _execute(self, context: TaskContext) -> Outcome:
        n = context.spec.n or 2
        D = _dualising(context)
        Pi = cy_completion(D.algebra, D, n, context.truncation)
        report = CheckReport(f"completion {Pi.name}")
        report.extend(Pi.report)
        data: Dict[str, Any] = {
            "dualising": _strip(D.to_dict()),
            "completion": _strip(Pi.to_dict()),
        }
        if D.hopf.dim > 1:
            smash = sigma_star_smash(Pi, D.module)
            report.extend(smash.report, prefix="smash ")
            data["smash"] = {"name": smash.name, "dims": smash.dims()}
        return data, report


class DeformTask(BaseTask):
    """A deformed completion Π_n(A, c) from vertex weights, or a Ginzburg algebra from a potential."""

    @property
    def name(self) -> str:
        return "deform"

    @property
    def description(self) -> str:
        return "Deform a completion by vertex weights, or build Γ_n(Q, W) from a potential"

    @property
    def requires_one_of(self) -> List[str]:
        return ["quiver", "action"]

    def validate_parameters(self, spec: TaskSpec) -> None:
        super().validate_parameters(spec)
        if spec.potential and spec.quiver is None:
            raise ValidationError(f"Task {spec.name}: a potential needs a quiver")
        if spec.potential and spec.weights:
            raise ValidationError(f"Task {spec.name}: give either a potential or vertex weights")

    def _execute(self, context: TaskContext) -> Outcome:
        spec = context.spec
        if spec.potential:
            Q = context.workspace.quiver(spec.quiver)
            potential = {tuple(cycle): coeff for cycle, coeff in spec.potential}
            gamma = GinzburgAlgebra(Q, context.field, potential, spec.n or 3, length=context.truncation)
            report = gamma.check()
            data = gamma.to_dict()
            data["h0_dims"] = gamma.degree_zero_dims(context.max_degree)
            return data, report
        n = spec.n or 2
        D = _dualising(context)
        c = vertex_contraction(D, spec.weights)
        deformed = deformed_completion(D, n, c, context.truncation, bound=context.bound)
        data = _strip(deformed.to_dict())
        data["algebra"] = _strip(data["algebra"])
        data["cocycle"] = _strip(data["cocycle"])
        if "iso" in data:
            data["iso"] = _strip(data["iso"])
        return data, deformed.report


class IsoCheckTask(BaseTask):
    """Φ: Π_n(A)♯H ≅ Π_{n+d}(A♯H), certified degree by degree."""

    @property
    def name(self) -> str:
        return "iso-check"

    @property
    def description(self) -> str:
        return "Certify the isomorphism between the completion of A smashed with H and the completion of A♯H"

    @property
    def requires(self) -> List[str]:
        return ["action"]

    def _execute(self, context: TaskContext) -> Outcome:
        D = _dualising(context)
        iso = completion_smash_iso(D, context.spec.n or 2, context.truncation, bound=context.bound)
        return _strip(iso.to_dict()), iso.report
