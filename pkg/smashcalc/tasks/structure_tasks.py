"""Tasks checking Hopf algebras, actions, smash products and the identity suite."""

from typing import Any, Dict, List

from ..core.report import CheckReport
from ..equivariant.bimodule import check_equivariant
from ..equivariant.invertibility import check_invertible_bimodule, invertibility_transfer
from ..hopf.hopf import verify_hopf
from ..koszul.polynomial import PolynomialModuleAlgebra
from ..smash.action import check_module_algebra
from ..smash.delta import delta_algebra
from ..smash.identities import verify_identities
from ..smash.smash import smash_product
from .base import BaseTask, Outcome, TaskContext


class VerifyTask(BaseTask):
    """Hopf axioms, module-algebra axioms and equivariant bimodule laws, plus invertibility."""

    @property
    def name(self) -> str:
        return "verify"

    @property
    def description(self) -> str:
        return "Check Hopf, module-algebra and equivariance axioms on every basis tuple"

    @property
    def requires_one_of(self) -> List[str]:
        return ["hopf", "action", "bimodule"]

    def _execute(self, context: TaskContext) -> Outcome:
        ws, spec = context.workspace, context.spec
        report = CheckReport(f"verify {spec.name}")
        data: Dict[str, Any] = {}
        if spec.hopf is not None:
            H = ws.hopf(spec.hopf)
            report.extend(verify_hopf(H), prefix=f"{H.name} ")
            data["hopf"] = {"name": H.name, "dim": H.dim, "S² = id": H.antipode_power(2).is_identity()}
        if spec.action is not None:
            declared = ws.action(spec.action)
            if isinstance(declared, PolynomialModuleAlgebra):
                report.extend(declared.check(), prefix="polynomial action ")
            action = ws.module_action(spec.action)
            report.extend(check_module_algebra(action), prefix="action ")
            data["action"] = {"hopf": action.hopf.name, "algebra": action.algebra.name, "dim": action.algebra.dim}
        if spec.bimodule is not None:
            D = ws.bimodule(spec.bimodule)
            report.extend(check_equivariant(D), prefix=f"{D.name} ")
            verdict = check_invertible_bimodule(D)
            report.extend(verdict.report, prefix="invertibility ")
            data["bimodule"] = {"name": D.name, "dim": D.dim, "index": D.index, "invertible": verdict.invertible}
            if spec.sigma is not None:
                transfer = invertibility_transfer(D, ws.morphism(spec.sigma))
                data["transfer"] = transfer.to_dict()
                report.record("invertibility transfers to D♯^σH", transfer.agree,
                              detail=f"D {transfer.bimodule_invertible}, D♯^σH {transfer.smash_invertible}")
        return data, report


class SmashTask(BaseTask):
    """Build A♯H and the algebras Δ_i, verifying associativity and the embeddings."""

    @property
    def name(self) -> str:
        return "smash"

    @property
    def description(self) -> str:
        return "Build and verify the smash product A♯H and the Δ_i algebras"

    @property
    def requires(self) -> List[str]:
        return ["action"]

    def _execute(self, context: TaskContext) -> Outcome:
        ws, spec = context.workspace, context.spec
        action = ws.module_action(spec.action)
        smash = smash_product(action)
        report = CheckReport(f"smash {spec.name}")
        report.extend(smash.verify())
        data: Dict[str, Any] = {"smash": smash.algebra.name, "dim": smash.dim, "labels": smash.algebra.labels}
        deltas = {}
        for i in spec.indices or []:
            delta = delta_algebra(action, i)
            report.extend(delta.verify(), prefix=f"Δ{i} ")
            deltas[str(i)] = delta.dim
        if deltas:
            data["delta_dims"] = deltas
        return data, report


class IdentitiesTask(BaseTask):
    """The full identity suite on all basis tuples, with an optional twist σ."""

    @property
    def name(self) -> str:
        return "identities"

    @property
    def description(self) -> str:
        return "Evaluate the smash, Δ_i and twist identities on every basis tuple"

    @property
    def requires(self) -> List[str]:
        return ["action"]

    def _execute(self, context: TaskContext) -> Outcome:
        ws, spec = context.workspace, context.spec
        action = ws.module_action(spec.action)
        sigma = ws.morphism(spec.sigma) if spec.sigma is not None else None
        report = verify_identities(action, indices=spec.indices, sigma=sigma, sigma_index=spec.sigma_index)
        data = {
            "action": action.name,
            "identities": len(report.checks),
            "failed": [c.name for c in report.failures()],
        }
        return data, report
