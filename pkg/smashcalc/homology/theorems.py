"""Verification of the Nakayama and Calabi-Yau statements for smash products A♯H."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..core.algebra import AlgebraMorphism
from ..core.exceptions import NotInvertibleError
from ..core.linalg import LinearMap, Subspace, Vec, solve_linear, vec_axpy
from ..core.report import CheckReport
from ..equivariant.exceptions import SigmaConditionError
from ..equivariant.smash_bimodule import SmashBimodule
from ..hopf.inner import inner_witness
from ..hopf.library import cyclic_group_algebra
from ..smash.action import ModuleAlgebraAction
from ..smash.smash import SmashAlgebra
from . import config
from .exceptions import HomologyError, PreconditionError
from .ext import bimodule_ext, ext_bimodule
from .hdet import WeakHdet, epsilon_hdet_witness, theta_report, theta_whdet, weak_hdet
from .integrals import HopfClassification, classify_hopf
from .nakayama import CY, SKEW_CY, AlgebraClassification, classify_algebra, find_free_generator, nakayama_from_generator

logger = logging.getLogger(__name__)

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "undetermined"


def _skew_cy(verdict: str) -> bool:
    return verdict in (CY, SKEW_CY)


def status_label(value: Optional[bool]) -> str:
    if value is None:
        return UNKNOWN
    return HOLDS if value else FAILS


@dataclass
class NakayamaSmashRecord:
    """μ_Λ = μ_A♯(θ_whdet∘μ_H) against the Nakayama automorphism computed on Λ itself."""
    action: ModuleAlgebraAction
    algebra_class: AlgebraClassification
    hopf_class: HopfClassification
    weak: WeakHdet
    formula: AlgebraMorphism
    direct: Optional[AlgebraMorphism]
    witness: Optional[Vec]
    isomorphism: Optional[LinearMap]
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        Lam = self.formula.source
        return {
            "smash": Lam.name,
            "degree": (self.algebra_class.degree or 0) + (self.hopf_class.degree or 0),
            "formula": self.formula.to_dict(),
            "direct": self.direct.to_dict() if self.direct is not None else None,
            "inner_witness": Lam.format(self.witness) if self.witness is not None else None,
            "whdet": self.weak.to_dict(),
            "report": self.report.to_dict(),
        }


def _require_skew_cy(action: ModuleAlgebraAction, bound: Optional[int]):
    algebra_class = classify_algebra(action.algebra, bound)
    if not _skew_cy(algebra_class.verdict):
        raise PreconditionError(f"{action.algebra.name} is {algebra_class.label()}, not skew-Calabi-Yau")
    hopf_class = classify_hopf(action.hopf, bound)
    if not _skew_cy(hopf_class.verdict):
        raise PreconditionError(f"{action.hopf.name} is {hopf_class.label()}, not skew-Calabi-Yau")
    return algebra_class, hopf_class


def nakayama_smash(action: ModuleAlgebraAction, bound: Optional[int] = None) -> NakayamaSmashRecord:
    """Build μ_Λ from the data of A and H and compare it with Ext_{Λ^e}(Λ, Λ^e).

    Also matches the top rung of Λ with Ext^n_{A^e}(A, A^e)♯^{μ_H⁻¹}H as Λ-bimodules.

    Raises:
        PreconditionError: A or H is not skew-Calabi-Yau
    """
    algebra_class, hopf_class = _require_skew_cy(action, bound)
    n, d = algebra_class.degree, hopf_class.degree
    A, H = action.algebra, action.hopf
    smash = SmashAlgebra(action)
    Lam = smash.algebra
    report = CheckReport(f"Nakayama automorphism of {Lam.name}")

    ladder = ext_bimodule(action, n)
    rung = ladder.rung(n)
    report.record(f"Ext^{n}({A.name}) equivariant of index 1", ladder.reports[n].passed)
    weak = weak_hdet(action, rung)
    report.extend(weak.report, prefix="whdet ")
    mu_A = nakayama_from_generator(rung, weak.generator, degree=n)
    report.extend(mu_A.report, prefix="μ_A ")
    theta = theta_whdet(weak, smash)
    report.extend(theta_report(weak, theta, smash))

    mu_H = hopf_class.mu
    m = H.dim
    cols: List[Vec] = []
    for a in range(A.dim):
        base = smash.embed_base(mu_A.mu.cols[a])
        for h in range(m):
            cols.append(smash.product(base, theta(mu_H.cols[h])))
    formula = AlgebraMorphism(Lam, Lam, cols, name=f"μ[{Lam.name}] formula")
    report.extend(formula.check(), prefix="formula ")
    report.record("formula bijective", formula.is_bijective())

    record = NakayamaSmashRecord(action, algebra_class, hopf_class, weak, formula, None, None, None, report)
    top = n + d
    smash_ladder = bimodule_ext(Lam, top)
    if smash_ladder.truncated:
        report.record(f"Ext^{top}({Lam.name}) computed", False, detail=f"ladder stops at {smash_ladder.reliable_through}")
        return record
    smash_rung = smash_ladder.rung(top)
    e = find_free_generator(smash_rung)
    if e is None:
        report.record(f"Ext^{top}({Lam.name}) free of rank one", False, detail=f"dimension {smash_rung.dim}")
        return record
    direct = nakayama_from_generator(smash_rung, e, degree=top)
    record.direct = direct.mu
    report.extend(direct.report, prefix="direct ")
    record.witness = inner_witness(Lam, formula.compose(direct.mu.inverse()))
    report.record("formula and direct Nakayama automorphisms agree up to inner", record.witness is not None)

    try:
        target = SmashBimodule(rung, mu_H.inverse(), smash)
    except (SigmaConditionError, NotInvertibleError) as err:
        report.record(f"Ext^{n}({A.name})♯H built", False, detail=str(err))
        return record
    record.isomorphism = smash_rung.bimodule.find_isomorphism(target.bimodule)
    report.record(f"Ext^{top}({Lam.name}) ≅ Ext^{n}({A.name})♯^(μ_H⁻¹){H.name}", record.isomorphism is not None)
    logger.info(f"{Lam.name}: Nakayama formula {'verified' if report.passed else 'FAILED'}")
    return record


# --- Calabi-Yau criteria --------------------------------------------------

@dataclass
class CySmashVerdict:
    """Conditions (a) A skew-CY, (b) hdet = ε, (c) μ_A = (h₀k)⇀- for a central unit k, against Λ CY."""
    smash_name: str
    conditions: Dict[str, Optional[bool]]
    smash_cy: Optional[bool]
    report: CheckReport
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def conditions_hold(self) -> Optional[bool]:
        values = list(self.conditions.values())
        if any(v is False for v in values):
            return False
        if any(v is None for v in values):
            return None
        return True

    @property
    def consistent(self) -> Optional[bool]:
        """Whether the biconditional holds, or None when a side is undetermined."""
        if self.conditions_hold is None or self.smash_cy is None:
            return None
        return self.conditions_hold == self.smash_cy

    def to_dict(self) -> Dict[str, Any]:
        return {
            "smash": self.smash_name,
            "conditions": {k: status_label(v) for k, v in self.conditions.items()},
            "smash_cy": status_label(self.smash_cy),
            "consistent": status_label(self.consistent),
            "details": self.details,
            "report": self.report.to_dict(),
        }


def central_twist_unit(action: ModuleAlgebraAction, h0: Vec, mu_A: LinearMap) -> Optional[Vec]:
    """A central unit k of H with (h₀k)⇀a = μ_A(a) for all a, or None.

    The conditions are affine in k; units are looked for at the particular
    solution and its sums with one or two kernel vectors.
    """
    H, A, F = action.hopf, action.algebra, action.field
    gens = H.algebra.generators()
    rows = len(gens) * H.dim + A.dim * A.dim
    cols: List[Vec] = []
    for j in range(H.dim):
        col: Vec = {}
        k = H.e(j)
        for r, g in enumerate(gens):
            commutator: Vec = dict(H.product(g, k))
            vec_axpy(commutator, -F.one, H.product(k, g))
            col.update({r * H.dim + i: c for i, c in commutator.items()})
        op = action.operator(H.product(h0, k))
        offset = len(gens) * H.dim
        for a, image in enumerate(op.cols):
            col.update({offset + a * A.dim + i: c for i, c in image.items()})
        cols.append(col)
    T = LinearMap(F, H.dim, rows, cols)
    target: Vec = {}
    offset = len(gens) * H.dim
    for a, image in enumerate(mu_A.cols):
        target.update({offset + a * A.dim + i: c for i, c in image.items()})
    particular = solve_linear(T, target)
    if particular is None:
        return None
    kernel = Subspace.kernel(T).basis
    candidates = [particular]
    candidates += [_plus(particular, v) for v in kernel]
    candidates += [_plus(_plus(particular, u), v) for i, u in enumerate(kernel) for v in kernel[i + 1:]]
    for k in candidates:
        if H.algebra.is_unit(k):
            return k
    return None


def _plus(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for i, c in v.items():
        out[i] = out.get(i, 0) + c
    return {i: c for i, c in out.items() if c}


def cy_smash_check(action, bound: Optional[int] = None) -> CySmashVerdict:
    """Test whether A♯H is CY exactly when (a), (b) and (c) hold.

    Polynomial algebras go through the Koszul oracle; finite-dimensional
    ones through the Ext ladders of A and of Λ.

    Raises:
        PreconditionError: H is not Calabi-Yau
    """
    from ..koszul.polynomial import PolynomialModuleAlgebra
    if isinstance(action, PolynomialModuleAlgebra):
        from ..koszul.graded import graded_cy_smash
        return graded_cy_smash(action, bound)

    H, A = action.hopf, action.algebra
    hopf_class = classify_hopf(H, bound)
    if hopf_class.verdict != CY:
        raise PreconditionError(f"{H.name} is {hopf_class.label()}, not Calabi-Yau")
    smash = SmashAlgebra(action)
    report = CheckReport(f"Calabi-Yau criterion for {smash.algebra.name}")
    conditions: Dict[str, Optional[bool]] = {"a": None, "b": None, "c": None}
    details: Dict[str, Any] = {"hopf": hopf_class.label()}

    algebra_class = classify_algebra(A, bound)
    details["algebra"] = algebra_class.label()
    if algebra_class.verdict != "undetermined":
        conditions["a"] = _skew_cy(algebra_class.verdict)
    if conditions["a"]:
        n = algebra_class.degree
        ladder = ext_bimodule(action, n)
        try:
            weak = weak_hdet(action, ladder.rung(n))
        except HomologyError as err:
            report.record("weak hdet", False, detail=str(err))
        else:
            report.extend(weak.report, prefix="whdet ")
            details["whdet"] = weak.to_dict()
            conditions["b"] = epsilon_hdet_witness(weak) is not None
            mu_A = nakayama_from_generator(ladder.rung(n), weak.generator, degree=n).mu
            h0 = inner_witness(H, H.antipode_power(-2))
            if h0 is None:
                report.record("S⁻² inner", False)
            else:
                k = central_twist_unit(action, h0, mu_A)
                conditions["c"] = k is not None
                if k is not None:
                    details["k"] = H.format(k)

    smash_class = classify_algebra(smash.algebra, bound)
    details["smash"] = smash_class.label()
    smash_cy = None if smash_class.verdict == "undetermined" else smash_class.verdict == CY
    verdict = CySmashVerdict(smash.algebra.name, conditions, smash_cy, report, details)
    if verdict.consistent is None:
        report.skip("conditions ⟺ Λ CY", "a side is undetermined")
    else:
        report.record("conditions ⟺ Λ CY", verdict.consistent,
                      detail=f"conditions {status_label(verdict.conditions_hold)}, Λ CY {status_label(smash_cy)}")
    return verdict


def automorphism_order(mu: LinearMap, limit: Optional[int] = None) -> Optional[int]:
    """Least m > 0 with μ^m = id, or None beyond ``limit``."""
    limit = config.AUTOMORPHISM_ORDER_LIMIT if limit is None else limit
    power = mu
    for m in range(1, limit + 1):
        if power.is_identity():
            return m
        power = power.compose(mu)
    return None


@dataclass
class SkewGroupVerdict:
    """A♯k⟨μ_A⟩: (a) whdet(μ_A) = 1 and (b) char k ∤ ord(μ_A), against the direct classification."""
    order: int
    whdet_condition: Optional[bool]
    characteristic_condition: bool
    classification: AlgebraClassification
    report: CheckReport

    @property
    def smash_cy(self) -> bool:
        return self.classification.verdict == CY

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "whdet(μ_A) = 1": status_label(self.whdet_condition),
            "char ∤ order": self.characteristic_condition,
            "smash": self.classification.label(),
            "report": self.report.to_dict(),
        }


def skew_group_cy(A, mu_A: Optional[LinearMap] = None, bound: Optional[int] = None) -> SkewGroupVerdict:
    """Classify A♯k⟨μ_A⟩ directly and compare with the sufficient conditions for CY.

    Without μ_A the Nakayama automorphism of A from its classification is used.

    Raises:
        PreconditionError: μ_A is missing and A has none, or its order exceeds the search limit
    """
    F = A.field
    if mu_A is None:
        algebra_class = classify_algebra(A, bound)
        if algebra_class.nakayama is None:
            raise PreconditionError(f"{A.name} ({algebra_class.label()}) has no Nakayama automorphism")
        mu_A = algebra_class.nakayama.mu
        degree = algebra_class.degree or 0
    else:
        degree = None
    order = automorphism_order(mu_A)
    if order is None:
        raise PreconditionError(f"μ_A has no finite order up to {config.AUTOMORPHISM_ORDER_LIMIT}")
    hopf = cyclic_group_algebra(F, order, generator="μ")
    images = {1: mu_A} if order > 1 else {}
    action = ModuleAlgebraAction.from_group_images(hopf, A, images, name=f"⟨μ⟩⇀{A.name}")
    report = CheckReport(f"{A.name}♯k⟨μ_A⟩")
    report.extend(action.check(), prefix="action ")

    if degree is None:
        degree = classify_algebra(A, bound).degree or 0
    whdet_condition: Optional[bool] = None
    try:
        weak = weak_hdet(action, ext_bimodule(action, degree).rung(degree))
        report.extend(weak.report, prefix="whdet ")
        generator = hopf.e(1) if order > 1 else hopf.unit
        whdet_condition = weak(generator) == A.unit
    except HomologyError as err:
        report.record("weak hdet", False, detail=str(err))
    characteristic_condition = F.characteristic == 0 or order % F.characteristic != 0

    smash = SmashAlgebra(action)
    classification = classify_algebra(smash.algebra, bound)
    verdict = SkewGroupVerdict(order, whdet_condition, characteristic_condition, classification, report)
    if whdet_condition and characteristic_condition:
        report.record("A♯k⟨μ_A⟩ Calabi-Yau", verdict.smash_cy, detail=classification.label())
    else:
        report.skip("A♯k⟨μ_A⟩ Calabi-Yau", "sufficient conditions do not hold")
    return verdict
