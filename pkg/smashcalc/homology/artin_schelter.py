"""Artin-Schelter conditions for A, H and A♯H, and the Ext comparison between Λ and A."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from ..core.algebra import FinDimAlgebra
from ..core.field import Scalar
from ..core.modules import LeftModule
from ..core.report import CheckReport
from ..smash.action import ModuleAlgebraAction
from ..smash.smash import SmashAlgebra
from . import config
from .exceptions import HomologyError, PreconditionError
from .ext import ExtGroups, ext_one_sided, smash_module_ext
from .resolution import SmoothnessVerdict, module_probe, trivial_module

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"
REGULAR = "regular"
TRIVIAL = "trivial"


@dataclass
class ArtinSchelterData:
    """Ext^*(k, B) on one side: its dimensions and, when one-dimensional in degree n, the character."""
    algebra: FinDimAlgebra
    side: str
    dims: List[int]
    degree: Optional[int] = None
    character: Optional[List[Scalar]] = None
    regular: Optional[bool] = None

    @property
    def holds(self) -> bool:
        return self.character is not None

    def label(self) -> str:
        if not self.holds:
            return f"not {self.side} AS (dims {self.dims})"
        suffix = ", regular" if self.regular else ""
        return f"{self.side} AS of dimension {self.degree}{suffix}"

    def to_dict(self) -> Dict[str, Any]:
        F = self.algebra.field
        return {
            "side": self.side,
            "dims": self.dims,
            "degree": self.degree,
            "holds": self.holds,
            "regular": self.regular,
            "character": {self.algebra.labels[i]: F.format(c) for i, c in enumerate(self.character)}
            if self.character is not None else None,
        }


def _from_groups(B: FinDimAlgebra, side: str, groups: ExtGroups) -> ArtinSchelterData:
    data = ArtinSchelterData(algebra=B, side=side, dims=groups.dims)
    d = groups.concentrated()
    if d is not None and groups.groups[d].dim == 1:
        F = B.field
        data.degree = d
        data.character = [op.cols[0].get(0, F.zero) if op.cols else F.zero for op in groups.operators[d]]
    return data


def artin_schelter(B: FinDimAlgebra, augmentation: Sequence[Scalar], side: str = LEFT,
                   bound: Optional[int] = None) -> ArtinSchelterData:
    """Test Ext^i(k, B) = δ_{i,n} k on one side, reading the character of the residual action.

    left:  Ext_B(k, B) with its right B-action, the character λ_B
    right: Ext_{B^op}(k, B) with its left B-action
    """
    bound = config.RESOLUTION_BOUND if bound is None else bound
    if side == LEFT:
        ring = B
        k = trivial_module(ring, augmentation)
        groups = ext_one_sided(ring, k, max_degree=bound)
    else:
        ring = B.opposite()
        k = trivial_module(ring, augmentation)
        N = LeftModule(ring, B.dim, B.right_regular(), name=f"{B.name} over {ring.name}", labels=B.labels)
        groups = ext_one_sided(ring, k, N, max_degree=bound, extra_ops=B.left_regular())
    data = _from_groups(B, side, groups)
    if data.holds:
        try:
            data.regular = module_probe(ring, k, bound).kind == SmoothnessVerdict.SMOOTH
        except HomologyError as e:
            logger.warning(f"Global dimension probe of {B.name} failed: {e}")
    logger.debug(f"{B.name}: {data.label()}")
    return data


def base_module(smash: SmashAlgebra) -> LeftModule:
    """A as a Λ-module: (a#h)·b = a(h⇀b)."""
    A, H, action = smash.base, smash.hopf, smash.action
    m = H.dim

    def act(i: int, b: int):
        a, h = divmod(i, m)
        return A.product(A.e(a), action.act_basis(h, A.e(b)))

    return LeftModule.from_function(smash.algebra, A.dim, act)


def smash_augmentation(smash: SmashAlgebra) -> List[Scalar]:
    """ε_Λ(a#h) = ε_A(a)ε(h)."""
    action = smash.action
    if action.augmentation is None:
        raise PreconditionError(f"{smash.base.name} carries no augmentation")
    return [action.augmentation[a] * smash.hopf.counit[h] for a in range(smash.base.dim) for h in range(smash.hopf.dim)]


@dataclass
class ArtinSchelterReport:
    """Artin-Schelter data of A, H and Λ with the λ_Λ formula comparison."""
    algebra: ArtinSchelterData
    hopf: ArtinSchelterData
    smash: ArtinSchelterData
    right: Dict[str, ArtinSchelterData]
    delta: Optional[List[Scalar]]
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra.to_dict(),
            "hopf": self.hopf.to_dict(),
            "smash": self.smash.to_dict(),
            "right": {k: v.to_dict() for k, v in self.right.items()},
            "delta": [str(x) for x in self.delta] if self.delta is not None else None,
            "report": self.report.to_dict(),
        }


def extract_delta(smash: SmashAlgebra, degree: int) -> Optional[List[Scalar]]:
    """The character of H on Ext^n_A(k, A), or None when that space is not one-dimensional."""
    k = trivial_module(smash.algebra, smash_augmentation(smash))
    ext = smash_module_ext(smash, k, base_module(smash), degree)
    if ext.base_dims[degree] != 1:
        return None
    F = smash.field
    return [op.cols[0].get(0, F.zero) if op.cols else F.zero for op in ext.h_operators[degree]]


def as_smash_check(action: ModuleAlgebraAction, bound: Optional[int] = None,
                   delta: Optional[Sequence[Scalar]] = None) -> ArtinSchelterReport:
    """AS data of A, H and A♯H, and λ_Λ(a#h) = λ_A(a)δ(S⁻¹(h₁))λ_H(h₂) against λ_Λ computed on Λ.

    ``delta`` replaces the δ read off Ext^n_A(k, A).

    Raises:
        PreconditionError: the action carries no augmentation
    """
    if action.augmentation is None:
        raise PreconditionError(f"{action.name} carries no augmentation")
    A, H, F = action.algebra, action.hopf, action.field
    smash = SmashAlgebra(action)
    Lam = smash.algebra
    report = CheckReport(f"Artin-Schelter conditions for {Lam.name}")
    eps_Lam = smash_augmentation(smash)
    data_A = artin_schelter(A, action.augmentation, LEFT, bound)
    data_H = artin_schelter(H.algebra, H.counit, LEFT, bound)
    data_L = artin_schelter(Lam, eps_Lam, LEFT, bound)
    right = {
        A.name: artin_schelter(A, action.augmentation, RIGHT, bound),
        H.name: artin_schelter(H.algebra, H.counit, RIGHT, bound),
        Lam.name: artin_schelter(Lam, eps_Lam, RIGHT, bound),
    }
    for data in (data_A, data_H, data_L):
        logger.info(f"{data.algebra.name}: {data.label()}")
    out = ArtinSchelterReport(data_A, data_H, data_L, right, None, report)
    if not (data_A.holds and data_H.holds):
        report.skip("Λ left AS", "A or H is not left AS")
        return out
    report.record("Λ left AS", data_L.holds, detail=data_L.label())
    if data_L.holds:
        report.record("dimensions add", data_L.degree == data_A.degree + data_H.degree,
                      detail=f"{data_L.degree} = {data_A.degree} + {data_H.degree}")

    if delta is None:
        out.delta = extract_delta(smash, data_A.degree)
    else:
        out.delta = [F.element(x) for x in delta]
    if out.delta is None:
        report.skip("λ_Λ formula", f"Ext^{data_A.degree}_A(k, A) is not one-dimensional")
        return out
    if not data_L.holds:
        return out
    S_inv = H.antipode_power(-1)
    m = H.dim

    def delta_of(v) -> Scalar:
        total = F.zero
        for i, c in v.items():
            total += c * out.delta[i]
        return total

    def formula(a: int, h: int) -> Scalar:
        total = F.zero
        for (h1, h2), c in H.comul[h].items():
            total += c * delta_of(S_inv.cols[h1]) * data_H.character[h2]
        return data_A.character[a] * total

    report.sweep("λ_Λ(a#h) = λ_A(a)δ(S⁻¹(h₁))λ_H(h₂)",
                 ((a, h) for a in range(A.dim) for h in range(m)),
                 lambda a, h: data_L.character[a * m + h] == formula(a, h))
    return out


@dataclass
class SpectralDimensionReport:
    """dim Ext^q_Λ(M, N) against dim Ext^q_A(M, N)^H."""
    smash_dims: List[int]
    base_dims: List[int]
    invariant_dims: List[int]
    semisimple: bool
    free_dims: Optional[List[int]] = None
    coefficients: str = REGULAR
    report: CheckReport = field(default_factory=lambda: CheckReport("spectral sequence dimensions"))

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ext_smash": self.smash_dims,
            "ext_base": self.base_dims,
            "ext_base_invariants": self.invariant_dims,
            "hopf_semisimple": self.semisimple,
            "coefficients": self.coefficients,
            "ext_base_into_A": self.free_dims,
            "report": self.report.to_dict(),
        }


def hopf_semisimple(action: ModuleAlgebraAction) -> bool:
    """A left integral with ε(t) != 0 exists."""
    H = action.hopf
    return any(H.counit_of(t) for t in H.left_integrals().basis)


def ss_dimension_consistency(action: ModuleAlgebraAction, M: Optional[LeftModule] = None,
                             N: Optional[LeftModule] = None, bound: Optional[int] = None,
                             coefficients: str = REGULAR) -> SpectralDimensionReport:
    """Compare Ext_Λ(M, N) with the H-invariants of Ext_A(M, N).

    Degree 0 is compared always; higher degrees only when H is semisimple.
    M defaults to k through the augmentation. N defaults to Λ itself for
    ``coefficients="regular"``, and then Ext_A(M, Λ) is also compared with
    dim H copies of Ext_A(M, A); ``coefficients="trivial"`` takes N = k.

    Raises:
        PreconditionError: k is needed and the action carries no augmentation
        HomologyError: ``coefficients`` is neither regular nor trivial
    """
    if coefficients not in (REGULAR, TRIVIAL):
        raise HomologyError(f"Unknown coefficients {coefficients!r}, expected {REGULAR} or {TRIVIAL}")
    bound = config.RESOLUTION_BOUND if bound is None else bound
    smash = SmashAlgebra(action)
    Lam = smash.algebra
    label = coefficients if N is None else N.name
    regular_target = N is None and coefficients == REGULAR
    if M is None or (N is None and not regular_target):
        k = trivial_module(Lam, smash_augmentation(smash))
        if M is None:
            M = k
        if N is None and not regular_target:
            N = k
    if regular_target:
        N = LeftModule.regular(Lam)
    ext = smash_module_ext(smash, M, N, bound)
    semisimple = hopf_semisimple(action)
    out = SpectralDimensionReport(ext.smash_dims, ext.base_dims, ext.invariant_dims, semisimple,
                                  coefficients=label,
                                  report=CheckReport(f"Ext over {Lam.name} against Ext over {action.algebra.name}"))
    out.report.record("Hom_Λ(M, N) = Hom_A(M, N)^H", ext.smash_dims[0] == ext.invariant_dims[0],
                      detail=f"{ext.smash_dims[0]} vs {ext.invariant_dims[0]}")
    if semisimple:
        out.report.sweep("Ext^q_Λ(M, N) = Ext^q_A(M, N)^H", ((q,) for q in range(1, bound + 1)),
                         lambda q: ext.smash_dims[q] == ext.invariant_dims[q])
    else:
        out.report.skip("Ext^q_Λ(M, N) = Ext^q_A(M, N)^H", "H is not semisimple, the spectral sequence need not collapse")
    if regular_target:
        into_A = smash_module_ext(smash, M, base_module(smash), bound)
        out.free_dims = into_A.base_dims
        m = action.hopf.dim
        out.report.sweep("Ext^q_A(M, Λ) = Ext^q_A(M, A)⊗H", ((q,) for q in range(bound + 1)),
                         lambda q: ext.base_dims[q] == m * into_A.base_dims[q])
    return out
