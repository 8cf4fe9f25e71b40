"""Invertibility of bimodules through the two evaluation maps."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from ..core.field import Scalar
from ..core.linalg import LinearMap, Vec, vec_axpy
from ..core.modules import Bimodule
from ..core.report import CheckReport
from ..smash.smash import SmashAlgebra
from .bimodule import EquivariantBimodule
from .duals import LEFT, RIGHT, DualBimodule
from .smash_bimodule import SmashBimodule, require_commutes_with_square
from .tensor import BalancedTensor

logger = logging.getLogger(__name__)


@dataclass
class InvertibilityVerdict:
    """Outcome of testing M ⊗ Hom_A(M, A) -> A and Hom_{A^op}(M, A) ⊗ M -> A.

    Attributes:
        invertible: Both evaluations are bijective
        inverse: Hom_A(M, A) when M is invertible
        left_evaluation: m ⊗ f -> f(m)
        right_evaluation: f ⊗ m -> f(m)
        report: Well-definedness and bilinearity of both evaluations
    """
    invertible: bool
    inverse: Optional[Bimodule]
    left_evaluation: LinearMap
    right_evaluation: LinearMap
    report: CheckReport

    def to_dict(self) -> Dict[str, Any]:
        return {
            "invertible": self.invertible,
            "inverse_dim": self.inverse.dim if self.inverse is not None else None,
            "left_evaluation_rank": self.left_evaluation.rank(),
            "right_evaluation_rank": self.right_evaluation.rank(),
            "report": self.report.to_dict(),
        }


def _evaluation(tensor: BalancedTensor, dual: DualBimodule, dual_first: bool) -> Tuple[LinearMap, bool]:
    """The map induced by the pairing, and whether it respects the balancing relations."""
    n = tensor.right.dim

    def pair(v: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for idx, c in v.items():
            p, q = divmod(idx, n)
            f, m = (p, q) if dual_first else (q, p)
            vec_axpy(out, c, dual.maps[f].cols[m])
        return out

    return tensor.descend(pair, dual.algebra.dim), tensor.kills_relations(pair)


def _is_bimodule_map(f: LinearMap, source: Bimodule, target: Bimodule) -> bool:
    return (all(f.compose(source.left[i]) == target.left[i].compose(f) for i in range(len(source.left)))
            and all(f.compose(source.right[j]) == target.right[j].compose(f) for j in range(len(source.right))))


def check_invertible_bimodule(M: Union[Bimodule, EquivariantBimodule]) -> InvertibilityVerdict:
    """Decide invertibility of an A-bimodule from its one-sided duals."""
    bimodule = M.bimodule if isinstance(M, EquivariantBimodule) else M
    A = bimodule.left_algebra
    regular = Bimodule.regular(A)
    left_dual = DualBimodule(bimodule, LEFT)
    right_dual = DualBimodule(bimodule, RIGHT)
    first = BalancedTensor(bimodule, left_dual.bimodule)
    second = BalancedTensor(right_dual.bimodule, bimodule)
    ev_left, left_ok = _evaluation(first, left_dual, dual_first=False)
    ev_right, right_ok = _evaluation(second, right_dual, dual_first=True)

    report = CheckReport(f"invertibility of {bimodule.name}")
    report.record("left evaluation well defined", left_ok)
    report.record("right evaluation well defined", right_ok)
    report.record("left evaluation bilinear", _is_bimodule_map(ev_left, first.bimodule, regular))
    report.record("right evaluation bilinear", _is_bimodule_map(ev_right, second.bimodule, regular))
    invertible = ev_left.is_bijective() and ev_right.is_bijective()
    logger.debug(f"{bimodule.name}: evaluation ranks {ev_left.rank()}/{first.dim} and "
                 f"{ev_right.rank()}/{second.dim} onto {A.dim}")
    return InvertibilityVerdict(
        invertible=invertible,
        inverse=left_dual.bimodule if invertible else None,
        left_evaluation=ev_left,
        right_evaluation=ev_right,
        report=report,
    )


@dataclass
class TransferVerdict:
    """Invertibility of D over A and of D♯^σH over Λ, decided separately."""

    bimodule_invertible: bool
    smash_invertible: bool

    @property
    def agree(self) -> bool:
        return self.bimodule_invertible == self.smash_invertible

    def to_dict(self) -> Dict[str, bool]:
        return {
            "bimodule_invertible": self.bimodule_invertible,
            "smash_invertible": self.smash_invertible,
            "agree": self.agree,
        }


def invertibility_transfer(D: EquivariantBimodule, sigma: LinearMap,
                           smash: Optional[SmashAlgebra] = None) -> TransferVerdict:
    """Test D and D♯^σH for invertibility independently.

    Raises:
        SigmaConditionError: σ fails its coproduct condition or does not commute with S^2
    """
    require_commutes_with_square(D, sigma)
    lifted = SmashBimodule(D, sigma, smash=smash)
    verdict = TransferVerdict(
        bimodule_invertible=check_invertible_bimodule(D).invertible,
        smash_invertible=check_invertible_bimodule(lifted.bimodule).invertible,
    )
    if not verdict.agree:
        logger.error(f"Invertibility of {D.name} ({verdict.bimodule_invertible}) and "
                     f"{lifted.bimodule.name} ({verdict.smash_invertible}) disagree")
    return verdict
