"""Ext^n_{A^e}(A, A^e) of a polynomial algebra, read off the Koszul resolution.

Hom_{A^e}(K_n, A^e) is A^e on the dual e of the top wedge, and the image of
d_n^* is the ideal generated by x_r ⊗ 1 - 1 ⊗ x_r. The quotient is computed
degree by degree; the class of e freely generates it, μ_A = id, and the
H-action on e is a scalar.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..core.field import Scalar
from ..core.linalg import LinearMap, Subspace, Vec
from ..core.report import CheckReport
from ..hopf.characters import Character
from ..hopf.exceptions import CharacterError
from .polynomial import PolynomialModuleAlgebra, monomial_product, variable
from .resolution import KoszulResolutionData, koszul_resolution

logger = logging.getLogger(__name__)


@dataclass
class PolynomialTopExt:
    """The top Ext of a polynomial module algebra with its Nakayama and hdet data.

    Attributes:
        degree: n, the only nonzero Ext degree
        shift: ℓ in Ext^n ≅ A^μ(ℓ), the internal degree of the top wedge
        dims: dim Ext^n in internal degrees 0..T
        mu: μ_A on the variables
        delta: the scalar by which each basis element of H acts on Λ^n(V)
        lambda_values: h⇀e = λ(h)e
        hdet: the homological determinant, h⇀e = hdet(S(h))e
    """
    algebra: PolynomialModuleAlgebra
    resolution: KoszulResolutionData
    degree: int
    shift: int
    dims: List[int]
    mu: LinearMap
    delta: List[Scalar]
    lambda_values: List[Scalar]
    hdet: Optional[Character]
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        P = self.algebra
        F, H = P.field, P.hopf
        return {
            "algebra": P.name,
            "degree": self.degree,
            "shift": self.shift,
            "dims": self.dims,
            "mu": self.mu.to_rows(),
            "lambda": {H.labels[h]: F.format(c) for h, c in enumerate(self.lambda_values)},
            "hdet": self.hdet.to_dict() if self.hdet is not None else None,
            "report": self.report.to_dict(),
        }


def _coboundary(res: KoszulResolutionData, m: int) -> LinearMap:
    """d_n^*: ⊕_r A^e_{m-1} -> A^e_m, (f_r) -> Σ_r (-1)^r (x_r ⊗ 1 - 1 ⊗ x_r) f_r."""
    F, n = res.algebra.field, res.length
    target = res.index(0, m)
    source = res.term_basis(0, m - 1) if m >= 1 else []
    cols: List[Vec] = []
    for r in range(n):
        sign = F.one if r % 2 == 0 else -F.one
        x = variable(n, r)
        for alpha, empty, beta in source:
            cols.append({target[(monomial_product(alpha, x), empty, beta)]: sign,
                         target[(alpha, empty, monomial_product(beta, x))]: -sign})
    return LinearMap(F, len(cols), res.term_dim(0, m), cols)


def determinant(M: LinearMap, one: Scalar) -> Scalar:
    return M.matrix().det() if M.shape[0] else one


def poly_top_ext(P: PolynomialModuleAlgebra, resolution: Optional[KoszulResolutionData] = None) -> PolynomialTopExt:
    """Extract Ext^n_{A^e}(A, A^e), μ_A and hdet from the Koszul resolution of P.

    The quotient A^e/(x_r ⊗ 1 - 1 ⊗ x_r) is built through the truncation
    degree; μ_A is solved from e·a = μ(a)·e there. The H-action on e only
    involves Λ^n(V), so hdet does not depend on the truncation.
    """
    res = resolution if resolution is not None else koszul_resolution(P)
    F, H, n = P.field, P.hopf, P.n
    T = res.degree
    report = CheckReport(f"top Ext of {P.name}")
    report.extend(res.report, prefix="resolution ")

    dims: List[int] = []
    mus: Dict[int, LinearMap] = {}
    zero = tuple([0] * n)
    for m in range(T + 1):
        boundaries = Subspace.image(_coboundary(res, m))
        index = res.index(0, m)
        dims.append(boundaries.codim)
        basis = P.basis(m)
        left = LinearMap(F, len(basis), boundaries.codim,
                         [boundaries.quotient_coordinates({index[(zero, (), g)]: F.one}) for g in basis])
        right = LinearMap(F, len(basis), boundaries.codim,
                          [boundaries.quotient_coordinates({index[(g, (), zero)]: F.one}) for g in basis])
        if left.is_bijective():
            mus[m] = left.inverse().compose(right)
    report.sweep("Ext^n free of rank one", ((m,) for m in range(T + 1)), lambda m: dims[m] == P.dim(m))
    report.sweep("a ↦ a·e bijective", ((m,) for m in range(T + 1)), lambda m: m in mus)
    report.sweep("μ_A = id", ((m,) for m in range(T + 1)), lambda m: m in mus and mus[m].is_identity())
    mu = mus.get(1, LinearMap.identity(F, n)) if T >= 1 else LinearMap.identity(F, n)

    top = res.wedge_operator
    delta = [top(h, n).cols[0].get(0, F.zero) for h in range(H.dim)]
    S_inv = H.antipode_power(-1)

    def through(values: List[Scalar], v: Vec) -> Scalar:
        total = F.zero
        for i, c in v.items():
            total += c * values[i]
        return total

    lambda_values = [through(delta, S_inv.cols[h]) for h in range(H.dim)]
    hdet_values = [through(lambda_values, S_inv.cols[h]) for h in range(H.dim)]
    hdet: Optional[Character] = None
    try:
        hdet = Character(H, hdet_values, name="hdet")
    except CharacterError as err:
        report.record("hdet multiplicative", False, detail=str(err))
    if hdet is not None:
        report.record("hdet∘S² = hdet", hdet.compose_antipode(2) == hdet)
        if H.group_table is not None:
            table = H.group_table
            inverse = [row.index(0) for row in table]
            report.sweep("hdet(g) = det(M_g)", ((g,) for g in range(H.dim)),
                         lambda g: hdet_values[g] == determinant(P.linear_action[g], F.one))
            report.sweep("hdet constant on conjugacy classes",
                         ((g, k) for g in range(H.dim) for k in range(H.dim)),
                         lambda g, k: hdet_values[table[table[k][g]][inverse[k]]] == hdet_values[g])
    logger.info(f"{P.name}: top Ext in degree {n}, hdet {hdet.to_dict() if hdet is not None else None}")
    return PolynomialTopExt(P, res, n, n, dims, mu, delta, lambda_values, hdet, report)
