"""Characters of a Hopf algebra and their winding automorphisms."""

from __future__ import annotations

import logging
from typing import Dict, List, Mapping, Sequence, Tuple

from ..core.algebra import AlgebraMorphism
from ..core.exceptions import NotInvertibleError
from ..core.field import Scalar
from ..core.linalg import LinearMap, Vec, vec_axpy
from ..core.report import CheckReport
from .exceptions import CharacterError, HopfError
from .hopf import HopfAlgebra, _legs_add

logger = logging.getLogger(__name__)


class Character:
    """An algebra homomorphism π: H -> k stored as a covector.

    Multiplicativity is checked when the character is built.

    Raises:
        CharacterError: π(1) != 1 or π is not multiplicative
    """

    def __init__(self, hopf: HopfAlgebra, values: Sequence[object], name: str = "π"):
        F = hopf.field
        if len(values) != hopf.dim:
            raise CharacterError(f"Character {name} has {len(values)} values for dimension {hopf.dim}")
        self.hopf = hopf
        self.name = name
        self.values: List[Scalar] = [F.element(v) for v in values]
        if self(hopf.unit) != F.one:
            raise CharacterError(f"{name}(1) != 1")
        for i in range(hopf.dim):
            for j in range(hopf.dim):
                if self(hopf.algebra.basis_product(i, j)) != self.values[i] * self.values[j]:
                    raise CharacterError(
                        f"{name} is not multiplicative at ({hopf.labels[i]}, {hopf.labels[j]})")

    @classmethod
    def counit(cls, hopf: HopfAlgebra) -> "Character":
        return cls(hopf, hopf.counit, name="ε")

    def __call__(self, v: Mapping[int, Scalar]) -> Scalar:
        out = self.hopf.field.zero
        for i, c in v.items():
            out += c * self.values[i]
        return out

    def precompose(self, f: LinearMap, name: str = "") -> "Character":
        """π∘f, for f an algebra or anti-algebra endomorphism of H."""
        return Character(self.hopf, [self(col) for col in f.cols], name=name or f"{self.name}∘f")

    def compose_antipode(self, n: int = 1) -> "Character":
        return self.precompose(self.hopf.antipode_power(n), name=f"{self.name}∘S^{n}")

    def is_counit(self) -> bool:
        return self.values == list(self.hopf.counit)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(tuple(str(v) for v in self.values))

    def to_dict(self) -> Dict[str, str]:
        F = self.hopf.field
        return {label: F.format(v) for label, v in zip(self.hopf.labels, self.values)}

    def __repr__(self) -> str:
        return f"Character({self.name}, {self.to_dict()})"


def _winding(hopf: HopfAlgebra, pi: Character, right: bool) -> AlgebraMorphism:
    cols: List[Vec] = []
    for i in range(hopf.dim):
        col: Vec = {}
        for (j, k), c in hopf.comul[i].items():
            if right:
                vec_axpy(col, c * pi.values[k], hopf.e(j))
            else:
                vec_axpy(col, c * pi.values[j], hopf.e(k))
        cols.append(col)
    side = "r" if right else "l"
    return AlgebraMorphism(hopf.algebra, hopf.algebra, cols, name=f"Ξ{side}[{pi.name}]")


def _certify_winding(hopf: HopfAlgebra, xi: AlgebraMorphism, right: bool, pi: Character) -> None:
    inverse = _winding(hopf, pi.compose_antipode(1), right)
    if not xi.compose(inverse).is_identity() or not inverse.compose(xi).is_identity():
        raise HopfError(f"{xi.name} is not inverted by the π∘S winding map")
    S2 = hopf.antipode_power(2)
    if xi.compose(S2) != S2.compose(xi):
        raise HopfError(f"{xi.name} does not commute with S^2")


def winding_right(hopf: HopfAlgebra, pi: Character) -> AlgebraMorphism:
    """Ξ^r_π(h) = h_1 π(h_2), certified against its inverse Ξ^r_{π∘S} and S^2."""
    xi = _winding(hopf, pi, right=True)
    _certify_winding(hopf, xi, True, pi)
    return xi


def winding_left(hopf: HopfAlgebra, pi: Character) -> AlgebraMorphism:
    """Ξ^ℓ_π(h) = π(h_1) h_2, certified like ``winding_right``."""
    xi = _winding(hopf, pi, right=False)
    _certify_winding(hopf, xi, False, pi)
    return xi


def _twisted_coproduct(hopf: HopfAlgebra, first: LinearMap, second: LinearMap, h: Mapping[int, Scalar]):
    out: Dict[Tuple[int, ...], Scalar] = {}
    for (j, k), c in hopf.coproduct(h).items():
        for a, x in first.cols[j].items():
            for b, y in second.cols[k].items():
                _legs_add(out, (a, b), c * x * y)
    return out


def sigma_condition_report(hopf: HopfAlgebra, sigma: LinearMap, i: int) -> CheckReport:
    """σ(h)_1 ⊗ σ(h)_2 = S^{2i}(h_1) ⊗ σ(h_2), and the σ^-1 form when S is invertible."""
    report = CheckReport(f"sigma condition (index {i})")
    try:
        S2i = hopf.antipode_power(2 * i)
    except NotInvertibleError:
        report.record("sigma condition", False, detail="antipode not invertible")
        return report
    report.sweep(
        "sigma condition",
        ((k,) for k in range(hopf.dim)),
        lambda k: hopf.coproduct(sigma.cols[k]) == _twisted_coproduct(hopf, S2i, sigma, hopf.e(k)),
    )
    if report.passed and hopf.antipode_invertible and sigma.is_bijective():
        inverse = sigma.inverse()
        S_minus = hopf.antipode_power(-2 * i)
        report.sweep(
            "inverse sigma condition",
            ((k,) for k in range(hopf.dim)),
            lambda k: hopf.coproduct(inverse.cols[k]) == _twisted_coproduct(hopf, S_minus, inverse, hopf.e(k)),
        )
    return report


def check_sigma_condition(hopf: HopfAlgebra, sigma: LinearMap, i: int) -> bool:
    return sigma_condition_report(hopf, sigma, i).passed
