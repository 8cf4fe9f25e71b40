"""Polynomial algebras k[x₁..x_n] with a linear Hopf action.

Elements are handled one homogeneous degree at a time. A monomial is its
exponent vector; the degree-d component has the monomials of total degree
d as basis, in the order of ``itertools.combinations_with_replacement``.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..core.algebra import FinDimAlgebra
from ..core.field import Scalar
from ..core.linalg import LinearMap, Vec, vec_axpy
from ..core.report import CheckReport
from ..hopf.hopf import HopfAlgebra
from ..smash.action import ModuleAlgebraAction
from . import config
from .exceptions import KoszulError

Monomial = Tuple[int, ...]
MatrixLike = Union[LinearMap, Sequence[Sequence[object]]]

_SHORT_NAMES = ("x", "y", "z")


@lru_cache(maxsize=None)
def monomials(n: int, degree: int) -> Tuple[Monomial, ...]:
    """Exponent vectors of total degree ``degree`` in n variables."""
    out = []
    for word in itertools.combinations_with_replacement(range(n), degree):
        exponents = [0] * n
        for i in word:
            exponents[i] += 1
        out.append(tuple(exponents))
    return tuple(out)


def monomial_word(m: Monomial) -> List[int]:
    """x₁²x₃ -> [0, 0, 2]."""
    return [i for i, e in enumerate(m) for _ in range(e)]


def variable(n: int, i: int) -> Monomial:
    """The exponent vector of x_i."""
    return tuple(1 if k == i else 0 for k in range(n))


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_label(m: Monomial, names: Sequence[str]) -> str:
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, m) if e]
    return "".join(parts) or "1"


class PolynomialModuleAlgebra:
    """k[x₁..x_n] with H acting linearly on the span V of the variables.

    ``linear_action[h]`` is the n×n matrix of e_h⇀- on V by columns:
    column j holds the coefficients of e_h⇀x_j. The action on monomials
    follows the coproduct, h⇀(x_{i₁}⋯x_{i_k}) = (h₁⇀x_{i₁})⋯(h_k⇀x_{i_k}).

    Raises:
        KoszulError: wrong number or shape of matrices, or too many variables
    """

    def __init__(self, n: int, hopf: HopfAlgebra, matrices: Sequence[MatrixLike],
                 truncation: Optional[int] = None, name: str = "", variables: Optional[Sequence[str]] = None):
        if not 0 <= n <= config.KOSZUL_MAX_VARIABLES:
            raise KoszulError(f"{n} variables outside the supported range 0..{config.KOSZUL_MAX_VARIABLES}")
        if len(matrices) != hopf.dim:
            raise KoszulError(f"Expected {hopf.dim} action matrices, got {len(matrices)}")
        F = hopf.field
        self.n = n
        self.hopf = hopf
        self.field = F
        self.linear_action: List[LinearMap] = []
        for M in matrices:
            op = M if isinstance(M, LinearMap) else LinearMap.from_rows(F, M)
            if op.shape != (n, n):
                raise KoszulError(f"Action matrix of shape {op.shape} on {n} variables")
            self.linear_action.append(op)
        self.truncation = config.KOSZUL_TRUNCATION if truncation is None else truncation
        if variables is None:
            variables = list(_SHORT_NAMES[:n]) if n <= len(_SHORT_NAMES) else [f"x{i + 1}" for i in range(n)]
        if len(variables) != n:
            raise KoszulError(f"{len(variables)} variable names for {n} variables")
        self.variables = list(variables)
        self.name = name or f"{hopf.name}⇀k[{','.join(self.variables)}]"
        self._operators: Dict[Tuple[int, int], LinearMap] = {}
        self.logger = logging.getLogger(f"smashcalc.koszul.{self.__class__.__name__.lower()}")

    # --- constructors -------------------------------------------------------

    @classmethod
    def trivial(cls, n: int, hopf: HopfAlgebra, **kwargs) -> "PolynomialModuleAlgebra":
        """h⇀x_j = ε(h)x_j."""
        F = hopf.field
        ops = [LinearMap.identity(F, n).scale(hopf.counit[h]) for h in range(hopf.dim)]
        return cls(n, hopf, ops, **kwargs)

    @classmethod
    def from_matrix_group(cls, hopf: HopfAlgebra, **kwargs) -> "PolynomialModuleAlgebra":
        """kG for a matrix group acting on V through its own matrices, g⇀x_j = Σ_i g_ij x_i.

        Raises:
            KoszulError: H does not remember its group as matrices
        """
        elements = hopf.group_elements
        if hopf.group_table is None or not elements or not isinstance(elements[0], tuple):
            raise KoszulError(f"{hopf.name} is not a matrix group algebra")
        n = len(elements[0])
        return cls(n, hopf, [LinearMap.from_rows(hopf.field, g) for g in elements], **kwargs)

    # --- the action ---------------------------------------------------------

    def basis(self, degree: int) -> Tuple[Monomial, ...]:
        return monomials(self.n, degree)

    def dim(self, degree: int) -> int:
        return len(self.basis(degree))

    def label(self, m: Monomial) -> str:
        return monomial_label(m, self.variables)

    def act_word(self, h: int, word: Sequence[int]) -> Dict[Monomial, Scalar]:
        """e_h⇀(x_{w₁}⋯x_{w_k}) as a dict of monomials."""
        F, H = self.field, self.hopf
        if not word:
            c = H.counit[h]
            return {tuple([0] * self.n): c} if c else {}
        out: Dict[Monomial, Scalar] = {}
        for legs, c in H.basis_legs(h, len(word)).items():
            factors = [self.linear_action[leg].cols[w].items() for leg, w in zip(legs, word)]
            for choice in itertools.product(*factors):
                exponents = [0] * self.n
                coeff = c
                for i, x in choice:
                    exponents[i] += 1
                    coeff = coeff * x
                key = tuple(exponents)
                s = out.get(key, F.zero) + coeff
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def act_monomial(self, h: int, m: Monomial) -> Dict[Monomial, Scalar]:
        return self.act_word(h, monomial_word(m))

    def operator(self, h: int, degree: int) -> LinearMap:
        """Matrix of e_h⇀- on the degree-``degree`` component."""
        key = (h, degree)
        if key not in self._operators:
            basis = self.basis(degree)
            index = {m: i for i, m in enumerate(basis)}
            cols = [{index[k]: c for k, c in self.act_monomial(h, m).items()} for m in basis]
            self._operators[key] = LinearMap(self.field, len(basis), len(basis), cols)
        return self._operators[key]

    def operator_of(self, h: Mapping[int, Scalar], degree: int) -> LinearMap:
        d = self.dim(degree)
        cols: List[Vec] = [dict() for _ in range(d)]
        for i, c in h.items():
            for k, col in enumerate(self.operator(i, degree).cols):
                vec_axpy(cols[k], c, col)
        return LinearMap(self.field, d, d, cols)

    def check(self, degree: int = 2) -> CheckReport:
        """H-module axioms on V and on the components of degree ≤ ``degree``, and
        h⇀(x_i x_j) = h⇀(x_j x_i) so that the action descends to the commutative ring."""
        H = self.hopf
        report = CheckReport(f"linear action {self.name}")
        report.sweep("ρ(1) = I", ((d,) for d in range(degree + 1)),
                     lambda d: self.operator_of(H.unit, d).is_identity())
        report.sweep("ρ(hk) = ρ(h)ρ(k)",
                     ((h, k, d) for d in range(1, degree + 1) for h in range(H.dim) for k in range(H.dim)),
                     lambda h, k, d: self.operator_of(H.algebra.basis_product(h, k), d)
                     == self.operator(h, d).compose(self.operator(k, d)))
        report.sweep("h⇀(x_i x_j) = h⇀(x_j x_i)",
                     ((h, i, j) for h in range(H.dim) for i in range(self.n) for j in range(i + 1, self.n)),
                     lambda h, i, j: self.act_word(h, [i, j]) == self.act_word(h, [j, i]))
        return report

    # --- finite truncation --------------------------------------------------

    def truncated_algebra(self) -> FinDimAlgebra:
        """k[x₁..x_n] modulo monomials of degree above the truncation."""
        F, T = self.field, self.truncation
        basis = [m for d in range(T + 1) for m in self.basis(d)]
        index = {m: i for i, m in enumerate(basis)}
        mul: Dict[Tuple[int, int], Vec] = {}
        overflow = []
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                if sum(a) + sum(b) <= T:
                    mul[(i, j)] = {index[monomial_product(a, b)]: F.one}
                else:
                    overflow.append((i, j))
        generators = [{index[m]: F.one} for m in self.basis(1)] if T >= 1 else []
        return FinDimAlgebra(F, [self.label(m) for m in basis], mul, {0: F.one},
                             degrees=[sum(m) for m in basis], truncation=T, overflow=overflow,
                             name=f"k[{','.join(self.variables)}]≤{T}", generators=generators or None)

    def truncated_action(self) -> ModuleAlgebraAction:
        """The induced action on ``truncated_algebra()``; degree-preserving, so the cut ideal is stable."""
        F, H, T = self.field, self.hopf, self.truncation
        offsets = list(itertools.accumulate([0] + [self.dim(d) for d in range(T + 1)]))
        A = self.truncated_algebra()
        ops = []
        for h in range(H.dim):
            cols: List[Vec] = []
            for d in range(T + 1):
                for col in self.operator(h, d).cols:
                    cols.append({offsets[d] + i: c for i, c in col.items()})
            ops.append(LinearMap(F, A.dim, A.dim, cols))
        augmentation = [F.one] + [F.zero] * (A.dim - 1)
        return ModuleAlgebraAction(H, A, ops, name=f"{H.name}⇀{A.name}", augmentation=augmentation)

    def __repr__(self) -> str:
        return f"PolynomialModuleAlgebra({self.name}, n={self.n}, truncation={self.truncation})"
