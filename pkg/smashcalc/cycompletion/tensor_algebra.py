"""Truncated tensor algebras T_B(D) of graded bimodules, and Calabi-Yau completions.

T_0 = B, T_1 = D and T_m = T_{m-1} ⊗_B D. Every basis element of T_m is
the class of a single tensor t ⊗ d with t a basis element of T_{m-1}, so
basis elements are homogeneous for the cohomological grading

    |t ⊗ d| = |t| + |d|.

A derivation is given on generators by a degree-one bimodule map
δ: D -> D and a contraction c: D -> B, and extends by

    ∂(t ⊗ d) = ∂t ⊗ d + (-1)^{|t|} (t ⊗ δd + t·c(d)),

so ∂ = I + C splits into a part I that keeps the tensor degree and a part
C that lowers it by one.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import eye, ones

from ..core.algebra import FinDimAlgebra
from ..core.exceptions import TruncationError
from ..core.linalg import LinearMap, Subspace, Vec, vec_axpy
from ..core.modules import Bimodule
from ..core.report import CheckReport
from ..equivariant.tensor import BalancedTensor
from . import config
from .dualising import DualisingComplex
from .exceptions import CompletionError
from .quiver import Quiver

logger = logging.getLogger(__name__)


class TruncatedTensorAlgebra:
    """T_B(D) through tensor degree ``truncation``, with an optional derivation.

    Raises:
        CompletionError: D is not a B-bimodule, or the degrees or maps have the wrong shape
    """

    def __init__(self, base: FinDimAlgebra, generating: Bimodule, degrees: Sequence[int], truncation: int,
                 differential: Optional[LinearMap] = None, contraction: Optional[LinearMap] = None,
                 name: str = ""):
        if generating.left_algebra.dim != base.dim or generating.right_algebra.dim != base.dim:
            raise CompletionError(f"{generating.name} is not a bimodule over {base.name}")
        if len(degrees) != generating.dim:
            raise CompletionError(f"{len(degrees)} degrees for a bimodule of dimension {generating.dim}")
        if truncation < 0:
            raise CompletionError("The truncation degree must be non-negative")
        F = base.field
        n = generating.dim
        if differential is not None and differential.shape != (n, n):
            raise CompletionError(f"δ of shape {differential.shape} on dimension {n}")
        if contraction is not None and contraction.shape != (base.dim, n):
            raise CompletionError(f"c of shape {contraction.shape}, expected {(base.dim, n)}")
        self.base = base
        self.generating = generating
        self.field = F
        self.truncation = truncation
        self.generator_degrees = list(degrees)
        self.differential = differential if differential is not None else LinearMap.zero(F, n, n)
        self.contraction = contraction if contraction is not None else LinearMap.zero(F, n, base.dim)
        self.name = name or f"T_{base.name}({generating.name})"
        self.cy_dimension: Optional[int] = None
        self.logger = logging.getLogger(f"smashcalc.cycompletion.{self.__class__.__name__.lower()}")

        self.components: List[Bimodule] = [Bimodule.regular(base)]
        self.tensors: List[Optional[BalancedTensor]] = [None]
        self.component_degrees: List[List[int]] = [[0] * base.dim]
        self._splits: List[List[Tuple[int, int]]] = [[]]
        if truncation >= 1:
            self.components.append(generating)
            self.tensors.append(None)
            self.component_degrees.append(list(degrees))
            self._splits.append([])
        for m in range(2, truncation + 1):
            tensor = BalancedTensor(self.components[m - 1], generating, name=f"T_{m}")
            splits = [divmod(next(iter(tensor.lift(k))), n) for k in range(tensor.dim)]
            self.tensors.append(tensor)
            self.components.append(tensor.bimodule)
            self._splits.append(splits)
            self.component_degrees.append([self.component_degrees[m - 1][p] + degrees[q] for p, q in splits])
        self._products: Dict[Tuple[int, int, int, int], Vec] = {}
        self._internal: List[LinearMap] = []
        self._contract: List[Optional[LinearMap]] = []
        self.report = CheckReport(f"tensor algebra {self.name}")
        self.logger.debug(f"{self.name}: component dimensions {self.dims()}")

    # --- components -----------------------------------------------------------

    def dim(self, m: int) -> int:
        if not 0 <= m <= self.truncation:
            raise TruncationError(f"Tensor degree {m} lies outside 0..{self.truncation}")
        return self.components[m].dim

    def dims(self) -> List[int]:
        return [c.dim for c in self.components]

    def degree_profile(self, m: int) -> Dict[int, int]:
        """How many basis elements of T_m sit in each cohomological degree."""
        profile: Dict[int, int] = {}
        for d in self.component_degrees[m]:
            profile[d] = profile.get(d, 0) + 1
        return dict(sorted(profile.items()))

    def split(self, m: int, k: int) -> Tuple[Vec, int]:
        """(t, d) with the k-th basis element of T_m the class of t ⊗ d, for m ≥ 1."""
        if m == 1:
            return dict(self.base.unit), k
        p, q = self._splits[m][k]
        return {p: self.field.one}, q

    def attach(self, m: int, x: Vec, d: Vec) -> Vec:
        """The class of x ⊗ d in T_m for x in T_{m-1} and d in D."""
        if m == 1:
            return self.generating.act_left(x, d)
        return self.tensors[m].element(x, d)

    # --- multiplication ---------------------------------------------------------

    def basis_product(self, p: int, i: int, q: int, j: int) -> Vec:
        """(i-th basis element of T_p)·(j-th basis element of T_q) in T_{p+q}.

        Raises:
            TruncationError: p + q exceeds the truncation
        """
        key = (p, i, q, j)
        if key in self._products:
            return self._products[key]
        if p + q > self.truncation:
            raise TruncationError(f"T_{p}·T_{q} lies above the truncation {self.truncation}")
        one = self.field.one
        if q == 0:
            out = self.components[p].right[j].cols[i]
        elif p == 0:
            out = self.components[q].left[i].cols[j]
        else:
            t, d = self.split(q, j)
            out = self.attach(p + q, self.multiply({i: one}, p, t, q - 1), {d: one})
        self._products[key] = out
        return out

    def multiply(self, x: Vec, p: int, y: Vec, q: int) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                vec_axpy(out, a * b, self.basis_product(p, i, q, j))
        return out

    # --- the derivation -------------------------------------------------------------

    @property
    def has_derivation(self) -> bool:
        return not (self.differential.is_zero() and self.contraction.is_zero())

    def _sign(self, m: int, p: int):
        return self.field.one if self.component_degrees[m][p] % 2 == 0 else -self.field.one

    def _derive_pair(self, m: int, p: int, q: int) -> Tuple[Vec, Vec]:
        """(I, C) parts of ∂(t_p ⊗ d_q) for t_p in T_{m-1}, m ≥ 2."""
        one = self.field.one
        sign = self._sign(m - 1, p)
        inner = self.attach(m, self._internal[m - 1].cols[p], {q: one})
        vec_axpy(inner, sign, self.attach(m, {p: one}, self.differential.cols[q]))
        outer: Vec = {}
        if m - 1 >= 1:
            outer = self.attach(m - 1, self._contract[m - 1].cols[p], {q: one})
        vec_axpy(outer, sign, self.components[m - 1].act_right({p: one}, self.contraction.cols[q]))
        return inner, outer

    def _build_derivation(self) -> None:
        if self._internal:
            return
        F = self.field
        self._internal.append(LinearMap.zero(F, self.base.dim, self.base.dim))
        self._contract.append(None)
        for m in range(1, self.truncation + 1):
            if m == 1:
                self._internal.append(self.differential)
                self._contract.append(self.contraction)
                continue
            pairs = [self._derive_pair(m, p, q) for p, q in self._splits[m]]
            self._internal.append(LinearMap(F, self.dim(m), self.dim(m), [i for i, _ in pairs]))
            self._contract.append(LinearMap(F, self.dim(m), self.dim(m - 1), [c for _, c in pairs]))

    def derivation(self, m: int) -> Tuple[LinearMap, Optional[LinearMap]]:
        """(I_m, C_m) with ∂ = I_m + C_m on T_m; C_0 is None."""
        self._build_derivation()
        return self._internal[m], self._contract[m]

    def derive(self, x: Vec, m: int) -> Tuple[Vec, Vec]:
        """∂x for x in T_m, split into its T_m and T_{m-1} parts."""
        inner, outer = self.derivation(m)
        return inner(x), (outer(x) if outer is not None else {})

    def _ambient_parts(self, m: int, v: Vec) -> Tuple[Vec, Vec]:
        n = self.generating.dim
        inner: Vec = {}
        outer: Vec = {}
        for idx, c in v.items():
            p, q = divmod(idx, n)
            i, o = self._derive_pair(m, p, q)
            vec_axpy(inner, c, i)
            vec_axpy(outer, c, o)
        return inner, outer

    # --- certificates -------------------------------------------------------------

    def _generators(self) -> List[Tuple[int, Vec]]:
        gens = [(0, g) for g in self.base.generators()]
        if self.truncation >= 1:
            gens += [(1, {k: self.field.one}) for k in range(self.generating.dim)]
        return gens

    def _sweepable(self, m: int) -> bool:
        return self.dim(m) <= config.COMPONENT_SWEEP_LIMIT

    def _leibniz_at(self, p: int, i: int, q: int, g: Vec) -> bool:
        one = self.field.one
        x = {i: one}
        product = self.multiply(x, p, g, q)
        lhs_inner, lhs_outer = self.derive(product, p + q)
        dx_inner, dx_outer = self.derive(x, p)
        dg_inner, dg_outer = self.derive(g, q)
        sign = self._sign(p, i)
        rhs_inner = self.multiply(dx_inner, p, g, q)
        vec_axpy(rhs_inner, sign, self.multiply(x, p, dg_inner, q))
        rhs_outer: Vec = {}
        if p >= 1:
            rhs_outer = self.multiply(dx_outer, p - 1, g, q)
        if q >= 1:
            vec_axpy(rhs_outer, sign, self.multiply(x, p, dg_outer, q - 1))
        return lhs_inner == rhs_inner and lhs_outer == rhs_outer

    def verify(self) -> CheckReport:
        """Degree and well-definedness of ∂, ∂² = 0, and the Leibniz rule and
        associativity on pairs (basis element, generator)."""
        report = CheckReport(f"tensor algebra {self.name}")
        T = self.truncation
        D = self.generating
        report.record("component dimensions", True, detail=str(self.dims()))
        gens = self._generators()
        report.sweep("associative on generator pairs",
                     ((p, i, a, b) for p in range(T + 1) if self._sweepable(p) for i in range(self.dim(p))
                      for a in range(len(gens)) for b in range(len(gens))
                      if p + gens[a][0] + gens[b][0] <= T),
                     lambda p, i, a, b: self._associative_at(p, i, gens[a], gens[b]))
        skipped = [m for m in range(T + 1) if not self._sweepable(m)]
        if skipped:
            report.skip("pair sweeps above the component limit",
                        f"tensor degrees {skipped} exceed {config.COMPONENT_SWEEP_LIMIT}")
        if not self.has_derivation:
            report.record("∂² = 0", True, detail="zero derivation")
            return report

        base_gens = self.base.generators()
        report.sweep("δ is a bimodule map", ((g,) for g in range(len(base_gens))),
                     lambda g: self.differential.compose(D.left_operator(base_gens[g]))
                     == D.left_operator(base_gens[g]).compose(self.differential)
                     and self.differential.compose(D.right_operator(base_gens[g]))
                     == D.right_operator(base_gens[g]).compose(self.differential))
        report.sweep("c is a bimodule map", ((g,) for g in range(len(base_gens))),
                     lambda g: self.contraction.compose(D.left_operator(base_gens[g]))
                     == self.base.left_mult(base_gens[g]).compose(self.contraction)
                     and self.contraction.compose(D.right_operator(base_gens[g]))
                     == self.base.right_mult(base_gens[g]).compose(self.contraction))
        self._build_derivation()
        for m in range(2, T + 1):
            tensor = self.tensors[m]
            report.record(f"∂ well defined on T_{m}",
                          tensor.kills_relations(lambda v, m=m: self._ambient_parts(m, v)[0])
                          and tensor.kills_relations(lambda v, m=m: self._ambient_parts(m, v)[1]))
        report.sweep("∂ has degree one", ((m, k) for m in range(1, T + 1) for k in range(self.dim(m))),
                     lambda m, k: self._raises_degree(m, k))
        report.sweep("∂² = 0", ((m,) for m in range(1, T + 1)), lambda m: self._squares_to_zero(m))
        report.sweep("Leibniz rule on generator pairs",
                     ((p, i, a) for p in range(T + 1) if self._sweepable(p) for i in range(self.dim(p))
                      for a in range(len(gens)) if p + gens[a][0] <= T),
                     lambda p, i, a: self._leibniz_at(p, i, gens[a][0], gens[a][1]))
        return report

    def _associative_at(self, p: int, i: int, g: Tuple[int, Vec], h: Tuple[int, Vec]) -> bool:
        x = {i: self.field.one}
        (q, u), (r, v) = g, h
        left = self.multiply(self.multiply(x, p, u, q), p + q, v, r)
        right = self.multiply(x, p, self.multiply(u, q, v, r), q + r)
        return left == right

    def _raises_degree(self, m: int, k: int) -> bool:
        inner, outer = self.derivation(m)
        target = self.component_degrees[m][k] + 1
        if any(self.component_degrees[m][i] != target for i in inner.cols[k]):
            return False
        return outer is None or all(self.component_degrees[m - 1][i] == target for i in outer.cols[k])

    def _squares_to_zero(self, m: int) -> bool:
        inner, outer = self.derivation(m)
        if not inner.compose(inner).is_zero():
            return False
        below, below_outer = self.derivation(m - 1)
        if not (below.compose(outer) + outer.compose(inner)).is_zero():
            return False
        return below_outer is None or below_outer.compose(outer).is_zero()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "base": self.base.name,
            "truncation": self.truncation,
            "dims": self.dims(),
            "degrees": {str(m): {str(d): c for d, c in self.degree_profile(m).items()}
                        for m in range(self.truncation + 1)},
            "derivation": self.has_derivation,
            "report": self.report.to_dict(),
        }

    def __repr__(self) -> str:
        return f"TruncatedTensorAlgebra({self.name}, dims={self.dims()})"


def completed_path_counts(Q: Quiver, truncation: int) -> List[int]:
    """Paths of the completed quiver using exactly m new arrows (a* or a loop t_v), for m ≤ truncation.

    Q must be acyclic; Σ_k M^k then counts the paths of Q between vertices.
    """
    n = len(Q.vertices)
    M = Q.adjacency()
    paths = eye(n)
    power = eye(n)
    for _ in range(n):
        power = power * M
        paths = paths + power
    new = M.T + eye(n)
    counts = []
    layer = paths
    for m in range(truncation + 1):
        counts.append(int((ones(1, n) * layer * ones(n, 1))[0, 0]))
        layer = layer * new * paths
    return counts


def _double_quiver_arrows(Pi: TruncatedTensorAlgebra, D: DualisingComplex) -> int:
    """dim J/J² of A plus the top of the degree-0 part of D: the arrows of the doubled quiver."""
    A, F = Pi.base, Pi.field
    bim = D.module.bimodule
    radical = [i for i in range(A.dim) if A.degrees is not None and A.degrees[i] >= 1]
    square = Subspace(F, A.dim, [A.basis_product(i, j) for i in radical for j in radical])
    degree_zero = [k for k in range(D.dim) if Pi.generator_degrees[k] == 0]
    moved = [bim.left[i].cols[k] for i in radical for k in degree_zero]
    moved += [bim.right[i].cols[k] for i in radical for k in degree_zero]
    return len(radical) - square.dim + len(degree_zero) - Subspace(F, D.dim, moved).dim


def cy_completion(A: FinDimAlgebra, D: DualisingComplex, n: int, truncation: Optional[int] = None,
                  contraction: Optional[LinearMap] = None) -> TruncatedTensorAlgebra:
    """Π_n(A) = T_A(D_A[n-1]) through the truncation, with ∂ from δ and an optional deformation c.

    For a quiver, the component dimensions are compared with path counts of
    the quiver with a* of degree 2-n and loops t_v of degree 1-n added, and
    for n = 2 the degree-0 generators are compared with the doubled quiver.

    Raises:
        CompletionError: D is not a complex over A
    """
    if D.algebra is not A and D.algebra.dim != A.dim:
        raise CompletionError(f"D_A is over {D.algebra.name}, not {A.name}")
    T = config.COMPLETION_TRUNCATION if truncation is None else truncation
    Pi = TruncatedTensorAlgebra(A, D.module.bimodule, D.shifted(n - 1), T, differential=D.differential,
                                contraction=contraction, name=f"Π_{n}({A.name})")
    Pi.cy_dimension = n
    report = Pi.report
    report.extend(D.report, prefix="D_A ")
    report.extend(Pi.verify())
    if D.quiver is not None and D.quiver.is_acyclic:
        counts = completed_path_counts(D.quiver, T)
        report.sweep("dimensions count paths of the completed quiver", ((m,) for m in range(T + 1)),
                     lambda m: Pi.dim(m) == counts[m], detail=f"paths {counts}")
        if n == 2:
            arrows = _double_quiver_arrows(Pi, D)
            expected = 2 * len(D.quiver.arrows)
            report.record("degree-0 generators are the doubled quiver", arrows == expected,
                          detail=f"{arrows} vs {expected}")
    logger.info(f"{Pi.name}: dimensions {Pi.dims()} through tensor degree {T}, "
                f"{'pass' if report.passed else 'FAIL'}")
    return Pi
