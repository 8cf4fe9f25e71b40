"""The σ*-smash product T_A(D)♯^{σ*}H and its comparison with the completion of A♯H."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..core.algebra import tensor_vectors
from ..core.linalg import LinearMap, Vec, vec_axpy
from ..core.report import CheckReport
from ..equivariant.bimodule import EquivariantBimodule
from ..equivariant.exceptions import SigmaConditionError
from ..equivariant.smash_bimodule import SmashBimodule, require_commutes_with_square
from ..homology.integrals import classify_hopf
from ..homology.nakayama import CY
from ..hopf.characters import sigma_condition_report
from ..smash.smash import SmashAlgebra
from . import config
from .dualising import DualisingComplex
from .exceptions import CompletionError
from .tensor_algebra import TruncatedTensorAlgebra, cy_completion

logger = logging.getLogger(__name__)


class SigmaStarSmash:
    """T_A(D)♯^{σ*}H through the truncation of ``tensor``, on t#h with index t * dim H + h.

    H acts on T_m by h⇀(t ⊗ d) = (h₁⇀t) ⊗ (S^{2(m-1)}(h₂)⇀d), and

        (x#h)(y#k) = x(h₁⇀y) # σ^q(h₂)k    for y in T_q.

    Raises:
        SigmaConditionError: σ fails the coproduct condition at index 1 or does not commute with S²
        CompletionError: ``tensor`` is not generated by the bimodule of D, or D is not of index 1
    """

    def __init__(self, tensor: TruncatedTensorAlgebra, D: EquivariantBimodule, sigma: LinearMap):
        if D.bimodule is not tensor.generating:
            raise CompletionError(f"{tensor.name} is not generated by {D.name}")
        if D.index != 1:
            raise CompletionError(f"{D.name} has index {D.index}, the σ*-smash needs index 1")
        H = D.hopf
        if sigma.shape != (H.dim, H.dim):
            raise SigmaConditionError(f"σ of shape {sigma.shape} on {H.name} of dimension {H.dim}")
        condition = sigma_condition_report(H, sigma, 1)
        if not condition.passed:
            raise SigmaConditionError(f"σ fails the coproduct condition at index 1, "
                                      f"witness {condition.failures()[0].witness}")
        require_commutes_with_square(D, sigma)
        self.tensor = tensor
        self.module = D
        self.action = D.action
        self.hopf = H
        self.field = D.field
        self.sigma = sigma
        self.name = f"{tensor.name}♯{H.name}"
        self.logger = logging.getLogger(f"smashcalc.cycompletion.{self.__class__.__name__.lower()}")
        T = tensor.truncation
        self._sigma_powers = [sigma.power(q) for q in range(T + 1)]
        self.h_ops: List[List[LinearMap]] = [list(D.action.operators)]
        if T >= 1:
            self.h_ops.append(list(D.h_ops))
        self._well_defined: List[bool] = [True] * min(T + 1, 2)
        for m in range(2, T + 1):
            twist = H.antipode_power(2 * (m - 1))
            ops = []
            for h in range(H.dim):
                f = (lambda v, h=h, m=m, twist=twist: self._ambient_action(m, h, twist, v))
                ops.append(LinearMap.from_function(self.field, tensor.dim(m), tensor.dim(m),
                                                   lambda k, f=f, m=m: f(tensor.tensors[m].lift(k))))
            self.h_ops.append(ops)
            self._well_defined.append(all(self._respects_relations(m, h, twist) for h in range(H.dim)))
        self._products: Dict[Tuple[int, int, int, int], Vec] = {}
        self.report = CheckReport(f"σ*-smash {self.name}")

    # --- the H-action on T_m ------------------------------------------------------

    def _ambient_action(self, m: int, h: int, twist: LinearMap, v: Vec) -> Vec:
        """h⇀ on T_{m-1} ⊗ D before passing to the balanced quotient."""
        n = self.module.dim
        out: Vec = {}
        for idx, c in v.items():
            p, q = divmod(idx, n)
            for (h1, h2), x in self.hopf.comul[h].items():
                moved = self.module.h_act(twist.cols[h2], {q: self.field.one})
                if moved:
                    vec_axpy(out, c * x, self.tensor.attach(m, self.h_ops[m - 1][h1].cols[p], moved))
        return out

    def _respects_relations(self, m: int, h: int, twist: LinearMap) -> bool:
        tensor = self.tensor.tensors[m]
        return tensor.kills_relations(lambda v: self._ambient_action(m, h, twist, v))

    def h_act(self, h: Vec, x: Vec, m: int) -> Vec:
        out: Vec = {}
        for i, c in h.items():
            vec_axpy(out, c, self.h_ops[m][i](x))
        return out

    # --- elements and products ------------------------------------------------------

    def dim(self, m: int) -> int:
        return self.tensor.dim(m) * self.hopf.dim

    def dims(self) -> List[int]:
        return [self.dim(m) for m in range(self.tensor.truncation + 1)]

    def element(self, t: Vec, h: Vec) -> Vec:
        return tensor_vectors(t, h, self.hopf.dim)

    def unit(self) -> Vec:
        return self.element(self.tensor.base.unit, self.hopf.unit)

    def basis_product(self, p: int, u: int, q: int, v: int) -> Vec:
        key = (p, u, q, v)
        if key in self._products:
            return self._products[key]
        H = self.hopf
        t, h = divmod(u, H.dim)
        s, k = divmod(v, H.dim)
        out: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            moved = self.h_ops[q][h1].cols[s]
            if not moved:
                continue
            left = self.tensor.multiply({t: self.field.one}, p, moved, q)
            if left:
                vec_axpy(out, c, self.element(left, H.product(self._sigma_powers[q].cols[h2], H.e(k))))
        self._products[key] = out
        return out

    def multiply(self, x: Vec, p: int, y: Vec, q: int) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                vec_axpy(out, a * b, self.basis_product(p, i, q, j))
        return out

    def derivation(self, m: int) -> Tuple[LinearMap, Optional[LinearMap]]:
        """∂(t#h) = ∂t#h, split as in the tensor algebra."""
        identity = LinearMap.identity(self.field, self.hopf.dim)
        inner, outer = self.tensor.derivation(m)
        return inner.kron(identity), (outer.kron(identity) if outer is not None else None)

    def generators(self) -> List[Tuple[int, Vec]]:
        A, H = self.tensor.base, self.hopf
        gens = [(0, self.element(g, H.unit)) for g in A.generators()]
        gens += [(0, self.element(A.unit, g)) for g in H.algebra.generators()]
        if self.tensor.truncation >= 1:
            gens += [(1, self.element({d: self.field.one}, H.unit)) for d in range(self.module.dim)]
        return gens

    # --- certificates -------------------------------------------------------------

    def sweepable(self, m: int) -> bool:
        return self.dim(m) <= config.COMPONENT_SWEEP_LIMIT

    def _product_law(self, m: int, h: int, w: int) -> bool:
        H = self.hopf
        lhs = self.multiply(self.element(self.tensor.base.unit, H.e(h)), 0, self.element({w: self.field.one}, H.unit), m)
        rhs: Vec = {}
        for (h1, h2), c in H.comul[h].items():
            vec_axpy(rhs, c, self.element(self.h_ops[m][h1].cols[w], self._sigma_powers[m].cols[h2]))
        return lhs == rhs

    def verify(self) -> CheckReport:
        """H-actions on the components, the unit, the product law on T_0, T_1, T_2,
        associativity on generator pairs and agreement with A♯H in degree 0."""
        H = self.hopf
        T = self.tensor.truncation
        report = CheckReport(f"σ*-smash {self.name}")
        report.sweep("H-action well defined on T_m", ((m,) for m in range(T + 1)), lambda m: self._well_defined[m])
        report.sweep("H-module on T_m", ((m, h, k) for m in range(T + 1) for h in range(H.dim) for k in range(H.dim)),
                     lambda m, h, k: self._combined(m, H.algebra.basis_product(h, k))
                     == self.h_ops[m][h].compose(self.h_ops[m][k]))
        unit = self.unit()
        report.sweep("unit", ((m, u) for m in range(T + 1) if self.sweepable(m) for u in range(self.dim(m))),
                     lambda m, u: self.multiply(unit, 0, {u: self.field.one}, m) == {u: self.field.one}
                     == self.multiply({u: self.field.one}, m, unit, 0))
        report.sweep("h·ω = (h₁⇀ω)#σ^m(h₂)",
                     ((m, h, w) for m in range(min(T, 2) + 1) for h in range(H.dim) for w in range(self.tensor.dim(m))),
                     self._product_law)
        gens = self.generators()
        report.sweep("associative on generator pairs",
                     ((p, u, a, b) for p in range(T + 1) if self.sweepable(p) for u in range(self.dim(p))
                      for a in range(len(gens)) for b in range(len(gens)) if p + gens[a][0] + gens[b][0] <= T),
                     lambda p, u, a, b: self._associative_at(p, u, gens[a], gens[b]))
        smash = SmashAlgebra(self.action)
        report.sweep("degree 0 is A♯H", ((u, v) for u in range(self.dim(0)) for v in range(self.dim(0))),
                     lambda u, v: self.basis_product(0, u, 0, v) == smash.algebra.basis_product(u, v))
        return report

    def _combined(self, m: int, h: Vec) -> LinearMap:
        d = self.tensor.dim(m)
        cols: List[Vec] = [dict() for _ in range(d)]
        for i, c in h.items():
            for k, col in enumerate(self.h_ops[m][i].cols):
                vec_axpy(cols[k], c, col)
        return LinearMap(self.field, d, d, cols)

    def _associative_at(self, p: int, u: int, g: Tuple[int, Vec], h: Tuple[int, Vec]) -> bool:
        x = {u: self.field.one}
        (q, a), (r, b) = g, h
        return (self.multiply(self.multiply(x, p, a, q), p + q, b, r)
                == self.multiply(x, p, self.multiply(a, q, b, r), q + r))

    def __repr__(self) -> str:
        return f"SigmaStarSmash({self.name}, dims={self.dims()})"


def sigma_star_smash(tensor: TruncatedTensorAlgebra, D: EquivariantBimodule,
                     sigma: Optional[LinearMap] = None) -> SigmaStarSmash:
    """Build T_A(D)♯^{σ*}H, σ = id by default, and run its checks into ``report``."""
    if sigma is None:
        sigma = LinearMap.identity(D.field, D.hopf.dim)
    smash = SigmaStarSmash(tensor, D, sigma)
    smash.report.extend(smash.verify())
    return smash


@dataclass
class CompletionIso:
    """Φ: Π_n(A)♯H -> Π_{n+d}(A♯H), one map per tensor degree.

    Attributes:
        source: Π_n(A)♯^{σ*}H with σ = id
        target: the completion of Λ = A♯H, generated by D_A♯H
        maps: Φ_m for m = 0..T
        hopf_degree: d, the degree of the homological integral of H
        certified_through: the largest m with every check through degree m passing, -1 if none
        report: all checks, with the source and target certificates
    """
    source: SigmaStarSmash
    target: TruncatedTensorAlgebra
    maps: List[LinearMap]
    hopf_degree: int
    certified_through: int
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "hopf_degree": self.hopf_degree,
            "source_dims": self.source.dims(),
            "target_dims": self.target.dims(),
            "certified_through": self.certified_through,
            "report": self.report.to_dict(),
        }


def completion_smash_iso(D: DualisingComplex, n: int, truncation: Optional[int] = None,
                         contraction: Optional[LinearMap] = None, bound: Optional[int] = None) -> CompletionIso:
    """Build Φ(t#h) = Φ(t#1)(1#h) with Φ((t ⊗ d)#1) = Φ(t#1) ⊗ (d#1) and certify it degree by degree.

    H must be Calabi-Yau with S² = id; then ∫ℓ = ε and σ = id. Φ is
    checked to be bijective, to match the generators, to be multiplicative
    on (basis element, generator) pairs and to commute with ∂.

    Raises:
        CompletionError: H is not Calabi-Yau, S² ≠ id, or T < 1
    """
    H, A, F = D.hopf, D.algebra, D.field
    T = config.COMPLETION_TRUNCATION if truncation is None else truncation
    if T < 1:
        raise CompletionError("Tensor degree 1 is needed to reach the generators")
    classification = classify_hopf(H, bound)
    if classification.verdict != CY:
        raise CompletionError(f"{H.name} is {classification.label()}, not Calabi-Yau")
    if not H.antipode_power(2).is_identity():
        raise CompletionError(f"S² ≠ id on {H.name}")
    d = classification.degree
    report = CheckReport(f"Π_{n}({A.name})♯{H.name} ≅ Π_{n + d}({A.name}♯{H.name})")
    if not classification.integral.left.is_counit():
        raise CompletionError(f"∫ℓ ≠ ε on {H.name}")
    report.record("∫ℓ = ε", True, detail=classification.label())
    mH = H.dim
    one = F.one
    sigma = LinearMap.identity(F, mH)

    Pi = cy_completion(A, D, n, T, contraction)
    source = sigma_star_smash(Pi, D.module, sigma)
    report.extend(Pi.report, prefix="Π_A ")
    report.extend(source.report, prefix="source ")

    smash = SmashAlgebra(D.action)
    Lam = smash.algebra
    DL = SmashBimodule(D.module, sigma, smash=smash)
    report.extend(DL.verify(), prefix="D_Λ ")
    shifted = D.shifted(n - 1)
    degrees = [shifted[DL.split(k)[0]] for k in range(DL.dim)]
    delta = LinearMap.from_function(F, DL.dim, DL.dim,
                                    lambda k: DL.element(D.differential.cols[DL.split(k)[0]], H.e(DL.split(k)[1])))
    c_smash = None
    if contraction is not None:
        c_smash = LinearMap.from_function(F, DL.dim, Lam.dim,
                                          lambda k: smash.element(contraction.cols[DL.split(k)[0]], H.e(DL.split(k)[1])))
    target = TruncatedTensorAlgebra(Lam, DL.bimodule, degrees, T, differential=delta, contraction=c_smash,
                                    name=f"Π_{n + d}({Lam.name})")
    target.cy_dimension = n + d
    target.report.extend(target.verify())
    report.extend(target.report, prefix="target ")

    maps = [LinearMap.identity(F, Lam.dim)]
    for m in range(1, T + 1):
        cols: List[Vec] = []
        for k in range(source.dim(m)):
            t, h = divmod(k, mH)
            tt, dd = Pi.split(m, t)
            first = maps[m - 1](source.element(tt, H.unit))
            value = target.attach(m, first, DL.element({dd: one}, H.unit))
            cols.append(target.components[m].act_right(value, smash.element(A.unit, H.e(h))))
        maps.append(LinearMap(F, source.dim(m), target.dim(m), cols))

    degrees_range = range(T + 1)
    dims_ok = {m: target.dim(m) == mH * Pi.dim(m) for m in degrees_range}
    bijective = {m: maps[m].is_bijective() for m in degrees_range}
    report.sweep("dim Π(Λ)_m = dim H · dim Π(A)_m", ((m,) for m in degrees_range), lambda m: dims_ok[m],
                 detail=f"{target.dims()} vs {source.dims()}")
    report.sweep("Φ_m bijective", ((m,) for m in degrees_range), lambda m: bijective[m])
    report.sweep("Φ(d#1) = d⊗1", ((k,) for k in range(D.dim)),
                 lambda k: maps[1](source.element({k: one}, H.unit)) == DL.element({k: one}, H.unit))

    gens = source.generators()
    multiplicative: Dict[int, Optional[bool]] = {}
    for r in degrees_range:
        pairs = [(p, u, g) for g in range(len(gens)) for p in [r - gens[g][0]] if p >= 0
                 for u in range(source.dim(p))]
        if any(not source.sweepable(p) for p, _, _ in pairs):
            multiplicative[r] = None
            report.skip(f"Φ multiplicative in degree {r}", f"above {config.COMPONENT_SWEEP_LIMIT}")
            continue
        check = report.sweep(f"Φ multiplicative in degree {r}", pairs,
                             lambda p, u, g: _multiplicative_at(source, target, maps, p, u, gens[g]))
        multiplicative[r] = check.passed

    commutes: Dict[int, bool] = {m: True for m in degrees_range}
    if Pi.has_derivation:
        for m in range(1, T + 1):
            check = report.sweep(f"Φ∘∂ = ∂∘Φ in degree {m}", ((k,) for k in range(source.dim(m))),
                                 lambda k, m=m: _commutes_at(source, target, maps, m, k))
            commutes[m] = check.passed

    certified = -1
    for m in degrees_range:
        if not (dims_ok[m] and bijective[m] and multiplicative[m] and commutes[m]):
            break
        certified = m
    logger.info(f"{report.subject}: certified through tensor degree {certified} of {T}")
    return CompletionIso(source, target, maps, d, certified, report)


def _multiplicative_at(source: SigmaStarSmash, target: TruncatedTensorAlgebra, maps: List[LinearMap],
                       p: int, u: int, g: Tuple[int, Vec]) -> bool:
    q, y = g
    x = {u: source.field.one}
    lhs = maps[p + q](source.multiply(x, p, y, q))
    return lhs == target.multiply(maps[p](x), p, maps[q](y), q)


def _commutes_at(source: SigmaStarSmash, target: TruncatedTensorAlgebra, maps: List[LinearMap],
                 m: int, k: int) -> bool:
    x = {k: source.field.one}
    inner, outer = source.derivation(m)
    t_inner, t_outer = target.derive(maps[m](x), m)
    if maps[m](inner(x)) != t_inner:
        return False
    return (maps[m - 1](outer(x)) if outer is not None else {}) == t_outer
