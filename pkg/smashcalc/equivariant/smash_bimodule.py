"""The Λ-bimodules D♯^σH and H^{σ⁻¹}♯D, the flip between them, and tensor products."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

from ..core.algebra import tensor_vectors
from ..core.field import Scalar
from ..core.linalg import LinearMap, Vec, vec_axpy
from ..core.modules import Bimodule
from ..core.report import CheckReport
from ..hopf.characters import sigma_condition_report
from ..smash.smash import SmashAlgebra
from .bimodule import EquivariantBimodule
from .exceptions import IndexMismatchError, SigmaConditionError
from .tensor import BalancedTensor, EquivariantTensor

logger = logging.getLogger(__name__)


def _require_sigma(D: EquivariantBimodule, sigma: LinearMap) -> None:
    H = D.hopf
    if sigma.shape != (H.dim, H.dim):
        raise SigmaConditionError(f"σ of shape {sigma.shape} on {H.name} of dimension {H.dim}")
    report = sigma_condition_report(H, sigma, D.index)
    if not report.passed:
        failed = report.failures()[0]
        raise SigmaConditionError(f"σ fails the coproduct condition at index {D.index}, witness {failed.witness}")


def require_commutes_with_square(D: EquivariantBimodule, sigma: LinearMap, name: str = "σ") -> None:
    S2 = D.hopf.antipode_power(2)
    if sigma.compose(S2) != S2.compose(sigma):
        raise SigmaConditionError(f"{name} does not commute with S^2")


class SmashBimodule:
    """D♯^σH on d⊗ℓ (index d * dim H + ℓ), or H^{σ⁻¹}♯D on ℓ⊗d when ``mirrored``.

    D♯^σH:      a(d⊗ℓ)b = a d (ℓ_1⇀b) ⊗ ℓ_2      h(d⊗ℓ)k = h_1⇀d ⊗ σ(h_2) ℓ k
    H^{σ⁻¹}♯D:  a(ℓ⊗d)b = ℓ_2 ⊗ (S^-1(ℓ_1)⇀a) d b  h(ℓ⊗d)k = h ℓ σ^-1(k_2) ⊗ S^{-2i-1}(k_1)⇀d

    Raises:
        SigmaConditionError: σ fails the coproduct condition at the index of D
        NotInvertibleError: the mirrored form needs S or σ inverted and one is singular
    """

    def __init__(self, D: EquivariantBimodule, sigma: LinearMap, smash: Optional[SmashAlgebra] = None,
                 mirrored: bool = False):
        _require_sigma(D, sigma)
        self.source = D
        self.sigma = sigma
        self.mirrored = mirrored
        self.index = D.index
        self.smash = smash if smash is not None else SmashAlgebra(D.action)
        self.hopf = D.hopf
        self.field = D.field
        self.logger = logging.getLogger(f"smashcalc.equivariant.{self.__class__.__name__.lower()}")
        H = self.hopf
        if mirrored:
            self._sigma_inv = sigma.inverse()
            self._S_inv = H.antipode_power(-1)
            self._S_odd = H.antipode_power(-2 * self.index - 1)
        Lam = self.smash.algebra
        m = H.dim
        left, right = [], []
        for x in range(Lam.dim):
            a, h = divmod(x, m)
            left.append(LinearMap.from_function(self.field, self.dim, self.dim,
                                                lambda k, a=a, h=h: self._left(a, h, k)))
            right.append(LinearMap.from_function(self.field, self.dim, self.dim,
                                                 lambda k, a=a, h=h: self._right(a, h, k)))
        if mirrored:
            labels = [f"{H.labels[l]}⊗{D.labels[d]}" for l in range(m) for d in range(D.dim)]
            name = f"{H.name}♯{D.name}"
        else:
            labels = [f"{D.labels[d]}⊗{H.labels[l]}" for d in range(D.dim) for l in range(m)]
            name = f"{D.name}♯{H.name}"
        self.bimodule = Bimodule(Lam, Lam, self.dim, left, right, name=name, labels=labels)
        self.logger.debug(f"Built {name} of dimension {self.dim}")

    @property
    def dim(self) -> int:
        return self.source.dim * self.hopf.dim

    def element(self, d: Mapping[int, Scalar], l: Mapping[int, Scalar]) -> Vec:
        """d⊗ℓ in either layout."""
        if self.mirrored:
            return tensor_vectors(l, d, self.source.dim)
        return tensor_vectors(d, l, self.hopf.dim)

    def split(self, k: int):
        """(d, ℓ) of a basis index."""
        if self.mirrored:
            l, d = divmod(k, self.source.dim)
            return d, l
        return divmod(k, self.hopf.dim)

    # --- actions of a#h on the left and of b#k on the right ----------------

    def _left(self, a: int, h: int, k: int) -> Vec:
        D, H = self.source, self.hopf
        A = D.algebra
        d, l = self.split(k)
        out: Vec = {}
        if not self.mirrored:
            for (h1, h2), c in H.comul[h].items():
                moved = D.bimodule.act_left(A.e(a), D.h_ops[h1].cols[d])
                vec_axpy(out, c, self.element(moved, H.product(self.sigma.cols[h2], H.e(l))))
            return out
        hl = H.algebra.basis_product(h, l)
        for j, x in hl.items():
            for (l1, l2), c in H.comul[j].items():
                twisted = D.action.act(self._S_inv.cols[l1], A.e(a))
                vec_axpy(out, x * c, self.element(D.bimodule.act_left(twisted, {d: self.field.one}), H.e(l2)))
        return out

    def _right(self, b: int, kk: int, k: int) -> Vec:
        D, H = self.source, self.hopf
        A = D.algebra
        d, l = self.split(k)
        out: Vec = {}
        if not self.mirrored:
            for (l1, l2), c in H.comul[l].items():
                moved = D.bimodule.act_right({d: self.field.one}, D.action.operators[l1].cols[b])
                vec_axpy(out, c, self.element(moved, H.algebra.basis_product(l2, kk)))
            return out
        db = D.bimodule.act_right({d: self.field.one}, A.e(b))
        for (k1, k2), c in H.comul[kk].items():
            moved = D.h_act(self._S_odd.cols[k1], db)
            vec_axpy(out, c, self.element(moved, H.product(H.e(l), self._sigma_inv.cols[k2])))
        return out

    # --- verification -------------------------------------------------------

    def _sides(self, left: Vec, v: Vec, right: Vec) -> Vec:
        return self.bimodule.act_left(left, self.bimodule.act_right(v, right))

    def _base_law(self, a: int, k: int, b: int) -> bool:
        D, H, smash = self.source, self.hopf, self.smash
        A = D.algebra
        d, l = self.split(k)
        lhs = self._sides(smash.embed_base.cols[a], {k: self.field.one}, smash.embed_base.cols[b])
        rhs: Vec = {}
        if not self.mirrored:
            for (l1, l2), c in H.comul[l].items():
                x = D.three_sided(A.e(a), {d: self.field.one}, D.action.operators[l1].cols[b])
                vec_axpy(rhs, c, self.element(x, H.e(l2)))
        else:
            for (l1, l2), c in H.comul[l].items():
                twisted = D.action.act(self._S_inv.cols[l1], A.e(a))
                vec_axpy(rhs, c, self.element(D.three_sided(twisted, {d: self.field.one}, A.e(b)), H.e(l2)))
        return lhs == rhs

    def _hopf_law(self, h: int, k: int, kk: int) -> bool:
        D, H, smash = self.source, self.hopf, self.smash
        d, l = self.split(k)
        lhs = self._sides(smash.embed_hopf.cols[h], {k: self.field.one}, smash.embed_hopf.cols[kk])
        rhs: Vec = {}
        if not self.mirrored:
            for (h1, h2), c in H.comul[h].items():
                right = H.product(H.product(self.sigma.cols[h2], H.e(l)), H.e(kk))
                vec_axpy(rhs, c, self.element(D.h_ops[h1].cols[d], right))
        else:
            for (k1, k2), c in H.comul[kk].items():
                right = H.product(H.algebra.basis_product(h, l), self._sigma_inv.cols[k2])
                vec_axpy(rhs, c, self.element(D.h_act(self._S_odd.cols[k1], {d: self.field.one}), right))
        return lhs == rhs

    def _rewriting(self, sigma_inv: LinearMap, S_odd: LinearMap, k: int) -> bool:
        """d⊗ℓ = σ^-1(ℓ_2)·(S^{-1-2i}(ℓ_1)⇀d ⊗ 1)."""
        D, H, smash = self.source, self.hopf, self.smash
        d, l = self.split(k)
        rhs: Vec = {}
        for (l1, l2), c in H.comul[l].items():
            moved = self.element(D.h_act(S_odd.cols[l1], {d: self.field.one}), H.unit)
            vec_axpy(rhs, c, self.bimodule.act_left(smash.embed_hopf(sigma_inv.cols[l2]), moved))
        return rhs == {k: self.field.one}

    def verify(self) -> CheckReport:
        report = CheckReport(f"smash bimodule {self.bimodule.name}")
        report.extend(self.bimodule.check())
        D, H = self.source, self.hopf
        rn, rd, rh = range(D.algebra.dim), range(self.dim), range(H.dim)
        report.sweep("base law", ((a, k, b) for a in rn for k in rd for b in rn), self._base_law)
        report.sweep("hopf law", ((h, k, kk) for h in rh for k in rd for kk in rh), self._hopf_law)
        if not self.mirrored:
            if H.antipode_invertible and self.sigma.is_bijective():
                sigma_inv = self.sigma.inverse()
                S_odd = H.antipode_power(-1 - 2 * self.index)
                report.sweep("rewriting identity", ((k,) for k in rd),
                             lambda k: self._rewriting(sigma_inv, S_odd, k))
            else:
                report.skip("rewriting identity", "S or σ not invertible")
        return report

    def __repr__(self) -> str:
        return f"SmashBimodule({self.bimodule.name}, dim={self.dim})"


def smash_bimodule(D: EquivariantBimodule, sigma: LinearMap, smash: Optional[SmashAlgebra] = None) -> SmashBimodule:
    """D♯^σH as a Λ-bimodule.

    Raises:
        SigmaConditionError: σ is incompatible with the index of D
    """
    return SmashBimodule(D, sigma, smash=smash)


@dataclass
class FlipResult:
    """H^{σ⁻¹}♯D with the isomorphism from D♯^σH and its inverse."""

    source: SmashBimodule
    mirrored: SmashBimodule
    isomorphism: LinearMap
    inverse: LinearMap
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed


def flip_smash(D: EquivariantBimodule, sigma: LinearMap, smash: Optional[SmashAlgebra] = None) -> FlipResult:
    """d⊗ℓ -> σ^-1(ℓ_2) ⊗ S^{-2i-1}(ℓ_1)⇀d, with inverse ℓ⊗d -> ℓ_1⇀d ⊗ σ(ℓ_2).

    Raises:
        NotInvertibleError: S or σ is singular
        SigmaConditionError: σ is incompatible with the index of D
    """
    source = SmashBimodule(D, sigma, smash=smash)
    mirrored = SmashBimodule(D, sigma, smash=source.smash, mirrored=True)
    H = D.hopf
    one = D.field.one
    sigma_inv = sigma.inverse()
    S_odd = H.antipode_power(-2 * D.index - 1)

    def forward(k: int) -> Vec:
        d, l = source.split(k)
        out: Vec = {}
        for (l1, l2), c in H.comul[l].items():
            vec_axpy(out, c, mirrored.element(D.h_act(S_odd.cols[l1], {d: one}), sigma_inv.cols[l2]))
        return out

    def backward(k: int) -> Vec:
        d, l = mirrored.split(k)
        out: Vec = {}
        for (l1, l2), c in H.comul[l].items():
            vec_axpy(out, c, source.element(D.h_ops[l1].cols[d], sigma.cols[l2]))
        return out

    iso = LinearMap.from_function(D.field, source.dim, mirrored.dim, forward)
    inv = LinearMap.from_function(D.field, mirrored.dim, source.dim, backward)
    report = CheckReport(f"flip {source.bimodule.name} -> {mirrored.bimodule.name}")
    report.extend(source.verify(), prefix="D♯H ")
    report.extend(mirrored.verify(), prefix="H♯D ")
    report.record("flip is a bimodule isomorphism", source.bimodule.is_isomorphism(iso, mirrored.bimodule))
    report.record("inverse after flip", inv.compose(iso).is_identity())
    report.record("flip after inverse", iso.compose(inv).is_identity())
    return FlipResult(source=source, mirrored=mirrored, isomorphism=iso, inverse=inv, report=report)


@dataclass
class SmashTensorIso:
    """(D♯^σH) ⊗_Λ (D'♯^τH) -> (D ⊗_A D')♯^{τσ}H with its inverse."""

    source: BalancedTensor
    target: SmashBimodule
    isomorphism: LinearMap
    inverse: LinearMap
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed


def tensor_smash_iso(D: EquivariantBimodule, sigma: LinearMap, D2: EquivariantBimodule, tau: LinearMap,
                     smash: Optional[SmashAlgebra] = None) -> SmashTensorIso:
    """(d⊗ℓ)⊗(d'⊗ℓ') -> (d ⊗ ℓ_1⇀d') ⊗ τ(ℓ_2)ℓ'.

    Raises:
        SigmaConditionError: σ or τ fails its coproduct condition or does not commute with S^2
        IndexMismatchError: D and D' come from different actions
    """
    if D2.action is not D.action:
        raise IndexMismatchError(f"{D.name} and {D2.name} come from different actions")
    require_commutes_with_square(D, sigma, "σ")
    require_commutes_with_square(D, tau, "τ")
    left = SmashBimodule(D, sigma, smash=smash)
    smash = left.smash
    right = SmashBimodule(D2, tau, smash=smash)
    product = EquivariantTensor(D, D2)
    target = SmashBimodule(product, tau.compose(sigma), smash=smash)
    balanced = BalancedTensor(left.bimodule, right.bimodule)
    H = D.hopf
    one = D.field.one
    n_right = right.dim

    def ambient(v: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for idx, c in v.items():
            p, q = divmod(idx, n_right)
            d, l = left.split(p)
            d2, l2 = right.split(q)
            for (x1, x2), x in H.comul[l].items():
                dd = product.element({d: one}, D2.h_ops[x1].cols[d2])
                vec_axpy(out, c * x, target.element(dd, H.product(tau.cols[x2], H.e(l2))))
        return out

    well_defined = balanced.kills_relations(ambient)
    iso = balanced.descend(ambient, target.dim)

    def backward(k: int) -> Vec:
        x, l2 = target.split(k)
        out: Vec = {}
        for amb, c in product.tensor.lift(x).items():
            d, d2 = divmod(amb, D2.dim)
            first = left.element({d: one}, H.unit)
            second = right.element({d2: one}, H.e(l2))
            vec_axpy(out, c, balanced.element(first, second))
        return out

    inv = LinearMap.from_function(D.field, target.dim, balanced.dim, backward)
    report = CheckReport(f"{balanced.name} -> {target.bimodule.name}")
    report.record("map well defined", well_defined)
    report.record("bijective", iso.is_bijective(), detail=f"{balanced.dim} -> {target.dim}")
    report.sweep("left Λ-linear", ((x,) for x in range(smash.dim)),
                 lambda x: iso.compose(balanced.bimodule.left[x]) == target.bimodule.left[x].compose(iso))
    report.sweep("right Λ-linear", ((x,) for x in range(smash.dim)),
                 lambda x: iso.compose(balanced.bimodule.right[x]) == target.bimodule.right[x].compose(iso))
    report.record("inverse", iso.compose(inv).is_identity() and inv.compose(iso).is_identity())
    return SmashTensorIso(source=balanced, target=target, isomorphism=iso, inverse=inv, report=report)
