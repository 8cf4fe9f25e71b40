"""Identity suites relating Λ, Λ^e, A^e♯H^e and the Δ_i."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..core.algebra import AlgebraMorphism, FinDimAlgebra, tensor_vectors
from ..core.exceptions import NotInvertibleError
from ..core.linalg import LinearMap, Vec, vec_axpy
from ..core.modules import LeftModule
from ..core.report import CheckReport
from . import config
from .action import ModuleAlgebraAction
from .delta import DeltaAlgebra, delta_embedding
from .smash import SmashAlgebra, smash_product

logger = logging.getLogger(__name__)


@dataclass
class IdentityContext:
    """Everything built from one action that the identity suites refer to."""

    action: ModuleAlgebraAction
    smash: SmashAlgebra
    enveloping: FinDimAlgebra
    deltas: Dict[int, DeltaAlgebra] = field(default_factory=dict)

    @classmethod
    def build(cls, action: ModuleAlgebraAction, indices: Sequence[int] = ()) -> "IdentityContext":
        smash = smash_product(action, check=False)
        context = cls(action=action, smash=smash, enveloping=smash.algebra.enveloping())
        for i in indices:
            try:
                context.deltas[i] = DeltaAlgebra(action, i)
            except NotInvertibleError:
                logger.warning(f"Δ{i} needs an invertible antipode; skipped")
        return context

    def pair(self, x: Vec, y: Vec) -> Vec:
        """x ⊗ y in Λ^e."""
        return tensor_vectors(x, y, self.smash.dim)

    def base(self, a: int) -> Vec:
        return self.smash.embed_base.cols[a]

    def hopf(self, h: int) -> Vec:
        return self.smash.embed_hopf.cols[h]


def _hopf_enveloping_past(ctx: IdentityContext, S_inv: LinearMap, h: int, k: int, a: int, b: int) -> bool:
    """(h⊗k)(a⊗b) = ((h_1⇀a) ⊗ (S^-1(k_1)⇀b))(h_2⊗k_2) in Λ^e."""
    H, A = ctx.action.hopf, ctx.action.algebra
    act = ctx.action.act
    emb_a = ctx.smash.embed_base
    Le = ctx.enveloping
    lhs = Le.product(ctx.pair(ctx.hopf(h), ctx.hopf(k)), ctx.pair(ctx.base(a), ctx.base(b)))
    rhs: Vec = {}
    for (h1, h2), c in H.comul[h].items():
        x = emb_a(ctx.action.operators[h1].cols[a])
        for (k1, k2), d in H.comul[k].items():
            y = emb_a(act(S_inv.cols[k1], A.e(b)))
            vec_axpy(rhs, c * d, Le.product(ctx.pair(x, y), ctx.pair(ctx.hopf(h2), ctx.hopf(k2))))
    return lhs == rhs


def _enveloping_hopf_past(ctx: IdentityContext, S_inv: LinearMap, h: int, k: int, a: int, b: int) -> bool:
    """(a⊗b)(h⊗k) = (h_2⊗k_2)((S^-1(h_1)⇀a) ⊗ (k_1⇀b)) in Λ^e."""
    H, A = ctx.action.hopf, ctx.action.algebra
    act = ctx.action.act
    emb_a = ctx.smash.embed_base
    Le = ctx.enveloping
    lhs = Le.product(ctx.pair(ctx.base(a), ctx.base(b)), ctx.pair(ctx.hopf(h), ctx.hopf(k)))
    rhs: Vec = {}
    for (h1, h2), c in H.comul[h].items():
        x = emb_a(act(S_inv.cols[h1], A.e(a)))
        for (k1, k2), d in H.comul[k].items():
            y = emb_a(ctx.action.operators[k1].cols[b])
            vec_axpy(rhs, c * d, Le.product(ctx.pair(ctx.hopf(h2), ctx.hopf(k2)), ctx.pair(x, y)))
    return lhs == rhs


def enveloping_smash_morphism(ctx: IdentityContext) -> AlgebraMorphism:
    """A^e♯H^e -> Λ^e, (a⊗b)#(h⊗k) -> (a#h) ⊗ (k·b).

    Raises:
        NotInvertibleError: S is singular, so H^e is undefined
    """
    action_e = ctx.action.enveloping()
    source = smash_product(action_e, check=False)
    H, A = ctx.action.hopf, ctx.action.algebra
    n, m = A.dim, H.dim
    smash = ctx.smash
    cols: List[Vec] = []
    for a in range(n):
        for b in range(n):
            for h in range(m):
                for k in range(m):
                    first = {smash.index(a, h): ctx.action.field.one}
                    second = smash.product(ctx.hopf(k), ctx.base(b))
                    cols.append(ctx.pair(first, second))
    return AlgebraMorphism(source.algebra, ctx.enveloping, cols, name=f"{source.algebra.name}->{ctx.enveloping.name}")


def _delta_via_enveloping_action(ctx: IdentityContext, delta: DeltaAlgebra, action_e: ModuleAlgebraAction,
                                 forward: bool, h: int, a: int, b: int) -> bool:
    """The Δ_i commutation laws written with the H^e-action on A^e.

    forward:  h×(a⊗b) = ((h_1 ⊗ S^{2i+1}(h_3))⇀(a⊗b)) × h_2
    backward: (a⊗b)×h = h_2 × ((S^-1(h_1) ⊗ S^{2i+2}(h_3))⇀(a⊗b))
    """
    H, A = delta.hopf, delta.base
    m, n = H.dim, A.dim
    i = delta.index
    pure = delta.embed_enveloping
    ab = {a * n + b: ctx.action.field.one}
    if forward:
        first, third = LinearMap.identity(H.field, m), H.antipode_power(2 * i + 1)
        lhs = delta.product(delta.embed_hopf.cols[h], pure(ab))
    else:
        first, third = H.antipode_power(-1), H.antipode_power(2 * i + 2)
        lhs = delta.product(pure(ab), delta.embed_hopf.cols[h])
    rhs: Vec = {}
    for (h1, h2, h3), c in H.basis_legs(h, 3).items():
        twisted = tensor_vectors(first.cols[h1], third.cols[h3], m)
        moved = pure(action_e.act(twisted, ab))
        hop = delta.embed_hopf.cols[h2]
        term = delta.product(moved, hop) if forward else delta.product(hop, moved)
        vec_axpy(rhs, c, term)
    return lhs == rhs


def base_as_smash_module(smash: SmashAlgebra) -> LeftModule:
    """A as a left Λ-module: (a#h)·x = a(h⇀x)."""
    A, m = smash.base, smash.hopf.dim
    ops = smash.action.operators

    def act(i: int, x: int) -> Vec:
        a, h = divmod(i, m)
        return A.product(A.e(a), ops[h].cols[x])

    return LeftModule.from_function(smash.algebra, A.dim, act, name=f"{A.name} over {smash.algebra.name}",
                                    labels=A.labels)


def base_as_delta_module(delta: DeltaAlgebra) -> LeftModule:
    """A as a left Δ_i-module: (a⊗b⊗h)·x = a(h⇀x)b."""
    A, m, n = delta.base, delta.hopf.dim, delta.base.dim
    ops = delta.action.operators

    def act(i: int, x: int) -> Vec:
        ab, h = divmod(i, m)
        a, b = divmod(ab, n)
        return A.product_all(A.e(a), ops[h].cols[x], A.e(b))

    return LeftModule.from_function(delta.algebra, n, act, name=f"{A.name} over Δ{delta.index}", labels=A.labels)


def twist_automorphism(smash: SmashAlgebra, sigma: LinearMap, i: int) -> AlgebraMorphism:
    """φ(a#h) = a σ(S^{-2i}(h)) on Λ.

    Raises:
        NotInvertibleError: i > 0 and S is singular
    """
    H = smash.hopf
    twisted = sigma.compose(H.antipode_power(-2 * i))
    cols = []
    for a in range(smash.base.dim):
        for h in range(H.dim):
            cols.append(smash.product(smash.embed_base.cols[a], smash.embed_hopf(twisted.cols[h])))
    return AlgebraMorphism(smash.algebra, smash.algebra, cols, name=f"φ[σ, {i}]")


def verify_identities(action: ModuleAlgebraAction, indices: Optional[Sequence[int]] = None,
                      sigma: Optional[LinearMap] = None, sigma_index: int = 0,
                      context: Optional[IdentityContext] = None) -> CheckReport:
    """Evaluate every identity of the suite on all basis tuples.

    Identities needing S^-1 are recorded as failures when the antipode is
    singular. The twist automorphism is checked only when ``sigma`` is given.
    """
    indices = tuple(config.DELTA_INDICES if indices is None else indices)
    ctx = context if context is not None else IdentityContext.build(action, indices)
    H, A = action.hopf, action.algebra
    rh, ra = range(H.dim), range(A.dim)
    report = CheckReport(f"identities for {action.name}")

    report.extend(ctx.smash.verify(), prefix="Λ ")
    report.extend(base_as_smash_module(ctx.smash).check(), prefix="A over Λ: ")

    try:
        S_inv = H.antipode_power(-1)
    except NotInvertibleError:
        S_inv = None
        report.record("antipode invertible", False, detail="identities through S^-1 not evaluated")

    if S_inv is not None:
        quadruples = [(h, k, a, b) for h in rh for k in rh for a in ra for b in ra]
        report.sweep("H^e past A^e", iter(quadruples),
                     lambda h, k, a, b: _hopf_enveloping_past(ctx, S_inv, h, k, a, b))
        report.sweep("A^e past H^e", iter(quadruples),
                     lambda h, k, a, b: _enveloping_hopf_past(ctx, S_inv, h, k, a, b))
        action_e = action.enveloping()
        report.extend(action_e.check(), prefix="H^e on A^e: ")
        iso = enveloping_smash_morphism(ctx)
        iso_report = iso.check()
        report.extend(iso_report, prefix="A^e♯H^e -> Λ^e ")
        report.record("A^e♯H^e -> Λ^e bijective", iso.is_bijective())
    else:
        action_e = None

    for i in indices:
        delta = ctx.deltas.get(i)
        if delta is None:
            report.record(f"Δ{i} defined", False, detail="antipode not invertible")
            continue
        report.extend(delta.verify(), prefix=f"Δ{i} ")
        if action_e is not None:
            triples = [(h, a, b) for h in rh for a in ra for b in ra]
            report.sweep(f"Δ{i} H past A^e through H^e", iter(triples),
                         lambda h, a, b, d=delta: _delta_via_enveloping_action(ctx, d, action_e, True, h, a, b))
            report.sweep(f"Δ{i} A^e past H through H^e", iter(triples),
                         lambda h, a, b, d=delta: _delta_via_enveloping_action(ctx, d, action_e, False, h, a, b))
            report.extend(delta_embedding(delta, ctx.smash, ctx.enveloping).report, prefix=f"Δ{i} into Λ^e: ")
        if i == 0:
            report.extend(base_as_delta_module(delta).check(), prefix="A over Δ0: ")

    if sigma is not None:
        try:
            phi = twist_automorphism(ctx.smash, sigma, sigma_index)
            report.extend(phi.check(), prefix="twist automorphism ")
            report.record("twist automorphism bijective", phi.is_bijective())
        except NotInvertibleError:
            report.record("twist automorphism", False, detail="antipode not invertible")
    return report
