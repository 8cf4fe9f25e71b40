"""Ext groups with the module structures they inherit.

Three constructions live here:

* ``ext_groups`` / ``ext_one_sided``: Ext_B(M, N) from a minimal
  resolution of M, with any operators on N commuting with B carried to Ext.
* ``bimodule_ext`` / ``ext_bimodule``: the ladder Ext^n_{A^e}(A, A^e) with
  its inner bimodule structure and, for a module algebra, the H-action
  making every rung an equivariant bimodule of index 1.
* ``smash_module_ext``: Ext_A(M, N) for modules over A♯H with the H-action
  (h⇀φ)(m) = h_2 φ(S^{-1}(h_1) m).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.algebra import FinDimAlgebra, tensor_vectors
from ..core.field import Scalar
from ..core.linalg import (
    LinearMap,
    Subquotient,
    Subspace,
    Vec,
    matrix_from_rows,
    nullspace,
    vec_axpy,
)
from ..core.modules import Bimodule, LeftModule, hom_space
from ..core.report import CheckReport
from ..equivariant.bimodule import EquivariantBimodule
from ..hopf.library import trivial_hopf
from ..smash.action import ModuleAlgebraAction
from ..smash.smash import SmashAlgebra
from . import config
from .exceptions import HomologyError
from .radical import RadicalData
from .resolution import ProjectiveModule, Resolution, bimodule_resolution, minimal_resolution

logger = logging.getLogger(__name__)

MINIMAL = "minimal"
BAR = "bar"


# --- one-sided Ext ----------------------------------------------------------

@dataclass
class ExtGroups:
    """Ext^n_B(M, N) for n = 0..max_degree.

    Attributes:
        resolution: the resolution of M the groups were computed from
        target: N
        groups: Ext^n as a subquotient of the cochains ⊕_k f_k N
        operators: for each degree, the operators induced by the extra operators on N
    """
    resolution: Resolution
    target: LeftModule
    groups: List[Subquotient] = field(default_factory=list)
    operators: List[List[LinearMap]] = field(default_factory=list)

    @property
    def max_degree(self) -> int:
        return len(self.groups) - 1

    @property
    def dims(self) -> List[int]:
        return [g.dim for g in self.groups]

    def nonzero_degrees(self) -> List[int]:
        return [n for n, g in enumerate(self.groups) if g.dim]

    def concentrated(self) -> Optional[int]:
        """The only degree with nonzero Ext, or None."""
        degrees = self.nonzero_degrees()
        return degrees[0] if len(degrees) == 1 else None

    def to_dict(self) -> Dict[str, Any]:
        return {"dims": self.dims, "resolution": self.resolution.to_dict()}


def _cochain_space(P: ProjectiveModule, N: LeftModule) -> Subspace:
    """Hom_B(P, N) ≅ ⊕_k f_k N inside ⊕_k N, block k at offset k * dim N."""
    vectors: List[Vec] = []
    for k, f in enumerate(P.idempotents):
        off = k * N.dim
        for v in Subspace.image(N.operator(f)).basis:
            vectors.append({off + i: c for i, c in v.items()})
    return Subspace(N.field, P.rank * N.dim, vectors)


def _coboundary(res: Resolution, n: int, N: LeftModule) -> LinearMap:
    """φ -> φ∘d_{n+1} on the block cochains of P_n and P_{n+1}."""
    source, target = res.term(n), res.term(n + 1)
    d = res.differential(n + 1)
    F = N.field
    cols: List[Vec] = [dict() for _ in range(source.rank * N.dim)]
    for l in range(target.rank):
        image = d(target.generator(l))
        for k in range(source.rank):
            u = source.component(k, image)
            if not u:
                continue
            for j, col in enumerate(N.operator(u).cols):
                vec_axpy(cols[k * N.dim + j], F.one, {l * N.dim + i: c for i, c in col.items()})
    return LinearMap(F, source.rank * N.dim, target.rank * N.dim, cols)


def ext_groups(res: Resolution, N: LeftModule, max_degree: int,
               extra_ops: Sequence[LinearMap] = ()) -> ExtGroups:
    """Ext^n(M, N) for n <= max_degree from a resolution of M.

    ``extra_ops`` are operators on N commuting with the B-action; each acts
    blockwise on cochains and descends to Ext.

    Raises:
        ResolutionTruncatedError: the resolution stops before P_{max_degree + 1}
    """
    F = N.field
    out = ExtGroups(resolution=res, target=N)
    previous: Optional[Tuple[Subspace, LinearMap]] = None
    for n in range(max_degree + 1):
        W = _cochain_space(res.term(n), N)
        delta = _coboundary(res, n, N)
        cycles = Subspace.kernel(delta).intersection(W)
        if previous is None:
            boundaries = Subspace(F, W.ambient_dim)
        else:
            W_prev, delta_prev = previous
            boundaries = Subspace(F, W.ambient_dim, [delta_prev(v) for v in W_prev.basis])
        group = Subquotient(cycles, boundaries)
        rank = res.term(n).rank
        ops = [group.induced_endomorphism(LinearMap.identity(F, rank).kron(T)) for T in extra_ops]
        out.groups.append(group)
        out.operators.append(ops)
        previous = (W, delta)
        logger.debug(f"Ext^{n}({res.module.name}, {N.name}) has dimension {group.dim}")
    return out


def ext_one_sided(B: FinDimAlgebra, M: LeftModule, N: Optional[LeftModule] = None,
                  max_degree: Optional[int] = None, extra_ops: Optional[Sequence[LinearMap]] = None,
                  radical: Optional[RadicalData] = None) -> ExtGroups:
    """Ext^n_B(M, N) with the residual structures carried by ``extra_ops``.

    N defaults to B itself, and then ``extra_ops`` defaults to the right
    multiplications, so Ext^n_B(M, B) comes with its right B-module structure.

    Raises:
        HomologyError: the radical of B cannot be computed
    """
    max_degree = config.RESOLUTION_BOUND if max_degree is None else max_degree
    if N is None:
        N = LeftModule.regular(B)
        if extra_ops is None:
            extra_ops = B.right_regular()
    res = minimal_resolution(B, M, max_degree + 1, radical=radical)
    return ext_groups(res, N, max_degree, extra_ops or ())


# --- the bimodule ladder ---------------------------------------------------

@dataclass
class ExtLadder:
    """Ext^n_{A^e}(A, A^e) for n = 0..max_degree as equivariant bimodules of index 1.

    Attributes:
        action: the module algebra the rungs are equivariant for
        rungs: one equivariant bimodule per degree
        reports: checks of each rung, including the coboundary commuting with H
        provenance: MINIMAL or BAR
        requested: the degree asked for
        resolution: the minimal resolution behind a MINIMAL ladder
    """
    action: ModuleAlgebraAction
    rungs: List[EquivariantBimodule] = field(default_factory=list)
    reports: List[CheckReport] = field(default_factory=list)
    provenance: str = BAR
    requested: int = 0
    resolution: Optional[Resolution] = None

    @property
    def algebra(self) -> FinDimAlgebra:
        return self.action.algebra

    @property
    def reliable_through(self) -> int:
        return len(self.rungs) - 1

    @property
    def truncated(self) -> bool:
        return self.reliable_through < self.requested

    @property
    def dims(self) -> List[int]:
        return [r.dim for r in self.rungs]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def nonzero_degrees(self) -> List[int]:
        return [n for n, r in enumerate(self.rungs) if r.dim]

    def concentrated(self) -> Optional[int]:
        """The single degree with a nonzero rung, or None."""
        degrees = self.nonzero_degrees()
        return degrees[0] if len(degrees) == 1 else None

    def rung(self, n: int) -> EquivariantBimodule:
        if n > self.reliable_through:
            raise HomologyError(f"Ext^{n} of {self.algebra.name} lies above the computed range {self.reliable_through}")
        return self.rungs[n]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra.name,
            "provenance": self.provenance,
            "dims": self.dims,
            "reliable_through": self.reliable_through,
            "truncated": self.truncated,
            "concentrated_in": self.concentrated(),
            "equivariant": self.passed,
        }


class BarCochains:
    """Normalized bar cochains C^n = Hom_k(Ā^{⊗n}, A ⊗ A) of a module algebra.

    The cochain index is t * dim(A)^2 + x * dim(A) + y for a tuple t of Ā
    (big-endian over the free columns of k·1) and a value e_x ⊗ e_y of
    A^e. The outer structure of A^e carries the coboundary; the inner one,
    a·(x⊗y)·b = xb ⊗ ay, gives the bimodule structure on Ext.
    """

    def __init__(self, action: ModuleAlgebraAction):
        self.action = action
        self.algebra = A = action.algebra
        self.hopf = action.hopf
        self.field = action.field
        self.bar = Subspace(self.field, A.dim, [A.unit])
        self.m = self.bar.codim
        self.d = A.dim
        lifts = [self.bar.quotient_lift(k) for k in range(self.m)]
        self._left = [A.left_mult(a) for a in lifts]
        self._right = [A.right_mult(a) for a in lifts]
        self._merged = {(j, k): self.bar.quotient_coordinates(A.product(lifts[j], lifts[k]))
                        for j in range(self.m) for k in range(self.m)}
        self._on_bar = [[self.bar.quotient_coordinates(action.act_basis(h, a)) for a in lifts]
                        for h in range(self.hopf.dim)]
        self._diagonal: Dict[int, List[LinearMap]] = {}
        self.logger = logging.getLogger(f"smashcalc.homology.{self.__class__.__name__.lower()}")

    def rank(self, n: int) -> int:
        return self.m ** n

    def dim(self, n: int) -> int:
        return self.rank(n) * self.d * self.d

    def index(self, t: Sequence[int]) -> int:
        k = 0
        for a in t:
            k = k * self.m + a
        return k

    def coboundary(self, n: int) -> LinearMap:
        """δ: C^n -> C^{n+1}, (δf)(a_1..a_{n+1}) = (a_1⊗1)f(a_2..) + Σ(-1)^j f(..a_j a_{j+1}..) + (-1)^{n+1}(1⊗a_{n+1})f(..a_n)."""
        F, d = self.field, self.d
        d2 = d * d
        one = F.one
        cols: List[Vec] = [dict() for _ in range(self.dim(n))]

        def add(col: Vec, i: int, c: Scalar) -> None:
            col[i] = col.get(i, F.zero) + c

        for t in itertools.product(range(self.m), repeat=n + 1):
            row = self.index(t) * d2
            base = self.index(t[1:]) * d2
            for x in range(d):
                for x2, c in self._left[t[0]].cols[x].items():
                    for y in range(d):
                        add(cols[base + x * d + y], row + x2 * d + y, c)
            for j in range(n):
                sign = -one if j % 2 == 0 else one
                for c_index, c in self._merged[(t[j], t[j + 1])].items():
                    base = self.index(t[:j] + (c_index,) + t[j + 2:]) * d2
                    for p in range(d2):
                        add(cols[base + p], row + p, sign * c)
            sign = one if (n + 1) % 2 == 0 else -one
            base = self.index(t[:-1]) * d2
            for x in range(d):
                for y in range(d):
                    for y2, c in self._right[t[-1]].cols[y].items():
                        add(cols[base + x * d + y], row + x * d + y2, sign * c)
        return LinearMap(F, self.dim(n), self.dim(n + 1), cols)

    def diagonal(self, n: int) -> List[LinearMap]:
        """h⇀(a_1|...|a_n) = h_1⇀a_1|...|h_n⇀a_n on Ā^{⊗n}, one matrix per basis h."""
        if n in self._diagonal:
            return self._diagonal[n]
        H, F = self.hopf, self.field
        size = self.rank(n)
        ops: List[LinearMap] = []
        for h in range(H.dim):
            if n == 0:
                ops.append(LinearMap(F, 1, 1, [{0: H.counit[h]} if H.counit[h] else {}]))
                continue
            cols: List[Vec] = [dict() for _ in range(size)]
            legs = H.basis_legs(h, n)
            for t in itertools.product(range(self.m), repeat=n):
                col = cols[self.index(t)]
                for key, c in legs.items():
                    partial: Vec = {0: c}
                    for leg, a in zip(key, t):
                        partial = tensor_vectors(partial, self._on_bar[leg][a], self.m)
                        if not partial:
                            break
                    vec_axpy(col, F.one, partial)
            ops.append(LinearMap(F, size, size, cols))
        self._diagonal[n] = ops
        return ops

    def _diagonal_of(self, v: Dict[int, Scalar], n: int) -> LinearMap:
        size = self.rank(n)
        out = LinearMap.zero(self.field, size, size)
        for i, c in v.items():
            out = out + self.diagonal(n)[i].scale(c)
        return out

    def h_operators(self, n: int) -> List[LinearMap]:
        """(h⇀f)(t) = (S^2(h_3)⇀ ⊗ h_1⇀) f(S(h_2)⇀t) on C^n, one matrix per basis h."""
        H, A = self.hopf, self.algebra
        S, S2 = H.antipode, H.antipode_power(2)
        ops: List[LinearMap] = []
        for h in range(H.dim):
            total = LinearMap.zero(self.field, self.dim(n), self.dim(n))
            for (h1, h2, h3), c in H.basis_legs(h, 3).items():
                on_tuples = self._diagonal_of(S.cols[h2], n).transpose()
                on_values = self.action.operator(S2.cols[h3]).kron(self.action.operators[h1])
                total = total + on_tuples.kron(on_values).scale(c)
            ops.append(total)
        return ops

    def left_operator(self, a: int, n: int) -> LinearMap:
        """a·(x⊗y) = x ⊗ ay."""
        F = self.field
        inner = LinearMap.identity(F, self.d).kron(self.algebra.left_mult(self.algebra.e(a)))
        return LinearMap.identity(F, self.rank(n)).kron(inner)

    def right_operator(self, b: int, n: int) -> LinearMap:
        """(x⊗y)·b = xb ⊗ y."""
        F = self.field
        inner = self.algebra.right_mult(self.algebra.e(b)).kron(LinearMap.identity(F, self.d))
        return LinearMap.identity(F, self.rank(n)).kron(inner)


def _rung_from_cochains(cochains: BarCochains, group: Subquotient, n: int, h_ops: Sequence[LinearMap]) -> EquivariantBimodule:
    A = cochains.algebra
    left = [group.induced_endomorphism(cochains.left_operator(a, n)) for a in range(A.dim)]
    right = [group.induced_endomorphism(cochains.right_operator(b, n)) for b in range(A.dim)]
    bimodule = Bimodule(A, A, group.dim, left, right, name=f"Ext^{n}({A.name})")
    induced = [group.induced_endomorphism(P) for P in h_ops]
    return EquivariantBimodule(cochains.action, bimodule, induced, index=1, name=bimodule.name)


def ext_bimodule(action: ModuleAlgebraAction, max_degree: int) -> ExtLadder:
    """Ext^n_{A^e}(A, A^e) for n <= max_degree from bar cochains, each rung equivariant of index 1.

    The bar resolution is stable under the diagonal H-action, so the
    H-action on cochains descends to Ext. Degrees whose cochains exceed
    the configured size are left out and the ladder is flagged truncated.
    """
    cochains = BarCochains(action)
    A = action.algebra
    F = action.field
    ladder = ExtLadder(action=action, provenance=BAR, requested=max_degree)
    previous: Optional[LinearMap] = None
    h_current = cochains.h_operators(0)
    for n in range(max_degree + 1):
        if cochains.dim(n + 1) > config.BAR_COCHAIN_LIMIT:
            logger.warning(f"Ext ladder of {A.name} stops at degree {n - 1}: "
                           f"{cochains.dim(n + 1)} cochains exceed {config.BAR_COCHAIN_LIMIT}")
            break
        delta = cochains.coboundary(n)
        h_ops = h_current
        h_next = cochains.h_operators(n + 1)
        report = CheckReport(f"Ext^{n}_{{A^e}}({A.name}, A^e)")
        if previous is not None:
            report.record("δ∘δ = 0", delta.compose(previous).is_zero())
        report.sweep("coboundary commutes with H", ((h,) for h in range(action.hopf.dim)),
                     lambda h: delta.compose(h_ops[h]) == h_next[h].compose(delta))
        boundaries = Subspace.image(previous) if previous is not None else Subspace(F, cochains.dim(n))
        group = Subquotient(Subspace.kernel(delta), boundaries)
        rung = _rung_from_cochains(cochains, group, n, h_ops)
        report.extend(rung.check(), prefix="rung ")
        ladder.rungs.append(rung)
        ladder.reports.append(report)
        previous = delta
        h_current = h_next
        cochains.logger.debug(f"{A.name}: Ext^{n} has dimension {group.dim} ({cochains.dim(n)} cochains)")
    return ladder


def bimodule_ext(A: FinDimAlgebra, max_degree: int) -> ExtLadder:
    """Ext^n_{A^e}(A, A^e) from the minimal bimodule resolution, bar cochains as fallback.

    The rungs carry the trivial action of the one-dimensional Hopf algebra,
    so they are checked as plain bimodules.
    """
    action = ModuleAlgebraAction.trivial(trivial_hopf(A.field), A)
    res = bimodule_resolution(A, max_degree + 1)
    if not res.minimal:
        return ext_bimodule(action, max_degree)
    env = res.algebra
    F = A.field
    N = LeftModule.regular(env)
    left = [env.right_mult(tensor_vectors(A.unit, A.e(a), A.dim)) for a in range(A.dim)]
    right = [env.right_mult(tensor_vectors(A.e(b), A.unit, A.dim)) for b in range(A.dim)]
    groups = ext_groups(res, N, max_degree, left + right)
    ladder = ExtLadder(action=action, provenance=MINIMAL, requested=max_degree, resolution=res)
    for n, (group, ops) in enumerate(zip(groups.groups, groups.operators)):
        bimodule = Bimodule(A, A, group.dim, ops[:A.dim], ops[A.dim:], name=f"Ext^{n}({A.name})")
        rung = EquivariantBimodule(action, bimodule, [LinearMap.identity(F, group.dim)], index=1,
                                   name=bimodule.name)
        report = CheckReport(f"Ext^{n}_{{A^e}}({A.name}, A^e)")
        report.extend(rung.check(), prefix="rung ")
        ladder.rungs.append(rung)
        ladder.reports.append(report)
    return ladder


# --- Ext over the base of a smash product -----------------------------------

@dataclass
class SmashModuleExt:
    """Ext^q_Λ(M, N) and Ext^q_A(M, N) with its H-action, for Λ = A♯H.

    Attributes:
        smash: Λ
        smash_dims: dim Ext^q_Λ(M, N)
        base_dims: dim Ext^q_A(M, N)
        invariant_dims: dim of the H-invariants of Ext^q_A(M, N)
        h_operators: for each q, the H-action on Ext^q_A(M, N), one matrix per basis h
        groups: Ext^q_A(M, N) as subquotients of cochain coordinates
    """
    smash: SmashAlgebra
    smash_dims: List[int] = field(default_factory=list)
    base_dims: List[int] = field(default_factory=list)
    invariant_dims: List[int] = field(default_factory=list)
    h_operators: List[List[LinearMap]] = field(default_factory=list)
    groups: List[Subquotient] = field(default_factory=list)
    cochain_bases: List[List[LinearMap]] = field(default_factory=list)


def _flatten(f: LinearMap) -> Vec:
    out: Vec = {}
    for c, col in enumerate(f.cols):
        for r, x in col.items():
            out[r * f.source_dim + c] = x
    return out


def _unflatten(F, v: Vec, m: int, n: int) -> LinearMap:
    cols: List[Vec] = [dict() for _ in range(m)]
    for idx, x in v.items():
        r, c = divmod(idx, m)
        cols[c][r] = x
    return LinearMap(F, m, n, cols)


def h_invariants(ops: Sequence[LinearMap], counit: Sequence[Scalar], dim: int) -> Subspace:
    """{v : h·v = ε(h) v for every basis h} in a space of dimension ``dim``."""
    F = ops[0].field
    rows: List[Vec] = []
    for op, eps in zip(ops, counit):
        shifted = op - LinearMap.identity(F, dim).scale(eps)
        rows.extend(r for r in shifted.transpose().cols if r)
    if not rows:
        return Subspace.whole(F, dim)
    return Subspace(F, dim, nullspace(matrix_from_rows(rows, dim, F.domain)))


def smash_module_ext(smash: SmashAlgebra, M: LeftModule, N: LeftModule, max_degree: int,
                     radical: Optional[RadicalData] = None) -> SmashModuleExt:
    """Ext_Λ(M, N) and Ext_A(M, N) from one minimal Λ-resolution of M.

    Projective Λ-modules stay projective over A, so restricting the
    resolution computes Ext_A. Its cochains Hom_A(P_q, N) carry
    (h⇀φ)(p) = h_2 φ(S^{-1}(h_1) p), which commutes with φ -> φ∘d.
    """
    H, F = smash.hopf, smash.field
    res = minimal_resolution(smash.algebra, M, max_degree + 1, radical=radical)
    out = SmashModuleExt(smash=smash)
    out.smash_dims = ext_groups(res, N, max_degree).dims

    base_gens = [smash.embed_base(g) for g in smash.base.generators()]
    S_inv = H.antipode_power(-1)
    hopf_elements = [smash.embed_hopf.cols[h] for h in range(H.dim)]
    spaces: List[Subspace] = []
    bases: List[List[LinearMap]] = []
    for q in range(max_degree + 2):
        P = res.term(q).module
        maps = hom_space(F, [P.operator(g) for g in base_gens], [N.operator(g) for g in base_gens], P.dim, N.dim)
        space = Subspace(F, P.dim * N.dim, [_flatten(f) for f in maps])
        # coordinates are read against the rref rows, so those rows are the cochain basis
        spaces.append(space)
        bases.append([_unflatten(F, v, P.dim, N.dim) for v in space.basis])

    def coords(q: int, f: LinearMap) -> Vec:
        return spaces[q].coordinates(_flatten(f))

    for q in range(max_degree + 1):
        P = res.term(q).module
        d = res.differential(q + 1)
        delta = LinearMap(F, len(bases[q]), len(bases[q + 1]), [coords(q + 1, f.compose(d)) for f in bases[q]])
        if q == 0:
            boundaries = Subspace(F, len(bases[0]))
        else:
            d_prev = res.differential(q)
            prev = [coords(q, f.compose(d_prev)) for f in bases[q - 1]]
            boundaries = Subspace(F, len(bases[q]), prev)
        group = Subquotient(Subspace.kernel(delta), boundaries)
        ops: List[LinearMap] = []
        for h in range(H.dim):
            def moved(v: Vec, h=h, q=q, P=P) -> Vec:
                f = LinearMap(F, P.dim, N.dim, [dict() for _ in range(P.dim)])
                for k, c in v.items():
                    f = f + bases[q][k].scale(c)
                total = LinearMap.zero(F, P.dim, N.dim)
                for (h1, h2), c in H.comul[h].items():
                    inner = P.operator(smash.embed_hopf(S_inv.cols[h1]))
                    total = total + N.operator(hopf_elements[h2]).compose(f).compose(inner).scale(c)
                return coords(q, total)
            ops.append(group.induced_endomorphism(moved))
        out.groups.append(group)
        out.h_operators.append(ops)
        out.base_dims.append(group.dim)
        out.invariant_dims.append(h_invariants(ops, H.counit, group.dim).dim if group.dim else 0)
    out.cochain_bases = bases
    logger.debug(f"{smash.algebra.name}: Ext_Λ dims {out.smash_dims}, Ext_A dims {out.base_dims}, "
                 f"invariant dims {out.invariant_dims}")
    return out
