"""Projective resolutions over finite-dimensional algebras.

Minimal resolutions are built from projective covers P = ⊕ B f_k, one
summand per generator of the top M/JM. Each term keeps its idempotents
f_k, exhibiting it as a summand of a free module. The bar resolution is
the fallback when the radical cannot be computed.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.algebra import FinDimAlgebra, tensor_vectors
from ..core.field import Scalar
from ..core.linalg import LinearMap, Subspace, Vec, vec_axpy
from ..core.modules import Bimodule, LeftModule
from ..core.report import CheckReport
from . import config
from .exceptions import HomologyError, ResolutionTruncatedError
from .radical import RadicalData, radical_data

logger = logging.getLogger(__name__)

MODULE = "module"
BIMODULE = "bimodule"


class ProjectiveModule:
    """⊕_k B f_k for idempotents f_k of B, as a left B-module.

    The summand B f_k is stored as a subspace of B; coordinates of the
    direct sum are the concatenated subspace coordinates.
    """

    def __init__(self, algebra: FinDimAlgebra, idempotents: Sequence[Mapping[int, Scalar]],
                 classes: Optional[Sequence[int]] = None):
        self.algebra = algebra
        self.field = algebra.field
        self.idempotents: List[Vec] = [dict(f) for f in idempotents]
        self.classes = list(classes) if classes is not None else [0] * len(self.idempotents)
        self.components: List[Subspace] = [Subspace.image(algebra.right_mult(f)) for f in self.idempotents]
        self.offsets: List[int] = []
        total = 0
        for comp in self.components:
            self.offsets.append(total)
            total += comp.dim
        self.dim = total
        self.module = LeftModule.from_function(algebra, self.dim, self._act, name=f"P({len(self.idempotents)})")

    @property
    def rank(self) -> int:
        return len(self.idempotents)

    def embed(self, k: int, u: Mapping[int, Scalar]) -> Vec:
        """The element u of B f_k as a vector of the sum."""
        off = self.offsets[k]
        return {off + i: c for i, c in self.components[k].coordinates(u).items()}

    def component(self, k: int, v: Mapping[int, Scalar]) -> Vec:
        """The B f_k component of v as an element of B."""
        off, comp = self.offsets[k], self.components[k]
        return comp.from_coordinates({i - off: c for i, c in v.items() if off <= i < off + comp.dim})

    def generator(self, k: int) -> Vec:
        return self.embed(k, self.idempotents[k])

    def basis_element(self, index: int) -> Tuple[int, Vec]:
        """(k, u) with u in B f_k for a basis index of the sum."""
        for k in reversed(range(self.rank)):
            if index >= self.offsets[k]:
                return k, self.components[k].basis[index - self.offsets[k]]
        raise IndexError(index)

    def _act(self, i: int, index: int) -> Vec:
        k, u = self.basis_element(index)
        return self.embed(k, self.algebra.product(self.algebra.e(i), u))

    def map_to(self, target: LeftModule, images: Sequence[Mapping[int, Scalar]]) -> LinearMap:
        """The B-linear map sending the generator f_k to images[k], which must lie in f_k·target."""
        cols = []
        for index in range(self.dim):
            k, u = self.basis_element(index)
            cols.append(target.act(u, images[k]))
        return LinearMap(self.field, self.dim, target.dim, cols)

    def __repr__(self) -> str:
        return f"ProjectiveModule(rank={self.rank}, dim={self.dim})"


def submodule_as_module(M: LeftModule, W: Subspace, name: str = "") -> LeftModule:
    """A submodule W of M as a module in the coordinates of W."""
    ops = []
    for op in M.action:
        ops.append(LinearMap(M.field, W.dim, W.dim, [W.coordinates(op(v)) for v in W.basis]))
    return LeftModule(M.algebra, W.dim, ops, name=name or f"sub({M.name})")


def projective_cover(M: LeftModule, radical: RadicalData) -> Tuple[ProjectiveModule, LinearMap]:
    """A minimal projective cover P -> M.

    Generators are picked greedily from f·M for each class representative f,
    skipping vectors already in JM plus the submodule generated so far.

    Raises:
        HomologyError: the chosen generators do not match the top of M
    """
    B = M.algebra
    F = M.field
    JM = Subspace(F, M.dim, [M.act(r, {j: F.one}) for r in radical.radical.basis for j in range(M.dim)])
    covered = JM
    idempotents: List[Vec] = []
    classes: List[int] = []
    images: List[Vec] = []
    for c, f in enumerate(radical.representatives):
        for v in M.operator(f).cols:
            if not v or covered.contains(v):
                continue
            idempotents.append(f)
            classes.append(c)
            images.append(v)
            covered = covered.sum(M.submodule([v]))
    top = M.dim - JM.dim
    if covered.dim != M.dim or sum(radical.simple_dims[c] for c in classes) != top:
        raise HomologyError(f"Projective cover of {M.name} does not match its top of dimension {top}")
    P = ProjectiveModule(B, idempotents, classes)
    return P, P.map_to(M, images)


@dataclass
class Resolution:
    """A projective resolution ... -> P_1 -> P_0 -> M -> 0.

    Attributes:
        algebra: B
        module: M as a left B-module
        terms: P_0, P_1, ...
        differentials: differentials[0] is P_0 -> M, differentials[n] is P_n -> P_{n-1}
        syzygies: Ω_n = ker(P_{n-1} -> ...), as subspaces of P_{n-1} (Ω_0 is M)
        minimal: built from projective covers
        complete: the last syzygy vanished, so the resolution is finite
        periodic: (j, k) with Ω_k ≅ Ω_j and j < k, when detected
        role: MODULE or BIMODULE
    """
    algebra: FinDimAlgebra
    module: LeftModule
    terms: List[ProjectiveModule] = field(default_factory=list)
    differentials: List[LinearMap] = field(default_factory=list)
    syzygies: List[LeftModule] = field(default_factory=list)
    minimal: bool = True
    complete: bool = False
    periodic: Optional[Tuple[int, int]] = None
    bound: int = 0
    role: str = MODULE

    @property
    def length(self) -> Optional[int]:
        """Index of the last nonzero term of a complete resolution."""
        return len(self.terms) - 1 if self.complete else None

    def built_through(self) -> int:
        return len(self.terms) - 1

    def term_dims(self) -> List[int]:
        return [P.dim for P in self.terms]

    def term(self, n: int) -> ProjectiveModule:
        """P_n, the zero module above the length of a complete resolution.

        Raises:
            ResolutionTruncatedError: n lies beyond the built part of an incomplete resolution
        """
        if n < len(self.terms):
            return self.terms[n]
        if self.complete:
            return ProjectiveModule(self.algebra, [])
        raise ResolutionTruncatedError(f"P_{n} of {self.module.name} was not built (bound {self.bound})")

    def differential(self, n: int) -> LinearMap:
        """d_n: P_n -> P_{n-1} for n >= 1."""
        if n < len(self.differentials):
            return self.differentials[n]
        source, target = self.term(n), self.term(n - 1)
        return LinearMap.zero(self.algebra.field, source.dim, target.dim)

    def check(self):
        """d∘d = 0, surjective augmentation and the rank identity at every built stage."""
        report = CheckReport(f"resolution of {self.module.name}")
        if not self.terms:
            report.record("augmentation surjective", self.module.dim == 0)
            return report
        report.record("augmentation surjective", self.differentials[0].rank() == self.module.dim)
        for n in range(1, len(self.differentials)):
            report.record(f"d{n - 1}∘d{n} = 0", self.differentials[n - 1].compose(self.differentials[n]).is_zero())
        for n in range(len(self.terms)):
            upper = self.differentials[n + 1].rank() if n + 1 < len(self.differentials) else 0
            if n + 1 >= len(self.differentials) and not self.complete:
                continue
            ok = upper + self.differentials[n].rank() == self.terms[n].dim
            report.record(f"exact at P{n}", ok, detail=f"rank {upper} + {self.differentials[n].rank()} vs {self.terms[n].dim}")
        return report

    def to_dict(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra.name,
            "module": self.module.name,
            "role": self.role,
            "minimal": self.minimal,
            "complete": self.complete,
            "length": self.length,
            "built_through": self.built_through(),
            "term_dims": self.term_dims(),
            "periodic": list(self.periodic) if self.periodic is not None else None,
        }


def minimal_resolution(B: FinDimAlgebra, M: LeftModule, max_length: int,
                       radical: Optional[RadicalData] = None, stop_when_periodic: bool = False,
                       role: str = MODULE) -> Resolution:
    """Minimal projective resolution of M through P_{max_length}.

    A syzygy isomorphic to an earlier one (M included) is recorded as a
    period; with a minimal resolution this certifies infinite projective
    dimension.

    Raises:
        HomologyError: the radical of B cannot be computed
    """
    radical = radical if radical is not None else radical_data(B)
    res = Resolution(algebra=B, module=M, bound=max_length, role=role)
    current = M
    res.syzygies.append(M)
    inclusion: Optional[LinearMap] = None
    for n in range(max_length + 1):
        if current.dim == 0:
            res.complete = True
            break
        P, pi = projective_cover(current, radical)
        res.terms.append(P)
        res.differentials.append(pi if inclusion is None else inclusion.compose(pi))
        kernel = Subspace.kernel(pi)
        inclusion = LinearMap(B.field, kernel.dim, P.dim, list(kernel.basis))
        current = submodule_as_module(P.module, kernel, name=f"Ω{n + 1}({M.name})")
        res.syzygies.append(current)
        logger.debug(f"{M.name}: P{n} of rank {P.rank}, dimension {P.dim}; Ω{n + 1} of dimension {current.dim}")
        if res.periodic is None and current.dim:
            for j, earlier in enumerate(res.syzygies[:-1]):
                if earlier.dim == current.dim and earlier.find_isomorphism(current) is not None:
                    res.periodic = (j, n + 1)
                    logger.debug(f"{M.name}: Ω{n + 1} ≅ Ω{j}")
                    break
            if res.periodic is not None and stop_when_periodic:
                break
    else:
        res.complete = current.dim == 0
    return res


def bar_resolution(A: FinDimAlgebra, max_length: int) -> Resolution:
    """The normalized bar resolution A ⊗ Ā^{⊗n} ⊗ A of A over A^e.

    P_n is free over A^e on the tuples of Ā^{⊗n}, indexed big-endian over
    the free columns of k·1. d(a_1|...|a_n) = (a_1⊗1)(a_2|...) +
    Σ (-1)^j (...|a_j a_{j+1}|...) + (-1)^n (1⊗a_n)(...|a_{n-1}).
    """
    env = A.enveloping()
    F = A.field
    M = Bimodule.regular(A).enveloping_module(env)
    bar = Subspace(F, A.dim, [A.unit])
    m = bar.codim
    res = Resolution(algebra=env, module=M, minimal=False, bound=max_length, role=BIMODULE)
    res.syzygies.append(M)
    for n in range(max_length + 1):
        rank_n = m ** n
        if rank_n * env.dim > config.BAR_COCHAIN_LIMIT:
            logger.warning(f"Bar resolution of {A.name} stopped at P{n - 1}: rank {rank_n} too large")
            res.bound = n - 1
            break
        P = ProjectiveModule(env, [env.unit] * rank_n)
        res.terms.append(P)
        if n == 0:
            res.differentials.append(P.map_to(M, [A.unit]))
            continue
        images = [_bar_boundary(A, env, bar, res.terms[n - 1], t) for t in itertools.product(range(m), repeat=n)]
        res.differentials.append(P.map_to(res.terms[n - 1].module, images))
    return res


def _bar_generator(P: ProjectiveModule, tuple_index: Sequence[int], m: int, coefficient: Mapping[int, Scalar]) -> Vec:
    k = 0
    for a in tuple_index:
        k = k * m + a
    return P.embed(k, coefficient)


def _bar_boundary(A: FinDimAlgebra, env: FinDimAlgebra, bar: Subspace, target: ProjectiveModule,
                  t: Sequence[int]) -> Vec:
    F = A.field
    m = bar.codim
    n = len(t)
    out: Vec = {}
    first = bar.quotient_lift(t[0])
    vec_axpy(out, F.one, _bar_generator(target, t[1:], m, tensor_vectors(first, A.unit, A.dim)))
    for j in range(n - 1):
        merged = bar.quotient_coordinates(A.product(bar.quotient_lift(t[j]), bar.quotient_lift(t[j + 1])))
        sign = F.one if (j + 1) % 2 == 0 else -F.one
        for c_index, c in merged.items():
            shorter = tuple(t[:j]) + (c_index,) + tuple(t[j + 2:])
            vec_axpy(out, sign * c, _bar_generator(target, shorter, m, env.unit))
    last = bar.quotient_lift(t[-1])
    sign = F.one if n % 2 == 0 else -F.one
    vec_axpy(out, sign, _bar_generator(target, t[:-1], m, tensor_vectors(A.unit, last, A.dim)))
    return out


def bimodule_resolution(A: FinDimAlgebra, max_length: int, stop_when_periodic: bool = False) -> Resolution:
    """A projective resolution of A over A^e, minimal when the radical of A^e is available.

    Falls back to the bar resolution, flagged non-minimal, when the trace
    form does not give the radical.
    """
    env = A.enveloping()
    M = Bimodule.regular(A).enveloping_module(env)
    try:
        radical = radical_data(env)
    except HomologyError as e:
        logger.warning(f"Minimal bimodule resolution of {A.name} unavailable ({e}); using the bar resolution")
        return bar_resolution(A, max_length)
    return minimal_resolution(env, M, max_length, radical=radical, stop_when_periodic=stop_when_periodic,
                              role=BIMODULE)


@dataclass
class SmoothnessVerdict:
    """Smooth(n), NotSmoothPeriodic or Undetermined(bound)."""

    kind: str
    length: Optional[int] = None
    period: Optional[Tuple[int, int]] = None
    bound: int = 0
    resolution: Optional[Resolution] = None

    SMOOTH = "Smooth"
    PERIODIC = "NotSmoothPeriodic"
    UNDETERMINED = "Undetermined"

    @property
    def smooth(self) -> bool:
        return self.kind == self.SMOOTH

    def __str__(self) -> str:
        if self.kind == self.SMOOTH:
            return f"Smooth({self.length})"
        if self.kind == self.PERIODIC:
            return f"NotSmoothPeriodic(Ω{self.period[1]} ≅ Ω{self.period[0]})"
        return f"Undetermined({self.bound})"

    def to_dict(self) -> Dict[str, Any]:
        return {"verdict": str(self), "kind": self.kind, "length": self.length,
                "period": list(self.period) if self.period else None, "bound": self.bound}


def _verdict(res: Resolution, bound: int) -> SmoothnessVerdict:
    if res.complete:
        return SmoothnessVerdict(SmoothnessVerdict.SMOOTH, length=res.length, bound=bound, resolution=res)
    if res.periodic is not None and res.minimal:
        return SmoothnessVerdict(SmoothnessVerdict.PERIODIC, period=res.periodic, bound=bound, resolution=res)
    return SmoothnessVerdict(SmoothnessVerdict.UNDETERMINED, bound=bound, resolution=res)


def smoothness_probe(A: FinDimAlgebra, bound: Optional[int] = None) -> SmoothnessVerdict:
    """Decide smoothness from the minimal bimodule resolution within ``bound`` steps.

    Non-smoothness is reported only when a syzygy repeats.
    """
    bound = config.RESOLUTION_BOUND if bound is None else bound
    res = bimodule_resolution(A, bound, stop_when_periodic=True)
    verdict = _verdict(res, bound)
    logger.debug(f"{A.name}: {verdict}")
    return verdict


def module_probe(B: FinDimAlgebra, M: LeftModule, bound: Optional[int] = None,
                 radical: Optional[RadicalData] = None) -> SmoothnessVerdict:
    """The same verdict for the projective dimension of a one-sided module."""
    bound = config.RESOLUTION_BOUND if bound is None else bound
    res = minimal_resolution(B, M, bound, radical=radical, stop_when_periodic=True)
    return _verdict(res, bound)


def trivial_module(B: FinDimAlgebra, augmentation: Sequence[Scalar], name: str = "k") -> LeftModule:
    """k with b·1 = ε(b)."""
    F = B.field
    ops = [LinearMap(F, 1, 1, [{0: augmentation[i]} if augmentation[i] else {}]) for i in range(B.dim)]
    return LeftModule(B, 1, ops, name=name)
