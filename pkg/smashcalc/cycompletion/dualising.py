"""Inverse dualising complexes D_A = RHom_{A^e}(A, A^e) as equivariant bimodule complexes.

For a hereditary path algebra A = kQ the standard resolution

    0 -> ⊕_a A e_{s(a)} ⊗ e_{t(a)} A -> ⊕_v A e_v ⊗ e_v A -> A -> 0

dualises to a two-term complex of free bimodules. The summand of a vertex
v (degree 0) or an arrow a (degree 1) with idempotents (u, w) has basis
pairs (x, y) with x a path starting at u and y a path ending at w; it is
e_u A ⊗ A e_w with the inner bimodule structure p·(x, y)·q = (x q, p y).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..core.field import Field
from ..core.linalg import LinearMap, Subquotient, Subspace, Vec, vec_axpy
from ..core.modules import Bimodule
from ..core.report import CheckReport
from ..equivariant.bimodule import EquivariantBimodule
from ..homology.ext import ExtLadder
from ..hopf.library import trivial_hopf
from ..smash.action import ModuleAlgebraAction
from .exceptions import CompletionError, CyclicQuiverError
from .quiver import Quiver, QuiverAction, path_algebra, path_bound

logger = logging.getLogger(__name__)


@dataclass
class DualisingComplex:
    """A complex of index-1 equivariant bimodules carried as one graded space.

    Attributes:
        module: the total space with its bimodule and H-actions
        degrees: cohomological degree of each basis element
        differential: the degree-one bimodule map δ on the total space
        report: checks made while building it
        quiver: the quiver of a hereditary path algebra, None for Ext-based complexes
        generators: label and degree of each free summand when built from a quiver
        cells: (summand, x, y) for each basis element when built from a quiver
    """
    module: EquivariantBimodule
    degrees: List[int]
    differential: LinearMap
    report: CheckReport
    quiver: Optional[Quiver] = None
    generators: Optional[List[Tuple[str, int]]] = None
    cells: Optional[List[Tuple[int, int, int]]] = None

    @property
    def algebra(self):
        return self.module.algebra

    @property
    def action(self) -> ModuleAlgebraAction:
        return self.module.action

    @property
    def hopf(self):
        return self.module.hopf

    @property
    def field(self) -> Field:
        return self.module.field

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def passed(self) -> bool:
        return self.report.passed

    def support(self) -> List[int]:
        return sorted(set(self.degrees))

    def component(self, k: int) -> List[int]:
        """Basis indices of cohomological degree k."""
        return [i for i, d in enumerate(self.degrees) if d == k]

    def _subquotient(self, k: int) -> Subquotient:
        F, n = self.field, self.dim
        inside = self.component(k)
        restricted = LinearMap(F, len(inside), n, [self.differential.cols[i] for i in inside])
        cycles = [{inside[j]: c for j, c in z.items()} for z in restricted.kernel()]
        boundaries = [self.differential.cols[i] for i in self.component(k - 1)]
        return Subquotient(Subspace(F, n, cycles), Subspace(F, n, boundaries))

    def cohomology(self, k: int) -> EquivariantBimodule:
        """H^k(D) with the induced bimodule and H-actions."""
        group = self._subquotient(k)
        bim = self.module.bimodule
        left = [group.induced_endomorphism(P) for P in bim.left]
        right = [group.induced_endomorphism(P) for P in bim.right]
        h_ops = [group.induced_endomorphism(P) for P in self.module.h_ops]
        quotient = Bimodule(bim.left_algebra, bim.right_algebra, group.dim, left, right,
                            name=f"H^{k}({self.module.name})")
        return EquivariantBimodule(self.action, quotient, h_ops, index=self.module.index, name=quotient.name)

    def cohomology_dims(self) -> Dict[int, int]:
        return {k: self._subquotient(k).dim for k in self.support()}

    def concentrated(self) -> Optional[int]:
        """The single degree with nonzero cohomology, or None."""
        nonzero = [k for k, d in self.cohomology_dims().items() if d]
        return nonzero[0] if len(nonzero) == 1 else None

    def shifted(self, shift: int) -> List[int]:
        """Degrees of D[shift]."""
        return [d - shift for d in self.degrees]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "algebra": self.algebra.name,
            "hopf": self.hopf.name,
            "dim": self.dim,
            "components": {str(k): len(self.component(k)) for k in self.support()},
            "cohomology": {str(k): d for k, d in self.cohomology_dims().items()},
            "report": self.report.to_dict(),
        }
        if self.generators is not None:
            data["generators"] = [{"label": label, "degree": degree} for label, degree in self.generators]
        return data


def hereditary_inverse_dualising(Q: Quiver, field: Optional[Field] = None,
                                 action: Optional[QuiverAction] = None) -> DualisingComplex:
    """D_A for A = kQ with Q acyclic, as the dual of the standard two-term resolution.

    δ sends (x, y) in the summand of v to Σ_{t(a)=v} (a x, y) - Σ_{s(a)=v} (x, y a)
    in the summands of the arrows. With an action, g⇀(x, y) = (g x, g y) in
    the summand g moves to; without one, the trivial Hopf algebra acts.

    Raises:
        CyclicQuiverError: Q has an oriented cycle, so kQ is infinite-dimensional
        CompletionError: the action is over another quiver, or no field is given
    """
    if not Q.is_acyclic:
        raise CyclicQuiverError(f"{Q.name} has an oriented cycle")
    if action is not None:
        if action.quiver is not Q:
            raise CompletionError(f"{action.name} acts on {action.quiver.name}, not on {Q.name}")
        A, paths = action.algebra, action.paths
        module_action = action.module_algebra_action()
    else:
        if field is None:
            raise CompletionError("A ground field is needed when no action is given")
        bound = path_bound(Q)
        A, paths = path_algebra(Q, field, bound), Q.paths(bound)
        module_action = ModuleAlgebraAction.trivial(trivial_hopf(field), A)
    F = A.field
    one = F.one
    H = module_action.hopf
    index = {p: i for i, p in enumerate(paths)}
    nv, na = len(Q.vertices), len(Q.arrows)
    starting = [[i for i, p in enumerate(paths) if p[0] == v] for v in range(nv)]
    ending = [[i for i, p in enumerate(paths) if Q.path_end(p) == v] for v in range(nv)]
    arrow_path = [index[(Q.source(a), (a,))] for a in range(na)]

    # summand s < nv is the vertex s, summand nv + a is the arrow a
    ends = [(v, v) for v in range(nv)] + [(Q.source(a), Q.target(a)) for a in range(na)]
    generators = [(f"t{Q.vertices[v]}", 0) for v in range(nv)] + [(f"{a.name}*", 1) for a in Q.arrows]
    basis: List[Tuple[int, int, int]] = [(s, x, y) for s, (u, w) in enumerate(ends)
                                         for x in starting[u] for y in ending[w]]
    position = {b: k for k, b in enumerate(basis)}
    degrees = [0 if s < nv else 1 for s, _, _ in basis]
    labels = [f"{generators[s][0]}[{A.labels[x]}|{A.labels[y]}]" for s, x, y in basis]

    def left(i: int, k: int) -> Vec:
        s, x, y = basis[k]
        return {position[(s, x, r)]: c for r, c in A.basis_product(i, y).items()}

    def right(j: int, k: int) -> Vec:
        s, x, y = basis[k]
        return {position[(s, r, y)]: c for r, c in A.basis_product(x, j).items()}

    bimodule = Bimodule.from_functions(A, A, len(basis), left, right, name=f"D_{A.name}", labels=labels)

    def delta(k: int) -> Vec:
        s, x, y = basis[k]
        out: Vec = {}
        if s >= nv:
            return out
        for a in range(na):
            if Q.target(a) == s:
                for r, c in A.basis_product(arrow_path[a], x).items():
                    vec_axpy(out, c, {position[(nv + a, r, y)]: one})
            if Q.source(a) == s:
                for r, c in A.basis_product(y, arrow_path[a]).items():
                    vec_axpy(out, -c, {position[(nv + a, x, r)]: one})
        return out

    differential = LinearMap.from_function(F, len(basis), len(basis), delta)

    if action is not None:
        def moved(g: int, k: int) -> Vec:
            s, x, y = basis[k]
            t = action.act_vertex(g, s) if s < nv else nv + action.act_arrow(g, s - nv)
            gx = index[action.act_path(g, paths[x])]
            gy = index[action.act_path(g, paths[y])]
            return {position[(t, gx, gy)]: one}

        h_ops = [LinearMap.from_function(F, len(basis), len(basis), lambda k, g=g: moved(g, k))
                 for g in range(H.dim)]
    else:
        h_ops = [LinearMap.identity(F, len(basis))]
    module = EquivariantBimodule(module_action, bimodule, h_ops, index=1, name=bimodule.name)

    report = CheckReport(f"inverse dualising complex of {A.name}")
    report.extend(module.check(), prefix="D ")
    report.sweep("δ is a bimodule map", ((i,) for i in range(A.dim)),
                 lambda i: differential.compose(bimodule.left[i]) == bimodule.left[i].compose(differential)
                 and differential.compose(bimodule.right[i]) == bimodule.right[i].compose(differential))
    report.sweep("δ commutes with H", ((h,) for h in range(H.dim)),
                 lambda h: differential.compose(h_ops[h]) == h_ops[h].compose(differential))
    right_ideal = [A.left_mult(A.e(v)).rank() for v in range(nv)]
    left_ideal = [A.right_mult(A.e(v)).rank() for v in range(nv)]
    report.sweep("summand dimensions dim e_u A · dim A e_w", ((s,) for s in range(len(ends))),
                 lambda s: sum(1 for b in basis if b[0] == s) == right_ideal[ends[s][0]] * left_ideal[ends[s][1]])
    euler = sum(left_ideal[v] * right_ideal[v] for v in range(nv))
    euler -= sum(left_ideal[Q.source(a)] * right_ideal[Q.target(a)] for a in range(na))
    report.record("standard resolution Euler characteristic", euler == A.dim, detail=f"{euler} vs dim A = {A.dim}")

    complex_ = DualisingComplex(module, degrees, differential, report, quiver=Q, generators=generators,
                                cells=basis)
    logger.info(f"{A.name}: D_A with {nv} + {na} free summands, dimension {len(basis)}, "
                f"cohomology {complex_.cohomology_dims()}")
    return complex_


def dualising_from_ext(ladder: ExtLadder, degree: Optional[int] = None) -> DualisingComplex:
    """D_A as the single Ext rung in ``degree`` with zero differential.

    This is quasi-isomorphic to RHom_{A^e}(A, A^e) when Ext is concentrated
    in that degree; it serves the tensor algebra as a graded bimodule.

    Raises:
        CompletionError: no degree is given and Ext is not concentrated in one degree
    """
    if degree is None:
        degree = ladder.concentrated()
        if degree is None:
            raise CompletionError(f"Ext of {ladder.algebra.name} is not concentrated in one degree: {ladder.dims}")
    module = ladder.rung(degree)
    report = CheckReport(f"Ext^{degree} of {ladder.algebra.name} as a dualising complex")
    for n, rung_report in enumerate(ladder.reports):
        report.extend(rung_report, prefix=f"Ext^{n} ")
    report.record("Ext concentrated", ladder.concentrated() == degree, detail=f"dims {ladder.dims}")
    return DualisingComplex(module, [degree] * module.dim, LinearMap.zero(module.field, module.dim, module.dim),
                            report)
