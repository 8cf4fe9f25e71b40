"""Quivers, their path algebras and quiver automorphism actions of group algebras."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from sympy import Matrix, zeros

from ..core.algebra import FinDimAlgebra
from ..core.field import Field
from ..core.linalg import LinearMap, Vec
from ..hopf.hopf import HopfAlgebra
from ..smash.action import ModuleAlgebraAction
from . import config
from .exceptions import CompletionError

Path = Tuple[int, Tuple[int, ...]]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    """An arrow ``name: source -> target`` carrying a cohomological degree."""
    name: str
    source: str
    target: str
    degree: int = 0


ArrowLike = Union[Arrow, Sequence[Any]]


class Quiver:
    """A finite quiver kept as a networkx MultiDiGraph keyed by arrow name.

    Paths are read left to right: ``(v, (a₁, …, a_k))`` starts at v and
    needs t(a_i) = s(a_{i+1}); the trivial path at v is ``(v, ())``.
    Vertices and arrows are addressed by their position in declaration order.

    Raises:
        CompletionError: duplicate names or an arrow with an unknown endpoint
    """

    def __init__(self, vertices: Sequence[Any], arrows: Iterable[ArrowLike] = (), name: str = ""):
        self.vertices: List[str] = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise CompletionError("Duplicate vertex names")
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.arrows: List[Arrow] = []
        for a in arrows:
            if not isinstance(a, Arrow):
                if len(a) not in (3, 4):
                    raise CompletionError(f"Arrow {a!r} is not (name, source, target[, degree])")
                a = Arrow(str(a[0]), str(a[1]), str(a[2]), int(a[3]) if len(a) == 4 else 0)
            if a.source not in self._vertex_index or a.target not in self._vertex_index:
                raise CompletionError(f"Arrow {a.name} joins unknown vertices {a.source} -> {a.target}")
            self.arrows.append(a)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise CompletionError("Duplicate arrow names")
        self._arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        self.graph = nx.MultiDiGraph()
        self.graph.add_nodes_from(self.vertices)
        for a in self.arrows:
            self.graph.add_edge(a.source, a.target, key=a.name, degree=a.degree)
        self.name = name or "Q"
        self._outgoing = [[k for k, a in enumerate(self.arrows) if a.source == v] for v in self.vertices]

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Quiver":
        """``{"vertices": [...], "arrows": [[name, source, target], ...], "name": ...}``."""
        return cls(data.get("vertices", []), data.get("arrows", []), name=str(data.get("name", "")))

    # --- vertices and arrows ------------------------------------------------

    def vertex_index(self, v: Any) -> int:
        try:
            return self._vertex_index[str(v)]
        except KeyError:
            raise CompletionError(f"{self.name} has no vertex {v}") from None

    def arrow_index(self, name: Any) -> int:
        try:
            return self._arrow_index[str(name)]
        except KeyError:
            raise CompletionError(f"{self.name} has no arrow {name}") from None

    def source(self, a: int) -> int:
        return self._vertex_index[self.arrows[a].source]

    def target(self, a: int) -> int:
        return self._vertex_index[self.arrows[a].target]

    @property
    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph)

    def longest_path_length(self) -> Optional[int]:
        """Length of a longest path, None when Q has an oriented cycle."""
        return nx.dag_longest_path_length(self.graph) if self.is_acyclic else None

    def adjacency(self, arrows: Optional[Sequence[int]] = None) -> Matrix:
        """Entry (u, v) counts the chosen arrows u -> v."""
        n = len(self.vertices)
        M = zeros(n, n)
        for a in (range(len(self.arrows)) if arrows is None else arrows):
            M[self.source(a), self.target(a)] += 1
        return M

    # --- paths ----------------------------------------------------------------

    def path_end(self, p: Path) -> int:
        start, arrows = p
        return self.target(arrows[-1]) if arrows else start

    def compose(self, p: Path, q: Path) -> Optional[Path]:
        """p followed by q, None when they do not meet."""
        if self.path_end(p) != q[0]:
            return None
        return (p[0], p[1] + q[1])

    def path_degree(self, p: Path) -> int:
        return sum(self.arrows[a].degree for a in p[1])

    def path_label(self, p: Path) -> str:
        start, arrows = p
        if not arrows:
            return f"e{self.vertices[start]}"
        names = [self.arrows[a].name for a in arrows]
        return "".join(names) if all(len(n) == 1 for n in names) else "·".join(names)

    def paths(self, max_length: int) -> List[Path]:
        """Paths of length ≤ max_length ordered by length, then start vertex, then arrows."""
        level: List[Path] = [(v, ()) for v in range(len(self.vertices))]
        out = list(level)
        for _ in range(max_length):
            level = [(start, arrows + (a,)) for start, arrows in level
                     for a in self._outgoing[self.path_end((start, arrows))]]
            if not level:
                break
            out.extend(level)
        return out

    # --- derived quivers ------------------------------------------------------

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source, a.degree) for a in self.arrows],
                      name=f"{self.name}^op")

    def double(self) -> "Quiver":
        """Q together with a reversed arrow a* for every arrow a."""
        reversed_arrows = [Arrow(f"{a.name}*", a.target, a.source, a.degree) for a in self.arrows]
        return Quiver(self.vertices, self.arrows + reversed_arrows, name=f"double({self.name})")

    def disjoint_union(self, other: "Quiver") -> "Quiver":
        """Q ⊔ Q' with the vertices and arrows of the second copy primed."""
        vertices = self.vertices + [f"{v}'" for v in other.vertices]
        arrows = self.arrows + [Arrow(f"{a.name}'", f"{a.source}'", f"{a.target}'", a.degree) for a in other.arrows]
        return Quiver(vertices, arrows, name=f"{self.name}⊔{other.name}")

    def is_automorphism(self, vertex_perm: Sequence[int], arrow_perm: Sequence[int]) -> bool:
        """Both maps are bijections and every arrow keeps its endpoints and degree."""
        if sorted(vertex_perm) != list(range(len(self.vertices))):
            return False
        if sorted(arrow_perm) != list(range(len(self.arrows))):
            return False
        for a, b in enumerate(arrow_perm):
            if self.source(b) != vertex_perm[self.source(a)] or self.target(b) != vertex_perm[self.target(a)]:
                return False
            if self.arrows[b].degree != self.arrows[a].degree:
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [[a.name, a.source, a.target] + ([a.degree] if a.degree else []) for a in self.arrows],
            "acyclic": self.is_acyclic,
        }

    def __repr__(self) -> str:
        return f"Quiver({self.name}, vertices={len(self.vertices)}, arrows={len(self.arrows)})"


def path_bound(Q: Quiver, length_bound: Optional[int] = None) -> int:
    """The path length kept for kQ: the longest path when Q is acyclic, the configured bound otherwise."""
    if length_bound is not None:
        return length_bound
    longest = Q.longest_path_length()
    return longest if longest is not None else config.PATH_LENGTH_BOUND


def path_algebra(Q: Quiver, field: Field, length_bound: Optional[int] = None) -> FinDimAlgebra:
    """kQ on the paths of length ≤ the bound, graded by length, with basis ``Q.paths(bound)``.

    The trivial paths come first, so e_v has index v. The algebra is exact
    when Q is acyclic and the bound reaches its longest path; otherwise
    longer products are cut off and recorded as overflow.
    """
    bound = path_bound(Q, length_bound)
    one = field.one
    paths = Q.paths(bound)
    index = {p: i for i, p in enumerate(paths)}
    mul: Dict[Tuple[int, int], Vec] = {}
    overflow: List[Tuple[int, int]] = []
    for i, p in enumerate(paths):
        for j, q in enumerate(paths):
            r = Q.compose(p, q)
            if r is None:
                continue
            if r in index:
                mul[(i, j)] = {index[r]: one}
            else:
                overflow.append((i, j))
    longest = Q.longest_path_length()
    exact = longest is not None and bound >= longest
    generators = [{i: one} for i, p in enumerate(paths) if len(p[1]) <= 1]
    algebra = FinDimAlgebra(field, [Q.path_label(p) for p in paths], mul, {v: one for v in range(len(Q.vertices))},
                            degrees=[len(p[1]) for p in paths], truncation=None if exact else bound,
                            overflow=overflow, name=f"k{Q.name}" if exact else f"k{Q.name}≤{bound}",
                            generators=generators)
    if not exact:
        logger.info(f"{algebra.name}: path algebra truncated at length {bound}, {len(overflow)} products cut off")
    return algebra


class QuiverAction:
    """A group algebra kG acting on kQ through quiver automorphisms.

    Maps are given by name on some group elements (by their index in H)
    and closed up along the group table; ``vertex_perms[g]`` and
    ``arrow_perms[g]`` are the resulting permutations by index.

    Raises:
        CompletionError: H is not a group algebra, a map is not a quiver
            automorphism, or the maps do not form a group action
    """

    def __init__(self, hopf: HopfAlgebra, quiver: Quiver, vertex_maps: Mapping[int, Mapping[str, str]],
                 arrow_maps: Mapping[int, Mapping[str, str]], length_bound: Optional[int] = None, name: str = ""):
        if hopf.group_table is None:
            raise CompletionError(f"{hopf.name} is not a group algebra")
        Q = quiver
        self.hopf = hopf
        self.quiver = Q
        self.field = hopf.field
        self.name = name or f"{hopf.name}⇀k{Q.name}"
        self.logger = logging.getLogger(f"smashcalc.cycompletion.{self.__class__.__name__.lower()}")
        given: Dict[int, Tuple[List[int], List[int]]] = {}
        for g in sorted(set(vertex_maps) | set(arrow_maps)):
            if not 0 <= g < hopf.dim:
                raise CompletionError(f"{hopf.name} has no element with index {g}")
            vmap = {str(k): str(v) for k, v in vertex_maps.get(g, {}).items()}
            amap = {str(k): str(v) for k, v in arrow_maps.get(g, {}).items()}
            vperm = [Q.vertex_index(vmap.get(v, v)) for v in Q.vertices]
            aperm = [Q.arrow_index(amap.get(a.name, a.name)) for a in Q.arrows]
            if not Q.is_automorphism(vperm, aperm):
                raise CompletionError(f"The maps given for {hopf.labels[g]} are not an automorphism of {Q.name}")
            given[g] = (vperm, aperm)

        def after(first: Tuple[List[int], List[int]], second: Tuple[List[int], List[int]]):
            return [first[0][v] for v in second[0]], [first[1][a] for a in second[1]]

        table = hopf.group_table
        perms = {0: (list(range(len(Q.vertices))), list(range(len(Q.arrows))))}
        perms.update(given)
        frontier = list(perms)
        while frontier:
            nxt = []
            for g in frontier:
                for s, image in given.items():
                    product = table[g][s]
                    if product not in perms:
                        perms[product] = after(perms[g], image)
                        nxt.append(product)
            frontier = nxt
        if len(perms) != hopf.dim:
            raise CompletionError(f"Maps on {sorted(given)} do not generate all of {hopf.name}")
        for g in range(hopf.dim):
            for h in range(hopf.dim):
                if perms[table[g][h]] != after(perms[g], perms[h]):
                    raise CompletionError(f"The maps do not respect {hopf.labels[g]}·{hopf.labels[h]}")
        self.vertex_perms = [perms[g][0] for g in range(hopf.dim)]
        self.arrow_perms = [perms[g][1] for g in range(hopf.dim)]
        self.bound = path_bound(Q, length_bound)
        self.algebra = path_algebra(Q, self.field, self.bound)
        self.paths = Q.paths(self.bound)
        self._index = {p: i for i, p in enumerate(self.paths)}
        self._action: Optional[ModuleAlgebraAction] = None

    @classmethod
    def trivial(cls, hopf: HopfAlgebra, quiver: Quiver, **kwargs) -> "QuiverAction":
        """Every group element fixes Q."""
        return cls(hopf, quiver, {g: {} for g in range(hopf.dim)}, {}, **kwargs)

    @classmethod
    def swap(cls, hopf: HopfAlgebra, quiver: Quiver, **kwargs) -> "QuiverAction":
        """kC₂ exchanging the two copies of Q ⊔ Q.

        Raises:
            CompletionError: H is not the group algebra of a group of order 2
        """
        if hopf.group_table is None or hopf.dim != 2:
            raise CompletionError(f"{hopf.name} is not the group algebra of C2")
        union = quiver.disjoint_union(quiver)
        vmap: Dict[str, str] = {}
        for v in quiver.vertices:
            vmap[v], vmap[f"{v}'"] = f"{v}'", v
        amap: Dict[str, str] = {}
        for a in quiver.arrows:
            amap[a.name], amap[f"{a.name}'"] = f"{a.name}'", a.name
        return cls(hopf, union, {1: vmap}, {1: amap}, **kwargs)

    def act_vertex(self, g: int, v: int) -> int:
        return self.vertex_perms[g][v]

    def act_arrow(self, g: int, a: int) -> int:
        return self.arrow_perms[g][a]

    def act_path(self, g: int, p: Path) -> Path:
        start, arrows = p
        return (self.vertex_perms[g][start], tuple(self.arrow_perms[g][a] for a in arrows))

    def path_index(self, p: Path) -> int:
        return self._index[p]

    def module_algebra_action(self) -> ModuleAlgebraAction:
        """The induced action on kQ, one permutation matrix per group element, built once."""
        if self._action is not None:
            return self._action
        F = self.field
        ops = [LinearMap(F, len(self.paths), len(self.paths),
                         [{self._index[self.act_path(g, p)]: F.one} for p in self.paths])
               for g in range(self.hopf.dim)]
        self._action = ModuleAlgebraAction(self.hopf, self.algebra, ops, name=self.name)
        return self._action

    def to_dict(self) -> Dict[str, Any]:
        H, Q = self.hopf, self.quiver
        return {
            "hopf": H.name,
            "quiver": Q.to_dict(),
            "vertices": {H.labels[g]: [Q.vertices[v] for v in perm] for g, perm in enumerate(self.vertex_perms)},
            "arrows": {H.labels[g]: [Q.arrows[a].name for a in perm] for g, perm in enumerate(self.arrow_perms)},
        }

    def __repr__(self) -> str:
        return f"QuiverAction({self.name})"
