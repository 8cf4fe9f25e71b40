"""Ginzburg dg algebras Γ_n(Q, W) on the graded quiver Q̃, computed on bounded paths.

Q̃ has the arrows a of Q in degree 0, a reversed arrow a* in degree 2-n for
each of them and a loop t_v in degree 1-n at each vertex. The differential
vanishes on a and is

    ∂a* = ∂_a W           (n = 3)
    ∂t_v = e_v (Σ_a a a* - a* a) e_v (+ e_v W e_v when n = 2)

extended by ∂(xy) = ∂x·y + (-1)^{|x|} x·∂y. Elements are dicts from paths
of Q̃ to coefficients; paths are read left to right as in ``Quiver``.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.field import Field, Scalar
from ..core.linalg import Subspace
from ..core.report import CheckReport
from . import config
from .exceptions import CompletionError
from .quiver import Arrow, Path, Quiver

Element = Dict[Path, Scalar]


def _add(acc: Element, c: Scalar, x: Mapping[Path, Scalar]) -> Element:
    for p, v in x.items():
        total = acc.get(p, 0) + c * v
        if total:
            acc[p] = total
        else:
            acc.pop(p, None)
    return acc


class GinzburgAlgebra:
    """Γ_n(Q, W) through paths of length ≤ ``length``.

    ``potential`` maps cycles of Q, given as tuples of arrow names, to
    coefficients. A potential is only used for n = 2 and n = 3.

    Raises:
        CompletionError: a potential term is not a cycle of Q, or W ≠ 0 with n ∉ {2, 3}
    """

    def __init__(self, quiver: Quiver, field: Field, potential: Optional[Mapping[Sequence[str], Any]] = None,
                 n: int = 3, length: Optional[int] = None):
        self.quiver = quiver
        self.field = field
        self.n = n
        self.length = config.PATH_LENGTH_BOUND if length is None else length
        self.logger = logging.getLogger(f"smashcalc.cycompletion.{self.__class__.__name__.lower()}")
        Q = quiver
        na = len(Q.arrows)
        self.potential: List[Tuple[Tuple[int, ...], Scalar]] = []
        for cycle, coeff in (potential or {}).items():
            arrows = tuple(Q.arrow_index(a) for a in ((cycle,) if isinstance(cycle, str) else cycle))
            if not arrows:
                raise CompletionError("A potential term must contain at least one arrow")
            for first, second in zip(arrows, arrows[1:] + arrows[:1]):
                if Q.target(first) != Q.source(second):
                    raise CompletionError(f"{'·'.join(Q.arrows[a].name for a in arrows)} is not a cycle of {Q.name}")
            value = field.element(coeff)
            if value:
                self.potential.append((arrows, value))
        if self.potential and n not in (2, 3):
            raise CompletionError(f"A potential enters the Ginzburg algebra only for n = 2 or 3, not n = {n}")

        starred = [Arrow(f"{a.name}*", a.target, a.source, 2 - n) for a in Q.arrows]
        loops = [Arrow(f"t{v}", v, v, 1 - n) for v in Q.vertices]
        self.graded = Quiver(Q.vertices, list(Q.arrows) + starred + loops, name=f"{Q.name}~")
        self.star = [na + a for a in range(na)]
        self.loop = [2 * na + v for v in range(len(Q.vertices))]
        self.name = f"Γ_{n}({Q.name})"
        self.weights = self._weights()
        self.boundary: List[Element] = [self._arrow_boundary(b) for b in range(len(self.graded.arrows))]

    # --- elements ------------------------------------------------------------------

    def path(self, names: Sequence[str], start: Optional[str] = None) -> Path:
        """The path of Q̃ through the named arrows, or the trivial path at ``start``."""
        G = self.graded
        arrows = tuple(G.arrow_index(a) for a in names)
        if not arrows:
            if start is None:
                raise CompletionError("A trivial path needs its vertex")
            return (G.vertex_index(start), ())
        p = (G.source(arrows[0]), arrows)
        for first, second in zip(arrows, arrows[1:]):
            if G.target(first) != G.source(second):
                raise CompletionError(f"{'·'.join(names)} is not a path of {G.name}")
        return p

    def degree(self, p: Path) -> int:
        return self.graded.path_degree(p)

    def weight(self, p: Path) -> Optional[int]:
        if self.weights is None:
            return None
        return sum(self.weights[a] for a in p[1])

    def multiply(self, x: Mapping[Path, Scalar], y: Mapping[Path, Scalar]) -> Element:
        out: Element = {}
        for p, a in x.items():
            for q, b in y.items():
                r = self.graded.compose(p, q)
                if r is not None:
                    _add(out, a * b, {r: self.field.one})
        return out

    def format(self, x: Mapping[Path, Scalar]) -> str:
        if not x:
            return "0"
        return " + ".join(f"{self.field.format(c)}·{self.graded.path_label(p)}" for p, c in sorted(x.items()))

    # --- the differential ----------------------------------------------------------

    def cyclic_derivative(self, a: int) -> Element:
        """∂_a W: every rotation of a term of W that starts with a, with a removed."""
        out: Element = {}
        for cycle, coeff in self.potential:
            for i, b in enumerate(cycle):
                if b != a:
                    continue
                rest = cycle[i + 1:] + cycle[:i]
                start = self.quiver.target(a)
                _add(out, coeff, {(start, rest): self.field.one})
        return out

    def _potential_at(self, v: int) -> Element:
        """e_v W e_v."""
        out: Element = {}
        for cycle, coeff in self.potential:
            if self.quiver.source(cycle[0]) == v:
                _add(out, coeff, {(v, cycle): self.field.one})
        return out

    def _arrow_boundary(self, b: int) -> Element:
        Q = self.quiver
        na = len(Q.arrows)
        one = self.field.one
        if b < na:
            return {}
        if b < 2 * na:
            return self.cyclic_derivative(b - na) if self.n == 3 else {}
        v = b - 2 * na
        out: Element = {}
        for a in range(na):
            if Q.source(a) == v:
                _add(out, one, {(v, (a, na + a)): one})
            if Q.target(a) == v:
                _add(out, -one, {(v, (na + a, a)): one})
        if self.n == 2:
            _add(out, one, self._potential_at(v))
        return out

    def differential(self, p: Path) -> Element:
        """∂ of a path by the Leibniz rule."""
        G = self.graded
        start, arrows = p
        out: Element = {}
        sign_degree = 0
        for i, b in enumerate(arrows):
            image = self.boundary[b]
            if image:
                before = (start, arrows[:i])
                after = (G.target(b), arrows[i + 1:])
                sign = self.field.one if sign_degree % 2 == 0 else -self.field.one
                _add(out, sign, self.multiply(self.multiply({before: self.field.one}, image), {after: self.field.one}))
            sign_degree += G.arrows[b].degree
        return out

    def apply(self, x: Mapping[Path, Scalar]) -> Element:
        out: Element = {}
        for p, c in x.items():
            _add(out, c, self.differential(p))
        return out

    # --- gradings and checks -------------------------------------------------------

    def _weights(self) -> Optional[List[int]]:
        """Arrow weights making ∂ homogeneous: 1 on arrows of Q, the potential length fixing the rest."""
        lengths = {len(cycle) for cycle, _ in self.potential}
        if len(lengths) > 1:
            return None
        na = len(self.quiver.arrows)
        d = lengths.pop() if lengths else 2
        if self.n == 3:
            star, loop = d - 1, d
        elif self.n == 2:
            if d != 2:
                return None
            star, loop = 1, 2
        else:
            star, loop = 1, 2
        return [1] * na + [star] * na + [loop] * len(self.quiver.vertices)

    def paths(self) -> List[Path]:
        return self.graded.paths(self.length)

    def check(self) -> CheckReport:
        """∂ raises degree by one, keeps endpoints and weights, and ∂² = 0 on every path up to the bound."""
        report = CheckReport(f"Ginzburg algebra {self.name}")
        G = self.graded
        paths = self.paths()
        report.sweep("∂ has degree one", ((p,) for p in paths),
                     lambda p: all(self.degree(q) == self.degree(p) + 1 for q in self.differential(p)))
        report.sweep("∂ keeps endpoints", ((p,) for p in paths),
                     lambda p: all(q[0] == p[0] and G.path_end(q) == G.path_end(p) for q in self.differential(p)))
        if self.weights is not None:
            report.sweep("∂ keeps weights", ((p,) for p in paths),
                         lambda p: all(self.weight(q) == self.weight(p) for q in self.differential(p)))
        report.sweep("∂² = 0", ((p,) for p in paths), lambda p: not self.apply(self.differential(p)))
        self.logger.info(f"{self.name}: ∂² = 0 checked on {len(paths)} paths of length ≤ {self.length}")
        return report

    def degree_zero_dims(self, max_weight: int) -> Optional[List[int]]:
        """dim H^0 in weights 0..max_weight: degree-0 paths modulo ∂ of degree -1 paths.

        None when no weight grading makes ∂ homogeneous. The path bound is
        raised to ``max_weight`` for this computation.
        """
        if self.weights is None:
            return None
        G = self.graded
        F = self.field
        by_weight: Dict[Tuple[int, int], List[Path]] = {}
        for p in G.paths(max_weight):
            w = self.weight(p)
            if w <= max_weight:
                by_weight.setdefault((w, self.degree(p)), []).append(p)
        dims = []
        for w in range(max_weight + 1):
            top = by_weight.get((w, 0), [])
            index = {p: i for i, p in enumerate(top)}
            images = []
            for p in by_weight.get((w, -1), []):
                images.append({index[q]: c for q, c in self.differential(p).items()})
            dims.append(len(top) - Subspace(F, len(top), images).dim)
        return dims

    def to_dict(self) -> Dict[str, Any]:
        G = self.graded
        return {
            "name": self.name,
            "n": self.n,
            "quiver": G.to_dict(),
            "potential": [{"cycle": [self.quiver.arrows[a].name for a in cycle], "coefficient": self.field.format(c)}
                          for cycle, c in self.potential],
            "boundary": {G.arrows[b].name: self.format(x) for b, x in enumerate(self.boundary) if x},
            "length": self.length,
        }

    def __repr__(self) -> str:
        return f"GinzburgAlgebra({self.name}, arrows={len(self.graded.arrows)})"
