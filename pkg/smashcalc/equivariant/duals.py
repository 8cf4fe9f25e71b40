"""One-sided duals Hom_A(D, A) and Hom_{A^op}(D, A) and their H-actions."""

from __future__ import annotations

import logging
from typing import Callable, List, Optional

from ..core.linalg import LinearMap, Subspace, Vec
from ..core.modules import Bimodule, hom_space
from .bimodule import EquivariantBimodule
from .exceptions import EquivariantError

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"


def _flatten(f: LinearMap) -> Vec:
    """Entries of f at index r * source_dim + c."""
    m = f.source_dim
    return {r * m + c: x for c, col in enumerate(f.cols) for r, x in col.items()}


class DualBimodule:
    """The A-bimodule of one-sided A-linear maps M -> A for an A-bimodule M.

    side="left": left A-linear f, with (a f b)(m) = f(m a) b.
    side="right": right A-linear f, with (a f b)(m) = a f(b m).

    ``maps[k]`` is the k-th basis map; elements are coordinates in that basis.
    """

    def __init__(self, source: Bimodule, side: str = LEFT):
        if side not in (LEFT, RIGHT):
            raise EquivariantError(f"Unknown dual side {side!r}")
        A = source.left_algebra
        self.source = source
        self.side = side
        self.algebra = A
        self.field = source.field
        gens = A.generators()
        if side == LEFT:
            src = [source.left_operator(g) for g in gens]
            tgt = [A.left_mult(g) for g in gens]
        else:
            src = [source.right_operator(g) for g in gens]
            tgt = [A.right_mult(g) for g in gens]
        solutions = hom_space(self.field, src, tgt, source.dim, A.dim)
        self._space = Subspace(self.field, source.dim * A.dim, [_flatten(f) for f in solutions])
        # the rref rows are the basis, so maps[k] has coordinates e_k
        self.maps: List[LinearMap] = [self._unflatten(v) for v in self._space.basis]
        if side == LEFT:
            left = [self.transform(lambda f, a=a: f.compose(source.right[a])) for a in range(A.dim)]
            right = [self.transform(lambda f, b=b: A.right_mult(A.e(b)).compose(f)) for b in range(A.dim)]
            label = "Hom_A"
        else:
            left = [self.transform(lambda f, a=a: A.left_mult(A.e(a)).compose(f)) for a in range(A.dim)]
            right = [self.transform(lambda f, b=b: f.compose(source.left[b])) for b in range(A.dim)]
            label = "Hom_A^op"
        self.bimodule = Bimodule(A, A, len(self.maps), left, right, name=f"{label}({source.name},{A.name})")
        logger.debug(f"{self.bimodule.name} has dimension {self.bimodule.dim}")

    @property
    def dim(self) -> int:
        return len(self.maps)

    def _unflatten(self, v: Vec) -> LinearMap:
        m = self.source.dim
        cols: List[Vec] = [dict() for _ in range(m)]
        for idx, x in v.items():
            r, c = divmod(idx, m)
            cols[c][r] = x
        return LinearMap(self.field, m, self.algebra.dim, cols)

    def coordinates(self, f: LinearMap) -> Vec:
        """Coordinates of an A-linear map in the basis ``maps``."""
        return self._space.coordinates(_flatten(f))

    def as_map(self, coords: Vec) -> LinearMap:
        return self._unflatten(self._space.from_coordinates(coords))

    def transform(self, t: Callable[[LinearMap], LinearMap]) -> LinearMap:
        """Matrix of f -> t(f) on the dual."""
        return LinearMap(self.field, self.dim, self.dim, [self.coordinates(t(f)) for f in self.maps])

    def evaluate(self, coords: Vec, m: Vec) -> Vec:
        return self.as_map(coords)(m)


def equivariant_dual(D: EquivariantBimodule, side: str = LEFT) -> "EquivariantDual":
    """Hom_A(D, A) or Hom_{A^op}(D, A) with its H-action, equivariant of index -i.

    left:  (h⇀f)(d) = S^{-2i}(h_2)⇀f(S^{-1-2i}(h_1)⇀d)
    right: (h⇀f)(d) = h_1⇀f(S^{1-2i}(h_2)⇀d)

    Raises:
        NotInvertibleError: the antipode is singular
    """
    return EquivariantDual(D, side)


class EquivariantDual(EquivariantBimodule):
    """A one-sided dual carrying the induced H-action."""

    def __init__(self, D: EquivariantBimodule, side: str = LEFT):
        dual = DualBimodule(D.bimodule, side)
        H = D.hopf
        i = D.index
        act_A = D.action.operator
        if side == LEFT:
            outer, inner = H.antipode_power(-2 * i), H.antipode_power(-1 - 2 * i)
        else:
            outer, inner = LinearMap.identity(H.field, H.dim), H.antipode_power(1 - 2 * i)

        def h_map(h: int, f: LinearMap) -> LinearMap:
            out: Optional[LinearMap] = None
            for (h1, h2), c in H.comul[h].items():
                if side == LEFT:
                    term = act_A(outer.cols[h2]).compose(f).compose(D.h_operator(inner.cols[h1]))
                else:
                    term = act_A(outer.cols[h1]).compose(f).compose(D.h_operator(inner.cols[h2]))
                term = term.scale(c)
                out = term if out is None else out + term
            return out if out is not None else LinearMap.zero(H.field, D.dim, D.algebra.dim)

        ops = [dual.transform(lambda f, h=h: h_map(h, f)) for h in range(H.dim)]
        self.dual = dual
        self.source = D
        self.side = side
        super().__init__(D.action, dual.bimodule, ops, index=-i, name=dual.bimodule.name)


def double_dual_evaluation(D: EquivariantBimodule) -> LinearMap:
    """d -> (f -> f(d)), from D into Hom_{A^op}(Hom_A(D, A), A)."""
    first = DualBimodule(D.bimodule, LEFT)
    second = DualBimodule(first.bimodule, RIGHT)
    A = D.algebra
    cols = []
    for d in range(D.dim):
        ev = LinearMap(D.field, first.dim, A.dim, [f.cols[d] for f in first.maps])
        cols.append(second.coordinates(ev))
    return LinearMap(D.field, D.dim, second.dim, cols)
