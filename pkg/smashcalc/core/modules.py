"""Modules and bimodules over finite-dimensional algebras."""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Mapping, Optional, Sequence

from .algebra import AlgebraMorphism, FinDimAlgebra
from .exceptions import ShapeMismatchError
from .field import Scalar
from .linalg import (
    LinearMap,
    Subspace,
    Vec,
    find_invertible_combination,
    matrix_from_rows,
    nullspace,
    vec_axpy,
)
from .report import CheckReport

logger = logging.getLogger(__name__)


def _hom_constraints(source_ops: Sequence[LinearMap], target_ops: Sequence[LinearMap],
                     m: int, n: int) -> List[Vec]:
    """Rows of f·S - T·f = 0 for an unknown n x m matrix f (variable r*m + c)."""
    rows: List[Vec] = []
    for S, T in zip(source_ops, target_ops):
        for c in range(m):
            per_row: Dict[int, Vec] = {}
            for k, s in S.cols[c].items():
                for r in range(n):
                    vec_axpy(per_row.setdefault(r, {}), s, {r * m + k: 1})
            for k, col in enumerate(T.cols):
                for r, t in col.items():
                    vec_axpy(per_row.setdefault(r, {}), -t, {k * m + c: 1})
            rows.extend(v for v in per_row.values() if v)
    return rows


def hom_space(field, source_ops: Sequence[LinearMap], target_ops: Sequence[LinearMap],
              m: int, n: int) -> List[LinearMap]:
    """Basis of the linear maps f: k^m -> k^n intertwining each pair of operators."""
    K = field.domain
    rows = _hom_constraints(source_ops, target_ops, m, n)
    rows = [{i: K.convert(x) for i, x in r.items()} for r in rows]
    if not rows:
        solutions = [{v: K.one} for v in range(n * m)]
    else:
        solutions = nullspace(matrix_from_rows(rows, n * m, K))
    maps = []
    for sol in solutions:
        cols: List[Vec] = [dict() for _ in range(m)]
        for v, x in sol.items():
            r, c = divmod(v, m)
            cols[c][r] = x
        maps.append(LinearMap(field, m, n, cols))
    return maps


class LeftModule:
    """A finite-dimensional left module, given by one operator per basis element.

    ``action[i]`` is the matrix of m -> e_i · m.
    """

    def __init__(self, algebra: FinDimAlgebra, dim: int, action: Sequence[LinearMap], name: str = "",
                 labels: Optional[Sequence[str]] = None):
        if len(action) != algebra.dim:
            raise ShapeMismatchError(f"Expected {algebra.dim} action matrices, got {len(action)}")
        for M in action:
            if M.shape != (dim, dim):
                raise ShapeMismatchError(f"Action matrix of shape {M.shape} on a module of dimension {dim}")
        self.algebra = algebra
        self.field = algebra.field
        self.dim = dim
        self.action = list(action)
        self.name = name or f"module({dim})"
        self.labels = list(labels) if labels is not None else [f"m{k}" for k in range(dim)]

    @classmethod
    def regular(cls, algebra: FinDimAlgebra) -> "LeftModule":
        return cls(algebra, algebra.dim, algebra.left_regular(), name=f"{algebra.name}", labels=algebra.labels)

    @classmethod
    def from_function(cls, algebra: FinDimAlgebra, dim: int, act: Callable[[int, int], Mapping[int, Scalar]],
                      name: str = "", labels: Optional[Sequence[str]] = None) -> "LeftModule":
        """Build from act(i, k) = e_i · m_k."""
        ops = [LinearMap(algebra.field, dim, dim, [act(i, k) for k in range(dim)]) for i in range(algebra.dim)]
        return cls(algebra, dim, ops, name=name, labels=labels)

    def operator(self, a: Mapping[int, Scalar]) -> LinearMap:
        cols: List[Vec] = [dict() for _ in range(self.dim)]
        for i, c in a.items():
            for k, col in enumerate(self.action[i].cols):
                vec_axpy(cols[k], c, col)
        return LinearMap(self.field, self.dim, self.dim, cols)

    def act(self, a: Mapping[int, Scalar], m: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for i, c in a.items():
            vec_axpy(out, c, self.action[i](m))
        return out

    def generator_operators(self) -> List[LinearMap]:
        return [self.operator(g) for g in self.algebra.generators()]

    def check(self) -> CheckReport:
        report = CheckReport(f"module {self.name}")
        A = self.algebra
        report.record("unit acts as identity", self.operator(A.unit).is_identity())
        r = range(A.dim)
        report.sweep(
            "action associativity",
            ((i, j) for i in r for j in r if A._safe(i, j)),
            lambda i, j: self.operator(A.basis_product(i, j)) == self.action[i].compose(self.action[j]),
        )
        return report

    def restrict(self, f: AlgebraMorphism) -> "LeftModule":
        """Restriction of scalars along f: B -> A."""
        return LeftModule(f.source, self.dim, [self.operator(c) for c in f.cols],
                          name=f"{self.name}|{f.source.name}", labels=self.labels)

    def submodule(self, vectors: Sequence[Mapping[int, Scalar]]) -> Subspace:
        """Submodule generated by the vectors."""
        space = Subspace(self.field, self.dim, vectors)
        gens = self.generator_operators()
        while True:
            images = [g(v) for g in gens for v in space.basis]
            bigger = Subspace(self.field, self.dim, list(space.basis) + images)
            if bigger.dim == space.dim:
                return space
            space = bigger

    def hom(self, other: "LeftModule") -> List[LinearMap]:
        """Basis of Hom_A(self, other)."""
        if other.algebra is not self.algebra and other.algebra.dim != self.algebra.dim:
            raise ShapeMismatchError("Modules over different algebras")
        return hom_space(self.field, self.generator_operators(), other.generator_operators(), self.dim, other.dim)

    def find_isomorphism(self, other: "LeftModule") -> Optional[LinearMap]:
        if self.dim != other.dim:
            return None
        basis = self.hom(other)
        coeffs = find_invertible_combination(basis)
        if coeffs is None:
            return None
        cols: List[Vec] = [dict() for _ in range(self.dim)]
        for c, f in zip(coeffs, basis):
            for k, col in enumerate(f.cols):
                vec_axpy(cols[k], c, col)
        return LinearMap(self.field, self.dim, other.dim, cols)

    def is_isomorphic(self, other: "LeftModule") -> bool:
        return self.find_isomorphism(other) is not None

    def direct_sum(self, other: "LeftModule") -> "LeftModule":
        n = self.dim
        ops = []
        for P, Q in zip(self.action, other.action):
            cols = [dict(c) for c in P.cols] + [{n + i: x for i, x in c.items()} for c in Q.cols]
            ops.append(LinearMap(self.field, n + other.dim, n + other.dim, cols))
        return LeftModule(self.algebra, n + other.dim, ops, name=f"{self.name}⊕{other.name}",
                          labels=self.labels + other.labels)

    def __repr__(self) -> str:
        return f"LeftModule({self.name}, dim={self.dim})"


class Bimodule:
    """An A-B-bimodule: ``left[i]`` is m -> e_i m and ``right[j]`` is m -> m e_j."""

    def __init__(self, left_algebra: FinDimAlgebra, right_algebra: FinDimAlgebra, dim: int,
                 left: Sequence[LinearMap], right: Sequence[LinearMap], name: str = "",
                 labels: Optional[Sequence[str]] = None):
        if len(left) != left_algebra.dim or len(right) != right_algebra.dim:
            raise ShapeMismatchError("Wrong number of action matrices for the bimodule")
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.field = left_algebra.field
        self.dim = dim
        self.left = list(left)
        self.right = list(right)
        self.name = name or f"bimodule({dim})"
        self.labels = list(labels) if labels is not None else [f"m{k}" for k in range(dim)]

    @classmethod
    def regular(cls, algebra: FinDimAlgebra) -> "Bimodule":
        return cls(algebra, algebra, algebra.dim, algebra.left_regular(), algebra.right_regular(),
                   name=algebra.name, labels=algebra.labels)

    @classmethod
    def twisted(cls, algebra: FinDimAlgebra, mu: LinearMap, name: str = "") -> "Bimodule":
        """A^μ: a · x · b = a x μ(b)."""
        right = [algebra.right_mult(mu.cols[j]) for j in range(algebra.dim)]
        return cls(algebra, algebra, algebra.dim, algebra.left_regular(), right,
                   name=name or f"{algebra.name}^twist", labels=algebra.labels)

    @classmethod
    def from_functions(cls, A: FinDimAlgebra, B: FinDimAlgebra, dim: int,
                       left: Callable[[int, int], Mapping[int, Scalar]],
                       right: Callable[[int, int], Mapping[int, Scalar]], name: str = "",
                       labels: Optional[Sequence[str]] = None) -> "Bimodule":
        """left(i, k) = e_i · m_k and right(j, k) = m_k · e_j."""
        F = A.field
        L = [LinearMap(F, dim, dim, [left(i, k) for k in range(dim)]) for i in range(A.dim)]
        R = [LinearMap(F, dim, dim, [right(j, k) for k in range(dim)]) for j in range(B.dim)]
        return cls(A, B, dim, L, R, name=name, labels=labels)

    def left_operator(self, a: Mapping[int, Scalar]) -> LinearMap:
        return _combine(self.field, self.dim, self.left, a)

    def right_operator(self, b: Mapping[int, Scalar]) -> LinearMap:
        return _combine(self.field, self.dim, self.right, b)

    def act_left(self, a: Mapping[int, Scalar], m: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for i, c in a.items():
            vec_axpy(out, c, self.left[i](m))
        return out

    def act_right(self, m: Mapping[int, Scalar], b: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for j, c in b.items():
            vec_axpy(out, c, self.right[j](m))
        return out

    def check(self) -> CheckReport:
        report = CheckReport(f"bimodule {self.name}")
        A, B = self.left_algebra, self.right_algebra
        report.record("left unit", self.left_operator(A.unit).is_identity())
        report.record("right unit", self.right_operator(B.unit).is_identity())
        ra, rb = range(A.dim), range(B.dim)
        report.sweep("left associativity", ((i, j) for i in ra for j in ra if A._safe(i, j)),
                     lambda i, j: self.left_operator(A.basis_product(i, j)) == self.left[i].compose(self.left[j]))
        report.sweep("right associativity", ((i, j) for i in rb for j in rb if B._safe(i, j)),
                     lambda i, j: self.right_operator(B.basis_product(i, j)) == self.right[j].compose(self.right[i]))
        report.sweep("actions commute", ((i, j) for i in ra for j in rb),
                     lambda i, j: self.left[i].compose(self.right[j]) == self.right[j].compose(self.left[i]))
        return report

    def enveloping_module(self, enveloping: Optional[FinDimAlgebra] = None) -> LeftModule:
        """The left A ⊗ B^op-module with (a⊗b)·m = a m b."""
        A, B = self.left_algebra, self.right_algebra
        env = enveloping if enveloping is not None else A.tensor(B.opposite())
        n = B.dim
        ops = [self.left[i].compose(self.right[j]) for i in range(A.dim) for j in range(n)]
        return LeftModule(env, self.dim, ops, name=self.name, labels=self.labels)

    def bimodule_maps(self, other: "Bimodule") -> List[LinearMap]:
        """Basis of the bimodule maps self -> other."""
        src = [self.left_operator(g) for g in self.left_algebra.generators()]
        src += [self.right_operator(g) for g in self.right_algebra.generators()]
        tgt = [other.left_operator(g) for g in self.left_algebra.generators()]
        tgt += [other.right_operator(g) for g in self.right_algebra.generators()]
        return hom_space(self.field, src, tgt, self.dim, other.dim)

    def find_isomorphism(self, other: "Bimodule") -> Optional[LinearMap]:
        if self.dim != other.dim:
            return None
        basis = self.bimodule_maps(other)
        coeffs = find_invertible_combination(basis)
        if coeffs is None:
            return None
        cols: List[Vec] = [dict() for _ in range(self.dim)]
        for c, f in zip(coeffs, basis):
            for k, col in enumerate(f.cols):
                vec_axpy(cols[k], c, col)
        return LinearMap(self.field, self.dim, other.dim, cols)

    def is_isomorphism(self, f: LinearMap, other: "Bimodule") -> bool:
        """f is a bijective bimodule map self -> other."""
        if not f.is_bijective():
            return False
        ok_left = all(f.compose(self.left[i]) == other.left[i].compose(f) for i in range(self.left_algebra.dim))
        ok_right = all(f.compose(self.right[j]) == other.right[j].compose(f) for j in range(self.right_algebra.dim))
        return ok_left and ok_right

    def direct_sum(self, other: "Bimodule") -> "Bimodule":
        n = self.dim
        total = n + other.dim

        def stack(P: LinearMap, Q: LinearMap) -> LinearMap:
            cols = [dict(c) for c in P.cols] + [{n + i: x for i, x in c.items()} for c in Q.cols]
            return LinearMap(self.field, total, total, cols)

        return Bimodule(self.left_algebra, self.right_algebra, total,
                        [stack(P, Q) for P, Q in zip(self.left, other.left)],
                        [stack(P, Q) for P, Q in zip(self.right, other.right)],
                        name=f"{self.name}⊕{other.name}", labels=self.labels + other.labels)

    def __repr__(self) -> str:
        return f"Bimodule({self.name}, dim={self.dim})"


def _combine(field, dim: int, ops: Sequence[LinearMap], a: Mapping[int, Scalar]) -> LinearMap:
    cols: List[Vec] = [dict() for _ in range(dim)]
    for i, c in a.items():
        for k, col in enumerate(ops[i].cols):
            vec_axpy(cols[k], c, col)
    return LinearMap(field, dim, dim, cols)
