"""Finite-dimensional Hopf algebras given by structure constants."""

from __future__ import annotations

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.algebra import AlgebraMorphism, FinDimAlgebra
from ..core.exceptions import NotInvertibleError, ShapeMismatchError
from ..core.field import Scalar
from ..core.linalg import LinearMap, Subspace, Vec, nullspace, matrix_from_rows, vec_axpy
from ..core.report import CheckReport
from . import config

Legs = Tuple[int, ...]


def _legs_add(acc: Dict[Legs, Scalar], key: Legs, c: Scalar) -> None:
    s = acc.get(key)
    s = c if s is None else s + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class HopfAlgebra:
    """A Hopf algebra H with comultiplication, counit and antipode.

    ``comul[i]`` maps pairs (j, k) to the coefficient of e_j ⊗ e_k in Δ(e_i).
    ``counit[i]`` is ε(e_i). ``antipode`` is the matrix of S by columns.
    """

    def __init__(self, algebra: FinDimAlgebra, comul: Mapping[int, Mapping[Tuple[int, int], Scalar]],
                 counit: Sequence[Scalar], antipode: LinearMap, name: str = ""):
        n = algebra.dim
        if len(counit) != n:
            raise ShapeMismatchError(f"Counit has {len(counit)} entries for dimension {n}")
        if antipode.shape != (n, n):
            raise ShapeMismatchError(f"Antipode of shape {antipode.shape} for dimension {n}")
        self.algebra = algebra
        self.field = algebra.field
        self.dim = n
        self.labels = algebra.labels
        self.name = name or algebra.name
        self.comul: Dict[int, Dict[Tuple[int, int], Scalar]] = {}
        for i in range(n):
            terms = {}
            for (j, k), c in comul.get(i, {}).items():
                if not (0 <= j < n and 0 <= k < n):
                    raise ShapeMismatchError(f"Coproduct of e{i} has a leg outside the basis")
                if c:
                    terms[(j, k)] = c
            self.comul[i] = terms
        self.counit = list(counit)
        self.antipode = antipode
        self._powers: Dict[int, LinearMap] = {0: LinearMap.identity(self.field, n), 1: antipode}
        # set by the group algebra constructors
        self.group_table: Optional[List[List[int]]] = None
        self.group_elements: Optional[List[object]] = None
        self.logger = logging.getLogger(f"smashcalc.hopf.{self.__class__.__name__.lower()}")

    # --- structure maps ---------------------------------------------------

    @property
    def unit(self) -> Vec:
        return self.algebra.unit

    def e(self, i: int) -> Vec:
        return self.algebra.e(i)

    def product(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vec:
        return self.algebra.product(u, v)

    def coproduct(self, v: Mapping[int, Scalar]) -> Dict[Tuple[int, int], Scalar]:
        out: Dict[Legs, Scalar] = {}
        for i, c in v.items():
            for key, x in self.comul[i].items():
                _legs_add(out, key, c * x)
        return out

    def legs(self, v: Mapping[int, Scalar], n: int) -> Dict[Legs, Scalar]:
        """Iterated coproduct h -> h_1 ⊗ ... ⊗ h_n, expanding the last leg."""
        out: Dict[Legs, Scalar] = {(i,): c for i, c in v.items() if c}
        for _ in range(n - 1):
            nxt: Dict[Legs, Scalar] = {}
            for key, c in out.items():
                for (j, k), x in self.comul[key[-1]].items():
                    _legs_add(nxt, key[:-1] + (j, k), c * x)
            out = nxt
        return out

    def basis_legs(self, i: int, n: int) -> Dict[Legs, Scalar]:
        return self.legs({i: self.field.one}, n)

    def counit_of(self, v: Mapping[int, Scalar]) -> Scalar:
        out = self.field.zero
        for i, c in v.items():
            out += c * self.counit[i]
        return out

    def S(self, v: Mapping[int, Scalar]) -> Vec:
        return self.antipode(v)

    @property
    def antipode_invertible(self) -> bool:
        return self.antipode.is_bijective()

    def antipode_power(self, n: int) -> LinearMap:
        """S^n; negative powers use the inverse matrix.

        Raises:
            NotInvertibleError: n < 0 and S is singular
        """
        if n in self._powers:
            return self._powers[n]
        if n < 0:
            inverse = self._powers.get(-1)
            if inverse is None:
                try:
                    inverse = self.antipode.inverse()
                except NotInvertibleError as e:
                    raise NotInvertibleError(f"Antipode of {self.name} is not invertible") from e
                self._powers[-1] = inverse
            result = inverse.power(-n)
        else:
            result = self.antipode.power(n)
        self._powers[n] = result
        return result

    def S_power(self, n: int, v: Mapping[int, Scalar]) -> Vec:
        return self.antipode_power(n)(v)

    def is_cocommutative(self) -> bool:
        return all(self.comul[i] == {(k, j): c for (j, k), c in self.comul[i].items()} for i in range(self.dim))

    # --- verification ---------------------------------------------------------

    def _pair_product(self, u: Mapping[Legs, Scalar], v: Mapping[Legs, Scalar]) -> Dict[Legs, Scalar]:
        out: Dict[Legs, Scalar] = {}
        for (a, b), c in u.items():
            for (p, q), d in v.items():
                left = self.algebra.basis_product(a, p)
                right = self.algebra.basis_product(b, q)
                for i, x in left.items():
                    for j, y in right.items():
                        _legs_add(out, (i, j), c * d * x * y)
        return out

    def verify(self) -> CheckReport:
        """All Hopf axioms on basis elements, with the first failing tuple as witness."""
        report = CheckReport(f"hopf {self.name}")
        if self.dim > config.HOPF_VERIFY_MAX_DIM:
            report.skip("algebra", f"basis triple sweep skipped above dimension {config.HOPF_VERIFY_MAX_DIM}")
        else:
            report.extend(self.algebra.check())
        n = range(self.dim)
        F = self.field
        report.sweep(
            "coassociativity", ((i,) for i in n),
            lambda i: self._coassociative(i),
        )
        report.sweep(
            "counit laws", ((i,) for i in n),
            lambda i: self._counit_law(i),
        )
        report.sweep(
            "coproduct multiplicative", ((i, j) for i in n for j in n),
            lambda i, j: self.coproduct(self.algebra.basis_product(i, j))
            == self._pair_product(self.comul[i], self.comul[j]),
        )
        report.record("coproduct unital", self.coproduct(self.unit) == self._pair_product_unit())
        report.sweep(
            "counit multiplicative", ((i, j) for i in n for j in n),
            lambda i, j: self.counit_of(self.algebra.basis_product(i, j)) == self.counit[i] * self.counit[j],
        )
        report.record("counit unital", self.counit_of(self.unit) == F.one)
        # non-unit basis elements first
        report.sweep(
            "antipode", ((i,) for i in sorted(n, key=lambda i: i in self.unit)),
            lambda i: self._antipode_law(i),
        )
        report.record("counit of antipode", all(self.counit_of(self.S(self.e(i))) == self.counit[i] for i in n))
        report.record("antipode unital", self.S(self.unit) == self.unit)
        return report

    def _pair_product_unit(self) -> Dict[Legs, Scalar]:
        out: Dict[Legs, Scalar] = {}
        for i, a in self.unit.items():
            for j, b in self.unit.items():
                _legs_add(out, (i, j), a * b)
        return out

    def _coassociative(self, i: int) -> bool:
        left: Dict[Legs, Scalar] = {}
        right: Dict[Legs, Scalar] = {}
        for (j, k), c in self.comul[i].items():
            for (a, b), x in self.comul[j].items():
                _legs_add(left, (a, b, k), c * x)
            for (a, b), x in self.comul[k].items():
                _legs_add(right, (j, a, b), c * x)
        return left == right

    def _counit_law(self, i: int) -> bool:
        left: Vec = {}
        right: Vec = {}
        for (j, k), c in self.comul[i].items():
            vec_axpy(left, c * self.counit[j], self.e(k))
            vec_axpy(right, c * self.counit[k], self.e(j))
        return left == self.e(i) == right

    def _antipode_law(self, i: int) -> bool:
        left: Vec = {}
        right: Vec = {}
        for (j, k), c in self.comul[i].items():
            vec_axpy(left, c, self.product(self.S(self.e(j)), self.e(k)))
            vec_axpy(right, c, self.product(self.e(j), self.S(self.e(k))))
        expected = self.algebra.scalar(self.counit[i])
        return left == expected == right

    # --- derived Hopf algebras ----------------------------------------------

    def op(self) -> "HopfAlgebra":
        """H^op: opposite product, same coproduct, antipode S^-1."""
        return HopfAlgebra(self.algebra.opposite(), self.comul, self.counit, self.antipode_power(-1),
                           name=f"{self.name}^op")

    def tensor(self, other: "HopfAlgebra", name: str = "") -> "HopfAlgebra":
        n = other.dim
        algebra = self.algebra.tensor(other.algebra)
        comul: Dict[int, Dict[Tuple[int, int], Scalar]] = {}
        for i in range(self.dim):
            for j in range(n):
                terms: Dict[Legs, Scalar] = {}
                for (a, b), c in self.comul[i].items():
                    for (p, q), d in other.comul[j].items():
                        _legs_add(terms, (a * n + p, b * n + q), c * d)
                comul[i * n + j] = terms
        counit = [self.counit[i] * other.counit[j] for i in range(self.dim) for j in range(n)]
        cols = []
        for i in range(self.dim):
            for j in range(n):
                col: Vec = {}
                for a, x in self.antipode.cols[i].items():
                    for b, y in other.antipode.cols[j].items():
                        col[a * n + b] = x * y
                cols.append(col)
        S = LinearMap(self.field, self.dim * n, self.dim * n, cols)
        return HopfAlgebra(algebra, comul, counit, S, name=name or f"{self.name}⊗{other.name}")

    def enveloping(self) -> "HopfAlgebra":
        """H^e = H ⊗ H^op."""
        return self.tensor(self.op(), name=f"{self.name}^e")

    # --- integrals ----------------------------------------------------------

    def _integral_space(self, left: bool) -> Subspace:
        F = self.field
        K = F.domain
        rows: List[Vec] = []
        for g in self.algebra.generators():
            op = self.algebra.left_mult(g) if left else self.algebra.right_mult(g)
            eps = self.counit_of(g)
            for r in range(self.dim):
                row: Vec = {}
                for c, col in enumerate(op.cols):
                    x = col.get(r)
                    if x:
                        row[c] = x
                if eps:
                    vec_axpy(row, -eps, {r: K.one})
                if row:
                    rows.append(row)
        solutions = nullspace(matrix_from_rows(rows, self.dim, K)) if rows else [self.e(i) for i in range(self.dim)]
        return Subspace(F, self.dim, solutions)

    def left_integrals(self) -> Subspace:
        """Space of t with h t = ε(h) t."""
        return self._integral_space(left=True)

    def right_integrals(self) -> Subspace:
        """Space of t with t h = ε(h) t."""
        return self._integral_space(left=False)

    def morphism(self, f: LinearMap, name: str = "") -> AlgebraMorphism:
        return AlgebraMorphism.from_map(self.algebra, self.algebra, f, name=name)

    def format(self, v: Mapping[int, Scalar]) -> str:
        return self.algebra.format(v)

    def __repr__(self) -> str:
        return f"HopfAlgebra({self.name}, dim={self.dim}, field={self.field.name})"


def sweedler(hopf: HopfAlgebra, h: Mapping[int, Scalar], n: int) -> List[Tuple[Scalar, Legs]]:
    """Sweedler components of h in a deterministic order."""
    return sorted(((c, key) for key, c in hopf.legs(h, n).items()), key=lambda t: t[1])


def verify_hopf(hopf: HopfAlgebra) -> CheckReport:
    return hopf.verify()


def antipode_power(hopf: HopfAlgebra, n: int) -> AlgebraMorphism:
    """S^n on the algebra of H; an anti-automorphism when n is odd.

    Raises:
        NotInvertibleError: n < 0 and S is singular
    """
    return AlgebraMorphism(hopf.algebra, hopf.algebra, hopf.antipode_power(n).cols, name=f"S^{n}")
