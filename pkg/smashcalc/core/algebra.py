"""Finite-dimensional algebras given by structure constants."""

from __future__ import annotations

import itertools
import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .exceptions import AlgebraStructureError, NotInvertibleError, ShapeMismatchError
from .field import Field, Scalar
from .linalg import LinearMap, SparseTensor, Subspace, Vec, solve_linear, vec_axpy, vec_clean
from .report import CheckReport

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def format_element(field: Field, labels: Sequence[str], v: Mapping[int, Scalar]) -> str:
    """Render a vector as ``c*label + ...`` in basis order."""
    if not v:
        return "0"
    terms = []
    for i in sorted(v):
        c = field.format(v[i])
        if c == "1":
            terms.append(labels[i])
        elif c == "-1":
            terms.append(f"-{labels[i]}")
        else:
            terms.append(f"{c}*{labels[i]}")
    return " + ".join(terms)


class FinDimAlgebra:
    """An associative unital algebra on a finite basis.

    ``mul[(i, j)]`` is the vector e_i e_j. Missing pairs multiply to zero.
    A graded algebra carries one degree per basis element; a truncated one
    also records the pairs whose product was cut off above ``truncation``.
    """

    def __init__(self, field: Field, labels: Sequence[str], mul: Mapping[Pair, Mapping[int, Scalar]],
                 unit: Mapping[int, Scalar], degrees: Optional[Sequence[int]] = None,
                 truncation: Optional[int] = None, overflow: Iterable[Pair] = (),
                 name: str = "", generators: Optional[Sequence[Mapping[int, Scalar]]] = None):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.name = name or f"A{self.dim}"
        self.mul: Dict[Pair, Vec] = {}
        for (i, j), v in mul.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ShapeMismatchError(f"Product index {(i, j)} out of range for dimension {self.dim}")
            v = vec_clean(v)
            if any(not 0 <= k < self.dim for k in v):
                raise ShapeMismatchError(f"Product e{i}*e{j} has a component outside the basis")
            if v:
                self.mul[(i, j)] = v
        self.unit: Vec = vec_clean(unit)
        if degrees is not None and len(degrees) != self.dim:
            raise ShapeMismatchError(f"Expected {self.dim} degrees, got {len(degrees)}")
        self.degrees: Optional[List[int]] = list(degrees) if degrees is not None else None
        self.truncation = truncation
        self.overflow: Set[Pair] = set(overflow)
        self._generators = [vec_clean(g) for g in generators] if generators is not None else None
        self._left_regular: Optional[List[LinearMap]] = None
        self._right_regular: Optional[List[LinearMap]] = None

    # --- construction helpers -------------------------------------------

    @classmethod
    def from_tensor(cls, labels: Sequence[str], tensor: SparseTensor, unit: Mapping[int, Scalar],
                    **kwargs) -> "FinDimAlgebra":
        m = len(labels)
        if tensor.dims != (m, m, m):
            raise ShapeMismatchError(f"Structure tensor dims {tensor.dims} do not match {m} basis labels")
        mul: Dict[Pair, Vec] = {}
        for (i, j, k), c in tensor.entries.items():
            mul.setdefault((i, j), {})[k] = c
        return cls(tensor.field, labels, mul, unit, **kwargs)

    @classmethod
    def ground(cls, field: Field, label: str = "1") -> "FinDimAlgebra":
        """The one-dimensional algebra k."""
        return cls(field, [label], {(0, 0): {0: field.one}}, {0: field.one}, degrees=[0], name="k")

    @classmethod
    def truncated_polynomial(cls, field: Field, n: int, variable: str = "x") -> "FinDimAlgebra":
        """k[x]/(x^n), graded by the power of x."""
        labels = ["1"] + [variable if d == 1 else f"{variable}^{d}" for d in range(1, n)]
        mul = {(i, j): {i + j: field.one} for i in range(n) for j in range(n) if i + j < n}
        return cls(field, labels, mul, {0: field.one}, degrees=list(range(n)), name=f"k[{variable}]/({variable}^{n})")

    def structure_tensor(self) -> SparseTensor:
        entries = {(i, j, k): c for (i, j), v in self.mul.items() for k, c in v.items()}
        return SparseTensor(self.field, (self.dim, self.dim, self.dim), entries)

    # --- elements -------------------------------------------------------

    @property
    def K(self):
        return self.field.domain

    def e(self, i: int) -> Vec:
        return {i: self.field.one}

    def basis(self) -> List[Vec]:
        return [self.e(i) for i in range(self.dim)]

    def scalar(self, c: Scalar) -> Vec:
        return {i: c * x for i, x in self.unit.items()} if c else {}

    def basis_product(self, i: int, j: int) -> Vec:
        return self.mul.get((i, j), {})

    def product(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                w = self.mul.get((i, j))
                if w:
                    vec_axpy(out, a * b, w)
        return out

    def product_all(self, *factors: Mapping[int, Scalar]) -> Vec:
        out: Vec = dict(self.unit)
        for f in factors:
            out = self.product(out, f)
        return out

    def power(self, u: Mapping[int, Scalar], n: int) -> Vec:
        out: Vec = dict(self.unit)
        for _ in range(n):
            out = self.product(out, u)
        return out

    def format(self, v: Mapping[int, Scalar]) -> str:
        return format_element(self.field, self.labels, v)

    def generators(self) -> List[Vec]:
        """A generating set; the whole basis unless a smaller one was declared."""
        return list(self._generators) if self._generators is not None else self.basis()

    def degree_of(self, v: Mapping[int, Scalar]) -> Optional[int]:
        """Degree of a homogeneous element, None if inhomogeneous or ungraded."""
        if self.degrees is None or not v:
            return None
        degrees = {self.degrees[i] for i in v}
        return degrees.pop() if len(degrees) == 1 else None

    # --- multiplication operators ---------------------------------------

    def left_mult(self, u: Mapping[int, Scalar]) -> LinearMap:
        return LinearMap(self.field, self.dim, self.dim, [self.product(u, self.e(j)) for j in range(self.dim)])

    def right_mult(self, u: Mapping[int, Scalar]) -> LinearMap:
        return LinearMap(self.field, self.dim, self.dim, [self.product(self.e(j), u) for j in range(self.dim)])

    def left_regular(self) -> List[LinearMap]:
        if self._left_regular is None:
            self._left_regular = [self.left_mult(self.e(i)) for i in range(self.dim)]
        return self._left_regular

    def right_regular(self) -> List[LinearMap]:
        if self._right_regular is None:
            self._right_regular = [self.right_mult(self.e(i)) for i in range(self.dim)]
        return self._right_regular

    def inverse(self, u: Mapping[int, Scalar]) -> Vec:
        """Two-sided inverse of an element.

        Raises:
            NotInvertibleError: u is not a unit
        """
        x = solve_linear(self.left_mult(u), self.unit)
        if x is None or self.product(x, u) != self.unit:
            raise NotInvertibleError(f"{self.format(u)} is not invertible in {self.name}")
        return x

    def is_unit(self, u: Mapping[int, Scalar]) -> bool:
        try:
            self.inverse(u)
        except NotInvertibleError:
            return False
        return True

    def is_commutative(self) -> bool:
        return all(self.basis_product(i, j) == self.basis_product(j, i)
                   for i, j in itertools.combinations(range(self.dim), 2))

    def is_central(self, u: Mapping[int, Scalar]) -> bool:
        return all(self.product(u, g) == self.product(g, u) for g in self.basis())

    def span_closure(self, generators: Iterable[Mapping[int, Scalar]]) -> Subspace:
        """Subspace spanned by all products of the generators (the unit included)."""
        gens = [vec_clean(g) for g in generators]
        space = Subspace(self.field, self.dim, [self.unit] + gens)
        while True:
            products = [self.product(b, g) for b in space.basis for g in gens]
            bigger = Subspace(self.field, self.dim, list(space.basis) + products)
            if bigger.dim == space.dim:
                return space
            space = bigger

    # --- verification -------------------------------------------------------

    def _safe(self, *idx: int) -> bool:
        if self.truncation is None or self.degrees is None:
            return True
        return sum(self.degrees[i] for i in idx) <= self.truncation

    def check(self) -> CheckReport:
        """Associativity, unit laws and grading on all basis tuples."""
        report = CheckReport(f"algebra {self.name}")
        r = range(self.dim)
        report.sweep(
            "associativity",
            ((i, j, k) for i in r for j in r for k in r if self._safe(i, j, k)),
            lambda i, j, k: self.product(self.basis_product(i, j), self.e(k))
            == self.product(self.e(i), self.basis_product(j, k)),
        )
        report.sweep(
            "unit",
            ((i,) for i in r),
            lambda i: self.product(self.unit, self.e(i)) == self.e(i) == self.product(self.e(i), self.unit),
        )
        if self.degrees is not None:
            report.sweep(
                "grading",
                ((i, j) for i in r for j in r),
                lambda i, j: all(self.degrees[k] == self.degrees[i] + self.degrees[j]
                                 for k in self.basis_product(i, j)),
            )
            report.record("unit degree", all(self.degrees[k] == 0 for k in self.unit))
        if self.overflow:
            report.skip("truncation", f"{len(self.overflow)} products cut off above degree {self.truncation}")
        return report

    def validate(self) -> "FinDimAlgebra":
        report = self.check()
        if not report.passed:
            raise AlgebraStructureError(str(report))
        return self

    # --- derived algebras -----------------------------------------------

    def opposite(self) -> "FinDimAlgebra":
        mul = {(j, i): v for (i, j), v in self.mul.items()}
        return FinDimAlgebra(self.field, self.labels, mul, self.unit, degrees=self.degrees,
                             truncation=self.truncation, overflow={(j, i) for i, j in self.overflow},
                             name=f"{self.name}^op", generators=self._generators)

    def tensor(self, other: "FinDimAlgebra", name: str = "") -> "FinDimAlgebra":
        """A ⊗ B with basis index i * dim B + j."""
        self.field.require_same(other.field)
        n = other.dim
        labels = [f"{a}⊗{b}" for a in self.labels for b in other.labels]
        mul: Dict[Pair, Vec] = {}
        for (i, k), u in self.mul.items():
            for (j, l), v in other.mul.items():
                w: Vec = {}
                for p, a in u.items():
                    for q, b in v.items():
                        w[p * n + q] = a * b
                mul[(i * n + j, k * n + l)] = w
        unit = {p * n + q: a * b for p, a in self.unit.items() for q, b in other.unit.items()}
        degrees = None
        if self.degrees is not None and other.degrees is not None:
            degrees = [da + db for da in self.degrees for db in other.degrees]
        gens = [tensor_vectors(g, other.unit, n) for g in self.generators()]
        gens += [tensor_vectors(self.unit, g, n) for g in other.generators()]
        return FinDimAlgebra(self.field, labels, mul, unit, degrees=degrees,
                             name=name or f"{self.name}⊗{other.name}", generators=gens)

    def enveloping(self) -> "FinDimAlgebra":
        """A^e = A ⊗ A^op, so (a⊗b)(a'⊗b') = aa' ⊗ b'b."""
        return self.tensor(self.opposite(), name=f"{self.name}^e")

    def __repr__(self) -> str:
        return f"FinDimAlgebra({self.name}, dim={self.dim}, field={self.field.name})"


def tensor_vectors(u: Mapping[int, Scalar], v: Mapping[int, Scalar], n: int) -> Vec:
    """u ⊗ v in the basis (i, j) -> i * n + j."""
    out: Vec = {}
    for i, a in u.items():
        for j, b in v.items():
            c = a * b
            if c:
                out[i * n + j] = c
    return out


def split_tensor(v: Mapping[int, Scalar], n: int) -> Dict[Pair, Scalar]:
    return {divmod(k, n): c for k, c in v.items()}


class AlgebraMorphism(LinearMap):
    """A linear map between algebras expected to be multiplicative and unital."""

    def __init__(self, source: FinDimAlgebra, target: FinDimAlgebra, cols: Sequence[Mapping[int, Scalar]],
                 name: str = ""):
        super().__init__(source.field, source.dim, target.dim, cols)
        self.source = source
        self.target = target
        self.name = name or f"{source.name}->{target.name}"

    @classmethod
    def from_map(cls, source: FinDimAlgebra, target: FinDimAlgebra, f: LinearMap, name: str = "") -> "AlgebraMorphism":
        if f.shape != (target.dim, source.dim):
            raise ShapeMismatchError(f"Map of shape {f.shape} between algebras of dims {source.dim}, {target.dim}")
        return cls(source, target, f.cols, name=name)

    @classmethod
    def identity(cls, algebra: FinDimAlgebra) -> "AlgebraMorphism":
        return cls(algebra, algebra, [algebra.e(j) for j in range(algebra.dim)], name="id")

    def check(self) -> CheckReport:
        report = CheckReport(f"morphism {self.name}")
        A, B = self.source, self.target
        r = range(A.dim)
        report.sweep(
            "multiplicative",
            ((i, j) for i in r for j in r if A._safe(i, j)),
            lambda i, j: self(A.basis_product(i, j)) == B.product(self.cols[i], self.cols[j]),
        )
        report.record("unital", self(A.unit) == B.unit)
        return report

    def check_anti(self) -> CheckReport:
        """Anti-multiplicativity f(ab) = f(b)f(a)."""
        report = CheckReport(f"anti-morphism {self.name}")
        A, B = self.source, self.target
        r = range(A.dim)
        report.sweep(
            "anti-multiplicative",
            ((i, j) for i in r for j in r),
            lambda i, j: self(A.basis_product(i, j)) == B.product(self.cols[j], self.cols[i]),
        )
        report.record("unital", self(A.unit) == B.unit)
        return report

    @property
    def bijective(self) -> bool:
        return self.is_bijective()

    def inverse(self) -> "AlgebraMorphism":
        return AlgebraMorphism(self.target, self.source, super().inverse().cols, name=f"{self.name}^-1")

    def then(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """other after self."""
        return AlgebraMorphism(self.source, other.target, [other(c) for c in self.cols],
                               name=f"{other.name}∘{self.name}")

    def power(self, n: int) -> "AlgebraMorphism":
        return AlgebraMorphism(self.source, self.target, super().power(n).cols, name=f"({self.name})^{n}")

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "images": {self.source.labels[j]: self.target.format(c) for j, c in enumerate(self.cols)},
            "bijective": self.is_bijective(),
        }
