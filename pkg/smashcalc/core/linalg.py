"""Exact sparse linear algebra over a ``Field``.

Vectors are plain ``dict`` objects mapping an index to a nonzero field
element. Linear maps are stored by columns (``LinearMap.cols[j]`` is the
image of the j-th basis vector). Elimination is delegated to sympy's
``DomainMatrix``, whose sparse rref is exact and deterministic.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from . import config
from .exceptions import FieldMismatchError, NotInvertibleError, ShapeMismatchError
from .field import Field, Scalar

logger = logging.getLogger(__name__)

Vec = Dict[int, Scalar]


# --- vector helpers -------------------------------------------------------

def vec_clean(v: Mapping[int, Scalar]) -> Vec:
    return {i: c for i, c in v.items() if c}


def vec_add(u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vec:
    out = dict(u)
    for i, c in v.items():
        s = out.get(i)
        s = c if s is None else s + c
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def vec_axpy(acc: Vec, c: Scalar, v: Mapping[int, Scalar]) -> Vec:
    """acc += c * v, in place."""
    if not c:
        return acc
    for i, x in v.items():
        s = acc.get(i)
        s = c * x if s is None else s + c * x
        if s:
            acc[i] = s
        else:
            acc.pop(i, None)
    return acc


def vec_scale(c: Scalar, v: Mapping[int, Scalar]) -> Vec:
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


def vec_sub(u: Mapping[int, Scalar], v: Mapping[int, Scalar], K) -> Vec:
    return vec_axpy(dict(u), -K.one, v)


def vec_neg(v: Mapping[int, Scalar]) -> Vec:
    return {i: -x for i, x in v.items()}


def unit_vector(i: int, K) -> Vec:
    return {i: K.one}


def vec_sum(vectors: Iterable[Mapping[int, Scalar]]) -> Vec:
    out: Vec = {}
    for v in vectors:
        for i, x in v.items():
            s = out.get(i)
            s = x if s is None else s + x
            if s:
                out[i] = s
            else:
                out.pop(i, None)
    return out


def first_difference(u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Optional[int]:
    """Smallest index where two vectors differ, or None."""
    keys = sorted(set(u) | set(v))
    for i in keys:
        if u.get(i) != v.get(i):
            return i
    return None


# --- sparse tensors -------------------------------------------------------

@dataclass(frozen=True)
class SparseTensor:
    """A finite map from index tuples to nonzero field elements."""

    field: Field
    dims: Tuple[int, ...]
    entries: Mapping[Tuple[int, ...], Scalar]

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ShapeMismatchError(f"Negative dimension in {self.dims}")
        for idx, value in self.entries.items():
            if len(idx) != len(self.dims):
                raise ShapeMismatchError(f"Index {idx} does not have arity {len(self.dims)}")
            if any(not 0 <= i < d for i, d in zip(idx, self.dims)):
                raise ShapeMismatchError(f"Index {idx} out of range for dims {self.dims}")
            if not value:
                raise ShapeMismatchError(f"Zero entry stored at {idx}")

    @classmethod
    def build(cls, field: Field, dims: Sequence[int], entries: Mapping[Tuple[int, ...], object]) -> "SparseTensor":
        """Convert raw values and drop zeros."""
        clean = {}
        for idx, value in entries.items():
            x = field.element(value)
            if x:
                clean[tuple(idx)] = x
        return cls(field, tuple(dims), clean)

    @classmethod
    def from_matrix(cls, field: Field, M: DomainMatrix) -> "SparseTensor":
        entries = {(i, j): x for i, row in M.to_dod().items() for j, x in row.items() if x}
        return cls(field, tuple(M.shape), entries)

    @classmethod
    def from_vector(cls, field: Field, v: Mapping[int, Scalar], length: int) -> "SparseTensor":
        return cls(field, (length,), {(i,): x for i, x in v.items() if x})

    @property
    def arity(self) -> int:
        return len(self.dims)

    def get(self, idx: Tuple[int, ...]) -> Scalar:
        return self.entries.get(tuple(idx), self.field.zero)

    def to_matrix(self) -> DomainMatrix:
        if self.arity != 2:
            raise ShapeMismatchError(f"Expected a matrix, got arity {self.arity}")
        dod: Dict[int, Dict[int, Scalar]] = {}
        for (i, j), x in self.entries.items():
            dod.setdefault(i, {})[j] = x
        return DomainMatrix(dod, self.dims, self.field.domain)

    def to_vector(self) -> Vec:
        if self.arity != 1:
            raise ShapeMismatchError(f"Expected a vector, got arity {self.arity}")
        return {i: x for (i,), x in self.entries.items()}

    def transpose(self) -> "SparseTensor":
        if self.arity != 2:
            raise ShapeMismatchError("Transpose needs a matrix")
        return SparseTensor(self.field, (self.dims[1], self.dims[0]),
                            {(j, i): x for (i, j), x in self.entries.items()})


# --- matrices -------------------------------------------------------------

def matrix_from_columns(cols: Sequence[Mapping[int, Scalar]], nrows: int, K) -> DomainMatrix:
    dod: Dict[int, Dict[int, Scalar]] = {}
    for j, col in enumerate(cols):
        for i, x in col.items():
            if x:
                dod.setdefault(i, {})[j] = x
    return DomainMatrix(dod, (nrows, len(cols)), K)


def matrix_from_rows(rows: Sequence[Mapping[int, Scalar]], ncols: int, K) -> DomainMatrix:
    dod = {i: {j: x for j, x in row.items() if x} for i, row in enumerate(rows)}
    dod = {i: r for i, r in dod.items() if r}
    return DomainMatrix(dod, (len(rows), ncols), K)


def matrix_columns(M: DomainMatrix) -> List[Vec]:
    nrows, ncols = M.shape
    cols: List[Vec] = [dict() for _ in range(ncols)]
    for i, row in M.to_dod().items():
        for j, x in row.items():
            if x:
                cols[j][i] = x
    return cols


def matrix_rows(M: DomainMatrix) -> List[Vec]:
    nrows, _ = M.shape
    dod = M.to_dod()
    return [dict((j, x) for j, x in dod.get(i, {}).items() if x) for i in range(nrows)]


def _as_matrix(M, field: Optional[Field]) -> DomainMatrix:
    if isinstance(M, (SparseTensor, LinearMap)):
        if field is not None:
            field.require_same(M.field)
        return M.to_matrix() if isinstance(M, SparseTensor) else M.matrix()
    if field is not None and M.domain != field.domain:
        raise FieldMismatchError(f"Field mismatch: matrix over {M.domain} vs {field.name}")
    return M


def solve_linear(M, b, field: Optional[Field] = None) -> Optional[Vec]:
    """Solve Mx = b exactly.

    Args:
        M: an r x c ``SparseTensor``, ``LinearMap`` or ``DomainMatrix``
        b: a length-r ``SparseTensor`` or a sparse vector
        field: the expected ground field; taken from M or b when omitted

    Returns:
        The solution whose free variables are all zero, or None when the
        system is inconsistent.

    Raises:
        FieldMismatchError: M and b live over different fields
        ShapeMismatchError: the length of b is not the row count of M
    """
    if field is None and isinstance(M, (SparseTensor, LinearMap)):
        field = M.field
    if field is not None and isinstance(b, SparseTensor):
        field.require_same(b.field)
    elif isinstance(b, SparseTensor):
        field = b.field
    A = _as_matrix(M, field)
    nrows, ncols = A.shape
    if isinstance(b, SparseTensor):
        if b.dims != (nrows,):
            raise ShapeMismatchError(f"Right-hand side of length {b.dims} for a {nrows}x{ncols} system")
        rhs = b.to_vector()
    else:
        rhs = dict(b)
        if any(not 0 <= i < nrows for i in rhs):
            raise ShapeMismatchError(f"Right-hand side index out of range for {nrows} rows")
    K = A.domain
    aug = A.hstack(matrix_from_columns([rhs], nrows, K))
    R, pivots = aug.to_sparse().rref()
    if ncols in pivots:
        return None
    rows = R.to_dod()
    x: Vec = {}
    for r, p in enumerate(pivots):
        value = rows.get(r, {}).get(ncols)
        if value:
            x[p] = value
    return x


def rank(M) -> int:
    """Exact rank of a matrix."""
    A = _as_matrix(M, None)
    if 0 in A.shape:
        return 0
    return A.to_sparse().rank()


def rref_rows(rows: Sequence[Mapping[int, Scalar]], ncols: int, K) -> Tuple[List[Vec], List[int]]:
    """Reduced row echelon basis of the span of ``rows``."""
    if not rows:
        return [], []
    R, pivots = matrix_from_rows(rows, ncols, K).to_sparse().rref()
    dod = R.to_dod()
    basis = [dict(dod.get(r, {})) for r in range(len(pivots))]
    return basis, list(pivots)


def nullspace(M) -> List[Vec]:
    """Basis of the kernel, one vector per non-pivot column."""
    A = _as_matrix(M, None)
    nrows, ncols = A.shape
    K = A.domain
    if ncols == 0:
        return []
    if nrows == 0:
        return [{j: K.one} for j in range(ncols)]
    R, pivots = A.to_sparse().rref()
    dod = R.to_dod()
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v: Vec = {f: K.one}
        for r, p in enumerate(pivots):
            value = dod.get(r, {}).get(f)
            if value:
                v[p] = -value
        basis.append(v)
    return basis


def kernel_of_columns(cols: Sequence[Mapping[int, Scalar]], nrows: int, K) -> List[Vec]:
    return nullspace(matrix_from_columns(cols, nrows, K))


# --- linear maps ----------------------------------------------------------

class LinearMap:
    """A linear map k^n -> k^m stored by its columns."""

    def __init__(self, field: Field, source_dim: int, target_dim: int, cols: Sequence[Mapping[int, Scalar]]):
        if len(cols) != source_dim:
            raise ShapeMismatchError(f"Expected {source_dim} columns, got {len(cols)}")
        self.field = field
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.cols: List[Vec] = [vec_clean(c) for c in cols]

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearMap":
        return cls(field, n, n, [{j: field.one} for j in range(n)])

    @classmethod
    def zero(cls, field: Field, n: int, m: int) -> "LinearMap":
        return cls(field, n, m, [{} for _ in range(n)])

    @classmethod
    def from_function(cls, field: Field, source_dim: int, target_dim: int,
                      f: Callable[[int], Mapping[int, Scalar]]) -> "LinearMap":
        return cls(field, source_dim, target_dim, [f(j) for j in range(source_dim)])

    @classmethod
    def from_matrix(cls, field: Field, M: DomainMatrix) -> "LinearMap":
        return cls(field, M.shape[1], M.shape[0], matrix_columns(M))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[object]]) -> "LinearMap":
        m = len(rows)
        n = len(rows[0]) if rows else 0
        cols: List[Vec] = [dict() for _ in range(n)]
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ShapeMismatchError("Ragged matrix rows")
            for j, value in enumerate(row):
                x = field.element(value)
                if x:
                    cols[j][i] = x
        return cls(field, n, m, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.target_dim, self.source_dim)

    def __call__(self, v: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            vec_axpy(out, c, self.cols[j])
        return out

    def column(self, j: int) -> Vec:
        return self.cols[j]

    def matrix(self) -> DomainMatrix:
        return matrix_from_columns(self.cols, self.target_dim, self.field.domain)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.target_dim != self.source_dim:
            raise ShapeMismatchError(f"Cannot compose {self.shape} after {other.shape}")
        return LinearMap(self.field, other.source_dim, self.target_dim, [self(c) for c in other.cols])

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return self.compose(other)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if self.shape != other.shape:
            raise ShapeMismatchError(f"Cannot add {self.shape} and {other.shape}")
        return LinearMap(self.field, self.source_dim, self.target_dim,
                         [vec_add(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scale(-self.field.one)

    def scale(self, c: Scalar) -> "LinearMap":
        return LinearMap(self.field, self.source_dim, self.target_dim, [vec_scale(c, col) for col in self.cols])

    def kron(self, other: "LinearMap") -> "LinearMap":
        """self ⊗ other on the basis (j, l) -> j * other.source_dim + l."""
        m = other.target_dim
        cols: List[Vec] = []
        for u in self.cols:
            for v in other.cols:
                cols.append({i * m + k: a * b for i, a in u.items() for k, b in v.items()})
        return LinearMap(self.field, self.source_dim * other.source_dim, self.target_dim * m, cols)

    def transpose(self) -> "LinearMap":
        rows: List[Vec] = [dict() for _ in range(self.target_dim)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                rows[i][j] = x
        return LinearMap(self.field, self.target_dim, self.source_dim, rows)

    def rank(self) -> int:
        return rank(self.matrix())

    def kernel(self) -> List[Vec]:
        return nullspace(self.matrix())

    def is_bijective(self) -> bool:
        return self.source_dim == self.target_dim and self.rank() == self.source_dim

    def inverse(self) -> "LinearMap":
        if self.source_dim != self.target_dim:
            raise NotInvertibleError(f"Non-square map {self.shape}")
        if self.source_dim == 0:
            return LinearMap(self.field, 0, 0, [])
        try:
            inv = self.matrix().to_dense().inv()
        except DMNonInvertibleMatrixError as e:
            raise NotInvertibleError("Singular linear map") from e
        return LinearMap.from_matrix(self.field, inv)

    def power(self, n: int) -> "LinearMap":
        if n < 0:
            return self.inverse().power(-n)
        result = LinearMap.identity(self.field, self.source_dim)
        base = self
        while n:
            if n & 1:
                result = base.compose(result)
            base = base.compose(base)
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim and all(
            col == {j: self.field.one} for j, col in enumerate(self.cols))

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)

    def first_mismatch(self, other: "LinearMap") -> Optional[int]:
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                return j
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __hash__(self):
        return hash((self.shape, tuple(tuple(sorted((i, str(x)) for i, x in c.items())) for c in self.cols)))

    def to_rows(self) -> List[List[str]]:
        """Dense matrix of formatted entries, for reports."""
        rows = [[self.field.format(self.field.zero)] * self.source_dim for _ in range(self.target_dim)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                rows[i][j] = self.field.format(x)
        return rows

    def __repr__(self) -> str:
        return f"LinearMap({self.target_dim}x{self.source_dim})"


# --- subspaces ------------------------------------------------------------

class Subspace:
    """A subspace of k^n kept as an rref basis.

    Coordinates of a vector in the subspace are its entries at the pivot
    columns. The non-pivot columns index a complement, which gives
    coordinates on the quotient k^n / W.
    """

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Mapping[int, Scalar]] = ()):
        self.field = field
        self.ambient_dim = ambient_dim
        rows = [vec_clean(v) for v in vectors]
        rows = [r for r in rows if r]
        self.basis, self.pivots = rref_rows(rows, ambient_dim, field.domain)
        pivot_set = set(self.pivots)
        self.free_columns = [j for j in range(ambient_dim) if j not in pivot_set]
        self._free_position = {j: k for k, j in enumerate(self.free_columns)}

    @classmethod
    def whole(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, [{j: field.one} for j in range(n)])

    @classmethod
    def image(cls, f: LinearMap) -> "Subspace":
        return cls(f.field, f.target_dim, f.cols)

    @classmethod
    def kernel(cls, f: LinearMap) -> "Subspace":
        return cls(f.field, f.source_dim, f.kernel())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def reduce(self, v: Mapping[int, Scalar]) -> Tuple[List[Scalar], Vec]:
        """Split v into (coordinates along the basis, residual off the pivots)."""
        residual = dict(v)
        coords = []
        for row, p in zip(self.basis, self.pivots):
            c = residual.get(p, self.field.zero)
            coords.append(c)
            if c:
                vec_axpy(residual, -c, row)
        return coords, residual

    def contains(self, v: Mapping[int, Scalar]) -> bool:
        return not self.reduce(v)[1]

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coordinates(self, v: Mapping[int, Scalar]) -> Vec:
        coords, residual = self.reduce(v)
        if residual:
            raise ShapeMismatchError("Vector is not in the subspace")
        return {k: c for k, c in enumerate(coords) if c}

    def from_coordinates(self, coords: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for k, c in coords.items():
            vec_axpy(out, c, self.basis[k])
        return out

    def quotient_coordinates(self, v: Mapping[int, Scalar]) -> Vec:
        """Coordinates of the class of v in k^n / W."""
        _, residual = self.reduce(v)
        return {self._free_position[j]: c for j, c in residual.items()}

    def quotient_lift(self, k: int) -> Vec:
        return {self.free_columns[k]: self.field.one}

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """W ∩ W' via the kernel of (x, y) -> x - y on coordinates."""
        K = self.field.domain
        n, m = self.dim, other.dim
        cols = [dict(v) for v in self.basis] + [vec_neg(v) for v in other.basis]
        kernel = kernel_of_columns(cols, self.ambient_dim, K)
        vectors = [self.from_coordinates({k: c for k, c in z.items() if k < n}) for z in kernel]
        return Subspace(self.field, self.ambient_dim, vectors)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class Subquotient:
    """The subquotient Z / B of k^n, with B contained in Z."""

    def __init__(self, cycles: Subspace, boundaries: Subspace):
        self.field = cycles.field
        self.cycles = cycles
        self.boundaries = boundaries
        coords = [cycles.coordinates(b) for b in boundaries.basis]
        self._relations = Subspace(self.field, cycles.dim, coords)

    @property
    def dim(self) -> int:
        return self._relations.codim

    @property
    def ambient_dim(self) -> int:
        return self.cycles.ambient_dim

    def project(self, v: Mapping[int, Scalar]) -> Vec:
        """Class of a cycle in Z / B."""
        return self._relations.quotient_coordinates(self.cycles.coordinates(v))

    def lift(self, k: int) -> Vec:
        """A cycle representing the k-th basis class."""
        return self.cycles.from_coordinates(self._relations.quotient_lift(k))

    def lift_vector(self, coords: Mapping[int, Scalar]) -> Vec:
        out: Vec = {}
        for k, c in coords.items():
            vec_axpy(out, c, self.lift(k))
        return out

    def is_cycle(self, v: Mapping[int, Scalar]) -> bool:
        return self.cycles.contains(v)

    def induced(self, f: Callable[[Vec], Vec], target: "Subquotient") -> LinearMap:
        """Matrix of the map induced by a chain-level map f on the classes."""
        return LinearMap(self.field, self.dim, target.dim, [target.project(f(self.lift(k))) for k in range(self.dim)])

    def induced_endomorphism(self, f: Callable[[Vec], Vec]) -> LinearMap:
        return self.induced(f, self)


# --- invertible combinations ----------------------------------------------

def _is_invertible(M: LinearMap) -> bool:
    return M.source_dim == M.target_dim and M.rank() == M.source_dim


def _combination(maps: Sequence[LinearMap], coeffs: Sequence[Scalar]) -> LinearMap:
    cols: List[Vec] = [dict() for _ in range(maps[0].source_dim)]
    for c, M in zip(coeffs, maps):
        if c:
            for j, col in enumerate(M.cols):
                vec_axpy(cols[j], c, col)
    return LinearMap(maps[0].field, maps[0].source_dim, maps[0].target_dim, cols)


def find_invertible_combination(maps: Sequence[LinearMap], limit: Optional[int] = None) -> Optional[List[Scalar]]:
    """Find coefficients c with sum c_k maps[k] invertible.

    Single basis maps and sums of two are scanned first. Over a small finite
    field the whole coefficient space is enumerated. Otherwise the
    determinant polynomial in the coefficients is formed and a nonvanishing
    point is found by fixing one coefficient at a time, over all of F_p
    when p is at most dim + 1 and on the grid 0..dim otherwise.

    Returns:
        The coefficient list, or None when no combination is invertible.
    """
    if not maps:
        return None
    field = maps[0].field
    K = field.domain
    n = maps[0].source_dim
    r = len(maps)
    if n == 0:
        return [K.zero] * r
    if maps[0].target_dim != n:
        return None
    limit = config.INVERTIBLE_SEARCH_LIMIT if limit is None else limit

    for k in range(r):
        if _is_invertible(maps[k]):
            coeffs = [K.zero] * r
            coeffs[k] = K.one
            return coeffs
    for k, l in itertools.combinations(range(r), 2):
        coeffs = [K.zero] * r
        coeffs[k] = K.one
        coeffs[l] = K.one
        if _is_invertible(_combination(maps, coeffs)):
            return coeffs

    if field.is_finite and field.characteristic ** r <= limit:
        for values in itertools.product(range(field.characteristic), repeat=r):
            coeffs = [K.convert(v) for v in values]
            if any(coeffs) and _is_invertible(_combination(maps, coeffs)):
                return coeffs
        return None

    return _determinant_search(maps, field)


def _determinant_search(maps: Sequence[LinearMap], field: Field) -> Optional[List[Scalar]]:
    """Pick coefficients keeping det not identically zero, one generator at a time."""
    from sympy.polys.rings import ring

    K = field.domain
    n = maps[0].source_dim
    R, *gens = ring([f"c{k}" for k in range(len(maps))], K)
    dod: Dict[int, Dict[int, object]] = {}
    for k, M in enumerate(maps):
        for j, col in enumerate(M.cols):
            for i, x in col.items():
                row = dod.setdefault(i, {})
                row[j] = row.get(j, R.zero) + gens[k] * x
    dod = {i: {j: x for j, x in row.items() if x} for i, row in dod.items()}
    current = DomainMatrix(dod, (n, n), R.to_domain()).det()
    if not current:
        return None
    # det has degree <= n in each coefficient; n+1 distinct values always leave it nonzero
    p = field.characteristic
    grid = [K.convert(v) for v in range(p if field.is_finite and p <= n + 1 else n + 1)]
    return _nonvanishing_point(current, grid, len(maps))


def _nonvanishing_point(poly, grid: Sequence[Scalar], remaining: int) -> Optional[List[Scalar]]:
    """Grid values for the remaining generators at which poly is nonzero.

    When the grid is all of F_p a value can kill every later choice, so the
    search backtracks.
    """
    if remaining == 0:
        return []
    for value in grid:
        candidate = _evaluate_first(poly, value)
        if not candidate:
            continue
        rest = _nonvanishing_point(candidate, grid, remaining - 1)
        if rest is not None:
            return [value] + rest
    return None


def _evaluate_first(poly, value):
    """Substitute the first remaining generator of a sparse polynomial."""
    if hasattr(poly, "ring") and poly.ring.ngens > 0:
        return poly.evaluate(poly.ring.gens[0], value)
    return poly
