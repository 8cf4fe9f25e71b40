"""Standard Hopf algebras: group algebras, their duals, Sweedler's H4, k."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from ..core.algebra import FinDimAlgebra
from ..core.field import Field, Scalar
from ..core.linalg import LinearMap, Vec
from . import config
from .exceptions import HopfError
from .hopf import HopfAlgebra

Matrix = Tuple[Tuple[Scalar, ...], ...]


def trivial_hopf(field: Field) -> HopfAlgebra:
    """The one-dimensional Hopf algebra k."""
    A = FinDimAlgebra.ground(field)
    return HopfAlgebra(A, {0: {(0, 0): field.one}}, [field.one], LinearMap.identity(field, 1), name="k")


def group_algebra(field: Field, table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                  name: str = "kG", elements: Optional[Sequence[object]] = None) -> HopfAlgebra:
    """kG from a multiplication table; element 0 must be the identity.

    Raises:
        HopfError: the table is not a group table with identity 0
    """
    n = len(table)
    if any(len(row) != n for row in table):
        raise HopfError("Group table is not square")
    if any(table[0][i] != i or table[i][0] != i for i in range(n)):
        raise HopfError("Element 0 of the group table is not the identity")
    inverse = []
    for i in range(n):
        inv = [j for j in range(n) if table[i][j] == 0]
        if len(inv) != 1 or table[inv[0]][i] != 0:
            raise HopfError(f"Element {i} has no two-sided inverse in the table")
        inverse.append(inv[0])
    labels = list(labels) if labels is not None else ["1"] + [f"g{i}" for i in range(1, n)]
    one = field.one
    mul = {(i, j): {table[i][j]: one} for i in range(n) for j in range(n)}
    algebra = FinDimAlgebra(field, labels, mul, {0: one}, name=name)
    comul = {i: {(i, i): one} for i in range(n)}
    S = LinearMap(field, n, n, [{inverse[i]: one} for i in range(n)])
    hopf = HopfAlgebra(algebra, comul, [one] * n, S, name=name)
    hopf.group_table = [list(row) for row in table]
    hopf.group_elements = list(elements) if elements is not None else list(range(n))
    return hopf


def cyclic_group_algebra(field: Field, n: int, generator: str = "g") -> HopfAlgebra:
    """kC_n with basis 1, g, ..., g^(n-1)."""
    labels = ["1"] + [generator if a == 1 else f"{generator}^{a}" for a in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    hopf = group_algebra(field, table, labels, name=f"kC{n}")
    hopf.group_elements = list(range(n))
    return hopf


def dual_cyclic_group_algebra(field: Field, n: int) -> HopfAlgebra:
    """(kC_n)*: orthogonal idempotents p_a with Δp_c = Σ_{a+b=c} p_a ⊗ p_b."""
    one = field.one
    labels = [f"p{a}" for a in range(n)]
    mul = {(a, a): {a: one} for a in range(n)}
    algebra = FinDimAlgebra(field, labels, mul, {a: one for a in range(n)}, name=f"(kC{n})*")
    comul = {c: {(a, (c - a) % n): one for a in range(n)} for c in range(n)}
    counit = [one if a == 0 else field.zero for a in range(n)]
    S = LinearMap(field, n, n, [{(-a) % n: one} for a in range(n)])
    return HopfAlgebra(algebra, comul, counit, S, name=f"(kC{n})*")


def sweedler_algebra(field: Field) -> HopfAlgebra:
    """Sweedler's four-dimensional Hopf algebra on 1, g, x, gx.

    g^2 = 1, x^2 = 0, xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(x) = -gx.
    """
    one = field.one
    m1 = -one
    labels = ["1", "g", "x", "gx"]
    mul: Dict[Tuple[int, int], Vec] = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (1, 1): {0: one}, (1, 2): {3: one}, (1, 3): {2: one},
        (2, 0): {2: one}, (2, 1): {3: m1},
        (3, 0): {3: one}, (3, 1): {2: m1},
    }
    algebra = FinDimAlgebra(field, labels, mul, {0: one}, name="H4", generators=[{1: one}, {2: one}])
    comul = {
        0: {(0, 0): one},
        1: {(1, 1): one},
        2: {(2, 0): one, (1, 2): one},
        3: {(3, 1): one, (0, 3): one},
    }
    counit = [one, one, field.zero, field.zero]
    S = LinearMap(field, 4, 4, [{0: one}, {1: one}, {3: m1}, {2: one}])
    return HopfAlgebra(algebra, comul, counit, S, name="H4")


def _matmul(K, a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), K.zero) for j in range(n)) for i in range(n))


def matrix_group(field: Field, generators: Sequence[Sequence[Sequence[object]]],
                 limit: Optional[int] = None) -> List[Matrix]:
    """Closure of a finite set of invertible matrices, identity first, in discovery order.

    Raises:
        HopfError: the closure exceeds ``limit`` elements
    """
    K = field.domain
    limit = config.MATRIX_GROUP_LIMIT if limit is None else limit
    gens = [tuple(tuple(field.element(x) for x in row) for row in g) for g in generators]
    if not gens:
        raise HopfError("A matrix group needs at least one generator")
    n = len(gens[0])
    identity = tuple(tuple(K.one if i == j else K.zero for j in range(n)) for i in range(n))
    elements = [identity]
    seen = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _matmul(K, x, g)
                if y not in seen:
                    seen[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > limit:
                        raise HopfError(f"Matrix group generated by {len(gens)} matrices exceeds {limit} elements")
        frontier = nxt
    return elements


def matrix_group_algebra(field: Field, generators: Sequence[Sequence[Sequence[object]]],
                         name: str = "kG") -> HopfAlgebra:
    """kG for the group generated by the given matrices; ``group_elements`` keeps the matrices."""
    K = field.domain
    elements = matrix_group(field, generators)
    index = {m: i for i, m in enumerate(elements)}
    table = [[index[_matmul(K, a, b)] for b in elements] for a in elements]
    labels = ["1"] + [f"g{i}" for i in range(1, len(elements))]
    return group_algebra(field, table, labels, name=name, elements=elements)
