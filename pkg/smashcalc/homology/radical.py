"""Jacobson radical, semisimple quotient and lifted primitive idempotents."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from sympy import Poly, Rational, Symbol

from ..core.algebra import FinDimAlgebra
from ..core.field import Scalar
from ..core.linalg import (
    LinearMap,
    Subspace,
    Vec,
    matrix_from_columns,
    matrix_from_rows,
    nullspace,
    solve_linear,
    vec_add,
    vec_axpy,
    vec_sub,
)
from . import config
from .exceptions import HomologyError

logger = logging.getLogger(__name__)

_t = Symbol("t")


@dataclass
class RadicalData:
    """The radical J of B, the quotient B/J and a complete set of lifted primitive idempotents.

    Attributes:
        algebra: B
        radical: J as a subspace of B
        quotient: the semisimple algebra B/J on the free columns of J
        idempotents: orthogonal primitive idempotents of B summing to 1
        classes: isomorphism class of Bf for each idempotent
        representatives: one idempotent per class
        simple_dims: dimension of the simple top of each class
    """
    algebra: FinDimAlgebra
    radical: Subspace
    quotient: FinDimAlgebra
    idempotents: List[Vec]
    classes: List[int]
    representatives: List[Vec] = field(default_factory=list)
    simple_dims: List[int] = field(default_factory=list)

    @property
    def is_semisimple(self) -> bool:
        return self.radical.dim == 0

    @property
    def is_basic(self) -> bool:
        return all(d == 1 for d in self.simple_dims)


def _trace(op: LinearMap) -> Scalar:
    out = op.field.zero
    for j, col in enumerate(op.cols):
        out += col.get(j, op.field.zero)
    return out


def trace_form_radical(B: FinDimAlgebra) -> Subspace:
    """{x : tr(L_{xy}) = 0 for all y}, checked to be a nilpotent two-sided ideal.

    Raises:
        HomologyError: the trace form kernel is not a nilpotent ideal (possible in positive characteristic)
    """
    F = B.field
    K = F.domain
    traces = [_trace(op) for op in B.left_regular()]
    rows: List[Vec] = []
    for i in range(B.dim):
        row: Vec = {}
        for j in range(B.dim):
            value = F.zero
            for k, c in B.basis_product(i, j).items():
                value += c * traces[k]
            if value:
                row[j] = value
        rows.append(row)
    if any(rows):
        J = Subspace(F, B.dim, nullspace(matrix_from_rows(rows, B.dim, K)))
    else:
        J = Subspace.whole(F, B.dim)
    for g in B.generators():
        for v in J.basis:
            if not J.contains(B.product(g, v)) or not J.contains(B.product(v, g)):
                raise HomologyError(f"Trace form kernel of {B.name} is not an ideal")
    power = J
    for _ in range(B.dim + 1):
        if power.dim == 0:
            break
        power = Subspace(F, B.dim, [B.product(u, v) for u in power.basis for v in J.basis])
    if power.dim:
        raise HomologyError(f"Trace form kernel of {B.name} is not nilpotent")
    logger.debug(f"{B.name}: radical of dimension {J.dim}")
    return J


def semisimple_quotient(B: FinDimAlgebra, J: Subspace) -> FinDimAlgebra:
    """B/J on the basis of free columns of J."""
    n = J.codim
    mul: Dict[Tuple[int, int], Vec] = {}
    for k in range(n):
        for l in range(n):
            v = J.quotient_coordinates(B.product(J.quotient_lift(k), J.quotient_lift(l)))
            if v:
                mul[(k, l)] = v
    labels = [B.labels[j] for j in J.free_columns]
    return FinDimAlgebra(B.field, labels, mul, J.quotient_coordinates(B.unit), name=f"{B.name}/J")


def _corner(Q: FinDimAlgebra, e: Vec) -> Subspace:
    return Subspace(Q.field, Q.dim, [Q.product_all(e, Q.e(i), e) for i in range(Q.dim)])


def _minimal_polynomial(Q: FinDimAlgebra, e: Vec, x: Vec) -> List[Scalar]:
    """Coefficients c_0..c_k of the monic minimal polynomial of x in the corner with unit e."""
    K = Q.field.domain
    powers = [dict(e), dict(x)]
    while True:
        M = matrix_from_columns(powers[:-1], Q.dim, K)
        c = solve_linear(M, powers[-1])
        if c is not None:
            k = len(powers) - 1
            return [-c.get(i, Q.field.zero) for i in range(k)] + [Q.field.one]
        powers.append(Q.product(powers[-1], x))


def _as_poly(Q: FinDimAlgebra, coeffs: List[Scalar]) -> Poly:
    F = Q.field
    expr = 0
    for i, c in enumerate(coeffs):
        fr = F.to_fraction(c)
        expr += Rational(fr.numerator, fr.denominator) * _t ** i
    if F.is_finite:
        return Poly(expr, _t, modulus=F.characteristic)
    return Poly(expr, _t, domain="QQ")


def _evaluate(Q: FinDimAlgebra, p: Poly, x: Vec, unit: Vec) -> Vec:
    """p(x) by Horner, with ``unit`` standing for x^0."""
    F = Q.field
    out: Vec = {}
    for c in p.all_coeffs():
        out = Q.product(out, x)
        vec_axpy(out, F.element(c), unit)
    return out


def _splitting_idempotent(Q: FinDimAlgebra, e: Vec, x: Vec) -> Optional[Vec]:
    """A proper idempotent of the corner eQe read off the minimal polynomial of x, or None."""
    minpoly = _as_poly(Q, _minimal_polynomial(Q, e, x))
    _, factors = minpoly.factor_list()
    if len(factors) < 2:
        return None
    first, mult = factors[0]
    P = first ** mult
    R = minpoly.exquo(P)
    _, t, _ = P.gcdex(R)
    candidate = _evaluate(Q, t * R, x, e)
    if not candidate or candidate == e:
        return None
    return candidate


def _split(Q: FinDimAlgebra, e: Vec) -> List[Vec]:
    corner = _corner(Q, e)
    if corner.dim <= 1:
        return [e]
    candidates = list(corner.basis)
    candidates += [vec_add(a, b) for i, a in enumerate(corner.basis) for b in corner.basis[i + 1:]]
    for x in candidates:
        f = _splitting_idempotent(Q, e, x)
        if f is not None:
            return _split(Q, f) + _split(Q, vec_sub(e, f, Q.field.domain))
    # no candidate splits: the corner is a division algebra
    return [e]


def _lift_idempotents(B: FinDimAlgebra, J: Subspace, quotient_idempotents: List[Vec]) -> List[Vec]:
    K = B.field.domain
    lifted: List[Vec] = []
    taken: Vec = {}
    for q in quotient_idempotents:
        x: Vec = {}
        for k, c in q.items():
            vec_axpy(x, c, J.quotient_lift(k))
        rest = vec_sub(B.unit, taken, K)
        x = B.product_all(rest, x, rest)
        for _ in range(config.IDEMPOTENT_LIFT_STEPS):
            square = B.product(x, x)
            if square == x:
                break
            cube = B.product(square, x)
            x = vec_sub({i: 3 * c for i, c in square.items()}, {i: 2 * c for i, c in cube.items()}, K)
        else:
            raise HomologyError(f"Idempotent lifting in {B.name} did not converge")
        lifted.append(x)
        vec_axpy(taken, B.field.one, x)
    if taken != B.unit:
        raise HomologyError(f"Lifted idempotents of {B.name} do not sum to 1")
    return lifted


def radical_data(B: FinDimAlgebra) -> RadicalData:
    """Radical, semisimple quotient and lifted primitive idempotents of B.

    Raises:
        HomologyError: the radical cannot be found through the trace form, or lifting fails
    """
    J = trace_form_radical(B)
    Q = semisimple_quotient(B, J)
    primitive = _split(Q, Q.unit) if Q.dim else []
    classes: List[int] = []
    reps: List[int] = []
    for i, f in enumerate(primitive):
        for c, r in enumerate(reps):
            g = primitive[r]
            if any(Q.product_all(f, Q.e(k), g) for k in range(Q.dim)):
                classes.append(c)
                break
        else:
            classes.append(len(reps))
            reps.append(i)
    lifted = _lift_idempotents(B, J, primitive)
    simple_dims = [Subspace(Q.field, Q.dim, [Q.product(Q.e(k), primitive[r]) for k in range(Q.dim)]).dim
                   for r in reps]
    logger.debug(f"{B.name}: {len(lifted)} primitive idempotents in {len(reps)} classes, "
                 f"simple dimensions {simple_dims}")
    return RadicalData(algebra=B, radical=J, quotient=Q, idempotents=lifted, classes=classes,
                       representatives=[lifted[r] for r in reps], simple_dims=simple_dims)
