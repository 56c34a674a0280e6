"""q-extension of the simplex Bernstein basis.

B_{v,n}(x|q) = binom(n, v) prod_i [x_i]_q^{v_i} [1 - |x|]_q^{n - |v|}

The bracketed monomial is read componentwise: every coordinate is bracketed
before it is raised to its power.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from qbernstein.brackets import ExactQ, QParam, q_bracket, q_bracket_exact
from simplex.basis import eval_all, evaluate, float_term
from simplex.errors import DimensionMismatch, InvalidQ
from simplex.multiindex import BasisId, MultiIndex, Scalar, SimplexPoint, enumerate_indices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QBasisId:
    """B_{v,n}(.|q); valid iff |v| <= n."""

    index: MultiIndex
    degree: int
    q: QParam

    def __post_init__(self) -> None:
        # BasisId carries the degree validation
        BasisId(self.index, self.degree)
        object.__setattr__(self, "q", QParam.of(self.q))

    @property
    def basis_id(self) -> BasisId:
        return BasisId(self.index, self.degree)


def q_basis_eval(qid: QBasisId, x: SimplexPoint) -> Scalar:
    """B_{v,n}(x|q); for q = 1 this is ``simplex.basis.evaluate`` itself."""
    if qid.q.classical:
        return evaluate(qid.basis_id, x)
    _check_dim(qid.index.k, x)
    brackets = [q_bracket(float(c), qid.q) for c in x.coords]
    rest_bracket = q_bracket(float(x.complement()), qid.q)
    return _combine(qid.basis_id, brackets, rest_bracket, 1.0)


def q_basis_eval_exact(basis_id: BasisId, x: SimplexPoint, q: ExactQ) -> Fraction:
    """B_{v,n}(x|q) in rational arithmetic; needs an exact point with scale * x_i integral."""
    _check_dim(basis_id.k, x)
    if not x.exact:
        raise InvalidQ(f"exact q-basis needs an exact point, got {x}")
    brackets = [q_bracket_exact(c, q) for c in x.coords]
    rest_bracket = q_bracket_exact(x.complement(), q)
    return _combine(basis_id, brackets, rest_bracket, Fraction(1))


def q_eval_all(k: int, n: int, x: SimplexPoint, q: QParam | float) -> dict[MultiIndex, Scalar]:
    """Every B_{v,n}(x|q) with |v| <= n, in lexicographic order of v."""
    q = QParam.of(q)
    if q.classical:
        return eval_all(k, n, x)
    _check_dim(k, x)
    brackets = [q_bracket(float(c), q) for c in x.coords]
    rest_bracket = q_bracket(float(x.complement()), q)
    return {
        v: _combine(BasisId(v, n), brackets, rest_bracket, 1.0)
        for v in enumerate_indices(k, n)
    }


def q_eval_all_exact(k: int, n: int, x: SimplexPoint, q: ExactQ) -> dict[MultiIndex, Fraction]:
    _check_dim(k, x)
    brackets = [q_bracket_exact(c, q) for c in x.coords]
    rest_bracket = q_bracket_exact(x.complement(), q)
    return {
        v: _combine(BasisId(v, n), brackets, rest_bracket, Fraction(1))
        for v in enumerate_indices(k, n)
    }


def q_limit_check(basis_id: BasisId, x: SimplexPoint, qs: Sequence[float]) -> list[float]:
    """|B_{v,n}(x|q) - B_{v,n}(x)| for each q of a sequence increasing to 1."""
    params = [QParam.of(q) for q in qs]
    if any(a.q >= b.q for a, b in zip(params, params[1:])):
        raise InvalidQ(f"q-sequence must be strictly increasing, got {list(qs)}")
    classical = float(evaluate(basis_id, x))
    gaps = []
    for q in params:
        value = q_basis_eval(QBasisId(basis_id.index, basis_id.degree, q), x)
        gaps.append(abs(float(value) - classical))
        logger.debug("q=%r: |B(x|q) - B(x)| = %.3e", q.q, gaps[-1])
    return gaps


def _combine(basis_id: BasisId, brackets: list, rest_bracket: Scalar, one: Scalar) -> Scalar:
    rest = basis_id.degree - basis_id.index.total()
    if isinstance(one, float):
        factors = zip(brackets, basis_id.index.entries)
        return float_term(basis_id.coefficient(), factors, rest_bracket, rest)
    mono = one
    for b, e in zip(brackets, basis_id.index.entries):
        mono *= b**e
    return basis_id.coefficient() * mono * rest_bracket**rest


def _check_dim(k: int, x: SimplexPoint) -> None:
    if x.k != k:
        raise DimensionMismatch(f"point {x} has dimension {x.k}, expected {k}")
