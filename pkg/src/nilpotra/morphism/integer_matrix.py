"""Integer matrices acting on the abelianization Z^n."""

import random
from math import gcd
from typing import List, Sequence

from sympy import ImmutableMatrix, Matrix, eye

from nilpotra.errors import NotAnAutomorphismError, PreconditionError

IntegerMatrix = ImmutableMatrix


def is_unimodular(m: Matrix) -> bool:
    """True iff ``m`` is square with determinant 1 or -1."""
    return m.rows == m.cols and m.det() in (1, -1)


def integer_inverse(m: Matrix) -> IntegerMatrix:
    """Exact inverse of a matrix in GL_n(Z)."""
    if not is_unimodular(m):
        raise NotAnAutomorphismError(f"determinant {m.det()} is not a unit")
    inverse = m.inv()
    if not all(entry.is_integer for entry in inverse):
        raise NotAnAutomorphismError("inverse is not integral")  # pragma: no cover
    return ImmutableMatrix(inverse)


def complete_unimodular(column: Sequence[int]) -> IntegerMatrix:
    """A matrix of determinant +-1 whose first column is ``column``.

    Integer row operations bring the column to e_1; the inverse of the
    accumulated operations then has ``column`` as its first column.
    """
    v: List[int] = [int(x) for x in column]
    n = len(v)
    if n == 0 or gcd(*v) != 1:
        raise PreconditionError(f"{v} is not a unimodular row")
    ops = eye(n)
    while sum(1 for x in v if x) > 1:
        pivot = min((i for i in range(n) if v[i]), key=lambda i: abs(v[i]))
        for j in range(n):
            if j != pivot and v[j]:
                q = v[j] // v[pivot]
                v[j] -= q * v[pivot]
                ops = ops.elementary_row_op("n->n+km", row=j, k=-q, row2=pivot)
    last = next(i for i in range(n) if v[i])
    if last != 0:
        v[0], v[last] = v[last], v[0]
        ops = ops.elementary_row_op("n<->m", row1=0, row2=last)
    if v[0] == -1:
        ops = ops.elementary_row_op("n->kn", row=0, k=-1)
    return integer_inverse(ops)


def random_unimodular(n: int, rng: random.Random, steps: int = 0) -> IntegerMatrix:
    """A random element of GL_n(Z) built from elementary operations."""
    m = eye(n)
    for _ in range(steps or 3 * n):
        move = rng.random()
        i = rng.randrange(n)
        if n > 1 and move < 0.7:
            j = rng.choice([k for k in range(n) if k != i])
            m = m.elementary_row_op("n->n+km", row=i, k=rng.choice((-2, -1, 1, 2)), row2=j)
        elif n > 1 and move < 0.85:
            j = rng.choice([k for k in range(n) if k != i])
            m = m.elementary_row_op("n<->m", row1=i, row2=j)
        else:
            m = m.elementary_row_op("n->kn", row=i, k=-1)
    return ImmutableMatrix(m)
