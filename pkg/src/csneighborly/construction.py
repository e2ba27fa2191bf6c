"""The Hadamard construction: parameters, vertex matrix, cs-transform.

Given a Hadamard matrix of order d, set k = floor(sqrt(d)/2), alpha = 1/(2k),
beta = 1/(alpha*d) and A = alpha*H.  The polytope is conv{+-x_1, ..., +-x_m}
with m = 2d, where the vertex representatives x_i are the rows of
X = [I_d; A^T]: the standard basis vectors followed by the scaled Hadamard
columns.  The cs-transform points v_i are the rows of T = [-A; I_d]; the
columns of T span the kernel of (I_d | A), and X^T T = 0 with [X | T] of full
rank is verified exactly at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exact import Matrix, as_scalar, rank
from .hadamard import HadamardMatrix


@dataclass(frozen=True)
class ConstructionParams:
    """Dimension bundle (d, n, m, k) and the exact scale factors alpha, beta."""

    d: int
    n: int
    m: int
    k: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if self.d < 4:
            raise ValueError(f"dimension d={self.d} is below the minimum 4")
        if self.k < 1:
            raise ValueError("neighborliness target k must be at least 1")
        if self.m != self.d + self.n:
            raise ValueError("m must equal d + n")
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        if self.beta != Fraction(1) / (self.alpha * self.d):
            raise ValueError("beta must equal 1/(alpha*d)")
        if self.alpha * self.k > Fraction(1, 2):
            raise ValueError(f"alpha*k = {self.alpha * self.k} exceeds 1/2")
        if self.beta * self.k > Fraction(1, 2):
            raise ValueError(f"beta*k = {self.beta * self.k} exceeds 1/2")
        # window 2k/d <= alpha <= 1/(2k); both ends coincide when d = 4k^2
        if not Fraction(2 * self.k, self.d) <= self.alpha <= Fraction(1, 2 * self.k):
            raise ValueError(
                f"alpha = {self.alpha} outside the window "
                f"[{Fraction(2 * self.k, self.d)}, {Fraction(1, 2 * self.k)}]"
            )


def neighborliness_target(d: int) -> int:
    """k = floor(sqrt(d)/2)."""
    return isqrt(d) // 2


def parameters(d: int, alpha=None) -> ConstructionParams:
    """Parameters for dimension d in the diagonal case n = d.

    The default alpha = 1/(2k) is the canonical choice; any rational alpha
    inside the window 2k/d <= alpha <= 1/(2k) may be supplied instead for
    experimentation.
    """
    if d < 4:
        raise ValueError(f"dimension d={d} is below the minimum 4")
    k = neighborliness_target(d)
    alpha = Fraction(1, 2 * k) if alpha is None else as_scalar(alpha)
    beta = Fraction(1) / (alpha * d)
    return ConstructionParams(d=d, n=d, m=2 * d, k=k, alpha=alpha, beta=beta)


class Construction:
    """One built instance: parameters, Hadamard source, A, T and X.

    Everything is immutable after ``build`` and safe to share across workers.
    """

    __slots__ = ("params", "hadamard", "A", "T", "X", "_vertex_rows")

    def __init__(self, params: ConstructionParams, h: HadamardMatrix,
                 a: Matrix, t: Matrix, x: Matrix):
        self.params = params
        self.hadamard = h
        self.A = a
        self.T = t
        self.X = x
        self._vertex_rows = x.data

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def k(self) -> int:
        return self.params.k

    def vertex_representative(self, index: int, sign: int = 1) -> tuple:
        """Vertex sign*x_index as an exact coordinate tuple."""
        row = self._vertex_rows[index]
        return row if sign > 0 else tuple(-c for c in row)

    def signed_vertices(self) -> tuple:
        """All 2m vertices as ((index, sign), coordinates), representatives first."""
        out = [((i, 1), row) for i, row in enumerate(self._vertex_rows)]
        out += [
            ((i, -1), tuple(-c for c in row))
            for i, row in enumerate(self._vertex_rows)
        ]
        return tuple(out)

    def __repr__(self) -> str:
        return f"Construction(d={self.d}, k={self.k}, alpha={self.params.alpha})"


def build(h: HadamardMatrix, alpha=None, verify: bool = True) -> Construction:
    """Build the construction from a validated Hadamard matrix.

    With verify=True (the default) the cs-transform certificate is checked at
    build time: X^T T = 0 exactly and rank [X | T] = m.
    """
    params = parameters(h.order, alpha=alpha)
    d = params.d
    hm = h.to_matrix()
    a = hm.scale(params.alpha)                      # d x n
    t = (-a).vstack(Matrix.identity(d))             # m x n, rows are v_1..v_m
    x = Matrix.identity(d).vstack(a.transpose())    # m x d, rows are x_1..x_m

    if verify:
        if not (x.transpose() @ t).is_zero():
            raise ValueError("internal error: X^T T != 0")
        if rank(x.hstack(t)) != params.m:
            raise ValueError("internal error: [X | T] is rank deficient")
        if any(abs(v) != params.alpha for row in a.data for v in row):
            raise ValueError("internal error: |A| entries must all equal alpha")
    return Construction(params, h, a, t, x)


def cs_transform_points(con: Construction) -> tuple:
    """The m cs-transform points (rows of T), in order.

    The point set used by the dominance characterization is the centrally
    symmetric closure {+-v_1, ..., +-v_m}; this returns one representative
    per antipodal pair.
    """
    return con.T.data
