"""Matrix Lie superalgebras as functors of points.

For a matrix family ``g`` (gl, sl, or osp) and a coefficient algebra ``A``,
the A-points ``g(A)`` are the *even* supermatrices satisfying the family's
linear conditions:

* ``gl(m|n)``: evenness only;
* ``sl(m|n)``: supertrace zero;
* ``osp(m|n)`` (n even): ``st(X) F + F X = 0`` with ``F = diag(1_m, J_n)``.

The bracket of points is the plain matrix commutator.  The underlying complex
vector space V has a distinguished homogeneous basis (computed once per family
by exact nullspace, even vectors first), and elements of ``g(A)`` can be moved
between their matrix form and their "sum of coefficient-tensor-basis-vector"
form.  The sign rules of that tensor form are checked against the matrix
commutator by :func:`even_rules_consistency`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import linalg
from .algebra import AlgebraSignature, EVEN, ODD, SuperNumber, key_parity
from .matrices import (
    SuperMatrix, const_mul, mul_const, osp_form_grid, supertranspose, supertrace,
    tensor_term, zero_matrix,
)
from .scalars import GaussianRational, MINUS_ONE, ONE, ZERO

GL, SL, OSP = "gl", "sl", "osp"


class MembershipError(ValueError):
    """Raised when a matrix does not belong to the claimed Lie superalgebra."""


@dataclass(frozen=True)
class MatrixKind:
    """A matrix Lie superalgebra family instance: (family, block sizes m, n)."""

    family: str
    m: int
    n: int

    def __post_init__(self):
        if self.family not in (GL, SL, OSP):
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 0 or self.n < 0 or self.m + self.n == 0:
            raise ValueError("block sizes must be non-negative and not both zero")
        if self.family == OSP and self.n % 2:
            raise ValueError("the odd block of an orthosymplectic family must have even size")

    @property
    def size(self) -> int:
        return self.m + self.n

    def display(self) -> str:
        return f"{self.family}({self.m}|{self.n})"


@dataclass(frozen=True)
class BasisVector:
    index: int
    parity: int  # EVEN or ODD
    grid: Tuple[Tuple[GaussianRational, ...], ...]

    def grid_rows(self) -> List[List[GaussianRational]]:
        return [list(r) for r in self.grid]


# ---------------------------------------------------------------------------
# homogeneous basis of the underlying space
# ---------------------------------------------------------------------------

def _even_slots(m: int, n: int) -> List[Tuple[int, int]]:
    """Diagonal-block positions, upper block row-major then lower block."""
    slots = [(i, j) for i in range(m) for j in range(m)]
    slots += [(m + i, m + j) for i in range(n) for j in range(n)]
    return slots


def _odd_slots(m: int, n: int) -> List[Tuple[int, int]]:
    """Off-diagonal positions, upper-right block row-major then lower-left."""
    slots = [(i, m + j) for i in range(m) for j in range(n)]
    slots += [(m + i, j) for i in range(n) for j in range(m)]
    return slots


def _grid_from_coords(slots, coords, size) -> Tuple[Tuple[GaussianRational, ...], ...]:
    grid = [[ZERO] * size for _ in range(size)]
    for (i, j), c in zip(slots, coords):
        grid[i][j] = c
    return tuple(tuple(row) for row in grid)


def _st_grid(grid, m: int, n: int) -> List[List[GaussianRational]]:
    """Supertranspose of a constant grid (same block convention as matrices)."""
    size = m + n
    out = [[ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            c = grid[i][j]
            if c.is_zero():
                continue
            if (i < m) == (j < m):
                out[j][i] = c
            elif i < m:
                out[j][i] = c
            else:
                out[j][i] = -c
    return out


def _constraint_rows(kind: MatrixKind, slots, parity) -> List[List[GaussianRational]]:
    """Linear conditions on the coordinates in ``slots`` for membership."""
    m, n, size = kind.m, kind.n, kind.size
    count = len(slots)
    if kind.family == GL:
        return [[ZERO] * count]
    if kind.family == SL:
        if parity == ODD:
            return [[ZERO] * count]
        row = []
        for (i, j) in slots:
            if i != j:
                row.append(ZERO)
            else:
                row.append(ONE if i < m else MINUS_ONE)
        return [row]
    # osp: st(U) F + F U = 0 entrywise, one column per unit grid
    form = osp_form_grid(m, n)
    columns = []
    for (i, j) in slots:
        unit = [[ZERO] * size for _ in range(size)]
        unit[i][j] = ONE
        left = linalg.mat_mul(_st_grid(unit, m, n), form)
        right = linalg.mat_mul(form, unit)
        total = [[left[a][b] + right[a][b] for b in range(size)] for a in range(size)]
        columns.append([total[a][b] for a in range(size) for b in range(size)])
    return [[columns[c][r] for c in range(count)] for r in range(size * size)]


_BASIS_CACHE: Dict[MatrixKind, List[BasisVector]] = {}


def basis_of(kind: MatrixKind) -> List[BasisVector]:
    """Homogeneous basis of the underlying space, even vectors first.

    The coordinate order (diagonal blocks row-major, then upper-right block,
    then lower-left block) together with the nullspace's free-variable
    convention makes the basis canonical and reproducible.
    """
    cached = _BASIS_CACHE.get(kind)
    if cached is not None:
        return cached
    size = kind.size
    vectors: List[BasisVector] = []
    for parity, slots in ((EVEN, _even_slots(kind.m, kind.n)), (ODD, _odd_slots(kind.m, kind.n))):
        if not slots:
            continue
        for coords in linalg.nullspace(_constraint_rows(kind, slots, parity)):
            vectors.append(BasisVector(len(vectors), parity, _grid_from_coords(slots, coords, size)))
    expected = _expected_dims(kind)
    got = (sum(1 for v in vectors if v.parity == EVEN), sum(1 for v in vectors if v.parity == ODD))
    if expected != got:
        raise AssertionError(f"basis dimension mismatch for {kind.display()}: expected {expected}, got {got}")
    _BASIS_CACHE[kind] = vectors
    return vectors


def _expected_dims(kind: MatrixKind) -> Tuple[int, int]:
    m, n = kind.m, kind.n
    if kind.family == GL:
        return (m * m + n * n, 2 * m * n)
    if kind.family == SL:
        return (m * m + n * n - 1, 2 * m * n)
    h = n // 2
    return (m * (m - 1) // 2 + h * (2 * h + 1), m * n)


def dimension(kind: MatrixKind) -> Tuple[int, int]:
    basis = basis_of(kind)
    return (sum(1 for v in basis if v.parity == EVEN), sum(1 for v in basis if v.parity == ODD))


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def membership_defect(kind: MatrixKind, x: SuperMatrix) -> Optional[str]:
    """``None`` if ``x`` is a point of the family, else a short description."""
    if (x.m, x.n) != (kind.m, kind.n):
        return "shape mismatch"
    if not x.is_even_matrix():
        return "matrix is not even"
    if kind.family == SL:
        tr = supertrace(x)
        if not tr.is_zero():
            return "supertrace is nonzero"
    elif kind.family == OSP:
        form = osp_form_grid(kind.m, kind.n)
        defect = mul_const(supertranspose(x), form) + const_mul(form, x)
        if not defect.is_zero():
            return "does not infinitesimally preserve the orthosymplectic form"
    return None


def contains(kind: MatrixKind, x: SuperMatrix) -> bool:
    return membership_defect(kind, x) is None


def require_member(kind: MatrixKind, x: SuperMatrix):
    defect = membership_defect(kind, x)
    if defect is not None:
        raise MembershipError(f"not a point of {kind.display()}: {defect}")


# ---------------------------------------------------------------------------
# structure constants and the tensor form
# ---------------------------------------------------------------------------

_STRUCTURE_CACHE: Dict[MatrixKind, Dict[Tuple[int, int], List[Tuple[int, GaussianRational]]]] = {}


def _flatten(grid) -> List[GaussianRational]:
    return [grid[i][j] for i in range(len(grid)) for j in range(len(grid))]


def decompose_in_basis(kind: MatrixKind, grid, parity) -> Optional[List[Tuple[int, GaussianRational]]]:
    """Write a constant grid in the basis vectors of one parity, or ``None``.

    Returns ``[(basis_index, coefficient), ...]`` with zero coefficients
    dropped; ``None`` means the grid is not in the span (i.e. not a member).
    """
    basis = [v for v in basis_of(kind) if v.parity == parity]
    if not basis:
        return None if any(not c.is_zero() for c in _flatten(grid)) else []
    columns = [_flatten(v.grid) for v in basis]
    matrix = [[columns[c][r] for c in range(len(basis))] for r in range(len(columns[0]))]
    solution = linalg.solve(matrix, _flatten(grid))
    if solution is None:
        return None
    return [(basis[c].index, coeff) for c, coeff in enumerate(solution) if not coeff.is_zero()]


def vector_bracket(kind: MatrixKind, i: int, j: int) -> List[Tuple[int, GaussianRational]]:
    """Structure constants of the basis bracket ``[v_i, v_j]``.

    On constant basis grids the bracket is ``(-1)^{|v_i||v_j|} v_i v_j - v_j v_i``
    (for odd-odd pairs this is minus the anticommutator) — the unique choice
    that makes the tensor-form bracket agree entrywise with the matrix
    commutator of points; see :func:`even_rules_bracket`.
    """
    table = _STRUCTURE_CACHE.setdefault(kind, {})
    hit = table.get((i, j))
    if hit is not None:
        return hit
    basis = basis_of(kind)
    vi, vj = basis[i], basis[j]
    left = linalg.mat_mul(vi.grid_rows(), vj.grid_rows())
    right = linalg.mat_mul(vj.grid_rows(), vi.grid_rows())
    sign = MINUS_ONE if (vi.parity and vj.parity) else ONE
    combined = [
        [sign * left[a][b] - right[a][b] for b in range(kind.size)]
        for a in range(kind.size)
    ]
    parity = (vi.parity + vj.parity) & 1
    decomposition = decompose_in_basis(kind, combined, parity)
    if decomposition is None:
        raise AssertionError("bracket of basis vectors left the algebra — broken basis")
    table[(i, j)] = decomposition
    return decomposition


class TensorElement:
    """An element of ``g(A)`` in the form ``sum_i  c_i (tensor) v_i``.

    Coefficients must match the parity of their basis vector (that is what
    makes the matrix even).  Addition, scaling, and the sign-rule bracket are
    provided; :func:`matrix_of` and :func:`tensor_of` convert to and from the
    matrix picture.
    """

    __slots__ = ("kind", "sig", "coeffs")

    def __init__(self, kind: MatrixKind, sig: AlgebraSignature, coeffs: Dict[int, SuperNumber], check: bool = True):
        self.kind = kind
        self.sig = sig
        self.coeffs = {i: c for i, c in coeffs.items() if not c.is_zero()}
        if check:
            basis = basis_of(kind)
            for i, c in self.coeffs.items():
                if c.sig != sig:
                    raise ValueError("coefficient from a different algebra")
                ok = c.is_even() if basis[i].parity == EVEN else c.is_odd()
                if not ok:
                    raise ValueError(f"coefficient of basis vector {i} must have parity {basis[i].parity}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.kind != other.kind or self.sig != other.sig:
            raise ValueError("mixing tensor elements of different types")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = out.get(i)
            out[i] = c if s is None else s + c
        return TensorElement(self.kind, self.sig, out, check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.kind == other.kind and self.sig == other.sig and self.coeffs == other.coeffs

    def __repr__(self):
        items = ", ".join(f"v{i}: {c!r}" for i, c in sorted(self.coeffs.items()))
        return f"TensorElement({self.kind.display()}, {{{items}}})"


def matrix_of(t: TensorElement) -> SuperMatrix:
    basis = basis_of(t.kind)
    acc = zero_matrix(t.kind.m, t.kind.n, t.sig)
    for i, c in t.coeffs.items():
        acc = acc + tensor_term(c, basis[i].grid_rows(), t.kind.m, t.kind.n)
    return acc


def tensor_of(kind: MatrixKind, x: SuperMatrix) -> TensorElement:
    """Decompose a point into tensor form (raises MembershipError if impossible)."""
    require_member(kind, x)
    keys = sorted({k for row in x.rows for e in row for k, _ in e.items()})
    coeffs: Dict[int, SuperNumber] = {}
    for key in keys:
        grid = [[e.coefficient(key) for e in row] for row in x.rows]
        decomposition = decompose_in_basis(kind, grid, key_parity(key))
        if decomposition is None:
            raise MembershipError("matrix does not decompose over the basis")
        for index, coeff in decomposition:
            term = SuperNumber(x.sig, {key: coeff})
            cur = coeffs.get(index)
            coeffs[index] = term if cur is None else cur + term
    return TensorElement(kind, x.sig, coeffs)


def even_rules_bracket(t1: TensorElement, t2: TensorElement) -> TensorElement:
    """Bracket in tensor form: ``[a (x) v, b (x) w] = (-1)^{|v||b|} ab (x) [v, w]``.

    With parity-homogeneous coefficients (|b| = |w|), the sign only depends on
    the basis parities.  Agreement of this formula with the matrix commutator
    is exactly the sign-rule consistency the test suite checks.
    """
    if t1.kind != t2.kind or t1.sig != t2.sig:
        raise ValueError("mixing tensor elements of different types")
    kind, sig = t1.kind, t1.sig
    basis = basis_of(kind)
    out: Dict[int, SuperNumber] = {}
    for i, a in t1.coeffs.items():
        pi = basis[i].parity
        for j, b in t2.coeffs.items():
            pj = basis[j].parity
            ab = a * b
            if ab.is_zero():
                continue
            if pi and pj:
                ab = -ab
            for k, coeff in vector_bracket(kind, i, j):
                term = ab.scaled(coeff)
                cur = out.get(k)
                out[k] = term if cur is None else cur + term
    return TensorElement(kind, sig, out, check=False)


def bracket(kind: MatrixKind, x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """Commutator of two points (checked to stay in the family)."""
    require_member(kind, x)
    require_member(kind, y)
    z = x * y - y * x
    require_member(MatrixKind(GL, kind.m, kind.n) if kind.family == GL else kind, z)
    return z
