import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import GF, QQ, isprime
from sympy.polys.matrices import DomainMatrix

from core.exceptions import ShapeMismatch

logger = logging.getLogger(__name__)

Element = Any


@lru_cache(maxsize=None)
def _domain(characteristic: int):
    return QQ if characteristic == 0 else GF(characteristic)


@dataclass(frozen=True)
class Field:
    """The rationals (characteristic 0) or the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.characteristic}")

    @property
    def domain(self):
        return _domain(self.characteristic)

    @property
    def zero(self) -> Element:
        return self.domain.zero

    @property
    def one(self) -> Element:
        return self.domain.one

    def convert(self, value: Any) -> Element:
        """Turn an int, Fraction, "p/q" string or domain element into a field element."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.domain.of_type(value):
            return value
        if QQ.of_type(value):
            value = Fraction(int(QQ.numer(value)), int(QQ.denom(value)))
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, Fraction):
            if self.characteristic == 0:
                return QQ(value.numerator, value.denominator)
            if value.denominator % self.characteristic == 0:
                raise ValueError(f"{value} has no residue modulo {self.characteristic}")
            return self.domain(value.numerator) / self.domain(value.denominator)
        return self.domain.convert(value)

    def to_fraction(self, element: Element) -> Fraction:
        if self.characteristic == 0:
            return Fraction(int(QQ.numer(element)), int(QQ.denom(element)))
        return Fraction(int(element) % self.characteristic)

    def format(self, element: Element) -> str:
        value = self.to_fraction(element)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def elements(self) -> Iterator[Element]:
        if self.characteristic == 0:
            raise ValueError("the rationals cannot be enumerated")
        for value in range(self.characteristic):
            yield self.domain(value)


RATIONALS = Field(0)


@dataclass(frozen=True)
class Matrix:
    """Immutable exact matrix; 0 x m and m x 0 shapes are legal."""

    rows: int
    cols: int
    entries: Tuple[Tuple[Element, ...], ...]
    field: Field = RATIONALS

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ShapeMismatch(f"entry grid does not match the declared shape {self.rows}x{self.cols}")

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, [{self.format_rows()}])"

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = RATIONALS) -> "Matrix":
        zero = field.zero
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)), field)

    @classmethod
    def identity(cls, size: int, field: Field = RATIONALS) -> "Matrix":
        return cls.scalar(size, 1, field)

    @classmethod
    def scalar(cls, size: int, value: Any, field: Field = RATIONALS) -> "Matrix":
        element, zero = field.convert(value), field.zero
        entries = tuple(
            tuple(element if row == col else zero for col in range(size)) for row in range(size)
        )
        return cls(size, size, entries, field)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Any]], field: Field = RATIONALS, cols: Optional[int] = None
    ) -> "Matrix":
        if cols is None:
            if not rows:
                raise ShapeMismatch("the column count of a matrix without rows must be given")
            cols = len(rows[0])
        entries = tuple(tuple(field.convert(value) for value in row) for row in rows)
        return cls(len(rows), cols, entries, field)

    @classmethod
    def column(cls, values: Sequence[Any], field: Field = RATIONALS) -> "Matrix":
        return cls.from_rows([[value] for value in values], field, cols=1)

    @classmethod
    def unit(cls, rows: int, cols: int, row: int, col: int, field: Field = RATIONALS) -> "Matrix":
        values = [[1 if (a, b) == (row, col) else 0 for b in range(cols)] for a in range(rows)]
        return cls.from_rows(values, field, cols=cols)

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix, field: Field) -> "Matrix":
        rows, cols = dm.shape
        return cls(rows, cols, tuple(tuple(row) for row in dm.to_list()), field)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.entries], self.shape, self.field.domain)

    def is_zero(self) -> bool:
        return all(not value for row in self.entries for value in row)

    def __check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")
        if self.field != other.field:
            raise ShapeMismatch(f"fields {self.field} and {other.field} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self.__check_same_shape(other)
        entries = tuple(
            tuple(a + b for a, b in zip(row, other_row, strict=True))
            for row, other_row in zip(self.entries, other.entries, strict=True)
        )
        return Matrix(self.rows, self.cols, entries, self.field)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, value: Any) -> "Matrix":
        factor = self.field.convert(value)
        entries = tuple(tuple(factor * entry for entry in row) for row in self.entries)
        return Matrix(self.rows, self.cols, entries, self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.field != other.field:
            raise ShapeMismatch(f"fields {self.field} and {other.field} differ")
        if self.is_empty or other.is_empty:
            return Matrix.zeros(self.rows, other.cols, self.field)
        product = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return Matrix.from_domain_matrix(product, self.field)

    def transpose(self) -> "Matrix":
        entries = tuple(tuple(self.entries[row][col] for row in range(self.rows)) for col in range(self.cols))
        return Matrix(self.cols, self.rows, entries, self.field)

    def block(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> "Matrix":
        entries = tuple(row[col_start:col_stop] for row in self.entries[row_start:row_stop])
        return Matrix(row_stop - row_start, col_stop - col_start, entries, self.field)

    def column_at(self, index: int) -> "Matrix":
        return self.block(0, self.rows, index, index + 1)

    def flatten(self) -> List[Element]:
        return [value for row in self.entries for value in row]

    def rank(self) -> int:
        if self.is_empty:
            return 0
        return self.to_domain_matrix().rank()

    def det(self) -> Element:
        if not self.is_square:
            raise ShapeMismatch(f"determinant of a non-square {self.shape} matrix")
        if self.rows == 0:
            return self.field.one
        return self.to_domain_matrix().det()

    def is_invertible(self) -> bool:
        return self.is_square and bool(self.det())

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ShapeMismatch(f"inverse of a non-square {self.shape} matrix")
        if self.rows == 0:
            return self
        return Matrix.from_domain_matrix(self.to_domain_matrix().inv(), self.field)

    def convert(self, field: Field) -> "Matrix":
        if field == self.field:
            return self
        values = [[self.field.to_fraction(value) for value in row] for row in self.entries]
        return Matrix.from_rows(values, field, cols=self.cols)

    def format_rows(self) -> str:
        return ";".join(",".join(self.field.format(value) for value in row) for row in self.entries)

    @staticmethod
    def hstack(blocks: Sequence["Matrix"], rows: Optional[int] = None, field: Field = RATIONALS) -> "Matrix":
        if not blocks:
            return Matrix.zeros(rows or 0, 0, field)
        height = blocks[0].rows
        if any(block.rows != height for block in blocks):
            raise ShapeMismatch(f"hstack of blocks with row counts {[b.rows for b in blocks]}")
        entries = tuple(
            tuple(value for block in blocks for value in block.entries[row]) for row in range(height)
        )
        return Matrix(height, sum(block.cols for block in blocks), entries, blocks[0].field)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"], cols: Optional[int] = None, field: Field = RATIONALS) -> "Matrix":
        if not blocks:
            return Matrix.zeros(0, cols or 0, field)
        width = blocks[0].cols
        if any(block.cols != width for block in blocks):
            raise ShapeMismatch(f"vstack of blocks with column counts {[b.cols for b in blocks]}")
        entries = tuple(row for block in blocks for row in block.entries)
        return Matrix(sum(block.rows for block in blocks), width, entries, blocks[0].field)

    @staticmethod
    def block_diagonal(blocks: Sequence["Matrix"], field: Field = RATIONALS) -> "Matrix":
        if blocks:
            field = blocks[0].field
        rows = sum(block.rows for block in blocks)
        cols = sum(block.cols for block in blocks)
        grid = [[field.zero] * cols for _ in range(rows)]
        row_offset = col_offset = 0
        for block in blocks:
            for a, row in enumerate(block.entries):
                grid[row_offset + a][col_offset : col_offset + block.cols] = row
            row_offset += block.rows
            col_offset += block.cols
        return Matrix(rows, cols, tuple(tuple(row) for row in grid), field)


def rank(matrix: Matrix) -> int:
    return matrix.rank()


def _rref(matrix: Matrix) -> Tuple[List[List[Element]], Tuple[int, ...]]:
    reduced, pivots = matrix.to_domain_matrix().rref()
    return reduced.to_list(), tuple(pivots)


def kernel_matrix(matrix: Matrix) -> Matrix:
    """Basis of ker(matrix) as the columns of a cols x k matrix."""
    field, cols = matrix.field, matrix.cols
    if matrix.rows == 0:
        return Matrix.identity(cols, field)
    if cols == 0:
        return Matrix.zeros(0, 0, field)

    reduced, pivots = _rref(matrix)
    free = [col for col in range(cols) if col not in pivots]
    vectors = []
    for free_col in free:
        vector = [field.zero] * cols
        vector[free_col] = field.one
        for row, pivot_col in enumerate(pivots):
            vector[pivot_col] = -reduced[row][free_col]
        vectors.append(vector)
    if not vectors:
        return Matrix.zeros(cols, 0, field)
    return Matrix(len(vectors), cols, tuple(tuple(v) for v in vectors), field).transpose()


def kernel_basis(matrix: Matrix) -> List[Matrix]:
    """Exact basis of ker(matrix) as column vectors; its size is cols - rank."""
    basis = kernel_matrix(matrix)
    return [basis.column_at(index) for index in range(basis.cols)]


def cokernel_projection(matrix: Matrix) -> Matrix:
    """A surjection P from the codomain onto coker(matrix), with P @ matrix = 0.

    The rows of P are a basis of the left kernel of ``matrix``.
    """
    return kernel_matrix(matrix.transpose()).transpose()


def image_basis(matrix: Matrix) -> Matrix:
    """The pivot columns of ``matrix``; they span its image."""
    if matrix.is_empty:
        return Matrix.zeros(matrix.rows, 0, matrix.field)
    _, pivots = _rref(matrix)
    return Matrix.hstack([matrix.column_at(col) for col in pivots], rows=matrix.rows, field=matrix.field)


def solve(matrix: Matrix, rhs: Matrix) -> Optional[Matrix]:
    """One solution X of matrix @ X = rhs, or None when the system is inconsistent."""
    if matrix.rows != rhs.rows:
        raise ShapeMismatch(f"cannot solve {matrix.shape} against {rhs.shape}")
    field = matrix.field
    if matrix.rows == 0 or rhs.cols == 0:
        return Matrix.zeros(matrix.cols, rhs.cols, field)

    augmented = Matrix.hstack([matrix, rhs])
    reduced, pivots = _rref(augmented)
    if any(pivot >= matrix.cols for pivot in pivots):
        return None
    grid = [[field.zero] * rhs.cols for _ in range(matrix.cols)]
    for row, pivot_col in enumerate(pivots):
        grid[pivot_col] = list(reduced[row][matrix.cols :])
    return Matrix(matrix.cols, rhs.cols, tuple(tuple(row) for row in grid), field)


def linear_combination(basis: Sequence[Matrix], coefficients: Sequence[Any]) -> Matrix:
    field = basis[0].field
    total = Matrix.zeros(basis[0].rows, basis[0].cols, field)
    for coefficient, matrix in zip(coefficients, basis, strict=True):
        if coefficient:
            total = total + matrix.scale(coefficient)
    return total


def _structured_points(size: int) -> Iterator[Tuple[int, ...]]:
    for index in range(size):
        yield tuple(1 if j == index else 0 for j in range(size))
    yield (1,) * size
    yield tuple(range(1, size + 1))
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    yield tuple(primes[j % len(primes)] ** (1 + j // len(primes)) for j in range(size))


def _grid_points(size: int, field: Field, degree: int) -> Iterator[Tuple[Any, ...]]:
    # A nonzero polynomial of degree <= d in each variable does not vanish on S^k once |S| > d;
    # the determinant is homogeneous, so the first coordinate can be normalised to 1.
    if field.characteristic == 0 or field.characteristic > degree:
        values: List[Any] = list(range(degree + 1))
        for tail in itertools.product(values, repeat=size - 1):
            yield (1, *tail)
        return
    values = list(range(field.characteristic))
    for lead in range(size):
        for tail in itertools.product(values, repeat=size - lead - 1):
            yield (0,) * lead + (1, *tail)


def generic_invertibility(basis: Sequence[Matrix]) -> bool:
    """True iff some linear combination of ``basis`` is invertible.

    Decided deterministically: a handful of structured points first, then a
    dehomogenised evaluation grid large enough to certify that the
    determinant polynomial vanishes identically.

    Raises:
        ShapeMismatch: The matrices are not square or not of one shape.
    """
    if not basis:
        return False
    size = basis[0].rows
    for matrix in basis:
        if matrix.shape != (size, size):
            raise ShapeMismatch(f"expected {size}x{size} matrices, got {matrix.shape}")
    if size == 0:
        return True

    field = basis[0].field
    for point in _structured_points(len(basis)):
        if linear_combination(basis, point).is_invertible():
            return True

    logger.debug(f"falling back to the full evaluation grid for {len(basis)} matrices of size {size}")
    return any(
        linear_combination(basis, point).is_invertible()
        for point in _grid_points(len(basis), field, size)
    )


def random_matrix(
    rng: np.random.Generator,
    rows: int,
    cols: int,
    field: Field = RATIONALS,
    low: int = -3,
    high: int = 3,
) -> Matrix:
    values = rng.integers(low, high + 1, size=(rows, cols)).tolist()
    return Matrix.from_rows(values, field, cols=cols)


def random_invertible(
    rng: np.random.Generator, size: int, field: Field = RATIONALS, max_tries: int = 200
) -> Matrix:
    for _ in range(max_tries):
        candidate = random_matrix(rng, size, size, field)
        if candidate.is_invertible():
            return candidate
    raise RuntimeError(f"no invertible {size}x{size} matrix found in {max_tries} draws")
