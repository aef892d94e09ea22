"""Exact linear algebra over GF(2) with certificate extraction.

Elements of {+-1}^n are written additively: a sign vector ``(-1)^v`` becomes
the bit vector ``v mod 2`` and group multiplication becomes XOR.  Vectors are
stored packed in a Python int (coordinate ``i`` is bit ``i``) and the hot
elimination loops live in :mod:`toriented.kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .errors import DimensionMismatchError, ValidationError


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Gf2Vector:
    dim: int
    word: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValidationError(f"dimension must be >= 1, got {self.dim}")
        if self.word < 0 or self.word >> self.dim:
            raise ValidationError(f"word {self.word:#x} does not fit in dimension {self.dim}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Gf2Vector":
        bits = list(bits)
        word = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValidationError(f"coordinate {i} is {b!r}, expected 0 or 1")
            if b:
                word |= 1 << i
        return cls(len(bits), word)

    @classmethod
    def from_ints(cls, coords: Iterable[int]) -> "Gf2Vector":
        """Reduce an integer vector mod 2."""
        return cls.from_bits([c % 2 for c in coords])

    @classmethod
    def zero(cls, dim: int) -> "Gf2Vector":
        return cls(dim, 0)

    @classmethod
    def unit(cls, dim: int, i: int) -> "Gf2Vector":
        return cls(dim, 1 << i)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.word >> i) & 1 for i in range(self.dim))

    def __len__(self):
        return self.dim

    def __getitem__(self, i: int) -> int:
        if not -self.dim <= i < self.dim:
            raise IndexError(i)
        return (self.word >> (i % self.dim)) & 1

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        if not isinstance(other, Gf2Vector):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatchError(f"cannot add dimension {self.dim} and {other.dim}")
        return Gf2Vector(self.dim, self.word ^ other.word)

    __xor__ = __add__

    def is_zero(self) -> bool:
        return self.word == 0

    def weight(self) -> int:
        return bin(self.word).count("1")

    def augment(self, bit: int) -> "Gf2Vector":
        """Append one coordinate."""
        return Gf2Vector(self.dim + 1, self.word | ((bit & 1) << self.dim))

    def __repr__(self):
        return "Gf2Vector(" + "".join(map(str, self.bits)) + ")"


@dataclass(frozen=True)
class Gf2Matrix:
    dim: int
    rows: tuple[Gf2Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for i, r in enumerate(self.rows):
            if r.dim != self.dim:
                raise DimensionMismatchError(
                    f"row {i} has dimension {r.dim}, matrix has dimension {self.dim}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int] | Gf2Vector], dim: int | None = None) -> "Gf2Matrix":
        vecs = [r if isinstance(r, Gf2Vector) else Gf2Vector.from_bits(r) for r in rows]
        if dim is None:
            if not vecs:
                raise ValidationError("dimension required for an empty matrix")
            dim = vecs[0].dim
        return cls(dim, tuple(vecs))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def words(self) -> list[int]:
        return [r.word for r in self.rows]

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def augmented(self, bit: int = 1) -> "Gf2Matrix":
        return Gf2Matrix(self.dim + 1, tuple(r.augment(bit) for r in self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(r.bits) for r in self.rows]


@dataclass(frozen=True)
class OddDependenceWitness:
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(self.indices)))
        if len(self.indices) % 2 != 1:
            raise ValidationError(f"witness must have odd cardinality, got {len(self.indices)}")
        if len(set(self.indices)) != len(self.indices):
            raise ValidationError("witness indices must be distinct")


@dataclass(frozen=True)
class OddBasis:
    basis: tuple[Gf2Vector, ...]
    expansions: tuple[tuple[int, ...], ...]


class RowReduction(NamedTuple):
    rank: int
    pivot_rows: Gf2Matrix
    combinations: tuple[tuple[int, ...], ...]
    pivot_cols: tuple[int, ...]


class _Echelon:
    """Reduced echelon data for a matrix, in insertion order."""

    def __init__(self, m: Gf2Matrix):
        self.dim = m.dim
        self.prows, self.pcols, self.pcombos, self.independent = kernels.echelon(m.words, m.dim)

    def reduce(self, word: int) -> tuple[int, int]:
        return kernels.reduce_vector(self.prows, self.pcols, self.pcombos, word)


def _check_dims(m: Gf2Matrix, target: Gf2Vector | None = None):
    if target is not None and target.dim != m.dim:
        raise DimensionMismatchError(f"target has dimension {target.dim}, matrix has {m.dim}")


def row_reduce(m: Gf2Matrix) -> RowReduction:
    """Reduced row-echelon form with provenance.

    Each pivot sits at the lowest-index nonzero coordinate of its row; rows of
    the result are sorted by pivot coordinate.  ``combinations[j]`` lists the
    original rows whose XOR is pivot row ``j``.
    """
    _check_dims(m)
    ech = _Echelon(m)
    order = sorted(range(len(ech.prows)), key=lambda j: ech.pcols[j])
    rows = tuple(Gf2Vector(m.dim, ech.prows[j]) for j in order)
    combos = tuple(_mask_to_indices(ech.pcombos[j]) for j in order)
    cols = tuple(ech.pcols[j] for j in order)
    return RowReduction(len(rows), Gf2Matrix(m.dim, rows), combos, cols)


def rank(m: Gf2Matrix) -> int:
    return len(kernels.echelon(m.words, m.dim)[0])


def in_span(m: Gf2Matrix, target: Gf2Vector) -> tuple[int, ...] | None:
    """Row indices of ``m`` whose XOR is ``target``, or None if target is outside the row span."""
    _check_dims(m, target)
    residue, combo = _Echelon(m).reduce(target.word)
    if residue:
        return None
    return _mask_to_indices(combo)


def odd_dependence(m: Gf2Matrix) -> OddDependenceWitness | None:
    # (v, 1) rows: an odd subset sums to zero iff (0,...,0,1) is in their span
    aug = m.augmented(1)
    combo = in_span(aug, Gf2Vector.unit(aug.dim, m.dim))
    if combo is None:
        return None
    return OddDependenceWitness(combo)


def find_odd_basis(m: Gf2Matrix) -> OddBasis | None:
    """A basis of GF(2)^n in which every row of ``m`` has odd weight, if one exists.

    The basis is a maximal independent prefix-greedy subset of the rows
    followed by unit vectors on the non-pivot coordinates.
    """
    if odd_dependence(m) is not None:
        return None
    n = m.dim
    ech = _Echelon(m)
    kept = [i for i, ok in enumerate(ech.independent) if ok]
    pivots = set(ech.pcols)
    basis = [m.rows[i] for i in kept]
    basis += [Gf2Vector.unit(n, c) for c in range(n) if c not in pivots]

    bmat = Gf2Matrix(n, tuple(basis))
    bech = _Echelon(bmat)
    expansions = []
    for r in m.rows:
        residue, combo = bech.reduce(r.word)
        assert residue == 0
        expansions.append(_mask_to_indices(combo))
    return OddBasis(tuple(basis), tuple(expansions))


def quotient_representatives(m: Gf2Matrix) -> list[Gf2Vector]:
    """Lexicographically minimal representative of each coset of the row span.

    With pivots at the lowest nonzero coordinate, the representative of a
    coset is its unique element vanishing on every pivot coordinate.
    """
    ech = _Echelon(m)
    pivots = set(ech.pcols)
    free = [c for c in range(m.dim) if c not in pivots]
    reps = []
    for sub in range(1 << len(free)):
        word = 0
        for j, c in enumerate(free):
            if (sub >> j) & 1:
                word |= 1 << c
        reps.append(Gf2Vector(m.dim, word))
    reps.sort(key=lambda v: v.bits)
    return reps


# Independent certificate checks.  Plain coordinate lists, no kernel code.

def _xor_rows(rows: Sequence[Sequence[int]], dim: int) -> list[int]:
    acc = [0] * dim
    for r in rows:
        for i in range(dim):
            acc[i] ^= r[i]
    return acc


def _plain_rank(rows: Sequence[Sequence[int]], dim: int) -> int:
    work = [list(r) for r in rows]
    r = 0
    for col in range(dim):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i][col]:
                work[i] = [a ^ b for a, b in zip(work[i], work[r])]
        r += 1
    return r


def verify_witness(m: Gf2Matrix, w: OddDependenceWitness) -> bool:
    idx = w.indices
    if len(idx) % 2 != 1 or len(set(idx)) != len(idx):
        return False
    if any(not 0 <= i < m.nrows for i in idx):
        return False
    return not any(_xor_rows([m.rows[i].bits for i in idx], m.dim))


def verify_odd_basis(m: Gf2Matrix, b: OddBasis) -> bool:
    n = m.dim
    if len(b.basis) != n or any(v.dim != n for v in b.basis):
        return False
    if _plain_rank([v.bits for v in b.basis], n) != n:
        return False
    if len(b.expansions) != m.nrows:
        return False
    for row, exp in zip(m.rows, b.expansions):
        if len(exp) % 2 != 1 or len(set(exp)) != len(exp):
            return False
        if any(not 0 <= j < n for j in exp):
            return False
        if _xor_rows([b.basis[j].bits for j in exp], n) != list(row.bits):
            return False
    return True
