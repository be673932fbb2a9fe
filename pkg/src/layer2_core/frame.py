"""Frames and blades: the coordinate atoms of geometric forms."""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Tuple

from src.layer1_settings import ArityError, DimensionError, GradeError, InputValidationError
from src.layer1_settings.constants import DEFAULT_ORIGIN_NAME, MAX_DIMENSION, ORIGIN_INDEX


@dataclass(frozen=True)
class Frame:
    """
    Affine frame (O; v1, ..., vn).

    Index 0 is the origin unit O, index i >= 1 the basis vector vi. Names are
    labels only and take no part in equality.
    """

    n: int
    names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise DimensionError(self.n, MAX_DIMENSION)
        if not 1 <= self.n <= MAX_DIMENSION:
            raise DimensionError(self.n, MAX_DIMENSION)
        if self.names and len(self.names) != self.n + 1:
            raise ArityError("frame names", self.n + 1, len(self.names))

    @property
    def labels(self) -> Tuple[str, ...]:
        """Names of O, v1, ..., vn (defaults when unnamed)."""
        if self.names:
            return self.names
        return (DEFAULT_ORIGIN_NAME,) + tuple(f"v{i}" for i in range(1, self.n + 1))

    @property
    def full_mask(self) -> int:
        return (1 << (self.n + 1)) - 1

    @property
    def full_blade(self) -> "Blade":
        """The blade {0, 1, ..., n} spanning the one-dimensional top grade."""
        return Blade(self.full_mask)

    def check_grade(self, k: int) -> None:
        if not 0 <= k <= self.n + 1:
            raise GradeError(k, f"must lie in [0, {self.n + 1}] for n={self.n}")

    def blades(self, k: int) -> Iterator["Blade"]:
        """All blades of grade k in canonical (lexicographic) order."""
        self.check_grade(k)
        for indices in combinations(range(self.n + 1), k):
            yield Blade.of(indices)

    def vector_blades(self, k: int) -> Iterator["Blade"]:
        """Blades of grade k without the origin index (a basis of V_k)."""
        self.check_grade(k)
        for indices in combinations(range(1, self.n + 1), k):
            yield Blade.of(indices)

    def grade_dimension(self, k: int) -> int:
        """dim F_k = C(n+1, k)."""
        self.check_grade(k)
        return comb(self.n + 1, k)

    def vector_grade_dimension(self, k: int) -> int:
        """dim V_k = C(n, k)."""
        self.check_grade(k)
        return comb(self.n, k)


@dataclass(frozen=True)
class Blade:
    """Sorted index set over {0..n}, stored as a bitset."""

    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> (MAX_DIMENSION + 1):
            raise InputValidationError("blade", f"mask {self.mask} out of range")

    @classmethod
    def of(cls, indices: Iterable[int], n: int = MAX_DIMENSION) -> "Blade":
        """Build a blade from strictly ascending indices in [0, n]."""
        indices = list(indices)
        mask = 0
        previous = -1
        for index in indices:
            if isinstance(index, bool) or not isinstance(index, int):
                raise InputValidationError("blade", f"index {index!r} is not an integer")
            if index <= previous:
                raise InputValidationError("blade", f"indices {indices} are not strictly ascending")
            if index > n:
                raise InputValidationError("blade", f"index {index} exceeds n={n}")
            mask |= 1 << index
            previous = index
        return cls(mask)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def has_origin(self) -> bool:
        return bool(self.mask >> ORIGIN_INDEX & 1)

    def fits(self, frame: Frame) -> bool:
        return self.mask <= frame.full_mask

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Grade first, then lexicographic index order."""
        return (self.grade, self.indices)

    def wedge_sign(self, other: "Blade") -> int:
        """
        Sign of self ^ other relative to the merged blade.

        0 when the index sets intersect; otherwise the parity of the merge
        permutation, counted as inversions (i in self, j in other, i > j).
        """
        if self.mask & other.mask:
            return 0
        inversions = 0
        remaining = other.mask
        while remaining:
            low = remaining & -remaining
            j = low.bit_length() - 1
            inversions += (self.mask >> (j + 1)).bit_count()
            remaining ^= low
        return -1 if inversions & 1 else 1

    def without_origin(self) -> "Blade":
        return Blade(self.mask & ~(1 << ORIGIN_INDEX))

    def __repr__(self) -> str:
        return f"Blade({list(self.indices)})"
