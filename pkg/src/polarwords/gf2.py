"""Bit-packed linear algebra over GF(2).

A vector of F_2^m is stored as a Python int with coordinate 1 at the most
significant position: coordinate i of an m-dimensional vector sits at bit
(m - i).  With that layout the total order "u > v iff u has a 1 at the first
coordinate where they differ" is plain integer comparison, and the unique
reduced row-echelon basis of a subspace is simply its row ints sorted
descending.  Subspaces are always kept in that canonical form, so equality
of subspaces is equality of tuples.

Everything here is immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GuardError

MAX_DIM = 32  # one machine word; nothing downstream needs more than 2n = 8 or n = 14
ENUM_MAX_AMBIENT = 12


def _check_dim(dim: int) -> None:
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"vector dimension must be in 1..{MAX_DIM}, got {dim}")


@dataclass(frozen=True, slots=True)
class Gf2Vector:
    """An element of F_2^dim, coordinates indexed 1..dim from the left."""

    dim: int
    bits: int

    def __post_init__(self) -> None:
        _check_dim(self.dim)
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"bits 0x{self.bits:x} out of range for dimension {self.dim}")

    @classmethod
    def from_string(cls, text: str) -> "Gf2Vector":
        """Parse a '0'/'1' string, coordinate 1 leftmost."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(len(text), int(text, 2))

    def __str__(self) -> str:
        return format(self.bits, f"0{self.dim}b")

    def coord(self, i: int) -> int:
        """Coefficient of basis vector x_i, i in 1..dim."""
        if not 1 <= i <= self.dim:
            raise ValueError(f"coordinate {i} out of range 1..{self.dim}")
        return (self.bits >> (self.dim - i)) & 1

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.dim + 1) if (self.bits >> (self.dim - i)) & 1)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def alpha(self) -> int:
        """Smallest coordinate in the support; undefined for the zero vector."""
        if self.bits == 0:
            raise ValueError("zero vector has empty support")
        return self.dim - self.bits.bit_length() + 1

    @property
    def beta(self) -> int:
        """Largest coordinate in the support; undefined for the zero vector."""
        if self.bits == 0:
            raise ValueError("zero vector has empty support")
        return self.dim - (self.bits & -self.bits).bit_length() + 1

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return Gf2Vector(self.dim, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0


def order_gt(u: Gf2Vector, v: Gf2Vector) -> bool:
    """Strict total order: u succeeds v iff u has a 1 at the first coordinate
    where they differ.  With the MSB-first layout that is integer comparison."""
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    return u.bits > v.bits


def reduce_rows(rows: Iterable[int]) -> tuple[int, ...]:
    """Fully reduced echelon form of integer rows, sorted descending.

    Works on ints of any width (the polar-space rank computation feeds rows
    far wider than MAX_DIM through here).
    """
    pivots: dict[int, int] = {}  # pivot bit position -> row value
    for b in rows:
        while b:
            p = b.bit_length() - 1
            if p in pivots:
                b ^= pivots[p]
                continue
            # clear existing pivot positions from the new row; each stored row
            # is already reduced, so one pass suffices
            for q in pivots:
                if (b >> q) & 1:
                    b ^= pivots[q]
            # back-substitute the new pivot into the stored rows
            for q, r in pivots.items():
                if (r >> p) & 1:
                    pivots[q] = r ^ b
            pivots[p] = b
            break
    return tuple(pivots[p] for p in sorted(pivots, reverse=True))


def rank_of_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of integer rows, without keeping a reduced basis."""
    pivots: dict[int, int] = {}
    for b in rows:
        while b:
            p = b.bit_length() - 1
            r = pivots.get(p)
            if r is None:
                pivots[p] = b
                break
            b ^= r
    return len(pivots)


def nullspace_of_rows(rows: Iterable[int], width: int) -> tuple[int, ...]:
    """Basis of the right nullspace {v : parity(r & v) = 0 for every row r},
    vectors as width-bit ints.  Deterministic: free positions high to low."""
    red = reduce_rows(rows)
    pivot_set = {r.bit_length() - 1 for r in red}
    basis = []
    for f in range(width - 1, -1, -1):
        if f in pivot_set:
            continue
        v = 1 << f
        for r in red:
            if (r >> f) & 1:
                v |= 1 << (r.bit_length() - 1)
        basis.append(v)
    return tuple(basis)


@dataclass(frozen=True, slots=True)
class Gf2Subspace:
    """A subspace of F_2^ambient_dim held by its reduced echelon basis.

    ``rows`` may be passed as any spanning set of ints; the constructor
    canonicalizes, so two equal subspaces always compare and hash equal.
    An ambient dimension of 0 is allowed (the zero space of F_2^0), which
    keeps coordinate deletion total.
    """

    ambient_dim: int
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not 0 <= self.ambient_dim <= MAX_DIM:
            raise ValueError(f"ambient dimension must be in 0..{MAX_DIM}, got {self.ambient_dim}")
        limit = 1 << self.ambient_dim
        for b in self.rows:
            if not 0 <= b < limit:
                raise ValueError(f"row 0x{b:x} out of range for ambient dimension {self.ambient_dim}")
        object.__setattr__(self, "rows", reduce_rows(self.rows))

    @classmethod
    def from_strings(cls, texts: Iterable[str], ambient_dim: int | None = None) -> "Gf2Subspace":
        """Build from '0'/'1' row strings; ambient_dim is needed only when
        the row list is empty."""
        texts = list(texts)
        if not texts:
            if ambient_dim is None:
                raise ValueError("empty basis needs an explicit ambient dimension")
            return cls(ambient_dim, ())
        dims = {len(t) for t in texts}
        if len(dims) != 1:
            raise ValueError(f"rows of mixed length: {sorted(dims)}")
        dim = dims.pop()
        if ambient_dim is not None and ambient_dim != dim:
            raise ValueError(f"rows have length {dim}, expected {ambient_dim}")
        return cls(dim, tuple(int(t, 2) for t in texts))

    def __str__(self) -> str:
        return ";".join(format(b, f"0{self.ambient_dim}b") for b in self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple[Gf2Vector, ...]:
        return tuple(Gf2Vector(self.ambient_dim, b) for b in self.rows)

    @property
    def support(self) -> int:
        """Union of the row supports, as a bit mask."""
        mask = 0
        for b in self.rows:
            mask |= b
        return mask

    def contains(self, v: Gf2Vector | int) -> bool:
        b = v.bits if isinstance(v, Gf2Vector) else v
        for r in self.rows:
            if b.bit_length() == r.bit_length():
                b ^= r
        return b == 0

    def members(self) -> Iterator[int]:
        """All 2^dim member ints (small spaces only; used by brute-force tests)."""
        k = len(self.rows)
        for mask in range(1 << k):
            acc = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    acc ^= self.rows[i]
                m >>= 1
                i += 1
            yield acc


def canonicalize(vectors: Sequence[Gf2Vector], ambient_dim: int) -> Gf2Subspace:
    """Reduced echelon representation of the span of the given vectors."""
    for v in vectors:
        if v.dim != ambient_dim:
            raise ValueError(f"dimension mismatch: vector has {v.dim}, ambient is {ambient_dim}")
    return Gf2Subspace(ambient_dim, tuple(v.bits for v in vectors))


def rank(vectors: Sequence[Gf2Vector]) -> int:
    """Rank of the span; 0 for an empty list."""
    dims = {v.dim for v in vectors}
    if len(dims) > 1:
        raise ValueError(f"vectors of mixed dimension: {sorted(dims)}")
    return rank_of_rows(v.bits for v in vectors)


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_2^n (the q-binomial at q = 2)."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (k - i)) - 1
    return num // den


def enumerate_subspaces(n: int, dim_filter: int | None = None) -> Iterator[Gf2Subspace]:
    """Every subspace of F_2^n exactly once, canonical, in a fixed order:
    dimension ascending, then lexicographic on the basis row tuple.

    The count is the sum of the Gaussian binomials [n, k]_2, which explodes
    quickly; n is guarded accordingly.
    """
    if not 1 <= n <= ENUM_MAX_AMBIENT:
        raise GuardError(f"enumerate_subspaces supports 1 <= n <= {ENUM_MAX_AMBIENT}, got {n}")
    dims = range(n + 1) if dim_filter is None else [dim_filter]
    for k in dims:
        if not 0 <= k <= n:
            continue
        yield from sorted(_echelon_bases(n, k), key=lambda s: s.rows)


def _echelon_bases(n: int, k: int) -> Iterator[Gf2Subspace]:
    """All reduced echelon bases with k rows in ambient n, one per subspace."""
    if k == 0:
        yield Gf2Subspace(n, ())
        return
    for pivots in combinations(range(n - 1, -1, -1), k):
        # pivots descend: row i leads at bit pivots[i]; free cells are the
        # non-pivot positions strictly below the row's own pivot
        free = [[q for q in range(p - 1, -1, -1) if q not in pivots] for p in pivots]
        rows = [1 << p for p in pivots]
        yield from _fill_free(n, rows, free, 0)


def _fill_free(n: int, rows: list[int], free: list[list[int]], i: int) -> Iterator[Gf2Subspace]:
    if i == len(rows):
        yield Gf2Subspace(n, tuple(rows))
        return
    cells = free[i]
    base = rows[i]
    for mask in range(1 << len(cells)):
        b = base
        m = mask
        j = 0
        while m:
            if m & 1:
                b |= 1 << cells[j]
            m >>= 1
            j += 1
        rows[i] = b
        yield from _fill_free(n, rows, free, i + 1)
    rows[i] = base


def delete_coordinate(space: Gf2Subspace, i: int) -> Gf2Subspace:
    """Strike coordinate i from every basis vector and close the gap.

    When i is outside the support this is injective on the space; in general
    the image is re-canonicalized in ambient dimension n - 1.
    """
    d = space.ambient_dim
    if not 1 <= i <= d:
        raise ValueError(f"coordinate {i} out of range 1..{d}")
    low_mask = (1 << (d - i)) - 1
    rows = tuple(((b >> (d - i + 1)) << (d - i)) | (b & low_mask) for b in space.rows)
    return Gf2Subspace(d - 1, rows)


def insert_zero_coordinate(space: Gf2Subspace, i: int) -> Gf2Subspace:
    """Insert a fresh zero coordinate at position i (old coordinates j >= i
    shift to j + 1).  Inverse of delete_coordinate on its image."""
    d = space.ambient_dim
    if not 1 <= i <= d + 1:
        raise ValueError(f"insertion position {i} out of range 1..{d + 1}")
    low_mask = (1 << (d - i + 1)) - 1
    # a zero column never disturbs echelon structure, so no re-reduction needed
    rows = tuple(((b >> (d - i + 1)) << (d - i + 2)) | (b & low_mask) for b in space.rows)
    return Gf2Subspace(d + 1, rows)
