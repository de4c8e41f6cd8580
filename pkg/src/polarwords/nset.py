"""The weight-constrained subspace family and its seven-class stratification.

A subspace V of F_2^n belongs to the family when its reduced echelon basis
v_1 > ... > v_k satisfies, writing alpha/beta for the least/greatest support
coordinate:

  N1  every v_i has weight at most 2;
  N2  along the basis, beta is non-decreasing on the weight-2 vectors;
  N3  if two weight-2 vectors share a beta and a later weight-2 vector has a
      strictly larger beta, that later vector starts past the shared beta;
  N4  no three weight-2 vectors share a beta that a later weight-2 vector
      exceeds.

The family has exactly g(n) members, and splits into seven classes that
mirror the word classes of the language module, coordinate n playing the
role of the last letter.  Classes 1-5 read off directly (coordinate n
untouched / x_n present / coordinate n-1 untouched / x_(n-1) present /
x_(n-1)+x_n present next to another vector reaching coordinate n).  When
x_(n-1)+x_n is the only basis vector touching the last two coordinates, the
rest of the basis W decides between classes 6 and 7: class 7 iff W is a
chain (at most one weight-1 vector and no weight-2 vector, or exactly one
weight-2 vector with every weight-1 vector strictly inside its support
interval).  A basis with endpoints on coordinate n but no x_(n-1)+x_n is
class 6.  That split is forced by the class-by-class counts: under it, and
only under it, every class is exactly as big as the matching word class.

Each class has a reduction to ambient n - 1 and an expansion back; reduction
always lands in the family one level down, and expansion returns at most one
candidate, which makes the word/subspace dictionary deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardError
from .gf2 import Gf2Subspace, delete_coordinate, enumerate_subspaces, insert_zero_coordinate
from .language import CaseLabel

ENUM_MAX_AMBIENT = 8

_X_LAST = 1  # x_n
_X_SECOND = 2  # x_(n-1)
_PAIR = 3  # x_(n-1) + x_n


@dataclass(frozen=True, slots=True)
class NMembershipReport:
    """Outcome of the four-condition membership test.

    ``witnesses`` are 0-based indices into the canonical basis; they name the
    vectors that realize the first violated condition, in basis order.
    """

    subspace: Gf2Subspace
    passes: bool
    violated: str | None = None
    witnesses: tuple[int, ...] = ()


def is_N(space: Gf2Subspace) -> NMembershipReport:
    """Check N1-N4 on the canonical basis, reporting the first violation."""
    d = space.ambient_dim
    for idx, b in enumerate(space.rows):
        if b.bit_count() > 2:
            return NMembershipReport(space, False, "N1", (idx,))
    # the weight-2 subsequence, keeping basis positions
    pairs = [
        (idx, d - (b & -b).bit_length() + 1, d - b.bit_length() + 1)
        for idx, b in enumerate(space.rows)
        if b.bit_count() == 2
    ]
    for (i, bi, _), (j, bj, _) in zip(pairs, pairs[1:]):
        if bi > bj:
            return NMembershipReport(space, False, "N2", (i, j))
    m = len(pairs)
    for a in range(m):
        for b in range(a + 1, m):
            if pairs[a][1] != pairs[b][1]:
                continue
            for c in range(b + 1, m):
                if pairs[c][1] > pairs[a][1] and pairs[c][2] <= pairs[a][1]:
                    return NMembershipReport(
                        space, False, "N3", (pairs[a][0], pairs[b][0], pairs[c][0])
                    )
    for a in range(m):
        for b in range(a + 1, m):
            for c in range(b + 1, m):
                if not pairs[a][1] == pairs[b][1] == pairs[c][1]:
                    continue
                for e in range(c + 1, m):
                    if pairs[e][1] > pairs[a][1]:
                        return NMembershipReport(
                            space,
                            False,
                            "N4",
                            (pairs[a][0], pairs[b][0], pairs[c][0], pairs[e][0]),
                        )
    return NMembershipReport(space, True)


def enumerate_N(n: int) -> list[Gf2Subspace]:
    """All family members in ambient n, by brute-force filtration of every
    subspace, in the fixed enumeration order.  |result| = g(n)."""
    if not 1 <= n <= ENUM_MAX_AMBIENT:
        raise GuardError(f"enumerate_N supports 1 <= n <= {ENUM_MAX_AMBIENT}, got {n}")
    return [space for space in enumerate_subspaces(n) if is_N(space).passes]


def _require_member(space: Gf2Subspace) -> None:
    report = is_N(space)
    if not report.passes:
        raise ValueError(
            f"subspace {space} violates {report.violated} at basis rows {report.witnesses}"
        )


def _is_chain(rows: list[int]) -> bool:
    """Chain shape for the class 6/7 split: at most one unit and no pair, or
    one pair with every unit strictly inside its two support coordinates."""
    pair_rows = [b for b in rows if b.bit_count() == 2]
    units = [b for b in rows if b.bit_count() == 1]
    if not pair_rows:
        return len(units) <= 1
    if len(pair_rows) > 1:
        return False
    pair = pair_rows[0]
    lo = (pair & -pair).bit_length() - 1
    hi = pair.bit_length() - 1
    return all(lo < u.bit_length() - 1 < hi for u in units)


def classify_subspace(space: Gf2Subspace) -> CaseLabel:
    """The unique class of a family member, mirroring classify_word.

    Raises ValueError when the subspace is not in the family.  Ambient
    dimension 1 uses the one-letter convention (zero space -> 1, line -> 2).
    Class 7 carries a subcase describing the top inner coordinate t of the
    support: 'a' when x_t itself is a basis vector, 'b' when a weight-2
    vector ends at t, and no subcase for the bare x_(n-1)+x_n line.
    """
    _require_member(space)
    if space.ambient_dim < 1:
        raise ValueError("classification needs ambient dimension at least 1")
    rows = space.rows
    if space.ambient_dim == 1:
        return CaseLabel(1 if not rows else 2)
    sup = space.support
    if not sup & 1:
        return CaseLabel(1)
    if _X_LAST in rows:
        return CaseLabel(2)
    if not sup & 2:
        return CaseLabel(3)
    if _X_SECOND in rows:
        return CaseLabel(4)
    if _PAIR in rows:
        if any(b != _PAIR and b & 1 for b in rows):
            return CaseLabel(5)
        others = [b for b in rows if b != _PAIR]
        if _is_chain(others):
            return CaseLabel(7, _subcase(rows))
        return CaseLabel(6)
    return CaseLabel(6)


def _subcase(rows: tuple[int, ...]) -> str | None:
    inner = 0
    for b in rows:
        inner |= b
    inner &= ~3
    if not inner:
        return None  # bare pair line, no support below coordinate n-1
    t_bit = inner & -inner  # the largest support coordinate at most n-2
    return "a" if t_bit in rows else "b"


def subspace_reduce(space: Gf2Subspace) -> tuple[CaseLabel, Gf2Subspace]:
    """Class-directed reduction to ambient n - 1; always a family member.

    Classes 1 and 2 strike coordinate n (class 2 first releases x_n); classes
    3-5 strike coordinate n - 1 (after releasing x_(n-1), resp. the pair
    vector); class 6 without the pair vector folds every endpoint on
    coordinate n down onto n - 1; the remaining shapes carry the pair vector
    and rebuild the top inner coordinate:

      - x_t in the basis: trade x_t and the pair for a vector from t to n - 1;
      - one weight-2 vector ending at t: re-point its end to n - 1 and
        release x_t;
      - two weight-2 vectors ending at t: re-point the lower one.
    """
    label = classify_subspace(space)
    n = space.ambient_dim
    if n < 2:
        raise ValueError("reduction needs ambient dimension at least 2")
    rows = space.rows
    if label.case == 1:
        reduced = delete_coordinate(space, n)
    elif label.case == 2:
        reduced = delete_coordinate(_without(space, _X_LAST), n)
    elif label.case == 3:
        reduced = delete_coordinate(space, n - 1)
    elif label.case == 4:
        reduced = delete_coordinate(_without(space, _X_SECOND), n - 1)
    elif label.case == 5:
        reduced = delete_coordinate(_without(space, _PAIR), n - 1)
    elif _PAIR in rows:
        reduced = _reduce_with_pair(space)
    else:
        reduced = _reduce_fold(space)
    assert is_N(reduced).passes, (space, reduced)
    return label, reduced


def _without(space: Gf2Subspace, row: int) -> Gf2Subspace:
    assert row in space.rows
    return Gf2Subspace(space.ambient_dim, tuple(b for b in space.rows if b != row))


def _reduce_fold(space: Gf2Subspace) -> Gf2Subspace:
    # no pair vector in the kernel, so folding n onto n-1 keeps the dimension
    rows = tuple((b ^ _PAIR if b & 1 else b) >> 1 for b in space.rows)
    return Gf2Subspace(space.ambient_dim - 1, rows)


def _reduce_with_pair(space: Gf2Subspace) -> Gf2Subspace:
    n = space.ambient_dim
    rows = [b for b in space.rows if b != _PAIR]
    if not rows:
        return Gf2Subspace(n - 1, (1,))
    # by reducedness and the class-5 exclusion nothing else touches n-1 or n
    assert all(not b & 3 for b in rows), space
    inner = 0
    for b in rows:
        inner |= b
    t_bit = inner & -inner
    if t_bit in rows:
        rest = [b >> 1 for b in rows if b != t_bit]
        return Gf2Subspace(n - 1, tuple(rest) + ((t_bit | 2) >> 1,))
    enders = [b for b in rows if b.bit_count() == 2 and (b & -b) == t_bit]
    assert 1 <= len(enders) <= 2, space
    moved = enders[-1]
    new_rows = [b >> 1 for b in rows if b != moved]
    new_rows.append(((moved ^ t_bit) | 2) >> 1)
    if len(enders) == 1:
        new_rows.append(t_bit >> 1)
    return Gf2Subspace(n - 1, tuple(new_rows))


def subspace_expand(space: Gf2Subspace, target_case: int) -> list[Gf2Subspace]:
    """All family members one coordinate up, of the given class, that reduce
    back to ``space``.  At most one, by construction.

    Classes 1-5 lift by inserting a zero coordinate (at n for 1 and 2, at
    n - 1 for 3-5) and adjoining x_n / x_(n-1) / x_(n-1)+x_n as the class
    demands; classes 6 and 7 share the endpoint surgery of _expand_high and
    are told apart by classifying the result.
    """
    _require_member(space)
    if space.ambient_dim < 1:
        raise ValueError("expansion needs ambient dimension at least 1")
    if not 1 <= target_case <= 7:
        raise ValueError(f"case must be 1..7, got {target_case}")
    n = space.ambient_dim + 1
    if target_case == 1:
        candidates = [insert_zero_coordinate(space, n)]
    elif target_case == 2:
        lifted = insert_zero_coordinate(space, n)
        candidates = [Gf2Subspace(n, lifted.rows + (_X_LAST,))]
    elif target_case in (3, 4, 5):
        lifted = insert_zero_coordinate(space, n - 1)
        extra = {3: (), 4: (_X_SECOND,), 5: (_PAIR,)}[target_case]
        candidates = [Gf2Subspace(n, lifted.rows + extra)]
    else:
        candidates = _expand_high(space)
    out = []
    for cand in candidates:
        if not is_N(cand).passes:
            continue
        if classify_subspace(cand).case != target_case:
            continue
        _, back = subspace_reduce(cand)
        if back == space:
            out.append(cand)
    return out


def _expand_high(space: Gf2Subspace) -> list[Gf2Subspace]:
    """The one candidate shared by classes 6 and 7, or none.

    Inverts the three pair-vector reductions and the endpoint fold: which one
    applies is read off the reduced shape (how many weight-2 vectors end at
    the last coordinate, and what realizes the top remaining coordinate).
    """
    n = space.ambient_dim + 1
    rows = space.rows
    if rows == (1,):
        return [Gf2Subspace(n, (_PAIR,))]
    highs = [b for b in rows if b.bit_count() == 2 and b & 1]
    if len(highs) >= 2:
        new_rows = []
        for b in rows:
            shifted = b << 1
            if b in highs and b != highs[0]:
                shifted ^= _PAIR
            new_rows.append(shifted)
        return [Gf2Subspace(n, tuple(new_rows))]
    if not highs:
        return []
    high = highs[0]
    e_bit = high & ~1
    inner = space.support & ~1
    t_bit = inner & -inner
    others = [b for b in rows if b != high]
    if t_bit == e_bit:
        new_rows = [b << 1 for b in others] + [t_bit << 1, _PAIR]
    elif t_bit in rows:
        new_high = (high << 1) ^ _X_SECOND ^ (t_bit << 1)
        new_rows = [b << 1 for b in others if b != t_bit] + [new_high, _PAIR]
    elif any(b.bit_count() == 2 and (b & -b) == t_bit for b in rows):
        new_high = (high << 1) ^ _X_SECOND ^ (t_bit << 1)
        new_rows = [b << 1 for b in others] + [new_high, _PAIR]
    else:
        return []
    return [Gf2Subspace(n, tuple(new_rows))]
