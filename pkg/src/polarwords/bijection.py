"""The inductive dictionary between n-letter words and the subspace family.

Lengths 1 to 3 are fixed base tables.  From length 4 on, a word is classified,
reduced one letter, mapped recursively, and the class-directed subspace
expansion lifts the image back up; the subspace direction runs the same loop
with the roles swapped.  Both directions rely on every expansion having at
most one candidate of the requested class, so any ambiguity or miss is a hard
internal error rather than a silent choice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardError
from .gf2 import Gf2Subspace
from .language import CaseLabel, classify_word, enumerate_words, word_expand, word_reduce
from .nset import classify_subspace, enumerate_N, is_N, subspace_expand, subspace_reduce

VERIFY_MAX_AMBIENT = 7

# Base assignments, words to canonical basis rows.  The displayed generators
# these tables came from are not all reduced (e.g. 23 -> 11/01); what is
# stored here is their canonical form, which is what the equality tests use.
_BASE_ROWS: dict[str, tuple[int, ...]] = {
    "1": (),
    "2": (0b1,),
    "11": (),
    "12": (0b01,),
    "21": (0b10,),
    "22": (0b11,),
    "23": (0b10, 0b01),
    "111": (),
    "121": (0b010,),
    "211": (0b100,),
    "221": (0b110,),
    "231": (0b100, 0b010),
    "112": (0b001,),
    "123": (0b010, 0b001),
    "213": (0b100, 0b001),
    "223": (0b110, 0b001),
    "234": (0b100, 0b010, 0b001),
    "212": (0b101,),
    "222": (0b101, 0b010),
    "232": (0b101, 0b011),
    "122": (0b011,),
    "233": (0b100, 0b011),
}


@dataclass(slots=True)
class BijectionTable:
    """Both directions of the dictionary at one length, as plain dicts."""

    n: int
    forward: dict[str, Gf2Subspace]
    backward: dict[Gf2Subspace, str]


def base_table(n: int) -> BijectionTable:
    """The fixed assignments for n = 1, 2, 3."""
    if not 1 <= n <= 3:
        raise ValueError(f"base tables cover n = 1..3, got {n}")
    forward = {
        word: Gf2Subspace(n, rows) for word, rows in _BASE_ROWS.items() if len(word) == n
    }
    backward = {space: word for word, space in forward.items()}
    return BijectionTable(n, forward, backward)


def word_to_subspace(word: str) -> Gf2Subspace:
    """Map a word to its family member (same length, same class)."""
    label = classify_word(word)
    n = len(word)
    if n <= 3:
        return Gf2Subspace(n, _BASE_ROWS[word])
    _, shorter = word_reduce(word)
    image = word_to_subspace(shorter)
    candidates = subspace_expand(image, label.case)
    if len(candidates) != 1:
        raise RuntimeError(
            f"expansion of {image} for class {label.case} gave {len(candidates)} "
            f"candidates while mapping {word}; the dictionary is broken"
        )
    return candidates[0]


def subspace_to_word(space: Gf2Subspace) -> str:
    """Map a family member to its word; inverse of word_to_subspace."""
    label = classify_subspace(space)  # raises on non-members
    n = space.ambient_dim
    if n <= 3:
        for word, rows in _BASE_ROWS.items():
            if len(word) == n and rows == space.rows:
                return word
        raise RuntimeError(f"family member {space!r} missing from the base table")
    _, reduced = subspace_reduce(space)
    shorter = subspace_to_word(reduced)
    candidates = word_expand(shorter, label.case)
    if len(candidates) != 1:
        raise RuntimeError(
            f"expansion of {shorter!r} for class {label.case} gave {len(candidates)} "
            f"candidates while mapping {space}; the dictionary is broken"
        )
    return candidates[0]


def full_table(n: int) -> BijectionTable:
    """The dictionary at length n, built word by word."""
    forward = {word: word_to_subspace(word) for word in enumerate_words(n)}
    backward = {space: word for word, space in forward.items()}
    return BijectionTable(n, forward, backward)


@dataclass(frozen=True, slots=True)
class BijectionReport:
    """Outcome of the exhaustive check at one length."""

    n: int
    word_count: int
    subspace_count: int
    matched: int
    case_counts: tuple[int, ...]  # per class 1..7, word side
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_bijection(n: int) -> BijectionReport:
    """Exhaustively check that the dictionary at length n is a class-preserving
    bijection with both composites the identity."""
    if not 1 <= n <= VERIFY_MAX_AMBIENT:
        raise GuardError(f"verify_bijection supports 1 <= n <= {VERIFY_MAX_AMBIENT}, got {n}")
    words = enumerate_words(n)
    members = enumerate_N(n)
    failures: list[str] = []
    case_counts = [0] * 7
    seen: dict[Gf2Subspace, str] = {}
    matched = 0
    for word in words:
        label = classify_word(word)
        case_counts[label.case - 1] += 1
        image = word_to_subspace(word)
        if image in seen:
            failures.append(f"collision: {word} and {seen[image]} both map to {image}")
            continue
        seen[image] = word
        if not is_N(image).passes:
            failures.append(f"{word} maps outside the family: {image}")
            continue
        if classify_subspace(image).case != label.case:
            failures.append(
                f"class mismatch: {word} is class {label.case}, "
                f"{image} is class {classify_subspace(image).case}"
            )
            continue
        if subspace_to_word(image) != word:
            failures.append(f"round trip broke: {word} -> {image} -> {subspace_to_word(image)}")
            continue
        matched += 1
    missing = [space for space in members if space not in seen]
    for space in missing[:5]:
        failures.append(f"family member never hit: {space}")
    if n <= 3:
        table = base_table(n)
        for word, space in table.forward.items():
            if word_to_subspace(word) != space:
                failures.append(f"base table disagreement at {word}")
    return BijectionReport(
        n=n,
        word_count=len(words),
        subspace_count=len(members),
        matched=matched,
        case_counts=tuple(case_counts),
        failures=tuple(failures),
    )
