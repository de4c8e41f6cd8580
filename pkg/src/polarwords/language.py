"""The 4-letter restricted-growth language.

A word is a string over {1,2,3,4} where each letter may exceed the running
maximum of the letters before it by at most one, with an implicit leading 1
(so the first letter is 1 or 2) and a hard cap at 4.  The number of n-letter
words is g(n) = (2^n + 1)(2^(n-1) + 1)/3.

Every word falls in exactly one of seven classes, decided by its last two
letters; the classes come with a reduction to length n - 1 and a matching
expansion, which together drive the recursive count and the dictionary
between words and the weight-constrained subspace family (see nset).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardError, InvalidWordError

LETTERS = "1234"
ENUM_MAX_LENGTH = 14


@dataclass(frozen=True, slots=True)
class CaseLabel:
    """One of the seven classes, plus a subclass tag used on the subspace side."""

    case: int
    subcase: str | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.case <= 7:
            raise ValueError(f"case must be 1..7, got {self.case}")
        if self.subcase is not None and self.subcase not in ("a", "b"):
            raise ValueError(f"subcase must be 'a' or 'b', got {self.subcase!r}")


def g(n: int) -> int:
    """(2^n + 1)(2^(n-1) + 1)/3, the common count of words, subspaces and the
    quotient dimension.  g(0) = 1, which is what the formula gives formally
    and what closes the count recurrence g(n) = 6 g(n-1) - 8 g(n-2) + 1
    at n = 2."""
    if n < 0:
        raise ValueError(f"g is defined for n >= 0, got {n}")
    if n == 0:
        return 1
    return ((2**n + 1) * (2 ** (n - 1) + 1)) // 3


def is_valid(word: str) -> bool:
    """True iff the string is a word of the language (nonempty, letters 1..4,
    growth rule with implicit leading 1)."""
    if not word:
        return False
    running = 1
    for ch in word:
        if ch not in LETTERS:
            return False
        a = int(ch)
        if a > running + 1:
            return False
        if a > running:
            running = a
    return True


def _require_valid(word: str) -> None:
    if not is_valid(word):
        raise InvalidWordError(f"not a word of the language: {word!r}")


def _max_letter(word: str) -> int:
    """Running maximum over the whole word, with the implicit leading 1."""
    return max(1, max((int(c) for c in word), default=1))


def enumerate_words(n: int) -> list[str]:
    """All valid n-letter words in lexicographic order; |result| = g(n)."""
    if not 1 <= n <= ENUM_MAX_LENGTH:
        raise GuardError(f"enumerate_words supports 1 <= n <= {ENUM_MAX_LENGTH}, got {n}")
    out: list[str] = []

    def grow(prefix: list[str], running: int, remaining: int) -> None:
        if remaining == 0:
            out.append("".join(prefix))
            return
        for a in range(1, min(running + 1, 4) + 1):
            prefix.append(str(a))
            grow(prefix, max(running, a), remaining - 1)
            prefix.pop()

    grow([], 1, n)
    return out


def count_words(n: int) -> int:
    """|L_n| by dynamic programming over the running maximum (no enumeration).

    A letter <= m keeps the maximum (m choices), the letter m + 1 raises it,
    and 4 is the ceiling.
    """
    if n < 1:
        raise ValueError(f"count_words needs n >= 1, got {n}")
    counts = {1: 1}
    for _ in range(n):
        nxt = {}
        for m, c in counts.items():
            nxt[m] = nxt.get(m, 0) + c * m
            if m < 4:
                nxt[m + 1] = nxt.get(m + 1, 0) + c
        counts = nxt
    return sum(counts.values())


def _is_terminal(word: str) -> bool:
    """Class 1 or 2 membership: last letter is 1, or tops the running maximum
    of the prefix, or is 4."""
    last = int(word[-1])
    if last == 1 or last == 4:
        return True
    return last == _max_letter(word[:-1]) + 1


def classify_word(word: str) -> CaseLabel:
    """The unique class of a word, testing the seven predicates in order.

    1: last letter 1.            2: last letter tops the prefix maximum, or 4.
    3..6: second-to-last letter is 1/2/3/4 and dropping it leaves a word
          outside classes 1 and 2.
    7: everything else.
    """
    _require_valid(word)
    if len(word) == 1:
        # one-letter convention, matching the base dictionary: 1 -> 1, 2 -> 2
        return CaseLabel(1 if word == "1" else 2)
    last = int(word[-1])
    if last == 1:
        return CaseLabel(1)
    if last == 4 or last == _max_letter(word[:-1]) + 1:
        return CaseLabel(2)
    # here the erased word is automatically valid: a last letter that only the
    # second-to-last letter could license would have been class 2 above
    shorter = word[:-2] + word[-1]
    assert is_valid(shorter), (word, shorter)
    if not _is_terminal(shorter):
        return CaseLabel(int(word[-2]) + 2)
    return CaseLabel(7)


def erase(word: str, i: int) -> str:
    """Drop the i-th letter (1-based).  Partial: raises InvalidWordError when
    the remaining letters break the growth rule."""
    _require_valid(word)
    if not 1 <= i <= len(word):
        raise ValueError(f"letter index {i} out of range 1..{len(word)}")
    shorter = word[: i - 1] + word[i:]
    if not is_valid(shorter):
        raise InvalidWordError(f"erasing letter {i} of {word!r} leaves invalid {shorter!r}")
    return shorter


def word_reduce(word: str) -> tuple[CaseLabel, str]:
    """Class-directed reduction to length n - 1.

    Classes 1, 2 drop the last letter; classes 3..6 drop the second-to-last;
    class 7 drops the last two and appends a 2.  The result is always valid.
    """
    _require_valid(word)
    if len(word) < 2:
        raise ValueError("reduction needs a word of length at least 2")
    label = classify_word(word)
    if label.case in (1, 2):
        shorter = word[:-1]
    elif label.case in (3, 4, 5, 6):
        shorter = word[:-2] + word[-1]
    else:
        shorter = word[:-2] + "2"
    assert is_valid(shorter), (word, shorter)
    return label, shorter


def word_expand(word: str, target_case: int) -> list[str]:
    """All words one letter longer, of the given class, that reduce to
    ``word``.  Always zero or one candidate.

    1: append 1.  2: append the forced top letter.  3..6: insert 1/2/3/4
    before the last letter, when that insertion is legal and the base word is
    outside classes 1 and 2.  7: the base word must end in 2; if everything
    before that 2 is a 1 the image is base + '22' (the one extra word of the
    recurrence), and if the prefix maximum is exactly 2 it is prefix + '33'.
    """
    _require_valid(word)
    if not 1 <= target_case <= 7:
        raise ValueError(f"case must be 1..7, got {target_case}")
    if target_case == 1:
        return [word + "1"]
    if target_case == 2:
        return [word + str(min(_max_letter(word) + 1, 4))]
    if target_case <= 6:
        if _is_terminal(word):
            return []
        candidate = word[:-1] + str(target_case - 2) + word[-1]
        return [candidate] if is_valid(candidate) else []
    if word[-1] != "2":
        return []
    head = word[:-1]
    if set(head) <= {"1"}:
        return [head + "22"]
    if _max_letter(head) == 2:
        return [head + "33"]
    return []
