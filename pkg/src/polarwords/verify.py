"""Cross-checks tying the three counting worlds to each other and to g(n).

Every check recomputes its numbers from scratch and compares them against a
closed form or a table frozen after a one-time computation.  Reports carry
no timing or environment data, so repeated runs (under any thread count)
emit byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bijection import verify_bijection
from .gf2 import Gf2Subspace
from .language import classify_word, count_words, enumerate_words, g
from .nset import classify_subspace, enumerate_N
from .polarspace import build_geometry, quotient_basis, strata, udim

G_FIRST_SIX = (2, 5, 15, 51, 187, 715)

# the 4-letter language split by class, in enumeration (lexicographic) order
WORD_CASES_4 = {
    1: ("1111", "1121", "1211", "1221", "1231", "2111", "2121", "2131",
        "2211", "2221", "2231", "2311", "2321", "2331", "2341"),
    2: ("1112", "1123", "1213", "1223", "1234", "2113", "2123", "2134",
        "2213", "2223", "2234", "2314", "2324", "2334", "2344"),
    3: ("1212", "2112", "2212", "2312", "2313"),
    4: ("1222", "2122", "2222", "2322", "2323"),
    5: ("1232", "2132", "2232", "2332", "2333"),
    6: ("2342", "2343"),
    7: ("1122", "1233", "2133", "2233"),
}

# the rank-2 geometry is the classical Cremona-Richmond 15_3 configuration;
# one standard coordinate presentation, matched label-independently
CREMONA_POINTS = {
    "A": ("0001", "0010"),
    "B": ("0001", "1000"),
    "C": ("0001", "1010"),
    "D": ("0010", "0100"),
    "E": ("0010", "0101"),
    "F": ("0100", "1000"),
    "G": ("0100", "1010"),
    "H": ("0101", "1000"),
    "I": ("0101", "1010"),
    "J": ("0110", "1001"),
    "K": ("0011", "1100"),
    "L": ("0011", "1101"),
    "M": ("0110", "1011"),
    "N": ("0111", "1011"),
    "O": ("0111", "1001"),
}
CREMONA_LINES = (
    "ABC", "AKL", "DAE", "DGF", "EIH", "JDM", "EON", "BHF",
    "JBO", "CGI", "CMN", "FNK", "MHL", "GOL", "JIK",
)

POINT_LINE_COUNTS = {1: (3, 1), 2: (15, 15), 3: (135, 315), 4: (2295, 11475)}


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    ok: bool
    details: str


@lru_cache(maxsize=None)
def _words(n: int) -> tuple[str, ...]:
    return tuple(enumerate_words(n))


@lru_cache(maxsize=None)
def _family(n: int) -> tuple[Gf2Subspace, ...]:
    return tuple(enumerate_N(n))


@lru_cache(maxsize=None)
def _word_case_counts(n: int) -> tuple[int, ...]:
    counts = [0] * 7
    for word in _words(n):
        counts[classify_word(word).case - 1] += 1
    return tuple(counts)


def check_g_sequence() -> CheckResult:
    got = tuple(g(n) for n in range(1, 7))
    return CheckResult(
        "g-sequence",
        got == G_FIRST_SIX,
        "g(1..6) = " + ", ".join(map(str, got)),
    )


def check_language_counts(fast: bool = False) -> CheckResult:
    enum_top = 8 if fast else 10
    bad = []
    for n in range(1, 13):
        if count_words(n) != g(n):
            bad.append(f"count_words({n}) = {count_words(n)} != g = {g(n)}")
    for n in range(1, enum_top + 1):
        if len(_words(n)) != g(n):
            bad.append(f"|words({n})| = {len(_words(n))} != g = {g(n)}")
    details = f"recurrence counts match g to n = 12, enumerations to n = {enum_top}"
    return CheckResult("language-counts", not bad, details if not bad else "; ".join(bad))


def check_case_tables(fast: bool = False) -> CheckResult:
    top = 8 if fast else 10
    bad = []
    table: dict[int, list[str]] = {case: [] for case in range(1, 8)}
    for word in _words(4):
        table[classify_word(word).case].append(word)
    for case in range(1, 8):
        if tuple(table[case]) != WORD_CASES_4[case]:
            bad.append(f"class {case} members differ at n = 4")
    for n in range(3, top + 1):
        c = _word_case_counts(n)
        if not c[0] == c[1] == g(n - 1):
            bad.append(f"n = {n}: classes 1, 2 are {c[0]}, {c[1]}, expected g(n-1)")
        if not c[2] == c[3] == c[4] == g(n - 1) - 2 * g(n - 2):
            bad.append(f"n = {n}: classes 3-5 are {c[2:5]}, expected g(n-1) - 2 g(n-2)")
        if c[5] + c[6] != sum(_word_case_counts(n - 1)[2:]) + 1:
            bad.append(f"n = {n}: classes 6 + 7 miss the shortening recurrence")
    sizes = tuple(len(table[case]) for case in range(1, 8))
    details = f"n = 4 class sizes {sizes}; class-count identities hold for n = 3..{top}"
    return CheckResult("case-tables", not bad, details if not bad else "; ".join(bad))


def check_family_counts(fast: bool = False) -> CheckResult:
    top = 6 if fast else 8
    bad = [
        f"|family({n})| = {len(_family(n))} != g = {g(n)}"
        for n in range(1, top + 1)
        if len(_family(n)) != g(n)
    ]
    details = f"brute-force family sizes match g for n = 1..{top}"
    return CheckResult("family-counts", not bad, details if not bad else "; ".join(bad))


def check_case_partition(fast: bool = False) -> CheckResult:
    top = 6 if fast else 8
    bad = []
    for n in range(2, top + 1):
        counts = [0] * 7
        for space in _family(n):
            counts[classify_subspace(space).case - 1] += 1
        if sum(counts) != len(_family(n)):
            bad.append(f"n = {n}: classification is not a partition")
        if tuple(counts) != _word_case_counts(n):
            bad.append(
                f"n = {n}: subspace classes {tuple(counts)} != word classes "
                f"{_word_case_counts(n)}"
            )
    details = f"subspace class sizes equal word class sizes for n = 2..{top}"
    return CheckResult("case-partition", not bad, details if not bad else "; ".join(bad))


def _cremona_mismatch() -> str | None:
    geometry = build_geometry(2)
    table = {
        label: Gf2Subspace.from_strings(pair)
        for label, pair in CREMONA_POINTS.items()
    }
    if set(table.values()) != set(geometry.points):
        return "rank-2 points differ from the Cremona-Richmond table"
    got = {
        frozenset(geometry.points[i] for i in triple)
        for triple in geometry.incidence
    }
    want = {frozenset(table[ch] for ch in word) for word in CREMONA_LINES}
    if got != want:
        return "rank-2 lines differ from the Cremona-Richmond triples"
    return None


def check_polar_dimensions(fast: bool = False) -> CheckResult:
    top = 3 if fast else 4
    bad = []
    dims = []
    for n in range(1, top + 1):
        geometry = build_geometry(n)
        counts = (len(geometry.points), len(geometry.lines))
        if counts != POINT_LINE_COUNTS[n]:
            bad.append(f"n = {n}: point/line counts {counts} != {POINT_LINE_COUNTS[n]}")
        d = udim(n)
        dims.append(d)
        if d != g(n):
            bad.append(f"n = {n}: udim = {d} != g = {g(n)}")
    mismatch = _cremona_mismatch()
    if mismatch:
        bad.append(mismatch)
    details = (
        f"udim(1..{top}) = {', '.join(map(str, dims))}; point/line counts match; "
        "rank 2 is the Cremona-Richmond configuration"
    )
    return CheckResult("polar-dimensions", not bad, details if not bad else "; ".join(bad))


def check_strata(fast: bool = False) -> CheckResult:
    del fast  # a full pass is already cheap
    bad = []
    for n in (2, 3):
        size = len(build_geometry(n).points)
        for base in range(size):
            try:
                report = strata(n, base)
            except RuntimeError as err:
                bad.append(str(err))
                continue
            if sum(len(s) for s in report.strata) != size:
                bad.append(f"n = {n}, base {base}: strata do not cover the points")
            if n == 2 and tuple(len(s) for s in report.strata) != (1, 6, 8):
                bad.append(f"n = {n}, base {base}: stratum sizes are off")
    details = "line and component facts hold at every base point for n = 2, 3"
    return CheckResult("strata-facts", not bad, details if not bad else "; ".join(bad[:5]))


def check_bijection(fast: bool = False) -> CheckResult:
    top = 5 if fast else 7
    bad = []
    matched = []
    for n in range(1, top + 1):
        report = verify_bijection(n)
        matched.append(f"{report.matched}/{report.word_count}")
        if not report.ok:
            bad.extend(report.failures[:3])
        if report.word_count != report.subspace_count:
            bad.append(f"n = {n}: {report.word_count} words vs {report.subspace_count} subspaces")
        if n == 3 and report.case_counts != (5, 5, 1, 1, 1, 0, 2):
            bad.append(f"n = 3: class counts {report.case_counts}")
    details = f"matched {', '.join(matched)} for n = 1..{top}"
    return CheckResult("bijection", not bad, details if not bad else "; ".join(bad[:5]))


def check_quotient_certificates() -> CheckResult:
    bad = []
    sizes = []
    for n, (want_size, want_rank) in ((2, (5, 15)), (3, (15, 135))):
        basis = quotient_basis(n)
        sizes.append(len(basis.indices))
        if len(basis.indices) != want_size or basis.certificate_rank != want_rank:
            bad.append(
                f"n = {n}: {len(basis.indices)} points with certificate "
                f"{basis.certificate_rank}, expected {want_size} and {want_rank}"
            )
    details = f"greedy bases of sizes {sizes[0]} and {sizes[1]} with full-rank certificates"
    return CheckResult("quotient-certificate", not bad, details if not bad else "; ".join(bad))


def run_all(fast: bool = False) -> tuple[CheckResult, ...]:
    """The whole battery, in a fixed order.  fast=True trims the largest
    sizes (drops rank 4 and the n = 7..8 enumerations) for quick smoke runs."""
    return (
        check_g_sequence(),
        check_language_counts(fast),
        check_case_tables(fast),
        check_family_counts(fast),
        check_case_partition(fast),
        check_polar_dimensions(fast),
        check_strata(fast),
        check_bijection(fast),
        check_quotient_certificates(),
    )


def format_report(results: tuple[CheckResult, ...]) -> str:
    width = max(len(r.name) for r in results)
    lines = [
        f"{'PASS' if r.ok else 'FAIL'} {r.name:<{width}}  {r.details}"
        for r in results
    ]
    return "\n".join(lines) + "\n"
