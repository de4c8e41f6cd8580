"""Rank-n symplectic polar geometry over F_2 and its point-line quotient.

The ambient space is F_2^(2n) with the hyperbolic-split form pairing
coordinate i against coordinate n+i:

    omega(u, v) = sum_{i=1..n} (u_i v_{n+i} + u_{n+i} v_i)  over F_2.

The pairing convention matters: with the adjacent-pair convention
(1,2)(3,4)... the span of 0001 and 1010 in F_2^4 is not isotropic, and the
rank-2 point list would not reproduce the classical Cremona-Richmond
coordinates that the test fixtures freeze.  The split convention does.

Points of the geometry are the n-dimensional totally isotropic subspaces,
lines the (n-1)-dimensional ones; each line extends to a maximal isotropic
subspace in exactly 3 ways, so this is a geometry with 3 points per line.
The quotient dimension is |points| minus the GF(2) rank of the line-sum
relation matrix, and it lands on g(n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import GuardError
from .gf2 import (
    Gf2Subspace,
    Gf2Vector,
    enumerate_subspaces,
    gaussian_binomial,
    nullspace_of_rows,
    rank_of_rows,
    reduce_rows,
)

MAX_RANK = 4  # rank 5 would mean filtering ~10^8 subspaces of F_2^10


def _omega_bits(u: int, v: int, n: int) -> int:
    mask = (1 << n) - 1
    return (((u >> n) & v).bit_count() + (u & (v >> n)).bit_count()) & 1


def symplectic_form(u: Gf2Vector, v: Gf2Vector, n: int) -> int:
    """omega(u, v) for vectors of F_2^(2n)."""
    if u.dim != 2 * n or v.dim != 2 * n:
        raise ValueError(f"expected vectors of dimension {2 * n}, got {u.dim} and {v.dim}")
    return _omega_bits(u.bits, v.bits, n)


def _swap_halves(b: int, n: int) -> int:
    mask = (1 << n) - 1
    return ((b & mask) << n) | (b >> n)


def _totally_isotropic(rows: tuple[int, ...], n: int) -> bool:
    for i, u in enumerate(rows):
        for v in rows[i + 1 :]:
            if _omega_bits(u, v, n):
                return False
    return True


@dataclass(frozen=True, slots=True)
class PolarGeometry:
    """Points, lines and their incidence for one rank, in enumeration order."""

    n: int
    points: tuple[Gf2Subspace, ...]
    lines: tuple[Gf2Subspace, ...]
    incidence: tuple[tuple[int, int, int], ...]  # per line: sorted point indices


@lru_cache(maxsize=None)
def build_geometry(n: int) -> PolarGeometry:
    """Construct the full geometry by isotropy filtration of all subspaces of
    the right dimensions, then attach each line to its 3 points."""
    if not 1 <= n <= MAX_RANK:
        raise GuardError(f"build_geometry supports 1 <= n <= {MAX_RANK}, got {n}")
    width = 2 * n
    points = tuple(
        s for s in enumerate_subspaces(width, dim_filter=n) if _totally_isotropic(s.rows, n)
    )
    lines = tuple(
        s for s in enumerate_subspaces(width, dim_filter=n - 1) if _totally_isotropic(s.rows, n)
    )
    index = {p: i for i, p in enumerate(points)}
    incidence = []
    for line in lines:
        # the points through a line are its extensions inside its own perp;
        # perp/line is 2-dimensional, so there are exactly 3 of them
        perp = nullspace_of_rows((_swap_halves(b, n) for b in line.rows), width)
        found: list[int] = []
        for v in perp:
            if len(found) == 2:
                break
            if len(reduce_rows(line.rows + tuple(found) + (v,))) == line.dim + len(found) + 1:
                found.append(v)
        c1, c2 = found
        triple = tuple(
            sorted(index[Gf2Subspace(width, line.rows + (c,))] for c in (c1, c2, c1 ^ c2))
        )
        incidence.append(triple)
    return PolarGeometry(n, points, lines, tuple(incidence))


def _line_rows(geometry: PolarGeometry) -> list[int]:
    """The line-sum relations as packed rows over the point index set."""
    rows = []
    for triple in geometry.incidence:
        b = 0
        for i in triple:
            b |= 1 << i
        rows.append(b)
    return rows


def udim(n: int) -> int:
    """Dimension of the GF(2) point module modulo the line-sum relations."""
    geometry = build_geometry(n)
    return len(geometry.points) - rank_of_rows(_line_rows(geometry))


@dataclass(frozen=True, slots=True)
class StrataReport:
    """Distance strata around a base point, with their graph components.

    strata[k] holds the indices of the points whose intersection with the
    base point has dimension n - k; components[k] partitions that stratum in
    the induced collinearity graph.
    """

    n: int
    base_index: int
    strata: tuple[tuple[int, ...], ...]
    components: tuple[tuple[tuple[int, ...], ...], ...]


def strata(n: int, x0_index: int) -> StrataReport:
    """Stratify the points by intersection dimension with a base point and
    verify the structural facts along the way:

    (a) the stratum index is the collinearity-graph distance;
    (b) every line has two points in one stratum and one a level down;
    (c) the components of stratum k correspond one-to-one, via the
        intersection with the base point, to the (n-k)-subspaces of it.

    These are facts of the geometry, so a failure raises RuntimeError.
    """
    geometry = build_geometry(n)
    count = len(geometry.points)
    if not 0 <= x0_index < count:
        raise ValueError(f"point index {x0_index} out of range 0..{count - 1}")
    width = 2 * n
    x0_members = frozenset(geometry.points[x0_index].members())
    intersections = [
        Gf2Subspace(width, tuple(x0_members.intersection(y.members())))
        for y in geometry.points
    ]
    strata_lists: list[list[int]] = [[] for _ in range(n + 1)]
    stratum_of = {}
    for i, meet in enumerate(intersections):
        k = n - meet.dim
        strata_lists[k].append(i)
        stratum_of[i] = k

    adjacency: list[set[int]] = [set() for _ in range(count)]
    for a, b, c in geometry.incidence:
        adjacency[a].update((b, c))
        adjacency[b].update((a, c))
        adjacency[c].update((a, b))

    distance = {x0_index: 0}
    frontier = [x0_index]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adjacency[u]:
                if v not in distance:
                    distance[v] = d
                    nxt.append(v)
        frontier = nxt
    for k, members in enumerate(strata_lists):
        for i in members:
            if distance.get(i) != k:
                raise RuntimeError(
                    f"rank {n}: point {i} meets the base in dimension {n - k} "
                    f"but sits at graph distance {distance.get(i)}"
                )

    for triple in geometry.incidence:
        ks = sorted(stratum_of[i] for i in triple)
        if not (ks[1] == ks[2] and ks[0] == ks[1] - 1):
            raise RuntimeError(f"rank {n}: line {triple} spreads over strata {ks}")

    components_per_k = []
    for k, members in enumerate(strata_lists):
        remaining = set(members)
        comps = []
        while remaining:
            seed = min(remaining)
            comp = {seed}
            queue = [seed]
            while queue:
                u = queue.pop()
                for v in adjacency[u]:
                    if v in remaining and v not in comp:
                        comp.add(v)
                        queue.append(v)
            remaining -= comp
            comps.append(tuple(sorted(comp)))
        comps.sort()
        meets = set()
        for comp in comps:
            values = {intersections[i] for i in comp}
            if len(values) != 1:
                raise RuntimeError(f"rank {n}: stratum {k} component {comp} is not fibered")
            meets.add(values.pop())
        expected = gaussian_binomial(n, n - k)
        if len(meets) != len(comps) or len(comps) != expected:
            raise RuntimeError(
                f"rank {n}: stratum {k} has {len(comps)} components, expected {expected}"
            )
        components_per_k.append(tuple(comps))

    return StrataReport(
        n=n,
        base_index=x0_index,
        strata=tuple(tuple(m) for m in strata_lists),
        components=tuple(components_per_k),
    )


@dataclass(frozen=True, slots=True)
class QuotientBasis:
    """Point indices whose classes form a basis of the quotient module.

    The certificate: line-sum rows together with the unit rows of the chosen
    points span the whole point module, i.e. their joint rank is |points|.
    """

    n: int
    indices: tuple[int, ...]
    certificate_rank: int


def quotient_basis(n: int) -> QuotientBasis:
    """Greedy smallest-index points extending the line-sum row space to full
    rank; their count is exactly udim(n)."""
    geometry = build_geometry(n)
    total = len(geometry.points)
    pivots: dict[int, int] = {}

    def absorb(b: int) -> bool:
        while b:
            p = b.bit_length() - 1
            r = pivots.get(p)
            if r is None:
                pivots[p] = b
                return True
            b ^= r
        return False

    for row in _line_rows(geometry):
        absorb(row)
    chosen = []
    for i in range(total):
        if len(pivots) == total:
            break
        if absorb(1 << i):
            chosen.append(i)
    if len(pivots) != total:
        raise RuntimeError(f"rank {n}: unit rows failed to complete the point module")
    return QuotientBasis(n, tuple(chosen), len(pivots))


def export_incidence(n: int, format: str = "json") -> str:
    """Deterministic document for the point-line incidence: 'json' (points
    with basis strings plus line triples), 'csv' (one line per geometry line:
    line_id,p1,p2,p3) or 'dot' (the bipartite point-line graph)."""
    geometry = build_geometry(n)
    if format == "json":
        doc = {
            "n": n,
            "points": [
                {"id": i, "basis": [str(v) for v in p.basis]}
                for i, p in enumerate(geometry.points)
            ],
            "lines": [
                {"id": j, "points": list(triple)}
                for j, triple in enumerate(geometry.incidence)
            ],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if format == "csv":
        rows = [
            f"{j},{triple[0]},{triple[1]},{triple[2]}"
            for j, triple in enumerate(geometry.incidence)
        ]
        return "\n".join(rows) + "\n"
    if format == "dot":
        out = [f"graph polar_rank_{n} {{"]
        for i, p in enumerate(geometry.points):
            out.append(f'  P{i} [shape=ellipse label="{p}"];')
        for j in range(len(geometry.lines)):
            out.append(f'  L{j} [shape=box label="L{j}"];')
        for j, triple in enumerate(geometry.incidence):
            for i in triple:
                out.append(f"  P{i} -- L{j};")
        out.append("}")
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format: {format}")
