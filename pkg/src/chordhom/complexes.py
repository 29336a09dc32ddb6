"""Simplicial complexes, independence complexes and exact reduced homology over Z.

Complexes are stored by their facets.  Faces of a given dimension are generated
on demand, so computing homology only ever holds two consecutive face layers.
Homology is always the augmented (reduced) one: the empty face sits in degree
-1, which makes the empty complex a sphere of dimension -1.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .graphs import Graph, iter_bits

# ---------------------------------------------------------------------------
# abelian group bookkeeping


def prime_power_split(n: int) -> list[int]:
    """Split ``n > 1`` into its prime-power factors, e.g. 12 -> [3, 4]."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return sorted(out)


def elementary_divisors(diagonal: Iterable[int]) -> tuple[int, ...]:
    """Prime-power torsion coefficients from SNF diagonal entries (units and zeros dropped)."""
    out = []
    for d in diagonal:
        d = abs(d)
        if d > 1:
            out.extend(prime_power_split(d))
    return tuple(sorted(out))


@dataclass(eq=True)
class HomologyResult:
    """Reduced integer homology: degree -> (free rank, prime-power torsion).

    Only nonzero degrees are stored.  ``cohomological`` marks the universal
    coefficient view produced by :meth:`cohomology`.
    """

    groups: dict[int, tuple[int, tuple[int, ...]]] = field(default_factory=dict)
    cohomological: bool = field(default=False, compare=False)

    def __post_init__(self):
        clean = {}
        for deg, (rank, tors) in self.groups.items():
            tors = tuple(sorted(tors))
            if rank < 0 or any(t <= 1 for t in tors):
                raise ValueError(f"invalid group in degree {deg}: rank={rank} torsion={tors}")
            if rank or tors:
                clean[deg] = (rank, tors)
        self.groups = dict(sorted(clean.items()))

    @classmethod
    def from_ranks(cls, ranks: dict[int, int], torsion: Optional[dict[int, Sequence[int]]] = None):
        torsion = torsion or {}
        degs = set(ranks) | set(torsion)
        return cls({d: (ranks.get(d, 0), elementary_divisors(torsion.get(d, ()))) for d in degs})

    @classmethod
    def sphere(cls, dim: int) -> "HomologyResult":
        return cls({dim: (1, ())})

    def rank(self, deg: int) -> int:
        return self.groups.get(deg, (0, ()))[0]

    def torsion(self, deg: int) -> tuple[int, ...]:
        return self.groups.get(deg, (0, ()))[1]

    def degrees(self) -> list[int]:
        return list(self.groups)

    def is_trivial(self) -> bool:
        return not self.groups

    def has_torsion(self) -> bool:
        return any(t for _, t in self.groups.values())

    def betti(self) -> dict[int, int]:
        return {d: r for d, (r, _) in self.groups.items() if r}

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic sum (-1)^d rank_d."""
        return sum((-1) ** (d % 2) * r for d, (r, _) in self.groups.items())

    def concentrated_in(self, deg: int) -> bool:
        return list(self.groups) == [deg]

    def cohomology(self) -> "HomologyResult":
        """Free ranks unchanged, torsion moved up one degree."""
        if self.cohomological:
            return self
        out: dict[int, list] = {}
        for d, (r, t) in self.groups.items():
            out.setdefault(d, [0, ()])[0] = r
            if t:
                out.setdefault(d + 1, [0, ()])[1] = t
        return HomologyResult({d: (r, t) for d, (r, t) in out.items()}, cohomological=True)

    def shifted(self, k: int) -> "HomologyResult":
        return HomologyResult({d + k: g for d, g in self.groups.items()}, self.cohomological)

    def to_json(self) -> list[dict]:
        return [{"degree": d, "rank": r, "torsion": list(t)} for d, (r, t) in self.groups.items()]

    @classmethod
    def from_json(cls, rows: list[dict]) -> "HomologyResult":
        return cls({row["degree"]: (row["rank"], tuple(row["torsion"])) for row in rows})

    def __str__(self) -> str:
        if not self.groups:
            return "0"
        parts = []
        for d, (r, t) in self.groups.items():
            summands = (["Z^%d" % r if r > 1 else "Z"] if r else []) + [f"Z/{q}" for q in t]
            parts.append(f"H{d} = " + " + ".join(summands))
        return "; ".join(parts)


def _tensor_groups(a: tuple[int, tuple], b: tuple[int, tuple]):
    """(rank, torsion list) of A (x) B and Tor(A, B) for f.g. abelian groups."""
    ra, ta = a
    rb, tb = b
    tens_rank = ra * rb
    tens_tors = list(ta) * rb + list(tb) * ra
    tor = []
    for x in ta:
        for y in tb:
            g = gcd(x, y)
            if g > 1:
                tens_tors.append(g)
                tor.append(g)
    return tens_rank, tens_tors, tor


def join_homology(h1: HomologyResult, h2: HomologyResult) -> HomologyResult:
    """Reduced homology of a join from its factors.

    H~_{k+1}(X * Y) = sum_{i+j=k} H~_i(X) (x) H~_j(Y)  +  sum_{i+j=k-1} Tor(H~_i(X), H~_j(Y)).
    Degree -1 handles the empty complex, which is the unit of the join.
    """
    ranks: dict[int, int] = {}
    tors: dict[int, list[int]] = {}
    for i, gi in h1.groups.items():
        for j, gj in h2.groups.items():
            r, t, tor = _tensor_groups(gi, gj)
            deg = i + j + 1
            ranks[deg] = ranks.get(deg, 0) + r
            tors.setdefault(deg, []).extend(t)
            if tor:
                tors.setdefault(deg + 1, []).extend(tor)
    return HomologyResult({d: (ranks.get(d, 0), tuple(tors.get(d, ()))) for d in set(ranks) | set(tors)})


def wedge_homology(parts: Iterable[HomologyResult]) -> HomologyResult:
    """Reduced homology of a wedge of non-empty spaces is the direct sum."""
    ranks: dict[int, int] = {}
    tors: dict[int, list[int]] = {}
    for h in parts:
        for d, (r, t) in h.groups.items():
            ranks[d] = ranks.get(d, 0) + r
            tors.setdefault(d, []).extend(t)
    return HomologyResult({d: (ranks.get(d, 0), tuple(tors.get(d, ()))) for d in set(ranks) | set(tors)})


# ---------------------------------------------------------------------------
# Smith normal form


def dense_snf_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero entries of a diagonal form of a dense integer matrix under unimodular moves.

    Pivots are chosen with minimal absolute value to keep entries small.
    The returned entries need not form a divisibility chain.
    """
    a = [row[:] for row in matrix if any(row)]
    diag = []
    while a:
        ncols = len(a[0])
        best = None
        for i, row in enumerate(a):
            for j, x in enumerate(row):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[0], a[pi] = a[pi], a[0]
        for row in a:
            row[0], row[pj] = row[pj], row[0]
        while True:
            p = a[0][0]
            reduced = True
            # clear the column with row operations
            for i in range(1, len(a)):
                x = a[i][0]
                if x:
                    q = x // p
                    if q:
                        ri, r0 = a[i], a[0]
                        for j in range(ncols):
                            ri[j] -= q * r0[j]
                    if a[i][0]:
                        reduced = False
            # clear the row with column operations
            r0 = a[0]
            for j in range(1, ncols):
                x = r0[j]
                if x:
                    q = x // p
                    if q:
                        for row in a:
                            row[j] -= q * row[0]
                    if r0[j]:
                        reduced = False
            if reduced:
                break
            # move the smallest nonzero remainder into the pivot position
            best = (abs(p), 0, 0)
            for i in range(len(a)):
                if a[i][0] and abs(a[i][0]) < best[0]:
                    best = (abs(a[i][0]), i, 0)
            for j in range(ncols):
                if a[0][j] and abs(a[0][j]) < best[0]:
                    best = (abs(a[0][j]), 0, j)
            _, bi, bj = best
            a[0], a[bi] = a[bi], a[0]
            for row in a:
                row[0], row[bj] = row[bj], row[0]
        # a diagonal form suffices: the cokernel is the sum of Z/d_i either way
        diag.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:] if any(row[1:])]
    return diag


def sparse_rank_and_divisors(columns: Sequence[dict[int, int]]) -> tuple[int, list[int]]:
    """Rank and non-unit SNF diagonal entries of a sparse integer matrix.

    ``columns[j]`` maps row index -> entry.  Unit pivots are eliminated first
    (choosing, for each row, the unit whose column is shortest, to limit
    fill-in); whatever survives is handed to :func:`dense_snf_diagonal`.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for j, col in enumerate(columns):
        for i, x in col.items():
            if x:
                rows.setdefault(i, {})[j] = x
                cols.setdefault(j, set()).add(i)
    rank = 0
    progress = True
    while progress and rows:
        progress = False
        for r in sorted(rows, key=lambda i: len(rows[i])):
            row = rows.get(r)
            if row is None:
                continue
            units = [c for c, x in row.items() if x in (1, -1)]
            if not units:
                continue
            c = min(units, key=lambda j: len(cols[j]))
            p = row[c]
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                row2 = rows[r2]
                f = row2[c] * p
                for cc, x in row.items():
                    y = row2.get(cc, 0) - f * x
                    if y:
                        if cc not in row2:
                            cols[cc].add(r2)
                        row2[cc] = y
                    elif cc in row2:
                        del row2[cc]
                        cols[cc].discard(r2)
                if not row2:
                    del rows[r2]
            for cc in row:
                cols[cc].discard(r)
            del cols[c]
            del rows[r]
            rank += 1
            progress = True
    if not rows:
        return rank, []
    live_cols = sorted({c for row in rows.values() for c in row})
    index = {c: k for k, c in enumerate(live_cols)}
    dense = []
    for row in rows.values():
        d = [0] * len(live_cols)
        for c, x in row.items():
            d[index[c]] = x
        dense.append(d)
    diag = dense_snf_diagonal(dense)
    return rank + len(diag), [d for d in diag if d > 1]


def sparse_rank_mod_p(columns: Sequence[dict[int, int]], p: int) -> int:
    by_row: dict[int, dict[int, int]] = {}
    for j, col in enumerate(columns):
        for i, x in col.items():
            if x % p:
                by_row.setdefault(i, {})[j] = x % p
    pivots: dict[int, dict[int, int]] = {}  # pivot column -> normalised row
    rank = 0
    for row in by_row.values():
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                rank += 1
                break
            f = row[c]
            for k, v in pivots[c].items():
                y = (row.get(k, 0) - f * v) % p
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
    return rank


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets (sorted vertex tuples).

    ``facets == ()`` is the empty complex, whose only face is the empty
    simplex; its reduced homology is Z in degree -1.
    """

    n_vertices: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        fs = tuple(sorted(tuple(sorted(f)) for f in self.facets))
        if any(not f for f in fs):
            if len(fs) == 1:
                fs = ()
            else:
                raise ValueError("the empty face cannot be a facet of a non-empty complex")
        object.__setattr__(self, "facets", fs)
        sets = [frozenset(f) for f in fs]
        for a, b in itertools.permutations(range(len(sets)), 2):
            if sets[a] <= sets[b]:
                raise ValueError(f"facet {fs[a]} is contained in {fs[b]}")
        used = set().union(*sets) if sets else set()
        if used != set(range(self.n_vertices)):
            raise ValueError("every vertex must lie in some facet")

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from any generating family of faces, keeping only the maximal ones."""
        sets = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
        maximal: list[frozenset] = []
        for s in sets:
            if not any(s <= m for m in maximal):
                maximal.append(s)
        verts = sorted(set().union(*maximal)) if maximal else []
        index = {v: i for i, v in enumerate(verts)}
        return cls(len(verts), tuple(tuple(index[v] for v in m) for m in maximal if m))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def faces(self, dim: int) -> list[tuple[int, ...]]:
        """All faces of the given dimension in lexicographic order; dim -1 is the empty face."""
        if dim == -1:
            return [()]
        out = set()
        for f in self.facets:
            if len(f) > dim:
                out.update(itertools.combinations(f, dim + 1))
        return sorted(out)

    def f_vector(self) -> list[int]:
        """Face counts from dimension -1 upwards."""
        return [len(self.faces(d)) for d in range(-1, self.dimension + 1)]

    def is_cone(self) -> bool:
        if not self.facets:
            return False
        common = set(self.facets[0])
        for f in self.facets[1:]:
            common &= set(f)
        return bool(common)


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Join; vertices of ``k2`` are renumbered after those of ``k1``."""
    if k1.is_empty():
        return k2
    if k2.is_empty():
        return k1
    shift = k1.n_vertices
    facets = tuple(f1 + tuple(v + shift for v in f2) for f1 in k1.facets for f2 in k2.facets)
    return SimplicialComplex(k1.n_vertices + k2.n_vertices, facets)


def maximal_independent_sets(g: Graph) -> list[int]:
    """Maximal independent sets as vertex masks (Bron-Kerbosch with pivoting on the complement)."""
    if g.n == 0:
        return [0]
    full = g.all_mask
    # neighbourhoods in the complement graph: cliques there are independent sets here
    cadj = [full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: (cadj[u] & p).bit_count())
        for v in iter_bits(p & ~cadj[pivot]):
            bit = 1 << v
            expand(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return sorted(out)


def independence_complex(g: Graph) -> SimplicialComplex:
    facets = tuple(tuple(iter_bits(m)) for m in maximal_independent_sets(g) if m)
    return SimplicialComplex(g.n, facets)


@dataclass
class ChainComplexZ:
    """Augmented simplicial chain complex.

    ``faces[d]`` lists the d-faces (``faces[-1] == [()]``) and ``boundary[d]``
    is the matrix of the d-th boundary map as sparse columns, one per d-face,
    mapping row index (a (d-1)-face) to its coefficient.
    """

    faces: dict[int, list[tuple[int, ...]]]
    boundary: dict[int, list[dict[int, int]]]

    def matrix(self, d: int) -> list[list[int]]:
        nrows = len(self.faces.get(d - 1, []))
        cols = self.boundary.get(d, [])
        return [[col.get(i, 0) for col in cols] for i in range(nrows)]

    @property
    def top(self) -> int:
        return max(self.faces)


def _boundary_columns(faces: list[tuple], lower_index: dict[tuple, int]) -> list[dict[int, int]]:
    cols = []
    for f in faces:
        col = {}
        for i in range(len(f)):
            col[lower_index[f[:i] + f[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return cols


def chain_complex(k: SimplicialComplex) -> ChainComplexZ:
    faces = {-1: [()]}
    boundary: dict[int, list[dict[int, int]]] = {}
    for d in range(0, k.dimension + 1):
        faces[d] = k.faces(d)
        index = {f: i for i, f in enumerate(faces[d - 1])}
        boundary[d] = _boundary_columns(faces[d], index)
    return ChainComplexZ(faces, boundary)


def _layered_boundaries(k: SimplicialComplex):
    """Yield (d, n_d_faces, boundary columns of d) for d = 0..dim, two layers at a time."""
    lower = [()]
    for d in range(0, k.dimension + 1):
        upper = k.faces(d)
        index = {f: i for i, f in enumerate(lower)}
        yield d, len(upper), _boundary_columns(upper, index)
        lower = upper


def homology(k: SimplicialComplex) -> HomologyResult:
    """Reduced integral homology via Smith normal form of each boundary map."""
    if k.is_empty():
        return HomologyResult({-1: (1, ())})
    if k.is_cone():
        return HomologyResult()
    sizes = {-1: 1}
    ranks = {0: 0}
    divisors: dict[int, list[int]] = {}
    for d, nfaces, cols in _layered_boundaries(k):
        sizes[d] = nfaces
        ranks[d], divisors[d] = sparse_rank_and_divisors(cols)
    top = k.dimension
    groups = {}
    for d in range(-1, top + 1):
        free = sizes[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        groups[d] = (free, elementary_divisors(divisors.get(d + 1, ())))
    return HomologyResult(groups)


def cohomology(k: SimplicialComplex) -> HomologyResult:
    return homology(k).cohomology()


def field_betti(k: SimplicialComplex, p: int) -> dict[int, int]:
    """Reduced Betti numbers with coefficients in GF(p)."""
    if k.is_empty():
        return {-1: 1}
    sizes = {-1: 1}
    ranks = {}
    for d, nfaces, cols in _layered_boundaries(k):
        sizes[d] = nfaces
        ranks[d] = sparse_rank_mod_p(cols, p)
    out = {}
    for d in range(-1, k.dimension + 1):
        b = sizes[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def independence_homology(g: Graph) -> HomologyResult:
    """Homology of I(g) computed directly from its facets (no graph reductions)."""
    return homology(independence_complex(g))
