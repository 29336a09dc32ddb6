"""Deliberately naive reference homology, used to cross-check the fast path.

Shares no code with :mod:`chordhom.complexes` except the result container: faces
come from scanning every vertex subset, free ranks from exact rational
elimination, torsion from a textbook Smith normal form with the divisibility
condition enforced.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import HomologyResult


def _subsets_by_dim(n: int, is_face) -> dict[int, list[int]]:
    faces: dict[int, list[int]] = {}
    for mask in range(1 << n):
        if is_face(mask):
            faces.setdefault(bin(mask).count("1") - 1, []).append(mask)
    return faces


def _boundary(upper: list[int], lower: list[int]) -> list[list[int]]:
    index = {m: i for i, m in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, m in enumerate(upper):
        verts = [v for v in range(m.bit_length()) if m >> v & 1]
        for pos, v in enumerate(verts):
            mat[index[m & ~(1 << v)]][j] = (-1) ** pos
    return mat


def rational_rank(mat: list[list[int]]) -> int:
    rows = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def smith_invariants(mat: list[list[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (nonzero ones)."""
    a = [row[:] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                for j in range(t, n):
                    a[i][j] -= q * a[t][j]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                for i in range(t, m):
                    a[i][j] -= q * a[i][t]
                if a[t][j]:
                    done = False
            if not done:
                nz = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                nz += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
                _, i, j = min(nz)
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]), None)
            if bad is not None:
                for j in range(t, n):
                    a[t][j] += a[bad][j]
                done = False
        out.append(abs(a[t][t]))
        t += 1
    return out


def _homology_from_faces(faces: dict[int, list[int]]) -> dict[int, tuple[int, list[int]]]:
    top = max(faces)
    ranks = {}
    tors = {}
    for d in range(0, top + 1):
        mat = _boundary(faces[d], faces[d - 1])
        ranks[d] = rational_rank(mat)
        inv = smith_invariants(mat)
        tors[d] = [x for x in inv if x > 1]
        if len(inv) != ranks[d]:
            raise AssertionError("Smith form rank disagrees with rational rank")
    out = {}
    for d in range(-1, top + 1):
        free = len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        t = tors.get(d + 1, [])
        if free or t:
            out[d] = (free, sorted(t))
    return out


def naive_graph_homology(adj: list[int]) -> dict[int, tuple[int, list[int]]]:
    """{degree: (rank, invariant factors > 1)} of the reduced homology of I(G)."""
    n = len(adj)

    def independent(mask):
        return all(not (mask >> v & 1) or not (adj[v] & mask) for v in range(n))

    return _homology_from_faces(_subsets_by_dim(n, independent))


def naive_complex_homology(n_vertices: int, facets) -> dict[int, tuple[int, list[int]]]:
    fmasks = [sum(1 << v for v in f) for f in facets]

    def is_face(mask):
        return mask == 0 or any(mask & ~f == 0 for f in fmasks)

    return _homology_from_faces(_subsets_by_dim(n_vertices, is_face))


def to_elementary(groups: dict[int, tuple[int, list[int]]]):
    """Convert invariant factors to prime powers so results compare with HomologyResult."""
    return HomologyResult.from_ranks({d: r for d, (r, _) in groups.items()}, {d: t for d, (_, t) in groups.items()})
