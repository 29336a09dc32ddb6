"""Link diagrams in PD notation, their all-A state, and extreme Khovanov homology.

PD conventions: ``X(a, b, c, d)`` lists the four arcs at a crossing
counterclockwise, starting from the incoming under-arc, so the under-strand
runs a -> c and the over-strand joins b and d.  The crossing is positive when
the over-strand runs d -> b.  The A-smoothing (rotate the over-strand
counterclockwise; the swept regions merge) joins a with b and c with d.

Extreme Khovanov homology in the lowest quantum grading
j_min = p - 2n - k is the cohomology of the independence complex of the
A-state's circle graph, shifted so that Kh^{i, j_min} = H^{i - 1 + n}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .certificates import graph_homology
from .chords import ChordDiagram, intersection_graph
from .complexes import HomologyResult, join_homology
from .errors import ArcCountError, InvalidDiagram, OrientationAmbiguous
from .graphs import Graph, disjoint_union, is_bipartite

# slots at a crossing, counterclockwise from the incoming under-arc
A_SMOOTHING = ((0, 1), (2, 3))
B_SMOOTHING = ((0, 3), (1, 2))


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0  # split unknotted components without crossings

    def __post_init__(self):
        counts = Counter(x for cr in self.crossings for x in cr)
        bad = sorted(x for x, c in counts.items() if c != 2)
        if bad:
            raise ArcCountError(f"arc labels {bad} do not occur exactly twice")
        if any(x <= 0 for x in counts):
            raise ArcCountError("arc labels must be positive integers")
        if self.free_loops < 0:
            raise ValueError("free_loops must be non-negative")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def arcs(self) -> list[int]:
        return sorted({x for cr in self.crossings for x in cr})

    def with_free_loop(self) -> "LinkDiagram":
        """Same diagram plus a distant crossingless unknot."""
        return LinkDiagram(self.crossings, self.free_loops + 1)

    def mirror(self) -> "LinkDiagram":
        """Switch every crossing (same projection, signs flipped)."""
        pos = crossing_signs_list(self)
        out = []
        for (a, b, c, d), s in zip(self.crossings, pos):
            # the old over-strand becomes the under-strand; start at its incoming arc
            out.append((d, a, b, c) if s > 0 else (b, c, d, a))
        return LinkDiagram(tuple(out), self.free_loops)

    def pd_text(self) -> str:
        return " ".join("X(%d,%d,%d,%d)" % cr for cr in self.crossings)


# ---------------------------------------------------------------------------
# combinatorial structure of the projection


def _ends(d: LinkDiagram) -> dict[int, list[tuple[int, int]]]:
    """arc label -> its two (crossing, slot) ends."""
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, cr in enumerate(d.crossings):
        for s, x in enumerate(cr):
            ends.setdefault(x, []).append((i, s))
    return ends


def _other_end(ends, d: LinkDiagram, i: int, s: int) -> tuple[int, int]:
    e1, e2 = ends[d.crossings[i][s]]
    return e2 if e1 == (i, s) else e1


def check_planar(d: LinkDiagram) -> None:
    """Raise InvalidDiagram unless V - E + F = 2 on every connected piece of the projection."""
    if not d.crossings:
        return
    ends = _ends(d)
    n = d.n_crossings
    # faces: orbits of (turn to the next slot counterclockwise, then cross the arc)
    seen = set()
    faces = 0
    for i in range(n):
        for s in range(4):
            if (i, s) in seen:
                continue
            faces += 1
            cur = (i, s)
            while cur not in seen:
                seen.add(cur)
                j, t = _other_end(ends, d, *cur)
                cur = (j, (t + 1) % 4)
    # connected pieces of the 4-valent graph
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, _), (j, _) in ends.values():
        parent[find(i)] = find(j)
    pieces = len({find(i) for i in range(n)})
    if n - 2 * n + faces != 2 * pieces:
        raise InvalidDiagram(
            f"PD code is not planar: V - E + F = {faces - n}, expected {2 * pieces}"
        )


def _strand_components(d: LinkDiagram) -> list[list[int]]:
    """Arc labels grouped by link component (strands continue straight through crossings)."""
    parent = {x: x for x in d.arcs()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, e in d.crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(e)
    groups: dict[int, list[int]] = {}
    for x in d.arcs():
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def _incoming_slots(d: LinkDiagram) -> set[tuple[int, int]]:
    """(crossing, slot) pairs where the oriented strand enters the crossing.

    Each component is walked straight through its crossings.  It starts at a
    crossing where it passes under (slot a is incoming); a component that is
    over everywhere starts with its smallest arc entering where that arc meets
    the next label.
    """
    ends = _ends(d)
    incoming: set[tuple[int, int]] = set()
    for comp in _strand_components(d):
        arcs = set(comp)
        start = next(((i, 0) for i, cr in enumerate(d.crossings) if cr[0] in arcs), None)
        if start is None:
            lo = comp[0]
            start = next(
                ((i, s) for i, cr in enumerate(d.crossings) for s in (1, 3)
                 if cr[s] == lo and cr[(s + 2) % 4] in (lo + 1, lo)),
                None,
            )
            if start is None:
                raise OrientationAmbiguous(f"cannot orient component with arcs {comp}")
        cur = start
        while cur not in incoming:
            incoming.add(cur)
            i, s = cur
            cur = _other_end(ends, d, i, (s + 2) % 4)
    return incoming


def over_directions(d: LinkDiagram) -> list[bool]:
    """For each crossing, True when the over-strand runs d -> b (slot 3 to slot 1).

    The under-strand runs a -> c.  Components with three or more arcs must be
    numbered consecutively along that direction, wrapping from the largest
    label back to the smallest.  Two-arc components cannot be oriented by
    their numbering and follow the under-strand convention alone.
    """
    nxt = {}
    for comp in _strand_components(d):
        lo, hi = comp[0], comp[-1]
        if comp != list(range(lo, hi + 1)):
            raise OrientationAmbiguous(f"component arcs {comp} are not consecutively numbered")
        if len(comp) >= 3:
            for x in comp:
                nxt[x] = x + 1 if x < hi else lo
    for i, (a, _, c, _) in enumerate(d.crossings):
        if a in nxt and nxt[a] != c:
            raise OrientationAmbiguous(
                f"crossing {i + 1}: under-strand {a} -> {c} disagrees with the arc numbering"
            )
    incoming = _incoming_slots(d)
    out = []
    for i, (a, b, c, e) in enumerate(d.crossings):
        if (i, 0) not in incoming:
            raise OrientationAmbiguous(f"crossing {i + 1}: under-strand does not enter at slot a")
        forward = (i, 3) in incoming
        if e in nxt and b in nxt and nxt[e] != b and nxt[b] != e:
            raise OrientationAmbiguous(
                f"crossing {i + 1}: over-strand {b}/{e} is not consecutive in the arc numbering"
            )
        if e in nxt and forward != (nxt[e] == b) and e != b:
            raise OrientationAmbiguous(f"crossing {i + 1}: over-strand direction disagrees with the numbering")
        out.append(forward)
    return out


def crossing_signs_list(d: LinkDiagram) -> list[int]:
    return [1 if fwd else -1 for fwd in over_directions(d)]


def crossing_signs(d: LinkDiagram) -> tuple[int, int]:
    """(positive, negative) crossing counts."""
    signs = crossing_signs_list(d)
    return signs.count(1), signs.count(-1)


# ---------------------------------------------------------------------------
# the A-state


@dataclass
class AState:
    """All-A smoothing of a diagram.

    ``circles[k]`` is the cyclic sequence of smoothing arcs met along circle k,
    each given as (crossing, arc) with arc 0 joining slots a,b and arc 1
    joining c,d.  Every crossing leaves one chord between its two arcs;
    ``chords[i]`` records (circle, position) for both of them.
    """

    circles: list[list[tuple[int, int]]]
    chords: list[tuple[tuple[int, int], tuple[int, int]]]
    same_circle: list[bool] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.circles)


def smoothing_circles(d: LinkDiagram, choice: list[tuple] | None = None) -> list[list[tuple[int, int]]]:
    """Circles of the smoothing given per crossing as a slot pairing (default all-A)."""
    choice = choice or [A_SMOOTHING] * d.n_crossings
    ends = _ends(d)
    partner = {}
    arc_of = {}
    for i, pairs in enumerate(choice):
        for arc_id, (s, t) in enumerate(pairs):
            partner[(i, s)], partner[(i, t)] = (i, t), (i, s)
            arc_of[(i, s)] = arc_of[(i, t)] = arc_id
    seen = set()
    circles = []
    for i in range(d.n_crossings):
        for s in range(4):
            if (i, s) in seen:
                continue
            circle = []
            cur = (i, s)
            while cur not in seen:
                # walk along the smoothing arc, then along the PD arc
                mate = partner[cur]
                seen.add(cur)
                seen.add(mate)
                circle.append((cur[0], arc_of[cur]))
                cur = _other_end(ends, d, *mate)
            circles.append(circle)
    circles.extend([] for _ in range(d.free_loops))
    if not d.crossings and not d.free_loops:
        circles.append([])
    return circles


def a_state(d: LinkDiagram) -> AState:
    check_planar(d)
    circles = smoothing_circles(d)
    where: dict[tuple[int, int], tuple[int, int]] = {}
    for ci, circle in enumerate(circles):
        for pos, site in enumerate(circle):
            where[site] = (ci, pos)
    if len(where) != 2 * d.n_crossings:
        raise InvalidDiagram("smoothing did not visit every crossing arc exactly once")
    chords = [(where[(i, 0)], where[(i, 1)]) for i in range(d.n_crossings)]
    same = [e0[0] == e1[0] for e0, e1 in chords]
    return AState(circles, chords, same)


def circle_graphs(s: AState) -> list[tuple[ChordDiagram, Graph]]:
    """Per circle: the chord diagram of chords with both ends on it, and its circle graph.

    Chord labels are 1-based crossing numbers.
    """
    out = []
    for ci, circle in enumerate(s.circles):
        word = [cr for cr, _ in circle if s.same_circle[cr]]
        labels = list(dict.fromkeys(str(cr + 1) for cr in word))
        diagram = ChordDiagram.from_word(word, labels)
        out.append((diagram, intersection_graph(diagram)))
    total = disjoint_union(g for _, g in out)
    if is_bipartite(total) is None:
        raise InvalidDiagram("circle graph of the A-state is not bipartite")
    return out


def state_graph(s: AState) -> Graph:
    """G(D): disjoint union of the per-circle graphs."""
    return disjoint_union(g for _, g in circle_graphs(s))


@dataclass(frozen=True)
class Gradings:
    p: int
    n: int
    k: int

    @property
    def j_min(self) -> int:
        return self.p - 2 * self.n - self.k


def jmin(d: LinkDiagram) -> Gradings:
    p, n = crossing_signs(d)
    return Gradings(p, n, a_state(d).k)


@dataclass
class ExtremeKhovanov:
    """Kh^{i, j_min}: ``groups`` is indexed by the homological degree i."""

    j_min: int
    negative: int
    groups: HomologyResult
    complex_homology: HomologyResult

    def rank(self, i: int) -> int:
        return self.groups.rank(i)

    def torsion(self, i: int) -> tuple[int, ...]:
        return self.groups.torsion(i)

    def summary(self) -> str:
        parts = [f"j_min = {self.j_min}"]
        if self.groups.is_trivial():
            parts.append(f"Kh^{{*,{self.j_min}}} = 0")
        for i, (r, t) in self.groups.groups.items():
            summands = (["Z^%d" % r if r > 1 else "Z"] if r else []) + [f"Z/{q}" for q in t]
            parts.append(f"Kh^{{{i},{self.j_min}}} = " + " + ".join(summands))
        return "; ".join(parts)


def extreme_from_homology(h: HomologyResult, negative: int, j_min: int) -> ExtremeKhovanov:
    """Reindex H~*(I(D)) as extreme Khovanov groups: degree d of H^* sits at i = d + 1 - n."""
    return ExtremeKhovanov(j_min, negative, h.cohomology().shifted(1 - negative), h)


def extreme_khovanov_from_graphs(graphs: list[Graph], negative: int, j_min: int) -> ExtremeKhovanov:
    h = HomologyResult.sphere(-1)
    for g in graphs:
        h = join_homology(h, graph_homology(g))
    return extreme_from_homology(h, negative, j_min)


def extreme_khovanov(d: LinkDiagram) -> ExtremeKhovanov:
    """I(D) is the join over circles of the per-circle independence complexes."""
    state = a_state(d)
    p, n = crossing_signs(d)
    grad = Gradings(p, n, state.k)
    graphs = [g for _, g in circle_graphs(state)]
    return extreme_khovanov_from_graphs(graphs, n, grad.j_min)


# ---------------------------------------------------------------------------
# pretzel diagrams

# ports of a crossing, counterclockwise
NE, NW, SW, SE = range(4)
_OPPOSITE = {NE: SW, SW: NE, NW: SE, SE: NW}


def pretzel_pd(twists: list[int]) -> LinkDiagram:
    """Standard pretzel diagram P(t_1, ..., t_m).

    Region i is a vertical column of |t_i| crossings; consecutive columns are
    joined by caps at the top and cups at the bottom, and the outer columns by
    one arc over the top and one under the bottom.  Positive t_i puts the
    SW-NE diagonal on top (A-smoothing splits vertically), negative t_i the
    NW-SE diagonal.
    """
    twists = list(twists)
    if not twists or any(t == 0 for t in twists):
        raise ValueError("pretzel twists must be a non-empty list of nonzero integers")
    ids = []
    over_is_swne = []
    for t in twists:
        ids.append(list(range(len(over_is_swne), len(over_is_swne) + abs(t))))
        over_is_swne.extend([t > 0] * abs(t))
    link: dict[tuple[int, int], tuple[int, int]] = {}

    def connect(p, q):
        link[p], link[q] = q, p

    m = len(twists)
    for col in ids:
        for top, bot in zip(col, col[1:]):
            connect((top, SW), (bot, NW))
            connect((top, SE), (bot, NE))
    for i in range(m):
        j = (i + 1) % m
        connect((ids[i][0], NE), (ids[j][0], NW))
        connect((ids[i][-1], SE), (ids[j][-1], SW))

    # number arcs along each component; an arc is named when we leave a crossing along it
    n = len(over_is_swne)
    label: dict[tuple[int, int], int] = {}
    incoming: dict[tuple[int, int], bool] = {}
    counter = 0
    for start in [(c, p) for c in range(n) for p in (NW, NE)]:
        if start in incoming:
            continue
        cur = start  # arriving at crossing cur[0] through port cur[1]
        while cur not in incoming:
            incoming[cur] = True
            exit_port = (cur[0], _OPPOSITE[cur[1]])
            counter += 1
            label[exit_port] = counter
            incoming[exit_port] = False
            nxt = link[exit_port]
            label[nxt] = counter
            cur = nxt
    crossings = []
    for c in range(n):
        under = (NW, SE) if over_is_swne[c] else (NE, SW)
        start = next(p for p in under if incoming[(c, p)])
        crossings.append(tuple(label[(c, (start + k) % 4)] for k in range(4)))
    return LinkDiagram(tuple(crossings))
