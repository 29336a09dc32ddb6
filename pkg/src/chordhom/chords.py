"""Chord diagrams and their circle (intersection) graphs.

Endpoints sit at positions 0..2n-1 in clockwise order.  Chord ``i`` is the
i-th chord by first endpoint, so ``word()`` is the canonical
double-occurrence word with labels 1..n assigned by first appearance.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

from .errors import GapOutOfRange, NotLinearError
from .graphs import Graph


@dataclass(frozen=True)
class ChordDiagram:
    pairing: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        p = self.pairing
        if len(p) % 2:
            raise ValueError("a chord diagram has an even number of endpoints")
        for i, j in enumerate(p):
            if not 0 <= j < len(p) or j == i or p[j] != i:
                raise ValueError(f"pairing is not a fixed-point-free involution at {i}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per chord required")

    @classmethod
    def from_word(cls, word: Sequence, labels: Optional[Sequence[str]] = None) -> "ChordDiagram":
        """Diagram from a sequence in which every symbol occurs exactly twice."""
        first: dict = {}
        pairing = [0] * len(word)
        order = []
        for pos, sym in enumerate(word):
            if sym in first:
                pairing[pos] = first[sym]
                pairing[first[sym]] = pos
            else:
                first[sym] = pos
                order.append(sym)
        if labels is None:
            labels = tuple(str(s) for s in order)
        return cls(tuple(pairing), tuple(labels))

    @classmethod
    def from_chords(cls, chords: Sequence[tuple[int, int]], labels=None) -> "ChordDiagram":
        pairing = [-1] * (2 * len(chords))
        for a, b in chords:
            pairing[a], pairing[b] = b, a
        if labels is not None:
            # labels follow the input order; re-sort them by first endpoint
            keyed = sorted(zip((min(c) for c in chords), labels))
            labels = tuple(lab for _, lab in keyed)
        return cls(tuple(pairing), labels)

    @property
    def n(self) -> int:
        return len(self.pairing) // 2

    @property
    def size(self) -> int:
        return len(self.pairing)

    def chords(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.pairing) if i < j]

    def word(self) -> tuple[int, ...]:
        out = [0] * self.size
        k = 0
        for i, j in enumerate(self.pairing):
            if i < j:
                k += 1
                out[i] = out[j] = k
        return tuple(out)

    def chord_labels(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(str(i + 1) for i in range(self.n))

    def rotated(self, shift: int) -> "ChordDiagram":
        """Diagram read starting from position ``shift``."""
        m = self.size
        if m == 0:
            return self
        w = self.word()
        return ChordDiagram.from_word([w[(shift + i) % m] for i in range(m)])

    def reflected(self) -> "ChordDiagram":
        return ChordDiagram.from_word(self.word()[::-1])

    def __str__(self) -> str:
        return " ".join(map(str, self.word()))


def crossing(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a1, b1 = sorted(c1)
    a2, b2 = sorted(c2)
    return (a1 < a2 < b1) != (a1 < b2 < b1)


def intersection_graph(d: ChordDiagram) -> Graph:
    """One vertex per chord; edges between chords whose endpoints alternate."""
    chords = d.chords()
    n = len(chords)
    adj = [0] * n
    for i in range(n):
        a, b = chords[i]
        for j in range(i + 1, n):
            c, e = chords[j]
            # chords sorted by first endpoint, so a < c
            if c < b < e:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(tuple(adj), d.chord_labels())


def _cut_word(d: ChordDiagram, gap: int) -> list[int]:
    if not 0 <= gap <= d.size:
        raise GapOutOfRange(f"gap {gap} outside 0..{d.size}")
    w = d.word()
    m = d.size
    return [w[(gap + i) % m] for i in range(m)] if m else []


def connected_sum(d1: ChordDiagram, gap1: int, d2: ChordDiagram, gap2: int) -> ChordDiagram:
    """Cut both circles at the given gaps and reglue without new crossings.

    Gap ``g`` is the point between positions g-1 and g (mod 2n); 0 and 2n
    name the same point.
    """
    labels1, labels2 = d1.chord_labels(), d2.chord_labels()
    word = [(1, x) for x in _cut_word(d1, gap1)] + [(2, x) for x in _cut_word(d2, gap2)]
    firsts = list(dict.fromkeys(word))
    labels = tuple(labels1[x - 1] if side == 1 else labels2[x - 1] for side, x in firsts)
    return ChordDiagram.from_word(word, labels)


def is_linear(d: ChordDiagram) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Two complementary arcs such that every chord has one endpoint in each, if any exist."""
    m = d.size
    if m == 0:
        return ((), ())
    for start in range(m):
        for length in range(1, m):
            arc = {(start + i) % m for i in range(length)}
            if all((i in arc) != (j in arc) for i, j in d.chords()):
                a = tuple((start + i) % m for i in range(length))
                b = tuple((start + length + i) % m for i in range(m - length))
                return a, b
    return None


def interlace(d1: ChordDiagram, d2: ChordDiagram) -> ChordDiagram:
    """Superimpose two linear diagrams so every chord of one crosses every chord of the other.

    Arcs are laid out as d1's first arc, d2's first arc, d1's second arc,
    d2's second arc, so the circle graph is the graph join of the inputs.
    """
    arcs1 = is_linear(d1)
    arcs2 = is_linear(d2)
    if arcs1 is None or arcs2 is None:
        raise NotLinearError("interlace needs two linear chord diagrams")
    w1, w2 = d1.word(), d2.word()
    a1, b1 = arcs1
    a2, b2 = arcs2
    word = (
        [w1[i] for i in a1]
        + [w2[i] + d1.n for i in a2]
        + [w1[i] for i in b1]
        + [w2[i] + d1.n for i in b2]
    )
    return ChordDiagram.from_word(word)


def k2_gadget() -> ChordDiagram:
    return ChordDiagram.from_word([1, 2, 1, 2])


def empty_diagram() -> ChordDiagram:
    return ChordDiagram(())


def realize_sphere(dim: int) -> ChordDiagram:
    """Diagram whose independence complex is S^dim: a connected sum of dim+1 crossing pairs."""
    if dim < -1:
        raise ValueError("sphere dimension must be >= -1")
    word = []
    for k in range(dim + 1):
        word += [2 * k + 1, 2 * k + 2, 2 * k + 1, 2 * k + 2]
    return ChordDiagram.from_word(word)


def realize_forest(g: Graph) -> ChordDiagram:
    """Chord diagram whose intersection graph is the given forest.

    Each component is grown from its smallest vertex; a child chord is
    inserted tightly around the first endpoint of its parent, so it crosses
    the parent and nothing else.  Components are joined by connected sum.
    """
    word: list[int] = []
    for comp in g.components():
        root = (comp & -comp).bit_length() - 1
        local = [root, root]
        seen = {root}
        queue = [root]
        for v in queue:
            nb = g.adj[v]
            while nb:
                low = nb & -nb
                u = low.bit_length() - 1
                nb ^= low
                if u in seen:
                    continue
                seen.add(u)
                queue.append(u)
                p = local.index(v)
                local[p:p + 1] = [u, v, u]
        word += local
    if g.num_edges() != g.n - len(g.components()):
        raise ValueError("graph is not a forest")
    d = ChordDiagram.from_word(word)
    # chords are numbered by first appearance; map them back to graph vertices
    order = []
    for v in word:
        if v not in order:
            order.append(v)
    return ChordDiagram(d.pairing, tuple(str(g.label(v)) for v in order))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    word: tuple[int, ...]

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


def _relabel_first_occurrence(seq: Sequence[int]) -> tuple[int, ...]:
    names: dict[int, int] = {}
    out = []
    for x in seq:
        if x not in names:
            names[x] = len(names) + 1
        out.append(names[x])
    return tuple(out)


def canonical_form(d: ChordDiagram) -> CanonicalForm:
    """Least relabelled word over all rotations and reflections of the circle."""
    w = d.word()
    m = len(w)
    if m == 0:
        return CanonicalForm(())
    best = None
    for seq in (w, w[::-1]):
        for s in range(m):
            cand = _relabel_first_occurrence(seq[s:] + seq[:s])
            if best is None or cand < best:
                best = cand
    return CanonicalForm(best)


def is_canonical_representative(d: ChordDiagram) -> bool:
    return d.word() == canonical_form(d).word
