import random

from hypothesis import settings, strategies as st

from chordhom.chords import ChordDiagram
from chordhom.graphs import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def diagrams(draw, min_chords=0, max_chords=5):
    n = draw(st.integers(min_chords, max_chords))
    word = draw(st.permutations([i for i in range(1, n + 1) for _ in range(2)]))
    return ChordDiagram.from_word(word)


@st.composite
def graphs(draw, min_vertices=0, max_vertices=8):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def random_graph(rng: random.Random, max_vertices: int = 9, density: float | None = None) -> Graph:
    n = rng.randint(0, max_vertices)
    p = rng.random() if density is None else density
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def isomorphic(g: Graph, h: Graph) -> bool:
    import networkx as nx

    def to_nx(x):
        out = nx.Graph()
        out.add_nodes_from(range(x.n))
        out.add_edges_from(x.edges())
        return out

    return nx.is_isomorphic(to_nx(g), to_nx(h))
