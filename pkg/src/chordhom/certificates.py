"""Homotopy certificates for independence complexes and the graph reduction engine.

A certificate is a small expression tree (spheres, wedges, joins,
suspensions, a point, unresolved pieces).  :func:`reduce` turns a graph into
such an expression using moves on the graph that are homotopy equivalences of
the independence complex; :func:`normalize` then resolves the join and
suspension arithmetic on spheres.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Optional, Union

from .complexes import (
    HomologyResult,
    independence_homology,
    join_homology,
    wedge_homology,
)
from .errors import UnresolvedCertificate
from .graphs import Graph, iter_bits


@dataclass(frozen=True)
class Sphere:
    dim: int

    def __post_init__(self):
        if self.dim < -1:
            raise ValueError("sphere dimension must be >= -1")


@dataclass(frozen=True)
class Wedge:
    parts: tuple


@dataclass(frozen=True)
class Join:
    parts: tuple


@dataclass(frozen=True)
class Susp:
    inner: "Certificate"


@dataclass(frozen=True)
class Contractible:
    pass


@dataclass(frozen=True)
class Unknown:
    """An irreducible piece: the independence complex of ``graph``."""

    graph: Optional[Graph] = None
    homology: Optional[HomologyResult] = field(default=None, compare=False, hash=False)


Certificate = Union[Sphere, Wedge, Join, Susp, Contractible, Unknown]


# ---------------------------------------------------------------------------
# rendering and parsing: S(d) W(..) J(..) Susp(e) pt ?


def render(c: Certificate) -> str:
    if isinstance(c, Sphere):
        return f"S({c.dim})"
    if isinstance(c, Wedge):
        return "W(" + ",".join(render(p) for p in c.parts) + ")"
    if isinstance(c, Join):
        return "J(" + ",".join(render(p) for p in c.parts) + ")"
    if isinstance(c, Susp):
        return f"Susp({render(c.inner)})"
    if isinstance(c, Contractible):
        return "pt"
    if isinstance(c, Unknown):
        return "?"
    raise TypeError(f"not a certificate: {c!r}")


def parse_certificate(text: str) -> Certificate:
    s = text.replace(" ", "")
    pos = 0

    def expect(tok: str) -> None:
        nonlocal pos
        if not s.startswith(tok, pos):
            raise ValueError(f"expected {tok!r} at offset {pos} in {text!r}")
        pos += len(tok)

    def args() -> tuple:
        nonlocal pos
        expect("(")
        out = []
        if s.startswith(")", pos):
            pos += 1
            return ()
        while True:
            out.append(expr())
            if s.startswith(",", pos):
                pos += 1
                continue
            expect(")")
            return tuple(out)

    def expr() -> Certificate:
        nonlocal pos
        if s.startswith("Susp(", pos):
            pos += 4
            inner = args()
            if len(inner) != 1:
                raise ValueError("Susp takes exactly one argument")
            return Susp(inner[0])
        if s.startswith("S(", pos):
            pos += 2
            end = s.index(")", pos)
            dim = int(s[pos:end])
            pos = end + 1
            return Sphere(dim)
        if s.startswith("W", pos):
            pos += 1
            return Wedge(args())
        if s.startswith("J", pos):
            pos += 1
            return Join(args())
        if s.startswith("pt", pos):
            pos += 2
            return Contractible()
        if s.startswith("?", pos):
            pos += 1
            return Unknown()
        raise ValueError(f"cannot parse certificate at offset {pos}: {text!r}")

    out = expr()
    if pos != len(s):
        raise ValueError(f"trailing input in certificate {text!r}")
    return out


def _sort_key(c: Certificate):
    order = {Sphere: 0, Contractible: 1, Wedge: 2, Join: 3, Susp: 4, Unknown: 5}[type(c)]
    dim = c.dim if isinstance(c, Sphere) else 0
    extra = c.graph.adj if isinstance(c, Unknown) and c.graph is not None else ()
    return (order, dim, render(c), extra)


# ---------------------------------------------------------------------------
# rewriting


def _is_nonempty(c: Certificate) -> bool:
    return not (isinstance(c, Sphere) and c.dim == -1)


def _rules(c: Certificate) -> list[Certificate]:
    """Every single-step rewrite applicable at the root of ``c``."""
    out = []
    if isinstance(c, Susp):
        out.append(Join((Sphere(0), c.inner)))
    elif isinstance(c, Join):
        ps = c.parts
        if len(ps) == 0:
            out.append(Sphere(-1))
        elif len(ps) == 1:
            out.append(ps[0])
        for i, p in enumerate(ps):
            rest = ps[:i] + ps[i + 1:]
            if isinstance(p, Join):
                out.append(Join(ps[:i] + p.parts + ps[i + 1:]))
            elif isinstance(p, Sphere) and p.dim == -1:
                out.append(Join(rest))
            elif isinstance(p, Contractible):
                out.append(Contractible())
            elif isinstance(p, Wedge) and rest and p.parts and all(map(_is_nonempty, p.parts + rest)):
                out.append(Wedge(tuple(Join((q,) + rest) for q in p.parts)))
        spheres = [i for i, p in enumerate(ps) if isinstance(p, Sphere) and p.dim >= 0]
        for a in range(len(spheres)):
            for b in range(a + 1, len(spheres)):
                i, j = spheres[a], spheres[b]
                merged = Sphere(ps[i].dim + ps[j].dim + 1)
                rest = tuple(p for k, p in enumerate(ps) if k not in (i, j))
                out.append(Join((merged,) + rest))
    elif isinstance(c, Wedge):
        ps = c.parts
        if len(ps) == 0:
            out.append(Contractible())
        elif len(ps) == 1:
            out.append(ps[0])
        for i, p in enumerate(ps):
            if isinstance(p, Wedge):
                out.append(Wedge(ps[:i] + p.parts + ps[i + 1:]))
            elif isinstance(p, Contractible):
                out.append(Wedge(ps[:i] + ps[i + 1:]))
    return out


def _children(c: Certificate) -> tuple:
    if isinstance(c, (Wedge, Join)):
        return c.parts
    if isinstance(c, Susp):
        return (c.inner,)
    return ()


def _with_child(c: Certificate, i: int, new: Certificate) -> Certificate:
    if isinstance(c, Susp):
        return Susp(new)
    parts = c.parts[:i] + (new,) + c.parts[i + 1:]
    return replace(c, parts=parts)


def _redexes(c: Certificate, path=()):
    for k, r in enumerate(_rules(c)):
        yield path, r
    for i, ch in enumerate(_children(c)):
        yield from _redexes(ch, path + (i,))


def _replace_at(c: Certificate, path: tuple, new: Certificate) -> Certificate:
    if not path:
        return new
    i = path[0]
    return _with_child(c, i, _replace_at(_children(c)[i], path[1:], new))


def canonical_order(c: Certificate) -> Certificate:
    """Sort the parts of every wedge and join (both are commutative)."""
    if isinstance(c, (Wedge, Join)):
        return replace(c, parts=tuple(sorted((canonical_order(p) for p in c.parts), key=_sort_key)))
    if isinstance(c, Susp):
        return Susp(canonical_order(c.inner))
    return c


def rewrite_randomly(c: Certificate, rng: random.Random, max_steps: int = 100_000) -> Certificate:
    """Apply rewrite rules at randomly chosen positions until none applies."""
    for _ in range(max_steps):
        options = list(_redexes(c))
        if not options:
            return canonical_order(c)
        path, new = rng.choice(options)
        c = _replace_at(c, path, new)
    raise RuntimeError("rewriting did not terminate")


def normalize(c: Certificate) -> Certificate:
    """Rewrite to normal form: spheres joined, joins distributed over wedges, wedges flattened.

    Susp(X) -> J(S(0), X); J(S(a), S(b)) -> S(a+b+1); S(-1) is the unit of J;
    J(pt, X) -> pt; J distributes over W; nested W and J are flattened.
    Only joins involving unresolved pieces survive.
    """
    # bottom-up with a root fixpoint; the random strategy in rewrite_randomly must agree
    kids = _children(c)
    if kids:
        for i, ch in enumerate(kids):
            c = _with_child(c, i, normalize(ch))
    while True:
        steps = _rules(c)
        if not steps:
            return canonical_order(c)
        c = steps[0]
        kids = _children(c)
        for i, ch in enumerate(kids):
            c = _with_child(c, i, normalize(ch))


def is_resolved(c: Certificate) -> bool:
    """True when ``c`` is a point, a sphere or a wedge of spheres."""
    if isinstance(c, (Sphere, Contractible)):
        return True
    if isinstance(c, Wedge):
        return all(isinstance(p, Sphere) for p in c.parts)
    return False


def certificate_homology(c: Certificate) -> HomologyResult:
    """Reduced homology of a resolved certificate: one Z per sphere, in its dimension."""
    if not is_resolved(c):
        raise UnresolvedCertificate(f"certificate {render(c)} is not a wedge of spheres")
    if isinstance(c, Sphere):
        return HomologyResult.sphere(c.dim)
    if isinstance(c, Contractible):
        return HomologyResult()
    return wedge_homology(HomologyResult.sphere(p.dim) for p in c.parts)


def evaluate_homology(c: Certificate) -> HomologyResult:
    """Homology of any certificate whose unknown pieces carry their homology."""
    if isinstance(c, Sphere):
        return HomologyResult.sphere(c.dim)
    if isinstance(c, Contractible):
        return HomologyResult()
    if isinstance(c, Unknown):
        if c.homology is None:
            raise UnresolvedCertificate("unknown piece without homology")
        return c.homology
    if isinstance(c, Susp):
        return join_homology(HomologyResult.sphere(0), evaluate_homology(c.inner))
    if isinstance(c, Wedge):
        return wedge_homology(evaluate_homology(p) for p in c.parts)
    if isinstance(c, Join):
        out = HomologyResult.sphere(-1)
        for p in c.parts:
            out = join_homology(out, evaluate_homology(p))
        return out
    raise TypeError(f"not a certificate: {c!r}")


def fill_unknowns(c: Certificate) -> Certificate:
    """Attach brute-force homology to every unknown piece."""
    if isinstance(c, Unknown):
        if c.homology is None and c.graph is not None:
            return Unknown(c.graph, _residual_homology(c.graph))
        return c
    kids = _children(c)
    for i, ch in enumerate(kids):
        c = _with_child(c, i, fill_unknowns(ch))
    return c


@lru_cache(maxsize=65536)
def _residual_homology(g: Graph) -> HomologyResult:
    return independence_homology(g)


# ---------------------------------------------------------------------------
# graph reductions


def find_fold(g: Graph) -> Optional[tuple[int, int]]:
    """A pair (u, v), u != v, with N(u) inside N(v); then I(g) ~ I(g - v)."""
    for v in range(g.n):
        nv = g.adj[v]
        for u in iter_bits(g.all_mask & ~(1 << v)):
            if not (g.adj[u] & ~nv):
                return u, v
    return None


def find_pendant(g: Graph) -> Optional[tuple[int, int]]:
    """A pair (v, u) with N(v) = {u}; then I(g) ~ Susp I(g - N[u])."""
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            return v, g.adj[v].bit_length() - 1
    return None


def _reduce(g: Graph) -> Certificate:
    if g.n == 0:
        return Sphere(-1)
    comps = g.components()
    if len(comps) > 1:
        return Join(tuple(_reduce(g.induced(m)) for m in comps))
    if g.n == 1:
        return Contractible()
    if g.num_edges() == g.n * (g.n - 1) // 2:
        # I(K_m) is m points
        return Wedge((Sphere(0),) * (g.n - 1))
    fold = find_fold(g)
    if fold is not None:
        _, v = fold
        return _reduce(g.delete(1 << v))
    pend = find_pendant(g)
    if pend is not None:
        _, u = pend
        return Susp(_reduce(g.delete(g.adj[u] | 1 << u)))
    return Unknown(g)


def _collect_unknowns(c: Certificate, out: list) -> None:
    if isinstance(c, Unknown):
        out.append(c.graph)
    for ch in _children(c):
        _collect_unknowns(ch, out)


def reduce(g: Graph) -> tuple[Certificate, list[Graph]]:
    """Certificate for I(g) and the irreducible residual graphs.

    Moves, applied to a fixpoint: split into components (I of a disjoint
    union is the join); an isolated vertex makes I a cone; fold away v when
    N(u) is contained in N(v) for some u != v; a pendant vertex v with
    neighbour u gives I(g) ~ Susp I(g - N[u]); a complete graph on m vertices
    gives m points; the empty graph gives S(-1).
    Components where nothing applies stay as unknown leaves.
    """
    cert = normalize(_reduce(g))
    residuals: list[Graph] = []
    _collect_unknowns(cert, residuals)
    return cert, residuals


def graph_homology(g: Graph) -> HomologyResult:
    """H~(I(g)) via reductions, with brute force only on irreducible residuals."""
    cert, _ = reduce(g)
    return evaluate_homology(fill_unknowns(cert))
