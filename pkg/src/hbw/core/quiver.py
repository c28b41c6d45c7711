"""
Finite Quivers, Paths and Arrow Sets

A finite quiver is a vertex list P and an arrow list Q with source and
target maps s, t: Q -> P. Loops and parallel arrows are allowed. The input
order of vertices and arrows is semantic: every choice made by the
partition algorithm resolves to the smallest index in that order.

Paths follow the composition convention of the free category: the path
f1 f2 ... fl has f1 applied last, so its target is t(f1) and its source is
s(fl), and consecutive arrows satisfy s(f_i) = t(f_{i+1}). The identity at
x is the length-0 path id_x.

Arrow subsets (ArrowSet) are frozensets of arrow names over the full vertex
set. Graph questions on them (reachability, acyclicity) are answered by
networkx on a MultiDiGraph carrying one edge per arrow.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

ArrowSet = frozenset[str]


class QuiverError(ValueError):
    """Malformed quiver or reference to an unknown vertex or arrow."""


class CyclicQuiverError(QuiverError):
    """An operation that needs an acyclic arrow set was given a cyclic one."""


class Q1ContractError(QuiverError):
    """Two arrows of a unique-path arrow set share a target."""


@dataclass(frozen=True)
class Arrow:
    """
    A named arrow f: source -> target.

    Attributes:
        name: Identifier, unique within its quiver
        source: Source vertex s(f)
        target: Target vertex t(f)
    """
    name: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

    def __str__(self) -> str:
        return f"{self.name}: {self.source} -> {self.target}"


@dataclass(frozen=True)
class Path:
    """
    A path in a quiver, i.e. a morphism of the free category.

    Attributes:
        source: Source vertex (s(f_l), or x for id_x)
        target: Target vertex (t(f_1), or x for id_x)
        arrows: Arrow names f_1, ..., f_l in composition order
    """
    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.arrows and self.source != self.target:
            raise QuiverError("Identity path must have equal source and target")

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_identity(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if self.is_identity:
            return f"id_{self.source}"
        return "*".join(self.arrows)


@dataclass(frozen=True)
class Quiver:
    """
    A finite quiver with fixed input order.

    Attributes:
        vertices: Distinct vertex identifiers, in input order
        arrows: Arrows with distinct names, in input order
    """
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("Vertex identifiers must be distinct")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("Arrow names must be distinct")
        known = set(self.vertices)
        for arrow in self.arrows:
            if arrow.source not in known or arrow.target not in known:
                raise QuiverError(f"Arrow {arrow.name} has an endpoint outside the vertex list")

    @classmethod
    def build(
        cls,
        vertices: Iterable[object],
        arrows: Iterable[tuple[object, object, object]],
    ) -> 'Quiver':
        """
        Build a quiver from plain values.

        Args:
            vertices: Vertex identifiers (converted to str)
            arrows: (name, source, target) triples

        Returns:
            New Quiver
        """
        return cls(
            vertices=tuple(str(v) for v in vertices),
            arrows=tuple(Arrow(str(n), str(s), str(t)) for n, s, t in arrows),
        )

    @cached_property
    def _arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, name: str) -> Arrow:
        """Look up an arrow by name."""
        try:
            return self.arrows[self._arrow_index[name]]
        except KeyError:
            raise QuiverError(f"Unknown arrow: {name}") from None

    def arrow_index(self, name: str) -> int:
        self.arrow(name)
        return self._arrow_index[name]

    def vertex_index(self, vertex: str) -> int:
        try:
            return self._vertex_index[vertex]
        except KeyError:
            raise QuiverError(f"Unknown vertex: {vertex}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_index

    @property
    def all_arrows(self) -> ArrowSet:
        return frozenset(self._arrow_index)

    def ordered(self, arrows: Iterable[str]) -> tuple[str, ...]:
        """Return arrow names sorted by input order."""
        return tuple(sorted(set(arrows), key=self.arrow_index))

    def ordered_vertices(self, vertices: Iterable[str]) -> tuple[str, ...]:
        """Return vertices sorted by input order."""
        return tuple(sorted(set(vertices), key=self.vertex_index))

    def identity(self, vertex: str) -> Path:
        """The length-0 path id_x."""
        self.vertex_index(vertex)
        return Path(source=vertex, target=vertex)

    def arrow_path(self, name: str) -> Path:
        """The length-1 path consisting of a single arrow."""
        arrow = self.arrow(name)
        return Path(source=arrow.source, target=arrow.target, arrows=(name,))

    def path(self, *names: str) -> Path:
        """
        Build the path f_1 ... f_l from arrow names.

        Raises:
            QuiverError: If no names are given or the chaining condition fails
        """
        if not names:
            raise QuiverError("Use identity() for length-0 paths")
        arrows = [self.arrow(n) for n in names]
        for left, right in zip(arrows, arrows[1:], strict=False):
            if left.source != right.target:
                raise QuiverError(f"Arrows {left.name} and {right.name} do not chain")
        return Path(source=arrows[-1].source, target=arrows[0].target, arrows=tuple(names))

    def graph(self, arrows: Iterable[str] | None = None) -> nx.MultiDiGraph:
        """
        Build the networkx multigraph of an arrow subset over all vertices.

        Args:
            arrows: Arrow names to include (all arrows if None)
        """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        names = self.all_arrows if arrows is None else arrows
        for name in self.ordered(names):
            arrow = self.arrow(name)
            graph.add_edge(arrow.source, arrow.target, key=name)
        return graph

    def incoming(self, arrows: Iterable[str], vertex: str) -> tuple[str, ...]:
        """Arrows of a subset whose target is the given vertex, in input order."""
        return tuple(n for n in self.ordered(arrows) if self.arrow(n).target == vertex)

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def compose(p: Path, q: Path) -> Path | None:
    """
    Concatenate p after q.

    Returns:
        The path p q, or None when s(p) != t(q)
    """
    if p.source != q.target:
        return None
    return Path(source=q.source, target=p.target, arrows=p.arrows + q.arrows)


def is_cycle(p: Path) -> bool:
    """True iff the path ends where it starts; identities count as cycles."""
    return p.source == p.target


def is_acyclic(quiver: Quiver, arrows: Iterable[str]) -> bool:
    """True iff the arrow subset contains no loop and no directed cycle."""
    return nx.is_directed_acyclic_graph(quiver.graph(arrows))


def reachable(quiver: Quiver, arrows: Iterable[str], start: str, end: str) -> bool:
    """True iff a path of length >= 0 within the arrow subset runs from start to end."""
    quiver.vertex_index(start)
    quiver.vertex_index(end)
    return nx.has_path(quiver.graph(arrows), start, end)


def q1_path(quiver: Quiver, q1: Iterable[str], start: str, end: str) -> Path | None:
    """
    Find the unique path from start to end in an in-forest arrow set.

    Walks backward from end along the unique incoming arrow at each vertex.
    The identity path is returned when start == end.

    Args:
        quiver: Ambient quiver
        q1: Arrow set with at most one incoming arrow per vertex, acyclic
        start: Source vertex of the wanted path
        end: Target vertex of the wanted path

    Returns:
        The path, or None when no path exists

    Raises:
        Q1ContractError: If two arrows of q1 share a target on the walk
    """
    q1 = frozenset(q1)
    quiver.vertex_index(start)
    current = quiver.identity(end).target
    walked: list[str] = []
    while current != start:
        incoming = quiver.incoming(q1, current)
        if len(incoming) > 1:
            raise Q1ContractError(
                f"Arrows {', '.join(incoming)} share target {current}"
            )
        if not incoming:
            return None
        walked.append(incoming[0])
        current = quiver.arrow(incoming[0]).source
        if len(walked) > len(q1):
            raise CyclicQuiverError("Arrow set used for unique paths has a cycle")
    if not walked:
        return quiver.identity(start)
    return quiver.path(*walked)


def max_acyclic_extension(quiver: Quiver, base: Iterable[str]) -> ArrowSet:
    """
    Greedily extend an acyclic arrow set to a maximal acyclic one.

    Arrows outside the base are scanned in input order; an arrow f is added
    iff it is not a loop and no path from t(f) to s(f) exists in the set
    built so far.

    Raises:
        CyclicQuiverError: If the base set is not acyclic
    """
    base = frozenset(base)
    if not is_acyclic(quiver, base):
        raise CyclicQuiverError("Cannot extend a cyclic arrow set")
    graph = quiver.graph(base)
    chosen = set(base)
    for arrow in quiver.arrows:
        if arrow.name in chosen or arrow.is_loop:
            continue
        if nx.has_path(graph, arrow.target, arrow.source):
            continue
        graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        chosen.add(arrow.name)
    return frozenset(chosen)


def hset(
    quiver: Quiver,
    phat: Iterable[str],
    q1: Iterable[str],
    q3: Iterable[str],
) -> ArrowSet:
    """
    Arrows of q3 targeting phat that close no cycle with a q1 path.

    h belongs to the set iff t(h) is in phat and no q1 path (of length >= 0)
    runs from t(h) to s(h). A loop therefore never belongs to it.
    """
    phat = frozenset(phat)
    q1 = frozenset(q1)
    eligible = set()
    for name in q3:
        arrow = quiver.arrow(name)
        if arrow.target not in phat:
            continue
        if q1_path(quiver, q1, arrow.target, arrow.source) is None:
            eligible.add(name)
    return frozenset(eligible)


def gset(quiver: Quiver, q1: Iterable[str], q2: Iterable[str], h: str) -> ArrowSet:
    """
    Arrows g of q2 lying on a common cycle with h in q1 | q2 | {h}.

    Because q1 | q2 is acyclic, every such cycle is h followed by a path
    from t(h) to s(h); g lies on one iff t(h) reaches s(g) and t(g) reaches
    s(h).

    Raises:
        CyclicQuiverError: If q1 | q2 contains a cycle
    """
    q2 = frozenset(q2)
    base = frozenset(q1) | q2
    if not is_acyclic(quiver, base):
        raise CyclicQuiverError("G-set needs an acyclic Q1 | Q2")
    graph = quiver.graph(base)
    arrow_h = quiver.arrow(h)
    members = set()
    for name in q2:
        g = quiver.arrow(name)
        if nx.has_path(graph, arrow_h.target, g.source) and nx.has_path(graph, g.target, arrow_h.source):
            members.add(name)
    return frozenset(members)
