"""
Quiver Partition (Algorithm A)

Splits the vertices of a quiver into P-check (targets of the chosen forest
Q1) and P-hat, and the arrows into Q1, Q2 and Q3:

    Q1 = (f_1, ..., f_l)   one arrow into each a_i, t(f_i) = a_i
    Q2 = (g_1, ..., g_n)   the rest of a maximal acyclic subquiver
    Q3 = (h_1, ..., h_r)   arrows outside that subquiver

The while loop repeatedly picks an arrow h from the H-set, drops the
G-set of arrows sharing a cycle with h, extends to a maximal acyclic
subquiver and re-chooses the forest Q1. Each pass moves t(h) from P-hat
into P-check, which bounds the number of passes by |P|.

Every choice resolves to the smallest index in the quiver's input order.
"""

import logging
from dataclasses import dataclass

from ..core.quiver import (
    Quiver,
    QuiverError,
    gset,
    hset,
    is_acyclic,
    max_acyclic_extension,
    q1_path,
    reachable,
)
from ..core.report import ValidationReport

logger = logging.getLogger(__name__)


class PartitionError(ValueError):
    """Algorithm A guard tripped, or an invalid partition was used."""


@dataclass(frozen=True)
class Partition:
    """
    Output of Algorithm A.

    Attributes:
        a: Ordered vertices a_1..a_l (P-check)
        b: Ordered vertices b_1..b_m (P-hat)
        f: Ordered arrows f_1..f_l (Q1), t(f_i) = a_i
        g: Ordered arrows g_1..g_n (Q2)
        h: Ordered arrows h_1..h_r (Q3)
    """
    a: tuple[str, ...]
    b: tuple[str, ...]
    f: tuple[str, ...]
    g: tuple[str, ...]
    h: tuple[str, ...]

    @property
    def q1(self) -> frozenset[str]:
        return frozenset(self.f)

    @property
    def q2(self) -> frozenset[str]:
        return frozenset(self.g)

    @property
    def q3(self) -> frozenset[str]:
        return frozenset(self.h)

    @property
    def row_arrows(self) -> tuple[str, ...]:
        """Arrow order of the cochain blocks: f's, then g's, then h's."""
        return self.f + self.g + self.h

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.a)

    @property
    def m(self) -> int:
        return len(self.b)

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def r(self) -> int:
        return len(self.h)

    def render(self) -> str:
        """One-line rendering, e.g. "a: 1,2 | b: 3 | f: a1,a2 | g: — | h: —"."""
        def fmt(items: tuple[str, ...]) -> str:
            return ",".join(items) if items else "—"
        return " | ".join(
            f"{label}: {fmt(items)}"
            for label, items in (("a", self.a), ("b", self.b), ("f", self.f), ("g", self.g), ("h", self.h))
        )

    def __str__(self) -> str:
        return self.render()


def algorithm_a(quiver: Quiver) -> Partition:
    """
    Partition a quiver (Algorithm A).

    Args:
        quiver: Any finite quiver; loops and cycles are allowed

    Returns:
        A partition satisfying every invariant checked by validate_partition

    Raises:
        PartitionError: If the loop guard trips or P-hat fails to shrink
    """
    p_hat = set(quiver.vertices)
    q1: frozenset[str] = frozenset()
    q2: frozenset[str] = frozenset()
    q3: frozenset[str] = quiver.all_arrows
    guard = len(quiver.vertices) + len(quiver.arrows) + 1
    iterations = 0

    while True:
        eligible = hset(quiver, p_hat, q1, q3)
        if not eligible:
            break
        iterations += 1
        if iterations > guard:
            raise PartitionError(f"Algorithm A exceeded {guard} iterations")

        h = quiver.ordered(eligible)[0]
        cycle_mates = gset(quiver, q1, q2, h)
        q_prime = ((q1 | q2) - cycle_mates) | {h}
        q_bar = max_acyclic_extension(quiver, q_prime)

        p_check = quiver.ordered_vertices(quiver.arrow(n).target for n in q_bar)
        new_p_hat = set(quiver.vertices) - set(p_check)
        if len(new_p_hat) >= len(p_hat):
            raise PartitionError(
                f"P-hat did not shrink at iteration {iterations} (h = {h})"
            )
        if iterations > len(quiver.vertices):
            raise PartitionError(f"Algorithm A ran {iterations} passes on {len(quiver.vertices)} vertices")
        p_hat = new_p_hat

        q1 = frozenset(quiver.incoming(q_bar, vertex)[0] for vertex in p_check)
        q2 = q_bar - q1
        q3 = quiver.all_arrows - q_bar
        logger.debug(
            f"Pass {iterations}: h={h}, G={sorted(cycle_mates)}, "
            f"P-check={list(p_check)}, Q1={list(quiver.ordered(q1))}"
        )

    a, f = _order_forest(quiver, q1)
    partition = Partition(
        a=a,
        b=quiver.ordered_vertices(p_hat),
        f=f,
        g=quiver.ordered(q2),
        h=quiver.ordered(q3),
    )
    logger.debug(f"Partition after {iterations} pass(es): {partition}")
    return partition


def _order_forest(quiver: Quiver, q1: frozenset[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Step 4: peel off targets of Q1 that are the source of no remaining Q1 arrow."""
    remaining = set(q1)
    pending = list(quiver.ordered_vertices(quiver.arrow(n).target for n in q1))
    a: list[str] = []
    f: list[str] = []
    while pending:
        sources = {quiver.arrow(n).source for n in remaining}
        x = next((v for v in pending if v not in sources), None)
        if x is None:
            raise PartitionError("No Q1 target is free of outgoing Q1 arrows")
        incoming = quiver.incoming(remaining, x)
        if len(incoming) != 1:
            raise PartitionError(f"Vertex {x} has {len(incoming)} incoming Q1 arrows")
        a.append(x)
        f.append(incoming[0])
        pending.remove(x)
        remaining.discard(incoming[0])
    return tuple(a), tuple(f)


def validate_partition(quiver: Quiver, partition: Partition) -> ValidationReport:
    """
    Check every Partition invariant against a quiver.

    Structural clauses (decompositions, targets) are checked first; if any
    fails the path-based clauses are skipped.

    Returns:
        Report whose first entry is the first violated clause
    """
    report = ValidationReport("partition")
    vertices = partition.a + partition.b
    if len(set(vertices)) != len(vertices) or set(vertices) != set(quiver.vertices):
        report.add("vertex decomposition: a and b must split the vertex set disjointly")
    arrows = partition.row_arrows
    if len(set(arrows)) != len(arrows) or set(arrows) != set(quiver.all_arrows):
        report.add("arrow decomposition: f, g and h must split the arrow set disjointly")
    if not report.is_valid:
        return report

    if len(partition.a) != len(partition.f):
        report.add(f"target mismatch: {len(partition.a)} a-vertices but {len(partition.f)} f-arrows")
        return report
    for i, (vertex, name) in enumerate(zip(partition.a, partition.f, strict=True), start=1):
        if quiver.arrow(name).target != vertex:
            report.add(f"target mismatch: t(f{i}) = t({name}) is not a{i} = {vertex}")
    if not report.is_valid:
        return report

    q1 = partition.q1
    acyclic_part = q1 | partition.q2
    if not is_acyclic(quiver, acyclic_part):
        report.add("maximality: Q1 | Q2 contains a cycle")
        return report
    for name in partition.h:
        arrow = quiver.arrow(name)
        if not arrow.is_loop and not reachable(quiver, acyclic_part, arrow.target, arrow.source):
            report.add(f"maximality: {name} can be added to Q1 | Q2 without a cycle")

    for i, target in enumerate(partition.a):
        for j, source in enumerate(partition.a):
            if i == j:
                continue
            if i >= j and q1_path(quiver, q1, source, target) is not None:
                report.add(f"ordering: Q1 path from a{j + 1} = {source} to a{i + 1} = {target}")

    if partition.h and is_acyclic(quiver, quiver.all_arrows):
        report.add("acyclic quiver: Q3 must be empty")

    b = set(partition.b)
    for i, name in enumerate(partition.h, start=1):
        arrow = quiver.arrow(name)
        if arrow.target in b and q1_path(quiver, q1, arrow.target, arrow.source) is None:
            report.add(f"cycle witness: no Q1 path p with h{i} = {name} followed by p a cycle")
    return report


def partition_from_lists(
    quiver: Quiver,
    a: list[str],
    b: list[str],
    f: list[str],
    g: list[str],
    h: list[str],
) -> Partition:
    """
    Build a partition from user-supplied lists, checking that names exist.

    Raises:
        QuiverError: If a vertex or arrow is not in the quiver
    """
    for vertex in (*a, *b):
        quiver.vertex_index(vertex)
    for name in (*f, *g, *h):
        if not quiver.has_arrow(name):
            raise QuiverError(f"Unknown arrow: {name}")
    return Partition(a=tuple(a), b=tuple(b), f=tuple(f), g=tuple(g), h=tuple(h))
