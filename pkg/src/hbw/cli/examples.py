"""
Example Quiver Families

    chain n     1 <- 2 <- ... <- n              a_i: i+1 -> i
    star n      1, ..., n -> x                  a_i: i -> x
    zigzag n    y_{j-1} -> x_j <- y_j           a_j: y_j -> x_j, b_j: y_{j-1} -> x_j (y_0 = y_n)
    cycle n     directed circle                 a_j: j+1 -> j (mod n)
    bicycle n   circle in both directions       a_j: j+1 -> j, b_j: j -> j+1 (mod n)
"""

from ..core.quiver import Quiver

FAMILIES = ("chain", "star", "zigzag", "cycle", "bicycle")


def _successor(j: int, n: int) -> int:
    return j % n + 1


def gen_example(family: str, n: int) -> Quiver:
    """
    Build a member of an example family.

    Raises:
        ValueError: For an unknown family or n < 2
    """
    if family not in FAMILIES:
        raise ValueError(f"Unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < 2:
        raise ValueError(f"Family size must be at least 2, got {n}")

    numbered = [str(i) for i in range(1, n + 1)]
    if family == "chain":
        return Quiver.build(numbered, [(f"a{i}", i + 1, i) for i in range(1, n)])
    if family == "star":
        return Quiver.build(["x", *numbered], [(f"a{i}", i, "x") for i in range(1, n + 1)])
    if family == "zigzag":
        xs = [f"x{j}" for j in range(1, n + 1)]
        ys = [f"y{j}" for j in range(1, n + 1)]
        arrows = [(f"a{j}", f"y{j}", f"x{j}") for j in range(1, n + 1)]
        arrows += [(f"b{j}", f"y{(j - 2) % n + 1}", f"x{j}") for j in range(1, n + 1)]
        return Quiver.build(xs + ys, arrows)

    arrows = [(f"a{j}", _successor(j, n), j) for j in range(1, n + 1)]
    if family == "bicycle":
        arrows += [(f"b{j}", j, _successor(j, n)) for j in range(1, n + 1)]
    return Quiver.build(numbered, arrows)
