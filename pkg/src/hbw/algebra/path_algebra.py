"""
Elements of the Path Algebra kQ

An element is a finite formal linear combination of paths with nonzero
coefficients. Multiplication extends path concatenation bilinearly; a
product of non-composable paths is zero.

Coefficients produced by the partition and matrix algorithms are always
integers (in fact +1 or -1); they are embedded into the field of whatever
representation evaluates them. Fractions are accepted as well.

Rendering grammar:
    terms joined by " + " / " - ", paths as arrow names joined by "*" in
    composition order, identities as "id_<vertex>", zero as "0".
    Example: "id_3 - a3*a1*a2"
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

from ..core.quiver import Path, compose

Coefficient = int | Fraction


@dataclass(frozen=True, eq=False)
class PathAlgebraElement:
    """
    A finite linear combination of paths.

    Attributes:
        terms: Map path -> nonzero coefficient; empty for the zero element
    """
    terms: Mapping[Path, Coefficient] = field(default_factory=dict)

    def __post_init__(self):
        for path, coeff in self.terms.items():
            if coeff == 0:
                raise ValueError(f"Stored coefficient of {path} is zero")
        object.__setattr__(self, "terms", MappingProxyType(dict(self.terms)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathAlgebraElement):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    @classmethod
    def zero(cls) -> 'PathAlgebraElement':
        return cls({})

    @classmethod
    def of(cls, path: Path, coeff: Coefficient = 1) -> 'PathAlgebraElement':
        """The element coeff * path."""
        return cls({path: coeff} if coeff != 0 else {})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Path, Coefficient]]) -> 'PathAlgebraElement':
        """Sum (path, coeff) pairs, pruning zero coefficients."""
        acc: dict[Path, Coefficient] = {}
        for path, coeff in pairs:
            acc[path] = acc.get(path, 0) + coeff
        return cls({p: c for p, c in acc.items() if c != 0})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def paths(self) -> tuple[Path, ...]:
        return tuple(self.terms)

    def coefficient(self, path: Path) -> Coefficient:
        return self.terms.get(path, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Path, Coefficient]]:
        return iter(self.terms.items())

    def __add__(self, other: 'PathAlgebraElement') -> 'PathAlgebraElement':
        return pa_linear(1, self, 1, other)

    def __sub__(self, other: 'PathAlgebraElement') -> 'PathAlgebraElement':
        return pa_linear(1, self, -1, other)

    def __neg__(self) -> 'PathAlgebraElement':
        return pa_linear(-1, self, 0, PathAlgebraElement.zero())

    def __mul__(self, other: 'PathAlgebraElement') -> 'PathAlgebraElement':
        return pa_mul(self, other)

    def render(self) -> str:
        """Render in the signed-sum grammar, shorter paths first."""
        if self.is_zero:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: item[0].length)
        parts = []
        for index, (path, coeff) in enumerate(ordered):
            magnitude = abs(coeff)
            body = str(path) if magnitude == 1 else f"{magnitude}*{path}"
            if index == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def pa_linear(
    a: Coefficient,
    x: PathAlgebraElement,
    b: Coefficient,
    y: PathAlgebraElement,
) -> PathAlgebraElement:
    """Return a*x + b*y with zero coefficients pruned."""
    return PathAlgebraElement.from_pairs(
        [(p, a * c) for p, c in x] + [(p, b * c) for p, c in y]
    )


def pa_mul(x: PathAlgebraElement, y: PathAlgebraElement) -> PathAlgebraElement:
    """Bilinear extension of concatenation; non-composable products vanish."""
    pairs = []
    for p, cp in x:
        for q, cq in y:
            product = compose(p, q)
            if product is not None:
                pairs.append((product, cp * cq))
    return PathAlgebraElement.from_pairs(pairs)
