"""Data model for betweenness instances and their canonical text format.

A constraint (middle, {a, b}) asks that the middle variable's position in
a linear arrangement lie strictly between the positions of a and b.  The
outer pair is unordered; the canonical form stores it sorted, so equal
constraints compare equal.  An instance is a set of such constraints over
variables 1..n (duplicates are rejected unless explicitly merged).

Text format (UTF-8, LF):

    c <comment>             any number of comment lines
    p btw <n> <m>           exactly one header, before all constraints
    b <middle> <o1> <o2>    m constraint lines; outer order free on input

Serialization emits constraints sorted by (middle, outer_lo, outer_hi).
Instance equality is set-based: constraint order never matters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    CountMismatchError,
    DuplicateConstraintError,
    DuplicateVariableError,
    InstanceSyntaxError,
    VariableRangeError,
)

VarId = int

# An arrangement maps every variable to a position; valid ones are
# bijections onto {1, ..., n}.
Arrangement = dict[int, int]


class Constraint(NamedTuple):
    middle: int
    outer_lo: int
    outer_hi: int

    def variables(self) -> frozenset[int]:
        return frozenset((self.middle, self.outer_lo, self.outer_hi))

    def var_key(self) -> tuple[int, int, int]:
        """The constraint's 3-set of variables, sorted."""
        return tuple(sorted((self.middle, self.outer_lo, self.outer_hi)))


def normalize_constraint(middle: int, a: int, b: int) -> Constraint:
    """Canonicalize (middle, {a, b}): sort the unordered outer pair.

    Raises DuplicateVariableError unless the three variables are distinct.
    """
    if middle == a or middle == b or a == b:
        raise DuplicateVariableError(
            f"constraint variables must be distinct, got ({middle}, {a}, {b})"
        )
    if a > b:
        a, b = b, a
    return Constraint(middle, a, b)


@dataclass(frozen=True, eq=False)
class Instance:
    """A duplicate-free collection of canonical constraints over 1..n.

    The constraint tuple preserves construction order for reproducibility,
    but equality and hashing treat it as a set.
    """

    n: int
    constraints: tuple[Constraint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0:
            raise VariableRangeError(f"variable count must be >= 0, got {self.n}")
        seen = set()
        for c in self.constraints:
            if not (c.middle != c.outer_lo != c.outer_hi != c.middle):
                raise DuplicateVariableError(f"non-distinct variables in {c}")
            if c.outer_lo > c.outer_hi:
                raise InstanceSyntaxError(f"non-canonical outer pair in {c}")
            for v in c:
                if not 1 <= v <= self.n:
                    raise VariableRangeError(
                        f"variable {v} outside [1, {self.n}] in {c}"
                    )
            if c in seen:
                raise DuplicateConstraintError(f"duplicate constraint {c}")
            seen.add(c)

    @property
    def m(self) -> int:
        return len(self.constraints)

    def constraint_set(self) -> frozenset[Constraint]:
        return frozenset(self.constraints)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.n == other.n and self.constraint_set() == other.constraint_set()

    def __hash__(self):
        return hash((self.n, self.constraint_set()))

    def variables(self) -> range:
        return range(1, self.n + 1)


def make_instance(
    n: int, triples: Iterable[tuple[int, int, int]], dedupe: bool = False
) -> Instance:
    """Build an instance from (middle, a, b) triples, canonicalizing each.

    With dedupe=True, repeated canonical constraints are silently merged
    (first occurrence kept); otherwise they raise DuplicateConstraintError.
    """
    constraints = []
    seen = set()
    for mid, a, b in triples:
        c = normalize_constraint(mid, a, b)
        if c in seen:
            if dedupe:
                continue
            raise DuplicateConstraintError(f"duplicate constraint {c}")
        seen.add(c)
        constraints.append(c)
    return Instance(n, tuple(constraints))


def parse_instance(text: str | bytes, dedupe: bool = False) -> Instance:
    """Parse the text format into a canonicalized Instance.

    The declared m is checked against the number of constraint lines read
    (before any dedupe merging).
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n = None
    m_declared = None
    triples: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise InstanceSyntaxError(f"line {lineno}: duplicate header")
            if len(tokens) != 4 or tokens[1] != "btw":
                raise InstanceSyntaxError(f"line {lineno}: bad header {raw!r}")
            try:
                n = int(tokens[2])
                m_declared = int(tokens[3])
            except ValueError:
                raise InstanceSyntaxError(f"line {lineno}: bad header {raw!r}") from None
            if n < 0 or m_declared < 0:
                raise InstanceSyntaxError(f"line {lineno}: negative count in header")
        elif tokens[0] == "b":
            if n is None:
                raise InstanceSyntaxError(f"line {lineno}: constraint before header")
            if len(tokens) != 4:
                raise InstanceSyntaxError(f"line {lineno}: bad constraint {raw!r}")
            try:
                mid, a, b = (int(t) for t in tokens[1:])
            except ValueError:
                raise InstanceSyntaxError(
                    f"line {lineno}: bad constraint {raw!r}"
                ) from None
            for v in (mid, a, b):
                if not 1 <= v <= n:
                    raise VariableRangeError(
                        f"line {lineno}: variable {v} outside [1, {n}]"
                    )
            triples.append((mid, a, b))
        else:
            raise InstanceSyntaxError(f"line {lineno}: unrecognized line {raw!r}")
    if n is None:
        raise InstanceSyntaxError("missing 'p btw <n> <m>' header")
    if len(triples) != m_declared:
        raise CountMismatchError(
            f"header declares {m_declared} constraints, read {len(triples)}"
        )
    return make_instance(n, triples, dedupe=dedupe)


def serialize_instance(inst: Instance) -> str:
    """Emit the text format, constraints in canonical sorted order."""
    lines = [f"p btw {inst.n} {inst.m}"]
    for c in sorted(inst.constraints):
        lines.append(f"b {c.middle} {c.outer_lo} {c.outer_hi}")
    return "\n".join(lines) + "\n"


def arrangement_from_order(order: Iterable[int]) -> Arrangement:
    """Positions from a placement sequence: order[k] sits at position k+1."""
    return {v: k + 1 for k, v in enumerate(order)}


def order_from_arrangement(arr: Arrangement) -> list[int]:
    """Variables sorted by position (inverse of arrangement_from_order)."""
    return [v for v, _ in sorted(arr.items(), key=lambda kv: kv[1])]


def check_arrangement(inst: Instance, arr: Arrangement) -> None:
    """Raise ValueError unless arr is a bijection from 1..n onto 1..n."""
    if set(arr.keys()) != set(inst.variables()):
        raise ValueError("arrangement does not cover exactly the instance variables")
    if sorted(arr.values()) != list(range(1, inst.n + 1)):
        raise ValueError("arrangement positions are not a bijection onto 1..n")
