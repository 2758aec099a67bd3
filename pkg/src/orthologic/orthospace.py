"""Orthogonality spaces attached to an algebra and their orthoclosed-set logic.

Points are the nonzero elements; x _|_ y holds exactly when x* = x -> y.
Subsets are bit masks over the point order.  The family of orthoclosed sets
is generated as all intersections of point-perps together with the full
point set, which is sound because every orthoclosed set is a perp and perp
turns unions into intersections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import (
    CheckResult,
    FiniteAlgebra,
    InputError,
    PreconditionError,
    ResourceLimitError,
    check_axiom,
    classify,
    iter_bits,
    popcount,
    require_iol,
    star,
)
from .documents import algebra_from_names

BLOCK_PARTITION_CAP = 20  # block size above which the 2^|E| partition scan aborts
FAMILY_CAP = 100_000  # orthoclosed-family size cap


@dataclass(frozen=True)
class OrthoSpace:
    """Point names plus a symmetric irreflexive relation as per-point masks."""

    points: tuple[str, ...]
    rel: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.points)
        if len(self.rel) != n:
            raise InputError("relation size does not match point count")
        for i, row in enumerate(self.rel):
            if row >> n:
                raise InputError("relation mask exceeds the point universe")
            if row & (1 << i):
                raise InputError(f"relation is not irreflexive at {self.points[i]}")
            for j in iter_bits(row):
                if not self.rel[j] & (1 << i):
                    raise InputError(
                        f"relation is not symmetric at ({self.points[i]}, {self.points[j]})"
                    )

    @property
    def n(self) -> int:
        return len(self.points)

    def full(self) -> int:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self.points.index(name)
        except ValueError:
            raise InputError(f"unknown point {name!r}") from None

    def mask(self, names) -> int:
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.points[i] for i in iter_bits(mask))

    def subset_name(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"

    @staticmethod
    def from_pairs(points: tuple[str, ...], pairs) -> "OrthoSpace":
        rel = [0] * len(points)
        idx = {p: i for i, p in enumerate(points)}
        for x, y in pairs:
            rel[idx[x]] |= 1 << idx[y]
            rel[idx[y]] |= 1 << idx[x]
        return OrthoSpace(points, tuple(rel))


@dataclass(frozen=True)
class ClosedFamily:
    """All orthoclosed subsets, sorted by (cardinality, mask value)."""

    members: tuple[int, ...]

    def index(self, mask: int) -> int:
        try:
            return self.members.index(mask)
        except ValueError:
            raise InputError(f"subset {mask:#x} is not orthoclosed") from None

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members


@lru_cache(maxsize=None)
def associated_orthospace(alg: FiniteAlgebra) -> OrthoSpace:
    """The orthogonality space on X \\ {0} with x _|_ y iff x* = x -> y."""
    require_iol(alg)
    live = [i for i in range(alg.n) if i != alg.zero]
    pos = {e: k for k, e in enumerate(live)}
    rel = [0] * len(live)
    for x in live:
        sx = star(alg, x)
        for y in live:
            if x != y and alg.arrow[x][y] == sx:
                rel[pos[x]] |= 1 << pos[y]
    return OrthoSpace(tuple(alg.elements[i] for i in live), tuple(rel))


def perp(space: OrthoSpace, members: int) -> int:
    """A^perp: everything orthogonal to all of A; perp of the empty set is
    the full point set."""
    acc = space.full()
    for i in iter_bits(members):
        acc &= space.rel[i]
    return acc


def orthoclosure(space: OrthoSpace, members: int) -> int:
    return perp(space, perp(space, members))


def is_orthoclosed(space: OrthoSpace, members: int) -> bool:
    return orthoclosure(space, members) == members


@lru_cache(maxsize=None)
def enumerate_orthoclosed(space: OrthoSpace) -> ClosedFamily:
    """Close {X'} under intersection with point-perps; every perp is such an
    intersection and every orthoclosed set is a perp."""
    family = {space.full()}
    frontier = [space.full()]
    while frontier:
        base = frontier.pop()
        for i in range(space.n):
            refined = base & space.rel[i]
            if refined not in family:
                if len(family) >= FAMILY_CAP:
                    raise ResourceLimitError(
                        f"orthoclosed family exceeds cap {FAMILY_CAP}"
                    )
                family.add(refined)
                frontier.append(refined)
    members = sorted(family, key=lambda m: (popcount(m), m))
    return ClosedFamily(tuple(members))


@lru_cache(maxsize=None)
def cl_algebra(space: OrthoSpace) -> FiniteAlgebra:
    """The orthoclosed-set logic as an algebra: A -> B = (A & B^perp)^perp,
    with the empty set as 0 and the full point set as 1."""
    family = enumerate_orthoclosed(space)
    names = [space.subset_name(m) for m in family.members]
    arrow = []
    for a in family.members:
        row = []
        for b in family.members:
            row.append(names[family.index(perp(space, a & perp(space, b)))])
        arrow.append(row)
    return algebra_from_names(
        "CL", names, arrow, names[family.index(space.full())], names[family.index(0)]
    )


def is_dacey(space: OrthoSpace) -> CheckResult:
    """Dacey space: the orthoclosed-set logic is orthomodular.  A failure
    carries the orthomodularity witness inside that logic."""
    logic = cl_algebra(space)
    if classify(logic).is_ioml:
        return CheckResult("dacey", "pass")
    return CheckResult("dacey", "fail", check_axiom(logic, "IOM").witness)


def blocks(space: OrthoSpace) -> tuple[int, ...]:
    """Maximal sets of mutually orthogonal points, sorted canonically.

    A point orthogonal to nothing never joins a larger block; such points
    are reported as singleton blocks only when the whole relation is empty,
    so a discrete space still decomposes into its points.
    """
    live = 0
    for i, row in enumerate(space.rel):
        if row:
            live |= 1 << i
    if not live:
        return tuple(1 << i for i in range(space.n))
    found: list[int] = []

    def bron_kerbosch(clique: int, cand: int, done: int) -> None:
        if not cand and not done:
            found.append(clique)
            return
        pivot = next(iter_bits(cand | done))
        for v in iter_bits(cand & ~space.rel[pivot]):
            bit = 1 << v
            bron_kerbosch(clique | bit, cand & space.rel[v], done & space.rel[v])
            cand &= ~bit
            done |= bit

    bron_kerbosch(0, live, 0)
    return tuple(sorted(found, key=lambda m: (popcount(m), m)))


def _two_cell_partitions(block: int):
    """Ordered pairs (E1, E2) of non-empty cells partitioning the block."""
    bits = list(iter_bits(block))
    for r in range(1, len(bits)):
        for combo in combinations(bits, r):
            e1 = 0
            for i in combo:
                e1 |= 1 << i
            yield e1, block & ~e1


def is_normal(space: OrthoSpace) -> CheckResult:
    """Every two-cell block partition (E1, E2) must induce the decomposition
    (E2^perp, E1^perp): perp(E1) = E2^perpperp, perp(E2) = E1^perpperp, both
    non-empty."""
    for block in blocks(space):
        if popcount(block) > BLOCK_PARTITION_CAP:
            raise ResourceLimitError(
                f"block {space.subset_name(block)} exceeds partition cap"
                f" {BLOCK_PARTITION_CAP}"
            )
        for e1, e2 in _two_cell_partitions(block):
            p1, p2 = perp(space, e1), perp(space, e2)
            ok = (
                p1 != 0
                and p2 != 0
                and p1 == orthoclosure(space, e2)
                and p2 == orthoclosure(space, e1)
            )
            if not ok:
                return CheckResult(
                    "normal",
                    "fail",
                    (
                        ("block", space.subset_name(block)),
                        ("cell", space.subset_name(e1)),
                    ),
                )
    return CheckResult("normal", "pass")


def block_boolean_family(space: OrthoSpace, block: int) -> tuple[CheckResult, tuple[int, ...]]:
    """The family {closure(A) : A subset of the block}, checked to be a
    subalgebra of the orthoclosed-set logic whose members pairwise satisfy
    the divisibility law.  Requires a normal space and an actual block."""
    if block not in blocks(space):
        raise PreconditionError(f"{space.subset_name(block)} is not a block")
    if not is_normal(space).passed:
        raise PreconditionError("space is not normal")
    bits = list(iter_bits(block))
    family = set()
    for r in range(len(bits) + 1):
        for combo in combinations(bits, r):
            a = 0
            for i in combo:
                a |= 1 << i
            family.add(orthoclosure(space, a))
    members = tuple(sorted(family, key=lambda m: (popcount(m), m)))
    logic = cl_algebra(space)
    closed = enumerate_orthoclosed(space)
    idx = {m: closed.index(m) for m in members}
    inside = set(idx.values())

    def name(i: int) -> str:
        return logic.elements[i]

    from .sasaki import divides  # deferred; sasaki imports this module

    for a in members:
        if closed.index(perp(space, a)) not in inside:
            res = CheckResult(
                "block-boolean", "fail", (("member", space.subset_name(a)),)
            )
            return res, members
        for b in members:
            ia, ib = idx[a], idx[b]
            if logic.arrow[ia][ib] not in inside:
                res = CheckResult(
                    "block-boolean",
                    "fail",
                    (("x", name(ia)), ("y", name(ib))),
                )
                return res, members
            if not divides(logic, ia, ib):
                res = CheckResult(
                    "block-boolean",
                    "fail",
                    (("x", name(ia)), ("y", name(ib))),
                )
                return res, members
    return CheckResult("block-boolean", "pass"), members
