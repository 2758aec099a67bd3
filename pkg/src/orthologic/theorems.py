"""Registry of executable checks, one per structural law of the theory.

Every check scans one loaded algebra exhaustively and returns a CheckResult.
Characterization results are evaluated as equivalences of whole-table
predicates, so an algebra falsifying every clause at once still passes the
check.  Class preconditions are evaluated first; an unmet one yields a skip
whose witness names the requirement.  Witnesses of failing scans are min-lex
in the declared element order, with item tags for multi-part laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional

from .algebra import (
    CheckResult,
    FiniteAlgebra,
    InputError,
    axiom_holds,
    classify,
    down_set,
    big_meet,
    iter_bits,
    le,
    le_l,
    le_q,
    ortho,
    star,
    vee_q,
    wedge_p,
    wedge_q,
)
from .orthospace import (
    OrthoSpace,
    associated_orthospace,
    blocks,
    block_boolean_family,
    cl_algebra,
    enumerate_orthoclosed,
    is_dacey,
    is_normal,
    perp,
    _two_cell_partitions,
)
from .sasaki import (
    ProjectionMap,
    canonical_projection_family,
    center,
    check_sasaki_set,
    commutes,
    divides,
    generated_subalgebra,
    has_full_sasaki_set,
    is_full,
    is_iboolean_subalgebra,
    is_sasaki_space,
    sp_center_monoid_check,
    trivial_projection_family,
)

SUBSET_SCAN_CAP = 14  # universe size above which subset-quantified items skip


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    precondition: str  # "be" | "invbe" | "iol" | "ioml" | "iboolean"
    description: str
    arity: int


_REGISTRY: dict[str, CheckSpec] = {}
_EVAL: dict[str, Callable[[FiniteAlgebra], CheckResult]] = {}


def _register(check_id: str, precondition: str, description: str, arity: int):
    def deco(fn):
        _REGISTRY[check_id] = CheckSpec(check_id, precondition, description, arity)
        _EVAL[check_id] = fn
        return fn

    return deco


def _meets(alg: FiniteAlgebra, precondition: str) -> bool:
    lab = classify(alg)
    return {
        "be": lab.is_be,
        "invbe": lab.is_be and lab.is_involutive,
        "iol": lab.is_iol,
        "ioml": lab.is_ioml,
        "iboolean": lab.is_iboolean,
    }[precondition]


def list_checks() -> tuple[CheckSpec, ...]:
    return tuple(_REGISTRY.values())


def run_check(alg: FiniteAlgebra, check_id: str) -> CheckResult:
    spec = _REGISTRY.get(check_id)
    if spec is None:
        raise InputError(f"unknown check id {check_id!r}")
    if not _meets(alg, spec.precondition):
        return CheckResult(check_id, "skipped", (("precondition", spec.precondition),))
    return _EVAL[check_id](alg)


def run_all(alg: FiniteAlgebra) -> tuple[CheckResult, ...]:
    return tuple(run_check(alg, check_id) for check_id in _REGISTRY)


# -- scan helpers -----------------------------------------------------------

def _names(alg, roles, tup):
    return tuple((r, alg.elements[v]) for r, v in zip(roles, tup))


def _scan_items(alg, check_id, arity, items, roles=("x", "y", "z", "u")):
    """items: sequence of (tag, predicate).  First violation wins, scanning
    tuples lexicographically and items in listed order."""
    roles = roles[:arity]
    for tup in product(range(alg.n), repeat=arity):
        for tag, pred in items:
            if not pred(alg, *tup):
                witness = (("item", tag),) + _names(alg, roles, tup)
                return CheckResult(check_id, "fail", witness)
    return CheckResult(check_id, "pass")


def _forall(alg, arity, pred) -> Optional[tuple[int, ...]]:
    for tup in product(range(alg.n), repeat=arity):
        if not pred(alg, *tup):
            return tup
    return None


def _equivalence(alg, check_id, clauses):
    """clauses: sequence of (label, bool, witness-or-None).  Pass iff all the
    booleans agree; otherwise report each clause's value plus the first
    available witness of a false clause."""
    values = [c[1] for c in clauses]
    if all(values) or not any(values):
        return CheckResult(check_id, "pass")
    witness = tuple((label, "holds" if val else "fails") for label, val, _ in clauses)
    for label, val, wit in clauses:
        if not val and wit is not None:
            witness += wit
            break
    return CheckResult(check_id, "fail", witness)


def _pointwise_equiv(alg, check_id, arity, sides, roles=("x", "y", "z", "u")):
    """sides: (label, pred) pairs that must agree on every tuple."""
    roles = roles[:arity]
    for tup in product(range(alg.n), repeat=arity):
        values = [(label, pred(alg, *tup)) for label, pred in sides]
        if len({v for _, v in values}) > 1:
            witness = _names(alg, roles, tup) + tuple(
                (label, "holds" if v else "fails") for label, v in values
            )
            return CheckResult(check_id, "fail", witness)
    return CheckResult(check_id, "pass")


# -- basic consequences of the defining laws --------------------------------

@_register("L2-BE-PROPS", "be", "arithmetic of the arrow on (involutive) BE algebras", 3)
def _l2_be_props(alg):
    lab = classify(alg)
    items = [
        ("(1)", lambda a, x, y, z: a.arrow[x][a.arrow[y][x]] == a.one),
        ("(2)", lambda a, x, y, z: le(a, x, vee_q(a, x, y))),
    ]
    if lab.is_bounded:
        items += [
            ("(3)", lambda a, x, y, z: a.arrow[x][star(a, y)] == a.arrow[y][star(a, x)]),
            ("(4)", lambda a, x, y, z: le(a, x, star(a, star(a, x)))),
        ]
    if lab.is_involutive:
        items += [
            ("(5)", lambda a, x, y, z: a.arrow[star(a, x)][y] == a.arrow[star(a, y)][x]),
            ("(6)", lambda a, x, y, z: a.arrow[star(a, x)][star(a, y)] == a.arrow[y][x]),
            ("(7)", lambda a, x, y, z: a.arrow[star(a, a.arrow[x][y])][z]
             == a.arrow[x][a.arrow[star(a, y)][z]]),
            ("(8)", lambda a, x, y, z: a.arrow[x][a.arrow[y][z]]
             == a.arrow[star(a, a.arrow[x][star(a, y)])][z]),
            ("(9)", lambda a, x, y, z: a.arrow[star(a, a.arrow[star(a, x)][y])][a.arrow[star(a, x)][y]]
             == a.arrow[star(a, a.arrow[star(a, x)][x])][a.arrow[star(a, y)][y]]),
        ]
    return _scan_items(alg, "L2-BE-PROPS", 3, items)


@_register("P2-QBE-PROPS", "invbe", "order scaffolding on involutive BE algebras", 4)
def _p2_qbe_props(alg):
    items = [
        ("(1)", lambda a, x, y, z, u: not le_q(a, x, y)
         or (x == wedge_q(a, y, x) and y == vee_q(a, x, y))),
        ("(2-refl)", lambda a, x, y, z, u: le_q(a, x, x)),
        ("(2-antisym)", lambda a, x, y, z, u: not (le_q(a, x, y) and le_q(a, y, x)) or x == y),
        ("(3)", lambda a, x, y, z, u: vee_q(a, x, y)
         == star(a, wedge_q(a, star(a, x), star(a, y)))),
        ("(4)", lambda a, x, y, z, u: not le_q(a, x, y) or le(a, x, y)),
        ("(5)", lambda a, x, y, z, u: not (le_q(a, x, z) and le_q(a, y, z)
         and a.arrow[z][x] == a.arrow[z][y]) or x == y),
        ("(6)", lambda a, x, y, z, u: not le_l(a, x, y) or le(a, x, y)),
        ("(7-antisym)", lambda a, x, y, z, u: not (le_l(a, x, y) and le_l(a, y, x)) or x == y),
        ("(7-trans)", lambda a, x, y, z, u: not (le_l(a, x, y) and le_l(a, y, z))
         or le_l(a, x, z)),
        ("(8)", lambda a, x, y, z, u: not (le_l(a, z, x) and le_l(a, z, y))
         or le_l(a, z, wedge_p(a, x, y))),
        ("(9)", lambda a, x, y, z, u: a.arrow[wedge_p(a, x, y)][a.arrow[z][star(a, u)]]
         == a.arrow[wedge_p(a, x, z)][a.arrow[y][star(a, u)]]),
    ]
    return _scan_items(alg, "P2-QBE-PROPS", 4, items)


def _le_l_is_order(alg) -> bool:
    return (
        _forall(alg, 1, lambda a, x: le_l(a, x, x)) is None
        and _forall(alg, 2, lambda a, x, y: not (le_l(a, x, y) and le_l(a, y, x)) or x == y) is None
        and _forall(alg, 3, lambda a, x, y, z: not (le_l(a, x, y) and le_l(a, y, z)) or le_l(a, x, z)) is None
    )


@_register("R2-LEL-ORDER-IFF-IG", "invbe", "le_l is an order exactly under the iG law", 3)
def _r2_lel_order(alg):
    refl = _forall(alg, 1, lambda a, x: le_l(a, x, x))
    return _equivalence(
        alg,
        "R2-LEL-ORDER-IFF-IG",
        (
            ("le_l-order", _le_l_is_order(alg), _names(alg, ("x",), refl) if refl else None),
            ("iG", axiom_holds(alg, "iG"), None),
        ),
    )


@_register("L2-IMPL-EQUIV", "invbe", "three equivalent packagings of implicativity", 2)
def _l2_impl_equiv(alg):
    return _equivalence(
        alg,
        "L2-IMPL-EQUIV",
        (
            ("impl", axiom_holds(alg, "impl"), None),
            ("iG+Iabs-i", axiom_holds(alg, "iG") and axiom_holds(alg, "Iabs-i"), None),
            ("pi+Iabs-i", axiom_holds(alg, "pi") and axiom_holds(alg, "Iabs-i"), None),
        ),
    )


@_register("L2-IOL-PROPS", "iol", "le_l arithmetic on implicative-ortholattices", 4)
def _l2_iol_props(alg):
    items = [
        ("(1)", lambda a, x, y, z, u: le_l(a, x, y) == le_l(a, star(a, y), star(a, x))),
        ("(2)", lambda a, x, y, z, u: not le_q(a, x, y) or le_l(a, x, y)),
        ("(3)", lambda a, x, y, z, u: le_l(a, x, a.arrow[y][x])
         and le_l(a, x, a.arrow[star(a, x)][y])),
        ("(4)", lambda a, x, y, z, u: le_l(a, wedge_p(a, x, y), x)
         and le_l(a, wedge_p(a, x, y), y)),
        ("(5)", lambda a, x, y, z, u: (star(a, x) == a.arrow[x][y])
         == (star(a, y) == a.arrow[y][x])),
        ("(6)", lambda a, x, y, z, u: wedge_q(a, x, y) != x
         or wedge_q(a, x, star(a, y)) == a.zero),
        ("(7)", lambda a, x, y, z, u: not le_l(a, x, y)
         or wedge_q(a, x, star(a, y)) == a.zero),
        ("(8)", lambda a, x, y, z, u: not le_l(a, x, y)
         or (le_l(a, a.arrow[y][z], a.arrow[x][z]) and le_l(a, a.arrow[z][x], a.arrow[z][y]))),
        ("(9)", lambda a, x, y, z, u: not le_l(a, x, y)
         or (le_l(a, vee_q(a, x, z), vee_q(a, y, z))
             and le_l(a, wedge_q(a, x, z), wedge_q(a, y, z)))),
        ("(10)", lambda a, x, y, z, u: not (le_l(a, x, z) and le_l(a, y, z))
         or le_l(a, a.arrow[star(a, x)][y], z)),
        ("(11)", lambda a, x, y, z, u: le_l(
            a, a.arrow[a.arrow[x][star(a, y)]][star(a, a.arrow[x][y])], x)),
        ("(12)", lambda a, x, y, z, u: not (le_l(a, x, y) and le_l(a, z, u))
         or le_l(a, a.arrow[star(a, x)][z], a.arrow[star(a, y)][u])),
    ]
    return _scan_items(alg, "L2-IOL-PROPS", 4, items)


@_register("L2-IOM-3WAY", "invbe", "the three orthomodularity laws agree", 2)
def _l2_iom_3way(alg):
    return _equivalence(
        alg,
        "L2-IOM-3WAY",
        (
            ("IOM", axiom_holds(alg, "IOM"), None),
            ("IOM'", axiom_holds(alg, "IOM'"), None),
            ("IOM''", axiom_holds(alg, "IOM''"), None),
        ),
    )


@_register("T2-CHAR-IOML-LE", "iol", "orthomodularity via the order inclusion le_l into le_q", 2)
def _t2_char_le(alg):
    b = _forall(alg, 2, lambda a, x, y: not le_l(a, x, y) or le_q(a, x, y))
    c = _forall(alg, 2, lambda a, x, y: not le_l(a, x, y) or y == vee_q(a, y, x))
    return _equivalence(
        alg,
        "T2-CHAR-IOML-LE",
        (
            ("(a)", axiom_holds(alg, "IOM"), None),
            ("(b)", b is None, _names(alg, ("x", "y"), b) if b else None),
            ("(c)", c is None, _names(alg, ("x", "y"), c) if c else None),
        ),
    )


@_register("C2-LEQ-EQ-LEL", "ioml", "le_q and le_l coincide on orthomodular algebras", 2)
def _c2_leq_eq_lel(alg):
    return _pointwise_equiv(
        alg, "C2-LEQ-EQ-LEL", 2, (("le_q", le_q), ("le_l", le_l))
    )


@_register("P2-IOML-PROPS-A", "ioml", "meet/join arithmetic on orthomodular algebras", 3)
def _p2_ioml_a(alg):
    items = [
        ("(1)", lambda a, x, y, z: a.arrow[x][wedge_q(a, y, x)] == a.arrow[x][y]),
        ("(2)", lambda a, x, y, z: a.arrow[vee_q(a, x, y)][star(a, a.arrow[x][y])]
         == star(a, y)),
        ("(3)", lambda a, x, y, z: wedge_q(
            a, x, wedge_q(a, a.arrow[y][x], a.arrow[z][x])) == x),
        ("(4)", lambda a, x, y, z: a.arrow[a.arrow[x][y]][wedge_q(a, y, x)] == x),
        ("(5)", lambda a, x, y, z: not (le(a, x, y) and le_l(a, y, x)) or x == y),
        ("(6)", lambda a, x, y, z: le_l(a, wedge_q(a, x, y), y)
         and le_l(a, y, vee_q(a, x, y))),
        ("(7)", lambda a, x, y, z: a.arrow[wedge_q(a, x, y)][wedge_q(a, y, x)] == a.one),
        ("(8)", lambda a, x, y, z: a.arrow[vee_q(a, x, y)][vee_q(a, y, x)] == a.one),
        ("(9)", lambda a, x, y, z: a.arrow[vee_q(a, x, y)][y] == a.arrow[x][y]),
        ("(10)", lambda a, x, y, z: wedge_q(a, wedge_q(a, x, y), wedge_q(a, y, z))
         == wedge_q(a, wedge_q(a, x, y), z)),
    ]
    return _scan_items(alg, "P2-IOML-PROPS-A", 3, items)


@_register("P2-IOML-PROPS-B", "ioml", "bound transfer on orthomodular algebras", 3)
def _p2_ioml_b(alg):
    items = [
        ("(1)", lambda a, x, y, z: not (le_l(a, x, y) and le_l(a, x, z))
         or le_l(a, x, wedge_q(a, y, z))),
        ("(2)", lambda a, x, y, z: not le_l(a, x, y)
         or wedge_q(a, wedge_q(a, z, y), x) == wedge_q(a, z, x)),
        ("(3)", lambda a, x, y, z: not (le(a, x, y) and le_l(a, y, x)) or x == y),
        ("(4)", lambda a, x, y, z: not (le_l(a, y, x) and le_l(a, z, x))
         or le_l(a, vee_q(a, y, z), x)),
        ("(5)", lambda a, x, y, z: a.arrow[x][wedge_q(a, x, y)] == a.arrow[x][y]),
        ("(6)", lambda a, x, y, z: wedge_q(a, x, star(a, y)) != a.zero
         or wedge_q(a, x, y) == x),
    ]
    return _scan_items(alg, "P2-IOML-PROPS-B", 3, items)


@_register("T2-CHAR-IOML-5WAY", "iol", "five equivalent forms of orthomodularity", 2)
def _t2_char_5way(alg):
    b = _forall(alg, 2, lambda a, x, y: a.arrow[a.arrow[x][y]][wedge_q(a, y, x)] == x)
    c = _forall(alg, 2, lambda a, x, y: not (le(a, x, y) and le_l(a, y, x)) or x == y)
    d = _forall(alg, 2, lambda a, x, y: wedge_q(a, x, star(a, y)) != a.zero
                or wedge_q(a, x, y) == x)
    e = _forall(alg, 2, lambda a, x, y: a.arrow[x][wedge_q(a, x, y)] == a.arrow[x][y])
    return _equivalence(
        alg,
        "T2-CHAR-IOML-5WAY",
        (
            ("(a)", axiom_holds(alg, "IOM"), None),
            ("(b)", b is None, _names(alg, ("x", "y"), b) if b else None),
            ("(c)", c is None, _names(alg, ("x", "y"), c) if c else None),
            ("(d)", d is None, _names(alg, ("x", "y"), d) if d else None),
            ("(e)", e is None, _names(alg, ("x", "y"), e) if e else None),
        ),
    )


@_register("P2-IDIV-IFF-DISTRIB", "ioml", "divisibility equals distributivity", 3)
def _p2_idiv_distrib(alg):
    return _equivalence(
        alg,
        "P2-IDIV-IFF-DISTRIB",
        (
            ("Idiv", axiom_holds(alg, "Idiv"), None),
            ("Idis1+Idis2", axiom_holds(alg, "Idis1") and axiom_holds(alg, "Idis2"), None),
        ),
    )


@_register("R2-IDIV-IFF-AT", "iol", "the divisibility and contraction laws agree", 2)
def _r2_idiv_at(alg):
    return _equivalence(
        alg,
        "R2-IDIV-IFF-AT",
        (
            ("Idiv", axiom_holds(alg, "Idiv"), None),
            ("@", axiom_holds(alg, "@"), None),
        ),
    )


@_register("MBE-EQ", "invbe", "product-signature cross-check via x*y := (x -> y*)*", 3)
def _mbe_eq(alg):
    items = [
        ("PU", lambda a, x, y, z: wedge_p(a, a.one, x) == x),
        ("Pcomm", lambda a, x, y, z: wedge_p(a, x, y) == wedge_p(a, y, x)),
        ("Pass", lambda a, x, y, z: wedge_p(a, x, wedge_p(a, y, z))
         == wedge_p(a, wedge_p(a, x, y), z)),
        ("m-La", lambda a, x, y, z: wedge_p(a, x, a.zero) == a.zero),
        ("m-Re", lambda a, x, y, z: wedge_p(a, x, star(a, x)) == a.zero),
    ]
    scan = _scan_items(alg, "MBE-EQ", 3, items)
    if scan.failed:
        return scan

    def m_pimpl(a, x, y):
        t = star(a, wedge_p(a, x, star(a, y)))
        return star(a, wedge_p(a, t, star(a, x))) == x

    return _equivalence(
        alg,
        "MBE-EQ",
        (
            ("m-Pimpl", _forall(alg, 2, m_pimpl) is None, None),
            ("impl", axiom_holds(alg, "impl"), None),
        ),
    )


# -- orthogonality ----------------------------------------------------------

@_register("L3-ORTHO-BASICS", "iol", "elementary facts about the orthogonality relation", 2)
def _l3_ortho_basics(alg):
    items = [
        ("(1)", lambda a, x, y: ortho(a, x, y) == ortho(a, y, x)),
        ("(2)", lambda a, x, y: ortho(a, x, x) == (x == a.zero)),
        ("(3)", lambda a, x, y: ortho(a, a.zero, x)),
        ("(4)", lambda a, x, y: ortho(a, a.one, x) == (x == a.zero)),
        ("(5)", lambda a, x, y: not le_l(a, x, y) or ortho(a, x, star(a, y))),
        ("(6)", lambda a, x, y: ortho(a, x, star(a, a.arrow[y][x]))),
        ("(7)", lambda a, x, y: ortho(a, x, y) == le_l(a, x, star(a, y))),
    ]
    return _scan_items(alg, "L3-ORTHO-BASICS", 2, items)


@_register("L3-ORTHO-CONSEQ", "iol", "arrow identities for orthogonal pairs", 2)
def _l3_ortho_conseq(alg):
    items = [
        ("(1)", lambda a, x, y: not ortho(a, x, y)
         or (a.arrow[star(a, x)][star(a, y)] == star(a, y)
             and a.arrow[star(a, y)][star(a, x)] == star(a, x))),
        ("(2)", lambda a, x, y: not ortho(a, x, y)
         or a.arrow[a.arrow[star(a, x)][y]][x] == star(a, y)),
        ("(3)", lambda a, x, y: not ortho(a, x, y)
         or a.arrow[a.arrow[star(a, x)][y]][y] == star(a, x)),
        ("(4)", lambda a, x, y: not ortho(a, x, y)
         or a.arrow[star(a, x)][star(a, a.arrow[star(a, x)][y])] == star(a, y)),
    ]
    return _scan_items(alg, "L3-ORTHO-CONSEQ", 2, items)


@_register("P3-PERP-IFF-MEETZERO", "iol", "orthogonality equals vanishing meet (orthomodular law)", 2)
def _p3_perp_meetzero(alg):
    return _pointwise_equiv(
        alg,
        "P3-PERP-IFF-MEETZERO",
        2,
        (
            ("ortho", ortho),
            ("meet-zero", lambda a, x, y: wedge_q(a, x, y) == a.zero),
        ),
    )


@_register("P3-CHAR-IOML-ORTHO", "iol", "orthomodularity via meets of orthogonal pairs", 2)
def _p3_char_ioml_ortho(alg):
    rhs = _forall(
        alg, 2,
        lambda a, x, y: not ortho(a, x, y) or wedge_q(a, x, star(a, y)) == x,
    )
    return _equivalence(
        alg,
        "P3-CHAR-IOML-ORTHO",
        (
            ("IOM", axiom_holds(alg, "IOM"), None),
            ("ortho-meet", rhs is None, _names(alg, ("x", "y"), rhs) if rhs else None),
        ),
    )


@_register("P3-CL-IS-IOL", "iol", "the orthoclosed-set logic is an implicative-ortholattice", 0)
def _p3_cl_is_iol(alg):
    logic = cl_algebra(associated_orthospace(alg))
    lab = classify(logic)
    ok = lab.is_iol and axiom_holds(logic, "impl") and axiom_holds(logic, "DN")
    if ok:
        return CheckResult("P3-CL-IS-IOL", "pass")
    return CheckResult("P3-CL-IS-IOL", "fail", (("logic", "not an i-OL"),))


# -- projections and commutation --------------------------------------------

@_register("P4-SP-BASIC", "iol", "first projection identities", 3)
def _p4_sp_basic(alg):
    items = [
        ("(1)", lambda a, x, y, z: wedge_q(a, x, x) == x
         and wedge_q(a, x, a.one) == x and wedge_q(a, a.one, x) == x
         and wedge_q(a, x, a.zero) == a.zero and wedge_q(a, a.zero, x) == a.zero
         and wedge_q(a, star(a, x), x) == a.zero
         and wedge_q(a, x, star(a, x)) == a.zero),
        ("(2)", lambda a, x, y, z: not le_l(a, x, y) or wedge_q(a, y, x) == x),
        ("(3)", lambda a, x, y, z: wedge_q(a, y, wedge_q(a, y, x)) == wedge_q(a, y, x)),
        ("(4)", lambda a, x, y, z: not le_q(a, x, y) or wedge_q(a, x, y) == x),
        ("(5)", lambda a, x, y, z: not le_l(a, x, y)
         or le_l(a, wedge_q(a, x, z), wedge_q(a, y, z))),
    ]
    return _scan_items(alg, "P4-SP-BASIC", 3, items)


@_register("P4-SP-IOML", "ioml", "projection composition identities", 3)
def _p4_sp_ioml(alg):
    def item1(a, x, y, z):
        if any(wedge_q(a, v, x) != v for v in range(a.n)):
            return True
        if any(wedge_q(a, v, y) != v for v in range(a.n)):
            return True
        m = wedge_q(a, x, y)
        return all(wedge_q(a, v, m) == v for v in range(a.n))

    items = [
        ("(1)", item1),
        ("(2)", lambda a, x, y, z: wedge_q(a, wedge_q(a, x, y), y) == wedge_q(a, x, y)),
        ("(3)", lambda a, x, y, z: wedge_q(a, star(a, wedge_q(a, x, y)), y)
         == star(a, a.arrow[y][x])),
        ("(4)", lambda a, x, y, z: le_l(
            a, wedge_q(a, star(a, wedge_q(a, x, y)), y), star(a, x))),
        ("(5)", lambda a, x, y, z: le_l(a, wedge_q(a, x, z), star(a, y))
         == le_l(a, wedge_q(a, y, z), star(a, x))),
        ("(6)", lambda a, x, y, z: wedge_q(a, wedge_q(a, x, y), x) == wedge_q(a, y, x)),
        ("(7)", lambda a, x, y, z: x != wedge_q(a, x, y)
         or wedge_q(a, z, x) == wedge_q(a, wedge_q(a, z, y), x)),
    ]
    return _scan_items(alg, "P4-SP-IOML", 3, items)


@_register("P4-SP-IOML-B", "ioml", "projection fixed points, kernels and adjoint-style swaps", 3)
def _p4_sp_ioml_b(alg):
    def item5(a, x, y, z):
        squared_zero = all(
            wedge_q(a, wedge_q(a, v, x), x) == a.zero for v in range(a.n)
        )
        top = wedge_q(a, a.one, x)
        return squared_zero == le_l(a, top, star(a, top))

    items = [
        ("(1)", lambda a, x, y, z: (wedge_q(a, x, y) == x) == le_l(a, x, y)),
        ("(2)", lambda a, x, y, z: (wedge_q(a, x, y) == a.zero) == le_l(a, x, star(a, y))),
        ("(3)", lambda a, x, y, z: not le_l(a, x, y)
         or wedge_q(a, wedge_q(a, z, y), x) == wedge_q(a, z, x)),
        ("(4)", lambda a, x, y, z: (star(a, wedge_q(a, x, z))
         == a.arrow[wedge_q(a, x, z)][y])
         == (star(a, wedge_q(a, y, z)) == a.arrow[wedge_q(a, y, z)][x])),
        ("(5)", item5),
        ("(6)", lambda a, x, y, z: ortho(a, wedge_q(a, x, z), y)
         == ortho(a, x, wedge_q(a, y, z))),
        ("(7)", lambda a, x, y, z: ortho(a, x, y) == (wedge_q(a, y, x) == a.zero)),
        ("(8)", lambda a, x, y, z: not ortho(a, x, y)
         or ortho(a, wedge_q(a, x, y), star(a, y))),
    ]
    return _scan_items(alg, "P4-SP-IOML-B", 3, items)


@_register("T4-SASAKI-PERP-CHAR", "iol", "orthomodularity via projections moving across the relation", 3)
def _t4_sasaki_perp(alg):
    rhs = _forall(
        alg, 3,
        lambda a, x, y, z: not ortho(a, wedge_q(a, x, y), z)
        or ortho(a, x, wedge_q(a, z, y)),
    )
    return _equivalence(
        alg,
        "T4-SASAKI-PERP-CHAR",
        (
            ("IOM", axiom_holds(alg, "IOM"), None),
            ("swap", rhs is None, _names(alg, ("x", "y", "z"), rhs) if rhs else None),
        ),
    )


@_register("L4-C-BASICS", "iol", "easy commutation facts", 2)
def _l4_c_basics(alg):
    items = [
        ("(1)", lambda a, x, y: commutes(a, x, x) and commutes(a, x, a.zero)
         and commutes(a, a.zero, x) and commutes(a, x, a.one)
         and commutes(a, a.one, x) and commutes(a, x, star(a, x))
         and commutes(a, star(a, x), x)),
        ("(2)", lambda a, x, y: not (le_l(a, x, y) or le_l(a, x, star(a, y)))
         or commutes(a, x, y)),
        ("(3)", lambda a, x, y: commutes(a, x, a.arrow[y][x])
         and commutes(a, x, a.arrow[star(a, x)][y])
         and commutes(a, y, a.arrow[star(a, x)][y])),
    ]
    return _scan_items(alg, "L4-C-BASICS", 2, items)


@_register("T4-C-SYMMETRIC", "iol", "orthomodularity equals symmetry of commutation", 2)
def _t4_c_symmetric(alg):
    rhs = _forall(
        alg, 2, lambda a, x, y: not commutes(a, x, y) or commutes(a, y, x)
    )
    return _equivalence(
        alg,
        "T4-C-SYMMETRIC",
        (
            ("IOM", axiom_holds(alg, "IOM"), None),
            ("C-symmetric", rhs is None, _names(alg, ("x", "y"), rhs) if rhs else None),
        ),
    )


@_register("C4-C-MEET-COMM", "iol", "orthomodularity via commuting meets", 2)
def _c4_c_meet_comm(alg):
    rhs = _forall(
        alg, 2,
        lambda a, x, y: not commutes(a, x, y)
        or wedge_q(a, x, y) == wedge_q(a, y, x),
    )
    return _equivalence(
        alg,
        "C4-C-MEET-COMM",
        (
            ("IOM", axiom_holds(alg, "IOM"), None),
            ("C-meet", rhs is None, _names(alg, ("x", "y"), rhs) if rhs else None),
        ),
    )


@_register("L4-C-STAR-CLOSED", "ioml", "commutation is star-closed", 2)
def _l4_c_star_closed(alg):
    items = [
        ("", lambda a, x, y: not commutes(a, x, y)
         or (commutes(a, x, star(a, y)) and commutes(a, star(a, x), y)
             and commutes(a, star(a, x), star(a, y)))),
    ]
    return _scan_items(alg, "L4-C-STAR-CLOSED", 2, items)


@_register("P4-C-FORMULA", "ioml", "commutation via a single equation", 2)
def _p4_c_formula(alg):
    return _pointwise_equiv(
        alg,
        "P4-C-FORMULA",
        2,
        (
            ("C", commutes),
            ("equation", lambda a, x, y: a.arrow[a.arrow[x][star(a, y)]][star(a, a.arrow[x][y])] == x),
        ),
    )


@_register("P4-C-MEET-FORMULA", "ioml", "commutation via the pointed meet", 2)
def _p4_c_meet_formula(alg):
    return _pointwise_equiv(
        alg,
        "P4-C-MEET-FORMULA",
        2,
        (
            ("C", commutes),
            ("meet-form", lambda a, x, y: wedge_q(a, x, y) == wedge_p(a, x, y)),
        ),
    )


@_register("C4-C-4WAY", "ioml", "four equivalent forms of commutation", 2)
def _c4_c_4way(alg):
    return _pointwise_equiv(
        alg,
        "C4-C-4WAY",
        2,
        (
            ("(a)", commutes),
            ("(b)", lambda a, x, y: wedge_q(a, x, y) == wedge_q(a, y, x)),
            ("(c)", lambda a, x, y: vee_q(a, x, y) == vee_q(a, y, x)),
            ("(d)", lambda a, x, y: wedge_q(a, y, x) == wedge_q(a, x, y)),
        ),
    )


@_register("T4-SP-COMPOSE", "ioml", "commuting generators compose to the meet projection", 2)
def _t4_sp_compose(alg):
    def compose_ok(a, x, y):
        m = wedge_q(a, x, y)
        return all(
            wedge_q(a, wedge_q(a, v, y), x) == wedge_q(a, wedge_q(a, v, x), y)
            == wedge_q(a, v, m)
            for v in range(a.n)
        )

    def stable_ok(a, x, y):
        for v in range(a.n):
            if le_l(a, v, x) and not le_l(a, wedge_q(a, v, y), x):
                return False
            if le_l(a, v, y) and not le_l(a, wedge_q(a, v, x), y):
                return False
        return True

    return _pointwise_equiv(
        alg,
        "T4-SP-COMPOSE",
        2,
        (("(a)", commutes), ("(b)", compose_ok), ("(c)", stable_ok)),
    )


# -- divisibility and the Boolean side ---------------------------------------

@_register("L5-C-IFF-D", "iol", "commutation and divisibility coincide", 2)
def _l5_c_iff_d(alg):
    return _pointwise_equiv(
        alg, "L5-C-IFF-D", 2, (("C", commutes), ("D", divides))
    )


@_register("L5-D-BASICS", "iol", "easy divisibility facts", 2)
def _l5_d_basics(alg):
    items = [
        ("(1)", lambda a, x, y: divides(a, x, x) and divides(a, x, a.zero)
         and divides(a, a.zero, x) and divides(a, x, a.one)
         and divides(a, a.one, x) and divides(a, x, star(a, x))
         and divides(a, star(a, x), x)),
        ("(2)", lambda a, x, y: not (le_l(a, x, y) or le_l(a, x, star(a, y)))
         or divides(a, x, y)),
        ("(3)", lambda a, x, y: divides(a, x, a.arrow[y][x])
         and divides(a, x, a.arrow[star(a, x)][y])
         and divides(a, y, a.arrow[star(a, x)][y])),
    ]
    if classify(alg).is_ioml:
        items += [
            ("(4)", lambda a, x, y: not ortho(a, x, y)
             or (divides(a, x, y) and divides(a, y, x)
                 and divides(a, x, star(a, y)) and divides(a, star(a, y), x))),
            ("(5)", lambda a, x, y: divides(a, star(a, x), a.arrow[star(a, x)][y])
             and divides(a, star(a, y), a.arrow[star(a, x)][y])
             and divides(a, x, star(a, a.arrow[star(a, x)][y]))
             and divides(a, y, star(a, a.arrow[star(a, x)][y]))),
        ]
    return _scan_items(alg, "L5-D-BASICS", 2, items)


@_register("P5-BOOLEAN-IS-IOML", "iol", "the Boolean law implies orthomodularity", 2)
def _p5_boolean_is_ioml(alg):
    if axiom_holds(alg, "@") and not axiom_holds(alg, "IOM"):
        return CheckResult("P5-BOOLEAN-IS-IOML", "fail", (("@", "holds"), ("IOM", "fails")))
    return CheckResult("P5-BOOLEAN-IS-IOML", "pass")


@_register("T5-BOOLEAN-6WAY", "ioml", "six equivalent forms of the Boolean law", 2)
def _t5_boolean_6way(alg):
    def side(pred):
        w = _forall(alg, 2, pred)
        return w is None, _names(alg, ("x", "y"), w) if w else None

    # (e)/(f) assert that every pair commutes/divides (the center is all of
    # X); mere symmetry of the relations is automatic under orthomodularity
    # and would not be equivalent to the Boolean law.
    b, bw = side(lambda a, x, y: wedge_q(a, x, y) == wedge_p(a, x, y))
    c, cw = side(lambda a, x, y: wedge_q(a, x, y) == wedge_q(a, y, x))
    d, dw = side(lambda a, x, y: vee_q(a, x, y) == vee_q(a, y, x))
    e, ew = side(commutes)
    f, fw = side(divides)
    return _equivalence(
        alg,
        "T5-BOOLEAN-6WAY",
        (
            ("(a)", axiom_holds(alg, "@"), None),
            ("(b)", b, bw),
            ("(c)", c, cw),
            ("(d)", d, dw),
            ("(e)", e, ew),
            ("(f)", f, fw),
        ),
    )


@_register("T5-BOOLEAN-MEETLE", "ioml", "the Boolean law via bounded meets and joins", 2)
def _t5_boolean_meetle(alg):
    b = _forall(alg, 2, lambda a, x, y: le_l(a, wedge_q(a, x, y), x))
    c = _forall(alg, 2, lambda a, x, y: le_l(a, x, vee_q(a, x, y)))
    return _equivalence(
        alg,
        "T5-BOOLEAN-MEETLE",
        (
            ("(a)", axiom_holds(alg, "@"), None),
            ("(b)", b is None, _names(alg, ("x", "y"), b) if b else None),
            ("(c)", c is None, _names(alg, ("x", "y"), c) if c else None),
        ),
    )


@_register("T5-BOOLEAN-LE", "ioml", "the Boolean law via the inclusion le into le_l", 2)
def _t5_boolean_le(alg):
    rhs = _forall(alg, 2, lambda a, x, y: not le(a, x, y) or le_l(a, x, y))
    return _equivalence(
        alg,
        "T5-BOOLEAN-LE",
        (
            ("@", axiom_holds(alg, "@"), None),
            ("le-in-le_l", rhs is None, _names(alg, ("x", "y"), rhs) if rhs else None),
        ),
    )


@_register("C5-ORDERS-COINCIDE", "iboolean", "all three orders coincide on Boolean algebras", 2)
def _c5_orders(alg):
    return _pointwise_equiv(
        alg,
        "C5-ORDERS-COINCIDE",
        2,
        (("le", le), ("le_l", le_l), ("le_q", le_q)),
    )


@_register("L5-CENTER-ARROW", "ioml", "arrows of elements commuting with a third stay central", 3)
def _l5_center_arrow(alg):
    def item(a, x, y, z):
        if not (commutes(a, x, z) and commutes(a, y, z)):
            return True
        t = a.arrow[x][y]
        return le_l(a, t, a.arrow[a.arrow[t][star(a, z)]][star(a, a.arrow[t][z])])

    return _scan_items(alg, "L5-CENTER-ARROW", 3, ((("", item)),))


@_register("T5-CENTER-BOOLEAN", "ioml", "the center is a Boolean subalgebra", 2)
def _t5_center_boolean(alg):
    inner = is_iboolean_subalgebra(alg, center(alg))
    return CheckResult("T5-CENTER-BOOLEAN", inner.status, inner.witness)


def _ortho_pairs_boolean(alg) -> Optional[tuple[int, int]]:
    for x in range(alg.n):
        for y in range(alg.n):
            if ortho(alg, x, y):
                closure = generated_subalgebra(alg, (1 << x) | (1 << y))
                if not is_iboolean_subalgebra(alg, closure).passed:
                    return x, y
    return None


@_register("T5-ORTHO-PAIR-BOOLEAN", "iol", "orthomodularity via Boolean hulls of orthogonal pairs", 2)
def _t5_ortho_pair_boolean(alg):
    rhs = _ortho_pairs_boolean(alg)
    return _equivalence(
        alg,
        "T5-ORTHO-PAIR-BOOLEAN",
        (
            ("IOM", axiom_holds(alg, "IOM"), None),
            ("pairs-boolean", rhs is None, _names(alg, ("x", "y"), rhs) if rhs else None),
        ),
    )


@_register("T5-SP-CENTER-MONOID", "ioml", "central projections form an Abelian monoid", 2)
def _t5_sp_center_monoid(alg):
    inner = sp_center_monoid_check(alg)
    return CheckResult("T5-SP-CENTER-MONOID", inner.status, inner.witness)


# -- projection families -----------------------------------------------------

def _families(alg) -> list[tuple[str, tuple[ProjectionMap, ...]]]:
    fams = [("trivial", trivial_projection_family(alg))]
    if classify(alg).is_ioml:
        fams.append(("canonical", canonical_projection_family(alg)))
    return fams


@_register("P6-SS-PROPS", "iol", "consequences of the projection-family laws", 2)
def _p6_ss_props(alg):
    for fam_name, maps in _families(alg):
        for k, phi in enumerate(maps):
            lbl = phi.label or f"#{k}"
            if any(phi.image[phi.image[x]] != phi.image[x] for x in range(alg.n)):
                return CheckResult(
                    "P6-SS-PROPS", "fail",
                    (("item", "(3)"), ("family", fam_name), ("map", lbl)))
            for x in range(alg.n):
                lhs = phi.image[x] == alg.zero
                rhs = le_l(alg, x, star(alg, phi.image[alg.one]))
                if lhs != rhs:
                    return CheckResult(
                        "P6-SS-PROPS", "fail",
                        (("item", "(5)"), ("family", fam_name), ("map", lbl),
                         ("x", alg.elements[x])))
                for y in range(alg.n):
                    if ortho(alg, phi.image[x], phi.image[y]) and not ortho(alg, x, phi.image[y]):
                        return CheckResult(
                            "P6-SS-PROPS", "fail",
                            (("item", "(6)"), ("family", fam_name), ("map", lbl),
                             ("x", alg.elements[x]), ("y", alg.elements[y])))
                    if ortho(alg, phi.image[x], y) != ortho(alg, x, phi.image[y]):
                        return CheckResult(
                            "P6-SS-PROPS", "fail",
                            (("item", "(7)"), ("family", fam_name), ("map", lbl),
                             ("x", alg.elements[x]), ("y", alg.elements[y])))
            for m, psi in enumerate(maps):
                plbl = psi.label or f"#{m}"
                if phi.image[alg.one] == psi.image[alg.one] and phi.image != psi.image:
                    return CheckResult(
                        "P6-SS-PROPS", "fail",
                        (("item", "(2)"), ("family", fam_name), ("map", lbl),
                         ("other", plbl)))
                if le_l(alg, phi.image[alg.one], psi.image[alg.one]):
                    for x in range(alg.n):
                        if phi.image[psi.image[x]] != phi.image[x] or \
                                psi.image[phi.image[x]] != phi.image[x]:
                            return CheckResult(
                                "P6-SS-PROPS", "fail",
                                (("item", "(1)"), ("family", fam_name),
                                 ("map", lbl), ("other", plbl),
                                 ("x", alg.elements[x])))
                    if psi.image[phi.image[alg.one]] != phi.image[alg.one]:
                        return CheckResult(
                            "P6-SS-PROPS", "fail",
                            (("item", "(4)"), ("family", fam_name),
                             ("map", lbl), ("other", plbl)))
    return CheckResult("P6-SS-PROPS", "pass")


@_register("P6-SS-ARROW", "iol", "projection families preserve the arrow up to star", 2)
def _p6_ss_arrow(alg):
    for fam_name, maps in _families(alg):
        for k, phi in enumerate(maps):
            for x in range(alg.n):
                for y in range(alg.n):
                    lhs = phi.image[alg.arrow[x][y]]
                    rhs = alg.arrow[star(alg, phi.image[star(alg, x)])][phi.image[y]]
                    if lhs != rhs:
                        return CheckResult(
                            "P6-SS-ARROW", "fail",
                            (("family", fam_name), ("map", phi.label or f"#{k}"),
                             ("x", alg.elements[x]), ("y", alg.elements[y])))
    return CheckResult("P6-SS-ARROW", "pass")


@_register("P6-FULL-PROPS", "ioml", "identities of the full canonical family", 3)
def _p6_full_props(alg):
    items = [
        ("(1)", lambda a, x, y, z: not (le_l(a, z, x) and le_l(a, z, y))
         or le(a, z, wedge_q(a, star(a, wedge_q(a, star(a, y), x)), x))),
        ("(2)", lambda a, x, y, z: wedge_q(a, star(a, wedge_q(a, star(a, y), x)), x)
         == wedge_p(a, x, y)),
        ("(3)", lambda a, x, y, z: wedge_q(a, star(a, x), x) == a.zero),
    ]
    return _scan_items(alg, "P6-FULL-PROPS", 3, items)


@_register("P6-FULL-FORMULA", "ioml", "any full family computes the pointed meet", 2)
def _p6_full_formula(alg):
    maps = canonical_projection_family(alg)
    if not check_sasaki_set(alg, maps).passed or not is_full(alg, maps):
        return CheckResult("P6-FULL-FORMULA", "fail", (("family", "canonical"),))
    by_top = {phi.image[alg.one]: phi for phi in maps}
    for x in range(alg.n):
        phi = by_top[x]
        for y in range(alg.n):
            if phi.image[y] != wedge_q(alg, y, x):
                return CheckResult(
                    "P6-FULL-FORMULA", "fail",
                    (("x", alg.elements[x]), ("y", alg.elements[y])))
    return CheckResult("P6-FULL-FORMULA", "pass")


@_register("T6-FULLSET-IFF-IOML", "iol", "orthomodularity equals having a full projection family", 2)
def _t6_fullset(alg):
    verdict = has_full_sasaki_set(alg)
    return _equivalence(
        alg,
        "T6-FULLSET-IFF-IOML",
        (
            ("IOM", axiom_holds(alg, "IOM"), None),
            ("full-set", verdict.passed, verdict.witness if verdict.failed else None),
        ),
    )


# -- spaces -------------------------------------------------------------------

def _space_masks(alg, space: OrthoSpace, element_mask: int) -> int:
    """Convert a mask over the algebra universe to one over the points."""
    m = 0
    for i in iter_bits(element_mask):
        if i != alg.zero:
            m |= 1 << space.index(alg.elements[i])
    return m


@_register("P7-DACEY-IFF-BOOLEAN-PAIRS", "iol", "the Dacey property via Boolean hulls inside the logic", 2)
def _p7_dacey_pairs(alg):
    space = associated_orthospace(alg)
    logic = cl_algebra(space)
    rhs = _ortho_pairs_boolean(logic)
    return _equivalence(
        alg,
        "P7-DACEY-IFF-BOOLEAN-PAIRS",
        (
            ("dacey", is_dacey(space).passed, None),
            ("pairs-boolean", rhs is None,
             _names(logic, ("x", "y"), rhs) if rhs else None),
        ),
    )


@_register("L7-DOWNSET", "iol", "down-set identities linking the algebra to its space", 2)
def _l7_downset(alg):
    space = associated_orthospace(alg)

    def pts(mask: int) -> int:
        return _space_masks(alg, space, mask)

    for x in range(alg.n):
        dx = pts(down_set(alg, x))
        lhs = perp(space, dx)
        mid = pts(down_set(alg, star(alg, x)))
        direct = 0
        for i, p in enumerate(space.points):
            if ortho(alg, x, alg.index(p)):
                direct |= 1 << i
        if not (lhs == mid == direct):
            return CheckResult("L7-DOWNSET", "fail", (("item", "(1)"), ("x", alg.elements[x])))
    for x in range(alg.n):
        for y in range(alg.n):
            if down_set(alg, x) & down_set(alg, y) != down_set(alg, wedge_p(alg, x, y)):
                return CheckResult(
                    "L7-DOWNSET", "fail",
                    (("item", "(2)"), ("x", alg.elements[x]), ("y", alg.elements[y])))
            ax, ay = pts(down_set(alg, x)), pts(down_set(alg, y))
            cl_arrow = perp(space, ax & perp(space, ay))
            if pts(down_set(alg, alg.arrow[x][y])) != cl_arrow:
                return CheckResult(
                    "L7-DOWNSET", "fail",
                    (("item", "(3)"), ("x", alg.elements[x]), ("y", alg.elements[y])))
    if alg.n <= SUBSET_SCAN_CAP:
        for mask in range(1, 1 << alg.n):
            inter = alg.universe_mask()
            for y in iter_bits(mask):
                inter &= down_set(alg, y)
            if inter != down_set(alg, big_meet(alg, mask)):
                return CheckResult(
                    "L7-DOWNSET", "fail",
                    (("item", "(4)"), ("Y", ",".join(alg.names(mask)))))
        star_fold = lambda m: big_meet(
            alg, sum(1 << star(alg, y) for y in iter_bits(m)))
        for mask in range(1, 1 << alg.n):
            if mask & (1 << alg.zero):
                continue  # perp is a point-set notion
            expected = pts(down_set(alg, star_fold(mask)))
            if perp(space, pts(mask)) != expected:
                return CheckResult(
                    "L7-DOWNSET", "fail",
                    (("item", "(5)"), ("Y", ",".join(alg.names(mask)))))
    return CheckResult("L7-DOWNSET", "pass")


@_register("P7-CL-ISO", "iol", "the down-set map is an isomorphism onto the logic", 2)
def _p7_cl_iso(alg):
    space = associated_orthospace(alg)
    family = enumerate_orthoclosed(space)
    h = {x: _space_masks(alg, space, down_set(alg, x)) for x in range(alg.n)}
    if sorted(h.values()) != sorted(family.members) or len(set(h.values())) != alg.n:
        return CheckResult("P7-CL-ISO", "fail", (("map", "not a bijection"),))
    for x in range(alg.n):
        if perp(space, h[x]) != h[star(alg, x)]:
            return CheckResult("P7-CL-ISO", "fail", (("star-at", alg.elements[x]),))
        for y in range(alg.n):
            if perp(space, h[x] & perp(space, h[y])) != h[alg.arrow[x][y]]:
                return CheckResult(
                    "P7-CL-ISO", "fail",
                    (("x", alg.elements[x]), ("y", alg.elements[y])))
    return CheckResult("P7-CL-ISO", "pass")


@_register("T7-IOML-SASAKI", "ioml", "orthomodular algebras give Sasaki spaces", 0)
def _t7_ioml_sasaki(alg):
    inner = is_sasaki_space(associated_orthospace(alg))
    return CheckResult("T7-IOML-SASAKI", inner.status, inner.witness)


@_register("P7-FULLSET-SASAKI", "iol", "a full projection family forces a Sasaki space", 0)
def _p7_fullset_sasaki(alg):
    if not has_full_sasaki_set(alg).passed:
        return CheckResult("P7-FULLSET-SASAKI", "pass")
    inner = is_sasaki_space(associated_orthospace(alg))
    if inner.passed:
        return CheckResult("P7-FULLSET-SASAKI", "pass")
    return CheckResult("P7-FULLSET-SASAKI", "fail", inner.witness)


@_register("L7-NORMAL-CRIT", "iol", "the decomposition criterion matches the unique-decomposition reading", 0)
def _l7_normal_crit(alg):
    space = associated_orthospace(alg)
    family = enumerate_orthoclosed(space)
    decomps = [
        (a, b)
        for a in family.members
        for b in family.members
        if a and b and perp(space, a) == b and perp(space, b) == a
    ]
    by_definition = True
    witness = ()
    for block in blocks(space):
        for e1, e2 in _two_cell_partitions(block):
            extensions = [
                (a, b) for a, b in decomps if e1 & ~a == 0 and e2 & ~b == 0
            ]
            if len(extensions) != 1:
                by_definition = False
                witness = (
                    ("block", space.subset_name(block)),
                    ("cell", space.subset_name(e1)),
                )
                break
        if not by_definition:
            break
    if is_normal(space).passed == by_definition:
        return CheckResult("L7-NORMAL-CRIT", "pass")
    return CheckResult("L7-NORMAL-CRIT", "fail", witness)


@_register("P7-BLOCK-BOOLEAN", "iol", "block closures form Boolean subalgebras in normal spaces", 2)
def _p7_block_boolean(alg):
    space = associated_orthospace(alg)
    if not is_normal(space).passed:
        return CheckResult("P7-BLOCK-BOOLEAN", "skipped", (("precondition", "normal space"),))
    for block in blocks(space):
        verdict, _ = block_boolean_family(space, block)
        if not verdict.passed:
            return CheckResult(
                "P7-BLOCK-BOOLEAN", "fail",
                (("block", space.subset_name(block)),) + verdict.witness)
    return CheckResult("P7-BLOCK-BOOLEAN", "pass")
