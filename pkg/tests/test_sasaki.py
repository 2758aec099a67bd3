from itertools import product

import pytest

from orthologic import (
    PreconditionError,
    associated_orthospace,
    center,
    check_sasaki_set,
    classify,
    commutes,
    divides,
    dual_projection,
    generated_subalgebra,
    has_full_sasaki_set,
    is_full,
    is_iboolean_subalgebra,
    is_sasaki_space,
    is_subalgebra,
    le_l,
    orthogonal_pair_boolean_witness,
    sasaki_map_search,
    sasaki_maps_for_all,
    sasaki_projection,
    sp_center_monoid_check,
    star,
    vee_q,
    wedge_q,
)
from orthologic.algebra import ortho
from orthologic.sasaki import (
    ProjectionMap,
    canonical_projection_family,
    compose,
    trivial_projection_family,
)

from published_tables import COMPOSED_ROW_IOML10, PROJECTIONS_IOML6

IOML_NAMES = ("ioml10", "ioml6-full", "sasaki6")


def pairs(alg):
    return product(range(alg.n), repeat=2)


# -- projections ----------------------------------------------------------------

def test_projection_rows_match_published_tables(ioml6_full):
    alg = ioml6_full
    for gen, row in PROJECTIONS_IOML6.items():
        phi = sasaki_projection(alg, alg.index(gen))
        assert [alg.elements[v] for v in phi.image] == row.split()
        assert phi.label == gen


def test_projection_constants(algebras):
    for alg in algebras.values():
        assert sasaki_projection(alg, alg.one).image == tuple(range(alg.n))
        assert sasaki_projection(alg, alg.zero).image == tuple(
            alg.zero for _ in range(alg.n)
        )


def test_projection_spot_value(ioml10):
    phi_e = sasaki_projection(ioml10, ioml10.index("e"))
    assert ioml10.elements[phi_e.image[ioml10.index("c")]] == "e"


def test_dual_projection_examples(algebras):
    for alg in algebras.values():
        assert dual_projection(alg, alg.one).image == tuple(range(alg.n))
    i6 = algebras["ioml6-full"]
    assert i6.elements[dual_projection(i6, i6.index("a")).image[i6.zero]] == "b"
    bz = algebras["benzene6"]
    assert bz.elements[dual_projection(bz, bz.index("c")).image[bz.index("a")]] == "a"


def test_dual_is_star_conjugate(algebras):
    for alg in algebras.values():
        for a in range(alg.n):
            phi = sasaki_projection(alg, a)
            dual = dual_projection(alg, a)
            for x in range(alg.n):
                assert dual.image[x] == star(alg, phi.image[star(alg, x)])


def test_projection_identities_on_orthomodular_fixtures(algebras):
    for name in IOML_NAMES:
        alg = algebras[name]
        for a in range(alg.n):
            phi = sasaki_projection(alg, a)
            for x in range(alg.n):
                assert phi.image[phi.image[x]] == phi.image[x]
                assert (phi.image[x] == x) == le_l(alg, x, a)
                assert (phi.image[x] == alg.zero) == le_l(alg, x, star(alg, a))
            for x in range(alg.n):
                for y in range(alg.n):
                    if le_l(alg, x, y):
                        assert le_l(alg, phi.image[x], phi.image[y])


def test_composed_projection_rows_on_ioml10(ioml10):
    alg = ioml10
    a, e = alg.index("a"), alg.index("e")
    phi_a, phi_e = sasaki_projection(alg, a), sasaki_projection(alg, e)
    expected = COMPOSED_ROW_IOML10.split()
    meet = sasaki_projection(alg, wedge_q(alg, a, e))
    for x in range(alg.n):
        assert alg.elements[compose(phi_a, phi_e).image[x]] == expected[x]
        assert alg.elements[compose(phi_e, phi_a).image[x]] == expected[x]
        assert alg.elements[meet.image[x]] == expected[x]


def test_projections_need_not_commute_outside_orthomodularity(benzene6):
    bz = benzene6
    a, b = bz.index("a"), bz.index("b")
    phi_a, phi_b = sasaki_projection(bz, a), sasaki_projection(bz, b)
    assert bz.elements[compose(phi_a, phi_b).image[a]] == "a"
    assert bz.elements[compose(phi_b, phi_a).image[a]] == "b"


# -- commutation and divisibility -------------------------------------------------

def test_commutes_is_oriented(benzene6):
    a, b = benzene6.index("a"), benzene6.index("b")
    assert commutes(benzene6, a, b)
    assert not commutes(benzene6, b, a)


def test_commutes_without_orthogonality(ioml10):
    a, f = ioml10.index("a"), ioml10.index("f")
    assert commutes(ioml10, a, f)
    assert not ortho(ioml10, a, f)


def test_commutes_reflexive_and_with_star(algebras):
    for alg in algebras.values():
        for x in range(alg.n):
            assert commutes(alg, x, x)
            assert commutes(alg, x, star(alg, x))


def test_divides_examples(benzene6, algebras):
    a, b = benzene6.index("a"), benzene6.index("b")
    assert divides(benzene6, a, b)
    assert not divides(benzene6, b, a)
    for alg in algebras.values():
        for x in range(alg.n):
            assert divides(alg, x, alg.zero)


def test_divides_equals_commutes_everywhere(algebras):
    for alg in algebras.values():
        for x, y in pairs(alg):
            assert divides(alg, x, y) == commutes(alg, x, y)


def test_commutation_symmetry_characterizes_orthomodularity(algebras):
    for alg in algebras.values():
        symmetric = all(
            not commutes(alg, x, y) or commutes(alg, y, x) for x, y in pairs(alg)
        )
        assert symmetric == classify(alg).is_ioml


def test_ortho_implies_commutes_on_orthomodular(algebras):
    for name in IOML_NAMES:
        alg = algebras[name]
        for x, y in pairs(alg):
            if ortho(alg, x, y):
                assert commutes(alg, x, y)


def test_commutes_equivalent_forms_on_orthomodular(algebras):
    for name in IOML_NAMES:
        alg = algebras[name]
        for x, y in pairs(alg):
            c = commutes(alg, x, y)
            assert c == (wedge_q(alg, x, y) == wedge_q(alg, y, x))
            assert c == (vee_q(alg, x, y) == vee_q(alg, y, x))
            formula = alg.arrow[alg.arrow[x][star(alg, y)]][star(alg, alg.arrow[x][y])]
            assert c == (formula == x)


# -- center and subalgebras --------------------------------------------------------

def test_center_values(algebras):
    bz = algebras["benzene6"]
    # not orthomodular: the center comes out asymmetric under star ("a" is
    # central but a* = c is not), which is the instructive failure
    assert set(bz.names(center(bz))) == {"0", "a", "d", "1"}
    assert bz.index("c") not in [bz.index(nm) for nm in bz.names(center(bz))]
    assert set(algebras["ioml10"].names(center(algebras["ioml10"]))) == {"0", "1"}
    assert set(algebras["ioml6-full"].names(center(algebras["ioml6-full"]))) == {"0", "1"}


def test_center_is_whole_universe_on_boolean():
    from orthologic.enumeration import enumerate_models

    for n in (2, 4):
        (alg,) = enumerate_models(n, "iboolean")
        assert center(alg) == alg.universe_mask()


def test_center_is_boolean_subalgebra_on_orthomodular(algebras):
    for name in IOML_NAMES:
        alg = algebras[name]
        assert is_iboolean_subalgebra(alg, center(alg)).passed


def test_generated_subalgebra_examples(benzene6, ioml10, algebras):
    gens = benzene6.mask(["a", "d"])
    closure = generated_subalgebra(benzene6, gens)
    assert closure & (1 << benzene6.index("b"))  # d* = b enters the closure
    assert closure == benzene6.universe_mask()
    for alg in algebras.values():
        assert set(alg.names(generated_subalgebra(alg, 0))) == {"0", "1"}
    closure_a = generated_subalgebra(ioml10, 1 << ioml10.index("a"))
    assert set(ioml10.names(closure_a)) == {"0", "a", "b", "1"}


def test_is_subalgebra(benzene6):
    assert is_subalgebra(benzene6, benzene6.universe_mask())
    assert is_subalgebra(benzene6, benzene6.mask(["0", "1"]))
    assert not is_subalgebra(benzene6, benzene6.mask(["0", "a", "1"]))


def test_iboolean_subalgebra_examples(benzene6, ioml10, algebras):
    assert is_iboolean_subalgebra(ioml10, center(ioml10)).passed
    res = is_iboolean_subalgebra(benzene6, benzene6.mask(["0", "a", "1"]))
    assert res.failed
    for alg in algebras.values():
        assert is_iboolean_subalgebra(alg, alg.mask(["0", "1"])).passed


# -- the eight-element hull of an orthogonal pair ------------------------------------

def test_orthogonal_pair_witness_on_orthomodular(ioml10):
    for x, y in pairs(ioml10):
        if ortho(ioml10, x, y):
            res, members = orthogonal_pair_boolean_witness(ioml10, x, y)
            assert res.passed
            assert is_subalgebra(ioml10, members)


def test_orthogonal_pair_witness_fails_on_hexagon(benzene6):
    a, d = benzene6.index("a"), benzene6.index("d")
    res, members = orthogonal_pair_boolean_witness(benzene6, a, d)
    assert res.failed
    assert res.witness == (("x", "b"), ("y", "a"))
    # b -> (b -> a)* = d while b -> a* = c
    b = benzene6.index("b")
    assert benzene6.elements[benzene6.arrow[b][star(benzene6, benzene6.arrow[b][a])]] == "d"
    assert benzene6.elements[benzene6.arrow[b][star(benzene6, a)]] == "c"


def test_orthogonal_pair_witness_degenerate(algebras):
    for alg in algebras.values():
        if not classify(alg).is_ioml:
            continue
        for x in range(alg.n):
            res, members = orthogonal_pair_boolean_witness(alg, x, alg.zero)
            assert res.passed
            allowed = alg.mask(["0", "1"]) | (1 << x) | (1 << star(alg, x))
            assert members & ~allowed == 0


def test_orthogonal_pair_witness_requires_orthogonality(benzene6):
    with pytest.raises(PreconditionError):
        orthogonal_pair_boolean_witness(benzene6, benzene6.index("b"), benzene6.index("c"))


# -- projection families -----------------------------------------------------------

def test_trivial_family_is_a_sasaki_set(algebras):
    for alg in algebras.values():
        assert check_sasaki_set(alg, trivial_projection_family(alg)).passed
        assert not is_full(alg, trivial_projection_family(alg))  # n > 2 here


def test_published_family_is_full_on_ioml6(ioml6_full):
    alg = ioml6_full
    maps = tuple(
        ProjectionMap(tuple(alg.index(v) for v in row.split()), gen)
        for gen, row in PROJECTIONS_IOML6.items()
    )
    assert check_sasaki_set(alg, maps).passed
    assert is_full(alg, maps)


def test_canonical_family_fullness_by_construction(algebras):
    for alg in algebras.values():
        maps = canonical_projection_family(alg)
        assert is_full(alg, maps)
        for a in range(alg.n):
            assert maps[a].image[alg.one] == a


def test_full_sasaki_set_decision(benzene6, ioml6_full):
    res = has_full_sasaki_set(benzene6)
    assert res.failed
    assert res.witness == (("axiom", "SS3"), ("map", "b"), ("x", "c"))
    assert has_full_sasaki_set(ioml6_full).passed


def test_full_sasaki_set_iff_orthomodular(algebras):
    from orthologic.enumeration import enumerate_models

    for alg in algebras.values():
        assert has_full_sasaki_set(alg).passed == classify(alg).is_ioml
    for n in (2, 3, 4, 5, 6):
        for alg in enumerate_models(n, "iol"):
            assert has_full_sasaki_set(alg).passed == classify(alg).is_ioml


def test_sasaki_set_consequences_on_families(algebras):
    for alg in algebras.values():
        families = [trivial_projection_family(alg)]
        if classify(alg).is_ioml:
            families.append(canonical_projection_family(alg))
        for maps in families:
            for phi in maps:
                for psi in maps:
                    if phi.image[alg.one] == psi.image[alg.one]:
                        assert phi.image == psi.image
                assert compose(phi, phi).image == phi.image
                for x in range(alg.n):
                    for y in range(alg.n):
                        assert ortho(alg, phi.image[x], y) == ortho(alg, x, phi.image[y])
                    # arrow transfer: phi(x -> y) = (phi x*)* -> phi y
                    for y in range(alg.n):
                        lhs = phi.image[alg.arrow[x][y]]
                        rhs = alg.arrow[star(alg, phi.image[star(alg, x)])][phi.image[y]]
                        assert lhs == rhs


def test_full_family_formula_and_kernel(algebras):
    for name in IOML_NAMES:
        alg = algebras[name]
        for a in range(alg.n):
            phi = sasaki_projection(alg, a)
            for y in range(alg.n):
                assert phi.image[y] == wedge_q(alg, y, a)
            assert phi.image[star(alg, a)] == alg.zero


# -- Sasaki maps and spaces ----------------------------------------------------------

def test_no_sasaki_map_on_hexagon_pair_block(benzene6_space):
    sp = benzene6_space
    assert sasaki_map_search(sp, sp.mask(["a", "b"])) is None


def test_constant_sasaki_map_on_atom(sasaki6_space):
    sp = sasaki6_space
    a = sp.index("a")
    result = sasaki_map_search(sp, 1 << a)
    assert result is not None
    domain = [i for i in range(sp.n) if result.domain >> i & 1]
    assert set(sp.points[i] for i in domain) == {"a", "b", "c", "1"}
    assert all(result.image[i] == a for i in domain)


def test_identity_sasaki_map_on_full_set(algebras):
    for alg in algebras.values():
        sp = associated_orthospace(alg)
        result = sasaki_map_search(sp, sp.full())
        assert result is not None
        assert result.domain == sp.full()
        assert result.image == tuple(range(sp.n))


def test_sasaki_map_requires_orthoclosed_input(benzene6_space):
    with pytest.raises(PreconditionError):
        sasaki_map_search(benzene6_space, benzene6_space.mask(["c"]))


def test_is_sasaki_space(benzene6_space, sasaki6_space, ioml10):
    res = is_sasaki_space(benzene6_space)
    assert res.failed
    assert res.witness == (("closed-set", "{a,b}"),)
    assert is_sasaki_space(sasaki6_space).passed
    assert is_sasaki_space(associated_orthospace(ioml10)).passed


def test_sasaki6_maps_are_the_four_constants_plus_identity(sasaki6_space):
    sp = sasaki6_space
    found = sasaki_maps_for_all(sp)
    constants = 0
    for mask, pm in found.items():
        assert pm is not None
        size = bin(mask).count("1")
        if size == 1:
            target = mask.bit_length() - 1
            domain = [i for i in range(sp.n) if pm.domain >> i & 1]
            assert all(pm.image[i] == target for i in domain)
            constants += 1
    assert constants == 4


def test_sasaki_space_implies_dacey(algebras):
    from orthologic import is_dacey
    from orthologic.enumeration import enumerate_models

    pool = list(algebras.values())
    for n in (2, 3, 4, 5, 6):
        pool.extend(enumerate_models(n, "iol"))
    for alg in pool:
        sp = associated_orthospace(alg)
        if is_sasaki_space(sp).passed:
            assert is_dacey(sp).passed


# -- the central projection monoid ------------------------------------------------

def test_center_monoid(ioml10, benzene6):
    assert sp_center_monoid_check(ioml10).passed
    res = sp_center_monoid_check(benzene6)
    assert res.skipped
    assert res.witness == (("precondition", "ioml"),)


def test_center_monoid_covers_everything_on_boolean():
    from orthologic.enumeration import enumerate_models

    (alg,) = enumerate_models(4, "iboolean")
    assert center(alg) == alg.universe_mask()
    assert sp_center_monoid_check(alg).passed
