"""Tests for the generator families: matrix actions, the relation
catalog, casimir constructions, classical counterparts and the
contextual (exact / classical / numeric) evaluation semantics."""

import json
from fractions import Fraction as Q

import pytest

from sp4q.algebras import (
    CASIMIR_NAMES,
    FAMILIES,
    build,
    canonical_relations,
    casimir,
    casimir_family,
    catalog_manifest,
    classical_counterparts,
    classical_limit_context,
    exact_context,
    find_relation,
    numeric_context,
    relation_catalog,
    relation_reach,
    resolve_casimirs,
)
from sp4q.fock import FockSpace, FockState
from sp4q.ops import SafeSubspace, diagonal_spectrum, first_witness
from sp4q.qnum import ONE, QRationalFn, q_int, q_power


@pytest.fixture(scope="module")
def spaces():
    space = FockSpace(8)
    return {fam: build(fam, space) for fam in FAMILIES}


# -- construction ----------------------------------------------------------------


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        build("nonsense", FockSpace(6))


def test_min_cutoff_enforced():
    with pytest.raises(ValueError):
        build("tensor", FockSpace(3))


def test_families_share_space(spaces):
    assert all(g.space.cutoff == 8 for g in spaces.values())
    assert spaces["tensor"].family == "tensor"


# -- generator spot values -------------------------------------------------------


def test_classical_creator_entry(spaces):
    bd1 = spaces["classical"]["bd1"]
    col = bd1.column(FockState(2, 1))
    assert col == {FockState(3, 1): ONE}


def test_qboson_creator_is_plain_shift(spaces):
    # creation acts with unit coefficient; the bracket sits in the metric
    ad1 = spaces["qboson"]["ad1"]
    col = ad1.column(FockState(1, 2))
    assert col == {FockState(2, 2): ONE}


def test_qboson_annihilator_carries_bracket(spaces):
    a1 = spaces["qboson"]["a1"]
    col = a1.column(FockState(3, 1))
    assert col == {FockState(2, 1): q_int(3)}


def test_tensor_spinor_phases(spaces):
    gens = spaces["tensor"]
    # t1+ |x,y> = s^(1+2y) |x+1,y>;  t-1+ |x,y> = s^(-1-2x) |x,y+1>
    assert gens["td1"].column(FockState(2, 3)) == {
        FockState(3, 3): q_power(Q(7, 4))
    }
    assert gens["tdm1"].column(FockState(2, 3)) == {
        FockState(2, 4): q_power(Q(-5, 4))
    }


def test_tensor_T0_carries_sqrt_flag(spaces):
    T0 = spaces["tensor"]["T0"]
    assert T0.sqrt_sq == q_int(2)
    assert T0.column(FockState(0, 0)) == {FockState(1, 1): ONE}


def test_tensor_big_raise_entries(spaces):
    gens = spaces["tensor"]
    # T1 |x,y> = s^(2+4y) |x+2,y>
    assert gens["T1"].column(FockState(1, 1)) == {FockState(3, 1): q_power(Q(3, 2))}
    # T-1 |x,y> = s^(-2-4x) |x,y+2>
    assert gens["Tm1"].column(FockState(1, 1)) == {
        FockState(1, 3): q_power(Q(-3, 2))
    }


def test_tensor_number_diagonals(spaces):
    gens = spaces["tensor"]
    window = SafeSubspace(gens.space, 8)
    for st, val in diagonal_spectrum(gens["L00"], window):
        assert val == QRationalFn(q_int(st.nu))
    # q^(-2 J0) |x,y> = s^(4y - 4x) |x,y>
    for st, val in diagonal_spectrum(gens["qm2J0"], window):
        assert val == QRationalFn(q_power(st.nm1 - st.n1))


def test_parity_operator(spaces):
    for gens in spaces.values():
        for st, val in diagonal_spectrum(gens["P"], SafeSubspace(gens.space, 8)):
            assert val == QRationalFn.from_scalar((-1) ** st.parity)


# -- catalog ---------------------------------------------------------------------


def test_catalog_sizes():
    assert len(relation_catalog("classical")) == 53
    assert len(relation_catalog("qboson")) == 66
    assert len(relation_catalog("tensor")) == 117
    total = sum(len(relation_catalog(f)) for f in FAMILIES)
    assert total == 236 and total >= 54


def test_catalog_minimum_breadth():
    assert len(relation_catalog("classical")) >= 18
    assert len(relation_catalog("qboson")) >= 16
    assert len(relation_catalog("tensor")) >= 20


def test_variants_only_in_tensor():
    for fam in ("classical", "qboson"):
        assert all(r.expect_holds for r in relation_catalog(fam))
    variants = [r for r in relation_catalog("tensor") if not r.expect_holds]
    assert len(variants) == 22
    assert all(r.variant_of is not None for r in variants)
    assert all(r.name.endswith(" (variant)") for r in variants)


def test_canonical_relations_excludes_variants():
    rels = canonical_relations("tensor")
    assert len(rels) == 95
    assert all(r.expect_holds for r in rels)


def test_find_relation():
    rel = find_relation("qboson", "J-commutator")
    assert rel.family == "qboson"
    with pytest.raises(KeyError):
        find_relation("qboson", "no-such-relation")


def test_required_names_present():
    names = {r.name for r in relation_catalog("tensor")}
    assert {"trivial-self", "t-t-dagger", "T-tilde-T m1+m2=0, top"} <= names
    assert "Bose-cc" in {r.name for r in relation_catalog("classical")}


def test_relation_reaches():
    assert relation_reach(find_relation("qboson", "J-commutator")) == 0
    assert relation_reach(find_relation("tensor", "T-tilde-T m1+m2=0, top")) == 2
    assert relation_reach(find_relation("classical", "Bose-cc")) == 1
    assert relation_reach(find_relation("tensor", "t-t-dagger")) == 1


def test_catalog_manifest_roundtrip():
    for fam in FAMILIES:
        manifest = catalog_manifest(fam)
        txt = json.dumps(manifest, sort_keys=True)
        assert json.loads(txt) == json.loads(
            json.dumps(json.loads(txt), sort_keys=True)
        )
        assert all(row["reach"] >= 0 for row in manifest)


def test_builders_produce_residuals(spaces):
    ctx = exact_context(spaces["tensor"])
    rel = find_relation("tensor", "t-t-dagger")
    res = rel.builder(ctx)
    window = SafeSubspace(spaces["tensor"].space, 8 - max(res.climb, 0))
    assert first_witness(res, window) is None
    flipped = rel.builder(ctx, True)
    assert first_witness(flipped, window) is not None


# -- contexts --------------------------------------------------------------------


def test_classical_context_brackets_degenerate(spaces):
    ctx = classical_limit_context(spaces["qboson"])
    assert ctx.kind == "classical"
    # [n] -> n and q-powers -> 1 under the classical scalar semantics
    assert ctx.power_scalar(Q(5, 2)) == 1


def test_numeric_context_matches_exact(spaces):
    gens = spaces["tensor"]
    nctx = numeric_context(gens, 0.7)
    st = FockState(1, 1)
    exact = gens["L1"].column(st)
    (dst,) = exact.keys()
    # normalized numeric entry equals coeff * sqrt(G(dst)/G(src))
    num = nctx["L1"].entries[(gens.space.index(dst), gens.space.index(st))]
    from sp4q.ops import gram

    want = exact[dst](0.7) * (gram(dst)(0.7) / gram(st)(0.7)) ** 0.5
    assert abs(num - want) < 1e-12 * (1 + abs(want))


# -- classical counterparts ------------------------------------------------------


def test_counterparts_cover_deformed_elements(spaces):
    classical = spaces["classical"]
    for fam in ("qboson", "tensor"):
        table = classical_counterparts(spaces[fam], classical)
        assert set(table) <= set(spaces[fam].ops)
        assert set(spaces[fam].elements) <= set(table)
        assert len(table) >= 10


def test_counterpart_spot_values(spaces):
    classical = spaces["classical"]
    table = classical_counterparts(spaces["tensor"], classical)
    # the deformed pair creator T1 degenerates onto the classical F+1
    assert table["T1"] is classical["F11"] or first_witness(
        table["T1"] - classical["F11"], SafeSubspace(classical.space, 6)
    ) is None


# -- casimirs --------------------------------------------------------------------


def test_resolve_casimirs_aliases():
    assert resolve_casimirs("L2") == ("L2",)
    assert resolve_casimirs("K0_2") == ("K02",)
    assert resolve_casimirs("C2_SUq0") == ("K02",)
    assert resolve_casimirs("C2_SUpm_classical") == ("C2SUp", "C2SUm")
    with pytest.raises(ValueError):
        resolve_casimirs("nope")


def test_casimir_families():
    assert casimir_family("I2") == "classical"
    assert casimir_family("K02") == "qboson"
    assert casimir_family("L2") == "tensor"
    assert casimir_family("S2") == "tensor"


def test_casimir_unknown_name(spaces):
    with pytest.raises(ValueError):
        casimir("Z9", spaces["tensor"])


def test_casimir_I2_spot_value(spaces):
    op = casimir("I2", spaces["classical"])
    window = SafeSubspace(spaces["classical"].space, 8)
    for st, val in diagonal_spectrum(op, window):
        j = Q(st.nu, 2)
        assert val == QRationalFn.from_scalar(j * (j + 1))


def test_casimir_weighted_scalar(spaces):
    # S2 with unit weights stays diagonal; climb covers its T~ T span
    op = casimir("S2", spaces["tensor"], weights=(1, 1, 1, 1))
    window = SafeSubspace(spaces["tensor"].space, 8 - max(op.climb, 0))
    spec = diagonal_spectrum(op, window)
    assert spec, "spectrum should not be empty"
