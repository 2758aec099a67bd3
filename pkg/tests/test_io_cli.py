import json

import pytest
from hypothesis import given, settings, strategies as st

from orthologic import InputError, classify, fixture, parse_algebra, serialize_algebra
from orthologic.cli import main
from orthologic.documents import algebra_to_document
from orthologic.fixtures import FIXTURE_NAMES

from conftest import relabel


# -- documents -------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(FIXTURE_NAMES))
def test_round_trip(name):
    alg = fixture(name)
    assert parse_algebra(serialize_algebra(alg)) == alg
    assert parse_algebra(serialize_algebra(alg, compact=True)) == alg


def test_serialization_is_byte_stable():
    alg = fixture("benzene6")
    assert serialize_algebra(alg) == serialize_algebra(alg)


def test_fixture_registry():
    assert set(FIXTURE_NAMES) == {"benzene6", "ioml10", "ioml6-full", "sasaki6"}
    bz = fixture("benzene6")
    assert bz.n == 6
    assert bz.elements[bz.arrow[bz.index("a")][bz.zero]] == "c"  # a* = c
    assert classify(fixture("ioml10")).is_ioml
    with pytest.raises(InputError):
        fixture("unknown")


def doc(**overrides):
    base = algebra_to_document(fixture("benzene6"))
    base.update(overrides)
    return json.dumps(base)


def test_parse_errors_are_specific():
    with pytest.raises(InputError, match="invalid JSON"):
        parse_algebra("{not json")
    with pytest.raises(InputError, match="missing key"):
        parse_algebra('{"elements": ["0", "1"]}')
    with pytest.raises(InputError, match="duplicate element"):
        parse_algebra(doc(elements=["0", "a", "a", "c", "d", "1"]))
    with pytest.raises(InputError, match="is not an element"):
        parse_algebra(doc(one="w"))
    with pytest.raises(InputError, match="unknown keys"):
        parse_algebra(doc(extra=1))


def test_parse_rejects_trivial_algebra():
    text = json.dumps(
        {"elements": ["u"], "one": "u", "zero": "u", "arrow": [["u"]]}
    )
    with pytest.raises(InputError, match="trivial algebra"):
        parse_algebra(text)


def test_parse_rejects_broken_unit_row():
    base = algebra_to_document(fixture("benzene6"))
    base["arrow"][5][1] = "b"  # 1 -> a must be a
    with pytest.raises(InputError, match=r"1 -> a"):
        parse_algebra(json.dumps(base))


def test_parse_rejects_zero_not_lower_bound():
    base = algebra_to_document(fixture("benzene6"))
    base["arrow"][0][2] = "c"  # 0 -> b must be 1
    with pytest.raises(InputError, match="lower bound"):
        parse_algebra(json.dumps(base))


def test_parse_rejects_foreign_table_entry():
    base = algebra_to_document(fixture("benzene6"))
    base["arrow"][2][3] = "zz"
    with pytest.raises(InputError, match="'zz' is not an element"):
        parse_algebra(json.dumps(base))


def test_parse_rejects_bad_dimensions():
    base = algebra_to_document(fixture("benzene6"))
    base["arrow"] = base["arrow"][:5]
    with pytest.raises(InputError, match="rows"):
        parse_algebra(json.dumps(base))


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_round_trip_survives_element_reordering(data):
    alg = fixture(data.draw(st.sampled_from(sorted(FIXTURE_NAMES))))
    perm = data.draw(st.permutations(list(range(alg.n))))
    shuffled = relabel(alg, list(perm))
    assert parse_algebra(serialize_algebra(shuffled)) == shuffled


# -- CLI ---------------------------------------------------------------------------

def run_cli(*argv):
    return main(list(argv))


def test_cli_validate(capsys, tmp_path):
    path = tmp_path / "alg.json"
    path.write_text(serialize_algebra(fixture("benzene6")), encoding="utf-8")
    assert run_cli("validate", str(path)) == 0
    out = capsys.readouterr().out
    assert "valid document with 6 elements" in out


def test_cli_validate_rejects_garbage(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{", encoding="utf-8")
    assert run_cli("validate", str(path)) == 2


def test_cli_missing_file_is_input_error(capsys):
    assert run_cli("classify", "/no/such/file") == 2


def test_cli_classify_json(capsys):
    assert run_cli("classify", "benzene6", "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["classification"]["iol"] is True
    assert payload["classification"]["ioml"] is False


def test_cli_derive_table(capsys):
    assert run_cli("derive", "benzene6", "--op", "wedge_q") == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].split() == ["0", "0", "0", "0", "0", "0", "0"]


def test_cli_derive_star(capsys):
    assert run_cli("derive", "ioml6-full", "--op", "star") == 0
    rows = [line.split() for line in capsys.readouterr().out.splitlines()[1:]]
    assert ["a", "b"] in rows  # a* = b


def test_cli_ortho_reports(capsys):
    code = run_cli("ortho", "benzene6", "--cl", "--blocks", "--dacey", "--json")
    assert code == 1  # dacey fails
    payload = json.loads(capsys.readouterr().out)
    assert payload["perp"]["a"] == ["c", "d"]
    assert payload["orthoclosed"] == ["{}", "{a}", "{d}", "{a,b}", "{c,d}", "{a,b,c,d,1}"]
    assert payload["blocks"] == ["{a,c}", "{a,d}", "{b,d}"]
    assert payload["dacey"]["status"] == "fail"


def test_cli_ortho_sasaki_space(capsys):
    assert run_cli("ortho", "sasaki6", "--sasaki-space", "--normal") == 0
    out = capsys.readouterr().out
    assert "sasaki-space: pass" in out
    assert "normal: pass" in out


def test_cli_sasaki_reports(capsys):
    code = run_cli("sasaki", "ioml6-full", "--projections", "--center", "--full-set", "--json")
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["projections"]["a"] == ["0", "a", "0", "a", "a", "a"]
    assert payload["center"] == ["0", "1"]
    assert payload["full_set"]["status"] == "pass"


def test_cli_sasaki_full_set_failure_exit(capsys):
    assert run_cli("sasaki", "benzene6", "--full-set") == 1


def test_cli_theorems(capsys):
    assert run_cli("theorems", "ioml10") == 0
    out = capsys.readouterr().out
    assert "fail" not in out.replace("0 fail", "")
    assert run_cli("theorems", "benzene6") == 1


def test_cli_theorems_filter_json(capsys):
    assert run_cli("theorems", "benzene6", "--filter", "T2-CHAR-IOML-5WAY", "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == [{"check": "T2-CHAR-IOML-5WAY", "status": "pass", "witness": []}]
    assert run_cli("theorems", "benzene6", "--filter", "BOGUS") == 2


def test_cli_enumerate(capsys):
    assert run_cli("enumerate", "--size", "6", "--class", "iol", "--count-only") == 0
    assert capsys.readouterr().out.strip() == "2"
    assert run_cli("enumerate", "--size", "6", "--class", "ioml") == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    assert len(lines) == 1
    parsed = parse_algebra(lines[0])
    assert classify(parsed).is_ioml


def test_cli_enumerate_respects_node_budget(capsys, monkeypatch):
    monkeypatch.setenv("ORTHO_NODE_BUDGET", "3")
    assert run_cli("enumerate", "--size", "6", "--class", "iol", "--count-only") == 3


def test_cli_iso(capsys):
    assert run_cli("iso", "ioml6-full", "sasaki6") == 0
    assert "->" in capsys.readouterr().out
    assert run_cli("iso", "benzene6", "ioml6-full") == 1
    assert capsys.readouterr().out.strip() == "non-isomorphic"


def test_cli_fixture_round_trip(capsys):
    assert run_cli("fixture", "sasaki6") == 0
    assert parse_algebra(capsys.readouterr().out) == fixture("sasaki6")
    assert run_cli("fixture", "nope") == 2


def test_cli_search(capsys):
    assert run_cli("search", "--require", "impl,DN", "--forbid", "IOM", "--max-size", "6") == 0
    hit = parse_algebra(capsys.readouterr().out)
    assert classify(hit).is_iol and not classify(hit).is_ioml
    assert run_cli("search", "--require", "impl", "--forbid", "IOM", "--max-size", "5") == 1
    assert capsys.readouterr().out.strip() == "none"


def test_cli_search_rejects_contradiction(capsys):
    assert run_cli("search", "--require", "impl", "--forbid", "impl") == 2


def test_cli_max_elements_cap(monkeypatch, capsys):
    monkeypatch.setenv("ORTHO_MAX_ELEMENTS", "4")
    assert run_cli("classify", "ioml10") == 3


def test_cli_validate_flags_non_be_table(capsys, tmp_path):
    base = algebra_to_document(fixture("benzene6"))
    base["arrow"][1][2] = "c"  # break the exchange law, keep the shape valid
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(base), encoding="utf-8")
    assert run_cli("validate", str(path)) == 2
    assert "BE4" in capsys.readouterr().out
