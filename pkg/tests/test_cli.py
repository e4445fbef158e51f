import orjson
import pytest
from kkdrop import cli
from kkdrop.errors import InconsistencyError
from kkdrop.lifting import SearchTable


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv: str) -> dict:
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return orjson.loads(out)


def test_ktheory(capsys):
    data = run_json(capsys, "ktheory", "--algebra", "2,12,3", "--p", "12")
    assert data["mu"] == [2, 3]
    assert data["k1_order"] == 2
    assert data["cone_generators"] == [[1, 0, 0], [1, 2, 3], [1, 0, 3], [1, 2, 0]]
    assert data["nu_generators"] == [
        {"b": 2, "c": 3, "value": 0},
        {"b": 0, "c": 3, "value": 1},
    ]


def test_ktheory_text(capsys):
    code, out, _ = run(capsys, "ktheory", "--algebra", "I[2,12,3]")
    assert code == 0
    assert out.startswith(
        "# K-theory with Z_p coefficients (K0(A; G_p) ≅ Z ⊕ Z(m,p) with Bockstein maps μ, ν)\n"
    )
    assert "algebra: I[2,12,3]" in out
    assert "p: 12" in out


def test_exactness(capsys):
    data = run_json(capsys, "exactness", "--algebra", "2,12,3", "--p", "24")
    assert data["passed"]


def test_cone_decompose(capsys):
    data = run_json(
        capsys, "cone-decompose", "--algebra", "2,12,3", "--p", "12", "--element", "0,0,0"
    )
    assert data["coefficients"] == [0, 0, 0, 0]
    data = run_json(capsys, "cone-decompose", "--algebra", "2,12,3", "--element", "5,4,3")
    assert data["coefficients"] == [3, 1, 0, 1]


def test_triple(capsys):
    data = run_json(
        capsys, "triple", "--source", "2,12,3", "--target", "2,12,3", "--kind", "idbar"
    )
    assert data["p"] == 12
    assert [(t["x"], t["phi"], t["y"]) for t in data["triples"]] == [
        (6, [[0, 4], [9, 0]], -6)
    ]
    assert data["triples"][0]["validation"]["valid"]


def test_kk_canon(capsys):
    data = run_json(
        capsys, "kk-canon", "--source", "2,12,3", "--target", "2,12,3", "--coeffs=1,0,0,0"
    )
    assert (data["x"], data["y_mod"], data["d"], data["k"], data["c0"], data["c1"]) == (
        2, 0, 1, 0, 1, 0,
    )


def test_lift_check(capsys):
    data = run_json(
        capsys,
        "lift-check",
        "--source", "2,12,3",
        "--target", "2,12,3",
        "--p", "12",
        "--coeffs=4,-2,0,0",
    )
    assert data["dl_positive"]
    assert data["mode"] == "map"
    assert data["span_witness"] == [0, 0, 2, 0]


def test_lift_check_family(capsys):
    data = run_json(
        capsys,
        "lift-check",
        "--source", "2,12,3",
        "--target", "2,12,3",
        "--x", "2",
        "--equality", "strict",
    )
    assert data["family"] == {"x": 2, "d": 0}
    assert data["mode"] == "strict"
    assert not data["span_member"]


def test_equality_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("KKDROP_EQUALITY", "strict")
    data = run_json(
        capsys, "lift-check", "--source", "2,12,3", "--target", "2,12,3", "--coeffs=4,-2,0,0"
    )
    assert data["mode"] == "strict"


VERDICTS = ("dl_positive", "js_positive", "span_member")


@pytest.mark.parametrize("equality", ["map", "strict"])
@pytest.mark.parametrize(
    "element",
    [
        ("--coeffs=4,-2,0,0",),
        ("--coeffs=2,-1,0,0",),
        ("--coeffs=1,1,0,1",),
        ("--coeffs=0,0,1,-1",),
        ("--coeffs=-1,0,0,0",),
        *((f"--x={x}", f"--d={d}") for x in range(0, 6) for d in (0, 1)),
    ],
)
def test_text_and_json_agree(capsys, equality, element):
    argv = ("lift-check", "--source", "2,12,3", "--target", "2,12,3", *element, "--equality", equality)
    data = run_json(capsys, *argv)
    code, out, _ = run(capsys, *argv)
    assert code == 0
    for key in VERDICTS:
        assert f"{key}: {orjson.dumps(data[key]).decode()}" in out.splitlines()
    assert f"mode: {equality}" in out.splitlines()


def test_lift_check_family_with_torsion(capsys):
    data = run_json(
        capsys, "lift-check", "--source", "2,12,3", "--target", "2,12,3", "--x", "2", "--d", "1"
    )
    assert data["family"] == {"x": 2, "d": 1}
    assert data["element"]["coeffs"] == [1, 0, 0, 0]



def test_output_is_deterministic(capsys):
    argv = ("search", "--source", "2,12,3", "--target", "2,12,3", "--equality", "strict")
    first = run(capsys, *argv, "--format", "json")
    second = run(capsys, *argv, "--format", "json", "--workers", "2")
    assert first[0] == 0
    assert first[1] == second[1]


def test_json_round_trips(capsys):
    code, out, _ = run(capsys, "audit", "--format", "json")
    assert code == 0
    assert orjson.dumps(orjson.loads(out), option=orjson.OPT_INDENT_2).decode() + "\n" == out


def test_search(capsys):
    data = run_json(
        capsys, "search", "--source", "2,12,3", "--target", "2,12,3", "--equality", "strict"
    )
    assert data["x_max"] == 11
    assert data["mode"] == "strict"
    assert [r["family"]["x"] for r in data["reports"]] == list(range(2, 12))


def test_search_files(capsys, tmp_path):
    csv_path = tmp_path / "search.csv"
    json_path = tmp_path / "out" / "search.json"
    data = run_json(
        capsys,
        "search",
        "--source", "2,12,3",
        "--target", "2,12,3",
        "--x-max", "5",
        "--equality", "strict",
        "--csv", str(csv_path),
        "--output", str(json_path),
    )
    assert SearchTable.read_from_csv(str(csv_path)).x == [2, 3, 4, 5]
    assert orjson.loads(json_path.read_bytes())["x_max"] == data["x_max"]


def test_audit(capsys):
    data = run_json(capsys, "audit")
    assert len(data["claims"]) == 5
    assert [r["x"] for r in data["rows"]] == [1, 2, 3, 5]
    code, out, _ = run(capsys, "audit")
    assert code == 0
    assert "take $x=2$" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["ktheory", "--algebra", "2,12,2"],
        ["ktheory", "--algebra", "2,12"],
        ["ktheory"],
        ["ktheory", "--algebra", "2,12,3", "--p", "5"],
        ["ktheory", "--algebra", "2,12,3", "--p", "1"],
        ["lift-check", "--source", "2,12,3", "--target", "2,12,3"],
        ["lift-check", "--source", "2,12,3", "--target", "2,12,3", "--x", "1", "--d", "5"],
        ["lift-check", "--source", "2,12,3", "--target", "2,12,3", "--coeffs=4,-2,0,0", "--d", "1"],
        ["search", "--source", "2,12,3", "--target", "2,12,3", "--workers", "0"],
        ["audit", "--equality", "loose"],
        ["frobnicate"],
        [],
    ],
)
def test_invalid_input(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err


def test_inconsistency(capsys, monkeypatch):
    def broken():
        raise InconsistencyError("recomputed values differ", witness=[1, 2])

    monkeypatch.setattr(cli, "audit_claims", broken)
    code, out, err = run(capsys, "audit")
    assert code == 2
    assert out == ""
    assert "inconsistency: recomputed values differ" in err
    assert "witness: [1, 2]" in err


def test_every_title_names_its_governing_result():
    for title in cli.TITLES.values():
        assert title.endswith(")") and " (" in title
