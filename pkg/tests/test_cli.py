import io
import json

import pytest

from gcenter import cli


def run_cli(args):
    out = io.StringIO()
    parser = cli.build_parser()
    ns = parser.parse_args(args)
    code = ns.func(ns, out)
    return code, out.getvalue()


def run_main(args):
    return cli.main(args)


def test_validate_example():
    code, text = run_cli(["validate", "--example", "z4_to_z2"])
    assert code == 0
    assert "all checks passed" in text


def test_validate_structured():
    code, text = run_cli(["validate", "--example", "z4_to_z2",
                          "--format", "structured"])
    assert code == 0
    blob = json.loads(text)
    assert blob["ok"] is True


def test_gen_example_and_validate_file(tmp_path):
    path = tmp_path / "cat.json"
    code, _ = run_cli(["gen-example", "z4_to_z2", "--output", str(path)])
    assert code == 0
    code, text = run_cli(["validate", "--input", str(path)])
    assert code == 0


def test_validate_rejects_bad_grading(tmp_path):
    path = tmp_path / "cat.json"
    run_cli(["gen-example", "z4_to_z2", "--output", str(path)])
    blob = json.loads(path.read_text())
    blob["simples"][3]["grade"] = 0  # break the grading
    path.write_text(json.dumps(blob))
    code, text = run_cli(["validate", "--input", str(path)])
    assert code == 3
    assert "FAIL grading-multiplicative" in text


def test_validate_names_failed_axiom(tmp_path):
    path = tmp_path / "cat.json"
    run_cli(["gen-example", "z4_to_z2", "--output", str(path)])
    blob = json.loads(path.read_text())
    blob["fusion"] = [f for f in blob["fusion"]
                      if not (f["i"] == "g1" and f["j"] == "g3")]
    path.write_text(json.dumps(blob))
    code, text = run_cli(["validate", "--input", str(path)])
    assert code == 3
    assert "duality-multiplicities" in text


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code = run_main(["validate", "--input", str(path)])
    assert code == 2


def test_nonsplit_field_exit_code(tmp_path):
    # z8 -> z2 needs zeta_4 for the kernel characters; order 2 is too small
    path = tmp_path / "cat.json"
    run_cli(["gen-example", "z8_to_z2", "--order", "2",
             "--output", str(path)])
    code = run_main(["center-simples", "--input", str(path)])
    assert code == 4


def test_modular_example():
    code, text = run_cli(["modular", "--example", "z4_to_z2"])
    assert code == 0
    assert "G-modular = True" in text


def test_smatrix_structured():
    code, text = run_cli(["smatrix", "--example", "z2_to_1",
                          "--format", "structured"])
    assert code == 0
    blob = json.loads(text)
    mod = blob["modular"]
    assert mod["is_invertible"] is True
    assert len(mod["s_matrix"]) == 4


def test_center_simples_output():
    code, text = run_cli(["center-simples", "--example", "z4_to_z2"])
    assert code == 0
    assert text.count("grade=0") == 4
    assert text.count("grade=1") == 4


def test_crossing_table():
    code, text = run_cli(["crossing-table", "--example", "id_z2"])
    assert code == 0
    assert "phi_0" in text and "phi_1" in text


def test_coend_command():
    code, text = run_cli(["coend", "--example", "z4_to_z2",
                          "--alpha", "1", "--beta", "1"])
    assert code == 0
    assert "defining relation ok  : True" in text


def test_compare_dpi_command():
    code, text = run_cli(["compare-dpi", "z4_to_z2"])
    assert code == 0
    assert "matching found  : True" in text


def test_selftest():
    code, text = run_cli(["selftest", "--example", "id_z2"])
    assert code == 0
    assert "selftest passed" in text
    assert "FAIL" not in text


def test_deterministic_output():
    _, text1 = run_cli(["modular", "--example", "z4_to_z2",
                        "--format", "structured"])
    _, text2 = run_cli(["modular", "--example", "z4_to_z2",
                        "--format", "structured"])
    assert text1 == text2
    _, t3 = run_cli(["center-simples", "--example", "z2_to_1",
                     "--format", "structured"])
    _, t4 = run_cli(["center-simples", "--example", "z2_to_1",
                     "--format", "structured"])
    assert t3 == t4


def test_gen_example_stdout():
    code, text = run_cli(["gen-example", "id_z2"])
    assert code == 0
    blob = json.loads(text)
    assert blob["name"] == "push_id_z2"
    assert blob["f_symbols"] == "trivial"
    assert blob["pivotal"] == "trivial"
