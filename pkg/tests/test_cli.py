import json
import subprocess
import sys


from cyclic_covers.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out), err


def test_cover_command(capsys):
    code, out, _ = run(capsys, "cover", "--field", "p:7", "--poly", "x0^3+x1^3+x2^3")
    assert code == 0
    assert out["cover_poly"] == "x0^3+x1^3+x2^3+6*x3^3"
    assert out["new_var"] == "x3"
    assert out["deck"][3] == ["0", "0", "0", "2"]


def test_cover_without_root_of_unity(capsys):
    code, out, _ = run(capsys, "cover", "--field", "p:5", "--poly", "x0^3+x1^3+x2^3")
    assert code == 0 and "deck" not in out and "unavailable_reason" in out


def test_parse_command(capsys):
    code, out, _ = run(capsys, "parse", "--field", "p:7", "--poly", "x2^3 - x0^3 - x1^3")
    assert code == 0 and out["poly"] == "6*x0^3+6*x1^3+x2^3"
    assert out["smoothness"] == {"k_max": 2, "singular": []}


def test_parse_error_exit_code(capsys):
    code, out, _ = run(capsys, "parse", "--field", "p:7", "--poly", "x0^2+x1^3")
    assert code == 1 and out["error"] == "NotHomogeneous"


def test_galois_command(capsys):
    code, out, _ = run(capsys, "galois", "--field", "p:13", "--poly", "x0^3+x1^3+x2^3+x3^3", "--ext-max", "1")
    assert code == 0 and out["delta_lower_bound"] == 4 and out["bound_respected"]


def test_normalize_command(capsys):
    code, out, _ = run(capsys, "normalize", "--field", "p:13", "--poly", "x0^3+x1^3+x2^3+x3^3")
    assert code == 0 and out["r"] == 3 and out["G"] == "0"


def test_recover_command(capsys):
    code, out, _ = run(capsys, "recover", "--field", "p:13", "--poly", "x0^3+x1^3+x2^3+x3^3",
                       "--hint", "0,0,0,1")
    assert code == 0
    assert set(out) >= {"base_poly", "witness_matrix", "galois_point_used"}
    assert out["branch_canonical"] == "x0^3+x1^3+x2^3"


def test_equiv_command_modes(capsys):
    args = ["equiv", "--field", "p:3", "--poly1", "x0*x1-x2^2", "--poly2", "x0^2+x1*x2"]
    code, brute, _ = run(capsys, *args, "--mode", "brute")
    assert code == 0 and brute["verdict"] == "equivalent"
    code, structured, _ = run(capsys, *args, "--mode", "structured")
    assert code == 0 and structured["verdict"] == "equivalent"
    assert {"verdict", "witness", "invariants", "scanned"} <= set(structured)


def test_census_command_deterministic(capsys):
    args = ["census", "--field", "p:7", "-n", "1", "--trials", "6", "--seed", "5"]
    code, first, err = run(capsys, *args)
    assert code == 0 and "retained" in err
    main(args)
    second_text = capsys.readouterr()[0]
    assert json.loads(second_text) == first


def test_census_char_divides_degree(capsys):
    code, out, _ = run(capsys, "census", "--field", "p:7", "-d", "7", "--trials", "2")
    assert code == 1 and out["error"] == "CharDividesDegree"


def test_poly_file(tmp_path, capsys):
    path = tmp_path / "f.txt"
    path.write_text("x0^3+x1^3+x2^3\n")
    code, out, _ = run(capsys, "cover", "--field", "p:7", "--poly-file", str(path))
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclic_covers", "cover", "--field", "p:7", "--poly",
                           "x0^3+x1^3+x2^3", "--json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["new_var"] == "x3"
