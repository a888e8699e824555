import json

from crosscap4.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_report_human(capsys):
    code, out, err = run(capsys, "report", "4", "3")
    assert code == 0
    assert "gamma4 lower bound: 1" in out
    assert "gamma4 upper bound: 1" in out
    assert "gamma3 upper bound: 2" in out
    assert err == ""


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "4", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] is True


def test_report_determinism(capsys):
    _, out1, _ = run(capsys, "report", "6", "5", "--json")
    _, out2, _ = run(capsys, "report", "6", "5", "--json")
    assert out1 == out2


def test_report_invalid_input(capsys):
    code, out, err = run(capsys, "report", "6", "4")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "2k", "--kmax", "4",
                       "--csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("p,q,")
    assert len(lines) == 4


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--max", "6")
    assert code == 0
    assert "exact rows:" in out


def test_pinch_trace(capsys):
    code, out, _ = run(capsys, "pinch", "8", "7")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "(8,7) --t=1,h=1--> (6,5)"
    assert len(lines) == 3


def test_pinch_gamma3(capsys):
    code, out, _ = run(capsys, "pinch", "4", "3", "--gamma3")
    assert code == 0
    assert len(out.strip().split("\n")) == 2


def test_pinch_gamma3_parity_error(capsys):
    code, _, err = run(capsys, "pinch", "7", "3", "--gamma3")
    assert code == 2
    assert err != ""


def test_signature(capsys):
    code, out, _ = run(capsys, "signature", "6", "5")
    assert code == 0
    assert "recursion: 16" in out
    assert "lattice:   16" in out


def test_alexander(capsys):
    code, out, _ = run(capsys, "alexander", "4", "3")
    assert code == 0
    assert "T^3 - T^2 + 1 - T^-2 + T^-3" in out
    assert "t0 = 1" in out


def test_dinv(capsys):
    code, out, _ = run(capsys, "dinv", "4", "3")
    assert code == 0
    assert "right-handed: d(-1) = 0, d(+1) = -2" in out
    assert "left-handed:  d(-1) = 2, d(+1) = 0" in out


def test_profile_csv(capsys):
    code, out, _ = run(capsys, "profile", "4", "3", "--mirror",
                       "--from", "3", "--to", "5", "--csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,sig_bound,d_bound,combined"
    assert lines[2] == "4,2,0,2"


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", "--g", "1", "--m", "2", "--d", "0")
    assert code == 0
    assert "c1^2 = -32/7" in out
    assert "consistent" in out


def test_audit_out_of_range(capsys):
    code, _, err = run(capsys, "audit", "--g", "2", "--m", "1", "--d", "0")
    assert code == 2
    assert err != ""
