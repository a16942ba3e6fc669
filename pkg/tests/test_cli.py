import subprocess
import sys

import pytest

from cardcodes.cli import main
from cardcodes.coloring import read_coloring
from cardcodes.deck import Signature
from cardcodes.protocols import modn_coloring
from cardcodes.verify import check_min_informative, check_safe


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line and " " not in line)


def test_gen_and_verify_round_trip(capsys, tmp_path):
    path = tmp_path / "modn.col"
    code, out, _ = run(capsys, "gen", "--protocol", "modn", "--sig", "3,3,1", "-o", str(path))
    assert code == 0 and fields(out)["message_count"] == "7"
    assert read_coloring(path) == modn_coloring(Signature(3, 3, 1, 0))
    code, out, _ = run(capsys, "verify", "--coloring", str(path), "--sig", "3,3,1,0",
                       "--checks", "informative,safe,ca23")
    assert code == 0 and out.count("verdict=pass") == 3


def test_verify_failure_lists_witnesses(capsys):
    code, out, _ = run(capsys, "verify", "--coloring", "fixture:six_chi", "--sig", "3,3,0,1", "--checks", "ca23")
    assert code == 1 and "verdict=fail" in out
    code, out, _ = run(capsys, "verify", "--coloring", "fixture:six_chi1", "--sig", "3,3,1,0",
                       "--checks", "weaksafe,safe", "--all-witnesses")
    assert code == 1 and "check=weaksafe verdict=pass" in out and "check=safe verdict=fail" in out


def test_verify_fixture_default_signature(capsys):
    code, out, _ = run(capsys, "verify", "--coloring", "fixture:two_msg_331", "--checks", "min,safe")
    assert code == 0 and "signature=3,3,1,0" in out


def test_decode_modes(capsys):
    code, out, _ = run(capsys, "gen", "--protocol", "modn", "--sig", "3,3,1")
    assert code == 0
    code, out, _ = run(capsys, "decode", "--coloring", "fixture:six_chi2", "--hand", "4,5,6", "--msg", "0")
    assert code == 0 and out.startswith("hand=")
    code, out, _ = run(capsys, "decode", "--coloring", "fixture:two_msg_331", "--hand", "0,1,2", "--msg", "0",
                       "--mode", "card")
    assert code == 0 and out.strip() == "card=5"
    code, out, _ = run(capsys, "decode", "--coloring", "fixture:two_msg_331", "--hand", "0,1,2", "--msg", "1",
                       "--mode", "min")
    assert code == 0 and out.strip() == "set=3"


def test_decode_inconsistent(capsys, tmp_path):
    path = tmp_path / "m.col"
    run(capsys, "gen", "--protocol", "modn", "--sig", "3,3,1", "-o", str(path))
    code, out, _ = run(capsys, "decode", "--coloring", str(path), "--sig", "3,3,1", "--hand", "4,5,6", "--msg", "0")
    assert code == 1 and out.strip() == "error=inconsistent-announcement"
    code, out, _ = run(capsys, "decode", "--coloring", str(path), "--sig", "3,3,1", "--hand", "4,5,6", "--msg", "4")
    assert code == 0 and out.strip() == "hand=0,1,3"


def test_search_sat_writes_file(capsys, tmp_path):
    path = tmp_path / "two.col"
    code, out, _ = run(capsys, "search", "--sig", "3,3,1", "-k", "2", "--constraints", "min,safe", "-o", str(path))
    assert code == 0 and fields(out)["outcome"] == "SAT"
    col = read_coloring(path)
    sig = Signature(3, 3, 1, 0)
    assert check_min_informative(col, sig).verdict and check_safe(col, sig).verdict


def test_search_unsat_and_timeout(capsys):
    code, out, _ = run(capsys, "search", "--sig", "3,3,1", "-k", "5")
    assert code == 1 and fields(out)["outcome"] == "UNSAT"
    code, out, _ = run(capsys, "--timeout", "0.001", "search", "--sig", "3,3,1", "-k", "6",
                       "--constraints", "proper,safe", "--profile", "6,6,6,6,6,5")
    assert code == 3 and fields(out)["outcome"] == "TIMEOUT"


def test_global_options_after_subcommand(capsys):
    code, out, _ = run(capsys, "search", "--sig", "3,3,1", "-k", "6", "--jobs", "2", "--no-symmetry")
    assert code == 0 and fields(out)["outcome"] == "SAT"


def test_dual_and_reduce(capsys, tmp_path):
    src = tmp_path / "m.col"
    run(capsys, "gen", "--protocol", "modn", "--sig", "3,3,1", "-o", str(src))
    dual = tmp_path / "d.col"
    code, out, _ = run(capsys, "dual", "--coloring", str(src), "--sig", "3,3,1", "-o", str(dual))
    assert code == 0 and "signature=4,2,1,0" in out
    code, out, _ = run(capsys, "verify", "--coloring", str(dual), "--sig", "4,2,1", "--checks", "informative,safe")
    assert code == 1 and "check=informative verdict=pass" in out and "check=safe verdict=fail" in out
    red = tmp_path / "r.col"
    code, out, _ = run(capsys, "reduce", "--coloring", str(src), "--sig", "3,3,1", "-o", str(red))
    assert code == 0 and fields(out)["message_count"] == "3"
    assert read_coloring(red).message_count == 3


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--sig", "3,3,1")
    assert code == 0 and "degree=12" in out and "diameter=3" in out
    code, out, _ = run(capsys, "stats", "--n", "7", "--m", "3", "--d", "3")
    assert code == 0 and "degree=34" in out


@pytest.mark.parametrize("argv", [
    ["gen", "--protocol", "modn"],
    ["gen", "--protocol", "nope", "--sig", "3,3,1"],
    ["gen", "--protocol", "fixture:nope"],
    ["verify", "--coloring", "/nonexistent/file.col", "--sig", "3,3,1"],
    ["verify", "--coloring", "fixture:six_chi", "--checks", "bogus"],
    ["search", "--sig", "3,3,1", "-k", "2", "--constraints", "weird"],
    ["search", "--sig", "0,3,1", "-k", "2"],
    ["stats"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_file_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.col"
    path.write_text("not a coloring\n")
    code, _, err = run(capsys, "verify", "--coloring", str(path), "--sig", "3,3,1")
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["search", "--sig", "3,3,1"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cardcodes", "stats", "--n", "5", "--m", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "degree=6" in proc.stdout
