"""
Test cases for the htgroups command line
"""

import io

import pytest

from src.htgroups import cli
from src.htgroups.config import get_settings

TRANSPOSITION_FILE = "G 2\n0 -> 1\n1 -> 0\n"
SHIFT_FILE = "G 3\n0 -> 1\n1 -> 2\n2 -> 0\n"
IOTA_TRANSPOSITION = "G 3\n0 -> 0\n10 -> 11\n11 -> 10\n12 -> 2\n2 -> 12\n"


@pytest.fixture
def files(tmp_path):
    """Write element files and return their paths"""

    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def last_line(text: str) -> str:
    return text.strip().splitlines()[-1]


class TestElementCommands:
    """Test cases for validate, normalize, compose, invert and apply"""

    def test_validate(self, files, capsys):
        """Test a valid table"""
        assert cli.main(["validate", files("t.txt", TRANSPOSITION_FILE)]) == 0
        assert capsys.readouterr().out == "valid: k=2 pairs=2\n"

    def test_validate_duplicate_domain_word(self, files, capsys):
        """Test a duplicate domain word is reported"""
        path = files("bad.txt", "G 2\n0 -> 0\n0 -> 10\n1 -> 11\n")
        assert cli.main(["validate", path]) == 1
        captured = capsys.readouterr()
        assert "invalid: domC not a prefix code" in captured.out
        assert last_line(captured.err) == "error: InvalidTable: domC not a prefix code"

    def test_validate_parse_error(self, files, capsys):
        """Test parse errors exit 2 with line and column"""
        assert cli.main(["validate", files("bad.txt", "G 2\n0 -> 3\n")]) == 2
        assert last_line(capsys.readouterr().err) == (
            "error: ElementParseError: line 2, column 6: letter 3 outside alphabet of size 2"
        )

    def test_normalize(self, files, capsys):
        """Test the identity collapses"""
        assert cli.main(["normalize", files("i.txt", "G 2\n0 -> 0\n1 -> 1\n")]) == 0
        assert capsys.readouterr().out == "G 2\n- -> -\n"

    def test_normalize_is_idempotent(self, files, capsys):
        """Test canonical input is reproduced byte for byte"""
        assert cli.main(["normalize", files("t.txt", TRANSPOSITION_FILE)]) == 0
        assert capsys.readouterr().out == TRANSPOSITION_FILE

    def test_normalize_from_stdin(self, monkeypatch, capsys):
        """Test "-" reads standard input"""
        monkeypatch.setattr("sys.stdin", io.StringIO(TRANSPOSITION_FILE))
        assert cli.main(["normalize", "-"]) == 0
        assert capsys.readouterr().out == TRANSPOSITION_FILE

    def test_compose(self, files, capsys):
        """Test the transposition squares to the identity"""
        path = files("t.txt", TRANSPOSITION_FILE)
        assert cli.main(["compose", path, path]) == 0
        assert capsys.readouterr().out == "G 2\n- -> -\n"

    def test_compose_alphabet_mismatch(self, files, capsys):
        """Test composing elements over different alphabets"""
        t, s = files("t.txt", TRANSPOSITION_FILE), files("s.txt", SHIFT_FILE)
        assert cli.main(["compose", t, s]) == 2
        assert last_line(capsys.readouterr().err).startswith("error: AlphabetMismatch:")

    def test_invert(self, files, capsys):
        """Test inverting the cyclic shift"""
        assert cli.main(["invert", files("s.txt", SHIFT_FILE)]) == 0
        assert capsys.readouterr().out == "G 3\n0 -> 2\n1 -> 0\n2 -> 1\n"

    @pytest.mark.parametrize(
        "text, word, expected",
        [
            (TRANSPOSITION_FILE, "011", "111"),
            ("G 2\n- -> -\n", "-", "-"),
            (TRANSPOSITION_FILE, "-", "undefined"),
        ],
    )
    def test_apply(self, files, capsys, text, word, expected):
        """Test applying elements to words"""
        assert cli.main(["apply", files("g.txt", text), word]) == 0
        assert capsys.readouterr().out == f"{expected}\n"

    def test_missing_file(self, tmp_path, capsys):
        """Test an unreadable path"""
        assert cli.main(["normalize", str(tmp_path / "absent.txt")]) == 2
        assert last_line(capsys.readouterr().err).startswith("error: FileError:")


class TestEmbedAndCheckCommands:
    """Test cases for embed and check"""

    def test_embed_iota(self, files, capsys):
        """Test ι of the transposition"""
        path = files("t.txt", TRANSPOSITION_FILE)
        assert cli.main(["embed", path, "--to", "3", "--via", "iota"]) == 0
        assert capsys.readouterr().out == IOTA_TRANSPOSITION

    def test_check_mixed_subgroup(self, files, capsys):
        """Test the ι image is in the mixed subgroup"""
        assert cli.main(["check", "subgroup-mixed", files("e.txt", IOTA_TRANSPOSITION)]) == 0
        assert capsys.readouterr().out == "true\n"

    def test_check_mixed_subgroup_fails(self, files, capsys):
        """Test the cyclic shift is not in the mixed subgroup"""
        assert cli.main(["check", "subgroup-mixed", files("s.txt", SHIFT_FILE)]) == 1
        captured = capsys.readouterr()
        assert captured.out == "false\n"
        assert last_line(captured.err).startswith("error: NotInSubgroup:")

    def test_check_pfix(self, files, capsys):
        """Test the transposition moves 0·A^*"""
        path = files("t.txt", TRANSPOSITION_FILE)
        assert cli.main(["check", "pfix", "--prefix", "0", path]) == 1
        captured = capsys.readouterr()
        assert captured.out == "false: moves 0\n"
        assert last_line(captured.err).startswith("error: NotPartiallyFixed:")

    def test_check_pfix_holds(self, files, capsys):
        """Test the ι image fixes 0·A^*"""
        path = files("e.txt", IOTA_TRANSPOSITION)
        assert cli.main(["check", "pfix", "--prefix", "0", path]) == 0
        assert capsys.readouterr().out == "true\n"

    def test_embed_higman_impossible_size(self, files, capsys):
        """Test 4 letters into 3 letters has no direct code"""
        path = files("c.txt", "G 4\n0 -> 1\n1 -> 2\n2 -> 3\n3 -> 0\n")
        assert cli.main(["embed", path, "--to", "3", "--via", "higman"]) == 2
        error = last_line(capsys.readouterr().err)
        assert error.startswith("error: ImpossibleCodeSize:")
        assert error.endswith("use --via auto")

    def test_embed_higman_with_code(self, files, capsys):
        """Test substitution with a user code"""
        path = files("s.txt", SHIFT_FILE)
        argv = ["embed", path, "--to", "2", "--via", "higman", "--code", "0,10,11"]
        assert cli.main(argv) == 0
        assert capsys.readouterr().out == "G 2\n0 -> 10\n10 -> 11\n11 -> 0\n"

    def test_embed_auto_prints_route(self, files, capsys):
        """Test auto routing reports the chosen route"""
        path = files("c.txt", "G 4\n0 -> 1\n1 -> 2\n2 -> 3\n3 -> 0\n")
        assert cli.main(["embed", path, "--to", "3"]) == 0
        captured = capsys.readouterr()
        assert "route: higman+iota" in captured.err
        assert captured.out.startswith("G 3\n")

    def test_embed_code_needs_higman(self, files, capsys):
        """Test --code outside --via higman"""
        path = files("t.txt", TRANSPOSITION_FILE)
        assert cli.main(["embed", path, "--to", "3", "--code", "0,1,2"]) == 2
        assert last_line(capsys.readouterr().err).startswith("error: InvalidQuery:")


class TestOtherCommands:
    """Test cases for succ, random, verify and usage errors"""

    def test_succ(self, capsys):
        """Test the successor map of {00, 01, 10, 11}"""
        assert cli.main(["succ", "--code", "00,01,10,11", "--letter", "2"]) == 0
        assert capsys.readouterr().out == "01 -> 02\n10 -> 2\n11 -> 12\n"

    def test_succ_not_maximal(self, capsys):
        """Test a non-maximal code"""
        assert cli.main(["succ", "--code", "0,11", "--letter", "2"]) == 2
        assert last_line(capsys.readouterr().err).startswith("error: InvalidQuery:")

    def test_succ_letter_beyond_k(self, capsys):
        """Test a letter outside the target alphabet"""
        argv = ["succ", "--code", "0,1", "--letter", "3", "--k", "3"]
        assert cli.main(argv) == 2
        assert last_line(capsys.readouterr().err).startswith("error: InvalidQuery:")

    def test_random_is_deterministic(self, capsys):
        """Test equal seeds print equal elements"""
        argv = ["random", "--k", "3", "--leaves", "7", "--seed", "5"]
        assert cli.main(argv) == 0
        first = capsys.readouterr().out
        assert cli.main(argv) == 0
        assert capsys.readouterr().out == first
        assert first.startswith("G 3\n")

    def test_random_impossible_size(self, capsys):
        """Test 4 leaves over 3 letters"""
        assert cli.main(["random", "--k", "3", "--leaves", "4", "--seed", "0"]) == 2
        assert last_line(capsys.readouterr().err).startswith("error: ImpossibleCodeSize:")

    def test_verify_without_trials(self, capsys):
        """Test trials=0 runs only the exhaustive parts"""
        argv = ["verify", "--trials", "0", "--suite", "successor-formula", "--suite", "higman"]
        assert cli.main(argv) == 0
        out = capsys.readouterr().out
        assert "successor-formula: skipped-random, exhaustive-only" in out
        assert "higman: skipped-random, exhaustive-only" in out
        assert out.endswith("result: passed\n")

    def test_usage_error(self, capsys):
        """Test argparse usage errors exit 2"""
        with pytest.raises(SystemExit) as exc_info:
            cli.main(["embed"])
        assert exc_info.value.code == 2
        assert "error:" in last_line(capsys.readouterr().err)

    def test_invalid_settings(self, monkeypatch, capsys):
        """Test a bad HTG_ value ends with an error line instead of a traceback"""
        monkeypatch.setenv("HTG_VERIFY_TRIALS", "-1")
        get_settings.cache_clear()
        try:
            assert cli.main(["random", "--k", "2", "--leaves", "3", "--seed", "0"]) == 2
        finally:
            get_settings.cache_clear()
        err = last_line(capsys.readouterr().err)
        assert err.startswith("error: InvalidSettings: verify_trials:")
