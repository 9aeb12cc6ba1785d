import pytest

from quord import diamond, format_relation, parse_relation, standard_example
from quord.cli import main


DIAMOND = format_relation(diamond(labeled=True))
CHAIN3 = "n: 3\n0 1\n1 2\n0 2\n"
NON_HALFSPACE = "n: 3\n0 1\n"


@pytest.fixture
def write(tmp_path):
    counter = [0]

    def _write(text: str) -> str:
        counter[0] += 1
        path = tmp_path / f"rel{counter[0]}.rel"
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_diamond(self, write, capsys):
        code, out, _ = run(capsys, "classify", write(DIAMOND))
        assert code == 0
        assert "reflexive: true" in out
        assert "antisymmetric: true" in out
        assert "total: false" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "classify", "/nonexistent.rel")
        assert code == 2 and "error" in err


class TestCheck:
    def test_halfspace_true(self, write, capsys):
        code, out, _ = run(capsys, "check", "halfspace", write(DIAMOND))
        assert code == 0 and "halfspace: true" in out

    def test_halfspace_false_with_witness(self, write, capsys):
        code, out, _ = run(capsys, "check", "halfspace", write(NON_HALFSPACE))
        assert code == 1
        assert "halfspace: false" in out
        assert "witness: (0, 2, 1)" in out

    def test_not_a_quasiorder(self, write, capsys):
        code, _, err = run(capsys, "check", "halfspace", write("n: 3\nstrict: true\n0 1\n"))
        assert code == 2 and "reflexive" in err


class TestDecompose:
    def test_diamond_boxes(self, write, capsys):
        code, out, _ = run(capsys, "decompose", write(DIAMOND))
        assert code == 0
        assert "[{bot} < {a,b}∅ < {top}]" in out

    def test_full_box_marker(self, write, capsys):
        code, out, _ = run(capsys, "decompose", write("n: 2\n0 1\n1 0\n"))
        assert code == 0 and "[{0,1}■]" in out

    def test_non_halfspace_rejected(self, write, capsys):
        code, _, err = run(capsys, "decompose", write(NON_HALFSPACE))
        assert code == 2 and "halfspace" in err


class TestComplement:
    def test_chain_complement_reparses(self, write, capsys):
        code, out, _ = run(capsys, "complement", write(CHAIN3))
        assert code == 0
        rel = parse_relation(out)
        assert rel.pairs() == {(0, 0), (1, 1), (2, 2), (2, 1), (2, 0), (1, 0)}


class TestExtend:
    def test_default_seed(self, write, capsys):
        code, out, _ = run(capsys, "extend", write(DIAMOND))
        assert code == 0
        assert "# order: bot < a < b < top" in out
        assert parse_relation(out).is_total

    def test_custom_seed(self, write, capsys):
        code, out, _ = run(
            capsys, "extend", write(DIAMOND), "--seed", "top,b,a,bot"
        )
        assert code == 0
        assert "# order: bot < b < a < top" in out


class TestTighten:
    def test_identity_under_full(self, write, capsys):
        gamma = write("n: 2\n")
        alpha = write("n: 2\n0 1\n1 0\n")
        code, out, _ = run(capsys, "tighten", "--gamma", gamma, "--alpha", alpha)
        assert code == 0
        assert parse_relation(out).pairs() == {(0, 0), (1, 1), (0, 1)}

    def test_not_contained(self, write, capsys):
        gamma = write("n: 2\n0 1\n")
        alpha = write("n: 2\n1 0\n")
        code, _, err = run(capsys, "tighten", "--gamma", gamma, "--alpha", alpha)
        assert code == 2 and "not contained" in err


class TestLinearize:
    def test_single(self, write, capsys):
        alpha = write(DIAMOND)
        lam = write("elements: bot a b top\nbot a\na b\nb top\nbot b\na top\nbot top\n")
        code, out, _ = run(capsys, "linearize", "--alpha", alpha, "--lambda", lam)
        assert code == 0
        assert "# order: bot < a < b < top" in out

    def test_both(self, write, capsys):
        alpha = write(DIAMOND)
        lam = write("elements: bot a b top\nbot a\na b\nb top\nbot b\na top\nbot top\n")
        code, out, _ = run(capsys, "linearize", "--alpha", alpha, "--lambda", lam, "--both")
        assert code == 0
        assert "R1: bot < a < b < top" in out
        assert "R2: bot < b < a < top" in out


class TestDimensions:
    def test_diamond_dim(self, write, capsys):
        code, out, _ = run(capsys, "dim", write(DIAMOND))
        assert code == 0 and out.splitlines()[0] == "2"

    def test_diamond_hsdim(self, write, capsys):
        code, out, _ = run(capsys, "hsdim", write(DIAMOND))
        assert code == 0 and out.splitlines()[0] == "1"

    def test_standard_example(self, write, capsys):
        path = write(format_relation(standard_example(3)))
        code, out, _ = run(capsys, "dim", path)
        assert code == 0 and out.splitlines()[0] == "3"
        code, out, _ = run(capsys, "hsdim", path)
        assert code == 0 and out.splitlines()[0] == "3"

    def test_quotient_note(self, write, capsys):
        code, out, _ = run(capsys, "dim", write("n: 2\n0 1\n1 0\n"))
        assert code == 0
        assert out.splitlines()[0] == "1"
        assert "classes" in out

    def test_deterministic(self, write, capsys):
        path = write(DIAMOND)
        first = run(capsys, "hsdim", path)
        second = run(capsys, "hsdim", path)
        assert first == second


class TestTransform:
    def test_two_parts(self, write, capsys):
        gamma = write("n: 2\n")
        up = write("n: 2\n0 1\n")
        down = write("n: 2\n1 0\n")
        code, out, _ = run(capsys, "transform", "--gamma", gamma, "--realizer", up, down)
        assert code == 0
        assert "R1: {0} < {1}" in out
        assert "R2: {1} < {0}" in out

    def test_alt_matches(self, write, capsys):
        gamma = write("n: 2\n")
        up = write("n: 2\n0 1\n")
        down = write("n: 2\n1 0\n")
        _, main_out, _ = run(capsys, "transform", "--gamma", gamma, "--realizer", up, down)
        _, alt_out, _ = run(
            capsys, "transform", "--gamma", gamma, "--realizer", up, down, "--alt"
        )
        assert main_out == alt_out

    def test_padding_reported(self, write, capsys):
        gamma = write(CHAIN3)
        code, out, _ = run(capsys, "transform", "--gamma", gamma, "--realizer", gamma)
        assert code == 0
        assert "# padded" in out

    def test_bad_realizer(self, write, capsys):
        gamma = write("n: 2\n0 1\n")
        other = write("n: 2\n1 0\n")
        code, _, err = run(capsys, "transform", "--gamma", gamma, "--realizer", other, other)
        assert code == 2


class TestProduct:
    def test_two_chains_materialized(self, write, capsys):
        c2 = write("n: 2\n0 1\n")
        code, out, _ = run(capsys, "product", c2, c2)
        assert code == 0
        assert "# halfspace: true" in out
        assert parse_relation(out).rows == diamond().rows

    def test_structural_only_false(self, write, capsys):
        c2 = write("n: 2\n0 1\n")
        c3 = write(CHAIN3)
        code, out, _ = run(capsys, "product", c2, c3, "--structural-only")
        assert code == 1
        assert "halfspace: false" in out

    def test_trivial_factor_needs_flag(self, write, capsys):
        c2 = write("n: 2\n0 1\n")
        ident = write("n: 2\n")
        code, _, err = run(capsys, "product", c2, ident, "--structural-only")
        assert code == 2
        code, out, _ = run(
            capsys, "product", c2, ident, "--structural-only", "--treat-trivial"
        )
        assert code == 1


class TestEnumerate:
    def test_quasiorders_n3(self, capsys):
        code, out, _ = run(capsys, "enumerate", "quasiorders", "3")
        assert code == 0
        assert "# count: 29" in out
        assert len([l for l in out.splitlines() if not l.startswith("#")]) == 29

    def test_halfspaces_n3(self, capsys):
        code, out, _ = run(capsys, "enumerate", "halfspaces", "3")
        assert code == 0
        assert "# count: 20" in out

    def test_cap_exit_code(self, capsys):
        code, _, err = run(capsys, "enumerate", "quasiorders", "6")
        assert code == 3


class TestOracle:
    def test_equivalence_suite(self, capsys):
        code, out, err = run(capsys, "oracle", "prop2.2-equivalence-n3")
        assert code == 0
        assert "29 instances, 0 failures" in out
        assert "wall time" in err

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "oracle", "no-such-suite")
        assert code == 2 and "available" in err

    def test_stdout_deterministic(self, capsys):
        a = run(capsys, "oracle", "separation-counterexample")
        b = run(capsys, "oracle", "separation-counterexample")
        assert a[0] == b[0] == 0
        assert a[1] == b[1]
