from wreathz import cyclic, parse_element
from wreathz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_length_examples(capsys):
    code, out, _ = run(capsys, "length", "--group", "Z/2", "(;5)")
    assert code == 0 and out.strip() == "5"
    code, out, _ = run(capsys, "length", "--group", "Z/2", "(1@1;0)")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "length", "--group", "Z/2", "(1@-1,1@1;0)")
    assert code == 0 and out.strip() == "6"


def test_tree_dist_example(capsys):
    code, out, _ = run(capsys, "tree-dist", "--group", "Z/2", "--side", "plus", "(1@-1;0)")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(
        capsys, "tree-dist", "--group", "Z/2", "--side", "minus", "--show-vertex", "(1@1;-1)"
    )
    assert code == 0
    assert out.splitlines() == ["T- [-1 | 1@1]", "3"]


def test_parse_error_gives_caret_and_exit_2(capsys):
    code, _, err = run(capsys, "length", "--group", "Z/2", "(1@;0)")
    assert code == 2
    assert "parse error" in err and "^" in err
    code, _, err = run(capsys, "length", "--group", "Q", "(;0)")
    assert code == 2


def test_budget_error_gives_exit_3(capsys):
    code, _, err = run(capsys, "ball", "--group", "Z/2", "--radius", "9", "--budget", "50")
    assert code == 3
    assert "budget" in err


def test_ball_csv(capsys):
    code, out, _ = run(capsys, "ball", "--group", "Z/2", "--radius", "3")
    assert code == 0
    assert out.splitlines() == ["radius,count", "0,1", "1,4", "2,10", "3,22"]
    code, out, _ = run(capsys, "ball", "--group", "Z/2", "--radius", "1", "--format", "text")
    assert "radius 1: 4 elements" in out


def test_embed_dump_rational_mode(capsys):
    code, out, _ = run(capsys, "embed", "--group", "Z", "(2@0;0)")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "norm2\t4"  # single integer lamp of size 2, exact
    assert lines[-1] == "norm\t2.000000000000"
    assert any(line.startswith("lamp 0 : 0\t2") for line in lines)


def test_embed_dump_contains_vertex_literals(capsys):
    code, out, _ = run(capsys, "embed", "--group", "Z/2", "(;1)")
    assert code == 0
    assert "oe T+ [0 | ] -> T+ [1 | ]" in out
    assert "norm2\t2" in out


def test_embed_weighted_mode(capsys):
    code, out, _ = run(
        capsys, "embed", "--group", "Z/2", "--tree-mode", "guka:1/2", "(;2)"
    )
    assert code == 0
    assert "norm2\t6.0000000000" in out  # (1 + 2) per tree
    code, _, err = run(capsys, "embed", "--group", "Z/2", "--tree-mode", "guka:2", "(;1)")
    assert code == 2


def test_properness_report(capsys):
    code, out, _ = run(
        capsys, "properness", "--group", "Z/2", "--radius", "2", "--p", "2"
    )
    assert code == 0
    assert "count=10" in out
    assert "group=Z/2" in out
    assert "value_ball={1}" in out
    code, out, _ = run(
        capsys,
        "properness", "--group", "Z/2", "--radius", "2", "--p", "1", "--format", "csv",
    )
    assert out.splitlines()[0] == "key,value"
    assert "count,4" in out


def test_compress_fit_and_samples(capsys):
    args = ["compress", "--group", "Z/2", "--seed", "5", "--scale", "60", "--count", "400"]
    code, out, _ = run(capsys, *args)
    assert code == 0
    fit = dict(line.split("=", 1) for line in out.splitlines())
    assert 0.0 <= float(fit["exponent"]) <= 1.0
    assert int(fit["samples"]) <= 400

    code, out2, _ = run(capsys, *args, "--emit", "samples")
    lines = out2.splitlines()
    assert lines[0] == "wordLength,embeddedDist" and len(lines) == 401
    code, out3, _ = run(capsys, *args)
    assert out3 == out  # deterministic under the same seed

    code, out4, _ = run(capsys, *args, "--emit", "envelope")
    assert out4.splitlines()[0] == "bucket,minDist"


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "1/2")
    assert code == 0
    assert "equivariant_lower=1/4" in out
    assert "upper_reference=3/4" in out
    code, _, err = run(capsys, "bounds", "3/2")
    assert code == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "base-groups")
    assert code == 0
    assert out.splitlines()[0].startswith("PASS base-groups")
    assert "passed 1/1 suites" in out
    code, _, err = run(capsys, "verify", "--suite", "no-such-suite")
    assert code == 2


def test_printed_literals_reparse(capsys):
    spec = cyclic(2)
    for literal in ["(;5)", "(1@-1,1@1;0)", "(1@2;-3)"]:
        x = parse_element(spec, literal)
        assert str(x) == literal
        assert parse_element(spec, str(x)) == x
