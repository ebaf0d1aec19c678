import json
import re
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from conftest import run_cli
from numtower import cli

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "gcd_136_6_trace": ["gcd", "136", "6", "--trace"],
    "cf_17_3": ["cf", "17/3"],
    "surd_2": ["surd", "2"],
    "convergents_sqrt2": ["convergents", "sqrt:2", "--max", "5"],
    "pi_4_doublings_6_digits": ["pi", "--doublings", "4", "--digits", "6"],
    "pebble_odd_square_5": ["pebble", "odd-square", "5"],
    "pebble_even_square_6": ["pebble", "even-square", "6"],
    "pebble_sum_of_odds_11_4": ["pebble", "sum-of-odds", "11", "4"],
    "ruler_product_3_2_4_3": ["ruler-product", "3/2", "4/3"],
    "zeno_5": ["zeno", "--max", "5"],
}


@pytest.fixture(scope="module")
def schema():
    text = resources.files("numtower").joinpath("schemas/output.schema.json").read_text()
    return json.loads(text)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_text(name):
    r = run_cli(*GOLDEN_CASES[name])
    assert r.code == 0
    assert r.out == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


VALID = [
    ["gcd", "136", "6"],
    ["gcd", "136", "6", "--literal"],
    ["coprime", "17", "3"],
    ["coprime", "136", "6", "--trace"],
    ["cf", "22/6"],
    ["cf", "0/5"],
    ["cf-reconstruct", "[5; 1, 2]"],
    ["surd", "sqrt:13"],
    ["convergents", "355/113"],
    ["triples", "--max", "30"],
    ["descent"],
    ["descent", "70", "99"],
    ["pebble", "even-square", "4"],
    ["pi", "--doublings", "6", "--bits", "96"],
    ["area", "1/2"],
    ["ratio-areas", "2", "3"],
    ["halving-check", "--doublings", "5"],
    ["zeno"],
    ["ruler-product", "5", "7/2"],
    ["theodorus", "--max", "5"],
    ["real", "add", "sqrt:2", "sqrt:3"],
    ["real", "mul", "sqrt:2", "sqrt:2", "--bits", "20"],
    ["real", "compare", "sqrt:2", "3/2"],
    ["real", "between", "1/3", "1/2"],
    ["real", "archimedean", "1/1000", "1"],
    ["real", "sup", "sqrt:2", "7/5"],
    ["laws", "group", "--max", "50", "--seed", "3"],
    ["help"],
]

DOMAIN_ERRORS = [
    ["gcd", "0", "4"],
    ["surd", "49"],
    ["pebble", "odd-square", "4"],
    ["pebble", "odd-square", "101"],
    ["pebble", "sum-of-odds", "11", "3"],
    ["real", "between", "sqrt:2", "sqrt:2", "--bits", "32"],
    ["real", "compare", "sqrt:2", "1", "--bits", "-1"],
    ["pi", "--doublings", "65"],
    ["zeno", "--max", "0"],
    ["gcd", "1000000000", "1", "--literal"],
    ["ruler-product", "-1", "2"],
    ["area", "0"],
]

USAGE_ERRORS = [
    [],
    ["frobnicate"],
    ["gcd", "1"],
    ["gcd", "-3", "4"],
    ["gcd", "a", "4"],
    ["cf", "1.5"],
    ["cf", "3/0"],
    ["real", "inv", "2"],
    ["real", "add", "1"],
    ["laws", "ring"],
    ["pi", "--doublings", "four"],
    ["descent", "12"],
]


@pytest.mark.parametrize("argv", VALID, ids=" ".join)
def test_valid_invocations_exit_zero_and_validate(argv, schema):
    assert run_cli(*argv).code == 0
    r = run_cli(*argv, "--json")
    assert r.code == 0
    jsonschema.validate(r.doc, schema)
    assert r.doc["command"] == argv[0]
    assert r.out.count("\n") == 1


@pytest.mark.parametrize("argv", DOMAIN_ERRORS, ids=" ".join)
def test_domain_errors_exit_one(argv, schema):
    r = run_cli(*argv)
    assert r.code == 1
    assert r.out == ""
    lines = r.err.strip().splitlines()
    assert len(lines) == 1 and re.match(r"error: [a-z-]+: \S", lines[0])
    j = run_cli(*argv, "--json")
    assert j.code == 1
    jsonschema.validate(j.doc, schema)
    assert "error" in j.doc


@pytest.mark.parametrize("argv", USAGE_ERRORS, ids=lambda a: " ".join(a) or "<empty>")
def test_usage_errors_exit_two(argv, capsys):
    assert run_cli(*argv).code == 2


def test_help_lists_every_subcommand():
    text = run_cli("help").out
    for name in cli.HANDLERS:
        assert re.search(rf"^  {re.escape(name)} ", text, re.M), name
    assert set(cli.COMMANDS) == set(cli.HANDLERS)


@pytest.mark.parametrize("name", sorted(cli.COMMANDS))
def test_help_examples_run(name):
    example = cli.COMMANDS[name][1]
    assert f"{cli.PROG} {' '.join(example)}" in run_cli("help").out
    assert run_cli(*example).code == 0


_NUM = re.compile(r"-?\d+(?:/\d+)?(?:\.\d+)?")


def _json_numbers(doc) -> set:
    out = set()
    if isinstance(doc, dict):
        for v in doc.values():
            out |= _json_numbers(v)
    elif isinstance(doc, list):
        for v in doc:
            out |= _json_numbers(v)
    elif isinstance(doc, bool) or doc is None:
        pass
    elif isinstance(doc, int):
        out.add(str(doc))
    elif isinstance(doc, str):
        out |= set(_NUM.findall(doc))
    return out


AGREEMENT = [
    ["gcd", "136", "6", "--trace"],
    ["cf", "22/6"],
    ["surd", "7"],
    ["convergents", "sqrt:2", "--max", "5"],
    ["pi", "--doublings", "4", "--digits", "6"],
    ["area", "2", "--digits", "6"],
    ["ratio-areas", "1", "2", "--digits", "8"],
    ["zeno", "--max", "6"],
    ["ruler-product", "3/2", "4/3"],
    ["theodorus", "--max", "6", "--digits", "6"],
    ["real", "between", "sqrt:2", "3/2"],
    ["real", "archimedean", "2", "7"],
    ["real", "compare", "sqrt:2", "3/2"],
    ["descent", "12", "17"],
    ["triples", "--max", "20"],
]


@pytest.mark.parametrize("argv", AGREEMENT, ids=" ".join)
def test_text_and_json_agree_on_numbers(argv):
    text = run_cli(*argv).out
    doc = run_cli(*argv, "--json").doc
    # 2^-k carries k; 'lemma N', sqrt(D) and pebble multipliers are labels
    text = re.sub(r"2\^-(\d+)", r" \1 ", text)
    text = re.sub(r"lemma \d|sqrt\(\d+\)|\d+\*", " ", text)
    missing = set(_NUM.findall(text)) - _json_numbers(doc)
    assert not missing, missing


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "numtower", "cf", "17/3"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "[5; 1, 2]"
