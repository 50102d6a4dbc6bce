"""End-to-end checks of the rpphilb command line.

usage: cli_checks.py CHECK --cli PATH --corpus PATH --schemas DIR
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator

SAMPLE = "0 0 3 / 0 2 5 / 3 5 5"
SQUARE = "0 2 / 2 4"

# (schema, arguments) for every subcommand.
INVOCATIONS = [
    ("indicators", ["indicators", "3,3,3"]),
    ("weight", ["weight", SAMPLE]),
    ("factorizations", ["factorizations", SQUARE]),
    ("classify", ["classify", SAMPLE]),
    ("equations", ["equations", SAMPLE, "--type", "I"]),
    ("equations", ["equations", SAMPLE, "--type", "II", "--tangent"]),
    ("equations", ["equations", SQUARE, "--type", "II", "--minimal-border"]),
    ("series", ["series", "2,2", "--curve", "P1", "--max-size", "4"]),
    ("series", ["series", "2,2", "--euler", "1", "--single-variable", "--max-size", "10"]),
    ("series", ["series", "2,1", "--diagonal", "--max-size", "4"]),
    ("count-points", ["count-points", "1 / 2", "--p", "3"]),
]


def run(cli, args, env=None):
    return subprocess.run([cli] + args, capture_output=True, text=True, env=env)


def fail(msg):
    print("FAIL:", msg)
    sys.exit(1)


def validator(schemas, name):
    with open(os.path.join(schemas, name + ".schema.json")) as f:
        schema = json.load(f)
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def check_verify(a):
    r = run(a.cli, ["verify", a.corpus])
    if r.returncode != 0:
        fail("bundled corpus: exit %d\n%s" % (r.returncode, r.stdout + r.stderr))


def check_perturbed(a):
    with open(a.corpus) as f:
        corpus = json.load(f)
    corpus["cases"][0]["expected"]["count"] = 999
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(corpus, f)
    r = run(a.cli, ["--format", "json", "verify", f.name])
    os.unlink(f.name)
    if r.returncode != 2:
        fail("perturbed corpus should exit 2, got %d" % r.returncode)
    report = json.loads(r.stdout)
    failed = [c["id"] for c in report["cases"] if not c["pass"]]
    if failed != [corpus["cases"][0]["id"]]:
        fail("unexpected failing rows %s" % failed)


def check_empty(a):
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump({"cases": []}, f)
    r = run(a.cli, ["verify", f.name])
    os.unlink(f.name)
    if r.returncode != 1:
        fail("empty corpus should exit 1, got %d" % r.returncode)
    err = json.loads(r.stderr)
    validator(a.schemas, "error").validate(err)
    if err["code"] != "corpus-error":
        fail("empty corpus error code %s" % err["code"])


def check_exit_codes(a):
    cases = [
        (["weight", ""], 1, "parse-error"),
        (["weight", "2 1"], 1, "invalid-input"),
        (["count-points", "1 / 2", "--p", "4"], 1, "nonprime-modulus"),
        (["series", "2,2", "--curve", "E"], 1, "unsupported-curve"),
        (["equations", SQUARE, "--type", "III"], 1, "unsupported-option"),
        (["--budget", "10", "count-points", "3 / 3", "--p", "3"], 2, "budget-exceeded"),
        (["--max-weight", "3", "factorizations", SAMPLE], 2, "search-too-large"),
        (["weight", "@/nonexistent.json"], 1, "parse-error"),
    ]
    err_schema = validator(a.schemas, "error")
    for args, code, name in cases:
        r = run(a.cli, args)
        if r.returncode != code:
            fail("%s: exit %d, wanted %d" % (args, r.returncode, code))
        err = json.loads(r.stderr)
        err_schema.validate(err)
        if err["code"] != name:
            fail("%s: code %s, wanted %s" % (args, err["code"], name))
    env = dict(os.environ, RPPHILB_MAX_BUDGET="10")
    r = run(a.cli, ["count-points", "3 / 3", "--p", "3"], env)
    if r.returncode != 2:
        fail("RPPHILB_MAX_BUDGET not honoured")
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump({"rows": [[0, 2], [2, 4]]}, f)
    r = run(a.cli, ["--format", "json", "classify", "@" + f.name])
    os.unlink(f.name)
    if r.returncode != 0 or json.loads(r.stdout)["count"] != 3:
        fail("@file input")


def check_determinism(a):
    for _, args in INVOCATIONS + [("verify", ["verify", a.corpus])]:
        for fmt in ("json", "text"):
            outs = {run(a.cli, ["--format", fmt] + args).stdout for _ in range(2)}
            if len(outs) != 1:
                fail("output differs between runs: %s" % args)


def check_schemas(a):
    for name, args in INVOCATIONS + [("verify", ["verify", a.corpus]), ("docs", ["docs"])]:
        r = run(a.cli, ["--format", "json"] + args)
        if r.returncode != 0:
            fail("%s: exit %d %s" % (args, r.returncode, r.stderr))
        validator(a.schemas, name).validate(json.loads(r.stdout))
    with open(a.corpus) as f:
        validator(a.schemas, "corpus").validate(json.load(f))


def check_docs(a):
    docs = json.loads(run(a.cli, ["docs"]).stdout)
    names = [c["name"] for c in docs["commands"]]
    for name in names:
        r = run(a.cli, [name, "--help"])
        if r.returncode != 0:
            fail("%s --help" % name)
    for name, _ in INVOCATIONS:
        if name not in names:
            fail("docs lacks %s" % name)


CHECKS = {
    "verify": check_verify,
    "perturbed": check_perturbed,
    "empty": check_empty,
    "exit-codes": check_exit_codes,
    "determinism": check_determinism,
    "schemas": check_schemas,
    "docs": check_docs,
}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--cli", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--schemas", required=True)
    a = p.parse_args()
    CHECKS[a.check](a)
    print("ok:", a.check)


if __name__ == "__main__":
    main()
