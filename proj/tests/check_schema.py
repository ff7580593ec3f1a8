"""Validate dmod JSON reports against schema/report.schema.json.

usage: check_schema.py <dmod executable> <source dir>

Every report must validate, be byte-identical on a second run, and agree
with the exit-code contract (ok -> 0, inconclusive -> 2, failed/error -> 1).
"""

import json
import pathlib
import subprocess
import sys

import jsonschema

EXIT = {"ok": 0, "inconclusive": 2, "failed": 1, "error": 1}
COMMANDS = ["adjoint", "cc", "rank", "test", "test2", "param", "selfadjoint", "dims", "pp", "spencerize"]


def run(exe, args):
    p = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout


def main():
    exe, src = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads((src / "schema" / "report.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema)

    cases = []
    for sys_file in sorted((src / "fixtures").glob("*.sys")):
        for cmd in COMMANDS:
            cases.append([cmd, str(sys_file)])
    cases += [
        ["test", str(src / "fixtures" / "double_pendulum.sys"), "--subst", "l2=l1"],
        ["test", str(src / "fixtures" / "example_1_2.sys"), "--subst", "a=0"],
        ["selfadjoint", "--demo", "einstein3"],
        ["selfadjoint", "--demo", "einstein3", "--row-scale", "1,2"],
        ["cc", "--demo", "grad3", "--max-order", "0"],
        ["spencerize", "--demo", "div3", "--max-order", "2"],
        ["test", str(src / "fixtures" / "does_not_exist.sys")],
        ["demo", "macaulay"],
        ["demo", "--all"],
        ["demo", "nope"],
    ]

    failures = 0
    for args in cases:
        code, out = run(exe, args)
        label = " ".join(pathlib.Path(a).name if a.endswith(".sys") else a for a in args)
        try:
            report = json.loads(out)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
            failures += 1
            continue
        if EXIT[report["status"]] != code:
            print(f"FAIL {label}: status {report['status']} but exit {code}")
            failures += 1
            continue
        code2, out2 = run(exe, args)
        if (code2, out2) != (code, out):
            print(f"FAIL {label}: second run differs")
            failures += 1
            continue
        print(f"ok   {label}: {report['status']}")

    print(f"{len(cases) - failures}/{len(cases)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
