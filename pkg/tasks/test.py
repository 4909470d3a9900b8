# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

"""
High level testing tasks
"""
import mmap
import os

from termcolor import colored

from invoke import task
from invoke.exceptions import Exit

from .utils import (
    get_shell,
    get_repo_path,
    get_matching,
)

PYLINT_RC = ".pylintrc"
FLAKE8_RC = ".flake8"

# reference material kept next to the code, not part of the package
REFERENCE_PATTERNS = [r"^examples/"]

UNLICENSED_EXT_PATTERNS = REFERENCE_PATTERNS + [
    r"LICENSE$",
    r"(^|/)\.[^/]*$",
    r".*\.txt$",
    r".*\.json$",
    r".*\.jinja$",
    r".*\.yaml$",
    r".*\.md$",
    r".*\.ini$",
]


@task()
def test(ctx, targets=None, slow=False):
    """
    Run the unit tests on the given targets, or on every package listed in
    pytest.ini. --slow adds the full training runs.

    Example invokation:
        inv test --targets=./taskgen,./model --slow
    """
    runslow = " --runslow" if slow else ""
    with ctx.cd(get_repo_path()):
        if not targets:
            print("\n--- Running unit tests:")
            ctx.run("python -m pytest -v{}".format(runslow), pty=True, shell=get_shell())
        else:
            print("\n--- Running unit tests on defined targets:")
            for target in targets.split(','):
                ctx.run("python -m pytest -v{} {}".format(runslow, target), pty=True, shell=get_shell())


@task
def gradcheck(ctx, seed=0):
    """
    Compare the model's analytic gradients with finite differences.
    """
    with ctx.cd(get_repo_path()):
        result = ctx.run("python distscale.py gradcheck --seed {}".format(seed), warn=True, pty=True,
                         shell=get_shell())
    if not result.ok:
        raise Exit(code=1)


@task
def lint_py(ctx):
    files = get_matching(get_repo_path(), patterns=[r".*\.py$"], exclude_patterns=REFERENCE_PATTERNS)
    rc_file = get_repo_path(PYLINT_RC)
    rc_arg = "--rcfile={} ".format(rc_file) if os.path.exists(rc_file) else ""
    with ctx.cd(get_repo_path()):
        result = ctx.run("pylint {}--errors-only {}".format(rc_arg, " ".join(files)), warn=True, pty=True,
                         shell=get_shell())
    if result.ok:
        print(colored("Nice! No lint errors!", "green"))
    else:
        print(colored("Whoopsie Daisy! There was an issue linting your code!", "red"))
        raise Exit(code=1)


@task
def flake8(ctx, targets=None):
    success = True

    with ctx.cd(get_repo_path()):
        if not targets:
            files = get_matching(get_repo_path(), patterns=[r".*\.py$"], exclude_patterns=REFERENCE_PATTERNS)
            result = ctx.run("flake8 --config={rc_file} {targets}".format(
                rc_file=get_repo_path(FLAKE8_RC),
                targets=' '.join(files)), warn=True, pty=True, shell=get_shell())
            success = result.ok
        else:
            for target in targets.split(','):
                print("Checking {}...".format(target))
                result = ctx.run("flake8 --config={rc_file} {target}".format(
                    rc_file=get_repo_path(FLAKE8_RC),
                    target=target), warn=True, pty=True, shell=get_shell())
                success = success and result.ok

    if success:
        print(colored("Nice! No flakes errors!", "green"))
    else:
        raise Exit(code=1)


@task
def lint_licenses(ctx):
    """
    Scan files to ensure every source file carries the license header
    """
    unlicensed = []
    LICENSE_CUE = b"# Unless explicitly stated otherwise all files in this repository are licensed"

    files = get_matching(get_repo_path(), exclude_patterns=UNLICENSED_EXT_PATTERNS)
    for f in files:
        try:
            with open(get_repo_path(f), 'rb', 0) as fp, mmap.mmap(fp.fileno(), 0, access=mmap.ACCESS_READ) as s:
                if s.find(LICENSE_CUE) == -1:
                    unlicensed.append(f)
        except ValueError:
            unlicensed.append(f)

    if not unlicensed:
        print(colored('All good!', 'green'))
        return

    for f in unlicensed:
        print(colored("File {} is missing a license header".format(f), "red"))

    raise Exit(code=1)
