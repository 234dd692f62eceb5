import shlex
import sys

import pytest

from limitgen.pkg.adversary import build_enumeration, run_refutation
from limitgen.pkg.errors import ExternalGeneratorError
from limitgen.pkg.game import play
from limitgen.pkg.generators import ClosureGenerator, ExternalGenerator, format_history
from limitgen.pkg.universe import Element

from .conftest import els

PYTHON = shlex.quote(sys.executable)


def pipe_command(*args):
    return " ".join([PYTHON, "-m", "limitgen.internal.pipe_generators"] + list(args))


def test_format_history():
    assert format_history(els((0, 0), (2, 1))) == "history (0,0) (2,1)"
    assert format_history([]) == "history"


def test_fresh_column_over_pipe():
    with ExternalGenerator(pipe_command("fresh-column")) as generator:
        assert generator.query(els((0, 0), (1, 0))) == Element(101, 0)
        assert generator.query(els((0, 0))) == Element(100, 0)
        assert generator.restarts == 2


def test_persistent_child_is_reused():
    with ExternalGenerator(pipe_command("fresh-column", "--offset", "7"), fresh=False) as generator:
        generator.query(els((0, 0)))
        generator.query(els((0, 0), (0, 1)))
        assert generator.restarts == 1


def test_pipe_closure_generator_matches_in_process(c_ex, collections_dir):
    command = pipe_command("closure", "--collection", shlex.quote(str(collections_dir / "c_ex.col")), "--noise", "1")
    target = c_ex.get("L1")
    local = play(c_ex, ClosureGenerator(c_ex, 1), build_enumeration(target, els((2, 0))), 10, "L1")
    with ExternalGenerator(command, fresh=False, noise=1) as generator:
        remote = play(c_ex, generator, build_enumeration(target, els((2, 0))), 10, "L1")
    assert [step.to_line() for step in remote.steps] == [step.to_line() for step in local.steps]


def test_external_generator_refuted():
    with ExternalGenerator(pipe_command("fresh-column")) as generator:
        outcome = run_refutation(generator, 6, 5)
    assert outcome.report.case == "scattered"
    assert len(outcome.errors) == 5


@pytest.mark.parametrize(
    "script",
    ["import time; time.sleep(10)", "print('nope', flush=True)", "pass"],
)
def test_protocol_failures(script):
    generator = ExternalGenerator(f"{PYTHON} -c {shlex.quote(script)}", timeout=1.0)
    with pytest.raises(ExternalGeneratorError):
        generator.query(els((0, 0)))
    generator.close()


def test_missing_command():
    with pytest.raises(ExternalGeneratorError):
        ExternalGenerator("/nonexistent/generator-binary").query(els((0, 0)))
    with pytest.raises(ValueError):
        ExternalGenerator("   ")
