"""The named compare targets all pass; these back the CLI compare command."""

import pytest

from quiverdt import checks
from quiverdt.cli import run


@pytest.mark.parametrize("name", sorted(checks.COMPARE_TARGETS))
def test_compare_target_passes(name):
    result = checks.run_check(name)
    assert result.equal, result.describe()


def test_compare_all_cli_exits_zero(capsys):
    assert run(["compare", "all"]) == 0
    out = capsys.readouterr().out
    assert out.count("equal through") >= 9


def test_compare_with_reduced_order(capsys):
    assert run(["compare", "conifold-ncdt", "--order", "6"]) == 0


def test_unknown_target_usage_error():
    assert run(["compare", "not-a-target"]) == 2
