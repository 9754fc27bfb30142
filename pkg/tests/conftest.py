from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def mt_reference_vector() -> list[int]:
    """Committed canonical MT19937 stream for seed 5489 (one u32 per line)."""
    lines = (FIXTURES / "mt19937_seed5489_u32.txt").read_text().splitlines()
    return [int(line) for line in lines]


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    from chaosgrid.cli import main

    def run(*argv: str):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse-level rejection
            code = exc.code
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
