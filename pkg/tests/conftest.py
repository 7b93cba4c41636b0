import io
import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import settings

from powersums.cli import run

# Exact rational arithmetic makes some examples slow out of proportion to
# their value count; wall-clock deadlines only add flakiness here.
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

SRC_DIR = Path(__file__).resolve().parent.parent / "src"


@pytest.fixture
def cli():
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def invoke(*args: str):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(args), out, err)
        return code, out.getvalue(), err.getvalue()

    return invoke


@pytest.fixture
def cli_subprocess():
    """Invoke the CLI as a cold subprocess; returns CompletedProcess."""

    def invoke(*args: str):
        env = dict(os.environ)
        env["PYTHONPATH"] = str(SRC_DIR) + os.pathsep + env.get("PYTHONPATH", "")
        return subprocess.run(
            [sys.executable, "-m", "powersums", *args],
            capture_output=True,
            text=True,
            env=env,
        )

    return invoke
