import json
import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("argv", [
    ["bisim_modalities.py", "--pairs", "5", "--max-size", "4"],
    ["axiom_sweep.py", "--max-worlds", "2"],
    ["translation_clauses.py", "--max-size", "2"],
    ["find_nabla_pair.py", "--limit", "1"],
])
def test_script_runs(argv):
    proc = subprocess.run([sys.executable, str(SCRIPTS / argv[0]), *argv[1:]], capture_output=True, text=True,
                          timeout=300)
    assert proc.returncode == 0, proc.stderr
    json.loads(proc.stdout)
