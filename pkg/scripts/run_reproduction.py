#!/usr/bin/env python3
"""
Runner for the published logistic map experiment.

Runs the reproduce-paper workflow from a source checkout without installing
the package, writing files to the directory given as the first argument.
"""

import sys
from pathlib import Path

# Add src (and the repository root for the version) to path for imports
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT / "src"))

from cli.main import main  # noqa: E402


if __name__ == "__main__":
    outdir = sys.argv[1] if len(sys.argv) > 1 else "orbit-audit-output"
    print("Reproducing r=3.8, x0=0.4, N=100 against a 1000-digit reference...", file=sys.stderr)
    sys.exit(main(["reproduce-paper", "--out", outdir]))
