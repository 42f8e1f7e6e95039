#!/usr/bin/env python3
"""
Demo script for the orbit audit services.

This script demonstrates:
- Generating G and H pseudo-orbits in binary64
- Locating their first bit-wise divergence
- Computing the lower-bound error and its first crossing of 1e-8
- Checking the reference orbit precision by doubling the digits
"""

import sys
from pathlib import Path

# Add src (and the repository root for the version) to path
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT / "src"))

from models.orbit import EvaluationFormId, MapParameters, orbit_position  # noqa: E402
from services.error_analysis import first_crossing, first_divergence, log10_series, lower_bound_series  # noqa: E402
from services.fixed_precision import iterate_fixed, verify_step_rounding  # noqa: E402
from services.reference_engine import digit_loss_bound, precision_sufficiency_check  # noqa: E402


def print_section(title: str):
    """Print a section header."""
    print(f"\n{'=' * 80}")
    print(f"  {title}")
    print(f"{'=' * 80}\n")


def main():
    """Run the orbit audit demo."""
    params = MapParameters(r="3.8", x0="0.4", iterates=100)

    print_section("1. Step kernel rounding check")
    audit = verify_step_rounding(samples=500)
    print(f"  {audit.samples} samples, {len(audit.mismatches)} mismatches")

    print_section("2. Pseudo-orbits G and H")
    g = iterate_fixed(EvaluationFormId.G, params)
    h = iterate_fixed(EvaluationFormId.H, params)
    d = first_divergence(g, h)
    print(f"  First bit-wise difference at n={d} (position {orbit_position(d)})")
    for n in (0, 1, d, 50, 100):
        print(f"  n={n:3d}  G={g.values[n]:.17g}  H={h.values[n]:.17g}")

    print_section("3. Lower-bound error")
    lower = lower_bound_series(g, h)
    crossing = first_crossing(lower, "1e-8")
    logs = log10_series(lower)
    print(f"  First crossing of 1e-8 at n={crossing.iterate}, log10 delta = {logs[crossing.iterate]:.3f}")

    print_section("4. Reference precision")
    print(f"  Digit-loss bound over {params.iterates} iterates: {digit_loss_bound(params.r_exact, params.iterates)}")
    ok = precision_sufficiency_check(params, 1000, "1e-300")
    print(f"  1000 digits vs 2000 digits agree to 1e-300: {ok}")


if __name__ == "__main__":
    main()
