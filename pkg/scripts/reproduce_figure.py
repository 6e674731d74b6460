#!/usr/bin/env python3
"""Demo: run the d=3 threshold sweep, write CSV + plotting script, print the summary."""
import json
import os
import sys
from pathlib import Path

# Ensure project root is on path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from analysis import run_sweep
from charpoly import maxent_threshold

OUT_DIR = Path("data/sweep")


def main():
    jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    out = OUT_DIR / "p_star_3x3.csv"

    print(f"Sweeping 181x181 grid over [0, pi/2]^2 with {jobs} worker(s)...")
    result = run_sweep(out, theta_steps=181, phi_steps=181, jobs=jobs, plot_script_path=OUT_DIR / "plot_p_star.py")
    if not result.success:
        for error in result.errors:
            print("Error:", error)
        return 1

    print(json.dumps(result.summary, indent=2))
    print(f"\nMaximally entangled threshold 1/(d+1): {maxent_threshold(3)}")
    print(f"Render with: python {OUT_DIR / 'plot_p_star.py'} figure.png")
    return 0


if __name__ == "__main__":
    sys.exit(main())
