"""Template for the standalone script that renders a sweep as surface and contour plots.

The script runs outside the package (it needs pandas and matplotlib only), so the
core never imports a plotting library.
"""
import os
from pathlib import Path

PLOT_SCRIPT_TEMPLATE = '''#!/usr/bin/env python3
"""Surface and contour plots of the minimum p satisfying the reduction criterion.

Generated by `soglia sweep`; reads {data_name}.
"""
import sys
import os
from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

DATA = Path(__file__).resolve().parent / {data_relpath!r}


def load(path):
    if path.suffix == ".parquet":
        return pd.read_parquet(path)
    return pd.read_csv(path)


def main(out=None):
    df = load(DATA)
    grid = df.pivot(index="phi", columns="theta", values="p_star")
    theta, phi = np.meshgrid(grid.columns.to_numpy(), grid.index.to_numpy())
    p_star = grid.to_numpy()

    fig = plt.figure(figsize=(12, 5))
    ax3d = fig.add_subplot(1, 2, 1, projection="3d")
    ax3d.plot_surface(theta, phi, np.ma.masked_invalid(p_star), cmap="viridis")
    ax3d.set_xlabel("theta")
    ax3d.set_ylabel("phi")
    ax3d.set_zlabel("minimum p")

    ax2d = fig.add_subplot(1, 2, 2)
    contour = ax2d.contourf(theta, phi, np.ma.masked_invalid(p_star), levels=30, cmap="viridis")
    fig.colorbar(contour, ax=ax2d, label="minimum p")
    ax2d.set_xlabel("theta")
    ax2d.set_ylabel("phi")

    fig.tight_layout()
    if out:
        fig.savefig(out, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
'''


def render_plot_script(data_path: Path, script_path: Path) -> str:
    """Script text for a sweep saved at ``data_path`` and a script written to ``script_path``.

    The data file is embedded relative to the script's directory, or as an absolute
    path when no relative path exists (different drives).
    """
    data = Path(data_path).resolve()
    script_dir = Path(script_path).resolve().parent
    try:
        relpath = os.path.relpath(data, script_dir)
    except ValueError:
        relpath = str(data)
    return PLOT_SCRIPT_TEMPLATE.format(data_name=data.name, data_relpath=relpath)
