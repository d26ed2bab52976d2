"""Render experiment datasets to PNG files with matplotlib.

Each dataset carries its own plot descriptors (x column, y columns, line
styles, labels); rendering is generic over them.  The Agg backend is
forced so figure output works headless.
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_dataset(dataset, out_dir, dpi=150):
    """Write one PNG per plot descriptor; returns the written paths."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for spec in dataset.plots:
        xs = [float(v) for v in dataset.columns[spec["x"]]]
        fig, ax = plt.subplots(figsize=(8, 5))
        styles = spec.get("styles") or ["-"] * len(spec["ys"])
        for name, style in zip(spec["ys"], styles):
            ys = [float(v) for v in dataset.columns[name]]
            ax.plot(xs, ys, style, label=name, linewidth=1.2)
        ax.set_xlabel(spec.get("xlabel", spec["x"]))
        ax.set_ylabel(spec.get("ylabel", ""))
        ax.set_title(spec.get("title", dataset.name))
        ax.legend(fontsize=9)
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        path = os.path.join(out_dir, f"{spec['file']}.png")
        fig.savefig(path, dpi=dpi)
        plt.close(fig)
        written.append(path)
    return written
