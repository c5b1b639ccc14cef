"""Rendering of sweep output to figure files.

Line plots of the swept columns against the single varying grid axis; used by
``chanvar sweep --plot``.  Import of matplotlib is deferred so the data path
never pays for it.
"""

from __future__ import annotations


def render_sweep(columns: list[str], rows: list[list[float]], x_column: str,
                 out_path: str, title: str | None = None) -> None:
    """Render every non-axis column against ``x_column`` and save the figure.

    PNG metadata that varies between runs (timestamps, tool versions) is
    stripped so repeated renders of the same data are stable.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xi = columns.index(x_column)
    axis_cols = {"param", "alpha", "beta"}
    xs = [row[xi] for row in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for j, name in enumerate(columns):
        if j == xi or name in axis_cols:
            continue
        ax.plot(xs, [row[j] for row in rows], label=name, linewidth=1.4)
    ax.set_xlabel(x_column)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=9)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    kwargs = {}
    if out_path.lower().endswith(".png"):
        kwargs["metadata"] = {"Date": None, "Software": None}
    fig.savefig(out_path, dpi=150, **kwargs)
    plt.close(fig)
