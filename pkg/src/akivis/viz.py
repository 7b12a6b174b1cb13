"""Figure rendering for CLI reports.

Two small matplotlib renderers, both writing a file and returning the path:

* save_dims_figure -- bar chart of graded dimensions by degree.  Dimensions
  grow quickly with degree, so bars are drawn on a log-scaled axis with the
  exact count printed above each bar.
* save_check_figure -- one horizontal pass/fail bar for an identity sweep,
  annotated with the identity name and the checked/failed tuple counts.

matplotlib is imported lazily inside the functions so the rest of the
package works without a display stack, and the Agg backend is forced so
rendering never needs a display.
"""

from __future__ import annotations

from typing import Sequence


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_dims_figure(path: str, name: str, dims: Sequence[int]) -> str:
    """Render the graded dimensions `dims` (index = degree) as a bar chart."""
    plt = _pyplot()
    degrees = list(range(len(dims)))
    fig, ax = plt.subplots(figsize=(6, 4))
    bars = ax.bar(degrees, dims, color="#4878a8")
    if max(dims, default=0) > 0:
        ax.set_yscale("log")
    for rect, d in zip(bars, dims):
        ax.annotate(str(d), (rect.get_x() + rect.get_width() / 2, rect.get_height()),
                    ha="center", va="bottom", fontsize=9)
    ax.set_xticks(degrees)
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.set_title(f"graded dimensions: {name}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def save_check_figure(path: str, report) -> str:
    """Render a CheckReport as a single pass/fail bar."""
    plt = _pyplot()
    ok = report.checked - report.failures
    fig, ax = plt.subplots(figsize=(6, 2.2))
    ax.barh([0], [ok], color="#4a9a5a", label=f"passed ({ok})")
    if report.failures:
        ax.barh([0], [report.failures], left=[ok], color="#b5443c",
                label=f"failed ({report.failures})")
    ax.set_yticks([])
    ax.set_xlim(0, max(report.checked, 1))
    ax.set_xlabel("tuples")
    status = "pass" if report.passed else "fail"
    ax.set_title(f"{report.identity}: {status}")
    ax.legend(loc="center right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
