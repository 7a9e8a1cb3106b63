"""Delimited tables and matplotlib figures for search hits and bound sweeps."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bound import BoundReport  # noqa: E402
from .search import SearchHit  # noqa: E402

VERDICT_COLORS = {"improves": "tab:green", "ties": "tab:blue", "below": "tab:gray", "unknown": "tab:orange"}

HIT_COLUMNS = ("kind", "cosets", "k", "n", "dim", "d_lb", "best_known", "verdict", "bound", "chain")
SWEEP_COLUMNS = ("k", "deg_bound", "n", "naive", "bound", "exact_dim", "kernel_dim", "strict")


def _cell(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return "" if v is None else str(v)


def hits_tsv(hits: Sequence[SearchHit]) -> str:
    lines = ["\t".join(HIT_COLUMNS)]
    for h in hits:
        lines.append("\t".join([
            h.kind,
            ",".join(map(str, h.cosets)),
            str(h.k), str(h.n), str(h.dim), str(h.d_lb),
            _cell(h.best_known), h.verdict,
            _cell(h.bound["bound"] if h.bound else None),
            " ".join(s.label() for s in h.chain),
        ]))
    return "\n".join(lines) + "\n"


def sweep_tsv(reports: Sequence[BoundReport]) -> str:
    lines = ["\t".join(SWEEP_COLUMNS)]
    for r in reports:
        lines.append("\t".join(_cell(getattr(r, c)) for c in SWEEP_COLUMNS))
    return "\n".join(lines) + "\n"


def _save(fig, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)


def plot_hits(hits: Sequence[SearchHit], path: str | Path, title: str = "") -> Path:
    """Design distance of each hit against the best-known distance at the same (n, k)."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for v, color in VERDICT_COLORS.items():
        sel = [h for h in hits if h.verdict == v]
        if sel:
            ax.scatter([h.dim for h in sel], [h.d_lb for h in sel], c=color, label=f"new ({v})", zorder=3)
    known = [h for h in hits if h.best_known is not None]
    if known:
        ax.scatter([h.dim for h in known], [h.best_known for h in known], marker="_", s=200,
                   c="k", label="best known", zorder=2)
    for h in hits:
        ax.annotate(f"n={h.n}", (h.dim, h.d_lb), textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_xlabel("dimension")
    ax.set_ylabel("minimum distance (lower bound)")
    ax.set_title(title or f"{len(hits)} hits")
    ax.grid(alpha=0.3)
    if hits:
        ax.legend(fontsize=8)
    _save(fig, path)
    return path


def plot_bound_sweep(reports: Sequence[BoundReport], path: str | Path, title: str = "") -> Path:
    """Lower bound, naive bound and exact dimension as functions of k."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ks = [r.k for r in reports]
    ax.plot(ks, [r.naive for r in reports], ls=":", c="tab:gray", label="n - m|A|")
    ax.plot(ks, [r.bound for r in reports], c="tab:blue", label="coset bound")
    if any(r.exact_dim is not None for r in reports):
        ax.plot(ks, [r.exact_dim for r in reports], c="tab:green", ls="--", label="exact dimension")
        strict = [r for r in reports if r.strict]
        if strict:
            ax.scatter([r.k for r in strict], [r.exact_dim for r in strict], c="tab:red",
                       s=14, zorder=3, label="strict")
    ax.set_ylim(bottom=0)
    ax.set_xlabel("k")
    ax.set_ylabel("dimension over F_p")
    ax.set_title(title)
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8)
    _save(fig, path)
    return path
