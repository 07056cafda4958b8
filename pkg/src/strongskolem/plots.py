"""Figures for the CLI report path. Rendered off-screen to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .starter import Starter  # noqa: E402

_STATUS_COLORS = {
    "ok": "tab:green",
    "no_lambda": "tab:orange",
    "fail": "tab:red",
    "zp": "tab:blue",
    "zpq": "tab:green",
    "none": "lightgray",
}


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_order_coverage(rows: list[dict], path):
    """Admissible n against the construction that reaches it."""
    fig, ax = plt.subplots(figsize=(8, 2.8))
    kinds = ["zp", "zpq", "none"]
    for level, kind in enumerate(kinds):
        xs = [r["n"] for r in rows if r["construction"] == kind]
        ax.scatter(xs, [level] * len(xs), s=14, color=_STATUS_COLORS[kind],
                   label=f"{kind} ({len(xs)})")
    fam = [r["n"] for r in rows if r.get("ord2_family") == "yes"]
    ax.scatter(fam, [len(kinds)] * len(fam), s=14, marker="s", color="tab:purple",
               label=f"ord(2) family ({len(fam)})")
    ax.set_yticks(range(len(kinds) + 1))
    ax.set_yticklabels(kinds + ["ord2"])
    ax.set_xlabel("n")
    ax.set_ylim(-0.6, len(kinds) + 0.6)
    ax.legend(loc="upper center", bbox_to_anchor=(0.5, -0.3), ncol=4, frameon=False,
              fontsize=8)
    return _finish(fig, path)


def plot_pair_outcomes(rows: list[dict], path):
    """Scatter of admissible (p, q), coloured by construction outcome."""
    fig, ax = plt.subplots(figsize=(6, 5))
    key = "x2" if rows and "x2" in rows[0] else None
    groups: dict[str, list[dict]] = {}
    for r in rows:
        status = r[key] if key else ("ok" if r["lambda"] != "" else "no_lambda")
        groups.setdefault(status, []).append(r)
    for status, rs in sorted(groups.items()):
        ax.scatter([r["p"] for r in rs], [r["q"] for r in rs], s=10,
                   color=_STATUS_COLORS.get(status, "black"), label=f"{status} ({len(rs)})")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("p")
    ax.set_ylabel("q")
    ax.legend(frameon=False, fontsize=8)
    return _finish(fig, path)


def plot_starter(s: Starter, path):
    """Each pair drawn as an arc from a to b over the residues 1..n-1;
    the lower panel shows the pair sums, which are distinct for a strong
    starter."""
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(8, 5), sharex=True,
                                      gridspec_kw={"height_ratios": [3, 1]})
    for a, b in s.pairs:
        mid, half = (a + b) / 2, (b - a) / 2
        xs = [mid + half * t / 20 for t in range(-20, 21)]
        ys = [half * (1 - (t / 20) ** 2) for t in range(-20, 21)]
        top.plot(xs, ys, lw=0.7, color="tab:blue")
    top.set_ylabel("half difference")
    top.set_title(f"pairs of a starter of Z_{s.n}")
    sums = sorted((a + b) % s.n for a, b in s.pairs)
    bottom.vlines(sums, 0, 1, lw=0.7, color="tab:green")
    bottom.set_yticks([])
    bottom.set_xlabel("residue (top: pair members, bottom: pair sums mod n)")
    bottom.set_xlim(0, s.n)
    return _finish(fig, path)
