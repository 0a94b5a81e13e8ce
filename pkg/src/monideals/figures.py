"""Figure rendering for report output.

Figures are written next to the delimited/JSON report when a command gets
``--figure``; they never feed back into any computation, so report
determinism is unaffected.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_power_profile(snapshots, path, title: str = "") -> None:
    """Associated-prime counts per power, split into minimal vs total.

    The gap between the two curves is exactly the embedded primes, so a
    normally torsion-free sweep renders as two coincident flat lines.
    """
    powers = [s.power for s in snapshots]
    totals = [len(s.primes) for s in snapshots]
    min_heights = [min((p.height for p in s.primes), default=0) for s in snapshots]
    minimal_counts = []
    for s in snapshots:
        primes = list(s.primes)
        minimal_counts.append(
            sum(1 for p in primes if not any(q.vars < p.vars for q in primes))
        )
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    ax.plot(powers, totals, marker="o", color="#30518f", label="associated primes")
    ax.plot(
        powers,
        minimal_counts,
        marker="s",
        linestyle="--",
        color="#7f7f7f",
        label="minimal primes",
    )
    ax.set_xlabel("power k")
    ax.set_ylabel("primes of $I^k$")
    ax.set_xticks(powers)
    ax.set_ylim(bottom=0)
    if title:
        ax.set_title(title, fontsize=10)
    ax.legend(frameon=False, fontsize=9)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_outcome_summary(outcomes, path, title: str = "") -> None:
    """Horizontal pass/fail bars for a list of (label, ok) pairs."""
    labels = [name for name, _ in outcomes]
    values = [1] * len(outcomes)
    colors = ["#2e7d32" if ok else "#c62828" for _, ok in outcomes]
    height = max(2.0, 0.32 * len(outcomes) + 1.0)
    fig, ax = plt.subplots(figsize=(6.4, height))
    ypos = range(len(outcomes))
    ax.barh(list(ypos), values, color=colors, height=0.6)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xticks([])
    for y, (_, ok) in zip(ypos, outcomes):
        ax.text(0.5, y, "pass" if ok else "FAIL", va="center", ha="center",
                color="white", fontsize=8, fontweight="bold")
    if title:
        ax.set_title(title, fontsize=10)
    for side in ("top", "right", "bottom", "left"):
        ax.spines[side].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
