"""Suite reports on disk: one CSV of per-check rows and one PNG summary
figure per suite, plus reproducer files for failing checks.

The figure renders with the Agg backend so report generation works on
headless machines.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .suites import SuiteResult


def write_suite_csv(result: SuiteResult, report_dir: str | Path) -> Path:
    out = Path(report_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{result.suite}.csv"
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "label", "ok", "detail"])
        for rec in result.records:
            writer.writerow([rec.index, rec.label, int(rec.ok), rec.detail])
    return path


def write_suite_figure(result: SuiteResult, report_dir: str | Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(report_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{result.suite}.png"
    labels = sorted({rec.label for rec in result.records})
    passed = [sum(1 for r in result.records if r.label == lb and r.ok) for lb in labels]
    failed = [sum(1 for r in result.records if r.label == lb and not r.ok) for lb in labels]
    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * len(labels) + 2.0), 3.4))
    xs = range(len(labels))
    ax.bar(xs, passed, color="#2a7f4f", label="pass")
    ax.bar(xs, failed, bottom=passed, color="#b3362b", label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=20, ha="right")
    ax.set_ylabel("checks")
    ax.set_title(
        f"{result.suite} (seed {result.seed}): "
        f"{result.passed} pass / {result.failed} fail"
    )
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_reproducers(result: SuiteResult, report_dir: str | Path) -> list[Path]:
    out = Path(report_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for rec in result.failures():
        if rec.reproducer is None:
            continue
        path = out / f"{result.suite}-repro-{rec.index}.txt"
        path.write_text(rec.reproducer)
        paths.append(path)
    return paths


def write_suite_report(result: SuiteResult, report_dir: str | Path) -> tuple[Path, Path]:
    """CSV plus figure; reproducers are written only for failures."""
    csv_path = write_suite_csv(result, report_dir)
    png_path = write_suite_figure(result, report_dir)
    write_reproducers(result, report_dir)
    return csv_path, png_path
