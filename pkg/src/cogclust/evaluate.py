"""B-cubed clustering scores against expert cognate classes.

Per item, precision is the fraction of its predicted cluster that shares its
gold class and recall the fraction of its gold class found in its predicted
cluster (the item counts itself in both). A meaning's precision and recall
are the means of the item values and its F-score their harmonic mean. The
dataset aggregate averages the per-meaning values arithmetically, so the
aggregate F is the mean of per-meaning Fs rather than a harmonic mean of the
aggregate precision and recall. Cluster-count agreement across meanings is
summarized by the Pearson correlation of predicted vs true cluster counts.

Undefined statistics (correlation over fewer than two meanings, or with a
constant count vector) are reported as ``nan``.
"""

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .crp import Partition
from .errors import ValidationError

NAN = float("nan")


@dataclass(frozen=True)
class BcubedScore:
    precision: float
    recall: float
    f_score: float


def _harmonic_mean(p: float, r: float) -> float:
    if p + r == 0:
        return 0.0
    return 2.0 * p * r / (p + r)


def bcubed(predicted: Partition, gold: Partition) -> BcubedScore:
    """B-cubed precision, recall and F of a predicted partition against gold.

    Both partitions must cover the same items (same length; index i refers to
    the same item in both). Identical partitions score exactly (1, 1, 1).
    """
    if predicted.n != gold.n:
        raise ValidationError(
            f"partitions cover different item sets: {predicted.n} vs {gold.n} items"
        )
    n = predicted.n
    pred_size = [0] * predicted.k
    gold_size = [0] * gold.k
    overlap: dict[tuple[int, int], int] = {}
    for c, l in zip(predicted.labels, gold.labels):
        pred_size[c] += 1
        gold_size[l] += 1
        overlap[c, l] = overlap.get((c, l), 0) + 1
    precision_total = 0.0
    recall_total = 0.0
    for c, l in zip(predicted.labels, gold.labels):
        shared = overlap[c, l]
        precision_total += shared / pred_size[c]
        recall_total += shared / gold_size[l]
    precision = precision_total / n
    recall = recall_total / n
    return BcubedScore(precision, recall, _harmonic_mean(precision, recall))


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation; ``nan`` when undefined."""
    xs = [float(v) for v in x]
    ys = [float(v) for v in y]
    if len(xs) != len(ys) or len(xs) < 2:
        return NAN
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((v - mean_x) ** 2 for v in xs)
    syy = sum((v - mean_y) ** 2 for v in ys)
    if sxx == 0 or syy == 0:
        return NAN
    sxy = sum((a - mean_x) * (b - mean_y) for a, b in zip(xs, ys))
    return sxy / math.sqrt(sxx * syy)


@dataclass(frozen=True)
class MeaningEval:
    score: BcubedScore
    predicted_k: int
    true_k: int


@dataclass(frozen=True)
class EvalReport:
    """Per-meaning scores plus dataset aggregates.

    ``metadata`` records evaluation context such as the number of meanings
    without gold labels and the synonym policy.
    """

    per_meaning: dict[str, MeaningEval]
    aggregate: BcubedScore
    cluster_count_correlation: float
    metadata: dict = field(default_factory=dict)


def evaluate_dataset(
    predictions: Mapping[str, Partition],
    gold: Mapping[str, Partition],
    metadata: Mapping | None = None,
) -> EvalReport:
    """Score predicted partitions against gold partitions, meaning by meaning."""
    if set(predictions) != set(gold):
        only_pred = sorted(set(predictions) - set(gold))
        only_gold = sorted(set(gold) - set(predictions))
        raise ValidationError(
            f"meaning keys differ (only predicted: {only_pred}, only gold: {only_gold})"
        )
    if not predictions:
        raise ValidationError("no meanings to evaluate")
    per_meaning: dict[str, MeaningEval] = {}
    for meaning in predictions:
        pred = predictions[meaning]
        true = gold[meaning]
        if pred.n != true.n:
            raise ValidationError(
                f"meaning {meaning!r}: predicted partition covers {pred.n} items "
                f"but gold covers {true.n}"
            )
        per_meaning[meaning] = MeaningEval(bcubed(pred, true), pred.k, true.k)
    count = len(per_meaning)
    aggregate = BcubedScore(
        sum(e.score.precision for e in per_meaning.values()) / count,
        sum(e.score.recall for e in per_meaning.values()) / count,
        sum(e.score.f_score for e in per_meaning.values()) / count,
    )
    correlation = pearson(
        [e.predicted_k for e in per_meaning.values()],
        [e.true_k for e in per_meaning.values()],
    )
    return EvalReport(per_meaning, aggregate, correlation, dict(metadata or {}))


def _fmt(value: float, percent: bool) -> str:
    if math.isnan(value):
        return "nan"
    return f"{100.0 * value:.2f}" if percent else f"{value:.4f}"


def render_report(report: EvalReport, percent: bool = False) -> str:
    """Human-readable table; ``percent`` switches to 100-scale, 2 decimals."""
    header = ("meaning", "precision", "recall", "f_score", "pred_K", "true_K")
    rows = [
        (
            meaning,
            _fmt(e.score.precision, percent),
            _fmt(e.score.recall, percent),
            _fmt(e.score.f_score, percent),
            str(e.predicted_k),
            str(e.true_k),
        )
        for meaning, e in report.per_meaning.items()
    ]
    agg = report.aggregate
    rows.append(
        ("aggregate", _fmt(agg.precision, percent), _fmt(agg.recall, percent),
         _fmt(agg.f_score, percent), "", "")
    )
    widths = [max(len(header[c]), *(len(r[c]) for r in rows)) for c in range(6)]
    lines = ["  ".join(h.ljust(widths[c]) for c, h in enumerate(header)).rstrip()]
    for r in rows:
        lines.append(
            r[0].ljust(widths[0])
            + "  "
            + "  ".join(r[c].rjust(widths[c]) for c in range(1, 6)).rstrip()
        )
    lines.append("")
    lines.append(
        f"cluster_count_correlation  {_fmt(report.cluster_count_correlation, percent)}"
    )
    lines.append(f"meanings_evaluated  {len(report.per_meaning)}")
    for key in sorted(report.metadata):
        lines.append(f"{key}  {report.metadata[key]}")
    return "\n".join(lines) + "\n"


def render_report_kv(report: EvalReport, percent: bool = False) -> str:
    """Machine-readable tab-separated key/value lines."""
    lines = []
    for meaning, e in report.per_meaning.items():
        lines.append(f"meaning\t{meaning}\tprecision\t{_fmt(e.score.precision, percent)}")
        lines.append(f"meaning\t{meaning}\trecall\t{_fmt(e.score.recall, percent)}")
        lines.append(f"meaning\t{meaning}\tf_score\t{_fmt(e.score.f_score, percent)}")
        lines.append(f"meaning\t{meaning}\tpredicted_k\t{e.predicted_k}")
        lines.append(f"meaning\t{meaning}\ttrue_k\t{e.true_k}")
    agg = report.aggregate
    lines.append(f"aggregate\tprecision\t{_fmt(agg.precision, percent)}")
    lines.append(f"aggregate\trecall\t{_fmt(agg.recall, percent)}")
    lines.append(f"aggregate\tf_score\t{_fmt(agg.f_score, percent)}")
    lines.append(
        f"cluster_count_correlation\t{_fmt(report.cluster_count_correlation, percent)}"
    )
    lines.append(f"meanings_evaluated\t{len(report.per_meaning)}")
    for key in sorted(report.metadata):
        lines.append(f"metadata\t{key}\t{report.metadata[key]}")
    return "\n".join(lines) + "\n"
