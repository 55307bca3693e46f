"""Command-line interface for clustering word lists into cognate sets.

Subcommands::

    cogclust cluster       word list TSV -> partition TSV
    cogclust evaluate      cluster, then score against gold cognate classes
    cogclust align         word list TSV -> per-meaning similarity matrix TSVs
    cogclust pmi-estimate  aligned segment pairs -> PMI matrix file

Exit codes: 0 success, 2 parse/usage errors, 3 validation errors, 4 I/O
errors. Diagnostics go to stderr; data goes to files or stdout.
"""

import argparse
import os
import sys
import urllib.parse
from dataclasses import dataclass

from . import __version__
from .align import GapParams, Scorer
from .crp import CrpConfig
from .errors import (
    DegenerateInputError,
    MeaningNotFoundError,
    ParseError,
    ValidationError,
)
from .evaluate import evaluate_dataset, render_report, render_report_kv
from .pipeline import (
    SYNONYM_POLICY,
    cluster_wordlist,
    gold_partitions,
    gold_partitions_from,
    similarity_tables,
    write_partitions,
)
from .pmi import estimate_pmi, load_pmi, save_pmi
from .wordlist import parse_wordlist


@dataclass
class RunConfig:
    subcommand: str
    input: str
    out: str | None = None
    scorer: str = "vanilla"
    pmi_matrix: str | None = None
    gap_open: float = -1.0
    gap_extend: float = -0.5
    alpha: float = 0.01
    max_scans: int = 3
    linkage: str = "average"
    normalize: bool = False
    shuffle_seed: int | None = None
    threshold: float | None = None
    gold: str | None = None
    jobs: int | None = None
    percent: bool = False
    smoothing: float = 0.1


def _add_scorer_args(sub):
    sub.add_argument("--scorer", choices=("vanilla", "pmi"), default="vanilla",
                     help="substitution scoring: segment identity or a PMI matrix")
    sub.add_argument("--pmi-matrix", metavar="PATH",
                     help="PMI matrix file (required with --scorer pmi)")
    sub.add_argument("--gap-open", type=float, default=-1.0, metavar="F",
                     help="gap opening penalty (default -1)")
    sub.add_argument("--gap-extend", type=float, default=-0.5, metavar="F",
                     help="gap extension penalty (default -0.5)")
    sub.add_argument("--normalize", action="store_true",
                     help="divide raw scores by mean self-similarity before clamping")


def _add_cluster_args(sub):
    sub.add_argument("--alpha", type=float, default=0.01, metavar="F",
                     help="new-cluster threshold (default 0.01)")
    sub.add_argument("--max-scans", type=int, default=3, metavar="N",
                     help="maximum full scans (default 3)")
    sub.add_argument("--linkage", choices=("average", "single"), default="average")
    sub.add_argument("--shuffle-seed", type=int, default=None, metavar="N",
                     help="seeded random scan order instead of file order")
    sub.add_argument("--threshold", type=float, default=None, metavar="F",
                     help="use the flat agglomerative baseline at this threshold")
    sub.add_argument("--jobs", type=int, default=None, metavar="N",
                     help="worker processes over meanings (default: all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cogclust",
        description="Cluster multilingual word lists into cognate sets.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    cluster = commands.add_parser("cluster", help="cluster a word list")
    cluster.add_argument("--input", required=True, metavar="PATH")
    cluster.add_argument("--out", metavar="PATH", help="partition TSV (default: stdout)")
    _add_scorer_args(cluster)
    _add_cluster_args(cluster)

    evaluate = commands.add_parser(
        "evaluate", help="cluster and score against gold cognate classes"
    )
    evaluate.add_argument("--input", required=True, metavar="PATH")
    evaluate.add_argument("--gold", metavar="PATH",
                          help="separate word list supplying gold classes "
                               "(default: cognate_class column of --input)")
    evaluate.add_argument("--out", metavar="PATH",
                          help="partition TSV; the report goes to PATH.report.txt "
                               "and PATH.report.tsv (default: report to stdout)")
    evaluate.add_argument("--percent", action="store_true",
                          help="report scores on the 100 scale with 2 decimals")
    _add_scorer_args(evaluate)
    _add_cluster_args(evaluate)

    align = commands.add_parser(
        "align", help="write per-meaning similarity matrices"
    )
    align.add_argument("--input", required=True, metavar="PATH")
    align.add_argument("--out", required=True, metavar="DIR",
                       help="output directory, one TSV per meaning")
    _add_scorer_args(align)

    pmi_est = commands.add_parser(
        "pmi-estimate", help="estimate a PMI matrix from aligned segment pairs"
    )
    pmi_est.add_argument("--input", required=True, metavar="PATH",
                         help="TSV of aligned pairs: two equal-length columns "
                              "of segments with '-' for gaps")
    pmi_est.add_argument("--smoothing", type=float, default=0.1, metavar="F")
    pmi_est.add_argument("--out", metavar="PATH", help="matrix file (default: stdout)")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {f for f in RunConfig.__dataclass_fields__}
    values = {k: v for k, v in vars(args).items() if k in fields and v is not None}
    return RunConfig(**values)


def _build_scorer(config: RunConfig, parser: argparse.ArgumentParser) -> Scorer:
    gaps = GapParams(config.gap_open, config.gap_extend)
    if config.scorer == "pmi":
        if not config.pmi_matrix:
            parser.error("--scorer pmi requires --pmi-matrix")
        return Scorer.from_pmi(load_pmi(config.pmi_matrix), gaps)
    if config.pmi_matrix:
        parser.error("--pmi-matrix is only valid with --scorer pmi")
    return Scorer.vanilla(gaps=gaps)


def _open_out(path: str):
    return open(path, "w", encoding="utf-8", newline="\n")


def _meaning_filename(meaning: str) -> str:
    return urllib.parse.quote(meaning, safe="") + ".tsv"


def run(config: RunConfig, parser: argparse.ArgumentParser | None = None) -> int:
    """Execute one subcommand; raises package errors for ``main`` to map."""
    parser = parser or build_parser()

    if config.subcommand == "pmi-estimate":
        pairs = []
        with open(config.input, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.rstrip("\n").rstrip("\r")
                if not line:
                    continue
                cols = line.split("\t")
                if len(cols) != 2:
                    raise ParseError(f"expected 2 columns, got {len(cols)}", line=lineno)
                pairs.append((cols[0], cols[1]))
        matrix = estimate_pmi(pairs, config.smoothing)
        if config.out:
            save_pmi(matrix, config.out)
        else:
            save_pmi(matrix, sys.stdout)
        return 0

    wordlist = parse_wordlist(config.input)

    if config.subcommand == "align":
        scorer = _build_scorer(config, parser)
        os.makedirs(config.out, exist_ok=True)
        for meaning, table in similarity_tables(
            wordlist, scorer, normalize=config.normalize
        ):
            with _open_out(os.path.join(config.out, _meaning_filename(meaning))) as fh:
                table.to_tsv(fh)
        return 0

    scorer = _build_scorer(config, parser)
    crp_config = CrpConfig(
        alpha=config.alpha,
        max_scans=config.max_scans,
        linkage=config.linkage,
        shuffle_seed=config.shuffle_seed,
    )
    partitions = cluster_wordlist(
        wordlist,
        scorer,
        crp_config,
        threshold=config.threshold,
        normalize=config.normalize,
        jobs=config.jobs,
    )

    if config.subcommand == "cluster":
        if config.out:
            with _open_out(config.out) as fh:
                write_partitions(wordlist, partitions, fh)
        else:
            write_partitions(wordlist, partitions, sys.stdout)
        return 0

    # evaluate
    if config.gold:
        gold = gold_partitions_from(wordlist, parse_wordlist(config.gold))
    else:
        gold = gold_partitions(wordlist)
    if config.out:
        with _open_out(config.out) as fh:
            write_partitions(wordlist, partitions, fh)
    if not gold:
        print("cogclust: no gold cognate classes found; nothing to evaluate",
              file=sys.stderr)
        return 0
    report = evaluate_dataset(
        {m: partitions[m] for m in wordlist.meanings if m in gold},
        gold,
        metadata={
            "meanings_without_gold": len(wordlist.meanings) - len(gold),
            "synonym_policy": SYNONYM_POLICY,
        },
    )
    if config.out:
        with _open_out(config.out + ".report.txt") as fh:
            fh.write(render_report(report, percent=config.percent))
        with _open_out(config.out + ".report.tsv") as fh:
            fh.write(render_report_kv(report, percent=config.percent))
    else:
        sys.stdout.write(render_report(report, percent=config.percent))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    try:
        return run(config, parser)
    except ParseError as exc:
        print(f"cogclust: parse error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, DegenerateInputError, MeaningNotFoundError) as exc:
        print(f"cogclust: validation error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"cogclust: i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
