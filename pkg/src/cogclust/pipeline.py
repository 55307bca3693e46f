"""End-to-end orchestration: word list in, per-meaning partitions out.

Meanings are independent, so clustering fans out over a process pool when
``jobs`` exceeds one; results are merged in meaning order, making output
independent of worker scheduling.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from typing import IO, Iterator, Sequence

from .align import Scorer, SimilarityMatrix, similarity_matrix
from .crp import CrpConfig, Partition, crp_cluster, flat_cluster_threshold
from .wordlist import WordForm, WordList

SYNONYM_POLICY = "all transcriptions of a (language, meaning) kept as separate items"


def cluster_meaning(
    forms: Sequence[WordForm],
    scorer: Scorer,
    config: CrpConfig | None = None,
    *,
    threshold: float | None = None,
    normalize: bool = False,
) -> Partition:
    """Cluster one meaning's forms; a non-None ``threshold`` selects the flat
    agglomerative baseline instead of the scan-based algorithm."""
    sims = similarity_matrix(forms, scorer, normalize=normalize)
    if threshold is not None:
        return flat_cluster_threshold(sims, threshold)
    return crp_cluster(sims, config or CrpConfig())


_WORK: tuple | None = None


def _worker_init(wordlist, scorer, config, threshold, normalize):
    global _WORK
    _WORK = (wordlist, scorer, config, threshold, normalize)


def _worker_run(meaning: str) -> tuple[str, tuple[int, ...]]:
    wordlist, scorer, config, threshold, normalize = _WORK
    partition = cluster_meaning(
        wordlist.forms_for_meaning(meaning),
        scorer,
        config,
        threshold=threshold,
        normalize=normalize,
    )
    return meaning, partition.labels


def cluster_wordlist(
    wordlist: WordList,
    scorer: Scorer,
    config: CrpConfig | None = None,
    *,
    threshold: float | None = None,
    normalize: bool = False,
    jobs: int | None = 1,
) -> dict[str, Partition]:
    """Cluster every meaning; returns partitions keyed in meaning order."""
    config = config or CrpConfig()
    if jobs is None:
        jobs = os.cpu_count() or 1
    meanings = wordlist.meanings
    if jobs <= 1 or len(meanings) < 2:
        return {
            m: cluster_meaning(
                wordlist.forms_for_meaning(m),
                scorer,
                config,
                threshold=threshold,
                normalize=normalize,
            )
            for m in meanings
        }
    chunk = max(1, len(meanings) // (jobs * 4))
    out: dict[str, Partition] = {}
    with ProcessPoolExecutor(
        max_workers=jobs,
        initializer=_worker_init,
        initargs=(wordlist, scorer, config, threshold, normalize),
    ) as pool:
        for meaning, labels in pool.map(_worker_run, meanings, chunksize=chunk):
            out[meaning] = Partition(labels)
    return out


def similarity_tables(
    wordlist: WordList, scorer: Scorer, *, normalize: bool = False
) -> Iterator[tuple[str, SimilarityMatrix]]:
    """Yield (meaning, similarity matrix) pairs in meaning order."""
    for meaning in wordlist.meanings:
        yield meaning, similarity_matrix(
            wordlist.forms_for_meaning(meaning), scorer, normalize=normalize
        )


def gold_partitions(wordlist: WordList) -> dict[str, Partition]:
    """Gold partitions from the word list's own cognate-class column.

    Meanings without gold labels are simply absent from the result.
    """
    out = {}
    for meaning in wordlist.meanings:
        if wordlist.has_gold(meaning):
            out[meaning] = Partition.from_labels(
                [f.gold_class for f in wordlist.forms_for_meaning(meaning)]
            )
    return out


def gold_partitions_from(wordlist: WordList, gold_wordlist: WordList) -> dict[str, Partition]:
    """Gold partitions looked up in a separate word list.

    Forms are joined on (language, meaning, transcription); a meaning is
    evaluable only when every one of its forms finds a labelled match.
    """
    table = {
        (f.language, f.meaning, f.segments): f.gold_class
        for f in gold_wordlist.forms
        if f.gold_class is not None
    }
    out = {}
    for meaning in wordlist.meanings:
        labels = [
            table.get((f.language, meaning, f.segments))
            for f in wordlist.forms_for_meaning(meaning)
        ]
        if all(lab is not None for lab in labels):
            out[meaning] = Partition.from_labels(labels)
    return out


def write_partitions(
    wordlist: WordList, partitions: dict[str, Partition], sink: IO
) -> None:
    """Write partitions as TSV: meaning, language, transcription, cluster_id."""
    sink.write("meaning\tlanguage\ttranscription\tcluster_id\n")
    for meaning in wordlist.meanings:
        if meaning not in partitions:
            continue
        labels = partitions[meaning].labels
        for form, label in zip(wordlist.forms_for_meaning(meaning), labels):
            sink.write(f"{meaning}\t{form.language}\t{form.segments}\t{label}\n")
