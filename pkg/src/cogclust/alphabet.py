"""The ASJP sound-class alphabet used for word transcriptions.

Every transcription handled by this package is a string of single-character
sound-class symbols from the 41-symbol ASJP code. Raw data files may decorate
transcriptions with modifier characters; the parser either strips or rejects
those (see ``wordlist.parse_wordlist``).
"""

# The 41 ASJP sound-class symbols.
ASJP_SOUNDS: tuple[str, ...] = tuple("pbfvmw8tdszcnrlSZCjT5ykgxNqXh7L4G!ieE3auo")

# Placeholder for an alignment gap. Never part of a transcription and never a
# row of a segment-score matrix; gaps are priced by the aligner's gap
# parameters instead.
GAP = "-"

# Modifier characters seen in raw ASJP transcriptions (juncture, ligature and
# nasalization marks). They carry no segment of their own.
MODIFIER_CHARS = frozenset('~$"*')
