"""Scoring word pairs with affine-gap alignment.

Two words are aligned globally; matching segments raise the score, mismatches
lower it, and gaps are priced with an opening penalty plus a cheaper
extension penalty, so deletions prefer to come in chunks.
"""

import io
import sys

from cogclust import GapParams, Scorer, WordForm, nw_score, similarity_matrix

# The vanilla scorer: +1 for a segment match, -1 for a mismatch, and the
# default gap penalties (open -1, extend -0.5).
scorer = Scorer.vanilla()

pairs = [
    ("ol", "ol"),      # identical: 2 matches
    ("ol", "al3"),     # one mismatch, one match, one trailing gap
    ("ol", "ala"),     # gaps compete with mismatches
    ("tu", "to8o"),
    ("Enim3l", "animal"),
]
print("pairwise alignment scores (vanilla):")
for a, b in pairs:
    print(f"  {a:>7} ~ {b:<7} {nw_score(a, b, scorer):6.2f}")

# Stricter gaps push scores down; extension may never cost more than opening.
strict = Scorer.vanilla(gaps=GapParams(gap_open=-2.5, gap_extend=-0.5))
print("\nwith gap_open=-2.5:")
for a, b in pairs:
    print(f"  {a:>7} ~ {b:<7} {nw_score(a, b, strict):6.2f}")

# A meaning's words become a symmetric similarity matrix; negative raw scores
# are clamped to zero, which is what the clustering stage consumes.
forms = [
    WordForm("English", "ALL", "ol"),
    WordForm("German", "ALL", "al3"),
    WordForm("French", "ALL", "tu"),
    WordForm("Spanish", "ALL", "to8o"),
    WordForm("Swedish", "ALL", "ala"),
]
table = similarity_matrix(forms, scorer)
print("\nsimilarity matrix for meaning ALL:")
buffer = io.StringIO()
table.to_tsv(buffer)
sys.stdout.write(buffer.getvalue())
