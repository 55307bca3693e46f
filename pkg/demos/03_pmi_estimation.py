"""Estimating segment-pair PMI scores from aligned word pairs.

Sound correspondences (like p ~ b between related languages) show up as
segment pairs that sit in the same alignment column more often than chance.
PMI turns that into a log-ratio score: positive above chance, negative below.
The estimator consumes pre-aligned pairs; '-' marks a gap, and gap columns
count toward neither the joint nor the marginal frequencies.
"""

import io

from cogclust import Scorer, estimate_pmi, load_pmi, nw_score, save_pmi

# A toy corpus of aligned cognate pairs with a planted p ~ b correspondence.
aligned = [
    ("pat", "bat"),
    ("pot-", "bot3"),
    ("lip", "lib"),
    ("pal", "bal"),
    ("tok", "tok"),
    ("mus-", "musi"),
]

matrix = estimate_pmi(aligned, smoothing=0.1, alphabet=tuple("pbatoliksmu3"))

print("selected segment-pair scores:")
for pair in [("p", "b"), ("p", "p"), ("a", "a"), ("p", "k"), ("a", "u")]:
    print(f"  {pair[0]} ~ {pair[1]}: {matrix.score(*pair):+.3f}")

# The matrix round-trips through its file format at full precision.
buffer = io.StringIO()
save_pmi(matrix, buffer)
again = load_pmi(io.StringIO(buffer.getvalue()))
print("\nround-trip equal:", again == matrix)
print("file starts with:", buffer.getvalue().splitlines()[0])

# Estimated scores drive the aligner directly: p~b now outscores p~k.
scorer = Scorer.from_pmi(matrix)
print("\nalignment under the estimated matrix:")
print("  pat ~ bat:", round(nw_score("pat", "bat", scorer), 3))
print("  pat ~ kat:", round(nw_score("pat", "kat", scorer), 3))
