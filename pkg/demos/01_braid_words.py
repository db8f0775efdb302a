"""
Braid words, permutations and strand traces
============================================

Parse a braid, look at where each strand ends up, and follow one strand
through the word.
"""

from braidforge import parse_braid, permutation_of, full_twist, format_braid
from braidforge.braid_core import trace_strand

# a full twist on three strands is a pure braid
w = parse_braid("3: 1 2 1 2 1 2")
print(format_braid(w), "->", permutation_of(w).images)
print(full_twist(3) == w)

# the permutation of s1 s2 s3 is a 4-cycle
p = permutation_of(parse_braid("4: 1 2 3"))
print("images", p.images, "cycles", p.cycles())

# follow strand 1 through a single crossing
tr = trace_strand(parse_braid("2: 1"), 1)
print("positions", tr.positions)
for ev in tr.crossing_events:
    print("  letter", ev.letter_index, "crosses strand", ev.partner, "sign", ev.sign)
