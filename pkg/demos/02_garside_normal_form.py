"""
Garside normal form and full twists
====================================

Positive words are compared and factored through the left normal form.
The number of full twists a positive braid admits is half its infimum.
"""

from braidforge import BraidWord, full_twist, normal_form, extract_full_twists, positive_equal
from braidforge.garside import oracle_full_twists

nf = normal_form(full_twist(3))
print("Delta^2 on 3 strands:", nf)

# braid relation
print(positive_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2))))

# s1^2 times a full twist: exactly one twist comes out, s1^2 is left over
w = BraidWord(3, (1, 1) + full_twist(3).letters)
k, rest = extract_full_twists(w)
print("full twists", k, "remainder", rest.word())

# the exhaustive rewriting oracle agrees on short words
print("oracle says", oracle_full_twists(w))

# a length 8 word on 4 strands cannot contain the length 12 full twist
print(extract_full_twists(BraidWord(4, (1, 2, 3, 1, 2, 3, 1, 1)))[0])
