"""
Deleting components, adding the axis, reading off the Case-2 shape
===================================================================
"""

from braidforge import BraidWord, full_twist, format_braid, positive_equal
from braidforge.families import FamilyParams, companion_v, v_link_braid
from braidforge.report import deletion_chain
from braidforge.satellite_ops import adjoin_axis, delete_components, match_case2_form

# dropping one component of the 3-strand full twist leaves a Hopf link
res = delete_components(full_twist(3), {3})
print(format_braid(res.braid), "removed", res.removed_letters)

# thinning the satellite braid down to the companion
b2, b3 = deletion_chain(FamilyParams(1, 1, 2, 1))
print(b2.strands, "strands after the first deletion,", b3.strands, "after the second")

# the axis of s1^(2k+2) turns it into s1^(2k) times a full twist
k = 2
w = v_link_braid(companion_v(k))
print(positive_equal(adjoin_axis(BraidWord(2, (1,) * (2 * k + 2))), w))

m = match_case2_form(w, wheel_cap=2 * (k - 1))
print("a", m.a, "b0", format_braid(m.b0), "wheel power", m.wheel_power)
print("maximal wheel power", match_case2_form(w).wheel_power)
