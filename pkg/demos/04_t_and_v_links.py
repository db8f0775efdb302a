"""
T-links and V-links
===================

Build braids from T- and V-link specs and compare the two
representatives of the satellite family through their invariants.
"""

from braidforge.families import (
    FamilyParams,
    parse_tlink,
    parse_vlink,
    satellite_family_t,
    satellite_family_v,
    t_link_braid,
    v_link_braid,
)
from braidforge.garside import extract_full_twists
from braidforge.invariants import bundles_match, invariant_bundle

print(t_link_braid(parse_tlink("T((3,1),(4,3))")))
print(v_link_braid(parse_vlink("V((2,~2),(3,3))")))

for k in range(4):
    p = FamilyParams(1, 1, 2, k)
    t, v = satellite_family_t(p), satellite_family_v(p)
    tb, vb = t_link_braid(t), v_link_braid(v)
    print(f"{t}  {len(tb)} letters   {v}  {len(vb)} letters,",
          "twists", extract_full_twists(vb)[0],
          "bundles match", bundles_match(invariant_bundle(tb), invariant_bundle(vb)))
