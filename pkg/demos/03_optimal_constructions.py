"""Closed-form builders that land exactly on the lower bound.

Nothing here certifies itself: each construction's output goes back through
the brute-force verifier, and its size is compared against the proven bound.
"""

from mixla import LevelProfile, lower_bound
from mixla.direct import (
    build_la_1_w,
    build_la_2_3,
    build_oa_sum,
    build_pdimoa_star_general,
    build_pdimoa_star_t_plus_1,
)
from mixla.verifier import is_locating, is_pdimoa_star, moa_indices

# An index-1 orthogonal array on t+1 columns: all t-tuples plus their sum.
oa = build_oa_sum(3, 2)
print(oa, "indices:", dict(moa_indices(oa, 2).entries))

# Distinct-index orthogonal arrays decode like locating arrays: row-set
# sizes differ across column pairs, and tuples on one pair never collide.
star = build_pdimoa_star_t_plus_1((2, 4, 6))
print(star, "->", is_pdimoa_star(star, 2).render())
print("  locating:", is_locating(star, 2).verdict,
      "| bound:", lower_bound(LevelProfile((2, 4, 6), 2)).value)

# The same idea on more columns, splitting the first alphabet mixed-radix.
wide = build_pdimoa_star_general((2, 3, 12, 30), 2)
print(wide, "->", is_pdimoa_star(wide, 2).render())
print("  locating:", is_locating(wide, 2).verdict,
      "| bound:", lower_bound(LevelProfile((2, 3, 12, 30), 2)).value)

# Careful: some profiles can never have pairwise-distinct indices. On
# (2,3,12,18) the column pairs {1,4} and {2,3} share the level product 36,
# so their indices in any orthogonal array coincide. The construction still
# returns an optimal locating array; only the distinct-index label fails.
clash = build_pdimoa_star_general((2, 3, 12, 18), 2)
print(clash, "->", is_pdimoa_star(clash, 2).render().splitlines()[0])
print("  locating anyway:", is_locating(clash, 2).verdict,
      "| size:", clash.n_rows,
      "| bound:", lower_bound(LevelProfile((2, 3, 12, 18), 2)).value)

# A direct template: optimal pairwise locating arrays on three columns
# whenever the middle level is at least twice the smallest.
for v1, v2, v3 in [(2, 4, 4), (3, 6, 7), (2, 5, 8)]:
    a = build_la_2_3(v1, v2, v3)
    print(a, "locating:", is_locating(a, 2).verdict,
          "| optimal:", a.n_rows == lower_bound(a.profile).value)

# And the strength-1 series: w constant rows, a cyclic block, spare symbols.
for w, v in [(2, 4), (3, 6), (3, 8)]:
    a = build_la_1_w(w, v)
    print(a, "locating:", is_locating(a, 1).verdict,
          "| optimal:", a.n_rows == lower_bound(a.profile).value)
