"""Recursive constructions: grow, shrink, and combine locating arrays.

Each operation checks its own preconditions with the verifier before doing
anything, because every guarantee below is conditional on them.
"""

from pathlib import Path

from mixla import Array, parse_array
from mixla.direct import full_factorial
from mixla.recursive import (
    derive,
    expand_level,
    fuse,
    product,
    roux_one,
    roux_two,
    truncate,
)
from mixla.verifier import is_locating

plan = parse_array((Path(__file__).parent / "data_12run.la").read_text())
print("start:", plan)

# Dropping a factor keeps the property.
print("truncate col 4:", truncate(plan, 4))

# Fixing a symbol and dropping its column trades a strength for a factor.
sub = derive(plan, 5, 2)
print("derive col 5 = 2:", sub, "locating at t=1:", is_locating(sub, 1).verdict)

# Doubling the rows lets one alphabet grow up to twice its size.
grown = expand_level(plan, 3, 4)
print("expand col 3 to 4 levels:", grown,
      "locating:", is_locating(grown, 2).verdict)

# Pairing with a covering array multiplies alphabets columnwise.
left = full_factorial((2, 2, 2), 2)
paired = product(left, left)
print("product:", paired, "locating:", is_locating(paired, 2).verdict)

# Stacking constant-extended copies of a lower-strength array grows one
# alphabet without doubling.
side = derive(plan, 4, 0)
stacked = roux_one(plan, side, 4, 1)
print("roux_one:", stacked, "locating:", is_locating(stacked, 2).verdict)

# The two-column variant needs strength 3 so the innermost block exists.
a = full_factorial((2, 2, 2, 2), 3)
b = full_factorial((2, 2, 2), 2)
d = full_factorial((2, 2), 1)
both = roux_two(a, b, b, d, 1, 2, 1, 1)
print("roux_two:", both, "locating:", is_locating(both, 3).verdict)

# Fusion merges symbols within one column. It needs more than coverage:
# the input must detect single faults and locate fault sets up to
# ceil(v / target), which this double-index orthogonal array does.
rows = [(x, y, (x + y + c) % 4) for x in range(4) for y in range(4) for c in (0, 1)]
uniform = Array.build((4, 4, 4), 2, rows)
fused = fuse(uniform, 1, 2)
print("fuse col 1 down to 2:", fused, "locating:", is_locating(fused, 2).verdict)
