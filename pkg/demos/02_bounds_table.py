"""How small can a pairwise locating array be?

Exact lower bounds for a handful of mixed profiles, with the case of the
bound formula that bites. Every value is provable, so a construction or a
search hitting the bound is known to be optimal.
"""

from mixla import LevelProfile, lower_bound

PROFILES = [
    (2, 3, 4),
    (3, 3, 4),
    (2, 4, 4),
    (2, 2, 3, 4),
    (2, 2, 5, 5),
    (2, 3, 3, 4),
]

print(f"{'levels':>14} {'bound':>6}  case")
for levels in PROFILES:
    result = lower_bound(LevelProfile(levels, 2))
    tag = result.case + (f" (i={result.witness_i})" if result.witness_i else "")
    print(f"{str(levels):>14} {result.value:>6}  {tag}")

# The covering floor (product of the top t levels) rules once the second
# pivot level is at least twice the first; tighter counting arguments take
# over below that threshold.
print()
for levels in [(2, 4, 4), (2, 3, 4), (3, 3, 4)]:
    p = LevelProfile(levels, 2)
    print(levels, "->", lower_bound(p).render())
