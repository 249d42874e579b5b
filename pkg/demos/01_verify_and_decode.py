"""Verify a small mixed-level locating array, then use it to pin down a fault.

A locating array is a test plan: rows are test runs, columns are factors,
and entries pick one level per factor. If some single t-way interaction is
faulty, the set of failing runs identifies it exactly.
"""

from mixla import Interaction, Outcomes, locate, parse_array, rho, simulate_outcomes
from mixla.verifier import is_locating, is_mca

# Twelve runs over five factors: four binary and one ternary. The header
# records the strength (t 2): we care about pairwise interactions.
DOC = """\
la v1
t 2
levels 2 2 2 2 3
0 0 0 0 0
0 0 0 0 2
0 0 0 1 1
0 0 1 0 0
0 1 0 1 1
0 1 1 0 1
0 1 1 1 2
1 0 1 1 0
1 0 1 1 1
1 1 0 0 0
1 1 0 1 2
1 1 1 0 2
"""

plan = parse_array(DOC)
print(plan)

# Every pair of levels appears in at least one run...
print(is_mca(plan, 2).render())
# ...and no two interactions share a set of runs, so failures are decodable.
print(is_locating(plan, 2, 1, barred=True).render())

# Where does the interaction (factor 1 = 0, factor 5 = 2) appear?
fault = Interaction.of((1, 0), (5, 2))
print(f"rows containing {fault.render()}:", rho(plan, fault))

# Pretend that interaction is broken and run the whole plan.
outcomes = simulate_outcomes(plan, fault)
print("outcomes:", outcomes.render())

# The decoder recovers the fault from the failing rows alone.
print(locate(plan, outcomes).render())

# All runs passing means no fault at all...
print(locate(plan, simulate_outcomes(plan, None)).render())

# ...and a failing set no single interaction explains is flagged, not guessed.
print(locate(plan, Outcomes.from_text("ff" + "p" * 10)).render())
