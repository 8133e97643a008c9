#!/usr/bin/env python3
"""Which identities are essential once cancellation laws are imposed.

Under V(a,x)=V(a,y) => x=y and its mirror, a merged pair whose terms share
a flank verbatim forces the other flanks to merge one order down.  Chains
of such cancellations can drive a formally irreducible identity all the
way to a lower-order law; identities where this never happens (up to the
search bound) are the essential ones.
"""

from iterforge import Universe, classify_identity, implication_pairs
from iterforge.semantics import column_pair_survey, formal_cascade

universe = Universe(9)

print("== the ten order-3 identities ==")
for i in range(1, 6):
    for j in range(i + 1, 6):
        verdict = classify_identity(universe, 3, (i, j), 7)
        line = f"  {i}={j}: {verdict}"
        if verdict.witness:
            chain = " -> ".join(f"{a}~{b} at order {m}" for m, a, b in verdict.witness)
            line += f"   [{chain}]"
        print(line)

print()
print("== the witness for 1 = 5, written out ==")
cat5, cat4, cat2 = universe.catalog(5), universe.catalog(4), universe.catalog(2)
print("closure makes", cat5.word(8), "=", cat5.word(11))
print("strip the shared right flank:", cat4.word(4), "=", cat4.word(5))
print("strip the shared left flank: ", cat2.word(1), "=", cat2.word(2))
print("and V(Vxx)x = Vx(Vxx) is the associative law, one order below the axiom")
print("cascade:", formal_cascade(universe, 5, 8, 11))

print()
print("== pairs that force lower-order equalities by cancellation alone ==")
for n, k in [(3, 2), (4, 2), (5, 2), (5, 3)]:
    count, pairs = implication_pairs(universe, n, k)
    shown = " ".join(f"{a}~{b}" for a, b in pairs[:6])
    more = "..." if count > 6 else ""
    print(f"  order {n} -> order {k}: {count} pairs   {shown}{more}")

print()
print("== the column conjecture ==")
survey3 = column_pair_survey(universe, 3, 7)
print("order 3: columns of the extension grid:", survey3.column_pairs)
print("         essential columns:", survey3.essential_columns,
      " essential non-columns:", survey3.essential_others)

survey4 = column_pair_survey(universe, 4, 7)
print("order 4: columns:", survey4.column_pairs)
for pair, verdict in zip(survey4.column_pairs, survey4.column_verdicts):
    print(f"         {pair}: {verdict}")
print("         essential non-columns:", survey4.essential_others)
print("so at order 4 the columns are neither all essential nor the only")
print("essential identities: two columns collapse and three outsiders survive")
