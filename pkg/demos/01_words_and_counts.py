#!/usr/bin/env python3
"""Terms, prefix words, and the counting arithmetic underneath everything.

A term of order n is a fully parenthesized product of n+1 variables under
one binary operation V, written in prefix notation: "VVxxVxx" is
V(V(x,x), V(x,x)).  There are catalan(n) of them, and the ballot triangle
partitions that count line by line.
"""

from iterforge import (
    all_terms,
    ballot_row,
    catalan,
    cherries,
    decompose,
    parse_word,
    render_word,
    run_length_code,
    substitute_cherry,
    validate_word_diophantine,
)

print("== parsing and printing ==")
term = parse_word("VVxxVxVxx")
print("word:", render_word(term), " order:", term.order)
left, right = decompose(term)
print("decomposition:", render_word(left), "|", render_word(right))
print("cherry positions (adjacent sibling leaves):", sorted(cherries(term)))

print()
print("== growing terms by planting Vxx at a leaf ==")
base = parse_word("Vxx")
for position in (1, 2):
    grown = substitute_cherry(base, position)
    print(f"  plant at leaf {position}: {render_word(grown)}")

print()
print("== counting ==")
print("orders 0..10:", [catalan(n) for n in range(11)])
print("ballot triangle:")
for n in range(1, 7):
    row = ballot_row(n)
    print(f"  n={n}: {' '.join(str(v) for v in row):<20} sum = {sum(row)}")

print()
print("== the run-length well-formedness test ==")
word = "VVVxxVxVxxx"
code = run_length_code(word)
print(f"{word}: blocks {code.pairs}, digits {code.digits}, k={code.k}")
print("valid:", validate_word_diophantine(word))
print("dangling 'VVxx' valid:", validate_word_diophantine("VVxx"))

total = sum(1 for length in range(1, 12) for bits in range(1 << length)
            if validate_word_diophantine("".join("Vx"[(bits >> i) & 1] for i in range(length))))
expected = sum(catalan(n) for n in range(6))  # orders 0..5 have words of length <= 11
print(f"valid words of length <= 11: {total} (sum of catalan 0..5 = {expected})")

print()
print("== exhaustive enumeration agrees ==")
for n in range(7):
    print(f"  order {n}: {len(all_terms(n))} distinct terms, catalan = {catalan(n)}")
