# Walk through a few lexicographic sums and what the group predicates say.
# Run: python3 demos/01_groups.py

# %%
from ordval import parse_group_expr
from ordval.dsl import parse_element
from ordval.groups import (
    find_nondense_witness, is_closed_in_hull, is_dense_in_hull, is_discretely_ordered,
    is_limit_point, is_regular, largest_p_divisible_convex, oracle_between,
)

groups = ["Z", "lex(Z, Z)", "lex(loc{2}, loc{2})", "lex(Q, loc{2})", "lex(loc{>=3}, Q)",
          "omega(prefixprimes)"]

# %%
print(f"{'group':24} discrete regular dense closed")
for text in groups:
    G = parse_group_expr(text)
    print(f"{text:24} {is_discretely_ordered(G)!s:8} {is_regular(G)!s:7} "
          f"{is_dense_in_hull(G)!s:5} {is_closed_in_hull(G)}")

# %% A sum of two copies of the dyadic rationals: not dense in its divisible hull.
AA = parse_group_expr("lex(loc{2}, loc{2})")
g0 = find_nondense_witness(AA)
print("\nnon-dense witness in", AA, "->", g0)
print("gap to g0 + (0, 1) contains a group element?",
      oracle_between(AA, g0, g0 + parse_element("{2: 1}"), 64))

# the last coordinate can be pushed towards 1/3 with dyadic fractions
s = parse_element("{2: 1/3}")
print("(0, 1/3) is a limit point:", is_limit_point(s, AA))
for k in (4, 8, 16):
    print("  within 1/%d:" % k, oracle_between(AA, s, s + parse_element(f"{{2: 1/{k}}}"), 4 * k))

# %% omega(prefixprimes): component n allows the first n odd primes
PP = parse_group_expr("omega(prefixprimes)")
for p in (2, 3, 5, 7, 11):
    print(f"largest {p}-divisible convex subgroup of {PP}:", largest_p_divisible_convex(PP, p))
