"""Tour of the root system and Weyl group layer, using B2.

Everything here is integer arithmetic on fundamental-weight coordinates:
roots and coroots are tuples, group elements are interned objects with
canonical reduced words, and the Bruhat order is a method call.
"""

from klblocks import weyl_group

group = weyl_group("B2")
datum = group.datum

print("type", datum.kind, "rank", datum.rank)
print("cartan matrix:")
for row in datum.cartan:
    print("   ", row)

print()
print("positive roots (coordinates on the fundamental weights):")
for t, (root, coroot) in enumerate(zip(datum.pos_roots, datum.pos_coroots)):
    print(f"   root {t}: {root}   coroot {coroot}")

print()
print("all", group.order, "elements, by canonical reduced word:")
for w in group.elements:
    word = ".".join(map(str, w.word)) or "e"
    print(f"   {word:10s} length {w.length}  "
          f"left descents {group.left_descents(w)}")

# The Bruhat order: x <= w when some reduced word of w contains one of x
# as a subword.  The longest element dominates everything.
w0 = group.w0
print()
print("everything is below the longest element:",
      all(group.bruhat_leq(x, w0) for x in group.elements))

s1, s2 = group.simple(1), group.simple(2)
print("s1 <= s1*s2:", group.bruhat_leq(s1, s1 * s2))
print("s1 <= s2:", group.bruhat_leq(s1, s2))

# Minimal coset representatives split every element as w = d * u with
# d shortest in w W_J and u inside the parabolic subgroup W_J.
J = frozenset({1})
print()
print("minimal representatives for W/W_J, J =", sorted(J))
for d in group.min_coset_reps(J):
    print("   ", ".".join(map(str, d.word)) or "e")
w = group.word_elem((2, 1, 2))
d, u = group.coset_factorize(w, J)
print("factorize 2.1.2:  d =", ".".join(map(str, d.word)) or "e",
      " u =", ".".join(map(str, u.word)) or "e")

# The dot action shifts by rho before acting; antidominant weights are
# the canonical orbit representatives for block bookkeeping.
lam = (0, 0)
print()
print("dot orbit of", lam, "-> antidominant representative",
      group.antidominant_representative(lam))
print("s1 . (0,0) =", s1.dot(lam))
print("singularity subset of (-1,-2):",
      sorted(group.singularity_subset((-1, -2))))
