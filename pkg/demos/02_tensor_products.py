"""
Tensoring with the natural object and its dual
==============================================

``B`` adds a black box or removes a white one, ``W`` the other way round.
At an integral delta the generic answer is peeled into linkage classes.
"""

from repgl import GENERIC, m_delta, parse_bipartition
from repgl.tensor import B, W, lift, peel, specialized_one_box, tensor_word
from repgl.textio import format_multiset

one = parse_bipartition("[1|]")
mixed = parse_bipartition("[1|1]")

print("W x [1|], generic:")
print(format_multiset(tensor_word((W,), one, GENERIC)))

# At delta = 0 the unit gets swallowed by the class of [1|1].
print("\nW x [1|], delta = 0:")
print(format_multiset(specialized_one_box(W, one, 0)))

print("\nB x [1|1], delta = 0:")
print(format_multiset(specialized_one_box(B, mixed, 0)))

# Round trip: expand the specialized answer through the linkage classes
# and compare with the generic product of the whole class.
word = (B, W, B)
special = tensor_word(word, mixed, 0)
generic = tensor_word(word, m_delta(mixed, 0), GENERIC)
assert lift(special, 0) == generic
assert len(peel(generic, 0)) == special.total()
print(f"\nBWB x [1|1]: {generic.total()} generic summands peel to {special.total()} at delta = 0")
