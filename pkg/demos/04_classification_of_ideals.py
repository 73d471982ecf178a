"""
Which ideal does a set of objects generate?
===========================================

At a fixed integral delta the nontrivial ideals form one chain I(m|n),
m - n = delta.  Each bipartition sits in the ideals up to a threshold m*,
and a finite set generates the ideal of its smallest threshold.
"""

from repgl import ideal_of_set, parse_bipartition
from repgl.ideals import m_star, principal_ideal, reduce_to_almost_or_unit
from repgl.tensor import format_word

delta = 0
labels = ["[1|]", "[1|1]", "[2,1|1,1]", "[3,3,1|2]", "[|]"]
for text in labels:
    lam = parse_bipartition(text)
    print(f"{text:>12}  m* = {m_star(lam, delta)}  generates {principal_ideal(lam, delta)}")

print("\nset generates", ideal_of_set([parse_bipartition(t) for t in labels[1:4]], delta))

# Reduction walks down to an almost-cross bipartition; the word records how.
for text in ["[1|1]", "[2,2|1]", "[3,3,1|2]"]:
    out = reduce_to_almost_or_unit(parse_bipartition(text), delta)
    print(f"{text:>12}  ->  {out.target} in I({out.m}|{out.n}) via '{format_word(out.witness)}'")
