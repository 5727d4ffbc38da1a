"""
Fibonacci words as colorings
============================

The Fibonacci word and its images S (0 -> 10, 1 -> 01) and T (0 -> 1,
1 -> 00) give 2-colorings of the integers that avoid long monochromatic
patterns with Fibonacci-type gaps.
"""

import numpy as np

from fibramsey import DiffSet, find_mono_ap, find_mono_diffseq, from_word, lift_parity, lucas_mod8
from fibramsey.words import prefix_array, word_at, word_prefix

# the three words, from the morphisms and from the closed forms
for name in "FST":
    print(name, word_prefix(name, 20), "".join(str(word_at(name, n)) for n in range(1, 21)))

n = 10**6
G, F, L = DiffSet("G"), DiffSet("F"), DiffSet("L")

# S never has four same-colored positions with consecutive gaps in G ...
S = from_word("S", n)
print("S, 4-term G:", find_mono_diffseq(S, G, 4))
# ... but three are easy to find
print("S, 3-term G:", find_mono_diffseq(S, G, 3))

# T has no 5-term progression with Fibonacci gap, and its ones not even 4 terms
T = from_word("T", n)
print("T, 5-term AP_F:", find_mono_ap(T, F, 5))
print("T ones, 4-term AP_F:", find_mono_ap(T, F, 4, colors=[2]))

# pairing parity with S at ceil(i/2) gives a 4-coloring with no 4-term F-diffsequence
four = lift_parity(from_word("S", n // 2), n)
print("lifted S, 4-term F:", find_mono_diffseq(four, F, 4))

# residues of Lucas numbers mod 8 never hit 0 or 6, so this coloring avoids 3 terms
print("mod 8, 3-term L:", find_mono_diffseq(lucas_mod8(n), L, 3))

# densities of ones in the three words
print({w: round(float(np.mean(prefix_array(w, n))), 5) for w in "FST"})
