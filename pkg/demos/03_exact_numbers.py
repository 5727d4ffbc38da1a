"""
Exact numbers by backtracking
=============================

``exact_number`` finds the least n for which every r-coloring of [n] has a
monochromatic k-term pattern, by ascending n and searching for an avoiding
coloring each time. The last avoiding coloring is kept as the witness.
"""

from fibramsey import DiffSet, exact_number, greedy_color, lift_parity
from fibramsey.detect import find_mono_diffseq

L = DiffSet("L")
for k in range(2, 6):
    res = exact_number(L, k, 2, symmetry="full")
    print(f"Δ(L,{k};2) = {res.value}   witness for [{res.witness.n}]: {res.witness.colors.tolist()}")

# progressions instead of diffsequences
res = exact_number(DiffSet("F"), 3, 2, mode="ap")
print("n(AP_F,3;2) =", res.value, "in", round(res.elapsed, 3), "s")

# small Perrin entries
P = DiffSet("P")
print([exact_number(P, k, 2, symmetry="full").value for k in range(2, 6)])

# a greedy run with a backtracking window longer than the largest gap below 50000
G = DiffSet("G")
print("first-fit:", greedy_color(G, 3, 2, 50_000).stuck_at)
run = greedy_color(G, 3, 2, 50_000, policy="backtrack", window=6000)
print("backtrack:", run.ok, round(run.elapsed, 2), "s")
print("no 3-term G:", find_mono_diffseq(run.coloring, G, 3) is None)

# lifting doubles the palette: a 4-coloring of [100000] without 3-term F-diffsequences
four = lift_parity(run.coloring)
print(four.n, four.r, find_mono_diffseq(four, DiffSet("F"), 3) is None)
