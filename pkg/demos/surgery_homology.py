# First homology of surgery on a framed link, tracked through moves.

from kirbycalc.homlink import (HomFramedLink, apply_sequence, band_slide, h1_of_surgery,
                               handle_slide, is_admissible, k3_add, pair_add, stabilize)
from kirbycalc.intmat import IntegerMatrix
from kirbycalc.movecalc import parse_sequence

# two components in a manifold with H_1 = Z^2, linked once
L = HomFramedLink(2, [(0, 0), (1, 0)], IntegerMatrix([[1, 1], [1, 2]]))
print(L.to_text())
print(h1_of_surgery(L))

# a stabilization adds an unlinked +-1 unknot; nothing changes
L1 = stabilize(L, -1)
print(L1.framings, h1_of_surgery(L1))

# a handle-slide changes the linking matrix by congruence
L2 = handle_slide(L1, 1, 2, 1)
print(L2.lk)
print(h1_of_surgery(L2))

# a band-slide is two opposite slides
print(band_slide(L, 1, 2).lk == L.lk)

# the K3 and pair moves
L3 = pair_add(k3_add(L, 1, [0, 0]))
print(L3.n, h1_of_surgery(L3))

# sequences can be read from text
seq = parse_sequence("n 2\nW+ 1 2\nQ 2\nP 1 2\n")
print(apply_sequence(L, seq).lk)

# the diagonal +-1 links are the admissible ones
print(is_admissible(stabilize(stabilize(HomFramedLink.empty(0), 1), -1)))
