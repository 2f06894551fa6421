# The D_2,2 generator of O(2,2;Z) written as handle-slides.

from kirbycalc.intmat import (IntegerMatrix, bfs_decompose_opq, d_pq, evaluate_word, ipq,
                              is_in_opq, slide_generators, wall_generators)
from kirbycalc.movecalc import evolve_lk, expand_d_move, phi

D = d_pq((2, 2))
print(D)
print(D @ ipq((2, 2)) @ D.T == ipq((2, 2)))   # preserves the form

# the shipped eight-slide word
seq = expand_d_move(4, (1, 2, 3, 4))
print(len(seq), phi(seq) == D)
print(evolve_lk(ipq((2, 2)), seq))

# breadth-first search finds a shorter word
gens = slide_generators(4)
word = bfs_decompose_opq(D, (2, 2), gens, 8)
print(word)
print(evaluate_word(word, gens, 4) == D)

# with the exact-length flag it returns a freely reduced word of length 8
word8 = bfs_decompose_opq(D, (2, 2), gens, 8, exact_length=True)
print(word8)

# the Wall generators all lie in O(p,q;Z)
for name, T in wall_generators((2, 2)):
    print(name, is_in_opq(T, (2, 2)))

# flipping the sign of the (1,1) entry breaks orthogonality
bad = IntegerMatrix([[-1, 1, -1, 0], [-1, 1, 0, 1], [-1, 0, 1, 1], [0, 1, -1, 1]])
print(is_in_opq(bad, (2, 2)))
