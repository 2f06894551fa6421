# Does admissibility survive the lantern swap?  A small exhaustive search.

from kirbycalc import constants
from kirbycalc.acceptance import lantern_box_scan
from kirbycalc.homlink import EmbeddingShadow, HomFramedLink, is_admissible, transport
from kirbycalc.intmat import IntegerMatrix

K, Kp = constants.lantern_k(), constants.lantern_k_prime()
print(K.to_text())
print(Kp.to_text())

both, only_k, only_kp = lantern_box_scan()
print(len(both), len(only_k), len(only_kp))

# one of the lambda found with the K' side admissible and the K side not
lam = IntegerMatrix([[-1, 1, 0], [1, -1, 0], [0, 0, -1]])
sh = EmbeddingShadow(3, 0, IntegerMatrix.zeros(0, 3), lam, IntegerMatrix.zeros(3, 0))
L = HomFramedLink.empty(0)
print(transport(K, sh, L).lk)
print(transport(Kp, sh, L).lk)
print(is_admissible(transport(K, sh, L)), is_admissible(transport(Kp, sh, L)))
