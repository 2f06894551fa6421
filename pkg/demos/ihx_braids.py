# The IHX relation through pure braids, and the four-torus it builds.

from kirbycalc import constants
from kirbycalc.braidclasp import (FreeWord, artin_action, braid_is_trivial, parse_braid,
                                  pure_braid_generator, select_witt_hall_convention,
                                  verify_ihx_braid_identity, witt_hall_word)
from kirbycalc.fourman import boundary2, closed4_homology, parse_skeleton


def shipped(name):
    return parse_braid(constants.data_text("braids", name))


x, y, z = (FreeWord.gen(3, k) for k in (1, 2, 3))
print(witt_hall_word(x, y, z, "left").is_identity())
print(witt_hall_word(x, y, z, "right").is_identity())
print(select_witt_hall_convention())

# pure braid generators A_i4 stand in for x, y, z
A14 = pure_braid_generator(1, 4, 4)
print(A14, A14.is_pure(), braid_is_trivial(A14))
print(artin_action(A14))

alpha, beta1 = shipped("alpha.braid"), shipped("beta1.braid")
print(len(beta1))
print(verify_ihx_braid_identity(beta1, alpha))

# the closed manifold built from the IHX-move has the homology of T^4
sk = parse_skeleton(constants.data_text("kirby", "ihx1.kirby4"))
print(boundary2(sk))
for k, G in enumerate(closed4_homology(sk)):
    print(k, G)
