# IHX-moves measured in the fourth exterior power, and cancelling a class.

from kirbycalc.h4 import (Wedge4Class, coordinate_shadow, eta_of_ihx, plan_cancellation,
                          total_eta, wedge4)

print(wedge4((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
print(wedge4((1, 0, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))   # repeated vector

sh = coordinate_shadow(5, (1, 2, 3, 5))
print(eta_of_ihx(sh))
print(eta_of_ihx(sh, -1))

target = Wedge4Class(5, {(1, 2, 3, 4): 2, (1, 2, 3, 5): -1})
print(target.to_text())

plan = plan_cancellation(target)
print(len(plan))
print(total_eta(plan, 5) == -target)
print((target + total_eta(plan, 5)).is_zero())
