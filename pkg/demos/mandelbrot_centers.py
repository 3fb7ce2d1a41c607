"""Pair the centers of period-n hyperbolic components against dd^c G_lambda(0).

Prints, for each n, the normalized pairing error of the center cloud with
a bump test function; the error should shrink as n grows.
"""

from biflab.currents import ddc_density, pair_measure_with_test, parse_test_function
from biflab.families import FamilyDescriptor, potential_field
from biflab.grids import Window
from biflab.percrit import percrit_roots

window = Window(-2.25, 1.75, -2, 2, 256, 256)
field = ddc_density(potential_field(FamilyDescriptor.unicritical(2), 0, window, max_iter=1000))
phi = parse_test_function("bump(-0.5,0,1.2)")
for n in (6, 8, 10):
    pm = percrit_roots(2, n, 0)
    pairing = pair_measure_with_test(pm, phi, field)
    print(f"n={n:2d}  centers={len(pm):4d}  |error|/C1 = {pairing.error / phi.c1_norm:.2e}")
