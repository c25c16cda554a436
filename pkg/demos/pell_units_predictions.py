"""
Fundamental units of Q(sqrt(p)) and what h(-4p) forces on them
==============================================================

The continued fraction of sqrt(p) produces the fundamental unit
t + u sqrt(p).  When 8 | h(-4p) the unit satisfies h = t + p - 1
mod 16, and for p = a^2 + c^4 the residues t mod 16 and u mod 8 are
pinned down by (a mod 16, c mod 4) alone.

Run:  python3 demos/pell_units_predictions.py
"""

from sixteenrank import (
    class_number_enum,
    decompose_two_squares,
    fundamental_unit,
    predict_unit_congruences,
    williams_check,
)

# the worked chain for p = 41: unit (32, 5), norm -1, h = 8,
# and 32 + 41 - 1 = 72 = 8 mod 16
p = 41
unit = fundamental_unit(p)
h = class_number_enum(p).h
print(f"p = {p}: fundamental unit t = {unit.t}, u = {unit.u}, norm {unit.norm}")
print(f"h(-4p) = {h}; t + p - 1 = {unit.t + p - 1} = {(unit.t + p - 1) % 16} mod 16")
print(f"congruence h = t + p - 1 mod 16 holds: {williams_check(p, h, unit)}")
print()

# prediction table in action: for a^2 + c^4 primes with 8 | h the
# pair (a mod 16, c mod 4) forces (t mod 16, u mod 8)
print(f"{'p':>6} {'a':>4} {'c':>3} {'t mod 16':>9} {'u mod 8':>8}  forced")
for p in (41, 257, 337, 881, 1321, 2657, 10169):
    w = decompose_two_squares(p)
    unit = fundamental_unit(p)
    pred = predict_unit_congruences(w.a, w.c)
    ok = unit.t % 16 == pred.t_mod_16 and unit.u % 8 in pred.u_mod_8
    forced = f"t = {pred.t_mod_16}, u in {sorted(pred.u_mod_8)}"
    print(f"{p:>6} {w.a:>4} {w.c:>3} {unit.t % 16:>9} {unit.u % 8:>8}  {forced}  match: {ok}")

print()
# units grow fast even for modest p; print a few sizes, not values
for p in (73, 97, 233, 1009):
    unit = fundamental_unit(p)
    print(f"p = {p:>5}: t has {unit.t.bit_length()} bits, norm {unit.norm}")
