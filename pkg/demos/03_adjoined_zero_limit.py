"""The adjoined-zero limit for walks whose recurrent states keep moving.

When the minimal ideal is not left zero, walks never settle into absorbing
states and the word-level argument does not apply directly.  Adjoining a
fresh zero generator with weight t restores absorption; the stationary law
of the original walk is the exact limit t -> 0, computed here over rational
functions in t.
"""

from fractions import Fraction

from semiwalk import kernel_is_left_zero, minimal_ideal, stationary_kr, stationary_s
from semiwalk.families import FamilySpec, build

for name in ("z2x01", "rees_general"):
    S = build(FamilySpec(name, {}))
    K = minimal_ideal(S)
    print(f"{name}: |S| = {S.size}, |K| = {len(K)}, "
          f"left zero: {kernel_is_left_zero(S, K)}")

    x = [Fraction(2, 5), Fraction(3, 5)]
    r = stationary_kr(S, x)
    print("  expansion-level limit law:")
    for label, value in r.entries.items():
        alt = r.key_info[label].alt_label
        print(f"    {label:6} (normal form {alt}): {value}")
    print("  total:", r.total())

    rs = stationary_s(S, x)
    print("  lumped to the semigroup:")
    for label, value in rs.entries.items():
        print(f"    {label}: {value}")
    print()
