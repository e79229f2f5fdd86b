"""2737 = 7 * 17 * 23 fools every norm-one base for D = -2 but not for D = 3.

Run: python demos/carmichael_2737.py
"""

from quadprime import QuadraticContext, korselt_check, pseudoprime_base_check, search_carmichael
from quadprime.carmichael import carmichael_bruteforce
from quadprime.group import GroupElement

report = korselt_check(2737, -2)
print(f"2737 - (-2/2737) = {report.order_N}")
for entry in report.divisibility:
    print(f"  p = {entry.p}: p - (D/p) = {entry.order}, divides: {entry.divides}")
print(f"divisibility criterion says Carmichael: {report.is_carmichael}")
print(f"checking all group elements agrees: {carmichael_bruteforce(2737, -2)}")

alpha = GroupElement(QuadraticContext(3, 2737), 2, 1)
print(f"with D = 3, base 2+sqrt(3) passes: {pseudoprime_base_check(2737, 3, alpha)}")

print(f"D = -2 Carmichael numbers below 3000: {search_carmichael(3, 3000, -2)}")
