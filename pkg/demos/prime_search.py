"""Certify primes of the form m * p^l - 1 over a range of exponents.

Each Prime line carries the index j at which the certificate closed;
p^(2j) >= N + 1 is what makes it a proof. Small exponents where that bound
cannot be reached are reported as strong probable primes.

Run: python demos/prime_search.py [D m p lmax]
"""

import sys

from quadprime import baseline_is_prime, run_one

D, m, p, lmax = (int(x) for x in sys.argv[1:5]) if len(sys.argv) > 4 else (-2, 8, 3, 60)

for l in range(1, lmax + 1):
    rec = run_one(D, m, p, l)
    if rec.verdict == "Composite":
        continue
    check = "confirmed" if baseline_is_prime(rec.N).is_prime else "NOT PRIME"
    print(f"l = {l:>4}  {rec.bit_size:>5} bits  {rec.verdict:<20} j = {rec.certificate_j}  "
          f"{rec.elapsed_seconds * 1e3:7.2f} ms  baseline {check}")
