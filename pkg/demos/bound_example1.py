"""
Certified denominator primes for a small CM field
=================================================

Walk through N_mu for the field x^3 - x^2 - 2x + 1 (the real cubic
subfield of Q(zeta_7)) and read off the prime set 6*N_mu.
"""

from fractions import Fraction

from picardcm.bounds import compute_N_mu
from picardcm.fields import make_cubic_field, maximal_order, maximal_sextic_order
from picardcm.lattice import find_mu

# the field K+ and the sextic CM order O = O_K
K = make_cubic_field(1, -2, -1)
O_plus = maximal_order(K)
O = maximal_sextic_order(K)
print("disc(O+) =", O_plus.disc)

# smallest-trace mu in Z + 2 O+
best = find_mu(O_plus)[0]
print("mu coords", [str(c) for c in best.mu.coords], "t2 =", best.t2)

# the certificate: every (m, x, a) tuple is listed, one n per (x, a) is multiplied in
cert = compute_N_mu(best.mu, O)
for t in cert.tuples[:8]:
    print(t.to_json())

print("N_mu   =", cert.N_mu)
print("primes =", cert.prime_set)
print("largest prime below t2^3:", max(cert.prime_set) <= cert.theorem_bound)
