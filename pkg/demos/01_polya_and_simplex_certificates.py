# coding: utf-8

# # Certificates on the simplex
#
# A form that is positive on the standard simplex becomes coefficient-nonnegative
# after multiplying by a high enough power of x1 + ... + xn. This notebook finds
# the least such power for a few forms and turns it into a certificate
# `f = P + Q*(x1 + ... + xn - 1)` with `P` free of negative coefficients.

# In[1]:

from fractions import Fraction

from polycert.polyring import evaluate, format_poly, parse, parse_many
from polycert.polya import coefficient_identity_check, polya_exponent
from polycert.simplexcert import IdentityData, certify_positive_simplex, certify_simplex, verify_certificate


# The smallest interesting form: x^2 - xy + y^2 has a negative coefficient, but one
# factor of (x + y) clears it.

# In[2]:

f = parse("x1^2 - x1*x2 + x2^2")
res = polya_exponent(f)
print(res.k, format_poly(res.product))
print("k = 0 fails at exponent", res.witnesses[0][1])


# Squeezing the form closer to zero on the simplex pushes the exponent up.

# In[3]:

for c in (1, Fraction(3, 2), Fraction(19, 10), Fraction(199, 100)):
    g = parse(f"x1^2 - {c}*x1*x2 + x2^2")
    print(f"c = {c}: k = {polya_exponent(g, 1000).k}")


# The coefficients of (x1 + ... + xn)^k f have a closed form in terms of a
# "falling" version of f. Checking it is a strong consistency test, since the two
# sides are computed in unrelated ways.

# In[4]:

print(all(coefficient_identity_check(f, k) for k in range(6)))


# A certificate for x^3 - x^2 y + x y^2 = x * (x^2 - xy + y^2), driven by that factorization.

# In[5]:

F, G, H = parse_many(["x1^3 - x1^2*x2 + x1*x2^2", "x1^2 - x1*x2 + x2^2", "x1"])
cert = certify_simplex(F, IdentityData([(G, H)]))
print("P =", format_poly(cert.P))
print("Q =", format_poly(cert.Q))
print("k =", cert.k, "shift =", cert.shift, "verified:", verify_certificate(F, cert))


# A polynomial with a zero inside the simplex can never be certified: 1 - 4xy agrees
# with (x - y)^2 on x + y = 1, which vanishes at (1/2, 1/2).

# In[6]:

bad = parse("1 - 4*x1*x2")
print(evaluate(bad, [Fraction(1, 2), Fraction(1, 2)]))
print(certify_positive_simplex(bad, max_shift=8, max_k=50))
