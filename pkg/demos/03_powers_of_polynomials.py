# coding: utf-8

# # When do all high powers lose their negative coefficients?
#
# If f(1,...,1) > 0 and some power of f has no negative coefficient, then all
# sufficiently high powers have none. `stabilize` finds the exact threshold: it
# looks for two consecutive nonnegative powers, expands everything up to the
# conductor of the semigroup they generate, and seals the rest by products.

# In[1]:

from polycert.polyring import format_poly, is_nonneg_coeffs, parse
from polycert.powers import SemigroupParams, check_hypotheses, frobenius_conductor, stabilize, verify_seal

f = parse("1 + x1 - 1/2*x1^2 + x1^3 + x1^4")
print("".join("+" if is_nonneg_coeffs(f**k)[0] else "-" for k in range(1, 25)))


# Powers 1 and 3 fail but 2 succeeds, so the pattern is not monotone.

# In[2]:

rep = stabilize(f)
print(rep.outcome, "k0 =", rep.k0, "pair =", rep.pair, "conductor =", rep.conductor)
print("f^%d fails at" % (rep.k0 - 1), rep.minimality_witness)
print(all(verify_seal(f, rep, j) for j in range(rep.conductor + 1, rep.conductor + 30)))


# The conductor is the least integer beyond which every value is a*l1 + b*l2 with a, b >= k.

# In[3]:

for l1, l2, k in [(2, 3, 0), (2, 3, 1), (4, 5, 1), (1, 2, 1)]:
    print((l1, l2, k), frobenius_conductor(SemigroupParams(l1, l2, k)))


# A case where no power ever works: the coefficient of x in (1 - x + x^2)^k is -k.

# In[4]:

g = parse("1 - x1 + x1^2")
print(check_hypotheses(g))
print(stabilize(g, 20).outcome)


# The same obstruction affects x^4 + y^4 + 1 - xy: the xy coefficient of every power is -k,
# so the hypothesis "some power is nonnegative" never holds.

# In[5]:

h = parse("x1^4 + x2^4 + 1 - x1*x2")
print([(h**k).coeff((1, 1)) for k in range(1, 8)])
print(check_hypotheses(h).definite_negative)
