# coding: utf-8

# # Degree-bounded membership in a semiring
#
# Take the semiring generated by nonnegative numbers and 1 + x, 1 - x, x^2 + x^4.
# Every element is nonnegative on [-1, 1], and x^2 is as well, yet x^2 is not in
# the semiring. With a degree bound the question becomes a linear program, and a
# negative answer comes with a Farkas functional that can be checked by hand.

# In[1]:

from polycert.membership import SemiringPresentation, member_at_degree, verify_refutation
from polycert.polyring import format_poly, parse, parse_many

T = SemiringPresentation(parse_many(["1 + x1", "1 - x1", "x1^2 + x1^4"]))


# In[2]:

w = member_at_degree(parse("1 + x1^2"), T, 2)
for c, md in w.terms:
    print(c, md)


# In[3]:

for D in (2, 4, 6, 8):
    r = member_at_degree(parse("x1^2"), T, D)
    print(D, type(r).__name__, verify_refutation(parse("x1^2"), T, r))


# The functional assigns a number to each monomial; it is nonnegative on every
# product of generators of degree at most D and equals -1 on the target.

# In[4]:

r = member_at_degree(parse("x1^2"), T, 4)
print({m: str(v) for m, v in sorted(r.functional.items())})


# Why it fails for every D: evaluate a representation at x = 0. Products without
# x^2 + x^4 are 1 there, so their coefficients must vanish, and x^2 would then be
# a multiple of x^2 + x^4.

# In[5]:

print(format_poly(parse("x1^2 + x1^4")), "does not divide", format_poly(parse("x1^2")))
