# coding: utf-8

# # Newton polytopes and initial parts
#
# The exponents of a polynomial span its Newton polytope. Each face carries an
# initial part: the terms that maximize a weight `w` pointing out of that face.

# In[1]:

from polycert.polyring import format_poly, parse
from polycert.support import atoms, log_set, max_atom_count, newton_faces, newton_vertices
from polycert.valuation import RationalFunction, check_addass, initial_part, limit_check, place, proper_initial_parts, valuation

f = parse("x1^4 + x2^4 + 1 - x1*x2")
print(sorted(log_set(f)))
print(sorted(newton_vertices(f)))


# The negative term sits strictly inside the triangle, so it shows up in no proper face.

# In[2]:

for face, part in proper_initial_parts(f):
    print(face.dim, tuple(map(str, face.normal)), format_poly(part))
print(check_addass(f))


# A polynomial where an edge carries a negative coefficient.

# In[3]:

g = parse("x1 - x1^2 + x2^2")
ok, face = check_addass(g)
print(ok, sorted(face.members), format_poly(initial_part(g, face.normal)))


# Valuations and the place attached to a weight.

# In[4]:

w = (1, 1)
print(valuation(f, w), format_poly(initial_part(f, w)))
print(place(RationalFunction(parse("x1*x2"), parse("x1^4 + x2^4 + 1")), w))
print(place(RationalFunction(parse("x1^4", 2), parse("x1*x2")), w))


# Substituting s^-w into the variables and rescaling leaves the initial part as the
# s-free component; everything else carries a positive power of s.

# In[5]:

table = limit_check(f, (1, 1), (1, 1), s_grid=[1, 2])
print(table.components)
print(table.samples)


# Atoms of a support are the nonzero points that are not sums of two nonzero points.

# In[6]:

print(sorted(atoms(log_set(parse("1 - x1 + x1^3")))))
print(max_atom_count(log_set(parse("1 + x1 + x1^2 + x1^3 + x1^4"))))
print(len(newton_faces(parse("1 + x1 + x2 + x3"))))
