"""Pure-Python reduction kernels.

Polynomials here are ``dict[int, int]``: packed exponent to integer
coefficient.  Division is fraction-free: when a reducer's leading
coefficient does not divide the term being cancelled, the dividend is scaled
up, so the remainder equals the true normal form up to a nonzero constant.
``_kernel.pyx`` mirrors this file function for function.
"""

from heapq import heappop, heappush
from math import gcd

BACKEND = "python"


def find_divisor(m, lms, guard):
    """Index of the first monomial in ``lms`` dividing ``m``, or -1."""
    mg = m | guard
    i = 0
    for lm in lms:
        if (mg - lm) & guard == guard:
            return i
        i += 1
    return -1


def content(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def make_primitive(d, lead):
    """Divide out the content and make the coefficient at ``lead`` positive."""
    g = content(d)
    if d[lead] < 0:
        g = -g
    if g == 1:
        return d
    return {m: c // g for m, c in d.items()}


def spoly(f, lmf, lcf, g, lmg, lcg, lcm):
    """``(lcg*lcm/lmf) f - (lcf*lcm/lmg) g`` with the gcd of the scalars removed."""
    d = gcd(lcf, lcg)
    a = lcg // d
    b = lcf // d
    qf = lcm - lmf
    qg = lcm - lmg
    out = {}
    for m, c in f.items():
        out[m + qf] = a * c
    for m, c in g.items():
        mm = m + qg
        v = out.get(mm, 0) - b * c
        if v:
            out[mm] = v
        else:
            del out[mm]
    return out


def reduce_poly(h, lms, polys, lcs, key, guard, full=True):
    """Normal form of ``h`` modulo the basis, up to a nonzero scalar.

    ``lms``/``polys``/``lcs`` are parallel lists describing the reducers.
    With ``full`` false only the leading term is reduced; the rest of ``h``
    is returned untouched once the leading term is irreducible.
    """
    h = dict(h)
    if not h:
        return h
    rem = {}
    heap = []
    for m in h:
        heappush(heap, (-key[m], m))
    steps = 0
    while heap:
        m = heappop(heap)[1]
        c = h.get(m)
        if c is None:
            continue
        i = find_divisor(m, lms, guard)
        if i < 0:
            if not full:
                h.update(rem)
                return h
            rem[m] = c
            del h[m]
            continue
        g = polys[i]
        lg = lcs[i]
        q = m - lms[i]
        d = gcd(c, lg)
        a = lg // d
        b = c // d
        if a != 1:
            for k in h:
                h[k] *= a
            for k in rem:
                rem[k] *= a
        for mg, cg in g.items():
            mm = mg + q
            v = h.get(mm)
            if v is None:
                h[mm] = -b * cg
                heappush(heap, (-key[mm], mm))
            else:
                v -= b * cg
                if v:
                    h[mm] = v
                else:
                    del h[mm]
        steps += 1
        if a != 1 and steps % 16 == 0:
            cont = gcd(content(h), content(rem)) if rem else content(h)
            if cont > 1:
                for k in h:
                    h[k] //= cont
                for k in rem:
                    rem[k] //= cont
    return rem


def leading(d, key):
    return max(d, key=key.__getitem__)
