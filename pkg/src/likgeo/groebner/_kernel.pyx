# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernels; same contract as ``_kernel_py``.

Monomials are packed Python ints wider than a machine word, so the gain
comes from typed loops and avoiding attribute lookups, not from C integers.
"""

from heapq import heappop, heappush
from math import gcd

BACKEND = "cython"


cpdef Py_ssize_t find_divisor(object m, list lms, object guard):
    cdef object mg = m | guard
    cdef Py_ssize_t i
    cdef Py_ssize_t n = len(lms)
    for i in range(n):
        if (mg - <object>lms[i]) & guard == guard:
            return i
    return -1


cpdef object content(dict d):
    cdef object g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


cpdef dict make_primitive(dict d, object lead):
    cdef object g = content(d)
    if d[lead] < 0:
        g = -g
    if g == 1:
        return d
    return {m: c // g for m, c in d.items()}


cpdef dict spoly(dict f, object lmf, object lcf, dict g, object lmg, object lcg, object lcm):
    cdef object d = gcd(lcf, lcg)
    cdef object a = lcg // d
    cdef object b = lcf // d
    cdef object qf = lcm - lmf
    cdef object qg = lcm - lmg
    cdef dict out = {}
    cdef object mm, v
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


cpdef dict reduce_poly(dict h, list lms, list polys, list lcs, object key, object guard, bint full=True):
    h = dict(h)
    if not h:
        return h
    cdef dict rem = {}
    cdef list heap = []
    cdef Py_ssize_t i, steps = 0
    cdef dict g
    cdef object m, c, lg, q, d, a, b, mm, v, cont, k
    for m in h:
        heappush(heap, (-key[m], m))
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
        g = <dict>polys[i]
        lg = lcs[i]
        q = m - <object>lms[i]
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
                v = v - b * cg
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


cpdef object leading(dict d, object key):
    cdef object best = None, bk = None, k
    for m in d:
        k = key[m]
        if bk is None or k > bk:
            bk = k
            best = m
    return best
