# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same API and results as ``_kernels_py``.

Polynomial products and sums whose coefficients fit comfortably in 64 bits
run in C arrays; everything else drops to Python integer arithmetic.
"""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_SIZE, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF
from libc.stdlib cimport malloc, free

from math import gcd as igcd, isqrt

BACKEND = "compiled"

ONE = (1,)
ZERO = ()

cdef list _QPOW = [ONE]

DEF SMALL = 64
cdef double SAFE = 4.0e18


cpdef tuple qpow(Py_ssize_t m):
    while len(_QPOW) <= m:
        _QPOW.append((0,) * len(_QPOW) + (1,))
    return <tuple>_QPOW[m]


cdef inline tuple _tuple_from_ll(long long *c, Py_ssize_t n):
    cdef Py_ssize_t i
    while n and c[n - 1] == 0:
        n -= 1
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = c[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


cdef inline bint _load(tuple a, long long *buf, long long *amax):
    # returns False if any coefficient does not fit in 62 bits
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef object o
    cdef long long v, m = 0
    for i in range(n):
        o = <object>PyTuple_GET_ITEM(a, i)
        try:
            v = o
        except OverflowError:
            return False
        if v > 0x3fffffffffffffff or v < -0x3fffffffffffffff:
            return False
        buf[i] = v
        if v < 0:
            v = -v
        if v > m:
            m = v
    amax[0] = m
    return True


cdef tuple _strip(object c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


cpdef tuple p_add(tuple a, tuple b):
    cdef Py_ssize_t la = PyTuple_GET_SIZE(a), lb = PyTuple_GET_SIZE(b), i
    cdef long long ba[SMALL]
    cdef long long bb[SMALL]
    cdef long long ma, mb
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    if lb == 0:
        return a
    if la <= SMALL and _load(a, ba, &ma) and _load(b, bb, &mb):
        for i in range(lb):
            ba[i] += bb[i]
        return _tuple_from_ll(ba, la)
    cdef list c = list(a)
    for i in range(lb):
        c[i] = c[i] + b[i]
    return _strip(c)


cpdef tuple p_neg(tuple a):
    return tuple([-v for v in a])


cpdef tuple p_sub(tuple a, tuple b):
    return p_add(a, p_neg(b))


cpdef tuple p_scale(tuple a, object s):
    if not s:
        return ZERO
    return tuple([v * s for v in a])


cpdef tuple p_shift(tuple a, Py_ssize_t n):
    if n == 0 or PyTuple_GET_SIZE(a) == 0:
        return a
    return (0,) * n + a


cpdef tuple p_mul(tuple a, tuple b):
    cdef Py_ssize_t la = PyTuple_GET_SIZE(a), lb = PyTuple_GET_SIZE(b), i, j, n
    cdef long long ba[SMALL]
    cdef long long bb[SMALL]
    cdef long long bc[2 * SMALL]
    cdef long long ma, mb, u
    if la == 0 or lb == 0:
        return ZERO
    if la == 1:
        return p_scale(b, a[0])
    if lb == 1:
        return p_scale(a, b[0])
    n = la + lb - 1
    if la <= SMALL and lb <= SMALL and _load(a, ba, &ma) and _load(b, bb, &mb):
        if <double>ma * <double>mb * <double>(la if la < lb else lb) < SAFE:
            for i in range(n):
                bc[i] = 0
            for i in range(la):
                u = ba[i]
                if u:
                    for j in range(lb):
                        bc[i + j] += u * bb[j]
            return _tuple_from_ll(bc, n)
    cdef list c = [0] * n
    for i in range(la):
        ou = a[i]
        if ou:
            for j in range(lb):
                c[i + j] += ou * b[j]
    return tuple(c)


cpdef object p_content(tuple a):
    g = 0
    for v in a:
        g = igcd(g, v)
        if g == 1:
            break
    return g


cpdef object p_divexact(tuple a, tuple b):
    cdef Py_ssize_t da, db, k, j
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return None
    lc = b[db]
    if db == 0:
        out = []
        for v in a:
            qv, rem = divmod(v, lc)
            if rem:
                return None
            out.append(qv)
        return tuple(out)
    cdef list r = list(a)
    cdef list quo = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        top = r[k + db]
        if top:
            qv, rem = divmod(top, lc)
            if rem:
                return None
            quo[k] = qv
            for j in range(db + 1):
                r[k + j] -= qv * b[j]
    for j in range(db):
        if r[j]:
            return None
    return tuple(quo)


cdef tuple _primitive(tuple a):
    c = p_content(a)
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple([v // c for v in a])


cdef tuple _prem(tuple f, tuple g):
    cdef Py_ssize_t df = len(f) - 1, dg = len(g) - 1, k, j
    cdef list r = list(f)
    lc = g[dg]
    for k in range(df - dg, -1, -1):
        top = r[k + dg]
        r = [v * lc for v in r]
        if top:
            for j in range(dg + 1):
                r[k + j] -= top * g[j]
    return _strip(r[:dg])


cdef tuple _prs_gcd(tuple f, tuple g):
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, (_primitive(r) if r else ZERO)
    return _primitive(f)


cdef tuple _heu_interp(object h, object x):
    cdef list out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return tuple(out)


cdef object _peval(tuple a, object x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc


cpdef tuple p_gcd(tuple f, tuple g):
    cdef Py_ssize_t sf, sg, s
    if not f:
        return g if not g or g[len(g) - 1] > 0 else p_neg(g)
    if not g:
        return f if f[len(f) - 1] > 0 else p_neg(f)
    sf = 0
    while not f[sf]:
        sf += 1
    sg = 0
    while not g[sg]:
        sg += 1
    s = sf if sf < sg else sg
    if sf:
        f = f[sf:]
    if sg:
        g = g[sg:]
    cf, cg = p_content(f), p_content(g)
    c = igcd(cf, cg)
    if len(f) == 1 or len(g) == 1:
        return p_shift((c,), s)
    if cf != 1:
        f = tuple([v // cf for v in f])
    if cg != 1:
        g = tuple([v // cg for v in g])
    if f == g or f == p_neg(g):
        h = f if f[len(f) - 1] > 0 else p_neg(f)
        return p_shift(p_scale(h, c), s)
    nf = max([abs(v) for v in f])
    ng = max([abs(v) for v in g])
    x = 2 * min(nf, ng) + 29
    for _ in range(6):
        hf = _peval(f, x)
        hg = _peval(g, x)
        if hf and hg:
            h = _heu_interp(igcd(hf, hg), x)
            if h:
                h = _primitive(h)
                if p_divexact(f, h) is not None and p_divexact(g, h) is not None:
                    return p_shift(p_scale(h, c), s)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    h = _prs_gcd(f, g)
    return p_shift(p_scale(h, c), s)


cdef inline bint _is_qpow(tuple d):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(d), i
    if d[n - 1] != 1:
        return False
    for i in range(n - 1):
        if d[i] != 0:
            return False
    return True


cdef tuple _laurent_pair(tuple n, Py_ssize_t m):
    cdef Py_ssize_t k = 0
    if PyTuple_GET_SIZE(n) == 0:
        return (ZERO, ONE)
    while k < m and not n[k]:
        k += 1
    if k:
        n = n[k:]
        m -= k
    return (n, qpow(m))


cpdef tuple rq_canon(object n, object d):
    n = _strip(n)
    d = _strip(d)
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n:
        return (ZERO, ONE)
    g = p_gcd(n, d)
    if d[len(d) - 1] < 0:
        g = p_neg(g)
    if g != ONE:
        n = p_divexact(n, g)
        d = p_divexact(d, g)
    return (n, d)


cpdef tuple rq_add(tuple n1, tuple d1, tuple n2, tuple d2):
    cdef Py_ssize_t m1, m2, m
    if not n1:
        return (n2, d2)
    if not n2:
        return (n1, d1)
    if d1 == ONE and d2 == ONE:
        n = p_add(n1, n2)
        return (n, ONE) if n else (ZERO, ONE)
    if _is_qpow(d1) and _is_qpow(d2):
        m1 = len(d1) - 1
        m2 = len(d2) - 1
        m = m1 if m1 > m2 else m2
        return _laurent_pair(p_add(p_shift(n1, m - m1), p_shift(n2, m - m2)), m)
    if d1 == d2:
        n = p_add(n1, n2)
        if not n:
            return (ZERO, ONE)
        g = p_gcd(n, d1)
        if g == ONE:
            return (n, d1)
        return (p_divexact(n, g), p_divexact(d1, g))
    g = p_gcd(d1, d2)
    if g == ONE:
        return (p_add(p_mul(n1, d2), p_mul(n2, d1)), p_mul(d1, d2))
    e1 = p_divexact(d1, g)
    e2 = p_divexact(d2, g)
    n = p_add(p_mul(n1, e2), p_mul(n2, e1))
    if not n:
        return (ZERO, ONE)
    h = p_gcd(n, g)
    if h != ONE:
        n = p_divexact(n, h)
        d2 = p_divexact(d2, h)
    return (n, p_mul(e1, d2))


cpdef tuple rq_sub(tuple n1, tuple d1, tuple n2, tuple d2):
    return rq_add(n1, d1, p_neg(n2), d2)


cpdef tuple rq_mul(tuple n1, tuple d1, tuple n2, tuple d2):
    if not n1 or not n2:
        return (ZERO, ONE)
    if d1 == ONE and d2 == ONE:
        return (p_mul(n1, n2), ONE)
    if _is_qpow(d1) and _is_qpow(d2):
        return _laurent_pair(p_mul(n1, n2), len(d1) + len(d2) - 2)
    g1 = p_gcd(n1, d2)
    g2 = p_gcd(n2, d1)
    if g1 != ONE:
        n1 = p_divexact(n1, g1)
        d2 = p_divexact(d2, g1)
    if g2 != ONE:
        n2 = p_divexact(n2, g2)
        d1 = p_divexact(d1, g2)
    return (p_mul(n1, n2), p_mul(d1, d2))


cpdef tuple rq_inv(tuple n, tuple d):
    if not n:
        raise ZeroDivisionError("inverse of zero")
    if n[len(n) - 1] < 0:
        return (p_neg(d), p_neg(n))
    return (d, n)


cpdef tuple rq_div(tuple n1, tuple d1, tuple n2, tuple d2):
    n2, d2 = rq_inv(n2, d2)
    return rq_mul(n1, d1, n2, d2)


cpdef tuple rq_shift(tuple n, tuple d, Py_ssize_t k):
    cdef Py_ssize_t m, j
    if not n or k == 0:
        return (n, d)
    if _is_qpow(d):
        m = len(d) - 1 - k
        if m >= 0:
            return _laurent_pair(n, m)
        return (p_shift(n, -m), ONE)
    if k > 0:
        j = 0
        while j < k and not d[j]:
            j += 1
        return (p_shift(n, k - j), d[j:])
    k = -k
    j = 0
    while j < k and not n[j]:
        j += 1
    return (n[j:], p_shift(d, k - j))
