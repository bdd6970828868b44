"""Pure-Python kernels for dense integer polynomials in q and canonical
fractions of them.

A polynomial is a tuple of ints, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.  A fraction is a pair ``(num, den)``
in canonical form: ``gcd(num, den) == 1`` in Z[q] (integer content
included), ``den`` has a positive leading coefficient, and zero is
``((), (1,))``.

The compiled module ``_kernels_c`` exports the same functions.
"""

from math import gcd as igcd, isqrt

BACKEND = "python"

ONE = (1,)
ZERO = ()

_QPOW = [ONE]


def qpow(m):
    """Return the polynomial ``q**m`` for ``m >= 0``."""
    while len(_QPOW) <= m:
        _QPOW.append((0,) * len(_QPOW) + (1,))
    return _QPOW[m]


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    c = list(a)
    for i, v in enumerate(b):
        c[i] += v
    if len(a) == len(b):
        return _strip(c)
    return tuple(c)


def p_neg(a):
    return tuple(-v for v in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_scale(a, s):
    if not s:
        return ZERO
    return tuple(v * s for v in a)


def p_shift(a, n):
    """Multiply by ``q**n`` (``n >= 0``)."""
    if not n or not a:
        return a
    return (0,) * n + a


def p_mul(a, b):
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return p_scale(b, a[0])
    if len(b) == 1:
        return p_scale(a, b[0])
    c = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                c[i + j] += u * v
    return tuple(c)


def p_content(a):
    g = 0
    for v in a:
        g = igcd(g, v)
        if g == 1:
            break
    return g


def p_divexact(a, b):
    """Exact quotient ``a / b`` in Z[q], or ``None`` if ``b`` does not divide ``a``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return None
    lc = b[-1]
    if db == 0:
        out = []
        for v in a:
            qv, r = divmod(v, lc)
            if r:
                return None
            out.append(qv)
        return tuple(out)
    r = list(a)
    quo = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        top = r[k + db]
        if top:
            qv, rem = divmod(top, lc)
            if rem:
                return None
            quo[k] = qv
            for j in range(db + 1):
                r[k + j] -= qv * b[j]
    if any(r[:db]):
        return None
    return tuple(quo)


def _primitive(a):
    c = p_content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(v // c for v in a)


def _prem(f, g):
    """Pseudo-remainder of ``f`` by ``g``."""
    df, dg = len(f) - 1, len(g) - 1
    r = list(f)
    lc = g[-1]
    for k in range(df - dg, -1, -1):
        top = r[k + dg]
        r = [v * lc for v in r]
        if top:
            for j in range(dg + 1):
                r[k + j] -= top * g[j]
    return _strip(r[:dg])


def _prs_gcd(f, g):
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, (_primitive(r) if r else ZERO)
    return _primitive(f)


def _heu_interp(h, x):
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return tuple(out)


def _peval(a, x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc


def p_gcd(f, g):
    """Greatest common divisor in Z[q] with positive leading coefficient."""
    if not f:
        return g if not g or g[-1] > 0 else p_neg(g)
    if not g:
        return f if f[-1] > 0 else p_neg(f)
    # common power of q
    sf = 0
    while not f[sf]:
        sf += 1
    sg = 0
    while not g[sg]:
        sg += 1
    s = min(sf, sg)
    if sf:
        f = f[sf:]
    if sg:
        g = g[sg:]
    cf, cg = p_content(f), p_content(g)
    c = igcd(cf, cg)
    if len(f) == 1 or len(g) == 1:
        return p_shift((c,), s)
    if cf != 1:
        f = tuple(v // cf for v in f)
    if cg != 1:
        g = tuple(v // cg for v in g)
    if f == g or f == p_neg(g):
        h = f if f[-1] > 0 else p_neg(f)
        return p_shift(p_scale(h, c), s)
    nf = max(abs(v) for v in f)
    ng = max(abs(v) for v in g)
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


def _is_qpow(d):
    # denominators of Laurent polynomials are exactly q**m
    return d[-1] == 1 and (len(d) == 1 or d.count(0) == len(d) - 1)


def _laurent_pair(n, m):
    if not n:
        return ZERO, ONE
    k = 0
    while k < m and not n[k]:
        k += 1
    if k:
        n = n[k:]
        m -= k
    return n, qpow(m)


def rq_canon(n, d):
    """Bring an arbitrary pair to canonical form."""
    n = _strip(n)
    d = _strip(d)
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n:
        return ZERO, ONE
    g = p_gcd(n, d)
    if d[-1] < 0:
        g = p_neg(g)
    if g != ONE:
        n = p_divexact(n, g)
        d = p_divexact(d, g)
    return n, d


def rq_add(n1, d1, n2, d2):
    if not n1:
        return n2, d2
    if not n2:
        return n1, d1
    if d1 == ONE and d2 == ONE:
        n = p_add(n1, n2)
        return (n, ONE) if n else (ZERO, ONE)
    if _is_qpow(d1) and _is_qpow(d2):
        m1, m2 = len(d1) - 1, len(d2) - 1
        m = m1 if m1 > m2 else m2
        n = p_add(p_shift(n1, m - m1), p_shift(n2, m - m2))
        return _laurent_pair(n, m)
    if d1 == d2:
        n = p_add(n1, n2)
        if not n:
            return ZERO, ONE
        g = p_gcd(n, d1)
        if g == ONE:
            return n, d1
        return p_divexact(n, g), p_divexact(d1, g)
    g = p_gcd(d1, d2)
    if g == ONE:
        return p_add(p_mul(n1, d2), p_mul(n2, d1)), p_mul(d1, d2)
    e1 = p_divexact(d1, g)
    e2 = p_divexact(d2, g)
    n = p_add(p_mul(n1, e2), p_mul(n2, e1))
    if not n:
        return ZERO, ONE
    h = p_gcd(n, g)
    if h != ONE:
        n = p_divexact(n, h)
        d2 = p_divexact(d2, h)
    return n, p_mul(e1, d2)


def rq_sub(n1, d1, n2, d2):
    return rq_add(n1, d1, p_neg(n2), d2)


def rq_mul(n1, d1, n2, d2):
    if not n1 or not n2:
        return ZERO, ONE
    if d1 == ONE and d2 == ONE:
        return p_mul(n1, n2), ONE
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
    return p_mul(n1, n2), p_mul(d1, d2)


def rq_inv(n, d):
    if not n:
        raise ZeroDivisionError("inverse of zero")
    if n[-1] < 0:
        return p_neg(d), p_neg(n)
    return d, n


def rq_div(n1, d1, n2, d2):
    n2, d2 = rq_inv(n2, d2)
    return rq_mul(n1, d1, n2, d2)


def rq_shift(n, d, k):
    """Multiply a canonical fraction by ``q**k`` (any integer ``k``)."""
    if not n or not k:
        return n, d
    if _is_qpow(d):
        m = len(d) - 1 - k
        if m >= 0:
            return _laurent_pair(n, m)
        return p_shift(n, -m), ONE
    if k > 0:
        # strip q factors from the denominator first
        j = 0
        while j < k and not d[j]:
            j += 1
        return p_shift(n, k - j), d[j:]
    k = -k
    j = 0
    while j < k and not n[j]:
        j += 1
    return n[j:], p_shift(d, k - j)
