"""Independent sympy model of R[t0] used to freeze test values.

Elements of R[t0] are modelled at a finite level d: project to
Q[t0, t1..td] by summing over increasing maps, multiply there, decode
by keeping the prefix-support terms. odot is Q_D followed by the same
decode. Run: python3 tests/oracles/rt0_oracle.py
"""
from itertools import combinations

import sympy as sp

D = 8
t = sp.symbols("t0:%d" % (D + 1))


def terms(expr):
    return sp.Poly(sp.expand(expr), *t).terms() if expr != 0 else []


def project(expr, d):
    out = 0
    for mon, c in terms(expr):
        n = max([i for i in range(1, len(mon)) if mon[i] > 0], default=0)
        for alpha in combinations(range(1, d + 1), n):
            term = c * t[0] ** mon[0]
            for i in range(1, n + 1):
                term *= t[alpha[i - 1]] ** mon[i]
            out += term
    return sp.expand(out)


def decode(expr):
    out = 0
    for mon, c in terms(expr):
        supp = [i for i in range(1, len(mon)) if mon[i] > 0]
        if supp == list(range(1, len(supp) + 1)):
            out += c * sp.prod([t[i] ** mon[i] for i in range(len(mon))])
    return sp.expand(out)


def degree(expr):
    return max(sum(m) for m, _ in terms(expr)) if expr != 0 else 0


def dot(x, y):
    d = degree(x) + degree(y)
    return decode(project(x, d) * project(y, d))


def dot_pow(x, k):
    r = sp.Integer(1)
    for _ in range(k):
        r = dot(r, x)
    return r


def iota(x):
    out = 0
    for mon, c in terms(x):
        n = max([i for i in range(1, len(mon)) if mon[i] > 0], default=0)
        rev = sp.prod([t[i] ** mon[n + 1 - i] for i in range(1, n + 1)])
        out += c * dot(dot_pow(-t[0] - t[1], mon[0]), rev)
    return sp.expand(out)


def q_k(f, g, k):
    """Q_k for monomials f, g given as exponent lists [a0, a1, ..]."""
    n, m = len(f) - 1, len(g) - 1
    total = 0
    for j in range(1, k + 1):
        left = sum(t[0] ** f[0] * sp.prod([t[a[i]] ** f[i + 1] for i in range(n)])
                   for a in combinations(range(1, j), n))
        shifted = sum(t[i] for i in range(j + 1))
        right = sum(shifted ** g[0] * sp.prod([t[b[i]] ** g[i + 1] for i in range(m)])
                    for b in combinations(range(j + 1, k + 1), m))
        total += left * t[j] * right
    return sp.expand(total)


def exps(mon):
    e = list(mon)
    while len(e) > 1 and e[-1] == 0:
        e.pop()
    return e


def odot(x, y):
    out = 0
    for mx, cx in terms(x):
        for my, cy in terms(y):
            f, g = exps(mx), exps(my)
            out += cx * cy * decode(q_k(f, g, sum(f) + sum(g) + 1))
    return sp.expand(out)


if __name__ == "__main__":
    one = sp.Integer(1)
    print("t1.t1 =", dot(t[1], t[1]))
    print("t1.t1t2 =", dot(t[1], t[1] * t[2]))
    print("iota(t0^2 t1) =", iota(t[0] ** 2 * t[1]))
    print("iota(t1 t2^2) =", iota(t[1] * t[2] ** 2))
    print("iota(t0 t1 t2) =", iota(t[0] * t[1] * t[2]))
    print("Q_3(1,1) =", q_k([0], [0], 3))
    print("Q_2(t0,1) =", q_k([1], [0], 2))
    print("1 (*) t0 =", odot(one, t[0]))
    print("1 (*) (t0+t1) =", odot(one, t[0] + t[1]))
    print("t0 (*) t0 =", odot(t[0], t[0]))
    print("t1 (*) t0 =", odot(t[1], t[0]))
    print("t0^2 (*) t0 =", odot(t[0] ** 2, t[0]))
    print("1 (*) t0^2 =", odot(one, t[0] ** 2))
    p = one
    for n in range(1, 7):
        print("1^(*)%d =" % n, p)
        p = odot(p, one)
    s = t[0] + t[1]
    for n in range(0, 4):
        lhs = odot(one, dot_pow(s, n))
        print("identity n=%d:" % n, sp.expand(lhs - dot(t[1], dot_pow(s, n))) == 0)
