"""Independent reference values for the C++ test suite.

Everything here uses Python's fractions / mpmath / brute force, never the C++
code paths. Run: python3 tests/oracles/oracles.py
"""
from fractions import Fraction as F
from itertools import combinations
from math import comb, factorial, lgamma, log, exp, sqrt, pi
import mpmath as mp

mp.mp.dps = 40


def lam_all(t):
    return -0.5 * mp.log(1 - t) - t / 2 - t * t / 4


def wright_e(r):
    return F(factorial(6 * r), 2 ** (5 * r) * 3 ** (2 * r) * factorial(3 * r) * factorial(2 * r))


def big_A(y, mu, terms=400):
    w = mp.mpf(0.5) * mp.power(3, mp.mpf(2) / 3) * mu
    s = mp.mpf(0)
    for k in range(terms):
        s += (w ** k if k else 1) / mp.factorial(k) * mp.rgamma((y + 1 - 2 * k) / mp.mpf(3))
    return mp.exp(-mu ** 3 / 6) / mp.power(3, (y + 1) / mp.mpf(3)) * s


def excess_p(r, mu):
    return mp.sqrt(2 * mp.pi) * mp.mpf(wright_e(r).numerator) / wright_e(r).denominator * big_A(3 * r + mp.mpf(0.5), mu)


# --- series over Fractions -------------------------------------------------
def smul(a, b, N):
    c = [F(0)] * (N + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(0, N + 1 - i):
            c[i + j] += ai * b[j]
    return c


def sexp(a, N):
    # a[0] == 0 ; e' = a' e
    e = [F(0)] * (N + 1)
    e[0] = F(1)
    for m in range(1, N + 1):
        e[m] = sum(k * a[k] * e[m - k] for k in range(1, m + 1)) / m
    return e


def spow(a, p, N):
    r = [F(0)] * (N + 1)
    r[0] = F(1)
    for _ in range(p):
        r = smul(r, a, N)
    return r


def tree(N):
    return [F(0)] + [F(n ** (n - 1), factorial(n)) for n in range(1, N + 1)]


def egf_prob(n, M, Lset, k):
    N = n
    T = tree(N)
    T2 = smul(T, T, N)
    W1 = [T[i] - T2[i] / 2 for i in range(N + 1)]
    lamL = [F(0)] * (N + 1)
    lamA = [F(0)] * (N + 1)
    Tp = spow(T, 2, N)
    for l in range(3, N + 1):
        Tp = smul(Tp, T, N)
        for i in range(N + 1):
            lamA[i] += Tp[i] / (2 * l)
            if l in Lset:
                lamL[i] += Tp[i] / (2 * l)
    a = spow(W1, n - M, N)
    b = spow(lamL, k, N)
    e = sexp([lamA[i] - lamL[i] for i in range(N + 1)], N)
    prod = smul(smul(a, b, N), e, N)
    return F(factorial(n), comb(comb(n, 2), M) * factorial(n - M) * factorial(k)) * prod[n]


def unrank(i):
    v = 1
    while v * (v + 1) // 2 <= i:
        v += 1
    return (i - v * (v - 1) // 2, v)


def brute(n, M, Lset):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    dist = {}
    cplx = 0
    total = 0
    for es in combinations(pairs, M):
        total += 1
        parent = list(range(n))

        def f(x):
            while parent[x] != x:
                x = parent[x]
            return x
        for u, v in es:
            a, b = f(u), f(v)
            if a != b:
                parent[a] = b
        comp_v, comp_e = {}, {}
        for x in range(n):
            comp_v[f(x)] = comp_v.get(f(x), 0) + 1
        for u, v in es:
            comp_e[f(u)] = comp_e.get(f(u), 0) + 1
        if any(comp_e.get(c, 0) > comp_v[c] for c in comp_v):
            cplx += 1
            continue
        # cycle lengths by peeling
        deg = [0] * n
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        alive = [True] * n
        changed = True
        while changed:
            changed = False
            for x in range(n):
                if alive[x] and deg[x] <= 1:
                    alive[x] = False
                    changed = True
                    for u, v in es:
                        if u == x and alive[v]:
                            deg[v] -= 1
                        if v == x and alive[u]:
                            deg[u] -= 1
        k = 0
        for c in comp_v:
            if comp_e.get(c, 0) == comp_v[c]:
                ln = sum(1 for x in range(n) if alive[x] and f(x) == c)
                if ln in Lset:
                    k += 1
        dist[k] = dist.get(k, 0) + 1
    return {k: F(c, total) for k, c in dist.items()}, F(cplx, total)


def poisson_pmf_exact(lam, k):
    return mp.exp(-lam + k * mp.log(lam) - mp.loggamma(k + 1))


def kolchin(lam, k):
    rho = (k - lam) / mp.sqrt(lam)
    return 1 / mp.sqrt(2 * mp.pi * lam) * mp.exp(-rho ** 2 / 2) * (1 + (rho ** 3 - rho) / (6 * mp.sqrt(lam)))


def expected_isolated_cycles(n, M):
    """E[number of unicyclic components] in G(n, M), summed over component size v.

    Unicyclic graphs on v labelled vertices: (v!/2v) * sum_{j<=v-3} v^j/j!.
    """
    N = n * (n - 1) // 2

    def lbin(a, b):
        return mp.loggamma(a + 1) - mp.loggamma(b + 1) - mp.loggamma(a - b + 1)

    base = lbin(N, M)
    total = mp.mpf(0)
    for v in range(3, min(n, M) + 1):
        rest = (n - v) * (n - v - 1) // 2
        if M - v > rest:
            continue
        lu = mp.loggamma(v + 1) - mp.log(2 * v) + v + mp.log(mp.gammainc(v - 2, v, regularized=True))
        term = mp.exp(lbin(n, v) + lu + lbin(rest, M - v) - base)
        total += term
        if v > 50 and term < mp.mpf(10) ** -30:
            break
    return total


if __name__ == "__main__":
    print("lambda_{3,4,5}(0.5) =", F(1, 48) + F(1, 128) + F(1, 320), float(F(1, 48) + F(1, 128) + F(1, 320)))
    print("lambda_all(0.5) =", lam_all(mp.mpf(0.5)))
    z = mp.exp(-mp.power(10 ** 5, -mp.mpf(1) / 3))
    print("zstar(1e5) =", z, "lambda_all =", lam_all(z), "exp(-lam)=", mp.exp(-lam_all(z)))
    print("exp(-lambda345) =", mp.exp(-mp.mpf(61) / 1920))
    for r in range(4):
        print("e_%d =" % r, wright_e(r))
    print("A(1/2,0) =", big_A(mp.mpf(0.5), 0), "1/sqrt(3pi)=", 1 / mp.sqrt(3 * mp.pi))
    print("sum p_r mu=0 r<=50:", sum(excess_p(r, 0) for r in range(51)))
    print("sum p_r mu=1 r<=80:", sum(excess_p(r, 1) for r in range(81)))
    print("p_0..3 mu=0:", [mp.nstr(excess_p(r, 0), 12) for r in range(4)])
    print("p_0..3 mu=1:", [mp.nstr(excess_p(r, 1), 12) for r in range(4)])
    print("p_0..3 mu=-1:", [mp.nstr(excess_p(r, -1), 12) for r in range(4)])
    print("A(3.5,1) =", big_A(mp.mpf(3.5), 1), "A(2,-0.7)=", big_A(mp.mpf(2), mp.mpf(-0.7)))
    for r in (10, 20, 50, 100, 200):
        e = wright_e(r)
        bound = mp.power(r, -0.5) * mp.power(3 * r / (2 * mp.e), r)
        print("e_r bound r=%d" % r, mp.nstr(mp.mpf(e.numerator) / e.denominator / bound, 8))
    # kolchin
    for lam in (100, 1000, 10000):
        for rho in (0, 1, -1, 2, -2):
            k = round(lam + rho * sqrt(lam))
            rr = (k - lam) / sqrt(lam)
            ex = poisson_pmf_exact(mp.mpf(lam), k)
            rel = abs(kolchin(mp.mpf(lam), k) / ex - 1)
            print("kolchin lam=%d k=%d rho=%.4f rel=%s bound=%s" % (lam, k, rr, mp.nstr(rel, 5), 4 * (1 + rr ** 6) / lam))
    print("kolchin(1e4,1e4)", kolchin(mp.mpf(10 ** 4), 10 ** 4))
    # brute force vs egf
    for (n, M, L) in [(4, 3, {3}), (4, 3, {4}), (3, 3, {3}), (5, 4, {3, 4}), (6, 5, {3})]:
        d, c = brute(n, M, L)
        eg = {k: egf_prob(n, M, L, k) for k in range(n // 3 + 1)}
        print("n=%d M=%d L=%s brute=%s complex=%s egf=%s" % (n, M, sorted(L), {k: str(v) for k, v in sorted(d.items())}, c, {k: str(v) for k, v in eg.items()}))
    for k in range(3):
        print("egf(30,9,{3},%d)=" % k, egf_prob(30, 9, {3}, k).limit_denominator(10**30), float(egf_prob(30, 9, {3}, k)))
    for k in range(3):
        v = egf_prob(50, 15, {3, 4}, k)
        print("egf(50,15,{3,4},%d)=%.17g" % (k, float(v)))
    # Stirling prefactor ratio
    for n in (1000, 2000, 4000, 10000):
        M = n // 4
        ex = mp.loggamma(n + 1) - (mp.loggamma(comb(n, 2) + 1) - mp.loggamma(M + 1) - mp.loggamma(comb(n, 2) - M + 1)) - mp.loggamma(n - M + 1)
        n_, M_ = mp.mpf(n), mp.mpf(M)
        st = 0.5 * mp.log(2 * mp.pi * n_ * M_ / (n_ - M_)) + M_ * mp.log(2) + n_ * mp.log(n_) + M_ * mp.log(M_) - 2 * M_ * mp.log(n_) - (n_ - M_) * mp.log(n_ - M_) - 2 * M_ + M_ / n_ + M_ ** 2 / n_ ** 2
        print("stirling ratio n=%d: %s" % (n, mp.nstr(mp.exp(st - ex) - 1, 8)))
    # first moment of the all-lengths count
    for n in (6, 10000, 100000):
        print("E[X_all] n=%d M=%d: %s" % (n, n // 2 if n > 6 else 5, mp.nstr(expected_isolated_cycles(n, n // 2 if n > 6 else 5), 12)))
