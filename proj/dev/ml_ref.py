import sys
import math
import mpmath as mp


def peak_log10(a, b, g, z):
    # rough log10 of the largest series term, scanning n geometrically
    best = 0.0
    n = 1
    while n < 3_000_000:
        lt = (n * math.log(abs(z)) - math.lgamma(a * n + b)
              + math.lgamma(g + n) - math.lgamma(g) - math.lgamma(n + 1))
        if lt > best:
            best = lt
        n = max(n + 1, int(n * 1.3))
    return best / math.log(10)


def series(a, b, g, z, dps):
    a, b, g, z = mp.mpf(a), mp.mpf(b), mp.mpf(g), mp.mpf(z)
    with mp.workdps(dps):
        s = mp.mpf(0)
        t = mp.mpf(1)
        n = 0
        while True:
            term = t / mp.gamma(a * n + b)
            s += term
            if n > 8 and abs(term) < mp.mpf(10) ** (-dps + 5) * (abs(s) + mp.mpf("1e-300")):
                break
            t = t * z * (g + n) / (n + 1)
            n += 1
            if n > 500_000:
                raise RuntimeError("series too long")
        return +s


def mb_line(a, b, g, z):
    a, b, g = mp.mpf(a), mp.mpf(b), mp.mpf(g)
    x = -mp.mpf(z)
    c = -min(g, mp.mpf(1)) / 2
    with mp.workdps(40):
        lx = mp.log(x)

        def f(t):
            xi = mp.mpc(c, t)
            L = (mp.loggamma(-xi) + mp.loggamma(g + xi)
                 - mp.loggamma(b + a * xi) + xi * lx)
            return mp.re(mp.e ** L)

        T = 75 / (2 - float(a)) + 40
        val = mp.quad(f, [0, 1, 3, 8, 20, T]) / mp.pi
        return val / mp.gamma(g)


def ml3(a, b, g, z):
    if a == 1.0 and z < 0:
        with mp.workdps(60):
            return mp.hyp1f1(mp.mpf(g), mp.mpf(b), mp.mpf(z)) / mp.gamma(mp.mpf(b))
    if z >= 0:
        return series(a, b, g, z, 50)
    digits = peak_log10(a, b, g, z)
    if digits <= 120:
        return series(a, b, g, z, int(digits) + 60)
    return mb_line(a, b, g, z)


for ln in sys.stdin.read().split("\n"):
    parts = ln.split()
    if len(parts) < 5 or parts[4] == "EXC":
        if parts:
            print(ln, "SKIP")
        continue
    a, b, g, z = (float(parts[0]), float(parts[1]), float(parts[2]),
                  float(parts[3]))
    v = mp.mpf(parts[4])
    ref = ml3(a, b, g, z)
    rel = abs(v - ref) / (abs(ref) + mp.mpf("1e-300"))
    flag = "OK " if rel < 1e-10 else "BAD"
    print(f"{flag} {a} {b} {g} {z} rel={mp.nstr(rel, 3)} ref={mp.nstr(ref, 18)}")
