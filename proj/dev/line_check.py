import mpmath as mp

mp.mp.dps = 40

def integrand(a, b, g, x, c, t):
    xi = mp.mpc(c, t)
    L = (mp.loggamma(-xi) + mp.loggamma(g + xi)
         - mp.loggamma(b + a * xi) + xi * mp.log(x))
    return mp.e ** L

def line_value(a, b, g, x, c, T):
    val = mp.quad(lambda t: mp.re(integrand(a, b, g, x, c, t)),
                  [0, 1, 3, 8, 20, T]) / mp.pi
    return val / mp.gamma(g)

def series_clean(a, b, g, z, dps):
    a, b, g, z = mp.mpf(a), mp.mpf(b), mp.mpf(g), mp.mpf(z)
    with mp.workdps(dps):
        s = mp.mpf(0); t = mp.mpf(1); n = 0
        while True:
            term = t / mp.gamma(a * n + b)
            s += term
            if n > 8 and abs(term) < mp.mpf(10) ** (-dps + 5) * (abs(s) + mp.mpf("1e-300")):
                break
            t = t * z * (g + n) / (n + 1); n += 1
            if n > 500000:
                raise RuntimeError("noconv")
        return +s

for (a, b, g, x, dps) in [
    (0.9, 1.0, 1.0, 10.0, 60),
    (1.2, 1.0, 1.0, 49.0, 100),
    (1.5, 1.0, 1.0, 10.0, 60),
]:
    c = -min(g, 1.0) / 2
    sv = series_clean(a, b, g, -x, dps)
    lv30 = line_value(a, b, g, x, c, 30)
    lv60 = line_value(a, b, g, x, c, 60)
    lv120 = line_value(a, b, g, x, c, 120)
    print(f"a={a} x={x}")
    print("  series  =", mp.nstr(sv, 18))
    print("  line T30=", mp.nstr(lv30, 18))
    print("  line T60=", mp.nstr(lv60, 18))
    print("  lineT120=", mp.nstr(lv120, 18))
    for t in [0.7, 3.3, 7.9, 15.1, 24.0]:
        print(f"    f({t}) =", mp.nstr(integrand(a, b, g, x, c, t), 17))
