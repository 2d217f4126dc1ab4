import mpmath as mp

def ml_series_dps(a, b, g, z, dps):
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
            if n > 500000:
                raise RuntimeError("noconv")
        return +s, n

for (a, b, g, z, dps1, dps2) in [
    (0.9, 1.0, 1.0, -10.0, 60, 300),
    (1.2, 1.0, 1.0, -49.0, 65, 300),
    (1.2, 1.0, 1.0, -50.0, 65, 300),
    (1.2, 1.0, 1.0, -100.0, 80, 400),
    (0.9, 1.0, 1.0, -49.0, 95, 400),
    (0.3, 1.0, 1.0, -50.0, 200, 800),
    (0.3, 1.0, 1.0, -100.0, 400, 1200),
    (0.5, 1.5, 1.0, -80.0, 100, 300),
    (0.7, 0.7, 2.0, -30.0, 130, 400),
    (0.7, 1.3, 0.5, -60.0, 300, 700),
    (0.6, 0.6, 3.0, -12.0, 80, 300),
]:
    v1, n1 = ml_series_dps(a, b, g, z, dps1)
    v2, n2 = ml_series_dps(a, b, g, z, dps2)
    agree = abs(v1 - v2) / abs(v2)
    print(f"{a} {b} {g} {z}  n={n2}  agree={mp.nstr(agree, 3)}  ref={mp.nstr(v2, 18)}")
