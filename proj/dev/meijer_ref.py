import sys
import mpmath as mp

mp.mp.dps = 40

for ln in sys.stdin.read().split("\n"):
    parts = ln.split()
    if not parts or parts[0] == "EXC":
        if parts:
            print(ln)
        continue
    m, n, p, q = (int(parts[0]), int(parts[1]), int(parts[2]), int(parts[3]))
    vals = [mp.mpf(x) for x in parts[4:4 + p + q]]
    a = vals[:p]
    b = vals[p:]
    z = mp.mpf(parts[4 + p + q])
    v = mp.mpf(parts[5 + p + q])
    ref = mp.meijerg([a[:n], a[n:]], [b[:m], b[m:]], z)
    rel = abs(v - ref) / (abs(ref) + mp.mpf("1e-300"))
    flag = "OK " if rel < 1e-10 else "BAD"
    print(f"{flag} m={m} n={n} p={p} q={q} z={float(z)} rel={mp.nstr(rel, 3)} ref={mp.nstr(ref, 18)}")
