# Copyright 2026 The hgff Authors
# SPDX-License-Identifier: Apache-2.0
#
# Independent brute-force values for the prime-field test examples. Pure
# Python, no hgff code. Output is frozen into tests/test_varieties.cpp and
# tests/test_characters.cpp.

def prim_root(p):
    for g in range(2, p):
        if len({pow(g, k, p) for k in range(p - 1)}) == p - 1:
            return g
    return 1

def legendre(x, p):
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1

def trace_E(l, p):
    return -sum(legendre((1 - x) * (1 - l * x * x), p) for x in range(p))

def b_K3(l, p):
    return sum(legendre((1 - l * x * y) * x * (1 - x) * y * (1 - y), p) for x in range(p) for y in range(p))

def dwork_F1(l, p):
    p4 = [pow(x, 4, p) for x in range(p)]
    cnt = 0
    for a in range(p):
        for b in range(p):
            for c in range(p):
                s = p4[a] + p4[b] + p4[c]
                m = 4 * l * a * b * c
                for d in range(p):
                    if (s + p4[d] - m * d) % p == 0:
                        cnt += 1
    N = (cnt - 1) // (p - 1)
    u = legendre(1 - l * l, p)
    v = legendre(1 + l * l, p)
    q4 = (p - 1) // 4
    g = prim_root(p)
    sig_m1 = 1 if ((p - 1) // 2 * q4) % (p - 1) == 0 else -1
    w = u * v * sig_m1
    return N - (1 + p * p + p + 3 * u * p + 3 * v * p + 12 * w * p)

if __name__ == "__main__":
    print("prim roots", {p: prim_root(p) for p in (3, 5, 7, 11, 13)})
    print("dlog_7(6)", [k for k in range(6) if pow(3, k, 7) == 6])
    print("jacobi_5(e,e)", -sum(1 for x in range(5) if x not in (0, 1)))
    print("jacobi_7(phi,phi)", -sum(legendre(x, 7) * legendre(1 - x, 7) for x in range(7)))
    for p in (5, 13):
        print("a", p, [trace_E(l, p) for l in range(2, p)])
        print("b", p, [b_K3(l, p) for l in range(2, p)])
    print("F1 13", {l: dwork_F1(l, 13) for l in range(1, 13) if pow(l, 4, 13) != 1})
