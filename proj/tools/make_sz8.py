#!/usr/bin/env python3
"""Regenerate data/sz8.gens: two permutations generating Sz(8) on the 65 points
of the Suzuki-Tits ovoid in PG(3,8).

The 4x4 matrices below (unipotent S(a,b), torus M(l), and the antidiagonal w)
generate Sz(8) < Sp4(8). We take the orbit of (0:0:0:1) under them (the ovoid),
then search for a pair of words generating the full group of order 29120.
"""
import random
import sys

from sympy.combinatorics import Permutation, PermutationGroup

# GF(8) = GF(2)[x]/(x^3 + x + 1), elements as 3-bit ints.
def gmul(a, b):
    r = 0
    for _ in range(3):
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 8:
            a ^= 0b1011
    return r

def gpow(a, e):
    r = 1
    e %= 7
    if a == 0:
        return 0 if e else 1
    for _ in range(e):
        r = gmul(r, a)
    return r

def ginv(a):
    return gpow(a, 6)

theta = lambda a: gpow(a, 4) if a else 0

def S(a, b):
    return [
        [1, 0, 0, 0],
        [a, 1, 0, 0],
        [b, theta(a), 1, 0],
        [gmul(gpow(a, 2), theta(a)) ^ gmul(a, b) ^ theta(b),
         gmul(a, theta(a)) ^ b, a, 1],
    ]

def M(l):
    # n = 1 for q = 8: diag(l^3, l^2, l^-2, l^-3)
    return [[gpow(l, 3), 0, 0, 0], [0, gpow(l, 2), 0, 0],
            [0, 0, ginv(gpow(l, 2)), 0], [0, 0, 0, ginv(gpow(l, 3))]]

W = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]

def vecmat(v, m):
    out = [0, 0, 0, 0]
    for j in range(4):
        s = 0
        for i in range(4):
            s ^= gmul(v[i], m[i][j])
        out[j] = s
    return tuple(out)

def normalize(v):
    for c in v:
        if c:
            inv = ginv(c)
            return tuple(gmul(inv, x) for x in v)
    raise ValueError("zero vector")

def main():
    gens = [S(1, 0), S(0, 1), M(2), W]
    start = (0, 0, 0, 1)
    orbit = [start]
    seen = {start: 0}
    k = 0
    while k < len(orbit):
        for g in gens:
            w = normalize(vecmat(orbit[k], g))
            if w not in seen:
                seen[w] = len(orbit)
                orbit.append(w)
        k += 1
    assert len(orbit) == 65, len(orbit)
    perms = [Permutation([seen[normalize(vecmat(p, g))] for p in orbit]) for g in gens]
    group = PermutationGroup(perms)
    assert group.order() == 29120, group.order()
    rng = random.Random(8)

    def random_word():
        w = Permutation(list(range(65)))
        for _ in range(40):
            w = w * rng.choice(perms)
        return w

    while True:
        a, b = random_word(), random_word()
        if PermutationGroup([a, b]).order() == 29120:
            break
    out = sys.stdout
    out.write("degree 65\n")
    for p in (a, b):
        cyc = p.cyclic_form
        out.write("".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cyc) or "()")
        out.write("\n")

if __name__ == "__main__":
    main()
