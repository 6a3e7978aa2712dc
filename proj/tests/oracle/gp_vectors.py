#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Reference vectors for the lightweight generators and the DEK hash.

Each generator is re-derived here with Python integers; MT19937 comes from
numpy's bit generator. Output: tests/data/gp_vectors.txt, one line per case:
    <case> <start state, hex> <outputs, hex...>
"""
import sys

import numpy as np

M32 = (1 << 32) - 1
M64 = (1 << 64) - 1


def knuth_lcg(state, n):
    out = []
    for _ in range(n):
        state = (state * 6364136223846793005 + 1) & M64
        out.append(state >> 32)
    return out


def xorshift32(x, n):
    out = []
    for _ in range(n):
        x ^= (x << 13) & M32
        x ^= x >> 17
        x ^= (x << 5) & M32
        out.append(x)
    return out


def xorshift64star_native(x, n):
    out = []
    for _ in range(n):
        x ^= x >> 12
        x ^= (x << 25) & M64
        x ^= x >> 27
        out.append((x * 0x2545F4914F6CDD1D) & M64)
    return out


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M64


def xoroshiro128plus_native(s0, s1, n):
    out = []
    for _ in range(n):
        out.append((s0 + s1) & M64)
        s1 ^= s0
        s0 = rotl(s0, 55) ^ s1 ^ ((s1 << 14) & M64)
        s1 = rotl(s1, 36)
    return out


def minstd(x, n):
    out = []
    for _ in range(n):
        x1 = x * 16807 % 2147483647
        x2 = x1 * 16807 % 2147483647
        out.append(((x1 & 0xFFFF) << 16) | (x2 & 0xFFFF))
        x = x2
    return out


def mt19937(seed, n):
    bg = np.random.MT19937()
    bg._legacy_seeding(seed)
    return [int(v) for v in bg.random_raw(n)]


def tinymt32(seed, n):
    mat1, mat2, tmat = 0x8F7011EE, 0xFC78FF1F, 0x3793FDFF
    st = [seed, mat1, mat2, tmat]
    for i in range(1, 8):
        prev = st[(i - 1) & 3]
        st[i & 3] ^= (i + 1812433253 * (prev ^ (prev >> 30))) & M32
    if (st[0] & 0x7FFFFFFF) == 0 and st[1] == 0 and st[2] == 0 and st[3] == 0:
        st = [ord("T"), ord("I"), ord("N"), ord("Y")]

    def next_state():
        y = st[3]
        x = (st[0] & 0x7FFFFFFF) ^ st[1] ^ st[2]
        x ^= (x << 1) & M32
        y ^= (y >> 1) ^ x
        st[0], st[1] = st[1], st[2]
        st[2] = x ^ ((y << 10) & M32)
        st[3] = y
        if y & 1:
            st[1] ^= mat1
            st[2] ^= mat2

    def temper():
        t0 = st[3]
        t1 = (st[0] + (st[2] >> 8)) & M32
        t0 ^= t1
        if t1 & 1:
            t0 ^= tmat
        return t0

    for _ in range(8):
        next_state()
    out = []
    for _ in range(n):
        next_state()
        out.append(temper())
    return out


def lfsr16(state, n):
    # Fibonacci form of x^16 + x^15 + x^13 + x^4 + 1, shifting right; the
    # emitted bit is bit 0 and words collect bits first-emitted-first (MSB).
    out = []
    for _ in range(n):
        w = 0
        for _ in range(32):
            bit = state & 1
            fb = (state ^ (state >> 1) ^ (state >> 3) ^ (state >> 12)) & 1
            state = (state >> 1) | (fb << 15)
            w = (w << 1) | bit
        out.append(w)
    return out


def dek(data, init):
    h = init
    for b in data:
        h = (((h << 5) & M32) ^ (h >> 27)) ^ b
    return h


def line(case, start, values, width):
    return f"{case} {start:x} " + " ".join(f"{v:0{width}x}" for v in values)


def main():
    rows = [
        line("knuth-lcg", 0, knuth_lcg(0, 4), 8),
        line("knuth-lcg", 1, knuth_lcg(1, 4), 8),
        line("knuth-lcg", 42, knuth_lcg(42, 16), 8),
        line("xorshift32", 1, xorshift32(1, 16), 8),
        line("xorshift32", 0x7F4A7C15, xorshift32(0x7F4A7C15, 8), 8),
        line("xorshift64star-native", 1, xorshift64star_native(1, 8), 16),
        line("xorshift64star-native", 0x0123456789ABCDEF, xorshift64star_native(0x0123456789ABCDEF, 8), 16),
        line("xoroshiro128plus-native", (0x4567 << 64) | 0x0123, xoroshiro128plus_native(0x0123, 0x4567, 8), 16),
        line("xoroshiro128plus-native", 1, xoroshiro128plus_native(1, 0, 8), 16),
        line("minstd", 1, minstd(1, 8), 8),
        line("minstd", 123456789, minstd(123456789, 8), 8),
        line("mt19937", 5489, mt19937(5489, 16), 8),
        line("mt19937", 1, mt19937(1, 16), 8),
        line("tinymt32", 1, tinymt32(1, 16), 8),
        line("tinymt32", 0x12345678, tinymt32(0x12345678, 8), 8),
        line("lfsr16", 1, lfsr16(1, 8), 8),
        line("lfsr16", 0xACE1, lfsr16(0xACE1, 8), 8),
    ]
    for text, init in [(b"", 0), (b"a", 0), (b"abc", 0), (b"abc", 3), (bytes(range(256)), 1024), (b"\xff" * 37, 0xDEADBEEF)]:
        rows.append(f"dek {init:x} {text.hex() or '-'} {dek(text, init):08x}")
    out = open(sys.argv[1], "w") if len(sys.argv) > 1 else sys.stdout
    out.write("# case start outputs (hex); dek rows: init data digest\n")
    out.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
