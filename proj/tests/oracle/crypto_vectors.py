#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Reference values for crypto generator internals, from hashlib and the
`cryptography` AES implementation.

Writes tests/data/crypto_vectors.txt with `key = hex` lines grouped by case:
  * Hash_DRBG and CTR_DRBG working state after instantiate, for the first
    vectors of tests/data/drbg_vectors.rsp;
  * Sha256Prng words and state;
  * Fortuna key, counter and output for two requests.
"""
import hashlib
import sys
from pathlib import Path

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

DATA = Path(__file__).resolve().parents[1] / "data"


def sha256(*parts):
    h = hashlib.sha256()
    for p in parts:
        h.update(p)
    return h.digest()


def hash_df(data, out_bits):
    out = b""
    counter = 1
    while len(out) * 8 < out_bits:
        out += sha256(bytes([counter]), out_bits.to_bytes(4, "big"), data)
        counter += 1
    return out[: out_bits // 8]


def aes_ecb(key, block):
    enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
    return enc.update(block) + enc.finalize()


def ctr_update(provided, key, v):
    temp = b""
    while len(temp) < 32:
        v = ((int.from_bytes(v, "big") + 1) % (1 << 128)).to_bytes(16, "big")
        temp += aes_ecb(key, v)
    temp = bytes(a ^ b for a, b in zip(temp[:32], provided))
    return temp[:16], temp[16:]


def parse_rsp(path):
    sections, cur = [], None
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if line.startswith("[") and ("SHA-256" in line or "AES-128" in line):
            cur = {"name": line.strip("[]"), "cases": []}
            sections.append(cur)
        elif line.startswith("COUNT"):
            cur["cases"].append({"COUNT": line.split("=")[1].strip()})
        elif "=" in line and cur and cur["cases"]:
            k, v = (s.strip() for s in line.split("=", 1))
            cur["cases"][-1].setdefault(k, v)
    return sections


def main():
    rows = []
    sections = parse_rsp(DATA / "drbg_vectors.rsp")
    for sec in sections:
        for case in sec["cases"]:
            i = case["COUNT"]
            e = bytes.fromhex(case["EntropyInput"])
            n = bytes.fromhex(case["Nonce"])
            p = bytes.fromhex(case["PersonalizationString"])
            if sec["name"] == "SHA-256":
                v = hash_df(e + n + p, 440)
                c = hash_df(b"\x00" + v, 440)
                rows += [f"[hash-drbg-instantiate {i}]", f"V = {v.hex()}", f"C = {c.hex()}"]
            else:
                key, v = ctr_update(bytes(a ^ b for a, b in zip(e, p.ljust(32, b"\0"))), bytes(16), bytes(16))
                rows += [f"[ctr-drbg-instantiate {i}]", f"Key = {key.hex()}", f"V = {v.hex()}"]

    seed = bytes(range(32))
    state = sha256(seed)
    words = []
    states = [state]
    for _ in range(3):
        out = sha256(state)
        words += [int.from_bytes(out[j : j + 4], "little") for j in range(0, 32, 4)]
        state = ((int.from_bytes(state, "big") + int.from_bytes(out, "big") + 1) % (1 << 256)).to_bytes(32, "big")
        states.append(state)
    rows += ["[sha256prng]", f"Seed = {seed.hex()}", f"State0 = {states[0].hex()}", f"State3 = {states[3].hex()}",
             "Words = " + "".join(w.to_bytes(4, "big").hex() for w in words)]

    key = sha256(sha256(seed))
    counter = 1

    def blocks(key, counter, n):
        out = b""
        for _ in range(n):
            out += aes_ecb(key[:16], counter.to_bytes(16, "little"))
            counter = (counter + 1) % (1 << 128)
        return out, counter

    rows += ["[fortuna]", f"Seed = {seed.hex()}", f"Key0 = {key.hex()}"]
    out1, counter = blocks(key, counter, 3)  # 40-byte request -> 3 blocks
    key, counter = blocks(key, counter, 2)
    out2, counter = blocks(key, counter, 2)
    key, counter = blocks(key, counter, 2)
    rows += [f"Output1 = {out1[:40].hex()}", f"Output2 = {out2.hex()}", f"Key2 = {key.hex()}",
             f"Counter2 = {counter.to_bytes(16, 'little').hex()}"]
    reseeded = sha256(sha256(key, b"fresh seed material"))
    rows += [f"ReseedInput = {b'fresh seed material'.hex()}", f"KeyAfterReseed = {reseeded.hex()}"]

    out = open(sys.argv[1], "w") if len(sys.argv) > 1 else sys.stdout
    out.write("# Crypto generator reference values; see tests/oracle/crypto_vectors.py\n")
    out.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
