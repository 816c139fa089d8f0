#!/usr/bin/env python3
# Copyright 2026 The ascyc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/modulus_table.cpp.

For every prime power p^t <= 2^16 with t >= 2 the entry is the least monic
irreducible of degree t over F_p, where monic polynomials of a fixed degree
are ordered by sum(c_i * p^i) over their non-leading coefficients.
"""
import sys

LIMIT = 1 << 16


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def poly_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def monic(deg, code, p):
    coeffs = []
    for _ in range(deg):
        coeffs.append(code % p)
        code //= p
    return coeffs + [1]


def irreducible(f, p):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            if not poly_mod(f, monic(d, code, p), p):
                return False
    return True


def first_irreducible(p, t):
    for code in range(p ** t):
        f = monic(t, code, p)
        if irreducible(f, p):
            return f
    raise RuntimeError("no irreducible")


HEADER = """/*
   Copyright 2026 The ascyc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

"""


def main():
    rows = []
    for p in primes_upto(256):
        t = 2
        while p ** t <= LIMIT:
            rows.append((p, t, first_irreducible(p, t)))
            t += 1
    out = sys.stdout
    out.write(HEADER)
    out.write("// Generated by tools/gen_modulus_table.py. Do not edit.\n\n")
    out.write('#include "modulus_table.hpp"\n\nnamespace ascyc::detail {\n\n')
    out.write("const std::vector<ModulusEntry>& modulus_table() {\n")
    out.write("    static const std::vector<ModulusEntry> table = {\n")
    for p, t, f in rows:
        out.write("        {%d, %d, {%s}},\n" % (p, t, ", ".join(str(c) for c in f)))
    out.write("    };\n    return table;\n}\n\n}  // namespace ascyc::detail\n")


if __name__ == "__main__":
    main()
