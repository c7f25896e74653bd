#!/usr/bin/env python3
# Copyright 2026 The zetacorr Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the first N zeta-zero ordinates as a plain-text table (one per line)."""

import argparse
import sys

import mpmath


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--digits", type=int, default=12)
    parser.add_argument("--output", default="-")
    args = parser.parse_args()

    mpmath.mp.dps = args.digits + 8
    out = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8")
    out.write(f"# first {args.count} ordinates of nontrivial zeta zeros (mpmath.zetazero)\n")
    out.write(f"# {args.digits} decimal places\n")
    for n in range(1, args.count + 1):
        gamma = mpmath.zetazero(n).imag
        out.write(mpmath.nstr(gamma, args.digits + 1 + int(mpmath.log10(gamma)), strip_zeros=False) + "\n")
        out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
