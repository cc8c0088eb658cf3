#!/usr/bin/env python3
"""Evaluates the general-mode size bound with Python integers and writes the pin.

Independent of the C++ code: |X| + |C1| + |C3| + |C2'| with chi = max(r, 6300) + 3
and N2 <= 2^(5r+13) (r+3)^(2r+5) k.
"""
import sys
from pathlib import Path


def general_bound(r: int, k: int) -> int:
    chi = max(r, 6300) + 3
    n2 = 2 ** (5 * r + 13) * (r + 3) ** (2 * r + 5) * k
    return 2 * k + chi * k + (r - 1) * n2 + chi * (n2 * (4 * r - 1) + k)


if __name__ == "__main__":
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "general_bound_r3_k1.txt"
    value = general_bound(3, 1)
    out.write_text(f"{value}\n")
    print(value, file=sys.stdout)
