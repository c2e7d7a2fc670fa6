#!/usr/bin/env python3
"""Regenerate the bundled b-file fixtures under src/lukaspaths/data/.

Every sequence is produced by an independent route -- explicit formulas,
Fibonacci iteration, a standalone Dyck-path height DP, or a small 0/1
transfer-matrix power -- never by the library itself.  That keeps the
fixtures meaningful as cross-checks.
"""
from __future__ import annotations

from math import comb
from pathlib import Path

N_TERMS = 31
OUT = Path(__file__).resolve().parent.parent / "src" / "lukaspaths" / "data"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def safe_comb(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def dyck_height_at_most(n: int, h: int) -> int:
    """Dyck paths of semilength n that never rise above height h, by a
    direct vector DP over 2n unit steps."""
    state = [0] * (h + 1)
    state[0] = 1
    for _ in range(2 * n):
        nxt = [0] * (h + 1)
        for y, c in enumerate(state):
            if not c:
                continue
            if y + 1 <= h:
                nxt[y + 1] += c
            if y - 1 >= 0:
                nxt[y - 1] += c
        state = nxt
    return state[0]


def bounded_walk_total(n: int, t: int) -> int:
    """Length-n walks on heights 0..t starting at 0 with moves to any height
    >= current - 1, counted by powering the 0/1 transition matrix."""
    size = t + 1
    row = [0] * size
    row[0] = 1
    for _ in range(n):
        nxt = [0] * size
        for h, c in enumerate(row):
            if not c:
                continue
            for h2 in range(max(h - 1, 0), size):
                nxt[h2] += c
        row = nxt
    return sum(row)


def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


SEQUENCES = {
    # header comment, generator over index n
    "b000108.txt": ("Catalan numbers C(2n,n)/(n+1)", catalan),
    "b000245.txt": ("Catalan(n+1) - Catalan(n)", lambda n: catalan(n + 1) - catalan(n)),
    "b002057.txt": ("C(2n+3,n) - C(2n+3,n-1)", lambda n: safe_comb(2 * n + 3, n) - safe_comb(2 * n + 3, n - 1)),
    "b000344.txt": ("C(2n+4,n) - C(2n+4,n-1)", lambda n: safe_comb(2 * n + 4, n) - safe_comb(2 * n + 4, n - 1)),
    "b001519.txt": ("Dyck paths of semilength n with height <= 3", lambda n: dyck_height_at_most(n, 3)),
    "b080937.txt": ("Dyck paths of semilength n with height <= 5", lambda n: dyck_height_at_most(n, 5)),
    "b007051.txt": ("(3^n + 1)/2", lambda n: (3**n + 1) // 2),
    "b003462.txt": ("(3^n - 1)/2", lambda n: (3**n - 1) // 2),
    "b001906.txt": ("Fibonacci(2n)", lambda n: fib(2 * n)),
    "b000012.txt": ("all ones", lambda n: 1),
    "b000079.txt": ("powers of two", lambda n: 2**n),
    "b005021.txt": (
        "walks on heights 0..4, moves to any height >= current-1, any end",
        lambda n: bounded_walk_total(n, 4),
    ),
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (desc, gen) in SEQUENCES.items():
        lines = [f"# {name[:-4]}: {desc}", f"# generated by tools/gen_bfiles.py, {N_TERMS} terms"]
        for n in range(N_TERMS):
            lines.append(f"{n} {gen(n)}")
        (OUT / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
