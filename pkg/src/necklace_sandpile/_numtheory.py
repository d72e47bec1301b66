"""Integer helpers shared by the counting code."""

from sympy import divisors, factorint, totient

__all__ = ["divisors", "factorint", "mobius", "totient"]


def mobius(n: int) -> int:
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1
