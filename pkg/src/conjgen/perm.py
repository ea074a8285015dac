"""Low-level permutation operations on numpy image arrays.

A permutation of degree d is an int32 array p of length d with p[i] = image
of point i.  The normative convention is the right action: applying the word
``ab`` means apply a first, then b, so point^(ab) = (point^a)^b.
"""

from __future__ import annotations

from math import lcm

import numpy as np

DTYPE = np.int32


def identity(degree: int) -> np.ndarray:
    return np.arange(degree, dtype=DTYPE)


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """The product "a then b" (right-action convention)."""
    return b[a]


def inverse(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(len(a), dtype=DTYPE)
    return inv


def conjugate(x: np.ndarray, g: np.ndarray) -> np.ndarray:
    """x^g = g^-1 x g."""
    return g[x[inverse(g)]]


def power(a: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        return power(inverse(a), -k)
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def is_identity(a: np.ndarray) -> bool:
    return bool((a == np.arange(len(a), dtype=a.dtype)).all())


def order(a: np.ndarray) -> int:
    """Multiplicative order: lcm of the cycle lengths."""
    n = len(a)
    seen = np.zeros(n, dtype=bool)
    result = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(a[j])
            length += 1
        result = lcm(result, length)
    return result


def sign(a: np.ndarray) -> int:
    """+1 for even permutations, -1 for odd."""
    n = len(a)
    seen = np.zeros(n, dtype=bool)
    parity = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(a[j])
            length += 1
        parity ^= (length - 1) & 1
    return -1 if parity else 1


def cycle_type(a: np.ndarray) -> tuple[int, ...]:
    n = len(a)
    seen = np.zeros(n, dtype=bool)
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(a[j])
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def key(a: np.ndarray) -> bytes:
    """Hashable identity key; also lexicographic (big-endian per point)."""
    return a.astype(">i4").tobytes()


def validate(images, degree: int | None = None) -> np.ndarray:
    arr = np.asarray(images, dtype=DTYPE)
    if arr.ndim != 1:
        raise ValueError("permutation must be a flat image array")
    d = len(arr) if degree is None else degree
    if len(arr) != d:
        raise ValueError(f"expected degree {d}, got {len(arr)}")
    if not np.array_equal(np.sort(arr), np.arange(d, dtype=DTYPE)):
        raise ValueError("image array is not a bijection")
    return arr


def from_cycles(degree: int, cycles) -> np.ndarray:
    arr = identity(degree)
    for cyc in cycles:
        for i, pt in enumerate(cyc):
            arr[pt] = cyc[(i + 1) % len(cyc)]
    return validate(arr, degree)


def to_cycles(a: np.ndarray) -> list[tuple[int, ...]]:
    n = len(a)
    seen = np.zeros(n, dtype=bool)
    cycles = []
    for start in range(n):
        if seen[start] or a[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        j = int(a[start])
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = int(a[j])
        cycles.append(tuple(cyc))
    return cycles


def cycle_string(a: np.ndarray) -> str:
    cycles = to_cycles(a)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)
