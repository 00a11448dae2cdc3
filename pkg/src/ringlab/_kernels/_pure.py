"""Pure-Python kernel backend.

Same contract as the compiled backend in ``_ck.pyx``: every function takes
materialized operation tables (numpy int32 arrays) and element indices, and
returns plain Python values.  Kept loop-for-loop parallel to the Cython
source so the benchmark compares like with like.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def vnr_witness(mul):
    """Index of the first a with no x satisfying a*x*a == a, or -1."""
    n = mul.shape[0]
    for a in range(n):
        found = False
        row = mul[a]
        for x in range(n):
            if mul[row[x], a] == a:
                found = True
                break
        if not found:
            return a
    return -1


def closure(add, neg, mul, seeds):
    """Sorted indices of the smallest ideal containing ``seeds``."""
    n = add.shape[0]
    member = bytearray(n)
    member[0] = 1
    queue = [0]
    for s in seeds:
        s = int(s)
        if not member[s]:
            member[s] = 1
            queue.append(s)
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        y = int(neg[x])
        if not member[y]:
            member[y] = 1
            queue.append(y)
        row = mul[x]
        for r in range(n):
            y = int(row[r])
            if not member[y]:
                member[y] = 1
                queue.append(y)
        arow = add[x]
        # snapshot: pairs with later arrivals are covered when those are processed
        for m in queue[:]:
            y = int(arow[m])
            if not member[y]:
                member[y] = 1
                queue.append(y)
    return sorted(queue)


def sum_of_sets(add, xs, ys):
    """Sorted {x + y} for two ideals; closed because both inputs are ideals."""
    out = set()
    for x in xs:
        row = add[x]
        for y in ys:
            out.add(int(row[y]))
    return sorted(out)


def prime_witness(mul, member):
    """Pair (a, b) outside the set with a*b inside, or (-1, -1)."""
    n = mul.shape[0]
    outside = [i for i in range(n) if not member[i]]
    for a in outside:
        row = mul[a]
        for b in outside:
            if member[row[b]]:
                return a, b
    return -1, -1


def nilpotent_mask(mul):
    """Byte mask of x with x**n == 0, n the ring order."""
    n = mul.shape[0]
    mask = bytearray(n)
    for x in range(n):
        y = x
        for _ in range(n - 1):
            y = int(mul[y, x])
            if y == 0:
                break
        if y == 0:
            mask[x] = 1
    return bytes(mask)


def pow_index(mul, x, k, one):
    """x**k by iterated multiplication; x**0 is the identity."""
    y = one
    for _ in range(k):
        y = int(mul[y, x])
    return y
