# cython: boundscheck=False, wraparound=False, initializedcheck=False, language_level=3
"""Compiled kernel backend: hot loops over materialized operation tables."""

import numpy as np

cimport numpy as cnp

BACKEND_NAME = "cython"


def vnr_witness(const cnp.int32_t[:, :] mul):
    """Index of the first a with no x satisfying a*x*a == a, or -1."""
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, x
    cdef bint found
    for a in range(n):
        found = False
        for x in range(n):
            if mul[mul[a, x], a] == a:
                found = True
                break
        if not found:
            return a
    return -1


def closure(const cnp.int32_t[:, :] add, const cnp.int32_t[:] neg, const cnp.int32_t[:, :] mul, seeds):
    """Sorted indices of the smallest ideal containing ``seeds``."""
    cdef Py_ssize_t n = add.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] member_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[:] member = member_arr
    cdef cnp.ndarray[cnp.int32_t, ndim=1] queue_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[:] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, snapshot
    cdef Py_ssize_t x, r, m
    cdef cnp.int32_t y, s

    member[0] = 1
    queue[tail] = 0
    tail += 1
    for s0 in seeds:
        s = <cnp.int32_t> s0
        if not member[s]:
            member[s] = 1
            queue[tail] = s
            tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        y = neg[x]
        if not member[y]:
            member[y] = 1
            queue[tail] = y
            tail += 1
        for r in range(n):
            y = mul[x, r]
            if not member[y]:
                member[y] = 1
                queue[tail] = y
                tail += 1
        snapshot = tail
        for m in range(snapshot):
            y = add[x, queue[m]]
            if not member[y]:
                member[y] = 1
                queue[tail] = y
                tail += 1
    out = queue_arr[:tail].copy()
    out.sort()
    return [int(v) for v in out]


def sum_of_sets(const cnp.int32_t[:, :] add, xs, ys):
    """Sorted {x + y} for two ideals; closed because both inputs are ideals."""
    cdef Py_ssize_t n = add.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[:] seen = seen_arr
    cdef cnp.ndarray[cnp.int32_t, ndim=1] xa = np.asarray(xs, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ya = np.asarray(ys, dtype=np.int32)
    cdef cnp.int32_t[:] xv = xa, yv = ya
    cdef Py_ssize_t i, j
    for i in range(xv.shape[0]):
        for j in range(yv.shape[0]):
            seen[add[xv[i], yv[j]]] = 1
    return [int(v) for v in np.nonzero(seen_arr)[0]]


def prime_witness(const cnp.int32_t[:, :] mul, member):
    """Pair (a, b) outside the set with a*b inside, or (-1, -1)."""
    cdef Py_ssize_t n = mul.shape[0]
    cdef const cnp.uint8_t[:] mem = np.ascontiguousarray(member, dtype=np.uint8)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out_arr = np.empty(n, dtype=np.int32)
    cdef cnp.int32_t[:] outside = out_arr
    cdef Py_ssize_t cnt = 0, i, j
    for i in range(n):
        if not mem[i]:
            outside[cnt] = <cnp.int32_t> i
            cnt += 1
    for i in range(cnt):
        for j in range(cnt):
            if mem[mul[outside[i], outside[j]]]:
                return int(outside[i]), int(outside[j])
    return -1, -1


def nilpotent_mask(const cnp.int32_t[:, :] mul):
    """Byte mask of x with x**n == 0, n the ring order."""
    cdef Py_ssize_t n = mul.shape[0]
    cdef bytearray mask = bytearray(n)
    cdef Py_ssize_t x, k
    cdef cnp.int32_t y
    for x in range(n):
        y = <cnp.int32_t> x
        for k in range(n - 1):
            y = mul[y, x]
            if y == 0:
                break
        if y == 0:
            mask[x] = 1
    return bytes(mask)


def pow_index(const cnp.int32_t[:, :] mul, Py_ssize_t x, Py_ssize_t k, Py_ssize_t one):
    """x**k by iterated multiplication; x**0 is the identity."""
    cdef cnp.int32_t y = <cnp.int32_t> one
    cdef Py_ssize_t i
    for i in range(k):
        y = mul[y, x]
    return int(y)
