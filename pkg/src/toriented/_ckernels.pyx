# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; limited to 64-bit words."""

from libc.stdint cimport uint64_t, int8_t
from libc.stdlib cimport malloc, free

DEF MAXW = 64


cdef inline int _lowbit(uint64_t v):
    cdef int k = 0
    while not (v & 1):
        v >>= 1
        k += 1
    return k


def echelon(rows, int ncols):
    cdef int nrows = len(rows)
    if nrows > MAXW or ncols > MAXW:
        raise OverflowError("compiled echelon handles at most 64 rows and columns")
    cdef uint64_t prows[MAXW]
    cdef uint64_t pcombos[MAXW]
    cdef int pcols[MAXW]
    cdef int npiv = 0
    cdef int i, j, col
    cdef uint64_t v, c
    independent = []
    for i in range(nrows):
        v = <uint64_t>rows[i]
        c = (<uint64_t>1) << i
        for j in range(npiv):
            if (v >> pcols[j]) & 1:
                v ^= prows[j]
                c ^= pcombos[j]
        if v == 0:
            independent.append(False)
            continue
        col = _lowbit(v)
        for j in range(npiv):
            if (prows[j] >> col) & 1:
                prows[j] ^= v
                pcombos[j] ^= c
        prows[npiv] = v
        pcols[npiv] = col
        pcombos[npiv] = c
        npiv += 1
        independent.append(True)
    return ([prows[j] for j in range(npiv)], [pcols[j] for j in range(npiv)],
            [pcombos[j] for j in range(npiv)], independent)


def reduce_vector(prows, pcols, pcombos, target):
    cdef int m = len(prows)
    if m > MAXW:
        raise OverflowError("compiled reduce_vector handles at most 64 pivots")
    cdef uint64_t t = <uint64_t>target
    cdef uint64_t combo = 0
    cdef int j
    for j in range(m):
        if (t >> <int>pcols[j]) & 1:
            t ^= <uint64_t>prows[j]
            combo ^= <uint64_t>pcombos[j]
    return t, combo


def cayley_color(int n, gens):
    if n > 30:
        raise OverflowError("compiled cayley_color handles n <= 30")
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef int ng = len(gens)
    cdef uint64_t *g = <uint64_t *>malloc(max(ng, 1) * sizeof(uint64_t))
    cdef int8_t *color = <int8_t *>malloc(size * sizeof(int8_t))
    cdef uint64_t *stack = <uint64_t *>malloc(size * sizeof(uint64_t))
    if g == NULL or color == NULL or stack == NULL:
        free(g); free(color); free(stack)
        raise MemoryError()
    cdef Py_ssize_t start, top, ncomp = 0
    cdef uint64_t x, y
    cdef int k
    cdef int8_t cx
    cdef bint bipartite = True
    try:
        for k in range(ng):
            g[k] = <uint64_t>gens[k]
        for start in range(size):
            color[start] = -1
        for start in range(size):
            if color[start] != -1:
                continue
            ncomp += 1
            color[start] = 0
            top = 0
            stack[top] = start
            top += 1
            while top > 0:
                top -= 1
                x = stack[top]
                cx = color[x]
                for k in range(ng):
                    y = x ^ g[k]
                    if color[y] == -1:
                        color[y] = cx ^ 1
                        stack[top] = y
                        top += 1
                    elif color[y] == cx:
                        bipartite = False
    finally:
        free(g); free(color); free(stack)
    return bool(bipartite), ncomp
