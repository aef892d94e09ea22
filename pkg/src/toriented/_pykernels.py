"""Pure-Python hot kernels. Rows are ints used as bitsets, coordinate i is bit i."""

from __future__ import annotations


def echelon(rows, ncols):
    """Incremental reduced echelon form over GF(2).

    Rows are inserted in order; each surviving row pivots on its lowest set
    bit and that bit is cleared from every other pivot row.  Returns
    ``(pivot_rows, pivot_cols, combos, independent)`` where ``combos[j]`` is a
    bitmask over input indices whose XOR equals ``pivot_rows[j]`` and
    ``independent[i]`` says whether input ``i`` was independent of rows
    ``0..i-1``.  Pivot lists are in insertion order, not sorted.
    """
    prows = []
    pcols = []
    pcombos = []
    independent = []
    for i, v in enumerate(rows):
        c = 1 << i
        for j in range(len(prows)):
            if (v >> pcols[j]) & 1:
                v ^= prows[j]
                c ^= pcombos[j]
        if v == 0:
            independent.append(False)
            continue
        col = (v & -v).bit_length() - 1
        for j in range(len(prows)):
            if (prows[j] >> col) & 1:
                prows[j] ^= v
                pcombos[j] ^= c
        prows.append(v)
        pcols.append(col)
        pcombos.append(c)
        independent.append(True)
    return prows, pcols, pcombos, independent


def reduce_vector(prows, pcols, pcombos, target):
    """Reduce ``target`` against a reduced echelon basis.

    Returns ``(residue, combo)``; ``residue == 0`` means target is the XOR of
    the input rows in ``combo``.
    """
    combo = 0
    for j in range(len(prows)):
        if (target >> pcols[j]) & 1:
            target ^= prows[j]
            combo ^= pcombos[j]
    return target, combo


def cayley_color(n, gens):
    """Two-colour the Cayley graph of GF(2)^n with the given generators.

    Returns ``(bipartite, ncomponents)``.
    """
    size = 1 << n
    color = [-1] * size
    ncomp = 0
    bipartite = True
    for start in range(size):
        if color[start] != -1:
            continue
        ncomp += 1
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            cx = color[x]
            for g in gens:
                y = x ^ g
                cy = color[y]
                if cy == -1:
                    color[y] = cx ^ 1
                    stack.append(y)
                elif cy == cx:
                    bipartite = False
    return bipartite, ncomp
