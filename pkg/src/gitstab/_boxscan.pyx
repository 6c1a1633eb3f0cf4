# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled integer box scan.

Mirrors _boxscan_py.scan_box_py exactly: same enumeration order, same echelon
normalization, same outputs.  Arithmetic is int64 with conservative magnitude
guards; whenever a product could leave the safe window the kernel raises
OverflowError and the caller falls back to the pure-Python twin, so results
never silently wrap.
"""

from libc.stdint cimport int64_t

DEF MAX_N = 12
DEF MAX_M = 256

# Factors are kept below 2^30 so any a*p - b*c stays well inside int64.
cdef int64_t GUARD = (<int64_t>1) << 30


cdef inline int64_t c_abs(int64_t a):
    return -a if a < 0 else a


cdef inline int64_t c_gcd(int64_t a, int64_t b):
    a = c_abs(a)
    b = c_abs(b)
    while b:
        a, b = b, a % b
    return a


def scan_box_c(gammas, int n_vars, int bound):
    """Returns (scanned, strict, semi, rank, basis_rows, zero_weight_count)."""
    cdef int n = n_vars
    cdef int m = len(gammas)
    if n < 2 or n > MAX_N:
        raise OverflowError("variable count outside compiled limits")
    if m < 1 or m > MAX_M:
        raise OverflowError("support size outside compiled limits")

    cdef int64_t g[MAX_M][MAX_N]
    cdef int64_t maxg = 0
    cdef int i, j
    for i in range(m):
        row = gammas[i]
        for j in range(n):
            g[i][j] = row[j]
            if c_abs(g[i][j]) > maxg:
                maxg = c_abs(g[i][j])
    if maxg * (<int64_t>bound) * n >= GUARD:
        raise OverflowError("weight magnitudes outside compiled limits")

    cdef int64_t lam[MAX_N]
    cdef int64_t basis[MAX_N][MAX_N]
    cdef int basis_pivot[MAX_N]
    cdef int64_t v[MAX_N]
    cdef int rank = 0
    cdef int64_t scanned = 0
    cdef int64_t zero_count = 0
    cdef int strict_found = 0, semi_found = 0
    cdef int64_t strict_lam[MAX_N]
    cdef int64_t semi_lam[MAX_N]

    cdef int64_t last, w, piv_val, c, p, gg
    cdef int k, pos, piv, all_nonneg, any_pos, all_pos, nonzero_head, r, ins

    for k in range(n - 1):
        lam[k] = -bound
    while True:
        last = 0
        nonzero_head = 0
        for k in range(n - 1):
            last -= lam[k]
            if lam[k] != 0:
                nonzero_head = 1
        if -bound <= last <= bound and not (last == 0 and not nonzero_head):
            lam[n - 1] = last
            scanned += 1
            all_nonneg = 1
            any_pos = 0
            all_pos = 1
            for i in range(m):
                w = 0
                for j in range(n):
                    w += lam[j] * g[i][j]
                if w < 0:
                    all_nonneg = 0
                    break
                if w > 0:
                    any_pos = 1
                else:
                    all_pos = 0
            if all_nonneg:
                if any_pos:
                    if not semi_found:
                        semi_found = 1
                        for j in range(n):
                            semi_lam[j] = lam[j]
                    if all_pos and not strict_found:
                        strict_found = 1
                        for j in range(n):
                            strict_lam[j] = lam[j]
                else:
                    zero_count += 1
                    # reduce lam against the echelon basis
                    for j in range(n):
                        v[j] = lam[j]
                    for r in range(rank):
                        piv = basis_pivot[r]
                        c = v[piv]
                        if c != 0:
                            p = basis[r][piv]
                            if c_abs(c) >= GUARD or c_abs(p) >= GUARD:
                                raise OverflowError("echelon multiplier too large")
                            for j in range(n):
                                if c_abs(v[j]) >= GUARD or c_abs(basis[r][j]) >= GUARD:
                                    raise OverflowError("echelon entry too large")
                                v[j] = v[j] * p - basis[r][j] * c
                            gg = 0
                            for j in range(n):
                                gg = c_gcd(gg, v[j])
                            if gg > 1:
                                for j in range(n):
                                    v[j] = v[j] // gg
                    piv = -1
                    for j in range(n):
                        if v[j] != 0:
                            piv = j
                            break
                    if piv >= 0:
                        if v[piv] < 0:
                            for j in range(n):
                                v[j] = -v[j]
                        gg = 0
                        for j in range(n):
                            gg = c_gcd(gg, v[j])
                        if gg > 1:
                            for j in range(n):
                                v[j] = v[j] // gg
                        # insert keeping pivots ascending
                        ins = rank
                        for r in range(rank):
                            if basis_pivot[r] > piv:
                                ins = r
                                break
                        for r in range(rank, ins, -1):
                            basis_pivot[r] = basis_pivot[r - 1]
                            for j in range(n):
                                basis[r][j] = basis[r - 1][j]
                        basis_pivot[ins] = piv
                        for j in range(n):
                            basis[ins][j] = v[j]
                        rank += 1
        # odometer step on the first n-1 coordinates
        pos = n - 2
        while pos >= 0:
            lam[pos] += 1
            if lam[pos] <= bound:
                break
            lam[pos] = -bound
            pos -= 1
        if pos < 0:
            break

    strict = tuple(strict_lam[j] for j in range(n)) if strict_found else None
    semi = tuple(semi_lam[j] for j in range(n)) if semi_found else None
    rows = tuple(tuple(basis[r][j] for j in range(n)) for r in range(rank))
    return scanned, strict, semi, rank, rows, zero_count
