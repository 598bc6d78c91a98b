# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the exhaustive Cayley-table search.

Same algorithm as the pure-Python kernel in _fillcore (see its module
docstring for the search and canonical-form description); the two must
return identical tables in identical order. Kept in lockstep by the
backend-parity tests.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport int16_t, int64_t, uint64_t

MAX_KERNEL_ORDER = 64


def smallest_prime_factor(int n):
    cdef int d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


cdef class _Search:
    cdef int n, size, nlab, gens_len, scan_len, trail_len
    cdef int64_t nodes
    cdef int16_t* table
    cdef uint64_t* rowmask
    cdef uint64_t* colmask
    cdef int* fact        # capacity n per value, flattened
    cdef int* fact_cnt
    cdef int* trail
    cdef int* gens
    cdef int* scan_u
    cdef int* scan_g
    cdef list leaves

    def __cinit__(self, int n):
        cdef int scan_cap = 16 * 64 * 2 + 64
        self.n = n
        self.size = n * n
        self.nlab = 0
        self.gens_len = 0
        self.scan_len = 0
        self.trail_len = 0
        self.nodes = 0
        self.table = <int16_t*> calloc(self.size, sizeof(int16_t))
        self.rowmask = <uint64_t*> calloc(n, sizeof(uint64_t))
        self.colmask = <uint64_t*> calloc(n, sizeof(uint64_t))
        self.fact = <int*> calloc(n * n, sizeof(int))
        self.fact_cnt = <int*> calloc(n, sizeof(int))
        self.trail = <int*> calloc(self.size, sizeof(int))
        self.gens = <int*> calloc(64, sizeof(int))
        self.scan_u = <int*> calloc(scan_cap, sizeof(int))
        self.scan_g = <int*> calloc(scan_cap, sizeof(int))
        self.leaves = []
        cdef int i
        for i in range(self.size):
            self.table[i] = -1

    def __dealloc__(self):
        free(self.table)
        free(self.rowmask)
        free(self.colmask)
        free(self.fact)
        free(self.fact_cnt)
        free(self.trail)
        free(self.gens)
        free(self.scan_u)
        free(self.scan_g)

    cdef bint set_cell(self, int a, int b, int v):
        cdef int idx = a * self.n + b
        cdef int16_t cur = self.table[idx]
        if cur == v:
            return True
        if cur != -1:
            return False
        cdef uint64_t bit = (<uint64_t> 1) << v
        if self.rowmask[a] & bit or self.colmask[b] & bit:
            return False
        self.table[idx] = <int16_t> v
        self.rowmask[a] |= bit
        self.colmask[b] |= bit
        self.fact[v * self.n + self.fact_cnt[v]] = idx
        self.fact_cnt[v] += 1
        self.trail[self.trail_len] = idx
        self.trail_len += 1
        return True

    cdef void unwind(self, int mark):
        cdef int idx, a, b, v
        while self.trail_len > mark:
            self.trail_len -= 1
            idx = self.trail[self.trail_len]
            v = self.table[idx]
            self.table[idx] = -1
            a = idx / self.n
            b = idx - a * self.n
            self.rowmask[a] ^= (<uint64_t> 1) << v
            self.colmask[b] ^= (<uint64_t> 1) << v
            self.fact_cnt[v] -= 1

    cdef bint propagate(self, int start):
        cdef int i = start
        cdef int n = self.n
        cdef int nlab = self.nlab
        cdef int idx, a, b, v, rowa, rowb, rowv
        cdef int k, z, i2, j2, k2, y, w, x1, x2, f, packed
        while i < self.trail_len:
            idx = self.trail[i]
            i += 1
            a = idx / n
            b = idx - a * n
            v = self.table[idx]
            rowa = a * n
            rowb = b * n
            rowv = v * n
            # (a*b)*k = a*(b*k) for known b*k.
            for k in range(nlab):
                z = self.table[rowb + k]
                if z == -1:
                    continue
                x1 = self.table[rowv + k]
                x2 = self.table[rowa + z]
                if x1 == -1:
                    if x2 != -1 and not self.set_cell(v, k, x2):
                        return False
                elif x2 == -1:
                    if not self.set_cell(a, z, x1):
                        return False
                elif x1 != x2:
                    return False
            # (i2*a)*b = i2*(a*b) for known i2*a.
            for i2 in range(nlab):
                y = self.table[i2 * n + a]
                if y == -1:
                    continue
                x1 = self.table[y * n + b]
                x2 = self.table[i2 * n + v]
                if x1 == -1:
                    if x2 != -1 and not self.set_cell(y, b, x2):
                        return False
                elif x2 == -1:
                    if not self.set_cell(i2, v, x1):
                        return False
                elif x1 != x2:
                    return False
            # This cell as outer product: i2*j2 = a, so a*b = i2*(j2*b).
            for f in range(self.fact_cnt[a]):
                packed = self.fact[a * n + f]
                i2 = packed / n
                j2 = packed - i2 * n
                z = self.table[j2 * n + b]
                if z == -1:
                    continue
                x1 = self.table[i2 * n + z]
                if x1 == -1:
                    if not self.set_cell(i2, z, v):
                        return False
                elif x1 != v:
                    return False
            # This cell as inner product: j2*k2 = b, so a*b = (a*j2)*k2.
            for f in range(self.fact_cnt[b]):
                packed = self.fact[b * n + f]
                j2 = packed / n
                k2 = packed - j2 * n
                w = self.table[rowa + j2]
                if w == -1:
                    continue
                x1 = self.table[w * n + k2]
                if x1 == -1:
                    if not self.set_cell(w, k2, v):
                        return False
                elif x1 != v:
                    return False
        return True

    cdef int create_label(self):
        cdef int c = self.nlab
        cdef int g
        self.nlab = c + 1
        self.set_cell(0, c, c)
        self.set_cell(c, 0, c)
        for g in range(self.gens_len):
            self.scan_u[self.scan_len] = c
            self.scan_g[self.scan_len] = self.gens[g]
            self.scan_len += 1
        return c

    cdef void add_generator(self):
        cdef int c = self.create_label()
        cdef int u
        self.gens[self.gens_len] = c
        self.gens_len += 1
        for u in range(self.nlab):
            self.scan_u[self.scan_len] = u
            self.scan_g[self.scan_len] = c
            self.scan_len += 1

    cdef void emit_leaf(self):
        cdef int i
        self.leaves.append(tuple([self.table[i] for i in range(self.size)]))

    cdef void search(self, int qi):
        cdef int n = self.n
        cdef int g, u, v, nlab, mark, glen, slen, c, hole, a, b, idx
        cdef uint64_t forbidden
        while qi < self.scan_len:
            g = self.scan_g[qi]
            u = self.scan_u[qi]
            if self.table[g * n + u] != -1:
                qi += 1
                continue
            nlab = self.nlab
            forbidden = self.rowmask[g] | self.colmask[u]
            for v in range(nlab):
                if (forbidden >> v) & 1:
                    continue
                self.nodes += 1
                mark = self.trail_len
                if self.set_cell(g, u, v) and self.propagate(mark):
                    self.search(qi + 1)
                self.unwind(mark)
            if nlab < n:
                self.nodes += 1
                mark = self.trail_len
                glen = self.gens_len
                slen = self.scan_len
                c = self.create_label()
                if self.set_cell(g, u, c) and self.propagate(mark):
                    self.search(qi + 1)
                self.unwind(mark)
                self.nlab = nlab
                self.gens_len = glen
                self.scan_len = slen
            return
        nlab = self.nlab
        if nlab == n:
            # Hole branch is a backstop; propagation completes all rows in
            # practice (see the pure kernel for the argument).
            hole = -1
            for idx in range(self.size):
                if self.table[idx] == -1:
                    hole = idx
                    break
            if hole == -1:
                self.emit_leaf()
                return
            a = hole / n
            b = hole - a * n
            forbidden = self.rowmask[a] | self.colmask[b]
            for v in range(n):
                if (forbidden >> v) & 1:
                    continue
                self.nodes += 1
                mark = self.trail_len
                if self.set_cell(a, b, v) and self.propagate(mark):
                    self.search(qi)
                self.unwind(mark)
            return
        # The labeled set is a complete proper subgroup: its order must
        # divide n and the next closure at least doubles it.
        if n % nlab != 0 or nlab * 2 > n:
            return
        mark = self.trail_len
        glen = self.gens_len
        slen = self.scan_len
        self.add_generator()
        if self.propagate(mark):
            self.search(qi)
        self.unwind(mark)
        self.nlab = nlab
        self.gens_len = glen
        self.scan_len = slen

    def run(self):
        cdef int n = self.n
        cdef int p, k
        cdef bint ok = True
        self.create_label()
        self.add_generator()
        p = smallest_prime_factor(n)
        for k in range(2, p):
            self.create_label()
        for k in range(1, p - 1):
            ok = ok and self.set_cell(1, k, k + 1)
        ok = ok and self.set_cell(1, p - 1, 0)
        if not ok or not self.propagate(0):
            raise AssertionError("canonical prefix is inconsistent")
        self.search(0)
        return self.leaves, self.nodes


def enumerate_group_tables(int n):
    """All group tables of order n reached by the canonical search.

    Same contract and output order as _fillcore.enumerate_group_tables.
    """
    if not 1 <= n <= MAX_KERNEL_ORDER:
        raise ValueError(f"order must be in 1..{MAX_KERNEL_ORDER}")
    if n == 1:
        return [(0,)], 1
    search = _Search(n)
    return search.run()
