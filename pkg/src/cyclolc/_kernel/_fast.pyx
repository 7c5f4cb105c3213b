# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python support-scan kernel.

Identical contract and iteration order as :mod:`cyclolc._kernel.pure`;
``cyclolc._kernel`` picks this module when the extension is built.  All
residues are below p <= ~250, so products fit comfortably in 32 bits and
reductions go through a small lookup table that stays in L1.
"""

from libc.stdlib cimport free, malloc

__all__ = ["scan_range", "best_pair"]


cdef inline int mod_pow(long long a, long long e, long long p) noexcept nogil:
    cdef long long acc = 1
    cdef long long b = a % p
    while e:
        if e & 1:
            acc = acc * b % p
        b = b * b % p
        e >>= 1
    return <int>acc


cdef inline bint next_comb(int* pos, int k, int n) noexcept nogil:
    cdef int i = k - 1
    cdef int j
    while i >= 0 and pos[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    pos[i] += 1
    for j in range(i + 1, k):
        pos[j] = pos[j - 1] + 1
    return True


cdef class _Scanner:
    """Workspace bound to one scan problem and one support size."""

    cdef int p, n_positions, two_sided, cap_sum, k, stride
    cdef int* binom          # p*p, binom[a*p + n]
    cdef int* bplus
    cdef int* bminus
    cdef int* shalf
    cdef int* thalf
    cdef int* inv            # p entries
    cdef unsigned char* modtab   # p*p + p + 1 entries
    cdef int* pos
    cdef int* rez
    cdef int* kindv
    cdef int* evens
    cdef int* odds
    cdef int* dblnodes
    cdef int* sol_a
    cdef int* sol_b
    cdef int* sol_c
    cdef int* rhs1
    cdef int* rhs2
    cdef int* mat

    def __cinit__(self, prob, int k):
        cdef int p = prob.p
        cdef int i, n, a
        self.p = p
        self.n_positions = prob.n_positions
        self.two_sided = 1 if prob.two_sided else 0
        self.cap_sum = prob.cap_sum
        self.k = k
        self.stride = 2 * k + 4
        self.binom = <int*>malloc(sizeof(int) * p * p)
        self.bplus = <int*>malloc(sizeof(int) * p)
        self.bminus = <int*>malloc(sizeof(int) * p)
        self.shalf = <int*>malloc(sizeof(int) * p)
        self.thalf = <int*>malloc(sizeof(int) * p)
        self.inv = <int*>malloc(sizeof(int) * p)
        self.modtab = <unsigned char*>malloc(p * p + p + 1)
        self.pos = <int*>malloc(sizeof(int) * (k + 1))
        self.rez = <int*>malloc(sizeof(int) * (k + 1))
        self.kindv = <int*>malloc(sizeof(int) * (k + 1))
        self.evens = <int*>malloc(sizeof(int) * (k + 1))
        self.odds = <int*>malloc(sizeof(int) * (k + 1))
        self.dblnodes = <int*>malloc(sizeof(int) * (k + 1))
        self.sol_a = <int*>malloc(sizeof(int) * (k + 1))
        self.sol_b = <int*>malloc(sizeof(int) * (k + 1))
        self.sol_c = <int*>malloc(sizeof(int) * (k + 1))
        self.rhs1 = <int*>malloc(sizeof(int) * p)
        self.rhs2 = <int*>malloc(sizeof(int) * p)
        self.mat = <int*>malloc(sizeof(int) * self.stride * (2 * k + 4))
        if (self.binom == NULL or self.modtab == NULL or self.mat == NULL
                or self.inv == NULL):
            raise MemoryError()
        flat = prob.binom
        for a in range(p):
            row = flat[a]
            for n in range(p):
                self.binom[a * p + n] = row[n]
        for n in range(p):
            self.bplus[n] = prob.bplus[n]
            self.bminus[n] = prob.bminus[n]
            self.shalf[n] = prob.shalf[n]
            self.thalf[n] = prob.thalf[n]
        for i in range(p * p + p + 1):
            self.modtab[i] = <unsigned char>(i % p)
        self.inv[0] = 0
        for i in range(1, p):
            self.inv[i] = mod_pow(i, p - 2, p)

    def __dealloc__(self):
        free(self.binom)
        free(self.bplus)
        free(self.bminus)
        free(self.shalf)
        free(self.thalf)
        free(self.inv)
        free(self.modtab)
        free(self.pos)
        free(self.rez)
        free(self.kindv)
        free(self.evens)
        free(self.odds)
        free(self.dblnodes)
        free(self.sol_a)
        free(self.sol_b)
        free(self.sol_c)
        free(self.rhs1)
        free(self.rhs2)
        free(self.mat)

    cdef void _solve_prefix(self, int* nodes, int r, int* rhs_a, int* rhs_b,
                            int* out_a, int* out_b) noexcept nogil:
        # rows n = 0..r-1 of a generalized Vandermonde system; always solvable
        cdef int p = self.p
        cdef int nrhs = 2 if rhs_b != NULL else 1
        cdef int w = r + nrhs
        cdef int st = self.stride
        cdef int* mat = self.mat
        cdef unsigned char* modtab = self.modtab
        cdef int n, i, col, piv, rr, cc, f, ivv, t
        if r == 0:
            return
        for n in range(r):
            for i in range(r):
                mat[n * st + i] = self.binom[nodes[i] * p + n]
            mat[n * st + r] = rhs_a[n]
            if nrhs == 2:
                mat[n * st + r + 1] = rhs_b[n]
        for col in range(r):
            piv = col
            while mat[piv * st + col] == 0:
                piv += 1
            if piv != col:
                for cc in range(col, w):
                    t = mat[col * st + cc]
                    mat[col * st + cc] = mat[piv * st + cc]
                    mat[piv * st + cc] = t
            ivv = self.inv[mat[col * st + col]]
            for cc in range(col, w):
                mat[col * st + cc] = <int>(<long long>mat[col * st + cc] * ivv % p)
            for rr in range(r):
                if rr != col:
                    f = mat[rr * st + col]
                    if f:
                        for cc in range(col, w):
                            mat[rr * st + cc] = modtab[mat[rr * st + cc]
                                                       + (p - f) * mat[col * st + cc]]
        for i in range(r):
            out_a[i] = mat[i * st + r]
            if nrhs == 2:
                out_b[i] = mat[i * st + r + 1]

    cdef int _first_violation(self, int* nodes, int r, int* sol, int* rhs,
                              int start) noexcept nogil:
        cdef int p = self.p
        cdef int n, i
        cdef long long acc
        for n in range(start, p):
            acc = 0
            for i in range(r):
                acc += <long long>self.binom[nodes[i] * p + n] * sol[i]
            if acc % p != rhs[n]:
                return n
        return p

    cdef void _reduced_rhs(self, int r, int* pinned, int* base, int* out) noexcept nogil:
        # fold lone-position pins into a chain rhs: out[n] = base[n] -+ sum
        cdef int p = self.p
        cdef int n, i, kd
        cdef long long acc
        for n in range(p):
            acc = base[n]
            for i in range(r):
                kd = self.kindv[i]
                if kd == 2:
                    continue
                if kd == 0:
                    acc -= <long long>self.binom[self.rez[i] * p + n] * pinned[i]
                else:
                    acc += <long long>self.binom[self.rez[i] * p + n] * pinned[i]
            out[n] = <int>(acc % p)
            if out[n] < 0:
                out[n] += p

    cdef bint _joint_feasible(self, int r, int d, int m0, int m1) noexcept nogil:
        # coupled system in A (per residue) and B (per doubled residue)
        cdef int p = self.p
        cdef int st = self.stride
        cdef int* mat = self.mat
        cdef unsigned char* modtab = self.modtab
        cdef int nvars = r + d
        cdef int nrows = m0 + m1
        cdef int n, i, c, rr, cc, col, piv, f, ivv, t, rank, spot
        for n in range(m0):
            for i in range(r):
                mat[n * st + i] = self.binom[self.rez[i] * p + n]
            for i in range(d):
                mat[n * st + r + i] = 0
            mat[n * st + nvars] = self.bplus[n]
        for n in range(m1):
            rr = m0 + n
            spot = 0
            for i in range(r):
                c = self.binom[self.rez[i] * p + n]
                if self.kindv[i] == 2:
                    mat[rr * st + i] = 0
                    mat[rr * st + r + spot] = c
                    spot += 1
                elif self.kindv[i] == 0:
                    mat[rr * st + i] = c
                else:
                    mat[rr * st + i] = (p - c) % p
            mat[rr * st + nvars] = self.bminus[n]
        # forward elimination with partial pivoting
        rank = 0
        for col in range(nvars):
            piv = -1
            for rr in range(rank, nrows):
                if mat[rr * st + col]:
                    piv = rr
                    break
            if piv < 0:
                continue
            if piv != rank:
                for cc in range(col, nvars + 1):
                    t = mat[rank * st + cc]
                    mat[rank * st + cc] = mat[piv * st + cc]
                    mat[piv * st + cc] = t
            ivv = self.inv[mat[rank * st + col]]
            for cc in range(col, nvars + 1):
                mat[rank * st + cc] = <int>(<long long>mat[rank * st + cc] * ivv % p)
            for rr in range(nrows):
                if rr != rank:
                    f = mat[rr * st + col]
                    if f:
                        for cc in range(col, nvars + 1):
                            mat[rr * st + cc] = modtab[mat[rr * st + cc]
                                                       + (p - f) * mat[rank * st + cc]]
            rank += 1
            if rank == nrows:
                break
        for rr in range(rank, nrows):
            if mat[rr * st + nvars]:
                return False
        return True

    cdef int _best_pair(self, int* pos, int kk, int floor,
                        int* out_m0, int* out_m1) noexcept nogil:
        cdef int p = self.p
        cdef int r, i, j, t, rho, n_e, n_o, d, c0, c1, c1pp, c0pp
        cdef int sum1, sum2, best, bm0, bm1, limit
        cdef int m0cap, m1cap, ge, go, gamma, ub3, total, m0, m1, lo
        cdef bint done

        if not self.two_sided:
            self._solve_prefix(pos, kk, self.bplus, NULL, self.sol_a, NULL)
            c0 = self._first_violation(pos, kk, self.sol_a, self.bplus, kk)
            out_m0[0] = c0
            out_m1[0] = 0
            return c0

        # residue structure, first-seen order
        r = 0
        n_e = 0
        n_o = 0
        d = 0
        for i in range(kk):
            t = pos[i]
            rho = t if t < p else t - p
            if t & 1:
                self.odds[n_o] = rho
                n_o += 1
            else:
                self.evens[n_e] = rho
                n_e += 1
            done = False
            for j in range(r):
                if self.rez[j] == rho:
                    self.kindv[j] = 2
                    done = True
                    break
            if not done:
                self.rez[r] = rho
                self.kindv[r] = t & 1
                r += 1
        d = 0
        for i in range(r):
            if self.kindv[i] == 2:
                self.dblnodes[d] = self.rez[i]
                d += 1

        self._solve_prefix(self.rez, r, self.bplus, self.bminus, self.sol_a, self.sol_b)
        c0 = self._first_violation(self.rez, r, self.sol_a, self.bplus, r)
        c1 = self._first_violation(self.rez, r, self.sol_b, self.bminus, r)

        self._reduced_rhs(r, self.sol_a, self.bminus, self.rhs1)
        self._solve_prefix(self.dblnodes, d, self.rhs1, NULL, self.sol_c, NULL)
        c1pp = self._first_violation(self.dblnodes, d, self.sol_c, self.rhs1, d)
        sum1 = c0 + c1pp

        self._reduced_rhs(r, self.sol_b, self.bplus, self.rhs2)
        self._solve_prefix(self.dblnodes, d, self.rhs2, NULL, self.sol_c, NULL)
        c0pp = self._first_violation(self.dblnodes, d, self.sol_c, self.rhs2, d)
        sum2 = c1 + c0pp

        if sum1 >= sum2:
            best = sum1
            bm0 = c0
            bm1 = c1pp
        else:
            best = sum2
            bm0 = c0pp
            bm1 = c1

        m0cap = c0 if c0 < r - 1 else r - 1
        m1cap = c1 if c1 < r - 1 else r - 1
        limit = best if best > floor else floor
        if m0cap >= 0 and m1cap >= 0 and m0cap + m1cap > limit:
            self._solve_prefix(self.evens, n_e, self.shalf, NULL, self.sol_c, NULL)
            ge = self._first_violation(self.evens, n_e, self.sol_c, self.shalf, n_e)
            self._solve_prefix(self.odds, n_o, self.thalf, NULL, self.sol_c, NULL)
            go = self._first_violation(self.odds, n_o, self.sol_c, self.thalf, n_o)
            gamma = ge if ge < go else go
            ub3 = gamma + (m0cap if m0cap > m1cap else m1cap)
            if m0cap + m1cap < ub3:
                ub3 = m0cap + m1cap
            done = False
            total = ub3
            while total > limit and not done:
                m0 = m0cap if m0cap < total else total
                lo = total - m1cap
                if lo < 0:
                    lo = 0
                while m0 >= lo:
                    m1 = total - m0
                    if (m0 if m0 < m1 else m1) <= gamma:
                        if self._joint_feasible(r, d, m0, m1):
                            best = total
                            bm0 = m0
                            bm1 = m1
                            done = True
                            break
                    m0 -= 1
                total -= 1
        out_m0[0] = bm0
        out_m1[0] = bm1
        return best

    def best_pair_py(self, positions, int floor=-1):
        cdef int i
        cdef int kk = len(positions)
        cdef int m0 = 0, m1 = 0, total
        if kk > self.k:
            raise ValueError("support larger than scanner size")
        for i in range(kk):
            self.pos[i] = positions[i]
        total = self._best_pair(self.pos, kk, floor, &m0, &m1)
        return m0, m1, total

    def run(self, start_positions, long long start_rank, long long count):
        cdef int k = self.k
        cdef int n = self.n_positions
        cdef int i, m0 = 0, m1 = 0, total
        cdef int best = -1, bm0 = -1, bm1 = -1
        cdef long long best_rank = -1, visited = 0, rank = start_rank
        cdef long long step
        cdef bint saturated = False, alive = True
        for i in range(k):
            self.pos[i] = start_positions[i]
        with nogil:
            for step in range(count):
                if not alive:
                    break
                total = self._best_pair(self.pos, k, best, &m0, &m1)
                visited += 1
                if total > best:
                    best = total
                    bm0 = m0
                    bm1 = m1
                    best_rank = rank
                    if best >= self.cap_sum:
                        saturated = True
                        break
                rank += 1
                alive = next_comb(self.pos, k, n)
        return best, bm0, bm1, best_rank, visited, saturated


def scan_range(prob, int k, long long start, long long count):
    """Scan ``count`` lex-consecutive k-subsets starting at rank ``start``."""
    from .pure import unrank_combination

    scanner = _Scanner(prob, k)
    return scanner.run(unrank_combination(prob.n_positions, k, start), start, count)


def best_pair(prob, positions, int floor=-1):
    """Best (m0, m1, total) for one support; twin of the pure version."""
    scanner = _Scanner(prob, max(1, len(positions)))
    return scanner.best_pair_py(list(positions), floor)
