# cython: language_level=3
"""Compiled arithmetic kernel; mirrors ``_kernel_py.PyKernel`` exactly.

Elements are (lam, u) with lam an integer tuple in the lattice basis and u an
index into the tabulated finite Weyl group.  Tables arrive as contiguous
int64/uint8 numpy arrays built by ``_tables.Tables.as_arrays``.
"""

from libc.stdint cimport int64_t, uint8_t

DEF MAXRANK = 16


cdef class Kernel:
    cdef const int64_t[:, ::1] pairing      # n_pos x rank
    cdef const int64_t[:, ::1] uperm        # n_w0 x n_pos, signed codes +-(b+1)
    cdef const int64_t[:, :, ::1] uact      # n_w0 x rank x rank
    cdef const int64_t[:, ::1] rmult        # n_w0 x rank
    cdef const int64_t[::1] inv_tab
    cdef const uint8_t[:, ::1] neg          # n_w0 x n_pos
    cdef const int64_t[::1] word_letters
    cdef const int64_t[::1] word_offsets
    cdef const int64_t[::1] simple_pos
    cdef Py_ssize_t rank, n_pos, theta_pos

    def __init__(self, pairing, uperm, uact, rmult, inv_tab, neg,
                 word_letters, word_offsets, simple_pos, theta_pos):
        self.pairing = pairing
        self.uperm = uperm
        self.uact = uact
        self.rmult = rmult
        self.inv_tab = inv_tab
        self.neg = neg
        self.word_letters = word_letters
        self.word_offsets = word_offsets
        self.simple_pos = simple_pos
        self.theta_pos = theta_pos
        self.rank = pairing.shape[1]
        self.n_pos = pairing.shape[0]
        if self.rank > MAXRANK:
            raise ValueError("compiled kernel supports rank <= 16")

    cdef inline void _unpack(self, object lam, int64_t* buf) except *:
        cdef Py_ssize_t k
        for k in range(self.rank):
            buf[k] = lam[k]

    cdef inline object _pack(self, const int64_t* buf):
        cdef Py_ssize_t k
        return tuple([buf[k] for k in range(self.rank)])

    def length(self, lam, Py_ssize_t u):
        cdef int64_t l[MAXRANK]
        cdef int64_t total = 0, h
        cdef Py_ssize_t a, k
        self._unpack(lam, l)
        for a in range(self.n_pos):
            h = 0
            for k in range(self.rank):
                h += l[k] * self.pairing[a, k]
            if self.neg[u, a]:
                h -= 1
            total += h if h >= 0 else -h
        return total

    def mul(self, lam1, Py_ssize_t u1, lam2, Py_ssize_t u2):
        cdef int64_t a[MAXRANK]
        cdef int64_t b[MAXRANK]
        cdef int64_t out[MAXRANK]
        cdef Py_ssize_t k, c, u, j
        self._unpack(lam1, a)
        self._unpack(lam2, b)
        for k in range(self.rank):
            out[k] = a[k]
            for c in range(self.rank):
                if b[c] != 0:
                    out[k] += self.uact[u1, k, c] * b[c]
        u = u1
        for j in range(self.word_offsets[u2], self.word_offsets[u2 + 1]):
            u = self.rmult[u, self.word_letters[j]]
        return self._pack(out), u

    def inv(self, lam, Py_ssize_t u):
        cdef int64_t l[MAXRANK]
        cdef int64_t out[MAXRANK]
        cdef Py_ssize_t ui = self.inv_tab[u]
        cdef Py_ssize_t k, c
        self._unpack(lam, l)
        for k in range(self.rank):
            out[k] = 0
            for c in range(self.rank):
                if l[c] != 0:
                    out[k] -= self.uact[ui, k, c] * l[c]
        return self._pack(out), ui

    cdef bint _right_ascent(self, const int64_t* l, Py_ssize_t u, Py_ssize_t i):
        cdef int64_t c, h, k1
        cdef Py_ssize_t b, k
        if i == 0:
            c = self.uperm[u, self.theta_pos]
        else:
            c = self.uperm[u, self.simple_pos[i - 1]]
        b = (c - 1) if c > 0 else (-c - 1)
        h = 0
        for k in range(self.rank):
            h += l[k] * self.pairing[b, k]
        if c < 0:
            h = -h
        if i == 0:
            k1 = 1 + h
            return k1 > 0 or (k1 == 0 and c < 0)
        return h < 0 or (h == 0 and c > 0)

    def right_ascent(self, lam, Py_ssize_t u, Py_ssize_t i):
        cdef int64_t l[MAXRANK]
        self._unpack(lam, l)
        return bool(self._right_ascent(l, u, i))

    def left_ascent(self, Py_ssize_t i, lam, Py_ssize_t u):
        cdef int64_t l[MAXRANK]
        cdef int64_t li[MAXRANK]
        cdef Py_ssize_t ui = self.inv_tab[u]
        cdef Py_ssize_t k, c
        self._unpack(lam, l)
        for k in range(self.rank):
            li[k] = 0
            for c in range(self.rank):
                if l[c] != 0:
                    li[k] -= self.uact[ui, k, c] * l[c]
        return bool(self._right_ascent(li, ui, i))
