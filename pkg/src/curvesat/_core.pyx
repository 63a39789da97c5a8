# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Fraction-free integer row reduction, compiled backend.

Same algorithm and same canonical output as ``_core_py``.  Rows whose
entries fit below 2^62 are kept in C arrays and combined with 64-bit
arithmetic (products accumulated in 128 bits); a row is promoted to
Python integer arithmetic the first time an operation on it would
overflow, and stays promoted.  Since every quotient taken is exact,
C truncating division agrees with Python floor division and the two
backends produce identical results.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from math import gcd

ctypedef long long i64

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef i64 GUARD = (<i64>1) << 62

BACKEND = "c"


cdef inline i64 _cgcd(i64 a, i64 b) noexcept:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef void _strip_c(i64 *row, Py_ssize_t start, Py_ssize_t ncols) noexcept:
    cdef i64 g = 0
    cdef Py_ssize_t c
    for c in range(start, ncols):
        if row[c]:
            g = _cgcd(g, row[c])
            if g == 1:
                return
    if g > 1:
        for c in range(start, ncols):
            row[c] //= g


cdef void _strip_obj(list row, Py_ssize_t start):
    cdef Py_ssize_t c, n = len(row)
    g = 0
    for c in range(start, n):
        v = row[c]
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for c in range(start, n):
            row[c] = row[c] // g


cdef class _Work:
    cdef Py_ssize_t nrows, ncols
    cdef i64 **crows
    cdef i64 *tmp
    cdef list orows

    def __cinit__(self, list rows, Py_ssize_t ncols):
        cdef Py_ssize_t i, c
        cdef i64 x
        cdef i64 *cr
        cdef bint ok
        self.nrows = len(rows)
        self.ncols = ncols
        self.orows = [None] * self.nrows
        self.crows = <i64 **>PyMem_Malloc(max(self.nrows, 1) * sizeof(i64 *))
        self.tmp = <i64 *>PyMem_Malloc(max(ncols, 1) * sizeof(i64))
        if self.crows == NULL or self.tmp == NULL:
            raise MemoryError()
        for i in range(self.nrows):
            self.crows[i] = NULL
        for i in range(self.nrows):
            row = rows[i]
            cr = <i64 *>PyMem_Malloc(max(ncols, 1) * sizeof(i64))
            if cr == NULL:
                raise MemoryError()
            ok = True
            for c in range(ncols):
                v = row[c]
                try:
                    x = v
                except OverflowError:
                    ok = False
                    break
                if x >= GUARD or x <= -GUARD:
                    ok = False
                    break
                cr[c] = x
            if ok:
                _strip_c(cr, 0, ncols)
                self.crows[i] = cr
            else:
                PyMem_Free(cr)
                lrow = row if type(row) is list else list(row)
                _strip_obj(lrow, 0)
                self.orows[i] = lrow

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.crows != NULL:
            for i in range(self.nrows):
                if self.crows[i] != NULL:
                    PyMem_Free(self.crows[i])
            PyMem_Free(self.crows)
        if self.tmp != NULL:
            PyMem_Free(self.tmp)

    cdef inline bint nonzero(self, Py_ssize_t i, Py_ssize_t col):
        if self.crows[i] != NULL:
            return self.crows[i][col] != 0
        return (<list>self.orows[i])[col] != 0

    cdef void swap(self, Py_ssize_t i, Py_ssize_t j):
        cdef i64 *t = self.crows[i]
        self.crows[i] = self.crows[j]
        self.crows[j] = t
        o = self.orows[i]
        self.orows[i] = self.orows[j]
        self.orows[j] = o

    cdef void degrade(self, Py_ssize_t i):
        cdef i64 *cr = self.crows[i]
        cdef Py_ssize_t c
        self.orows[i] = [cr[c] for c in range(self.ncols)]
        PyMem_Free(cr)
        self.crows[i] = NULL

    cdef void fcombine(self, Py_ssize_t j, Py_ssize_t r, Py_ssize_t col):
        """rows[j] := (a/g)*rows[j] - (b/g)*rows[r] on columns > col, zero at col."""
        cdef i64 *rj = self.crows[j]
        cdef i64 *pr = self.crows[r]
        cdef i64 a64, b64, g64, ma64, mb64
        cdef i128 prod
        cdef Py_ssize_t c
        cdef bint ok
        if rj != NULL and pr != NULL:
            a64 = pr[col]
            b64 = rj[col]
            g64 = _cgcd(a64, b64)
            ma64 = a64 // g64
            mb64 = b64 // g64
            ok = True
            for c in range(col + 1, self.ncols):
                prod = <i128>ma64 * rj[c] - <i128>mb64 * pr[c]
                if prod >= <i128>GUARD or prod <= -<i128>GUARD:
                    ok = False
                    break
                self.tmp[c] = <i64>prod
            if ok:
                rj[col] = 0
                for c in range(col + 1, self.ncols):
                    rj[c] = self.tmp[c]
                _strip_c(rj, col + 1, self.ncols)
                return
            self.degrade(j)
        elif rj != NULL:
            self.degrade(j)
        rowj = <list>self.orows[j]
        if pr != NULL:
            a = pr[col]
        else:
            a = (<list>self.orows[r])[col]
        b = rowj[col]
        g = gcd(a, b)
        ma = a // g
        mb = b // g
        rowj[col] = 0
        if pr != NULL:
            for c in range(col + 1, self.ncols):
                rowj[c] = ma * rowj[c] - mb * pr[c]
        else:
            prl = <list>self.orows[r]
            for c in range(col + 1, self.ncols):
                rowj[c] = ma * rowj[c] - mb * prl[c]
        _strip_obj(rowj, col + 1)

    cdef void bcombine(self, Py_ssize_t q, Py_ssize_t idx, Py_ssize_t qpiv,
                       Py_ssize_t pc):
        """Back substitution step: clear column pc of rows[q] using rows[idx]."""
        cdef i64 *rq = self.crows[q]
        cdef i64 *pr = self.crows[idx]
        cdef i64 a64, b64, g64, ma64, mb64
        cdef i128 prod
        cdef Py_ssize_t c
        cdef bint ok
        if rq != NULL and pr != NULL:
            a64 = pr[pc]
            b64 = rq[pc]
            g64 = _cgcd(a64, b64)
            ma64 = a64 // g64
            mb64 = b64 // g64
            ok = True
            for c in range(qpiv, pc):
                prod = <i128>ma64 * rq[c]
                if prod >= <i128>GUARD or prod <= -<i128>GUARD:
                    ok = False
                    break
                self.tmp[c] = <i64>prod
            if ok:
                for c in range(pc + 1, self.ncols):
                    prod = <i128>ma64 * rq[c] - <i128>mb64 * pr[c]
                    if prod >= <i128>GUARD or prod <= -<i128>GUARD:
                        ok = False
                        break
                    self.tmp[c] = <i64>prod
            if ok:
                for c in range(qpiv, pc):
                    rq[c] = self.tmp[c]
                rq[pc] = 0
                for c in range(pc + 1, self.ncols):
                    rq[c] = self.tmp[c]
                _strip_c(rq, qpiv, self.ncols)
                return
            self.degrade(q)
        elif rq != NULL:
            self.degrade(q)
        rowq = <list>self.orows[q]
        if pr != NULL:
            a = pr[pc]
        else:
            a = (<list>self.orows[idx])[pc]
        b = rowq[pc]
        g = gcd(a, b)
        ma = a // g
        mb = b // g
        if ma != 1:
            for c in range(qpiv, pc):
                rowq[c] = ma * rowq[c]
        rowq[pc] = 0
        if pr != NULL:
            for c in range(pc + 1, self.ncols):
                rowq[c] = ma * rowq[c] - mb * pr[c]
        else:
            prl = <list>self.orows[idx]
            for c in range(pc + 1, self.ncols):
                rowq[c] = ma * rowq[c] - mb * prl[c]
        _strip_obj(rowq, qpiv)

    cdef void negate(self, Py_ssize_t i, Py_ssize_t start):
        cdef i64 *cr = self.crows[i]
        cdef Py_ssize_t c
        if cr != NULL:
            for c in range(start, self.ncols):
                cr[c] = -cr[c]
        else:
            row = <list>self.orows[i]
            for c in range(start, self.ncols):
                row[c] = -row[c]

    cdef object emit_row(self, Py_ssize_t i):
        cdef i64 *cr = self.crows[i]
        cdef Py_ssize_t c
        if cr != NULL:
            return [cr[c] for c in range(self.ncols)]
        return self.orows[i]


cdef list _forward(_Work w):
    cdef Py_ssize_t r = 0, col, i, j, p
    pivots = []
    for col in range(w.ncols):
        p = -1
        for i in range(r, w.nrows):
            if w.nonzero(i, col):
                p = i
                break
        if p < 0:
            continue
        if p != r:
            w.swap(r, p)
        for j in range(r + 1, w.nrows):
            if w.nonzero(j, col):
                w.fcombine(j, r, col)
        pivots.append(col)
        r += 1
    return pivots


cdef void _backward(_Work w, list pivots):
    cdef Py_ssize_t idx, q, pc
    for idx in range(len(pivots) - 1, -1, -1):
        pc = pivots[idx]
        for q in range(idx):
            if w.nonzero(q, pc):
                w.bcombine(q, idx, pivots[q], pc)


def rank(list rows, Py_ssize_t ncols):
    """Rank of an integer matrix given as a list of rows (consumed)."""
    cdef _Work w = _Work(rows, ncols)
    return len(_forward(w))


def rref(list rows, Py_ssize_t ncols):
    """Canonical integer reduced row echelon form; see ``_core_py.rref``."""
    cdef _Work w = _Work(rows, ncols)
    cdef Py_ssize_t idx, pc
    cdef bint neg
    pivots = _forward(w)
    _backward(w, pivots)
    out = []
    for idx in range(len(pivots)):
        pc = pivots[idx]
        if w.crows[idx] != NULL:
            neg = w.crows[idx][pc] < 0
        else:
            neg = (<list>w.orows[idx])[pc] < 0
        if neg:
            w.negate(idx, pc)
        out.append(w.emit_row(idx))
    return pivots, out
