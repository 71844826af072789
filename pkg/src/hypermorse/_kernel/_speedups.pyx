# cython: language_level=3, boundscheck=False, wraparound=False
"""Exact integer elimination kernels, compiled twin of pylinalg.py.

Entries are arbitrary-precision Python ints (kept as objects); the speedup
comes from typed index arithmetic and tight loops.  Semantics must match
pylinalg.py exactly; the twin-agreement test enforces this on random inputs.
"""

cimport cython


cdef void _row_submul(list target, list source, object q, Py_ssize_t start):
    cdef Py_ssize_t j, n = len(target)
    cdef object s
    for j in range(start, n):
        s = source[j]
        if s:
            target[j] = target[j] - q * s


def hnf_rows(mat):
    """Canonical row Hermite normal form; zero rows are dropped."""
    cdef Py_ssize_t m = len(mat)
    cdef Py_ssize_t n = len(mat[0]) if m else 0
    cdef list rows = [list(row) for row in mat]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef object a, b, q, best
    cdef bint clean
    cdef list row
    for c in range(n):
        if r == m:
            break
        while True:
            piv = -1
            best = 0
            for i in range(r, m):
                a = (<list>rows[i])[c]
                if a:
                    if a < 0:
                        a = -a
                    if piv < 0 or a < best:
                        piv = i
                        best = a
            if piv < 0:
                break
            if piv != r:
                rows[r], rows[piv] = rows[piv], rows[r]
            a = (<list>rows[r])[c]
            clean = True
            for i in range(r + 1, m):
                b = (<list>rows[i])[c]
                if b:
                    q = b // a
                    if q:
                        _row_submul(<list>rows[i], <list>rows[r], q, c)
                    if (<list>rows[i])[c]:
                        clean = False
            if clean:
                if (<list>rows[r])[c] < 0:
                    row = <list>rows[r]
                    for j in range(c, n):
                        row[j] = -row[j]
                a = (<list>rows[r])[c]
                for i in range(r):
                    q = (<list>rows[i])[c] // a
                    if q:
                        _row_submul(<list>rows[i], <list>rows[r], q, c)
                r += 1
                break
    return rows[:r]


def hnf_rows_with_transform(mat):
    """Row HNF with a unimodular u such that u * mat = h (zero rows kept)."""
    cdef Py_ssize_t m = len(mat)
    cdef Py_ssize_t n = len(mat[0]) if m else 0
    cdef list rows = [list(row) for row in mat]
    cdef list u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef object a, b, q, best
    cdef bint clean
    cdef list row, urow
    for c in range(n):
        if r == m:
            break
        while True:
            piv = -1
            best = 0
            for i in range(r, m):
                a = (<list>rows[i])[c]
                if a:
                    if a < 0:
                        a = -a
                    if piv < 0 or a < best:
                        piv = i
                        best = a
            if piv < 0:
                break
            if piv != r:
                rows[r], rows[piv] = rows[piv], rows[r]
                u[r], u[piv] = u[piv], u[r]
            a = (<list>rows[r])[c]
            clean = True
            for i in range(r + 1, m):
                b = (<list>rows[i])[c]
                if b:
                    q = b // a
                    if q:
                        _row_submul(<list>rows[i], <list>rows[r], q, c)
                        _row_submul(<list>u[i], <list>u[r], q, 0)
                    if (<list>rows[i])[c]:
                        clean = False
            if clean:
                if (<list>rows[r])[c] < 0:
                    row = <list>rows[r]
                    for j in range(c, n):
                        row[j] = -row[j]
                    urow = <list>u[r]
                    for j in range(m):
                        urow[j] = -urow[j]
                a = (<list>rows[r])[c]
                for i in range(r):
                    q = (<list>rows[i])[c] // a
                    if q:
                        _row_submul(<list>rows[i], <list>rows[r], q, c)
                        _row_submul(<list>u[i], <list>u[r], q, 0)
                r += 1
                break
    return rows, u


cdef void _move_min_to_pivot(list d, list u, list v, Py_ssize_t t,
                             Py_ssize_t m, Py_ssize_t n):
    cdef Py_ssize_t piv_i = -1, piv_j = -1, i, j
    cdef object a, best = 0
    cdef list di, row
    for i in range(t, m):
        di = <list>d[i]
        for j in range(t, n):
            a = di[j]
            if a:
                if a < 0:
                    a = -a
                if piv_i < 0 or a < best:
                    piv_i = i
                    piv_j = j
                    best = a
    if piv_i < 0:
        return
    if piv_i != t:
        d[t], d[piv_i] = d[piv_i], d[t]
        for i in range(m):
            row = <list>u[i]
            row[t], row[piv_i] = row[piv_i], row[t]
    if piv_j != t:
        for i in range(m):
            row = <list>d[i]
            row[t], row[piv_j] = row[piv_j], row[t]
        v[t], v[piv_j] = v[piv_j], v[t]


def snf_decompose(mat):
    """Smith normal form with transforms: (u, d, v) with mat = u*d*v."""
    cdef Py_ssize_t m = len(mat)
    cdef Py_ssize_t n = len(mat[0]) if m else 0
    cdef list d = [list(row) for row in mat]
    cdef list u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef list v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef Py_ssize_t t = 0, limit = m if m < n else n
    cdef Py_ssize_t piv_i, piv_j, i, j, jj, bad_i
    cdef object a, b, q, best
    cdef bint dirty
    cdef list di, row
    while t < limit:
        piv_i = -1
        piv_j = -1
        best = 0
        for i in range(t, m):
            di = <list>d[i]
            for j in range(t, n):
                a = di[j]
                if a:
                    if a < 0:
                        a = -a
                    if piv_i < 0 or a < best:
                        piv_i = i
                        piv_j = j
                        best = a
        if piv_i < 0:
            break
        if piv_i != t:
            d[t], d[piv_i] = d[piv_i], d[t]
            for i in range(m):
                row = <list>u[i]
                row[t], row[piv_i] = row[piv_i], row[t]
        if piv_j != t:
            for i in range(m):
                row = <list>d[i]
                row[t], row[piv_j] = row[piv_j], row[t]
            v[t], v[piv_j] = v[piv_j], v[t]
        while True:
            a = (<list>d[t])[t]
            dirty = False
            for i in range(t + 1, m):
                b = (<list>d[i])[t]
                if b:
                    q = b // a
                    if q:
                        _row_submul(<list>d[i], <list>d[t], q, t)
                        for jj in range(m):
                            row = <list>u[jj]
                            row[t] = row[t] + q * row[i]
                    if (<list>d[i])[t]:
                        dirty = True
            if dirty:
                _move_min_to_pivot(d, u, v, t, m, n)
                continue
            a = (<list>d[t])[t]
            for j in range(t + 1, n):
                b = (<list>d[t])[j]
                if b:
                    q = b // a
                    if q:
                        for i in range(t, m):
                            row = <list>d[i]
                            row[j] = row[j] - q * row[t]
                        _row_addmul(<list>v[t], <list>v[j], q)
                    if (<list>d[t])[j]:
                        dirty = True
            if dirty:
                _move_min_to_pivot(d, u, v, t, m, n)
                continue
            a = (<list>d[t])[t]
            bad_i = -1
            for i in range(t + 1, m):
                di = <list>d[i]
                for j in range(t + 1, n):
                    if di[j] % a:
                        bad_i = i
                        break
                if bad_i >= 0:
                    break
            if bad_i < 0:
                break
            _row_addmul_from(<list>d[t], <list>d[bad_i], t)
            for jj in range(m):
                row = <list>u[jj]
                row[bad_i] = row[bad_i] - row[t]
        if (<list>d[t])[t] < 0:
            row = <list>d[t]
            for j in range(t, n):
                row[j] = -row[j]
            for jj in range(m):
                row = <list>u[jj]
                row[t] = -row[t]
        t += 1
    return u, d, v


cdef void _row_addmul(list target, list source, object q):
    cdef Py_ssize_t j, n = len(target)
    cdef object s
    for j in range(n):
        s = source[j]
        if s:
            target[j] = target[j] + q * s


cdef void _row_addmul_from(list target, list source, Py_ssize_t start):
    cdef Py_ssize_t j, n = len(target)
    cdef object s
    for j in range(start, n):
        s = source[j]
        if s:
            target[j] = target[j] + s
