# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit kernels; drop-in twin of ``ppimod._pykernels``.

Digits live in 64-bit cells.  The radix cap (2**31) keeps every product
x_k*v_i plus three digits of slack inside an unsigned 64-bit word; the
sequential PPI sum is unbounded in s and uses a 128-bit accumulator.
"""

from libc.stdlib cimport malloc, free

from ppimod.errors import InvariantViolation

BACKEND = "cython"

ctypedef unsigned long long u64
ctypedef long long i64
cdef extern from *:
    """
    typedef unsigned __int128 ppimod_u128;
    static inline ppimod_u128 ppimod_div128(ppimod_u128 n, unsigned long long d) { return n / d; }
    static inline unsigned long long ppimod_mod128(ppimod_u128 n, unsigned long long d) {
        return (unsigned long long)(n % d);
    }
    """
    # Cython sees a 64-bit type here; division and modulo must go through
    # the helpers or Cython narrows the operand.
    ctypedef unsigned long long u128 "ppimod_u128"
    u128 div128 "ppimod_div128"(u128 n, u64 d)
    u64 mod128 "ppimod_mod128"(u128 n, u64 d)


cdef u64* _load(list src, Py_ssize_t n) except NULL:
    cdef u64* out = <u64*> malloc((n if n > 0 else 1) * sizeof(u64))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef Py_ssize_t m = len(src)
    for i in range(n):
        out[i] = src[i] if i < m else 0
    return out


cdef list _dump(u64* src, Py_ssize_t n):
    return [src[i] for i in range(n)]


cdef inline i64 _floordiv(i64 t, i64 b, i64* rem):
    cdef i64 q = t / b
    cdef i64 r = t % b
    if r < 0:
        r += b
        q -= 1
    rem[0] = r
    return q


cdef inline u64 _solve(u64 a, u64 uk, u64 acc_mod, u64 beta):
    # a * (uk - acc) mod beta, with acc already reduced mod beta
    return a * ((uk + beta - acc_mod) % beta) % beta


cdef int _ndigits(u64 value, u64 beta):
    cdef int n = 0
    while value:
        value //= beta
        n += 1
    return n


def seq_modiv(list u, list v, u64 beta, Py_ssize_t s, u64 a):
    cdef i64* w = <i64*> malloc((s if s > 0 else 1) * sizeof(i64))
    cdef u64* vv = _load(v, s)
    cdef u64* x = <u64*> malloc((s if s > 0 else 1) * sizeof(u64))
    cdef Py_ssize_t k, j
    cdef i64 carry, rem
    cdef u64 xk
    try:
        for k in range(s):
            w[k] = u[k]
        for k in range(s):
            xk = a * (<u64> w[k]) % beta
            x[k] = xk
            if xk:
                carry = 0
                for j in range(s - k):
                    carry = _floordiv(w[k + j] - <i64> (xk * vv[j]) + carry, <i64> beta, &rem)
                    w[k + j] = rem
        return _dump(x, s)
    finally:
        free(w)
        free(vv)
        free(x)


def ppi(list u, list v, u64 beta, Py_ssize_t s, u64 a, Py_ssize_t m, bint checked):
    cdef u64* uu = _load(u, s)
    cdef u64* vv = _load(v, s)
    cdef u64* x = <u64*> malloc((s if s > 0 else 1) * sizeof(u64))
    cdef Py_ssize_t k, j, top
    cdef Py_ssize_t hi = m - 1
    cdef u128 acc, t, c = 0, c_next, bound
    cdef u64 xk
    try:
        for k in range(s):
            acc = c
            top = k if k < hi else hi
            for j in range(1, top + 1):
                acc += (<u128> vv[j]) * x[k - j]
            xk = _solve(a, uu[k], mod128(acc, beta), beta)
            x[k] = xk
            t = acc + (<u128> xk) * vv[0]
            c_next = div128(t, beta)
            if checked:
                if t != uu[k] + beta * c_next:
                    raise InvariantViolation(f"carry identity fails at k={k}")
                bound = (<u128> k) * beta * (beta - 1)
                if k and acc >= bound:
                    raise InvariantViolation(f"L_{k} exceeds k*beta*(beta-1)-1")
            c = c_next
        return _dump(x, s)
    finally:
        free(uu)
        free(vv)
        free(x)


def par_modiv(list u, list v, u64 beta, Py_ssize_t s, u64 a):
    cdef i64* w = <i64*> malloc((s + 1) * sizeof(i64))
    cdef i64* y = <i64*> malloc((s + 1) * sizeof(i64))
    cdef u64* vv = _load(v, s)
    cdef u64* x = <u64*> malloc((s if s > 0 else 1) * sizeof(u64))
    cdef Py_ssize_t k, i, n
    cdef i64 rem
    cdef u64 xk
    cdef long long steps = 0, work = 0, width = 0
    try:
        for k in range(s + 1):
            w[k] = u[k] if k < s else 0
            y[k] = 0
        for k in range(s - 1):
            xk = a * (<u64> w[k]) % beta
            x[k] = xk
            y[k + 1] -= <i64> (xk * vv[0] / beta)
            i = s - k - 1
            while i >= 1:
                y[k + i + 1] = _floordiv(w[k + i] - <i64> (xk * vv[i]) + y[k + i], <i64> beta, &rem)
                w[k + i] = rem
                i -= 1
            n = s - k - 1
            steps += 3
            work += 2 + n
            if n > width:
                width = n
        x[s - 1] = a * (<u64> w[s - 1]) % beta
        steps += 1
        work += 1
        if width < 1:
            width = 1
        return _dump(x, s), (steps, width, work)
    finally:
        free(w)
        free(y)
        free(vv)
        free(x)


def par_ppi_v1(list u, list v, u64 beta, Py_ssize_t s, u64 a, bint checked):
    cdef u64* uu = _load(u, s)
    cdef u64* vv = _load(v, s)
    cdef u64* L = _load([], s + 1)
    cdef u64* y = _load([], s + 1)
    cdef u64* x = <u64*> malloc((s if s > 0 else 1) * sizeof(u64))
    cdef Py_ssize_t k, i, j
    cdef u64 xk, t
    cdef long long steps = 0, work = 0, width = 1
    try:
        for k in range(s - 1):
            xk = _solve(a, uu[k], (L[k] + y[k]) % beta, beta)
            x[k] = xk
            i = s - k - 1
            while i >= 0:
                t = L[k + i] + xk * vv[i] + y[k + i]
                y[k + i + 1] = t / beta
                L[k + i] = t % beta
                i -= 1
            steps += 2
            work += 1 + s - k
            if s - k > width:
                width = s - k
            if checked:
                for j in range(k, s + 1):
                    if L[j] >= beta or y[j] >= beta:
                        raise InvariantViolation(f"carry-save cell {j} left one digit at k={k}")
        x[s - 1] = _solve(a, uu[s - 1], (L[s - 1] + y[s - 1]) % beta, beta)
        steps += 1
        work += 1
        return _dump(x, s), (steps, width, work)
    finally:
        free(uu)
        free(vv)
        free(L)
        free(y)
        free(x)


cdef int _check_precarry(u64* L, Py_ssize_t k, Py_ssize_t hi, u64 beta) except -1:
    cdef u64 even_cap = 2 * beta * beta - beta - 1
    cdef u64 odd_cap = beta * beta - beta
    cdef u64 cap
    cdef Py_ssize_t j
    for j in range(k, hi):
        if k == 0:
            cap = (beta - 1) * (beta - 1)
        elif (j - k) % 2 == 0:
            cap = even_cap
        else:
            cap = odd_cap
        if L[j] > cap:
            raise InvariantViolation(f"pre-carry L_{j}={L[j]} exceeds {cap} at k={k}")
    return 0


cdef int _check_alternated(u64* L, Py_ssize_t k, Py_ssize_t hi, u64 beta, long long budget) except -1:
    cdef u64 odd_cap = beta * beta + beta - 2
    cdef u64 cap
    cdef Py_ssize_t j
    cdef long long used = 0
    for j in range(k, hi):
        cap = beta - 1 if (j - k) % 2 == 0 else odd_cap
        if L[j] > cap:
            raise InvariantViolation(f"L_{j}={L[j]} exceeds {cap} after carry step k={k}")
    if budget >= 0:
        for j in range(hi):
            used += _ndigits(L[j], beta)
        if used > budget:
            raise InvariantViolation(f"accumulator uses {used} digits, budget {budget}")
    return 0


cdef inline void _carry_sweep(u64* L, Py_ssize_t k, Py_ssize_t nc, u64 beta):
    cdef Py_ssize_t j = k
    cdef Py_ssize_t end = k + 2 * nc
    while j < end:
        L[j + 1] += L[j] / beta
        L[j] = L[j] % beta
        j += 2


def par_ppi_v2(list u, list v, u64 beta, Py_ssize_t s, u64 a, bint checked):
    cdef u64* uu = _load(u, s)
    cdef u64* vv = _load(v, s)
    cdef u64* L = _load([], s + 1)
    cdef u64* x = <u64*> malloc((s if s > 0 else 1) * sizeof(u64))
    cdef Py_ssize_t k, i, nc
    cdef u64 xk
    cdef long long steps = 0, work = 0, width = 1
    try:
        for k in range(s - 1):
            xk = _solve(a, uu[k], L[k] % beta, beta)
            x[k] = xk
            for i in range(s - k):
                L[k + i] += xk * vv[i]
            if checked:
                _check_precarry(L, k, s, beta)
            nc = (s - k - 1) // 2 + 1
            _carry_sweep(L, k, nc, beta)
            if checked:
                _check_alternated(L, k, s, beta, 2 * s)
            steps += 3
            work += 1 + (s - k) + nc
            if s - k > width:
                width = s - k
        x[s - 1] = _solve(a, uu[s - 1], L[s - 1] % beta, beta)
        steps += 1
        work += 1
        return _dump(x, s), (steps, width, work)
    finally:
        free(uu)
        free(vv)
        free(L)
        free(x)


def dmod(list u, list v, u64 beta, u64 a, bint checked):
    cdef Py_ssize_t s = len(u)
    cdef Py_ssize_t t = len(v)
    cdef Py_ssize_t r = s - t + 1
    cdef u64* uu = _load(u, s + 1)
    cdef u64* vv = _load(v, t)
    cdef u64* L = _load([], s + 2)
    cdef u64* x = <u64*> malloc((r if r > 0 else 1) * sizeof(u64))
    cdef Py_ssize_t k, i, j, nc
    cdef u64 xk
    cdef long long steps = 0, work = 0, width = 1
    try:
        for k in range(r):
            xk = _solve(a, uu[k], L[k] % beta, beta)
            x[k] = xk
            for i in range(t):
                L[k + i] += xk * vv[i]
            if checked:
                _check_precarry(L, k, s, beta)
            nc = (s - k - 1) // 2 + 1
            _carry_sweep(L, k, nc, beta)
            if checked:
                _check_alternated(L, k, s, beta, -1)
            steps += 3
            work += 1 + t + nc
            width = max(width, t, nc)
        L[r] += beta - uu[r]
        for j in range(r + 1, s + 1):
            L[j] += beta - 1 - uu[j]
        steps += 1
        work += s - r + 1
        width = max(width, s - r + 1)
        for k in range(r, s + 1):
            nc = (s - k) // 2 + 1
            _carry_sweep(L, k, nc, beta)
            steps += 1
            work += nc
            width = max(width, nc)
        if checked:
            for j in range(r, s + 1):
                if L[j] >= beta:
                    raise InvariantViolation(f"dmod cell {j} not normalized")
            if L[s + 1] > 1:
                raise InvariantViolation(f"dmod sign cell holds {L[s + 1]}")
        return _dump(x, r), _dump(L, s + 2), (steps, width, work)
    finally:
        free(uu)
        free(vv)
        free(L)
        free(x)


def par_mul(list u, list v, u64 beta, bint checked):
    cdef Py_ssize_t s = len(u)
    cdef Py_ssize_t t = len(v)
    cdef u64* uu = _load(u, s)
    cdef u64* vv = _load(v, t)
    cdef u64* L = _load([], s + t + 1)
    cdef Py_ssize_t k, i, j, nc, nc2
    cdef u64 vk
    cdef long long steps = 0, work = 0, width = 0
    try:
        nc = (s - 1) // 2 + 1
        for k in range(t):
            vk = vv[k]
            for i in range(s):
                L[k + i] += vk * uu[i]
            if checked:
                _check_precarry(L, k, k + s, beta)
            _carry_sweep(L, k, nc, beta)
            if checked:
                _check_alternated(L, k, k + s, beta, -1)
            steps += 2
            work += s + nc
            width = max(width, s, nc)
        for k in range(t, s + t):
            nc2 = (s + t - k - 1) // 2 + 1
            _carry_sweep(L, k, nc2, beta)
            steps += 1
            work += nc2
            width = max(width, nc2)
        if checked:
            if L[s + t]:
                raise InvariantViolation("product overflowed s+t digits")
            for j in range(s + t):
                if L[j] >= beta:
                    raise InvariantViolation(f"product cell {j} not normalized")
        return _dump(L, s + t), (steps, width, work)
    finally:
        free(uu)
        free(vv)
        free(L)
