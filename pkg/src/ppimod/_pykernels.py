"""Pure-Python digit kernels.

Same contract as the compiled ``_ckernels`` module: plain lists of digits
in, plain lists out.  Every parallel kernel also returns its trace counters
``(steps, max_width, work)``.  A ``pardo`` step is executed as a loop in an
order that reproduces synchronous semantics (reads see the pre-step state).

Inputs are trusted; the public wrappers validate them.
"""

from ppimod.errors import InvariantViolation

BACKEND = "python"


def _ndigits(value, beta):
    n = 0
    while value:
        value //= beta
        n += 1
    return n


def seq_modiv(u, v, beta, s, a):
    w = list(u)
    x = [0] * s
    for k in range(s):
        xk = a * w[k] % beta
        x[k] = xk
        if xk:
            carry = 0
            for j in range(s - k):
                carry, w[k + j] = divmod(w[k + j] - xk * v[j] + carry, beta)
    return x


def ppi(u, v, beta, s, a, m, checked):
    """Sequential PPI.  ``m`` limits the digits of v used in the sum."""
    x = [0] * s
    c = 0
    v0 = v[0]
    hi = m - 1
    for k in range(s):
        acc = c
        top = k if k < hi else hi
        for j in range(1, top + 1):
            acc += v[j] * x[k - j]
        xk = a * (u[k] - acc) % beta
        x[k] = xk
        t = acc + xk * v0
        c_next = t // beta
        if checked:
            if t != u[k] + beta * c_next:
                raise InvariantViolation(f"carry identity fails at k={k}")
            if k and acc > k * beta * (beta - 1) - 1:
                raise InvariantViolation(f"L_{k}={acc} exceeds k*beta*(beta-1)-1")
        c = c_next
    return x


def par_modiv(u, v, beta, s, a):
    w = list(u)
    y = [0] * (s + 1)
    x = [0] * s
    steps = work = 0
    width = 0
    for k in range(s - 1):
        xk = a * w[k] % beta
        x[k] = xk
        y[k + 1] -= xk * v[0] // beta
        for i in range(s - k - 1, 0, -1):
            y[k + i + 1], w[k + i] = divmod(w[k + i] - xk * v[i] + y[k + i], beta)
        n = s - k - 1
        steps += 3
        work += 2 + n
        if n > width:
            width = n
    x[s - 1] = a * w[s - 1] % beta
    steps += 1
    work += 1
    if width < 1:
        width = 1
    return x, (steps, width, work)


def par_ppi_v1(u, v, beta, s, a, checked):
    L = [0] * (s + 1)
    y = [0] * (s + 1)
    x = [0] * s
    steps = work = 0
    width = 1
    for k in range(s - 1):
        xk = a * (u[k] - L[k] - y[k]) % beta
        x[k] = xk
        for i in range(s - k - 1, -1, -1):
            y[k + i + 1], L[k + i] = divmod(L[k + i] + xk * v[i] + y[k + i], beta)
        steps += 2
        work += 1 + s - k
        if s - k > width:
            width = s - k
        if checked:
            for j in range(k, s + 1):
                if not (0 <= L[j] < beta and 0 <= y[j] < beta):
                    raise InvariantViolation(f"carry-save cell {j} left one digit at k={k}")
    x[s - 1] = a * (u[s - 1] - L[s - 1] - y[s - 1]) % beta
    steps += 1
    work += 1
    return x, (steps, width, work)


def _check_precarry(L, k, hi, beta):
    even_cap = 2 * beta * beta - beta - 1
    odd_cap = beta * beta - beta
    for j in range(k, hi):
        cap = even_cap if (j - k) % 2 == 0 else odd_cap
        if k == 0:
            cap = (beta - 1) * (beta - 1)
        if L[j] > cap:
            raise InvariantViolation(f"pre-carry L_{j}={L[j]} exceeds {cap} at k={k}")


def _check_alternated(L, k, hi, beta, budget):
    odd_cap = beta * beta + beta - 2
    for j in range(k, hi):
        cap = beta - 1 if (j - k) % 2 == 0 else odd_cap
        if L[j] > cap:
            raise InvariantViolation(f"L_{j}={L[j]} exceeds {cap} after carry step k={k}")
    if budget is not None:
        used = sum(_ndigits(L[j], beta) for j in range(hi))
        if used > budget:
            raise InvariantViolation(f"accumulator uses {used} digits, budget {budget}")


def par_ppi_v2(u, v, beta, s, a, checked):
    L = [0] * (s + 1)
    x = [0] * s
    steps = work = 0
    width = 1
    for k in range(s - 1):
        xk = a * (u[k] - L[k]) % beta
        x[k] = xk
        for i in range(s - k):
            L[k + i] += xk * v[i]
        if checked:
            _check_precarry(L, k, s, beta)
        nc = (s - k - 1) // 2 + 1
        for j in range(k, k + 2 * nc, 2):
            L[j + 1] += L[j] // beta
            L[j] %= beta
        if checked:
            _check_alternated(L, k, s, beta, 2 * s)
        steps += 3
        work += 1 + (s - k) + nc
        if s - k > width:
            width = s - k
    x[s - 1] = a * (u[s - 1] - L[s - 1]) % beta
    steps += 1
    work += 1
    return x, (steps, width, work)


def dmod(u, v, beta, a, checked):
    """Returns ``(x, L, trace)``; ``L`` has s+2 cells, the top one the sign."""
    s = len(u)
    t = len(v)
    r = s - t + 1
    U = list(u) + [0]
    L = [0] * (s + 2)
    x = [0] * r
    steps = work = 0
    width = 1
    for k in range(r):
        xk = a * (U[k] - L[k]) % beta
        x[k] = xk
        for i in range(t):
            L[k + i] += xk * v[i]
        if checked:
            _check_precarry(L, k, s, beta)
        nc = (s - k - 1) // 2 + 1
        for j in range(k, k + 2 * nc, 2):
            L[j + 1] += L[j] // beta
            L[j] %= beta
        if checked:
            _check_alternated(L, k, s, beta, None)
        steps += 3
        work += 1 + t + nc
        width = max(width, t, nc)
    L[r] += beta - U[r]
    for j in range(r + 1, s + 1):
        L[j] += beta - 1 - U[j]
    steps += 1
    work += s - r + 1
    width = max(width, s - r + 1)
    for k in range(r, s + 1):
        nc = (s - k) // 2 + 1
        for j in range(k, k + 2 * nc, 2):
            L[j + 1] += L[j] // beta
            L[j] %= beta
        steps += 1
        work += nc
        width = max(width, nc)
    if checked:
        for j in range(r, s + 1):
            if not 0 <= L[j] < beta:
                raise InvariantViolation(f"dmod cell {j} not normalized")
        if L[s + 1] not in (0, 1):
            raise InvariantViolation(f"dmod sign cell holds {L[s + 1]}")
    return x, L, (steps, width, work)


def par_mul(u, v, beta, checked):
    """Returns ``(L, trace)`` with ``L`` the s+t product digits."""
    s = len(u)
    t = len(v)
    L = [0] * (s + t + 1)
    steps = work = 0
    width = 0
    nc = (s - 1) // 2 + 1
    for k in range(t):
        vk = v[k]
        for i in range(s):
            L[k + i] += vk * u[i]
        if checked:
            _check_precarry(L, k, k + s, beta)
        for j in range(k, k + 2 * nc, 2):
            L[j + 1] += L[j] // beta
            L[j] %= beta
        if checked:
            _check_alternated(L, k, k + s, beta, None)
        steps += 2
        work += s + nc
        width = max(width, s, nc)
    for k in range(t, s + t):
        nc2 = (s + t - k - 1) // 2 + 1
        for j in range(k, k + 2 * nc2, 2):
            L[j + 1] += L[j] // beta
            L[j] %= beta
        steps += 1
        work += nc2
        width = max(width, nc2)
    if checked:
        if L[s + t]:
            raise InvariantViolation("product overflowed s+t digits")
        for j in range(s + t):
            if not 0 <= L[j] < beta:
                raise InvariantViolation(f"product cell {j} not normalized")
    return L[: s + t], (steps, width, work)
