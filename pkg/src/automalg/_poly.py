# Dense univariate polynomials as ascending coefficient lists.

from fractions import Fraction


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p, q):
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        c = p[-1] / q[-1]
        quot[shift] = c
        for i, b in enumerate(q):
            p[i + shift] -= c * b
        p = trim(p)
    return trim(quot), p


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return p


def char_reversed(matrix):
    """Ascending coefficients of det(I - t*M) for a square integer matrix,
    via Faddeev-LeVerrier (all divisions exact)."""
    n = len(matrix)
    coeffs = [1]  # c_n, c_{n-1}, ... of det(lambda*I - M)
    prev = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        cur = [
            [sum(matrix[i][l] * prev[l][j] for l in range(n)) + (c_prev if i == j else 0)
             for j in range(n)]
            for i in range(n)
        ]
        trace = sum(sum(matrix[i][l] * cur[l][i] for l in range(n)) for i in range(n))
        assert trace % k == 0
        coeffs.append(-trace // k)
        prev = cur
    return trim(coeffs)


def as_integers(p):
    out = []
    for c in p:
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {c}")
        out.append(int(c))
    return out


def series(num, den, n):
    """First ``n`` Maclaurin coefficients of num/den, den[0] == 1."""
    out = []
    for k in range(n):
        c = num[k] if k < len(num) else 0
        c -= sum(den[j] * out[k - j] for j in range(1, min(k, len(den) - 1) + 1))
        out.append(c)
    return out


def to_str(p, var="t"):
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        sign = "-" if c < 0 else "+"
        if not terms:
            terms.append(body if sign == "+" else f"-{body}")
        else:
            terms.append(f"{sign} {body}")
    if not terms:
        return "0"
    text = " ".join(terms)
    return f"({text})" if len(terms) > 1 else text
