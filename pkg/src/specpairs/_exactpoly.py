"""Exact integer characteristic polynomials and root counting.

Two independent routes to char polys, both exact:

* ``charpoly``: the production route.  Reduce to Hessenberg form modulo
  each of several word-size primes (similarity transforms only), run the
  leading-minor recurrence, and combine residues by CRT.  Primes stay
  below 2^27 so an int64 matrix product of residues cannot overflow
  (n * p^2 < 2^63 up to n ~ 500), which lets numpy do the inner loops.
  The prime budget is derived from a rigorous coefficient bound, so the
  result is exact, not heuristic.

* ``berkowitz_charpoly``: a short division-free recurrence in plain
  Python integers.  Cubic per minor and far slower, but it shares no
  code or ideas with the modular route, which makes it a useful
  cross-check at small orders.

``count_roots_greater`` counts roots exceeding a dyadic rational by
Descartes' rule after an integer Taylor shift.  For real-rooted
polynomials (characteristic polynomials of symmetric matrices) the sign
variation count is exactly the number of roots in (a, infinity), so the
comparison is decided entirely in integer arithmetic.
"""

from __future__ import annotations

import math

import numpy as np

_PRIME_CEILING = (1 << 27) - 1

_primes: list = []  # descending, grown on demand
_next_candidate = _PRIME_CEILING


def _is_prime(m: int) -> bool:
    # deterministic Miller-Rabin; bases 2,3,5,7 cover m < 3_215_031_751
    if m < 2:
        return False
    for p in (2, 3, 5, 7):
        if m % p == 0:
            return m == p
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _prime(i: int) -> int:
    """The i-th prime below 2^27, counting downward from the ceiling."""
    global _next_candidate
    while len(_primes) <= i:
        while not _is_prime(_next_candidate):
            _next_candidate -= 1
        _primes.append(_next_candidate)
        _next_candidate -= 1
    return _primes[i]


def _hessenberg_charpoly_mod(mat: np.ndarray, p: int) -> np.ndarray:
    """Char poly of ``mat`` modulo prime p, coefficients low to high.

    Reduces to upper Hessenberg form by similarity (row eliminations
    mirrored by column operations), then runs the standard recurrence on
    leading principal minors of xI - H.
    """
    n = mat.shape[0]
    H = np.mod(mat.astype(np.int64), p)
    for j in range(n - 2):
        # pivot below the subdiagonal
        col = H[j + 1 :, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            H[[j + 1, piv], :] = H[[piv, j + 1], :]
            H[:, [j + 1, piv]] = H[:, [piv, j + 1]]
        inv = pow(int(H[j + 1, j]), p - 2, p)
        mult = (H[j + 2 :, j] * inv) % p
        H[j + 2 :, :] = (H[j + 2 :, :] - np.outer(mult, H[j + 1, :])) % p
        H[:, j + 1] = (H[:, j + 1] + H[:, j + 2 :] @ mult) % p

    # P[m] = char poly of the m-th leading minor of xI - H, low-to-high.
    # For Hessenberg H the expansion along the last column gives
    #   P[m] = (x - H[m-1,m-1]) P[m-1]
    #          - sum_i H[i,m-1] (prod_{j=i+1..m-1} H[j,j-1]) P[i]
    # with prod[i] maintained incrementally as m grows.
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    prod = np.ones(n, dtype=np.int64)
    for m in range(1, n + 1):
        if m >= 2:
            prod[: m - 1] = prod[: m - 1] * int(H[m - 1, m - 2]) % p
        a = int(H[m - 1, m - 1])
        P[m, 1 : m + 1] = P[m - 1, :m]
        P[m, :m] = (P[m, :m] - a * P[m - 1, :m]) % p
        if m >= 2:
            w = H[: m - 1, m - 1] * prod[: m - 1] % p
            if w.any():
                # n * p^2 < 2^63 keeps the int64 dot product exact
                P[m, :m] = (P[m, :m] - w @ P[: m - 1, :m]) % p
    return P[n]


def _coefficient_bound(mat: np.ndarray) -> int:
    """A bound B with |c_k| <= B for all char poly coefficients.

    Uses |c_{n-m}| <= C(n, m) * (max row squared norm)^{m/2}, a direct
    consequence of expressing coefficients as sums of principal minors
    and bounding each minor by Hadamard's inequality.
    """
    n = mat.shape[0]
    m64 = mat.astype(np.int64)
    b2 = int((m64 * m64).sum(axis=1).max()) if n else 0
    best = 1
    for m in range(n + 1):
        sq = math.comb(n, m) ** 2 * max(b2, 1) ** m
        cand = math.isqrt(sq) + 1
        if cand > best:
            best = cand
    return best


def charpoly(mat: np.ndarray) -> list:
    """Exact char poly det(xI - mat) of an integer matrix, coefficients
    low to high, via CRT over word-size primes."""
    m = np.asarray(mat)
    n = m.shape[0]
    if n == 0:
        return [1]
    bound = _coefficient_bound(m)
    target = 2 * bound + 1

    residues = []
    primes_used = []
    modulus = 1
    i = 0
    while modulus < target:
        p = _prime(i)
        i += 1
        residues.append(_hessenberg_charpoly_mod(m, p))
        primes_used.append(p)
        modulus *= p

    # incremental CRT, lifted to the symmetric range at the end
    coeffs = [int(r) for r in residues[0]]
    mod = primes_used[0]
    for res, p in zip(residues[1:], primes_used[1:]):
        inv = pow(mod % p, p - 2, p)
        for k in range(n + 1):
            delta = (int(res[k]) - coeffs[k]) % p
            coeffs[k] = coeffs[k] + mod * (delta * inv % p)
        mod *= p
    half = mod // 2
    return [c - mod if c > half else c for c in coeffs]


def berkowitz_charpoly(mat) -> list:
    """Exact char poly det(xI - mat) by the Berkowitz/Samuelson
    division-free recurrence, coefficients low to high.

    Plain Python integers throughout; intended as an independent oracle
    for small matrices rather than a production path.
    """
    a = [[int(x) for x in row] for row in np.asarray(mat)]
    n = len(a)
    if n == 0:
        return [1]
    # q holds coefficients of the current leading minor, highest first
    q = [1]
    for k in range(1, n + 1):
        akk = a[k - 1][k - 1]
        row = a[k - 1][: k - 1]  # R: below-block row
        col = [a[i][k - 1] for i in range(k - 1)]  # C: right-block column
        # t = [-1, a_kk, R C, R A C, R A^2 C, ...]
        t = [-1, akk]
        if k > 1:
            vec = col
            for _ in range(k - 1):
                t.append(sum(r * v for r, v in zip(row, vec)))
                vec = [
                    sum(a[i][j] * vec[j] for j in range(k - 1))
                    for i in range(k - 1)
                ]
                if len(t) == k + 1:
                    break
        new = [0] * (k + 1)
        for i, ti in enumerate(t):
            if ti == 0:
                continue
            for j, qj in enumerate(q):
                if i + j <= k:
                    new[i + j] -= ti * qj
        q = new
    return list(reversed(q))


def taylor_shift(coeffs: list, a: int) -> list:
    """Coefficients of p(x + a) for integer a, low to high, by synthetic
    division (Horner/Ruffini), exactly."""
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return out


def count_roots_greater(coeffs: list, num: int, scale_bits: int) -> int:
    """Number of real roots of p strictly greater than num / 2^scale_bits.

    Exact for real-rooted p: substitute x -> x/2^s (clearing denominators),
    Taylor-shift by num, and count Descartes sign variations; with all
    roots real the variation count equals the root count in (a, inf).
    Roots are counted with multiplicity.
    """
    n = len(coeffs) - 1
    scaled = [c << (scale_bits * (n - i)) for i, c in enumerate(coeffs)]
    shifted = taylor_shift(scaled, num)
    signs = [c for c in shifted if c != 0]
    count = 0
    for x, y in zip(signs, signs[1:]):
        if (x > 0) != (y > 0):
            count += 1
    return count
