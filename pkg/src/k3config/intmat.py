"""Exact integer matrix reductions (Python ints, no overflow)."""

from __future__ import annotations

Matrix = list[list[int]]


def copy(A) -> Matrix:
    return [list(map(int, row)) for row in A]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B) -> Matrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A) -> Matrix:
    return [list(col) for col in zip(*A)]


def row_echelon(A) -> tuple[Matrix, Matrix, int]:
    """Return (R, T, r) with T unimodular, T A = R, R in echelon form with r nonzero rows on top."""
    R = copy(A)
    m = len(R)
    n = len(R[0]) if m else 0
    T = identity(m)
    r = 0
    for col in range(n):
        if r == m:
            break
        while True:
            rows = [i for i in range(r, m) if R[i][col]]
            if not rows:
                break
            p = min(rows, key=lambda i: abs(R[i][col]))
            R[r], R[p] = R[p], R[r]
            T[r], T[p] = T[p], T[r]
            done = True
            for i in range(r + 1, m):
                if R[i][col]:
                    q = R[i][col] // R[r][col]
                    if q:
                        R[i] = [a - q * b for a, b in zip(R[i], R[r])]
                        T[i] = [a - q * b for a, b in zip(T[i], T[r])]
                    if R[i][col]:
                        done = False
            if done:
                break
        if any(R[i][col] for i in range(r, m)):
            r += 1
    return R, T, r


def rank(A) -> int:
    return row_echelon(A)[2]


def left_kernel_basis(A) -> tuple[Matrix, Matrix]:
    """(complement, kernel): rows of a unimodular T split so that kernel @ A = 0.

    The kernel rows span the saturated left kernel; together with the
    complement rows they form a basis of Z^m.
    """
    _, T, r = row_echelon(A)
    return T[:r], T[r:]


def smith_invariants(A) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of A."""
    M = copy(A)
    m = len(M)
    n = len(M[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        nz = [(i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nz:
            break
        i0, j0 = min(nz, key=lambda ij: abs(M[ij[0]][ij[1]]))
        M[t], M[i0] = M[i0], M[t]
        for row in M:
            row[t], row[j0] = row[j0], row[t]
        while True:
            changed = False
            p = M[t][t]
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                if M[i][t]:
                    changed = True
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    changed = True
            if changed:
                # move the smallest remaining entry of row/column t to the pivot
                cand = [(i, t) for i in range(t, m) if M[i][t]] + [(t, j) for j in range(t, n) if M[t][j]]
                i1, j1 = min(cand, key=lambda ij: abs(M[ij[0]][ij[1]]))
                M[t], M[i1] = M[i1], M[t]
                for row in M:
                    row[t], row[j1] = row[j1], row[t]
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                None,
            )
            if bad is None:
                break
            M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
        out.append(abs(M[t][t]))
        t += 1
    return out


def det(A) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    M = copy(A)
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]
