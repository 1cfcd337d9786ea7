"""Dense exact matrices over any of the scalar types in exactnum.

Matrices are tuples of tuples.  Entries only need ring operations plus
truth testing; rank and solving additionally divide, which every scalar
here supports.
"""


def mat_from_rows(rows) -> tuple:
    return tuple(tuple(row) for row in rows)


def mat_identity(n: int, field) -> tuple:
    one, zero = field.one, field.zero
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def mat_zero(n: int, m: int, field) -> tuple:
    zero = field.zero
    return tuple(tuple(zero for _ in range(m)) for _ in range(n))


def mat_diag(entries) -> tuple:
    entries = list(entries)
    zero = entries[0] * 0 if entries else None
    n = len(entries)
    return tuple(
        tuple(entries[i] if i == j else zero for j in range(n))
        for i in range(n)
    )


def mat_add(A, B) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A) -> tuple:
    return tuple(tuple(c * x for x in row) for row in A)


def mat_mul(A, B) -> tuple:
    if A and B and len(A[0]) != len(B):
        raise ValueError("matrix dimension mismatch")
    if not A or not B or not B[0]:
        return tuple(row[:0] for row in A)
    zero = A[0][0] * 0
    out = []
    for row in A:
        acc = [zero] * len(B[0])
        for x, brow in zip(row, B):
            # generator matrices are mostly zeros; skip the dead terms
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return tuple(out)


def mat_trace(A):
    acc = A[0][0]
    for i in range(1, len(A)):
        acc = acc + A[i][i]
    return acc


def mat_eq(A, B) -> bool:
    if len(A) != len(B):
        return False
    return all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(A, B)
    )


def mat_is_zero(A) -> bool:
    return all(not x for row in A for x in row)


def mat_rank(A) -> int:
    if not A or not A[0]:
        return 0
    rows = [list(r) for r in A]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def mat_det(A):
    """Cofactor expansion along the first row; fine at the sizes used here."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        raise ValueError("empty matrix has no determinant here")
    if n == 1:
        return A[0][0]
    acc = None
    for j in range(n):
        if not A[0][j]:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in A[1:])
        term = A[0][j] * mat_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return A[0][0] * 0
    return acc


def mat_det_gauss(A):
    """Determinant by elimination with exact division; entries must divide."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        raise ValueError("empty matrix has no determinant here")
    rows = [list(r) for r in A]
    det = None
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            return A[0][0] * 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            rows[col] = [-x for x in rows[col]]
        pv = rows[col][col]
        det = pv if det is None else det * pv
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return det


def mat_replace_col(A, j: int, col) -> tuple:
    return tuple(
        row[:j] + (col[i],) + row[j + 1:] for i, row in enumerate(A)
    )
