"""Exact inertia of integer symmetric matrices.

Two independent routes are provided: :func:`signature` diagonalises by
symmetric congruence (rational in spirit, carried out fraction-free), :func:`signature_oracle` counts
the signs of the roots of the characteristic polynomial.  No floating
point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

ORACLE_MAX_DIM = 12


@dataclass(frozen=True)
class SignatureTriple:
    p: int
    q: int
    z: int

    @property
    def signature(self) -> int:
        return self.p - self.q

    @property
    def dim(self) -> int:
        return self.p + self.q + self.z

    @property
    def rank(self) -> int:
        return self.p + self.q


def as_matrix(m) -> list[list[int]]:
    rows = [list(r) for r in m]
    size = len(rows)
    for i, r in enumerate(rows):
        if len(r) != size:
            raise ValueError(f"row {i} has length {len(r)}, expected {size}")
    return rows


def check_symmetric(m) -> list[list[int]]:
    rows = as_matrix(m)
    for i in range(len(rows)):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")
    return rows


def _reduce(rows):
    """Divide out the gcd of all entries (a positive rescaling)."""
    g = 0
    for row in rows:
        for x in row:
            g = gcd(g, x)
    if g > 1:
        rows = [[x // g for x in row] for row in rows]
    return rows


def signature(m) -> SignatureTriple:
    """Inertia by congruence reduction.

    Pivot on the first nonzero diagonal entry.  When the remaining diagonal
    is zero but some off-diagonal entry is not, the 2x2 block
    [[0, b], [b, 0]] is split off; it contributes one positive and one
    negative square.  Each Schur complement is multiplied by a positive
    integer so every step stays in the integers; positive rescaling does
    not change inertia.
    """
    a = check_symmetric(m)
    p = q = 0
    while a:
        size = len(a)
        piv = next((i for i in range(size) if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                p += 1
            else:
                q += 1
            s = 1 if d > 0 else -1
            rest = [i for i in range(size) if i != piv]
            # |d| * (A - v v^T / d)
            a = _reduce([[s * (d * a[i][j] - a[i][piv] * a[piv][j]) for j in rest] for i in rest])
            continue
        pair = next(((i, j) for i in range(size) for j in range(i + 1, size)
                     if a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = a[i0][j0]
        p += 1
        q += 1
        rest = [k for k in range(size) if k not in pair]
        # b^2 times the Schur complement of [[0, b], [b, 0]]
        a = _reduce([[b * b * a[i][j] - b * (a[i][i0] * a[j0][j] + a[i][j0] * a[i0][j])
                      for j in rest] for i in rest])
    z = len(m) - p - q
    return SignatureTriple(p, q, z)


def charpoly(m) -> list[int]:
    """Coefficients of det(xI - M), highest degree first (Faddeev-LeVerrier).

    All divisions are exact over the integers.
    """
    a = as_matrix(m)
    size = len(a)
    coeffs = [1]
    am = [[0] * size for _ in range(size)]      # A M_0 with M_0 = 0
    c = 1
    for k in range(1, size + 1):
        # M_k = A M_{k-1} + c_{k-1} I, and we need A M_k
        mk = [row[:] for row in am]
        for i in range(size):
            mk[i][i] += c
        mk_cols = [list(col) for col in zip(*mk)]
        am = [[sum(x * y for x, y in zip(a[i], mk_cols[j])) for j in range(size)]
              for i in range(size)]
        tr = sum(am[i][i] for i in range(size))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c = -tr // k
        coeffs.append(c)
    return coeffs


def sign_changes(coeffs) -> int:
    signs = [x > 0 for x in coeffs if x != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def signature_oracle(m) -> SignatureTriple:
    """Inertia from the characteristic polynomial via Descartes' rule.

    Exact here because a symmetric matrix has only real eigenvalues.
    """
    rows = check_symmetric(m)
    size = len(rows)
    if size > ORACLE_MAX_DIM:
        raise ValueError(f"oracle limited to dimension {ORACLE_MAX_DIM}, got {size}")
    coeffs = charpoly(rows)
    z = 0
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        z += 1
    deg = len(coeffs) - 1
    # p(-x): flip the sign of odd-degree coefficients
    flipped = [c if (deg - i) % 2 == 0 else -c for i, c in enumerate(coeffs)]
    return SignatureTriple(sign_changes(coeffs), sign_changes(flipped), z)


def congruent(m, s) -> list[list[int]]:
    """S^T M S."""
    m, s = as_matrix(m), [list(r) for r in s]
    rows = len(s)
    cols = len(s[0]) if rows else 0
    ms = [[sum(m[i][k] * s[k][j] for k in range(rows)) for j in range(cols)] for i in range(rows)]
    return [[sum(s[k][i] * ms[k][j] for k in range(rows)) for j in range(cols)] for i in range(cols)]


def direct_sum(*blocks) -> list[list[int]]:
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def format_matrix(m, labels=None) -> list[str]:
    if not m:
        return ["(empty)"]
    width = max(len(str(x)) for row in m for x in row)
    if labels:
        lw = max(len(str(x)) for x in labels)
        width = max(width, lw)
        head = " " * (lw + 2) + " ".join(str(x).rjust(width) for x in labels)
        return [head] + [f"{str(labels[i]).ljust(lw)} [" + " ".join(str(x).rjust(width) for x in row) + "]"
                         for i, row in enumerate(m)]
    return ["[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in m]
