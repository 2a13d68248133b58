"""Closed formula and recursion machinery for the K3 Segre numbers.

For a K3 surface with a polarization of self-intersection 2g - 2, the
top Segre number of the rank-k tautological bundle is

    s(k, g) = 2^k * C(g - 2k + 1, k),

where C(n, k) = n (n-1) ... (n-k+1) / k! is the generalized binomial,
defined for every integer n.  The same numbers satisfy a convolution
recursion in the genus direction,

    s(k, g) = sum_{l=0..k} b_l * s(k-l, g-1),

whose kernel b_l is the sequence of abelian-surface Segre numbers for a
principal polarization.  Together with the two vanishings
s(k, 2k) = s(k, 2k-1) = 0 for k >= 2, the recursion pins down b_k and
the genus-one column s(k, 1) by induction on k; `determine_b_s1`
implements that determination without ever consulting the closed
formula, so the two routes stay independent and can be tested against
each other.

`determine_b_prime` recovers the same kernel a third way: for fixed k
the closed values g -> s(k, g) form a polynomial of degree k, so the
convolution identity is a finite linear system once evaluated at k + 1
distinct genera.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .series import ExactRational

__all__ = [
    "BSequences",
    "closed_segre",
    "determine_b_prime",
    "determine_b_s1",
    "generalized_binomial",
    "recursion_segre",
]


def generalized_binomial(n: int, k: int) -> ExactRational:
    """Falling-factorial binomial n(n-1)...(n-k+1)/k!, any integer n.

    Always 1 for k = 0, and 0 exactly when 0 <= n < k.
    """
    if k < 0:
        raise ValueError("binomial lower index must be non-negative")
    num = 1
    for j in range(k):
        num *= n - j
    return Fraction(num, factorial(k))


def closed_segre(k: int, g: int) -> ExactRational:
    """The genus-g K3 Segre number 2^k * C(g - 2k + 1, k).

    Taken as the definition for every integer g, including g <= 0.
    The value vanishes exactly on the window 2k - 1 <= g <= 3k - 2.
    """
    return generalized_binomial(g - 2 * k + 1, k) * 2**k


@dataclass(frozen=True)
class BSequences:
    """Sequences determined by the recursion and its vanishings.

    `b` is the abelian kernel, `s1` the genus-one column, and `b_prime`
    (optional) the kernel recovered by polynomial interpolation.  The
    seeds b_0 = 1, b_1 = 2, s1_0 = 1, s1_1 = 0 are checked on creation.
    """

    b: tuple[ExactRational, ...]
    s1: tuple[ExactRational, ...]
    b_prime: tuple[ExactRational, ...] | None = None

    def __post_init__(self):
        if len(self.b) != len(self.s1):
            raise ValueError("b and s1 must be filled to the same index")
        for name, seq, seeds in (
            ("b", self.b, (1, 2)),
            ("s1", self.s1, (1, 0)),
            ("b_prime", self.b_prime, (1, 2)),
        ):
            if seq is None:
                continue
            for i, expected in enumerate(seeds):
                if len(seq) > i and seq[i] != expected:
                    raise ValueError(f"{name}[{i}] must be {expected}, got {seq[i]}")


def _segre_table(
    b: tuple[ExactRational, ...] | list,
    s1: tuple[ExactRational, ...] | list,
    lmax: int,
    gmax: int,
) -> list[list[Fraction]]:
    """Rows s(l, g) for 0 <= l <= lmax, 1 <= g <= gmax via the recursion.

    Row l at genus g sits at rows[l][g - 1]; needs b and s1 up to lmax.
    """
    rows = [[Fraction(s1[l])] for l in range(lmax + 1)]
    for g in range(2, gmax + 1):
        for l in range(lmax + 1):
            rows[l].append(sum(b[j] * rows[l - j][g - 2] for j in range(l + 1)))
    return rows


def determine_b_s1(K: int) -> BSequences:
    """Determine b and the genus-one column up to index K.

    Induction on k: with everything below k known, telescoping the
    recursion from genus 1 upward expresses s(k, 2k) and s(k, 2k - 1)
    as affine functions of the two unknowns (s(k, 1), b_k) whose linear
    part is unimodular, and the two vanishings make the system square.
    """
    if K < 0:
        raise ValueError("sequence length must be non-negative")
    b = [Fraction(1), Fraction(2)][: K + 1]
    s1 = [Fraction(1), Fraction(0)][: K + 1]
    for k in range(2, K + 1):
        rows = _segre_table(b, s1, k - 1, 2 * k - 1)

        def m(g: int) -> Fraction:
            return sum(b[l] * rows[k - l][g - 2] for l in range(1, k))

        bk = -m(2 * k)
        s1k = -sum(m(g) for g in range(2, 2 * k)) - (2 * k - 2) * bk
        b.append(bk)
        s1.append(s1k)
    return BSequences(b=tuple(b), s1=tuple(s1))


def recursion_segre(k: int, g: int, seqs: BSequences) -> ExactRational:
    """s(k, g) for g >= 1 by iterating the convolution up from genus one."""
    if g < 1:
        raise ValueError("recursion route is defined for g >= 1 only")
    if k < 0:
        raise ValueError("k must be non-negative")
    if len(seqs.b) <= k:
        raise ValueError("b-sequence too short")
    return _segre_table(seqs.b, seqs.s1, k, g)[k][g - 1]


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Fraction; the matrix must be nonsingular."""
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / m[col][col]
                for j in range(col, n + 1):
                    m[r][j] -= factor * m[col][j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        x[i] = (m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))) / m[i][i]
    return x


def determine_b_prime(K: int) -> tuple[ExactRational, ...]:
    """Recover the convolution kernel from the closed formula alone.

    For the size-K identity the closed values at genera 1 .. K give a
    square system in b'_1 .. b'_K (the column degrees drop one by one,
    so the matrix is a nonsingular generalized Vandermonde); the value
    at genus K + 1 is the extra interpolation point that certifies the
    degree-K polynomial identity holds for every g.
    """
    if K < 0:
        raise ValueError("sequence length must be non-negative")
    if K == 0:
        return (Fraction(1),)
    matrix = [
        [closed_segre(K - l, g - 1) for l in range(1, K + 1)] for g in range(1, K + 1)
    ]
    rhs = [closed_segre(K, g) - closed_segre(K, g - 1) for g in range(1, K + 1)]
    solution = _solve_linear(matrix, rhs)
    b_prime = (Fraction(1), *solution)
    g_check = K + 1
    residual = closed_segre(K, g_check) - sum(
        b_prime[l] * closed_segre(K - l, g_check - 1) for l in range(K + 1)
    )
    if residual != 0:
        raise ArithmeticError("interpolation consistency check failed")
    return b_prime
