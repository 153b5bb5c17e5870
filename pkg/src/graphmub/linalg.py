"""Exact dense linear algebra over Z_p.

Determinant, rank and inverse run by Gaussian elimination with modular
pivot inverses.  The characteristic polynomial uses the division-free
Berkowitz recursion, which stays correct for every prime p including
p <= n (Faddeev-LeVerrier would divide by k!).
"""

from __future__ import annotations

from .fields import PolyZp, check_prime


class MatZp:
    """Immutable n x n matrix over Z_p, row-major tuples."""

    __slots__ = ("p", "n", "rows")

    def __init__(self, p: int, rows) -> None:
        check_prime(p)
        rs = tuple(tuple(v % p for v in row) for row in rows)
        n = len(rs)
        if n < 1 or any(len(r) != n for r in rs):
            raise ValueError("matrix must be square with n >= 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("MatZp is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zeros(cls, p: int, n: int) -> "MatZp":
        return cls(p, [[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, p: int, n: int) -> "MatZp":
        return cls(p, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, p: int, entries) -> "MatZp":
        es = list(entries)
        n = len(es)
        return cls(p, [[es[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def companion(cls, f: PolyZp) -> "MatZp":
        """Companion matrix: superdiagonal ones, last row (-c_0, ..., -c_{n-1})."""
        if not f.is_monic:
            raise ValueError("companion matrix requires a monic polynomial")
        n = f.degree
        if n < 1:
            raise ValueError("companion matrix requires degree >= 1")
        rows = [[int(j == i + 1) for j in range(n)] for i in range(n - 1)]
        rows.append([-f.coeff(k) % f.p for k in range(n)])
        return cls(f.p, rows)

    # -- structure ---------------------------------------------------

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatZp)
            and self.p == other.p
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.p, self.rows))

    def __repr__(self) -> str:
        body = ", ".join(str(list(r)) for r in self.rows)
        return f"MatZp({self.p}, [{body}])"

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @property
    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def _check_same(self, other: "MatZp") -> None:
        if not isinstance(other, MatZp):
            raise TypeError(f"expected MatZp, got {type(other).__name__}")
        if self.p != other.p or self.n != other.n:
            raise ValueError("shape or modulus mismatch")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "MatZp") -> "MatZp":
        self._check_same(other)
        return MatZp(
            self.p,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: "MatZp") -> "MatZp":
        self._check_same(other)
        return MatZp(
            self.p,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> "MatZp":
        return MatZp(self.p, [[-v for v in r] for r in self.rows])

    def scale(self, s: int) -> "MatZp":
        return MatZp(self.p, [[s * v for v in r] for r in self.rows])

    def __matmul__(self, other: "MatZp") -> "MatZp":
        self._check_same(other)
        p, n = self.p, self.n
        cols = list(zip(*other.rows))
        return MatZp(
            p,
            [
                [sum(a * b for a, b in zip(row, col)) % p for col in cols]
                for row in self.rows
            ],
        )

    def __pow__(self, k: int) -> "MatZp":
        if k < 0:
            return self.inverse() ** (-k)
        acc = MatZp.identity(self.p, self.n)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base
            k >>= 1
        return acc

    def transpose(self) -> "MatZp":
        return MatZp(self.p, list(zip(*self.rows)))

    def submatrix(self, row_idx, col_idx) -> list[list[int]]:
        """Rectangular block (plain lists; not necessarily square)."""
        return [[self.rows[i][j] for j in col_idx] for i in row_idx]

    # -- elimination-based quantities -----------------------------------

    def det(self) -> int:
        p, n = self.p, self.n
        m = [list(r) for r in self.rows]
        d = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d % p
            d = d * m[c][c] % p
            inv = pow(m[c][c], p - 2, p)
            for r in range(c + 1, n):
                if m[r][c]:
                    f = m[r][c] * inv % p
                    m[r] = [(a - f * b) % p for a, b in zip(m[r], m[c])]
        return d

    def rank(self) -> int:
        return rank_mod_p(self.to_lists(), self.p)

    def inverse(self) -> "MatZp":
        p, n = self.p, self.n
        m = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[c], m[piv] = m[piv], m[c]
            inv = pow(m[c][c], p - 2, p)
            m[c] = [v * inv % p for v in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [(a - f * b) % p for a, b in zip(m[r], m[c])]
        return MatZp(p, [row[n:] for row in m])

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n)) % self.p

    def char_poly(self) -> PolyZp:
        """Monic characteristic polynomial det(x*1 - M) via Berkowitz."""
        p, n = self.p, self.n
        # vec holds descending coefficients [1, c_{k-1}, ..., c_0] for the
        # trailing principal k x k submatrix, grown from the bottom-right.
        a0 = self.rows[n - 1][n - 1]
        vec = [1, -a0 % p]
        for k in range(2, n + 1):
            s = n - k  # submatrix starts at (s, s)
            a = self.rows[s][s]
            row = self.rows[s][s + 1 :]
            col = [self.rows[i][s] for i in range(s + 1, n)]
            sub = [list(r[s + 1 :]) for r in self.rows[s + 1 :]]
            # Toeplitz column: [1, -a, -R C, -R A C, ..., -R A^{k-2} C]
            tcol = [1, -a % p]
            v = col
            for _ in range(k - 1):
                tcol.append(-sum(r * x for r, x in zip(row, v)) % p)
                v = [sum(q * x for q, x in zip(rw, v)) % p for rw in sub]
            new = [0] * (k + 1)
            for i in range(k + 1):
                total = 0
                for j in range(len(vec)):
                    d = i - j
                    if 0 <= d < len(tcol):
                        total += tcol[d] * vec[j]
                new[i] = total % p
            vec = new
        return PolyZp(p, list(reversed(vec)))


def rank_mod_p(block: list[list[int]], p: int) -> int:
    """Rank over Z_p of a rectangular block (row lists, already reduced)."""
    m = [list(r) for r in block]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c] % p, p - 2, p)
        for r in range(rank + 1, nrows):
            if m[r][c] % p:
                f = m[r][c] * inv % p
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def congruence(pmat: MatZp, b: MatZp) -> MatZp:
    """P B P^T; symmetric whenever B is."""
    pmat._check_same(b)
    return pmat @ b @ pmat.transpose()
