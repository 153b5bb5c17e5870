"""Symmetric n x n matrices over Z_p with irreducible characteristic polynomial.

Two routes produce the seed matrix Q:

1. Companion symmetrization.  Build the companion matrix C of a monic
   irreducible f, find a symmetric invertible B with C B = B C^T, reduce
   B to the identity by congruence transformations (P B P^T = 1), and
   take Q = P C P^{-1}.  Works for every prime p and degree n.

2. Tridiagonal search.  Scan diagonals d of the symmetric tridiagonal
   matrix with unit off-diagonals until the characteristic polynomial is
   irreducible.  Guaranteed to succeed for p = 2; for p >= 3 a miss is a
   normal outcome and the caller falls back to route 1.

The congruence reductions follow a fixed deterministic scan so that a
given input always yields the same witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fields import (
    PolyZp,
    check_prime,
    is_quadratic_residue,
    smallest_nonresidue,
    sqrt_mod,
)
from .linalg import MatZp, congruence


class ConstructionError(Exception):
    """A requested construction cannot be carried out."""


class PrimitivePolynomialRequired(ConstructionError):
    """The multiplier g = C is only valid for primitive polynomials."""


@dataclass(frozen=True)
class SymmetricRep:
    """Witness for a symmetric representation seed.

    Invariants: q is symmetric, char_poly(q) = f, and for the companion
    route q = transform @ companion @ transform^{-1}.
    """

    f: PolyZp
    q: MatZp
    method: str  # "companion" or "tridiagonal"
    companion: MatZp | None = None
    transform: MatZp | None = None
    multiplier: object = None  # int, MatZp, or None
    d: tuple[int, ...] | None = None

    @property
    def p(self) -> int:
        return self.f.p

    @property
    def n(self) -> int:
        return self.f.degree

    def to_document(self) -> dict:
        doc = {
            "p": self.p,
            "n": self.n,
            "polynomial": list(self.f.coeffs),
            "method": self.method,
            "q": self.q.to_lists(),
        }
        if self.d is not None:
            doc["d"] = list(self.d)
        if self.companion is not None:
            doc["companion"] = self.companion.to_lists()
        if self.transform is not None:
            doc["transform"] = self.transform.to_lists()
        if isinstance(self.multiplier, MatZp):
            doc["multiplier"] = self.multiplier.to_lists()
        elif self.multiplier is not None:
            doc["multiplier"] = self.multiplier
        return doc


# ---------------------------------------------------------------------------
# Commuting bilinear forms: symmetric invertible B with C B = B C^T
# ---------------------------------------------------------------------------


def symmetrizing_form_char2(f: PolyZp) -> MatZp:
    """The mod-2 form with a unit corner and an anti-triangular tail block.

    Coefficients: b_1 = c_0 and b_i = sum_{k=1}^{i-1} c_{n-i+k} b_k.
    """
    if f.p != 2:
        raise ValueError("this form is specific to p = 2")
    _require_monic_irreducible(f)
    n = f.degree
    b = [0] * n  # b[1..n-1] used
    if n > 1:
        b[1] = f.coeff(0)
        for i in range(2, n):
            b[i] = sum(f.coeff(n - i + k) * b[k] for k in range(1, i)) % 2
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1
    for i in range(1, n):
        for j in range(1, n):
            if i + j >= n:
                rows[i][j] = b[i + j - n + 1]
    return MatZp(2, rows)


def symmetrizing_form_odd(f: PolyZp) -> MatZp:
    """The anti-triangular symmetric base form for odd p.

    Coefficients: b_0 = 1 and b_i = -sum_{k=0}^{i-1} c_{n-i+k} b_k; the
    form has b_0 on the anti-diagonal and b_1, ..., b_{n-1} below it.
    Its determinant is +1 for n mod 4 in {0, 1} and -1 otherwise.
    """
    if f.p == 2:
        raise ValueError("use symmetrizing_form_char2 for p = 2")
    _require_monic_irreducible(f)
    p, n = f.p, f.degree
    b = [0] * n
    b[0] = 1
    for i in range(1, n):
        b[i] = -sum(f.coeff(n - i + k) * b[k] for k in range(i)) % p
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i + j >= n - 1:
                rows[i][j] = b[i + j - n + 1]
    return MatZp(p, rows)


def choose_form_multiplier(f: PolyZp, c: MatZp):
    """Pick g so that det(g B_0) is a quadratic residue (p >= 3).

    Returns an int for the scalar cases, or the companion matrix itself
    when n mod 4 = 2 and -1 is a non-residue; the matrix case demands a
    primitive polynomial.
    """
    p, n = f.p, f.degree
    if p == 2:
        raise ValueError("multiplier selection applies to odd p only")
    if n % 4 in (0, 1) or is_quadratic_residue(p - 1, p):
        return 1
    if n % 4 == 3:
        return smallest_nonresidue(p)
    # n mod 4 = 2 with -1 a non-residue: need det(g) a non-residue, which
    # holds for g = C exactly when f is primitive.
    if not f.is_primitive():
        raise PrimitivePolynomialRequired(
            f"n mod 4 = 2 and -1 is a non-residue mod {p}: "
            f"a primitive polynomial is required, got {f}"
        )
    return c


# ---------------------------------------------------------------------------
# Congruence reduction P B P^T = 1
# ---------------------------------------------------------------------------


class _Reduction:
    """Mutable state for a congruence reduction: B and the accumulated P."""

    def __init__(self, b: MatZp):
        self.p = b.p
        self.n = b.n
        self.B = b.to_lists()
        self.P = [[int(i == j) for j in range(b.n)] for i in range(b.n)]

    def _mix(self, idx: tuple[int, ...], coeff: list[list[int]]) -> None:
        """Apply T with the small block `coeff` on `idx`: B <- T B T^T, P <- T P."""
        p, k = self.p, len(idx)
        for mat, cols_too in ((self.B, True), (self.P, False)):
            new = [
                [
                    sum(coeff[a][b] * mat[idx[b]][c] for b in range(k)) % p
                    for c in range(self.n)
                ]
                for a in range(k)
            ]
            for a, i in enumerate(idx):
                mat[i] = new[a]
            if cols_too:
                for r in range(self.n):
                    vals = [
                        sum(coeff[a][b] * mat[r][idx[b]] for b in range(k)) % p
                        for a in range(k)
                    ]
                    for a, i in enumerate(idx):
                        mat[r][i] = vals[a]

    def swap(self, i: int, j: int) -> None:
        self._mix((i, j), [[0, 1], [1, 0]])

    def addrow(self, src: int, dst: int, a: int) -> None:
        self._mix((src, dst), [[1, 0], [a % self.p, 1]])

    def scale_row(self, i: int, s: int) -> None:
        self._mix((i,), [[s % self.p]])

    def omega_pair(self, i: int, j: int) -> None:
        self._mix((i, j), [[1, 1], [1, -1 % self.p]])

    def omega_triple(self, i: int, j: int, k: int) -> None:
        self._mix((i, j, k), [[1, 1, 0], [1, 0, 1], [1, 1, 1]])

    def phi(self, i: int, j: int, b: int) -> None:
        self._mix((i, j), [[1, b], [-b % self.p, 1]])

    def result(self, original: MatZp) -> MatZp:
        pmat = MatZp(self.p, self.P)
        assert congruence(pmat, original) == MatZp.identity(self.p, self.n)
        return pmat


def reduce_to_identity_char2(b: MatZp) -> MatZp:
    """P with P B P^T = 1 over Z_2.

    Requires B symmetric, nonsingular, with at least one unit diagonal
    entry.  Gaussian-style column sweep; when every remaining diagonal
    entry is zero, a three-row mixing step against the last completed
    pivot row restores unit pivots.
    """
    if b.p != 2:
        raise ValueError("char-2 reduction requires p = 2")
    _check_reducible_char2(b)
    st = _Reduction(b)
    B, n = st.B, st.n
    c = 0
    while c < n:
        if B[c][c] == 0:
            j = next((j for j in range(c + 1, n) if B[j][j]), None)
            if j is not None:
                st.swap(c, j)
            else:
                # zero diagonal tail; c >= 1 because the first pivot always
                # finds a unit diagonal entry
                j = next(j for j in range(c + 1, n) if B[j][c])
                if j != c + 1:
                    st.swap(c + 1, j)
                st.omega_triple(c - 1, c, c + 1)
                for i in (c - 1, c, c + 1):
                    for r in range(c + 2, n):
                        if B[r][i]:
                            st.addrow(i, r, 1)
            continue
        for r in range(c + 1, n):
            if B[r][c]:
                st.addrow(c, r, 1)
        c += 1
    return st.result(b)


def reduce_to_identity_odd(b: MatZp) -> MatZp:
    """P with P B P^T = 1 over odd Z_p; det(B) must be a quadratic residue.

    Three phases: (1) diagonalize, preferring pivots whose diagonal entry
    is already a quadratic residue and breaking zero-diagonal deadlocks
    with the [[1,1],[1,-1]] two-row mix; (2) rescale residue entries to 1;
    (3) equalize the remaining non-residues, clear them pairwise with the
    rotation-like mix [[1,b],[-b,1]] where 1 + b^2 is a non-residue, and
    rescale.
    """
    p, n = b.p, b.n
    if p == 2:
        raise ValueError("odd-p reduction requires p >= 3")
    if not b.is_symmetric:
        raise ValueError("input must be symmetric")
    det = b.det()
    if det == 0 or not is_quadratic_residue(det, p):
        raise ValueError("matrix is not congruent to the identity: "
                         "determinant must be a nonzero quadratic residue")
    st = _Reduction(b)
    B = st.B
    c = 0
    while c < n:
        if B[c][c] == 0:
            cands = [j for j in range(c + 1, n) if B[j][j]]
            if cands:
                preferred = [j for j in cands if is_quadratic_residue(B[j][j], p)]
                st.swap(c, (preferred or cands)[0])
            else:
                j = next(j for j in range(c + 1, n) if B[j][c])
                if j != c + 1:
                    st.swap(c + 1, j)
                st.omega_pair(c, c + 1)
            continue
        inv = pow(B[c][c], p - 2, p)
        for r in range(c + 1, n):
            if B[r][c]:
                st.addrow(c, r, -B[r][c] * inv % p)
        c += 1
    for i in range(n):
        if is_quadratic_residue(B[i][i], p):
            s = sqrt_mod(B[i][i], p)
            if s != 1:
                st.scale_row(i, pow(s, p - 2, p))
    nonres = [i for i in range(n) if B[i][i] != 1]
    if nonres:
        assert len(nonres) % 2 == 0
        qhat = smallest_nonresidue(p)
        for i in nonres:
            if B[i][i] != qhat:
                s = sqrt_mod(B[i][i] * pow(qhat, p - 2, p) % p, p)
                st.scale_row(i, pow(s, p - 2, p))
        bpar = next(
            v for v in range(1, p)
            if (1 + v * v) % p != 0 and not is_quadratic_residue((1 + v * v) % p, p)
        )
        for i, j in zip(nonres[0::2], nonres[1::2]):
            st.phi(i, j, bpar)
            s = sqrt_mod(B[i][i], p)
            if s != 1:
                sinv = pow(s, p - 2, p)
                st.scale_row(i, sinv)
                st.scale_row(j, sinv)
    return st.result(b)


def _check_reducible_char2(b: MatZp) -> None:
    if not b.is_symmetric:
        raise ValueError("input must be symmetric")
    if b.det() == 0:
        raise ValueError("singular matrix is not congruent to the identity")
    if all(b[i, i] == 0 for i in range(b.n)):
        raise ValueError("no unit diagonal entry: matrix is not congruent "
                         "to the identity over Z_2")


def _require_monic_irreducible(f: PolyZp) -> None:
    if f.degree is None or f.degree < 1 or not f.is_monic:
        raise ValueError("need a monic polynomial of degree >= 1")
    if not f.is_irreducible():
        raise ValueError(f"{f} is reducible")


# ---------------------------------------------------------------------------
# Companion symmetrization
# ---------------------------------------------------------------------------


def symmetrize_companion(f: PolyZp) -> SymmetricRep:
    """Symmetric Q similar to the companion matrix of f, with a witness."""
    _require_monic_irreducible(f)
    p = f.p
    c = MatZp.companion(f)
    if p == 2:
        bform = symmetrizing_form_char2(f)
        multiplier = None
        pmat = reduce_to_identity_char2(bform)
    else:
        b0 = symmetrizing_form_odd(f)
        multiplier = choose_form_multiplier(f, c)
        bform = multiplier @ b0 if isinstance(multiplier, MatZp) else b0.scale(multiplier)
        pmat = reduce_to_identity_odd(bform)
    assert c @ bform == bform @ c.transpose()
    q = pmat @ c @ pmat.inverse()
    assert q.is_symmetric
    assert q.char_poly() == f
    return SymmetricRep(
        f=f, q=q, method="companion", companion=c, transform=pmat,
        multiplier=multiplier,
    )


# ---------------------------------------------------------------------------
# Tridiagonal route
# ---------------------------------------------------------------------------

SEARCH_LIMIT = 10**7


def tridiagonal_matrix(p: int, d) -> MatZp:
    """Symmetric tridiagonal matrix with diagonal d and unit off-diagonals."""
    check_prime(p)
    d = [v % p for v in d]
    n = len(d)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = d[i]
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return MatZp(p, rows)


def tridiag_char_poly(p: int, d) -> PolyZp:
    """Characteristic polynomial by the three-term recursion.

    With D_0 = 1 and D_{-1} = 0, D_k = (x - d_{n+1-k}) D_{k-1} - D_{k-2};
    D_n is the characteristic polynomial of the full matrix.
    """
    check_prime(p)
    d = [v % p for v in d]
    n = len(d)
    prev, cur = PolyZp.zero(p), PolyZp.one(p)
    x = PolyZp.x(p)
    for k in range(1, n + 1):
        factor = x - PolyZp(p, [d[n - k]])
        prev, cur = cur, factor * cur - prev
    return cur


def tridiag_search(p: int, n: int, target: PolyZp | None = None,
                   primitive: bool = False):
    """Scan diagonals in lexicographic order.

    Without a target: the first d whose characteristic polynomial is
    irreducible (primitive when requested).  With a target polynomial:
    the first d realizing it exactly.  Returns the diagonal tuple, or
    None after exhausting all p^n candidates (a normal outcome for
    p >= 3, where not every polynomial has a tridiagonal realization).
    """
    check_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    if p**n > SEARCH_LIMIT:
        raise ValueError(f"search space p^n = {p**n} exceeds {SEARCH_LIMIT}")
    if target is not None:
        if target.degree != n or not target.is_monic:
            raise ValueError("target must be monic of degree n")
        if primitive and not (target.is_irreducible() and target.is_primitive()):
            return None
    for d in product(range(p), repeat=n):
        f = tridiag_char_poly(p, d)
        if target is not None:
            if f == target:
                return d
            continue
        if not f.is_irreducible():
            continue
        if primitive and not f.is_primitive():
            continue
        return d
    return None


NEWTON_MAX_DEGREE = 4


def newton_diagonals(f: PolyZp) -> list[tuple[int, ...]]:
    """All tridiagonal diagonals for f via the trace identities.

    For each candidate d the traces t_k = tr(Q^k) must satisfy
    t_k + c_{n-1} t_{k-1} + ... + c_{n-k+1} t_1 + k c_{n-k} = 0 (mod p);
    survivors are then confirmed against the characteristic polynomial.
    Degrees above 4 are rejected (use tridiag_search instead).
    """
    if f.degree is None or f.degree < 1 or not f.is_monic:
        raise ValueError("need a monic polynomial of degree >= 1")
    n, p = f.degree, f.p
    if n > NEWTON_MAX_DEGREE:
        raise ValueError(
            f"degree {n} exceeds the trace-identity solver limit "
            f"{NEWTON_MAX_DEGREE}; use tridiag_search"
        )
    out = []
    for d in product(range(p), repeat=n):
        q = tridiagonal_matrix(p, d)
        traces = [0]  # t_0 unused
        power = MatZp.identity(p, n)
        for _ in range(n):
            power = power @ q
            traces.append(power.trace())
        ok = True
        for k in range(1, n + 1):
            acc = traces[k] + k * f.coeff(n - k)
            for j in range(1, k):
                acc += f.coeff(n - j) * traces[k - j]
            if acc % p != 0:
                ok = False
                break
        if ok and tridiag_char_poly(p, d) == f:
            out.append(d)
    return out


def tridiagonal_rep(p: int, d) -> SymmetricRep:
    """Witness for an explicit tridiagonal diagonal."""
    q = tridiagonal_matrix(p, d)
    f = tridiag_char_poly(p, d)
    if not f.is_irreducible():
        raise ConstructionError(
            f"characteristic polynomial {f} of d={tuple(d)} is reducible"
        )
    assert q.char_poly() == f
    return SymmetricRep(f=f, q=q, method="tridiagonal", d=tuple(v % p for v in d))


# ---------------------------------------------------------------------------
# Top-level seed selection
# ---------------------------------------------------------------------------


def find_irreducible(p: int, n: int, primitive: bool = False) -> PolyZp:
    """Lexicographically first monic irreducible (or primitive) polynomial."""
    check_prime(p)
    for tail in product(range(p), repeat=n):
        # tail enumerates (c_{n-1}, ..., c_0); flip so c_0 varies fastest
        f = PolyZp(p, list(reversed(tail)) + [1])
        if f.is_irreducible() and (not primitive or f.is_primitive()):
            return f
    raise AssertionError("irreducible polynomials exist for every p, n")


def symmetric_representation(p: int, n: int, method: str = "auto",
                             poly: PolyZp | None = None, d=None,
                             primitive: bool = False) -> SymmetricRep:
    """Obtain a seed witness by the requested route.

    `auto` tries the tridiagonal search first (compact witness) and falls
    back to companion symmetrization, seeding with a primitive polynomial
    whenever the multiplier rule demands one.
    """
    check_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    if method not in ("auto", "tridiag", "companion"):
        raise ValueError(f"unknown method {method!r}")
    if d is not None:
        if method == "companion":
            raise ValueError("an explicit diagonal implies the tridiagonal method")
        if len(d) != n:
            raise ConstructionError(f"diagonal length {len(d)} != n = {n}")
        rep = tridiagonal_rep(p, d)
        if primitive and not rep.f.is_primitive():
            raise ConstructionError(f"char poly {rep.f} of d={tuple(d)} is not primitive")
        if poly is not None and rep.f != poly:
            raise ConstructionError(
                f"diagonal {tuple(d)} realizes {rep.f}, not the requested {poly}"
            )
        return rep
    if poly is not None:
        if poly.p != p or poly.degree != n or not poly.is_monic:
            raise ConstructionError("polynomial must be monic of degree n over Z_p")
        if not poly.is_irreducible():
            raise ConstructionError(f"{poly} is reducible over Z_{p}")
        if primitive and not poly.is_primitive():
            raise ConstructionError(f"{poly} is not primitive")
        if method in ("tridiag", "auto"):
            found = tridiag_search(p, n, target=poly)
            if found is not None:
                return tridiagonal_rep(p, found)
            if method == "tridiag":
                raise ConstructionError(
                    f"no tridiagonal matrix over Z_{p} realizes {poly}"
                )
        return symmetrize_companion(poly)
    if method in ("tridiag", "auto"):
        found = tridiag_search(p, n, primitive=primitive)
        if found is not None:
            return tridiagonal_rep(p, found)
        if method == "tridiag":
            raise ConstructionError(
                f"no tridiagonal diagonal over Z_{p} of size {n} is "
                f"{'primitive' if primitive else 'irreducible'}"
            )
        # auto fallback: a primitive seed always satisfies the multiplier rule
        return symmetrize_companion(find_irreducible(p, n, primitive=True))
    needs_primitive = primitive or (p % 4 == 3 and n % 4 == 2)
    return symmetrize_companion(find_irreducible(p, n, primitive=needs_primitive))
