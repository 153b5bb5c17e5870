"""Complete families of adjacency matrices for mutually unbiased graph bases.

A seed witness Q (symmetric, irreducible characteristic polynomial)
generates all p^n linear combinations of its first n powers.  The family
is closed under subtraction and every nonzero member is invertible, so
every pairwise difference has nonzero determinant: the algebraic
sufficient condition for mutual unbiasedness.  The computational basis
is implicit (always unbiased with respect to graph bases), making the
full family p^n + 1 bases.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .fields import PolyZp, check_prime
from .linalg import MatZp
from .symrep import SymmetricRep, symmetric_representation


@dataclass(frozen=True)
class MubSet:
    """p^n adjacency matrices indexed by coefficient vectors.

    Index i corresponds to the coefficient vector (a_0, ..., a_{n-1})
    with a_0 varying fastest: matrices[i] = sum_k a_k Q^k.  `field_rep`
    records whether the family is still closed under subtraction
    (collective shifts clear it).  The implicit computational basis is
    always part of the family and never stored.
    """

    p: int
    n: int
    matrices: tuple[MatZp, ...]
    witness: SymmetricRep | None = None
    field_rep: bool = False
    shifts: tuple[MatZp, ...] = ()
    method: str = "unknown"
    polynomial: PolyZp | None = None
    d: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return self.p**self.n

    @property
    def num_bases(self) -> int:
        """Graph bases plus the computational basis."""
        return len(self.matrices) + 1

    def coeff_vector(self, index: int) -> tuple[int, ...]:
        return index_to_coeffs(index, self.p, self.n)


def index_to_coeffs(index: int, p: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(index % p)
        index //= p
    return tuple(out)


def coeffs_to_index(coeffs, p: int) -> int:
    idx = 0
    for a in reversed(list(coeffs)):
        idx = idx * p + a % p
    return idx


def fundamental_graphs(witness: SymmetricRep) -> list[MatZp]:
    """The n powers Q^0, ..., Q^{n-1}; every family member is a
    Z_p-linear combination of these."""
    q = witness.q
    out = [MatZp.identity(witness.p, witness.n)]
    for _ in range(witness.n - 1):
        out.append(out[-1] @ q)
    return out


def adjacency_set(witness: SymmetricRep) -> MubSet:
    """All p^n linear combinations of the fundamental graphs."""
    p, n = witness.p, witness.n
    powers = fundamental_graphs(witness)
    mats = []
    for idx in range(p**n):
        coeffs = index_to_coeffs(idx, p, n)
        acc = MatZp.zeros(p, n)
        for a, pw in zip(coeffs, powers):
            if a:
                acc = acc + pw.scale(a)
        mats.append(acc)
    assert mats[0] == MatZp.zeros(p, n)
    assert mats[1] == MatZp.identity(p, n)
    return MubSet(
        p=p, n=n, matrices=tuple(mats), witness=witness, field_rep=True,
        method=witness.method, polynomial=witness.f, d=witness.d,
    )


def power_set(witness: SymmetricRep) -> MubSet:
    """Generate the same family as matrix powers {Q^i} plus the zero matrix.

    Valid only for a primitive characteristic polynomial; the resulting
    set is checked for equality with the linear-combination family and
    returned in canonical index order.
    """
    if not witness.f.is_primitive():
        raise ValueError(
            f"characteristic polynomial {witness.f} is not primitive: "
            "matrix powers do not reach every nonzero family member"
        )
    p, n = witness.p, witness.n
    acc = MatZp.identity(p, n)
    powers = {acc}
    for _ in range(p**n - 2):
        acc = acc @ witness.q
        powers.add(acc)
    powers.add(MatZp.zeros(p, n))
    family = adjacency_set(witness)
    assert powers == set(family.matrices), "power enumeration missed members"
    return family


def verify_mu_condition(s: MubSet, pairwise: bool = False):
    """Check det(A_r - A_s) != 0 for all r != s.

    For subtraction-closed families this reduces to invertibility of
    every nonzero member (p^n - 1 determinants); shifted or imported
    sets fall back to the full pairwise sweep.  Returns a report with
    the first failing pair, if any.
    """
    if s.field_rep and not pairwise:
        for idx in range(1, len(s.matrices)):
            if s.matrices[idx].det() == 0:
                return MuConditionReport(ok=False, mode="closure", failing_pair=(idx, 0))
        return MuConditionReport(ok=True, mode="closure", failing_pair=None)
    mats = s.matrices
    for r in range(len(mats)):
        for t in range(r + 1, len(mats)):
            if (mats[r] - mats[t]).det() == 0:
                return MuConditionReport(ok=False, mode="pairwise", failing_pair=(r, t))
    return MuConditionReport(ok=True, mode="pairwise", failing_pair=None)


@dataclass(frozen=True)
class MuConditionReport:
    ok: bool
    mode: str
    failing_pair: tuple[int, int] | None


def shift_set(s: MubSet, m: MatZp) -> MubSet:
    """Add a symmetric matrix to every member (a collective phase-gate
    action); differences and hence unbiasedness are unchanged, but the
    family need not represent a field any more."""
    if m.p != s.p or m.n != s.n:
        raise ValueError("shift matrix shape or modulus mismatch")
    if not m.is_symmetric:
        raise ValueError("shift matrix must be symmetric")
    return replace(
        s,
        matrices=tuple(a + m for a in s.matrices),
        field_rep=False,
        shifts=s.shifts + (m,),
    )


def mub_set(p: int, n: int, method: str = "auto", poly: PolyZp | None = None,
            d=None, primitive: bool = False) -> MubSet:
    """End-to-end construction: witness, family, unbiasedness check."""
    check_prime(p)
    witness = symmetric_representation(p, n, method=method, poly=poly, d=d,
                                       primitive=primitive)
    family = adjacency_set(witness)
    report = verify_mu_condition(family)
    assert report.ok, f"field representation failed the difference check: {report}"
    return family


# ---------------------------------------------------------------------------
# Interchange format
# ---------------------------------------------------------------------------


def to_document(s: MubSet) -> dict:
    doc = {
        "p": s.p,
        "n": s.n,
        "method": s.method,
        "polynomial": list(s.polynomial.coeffs) if s.polynomial else None,
        "matrices": [m.to_lists() for m in s.matrices],
        "field_rep": s.field_rep,
    }
    if s.d is not None:
        doc["d"] = list(s.d)
    if s.shifts:
        doc["shifts"] = [m.to_lists() for m in s.shifts]
    return doc


def from_document(doc: dict) -> MubSet:
    p = int(doc["p"])
    n = int(doc["n"])
    check_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    mats = []
    for rows in doc["matrices"]:
        m = MatZp(p, rows)
        if m.n != n:
            raise ValueError("matrix dimension does not match n")
        if not m.is_symmetric:
            raise ValueError("adjacency matrices must be symmetric")
        mats.append(m)
    if not mats:
        raise ValueError("document contains no matrices")
    poly = doc.get("polynomial")
    return MubSet(
        p=p,
        n=n,
        matrices=tuple(mats),
        witness=None,
        field_rep=bool(doc.get("field_rep", False)),
        shifts=tuple(MatZp(p, rows) for rows in doc.get("shifts", [])),
        method=doc.get("method", "unknown"),
        polynomial=PolyZp(p, poly) if poly else None,
        d=tuple(doc["d"]) if doc.get("d") is not None else None,
    )


def canonical_json(doc: dict) -> str:
    """Byte-stable serialization: sorted keys, compact separators."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
