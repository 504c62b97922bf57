"""Additive codes over the mixed alphabet Z_p^q x R^r x S^s.

An additive code is an S-submodule of the ambient word module.  Because the
scalar action restricted to Z_p c S is the coordinatewise Z_p action, every
such submodule is in particular a Z_p-subspace of the flattened coordinate
space Z_p^N, N = q + 2r + 3s.  A code is therefore stored as a row-reduced
Z_p basis of its flattened coordinates; S-module closure is equivalent to
closure of that row space under multiplication by u and u^2, which the
constructor verifies.

Duals are taken with respect to the u-weighted S-valued inner product
(u^2 on the Z_p block, u on the R block, 1 on the S block).  Each basis
word contributes three Z_p-linear constraints, one per u-coefficient of
the form; the dual is the kernel of the stacked constraint matrix, never
a codeword enumeration.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import linalg
from .errors import (DivisibilityViolation, GcdViolation, ProfileMismatch, TooLarge,
                     ZprsError)
from .polynomials import Poly, divides, poly_divmod, x_pow_n_minus
from .rings import ChainElement, unit_order
from .words import (BlockProfile, MixedWord, UnitLike, as_unit, constacyclic_shift, flatten,
                    mixed_scalar_mul, unflatten)


class GeneratorHypothesisWarning(UserWarning):
    """A structure-theorem hypothesis (ord-congruence or divisor chain) is violated.

    The construction itself closes the span directly, so the resulting code
    is a genuine constacyclic code either way; only the canonical-form
    guarantees of the structure theorems are void.
    """


class AdditiveCode:
    """Immutable additive code, held as a row-reduced flattened Z_p basis."""

    def __init__(self, profile: BlockProfile, rows: Sequence | np.ndarray, *,
                 _closed: bool = False):
        self.profile = profile
        mat = linalg.as_matrix(np.asarray(rows, dtype=np.int64) if len(rows) else [],
                               profile.n)
        basis, pivots = linalg.rref(mat, profile.p)
        self.basis = basis
        self.basis.setflags(write=False)
        self.pivots = pivots
        if not _closed:
            self._verify_module_closure()

    def _verify_module_closure(self) -> None:
        for w in self.basis_words():
            for d in ((0, 1, 0), (0, 0, 1)):
                img = flatten(mixed_scalar_mul(d, w))
                if not linalg.in_row_space(self.basis, self.pivots, img, self.profile.p):
                    raise ZprsError(
                        "row space is not closed under the S-module action; "
                        "build codes with span_closure")

    # -- basic queries ----------------------------------------------------

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.profile.p ** self.rank

    def basis_words(self) -> list[MixedWord]:
        return [unflatten(row, self.profile) for row in self.basis]

    def __eq__(self, other) -> bool:
        return (isinstance(other, AdditiveCode) and self.profile == other.profile
                and self.basis.shape == other.basis.shape
                and bool((self.basis == other.basis).all()))

    def __hash__(self) -> int:
        return hash((self.profile, self.basis.tobytes()))

    def __repr__(self) -> str:
        pr = self.profile
        return (f"AdditiveCode(p={pr.p}, (q,r,s)=({pr.q},{pr.r},{pr.s}), "
                f"rank={self.rank})")

    def contains(self, w: MixedWord | Sequence[int]) -> bool:
        if isinstance(w, MixedWord):
            if w.profile != self.profile:
                raise ProfileMismatch("word profile differs from the code profile")
            vec = flatten(w)
        else:
            vec = np.asarray(w, dtype=np.int64)
        return linalg.in_row_space(self.basis, self.pivots, vec, self.profile.p)

    def is_subcode_of(self, other: "AdditiveCode") -> bool:
        if self.profile != other.profile:
            raise ProfileMismatch("codes over different profiles")
        return all(other.contains(row) for row in self.basis)

    def iter_codeword_vectors(self, limit: int = 2 ** 24,
                              chunk: int = 1 << 14) -> Iterator[np.ndarray]:
        """Yield chunks of flattened codewords (all p^rank of them)."""
        p = self.profile.p
        if self.size > limit:
            raise TooLarge(f"code has {self.size} words, above the bound {limit}")
        k = self.rank
        if k == 0:
            yield np.zeros((1, self.profile.n), dtype=np.int64)
            return
        count = self.size
        radix = p ** np.arange(k, dtype=np.int64)
        for start in range(0, count, chunk):
            idx = np.arange(start, min(start + chunk, count), dtype=np.int64)
            coeffs = (idx[:, None] // radix[None, :]) % p
            yield coeffs @ self.basis % p

    def codeword_vectors(self, limit: int = 2 ** 20) -> np.ndarray:
        """All codewords as one matrix; tighter default bound than the chunked walk."""
        return np.concatenate(list(self.iter_codeword_vectors(limit)), axis=0)

    def codewords(self, limit: int = 2 ** 20) -> Iterator[MixedWord]:
        for block in self.iter_codeword_vectors(limit):
            for row in block:
                yield unflatten(row, self.profile)

    # -- constructions ----------------------------------------------------

    @classmethod
    def zero(cls, profile: BlockProfile) -> "AdditiveCode":
        return cls(profile, [], _closed=True)

    @classmethod
    def full_space(cls, profile: BlockProfile) -> "AdditiveCode":
        return cls(profile, np.eye(profile.n, dtype=np.int64), _closed=True)

    def dual(self) -> "AdditiveCode":
        """Kernel of the stacked inner-product constraints, 3 rows per generator."""
        pr = self.profile
        rows = []
        for w in self.basis_words():
            rows.extend(_constraint_rows(w))
        mat = linalg.as_matrix(rows, pr.n)
        ker = linalg.kernel_basis(mat, pr.p)
        return AdditiveCode(pr, ker, _closed=True)

    def is_constacyclic(self, mu0: UnitLike = 1, mu1: UnitLike = 1,
                        mu2: UnitLike = 1) -> bool:
        for w in self.basis_words():
            if not self.contains(constacyclic_shift(w, mu0, mu1, mu2)):
                return False
        return True

    def punctured(self, block: str) -> "AdditiveCode":
        """Projection onto one block ('q', 'r' or 's'), as a code over that block."""
        pr = self.profile
        q, r = pr.q, pr.r
        spans = {"q": (0, q), "r": (q, q + 2 * r), "s": (q + 2 * r, pr.n)}
        lo, hi = spans[block]
        if hi == lo:
            raise ProfileMismatch(f"block {block!r} is empty")
        sub_profile = BlockProfile(pr.p,
                                   pr.q if block == "q" else 0,
                                   pr.r if block == "r" else 0,
                                   pr.s if block == "s" else 0)
        return AdditiveCode(sub_profile, self.basis[:, lo:hi], _closed=True)

    def components(self) -> tuple["AdditiveCode | None", ...]:
        """Punctured codes (C_q, C_r, C_s); None for empty blocks."""
        pr = self.profile
        return (self.punctured("q") if pr.q else None,
                self.punctured("r") if pr.r else None,
                self.punctured("s") if pr.s else None)

    def is_separable(self) -> bool:
        """True iff the code is the direct product of its block punctures."""
        total = sum(c.rank for c in self.components() if c is not None)
        return self.rank == total


def _constraint_rows(w: MixedWord) -> list[np.ndarray]:
    """Three Z_p-linear rows: the 1, u and u^2 coefficients of <v, w> in v."""
    pr = w.profile
    p = pr.p
    q, r = pr.q, pr.r
    base = q + 2 * r
    rows = [np.zeros(pr.n, dtype=np.int64) for _ in range(3)]
    for j, x in enumerate(w.zp):
        rows[2][j] = x % p
    for j, y in enumerate(w.rpart):
        a, b = y.coeffs
        rows[1][q + 2 * j] = a
        rows[2][q + 2 * j] = b
        rows[2][q + 2 * j + 1] = a
    for j, z in enumerate(w.spart):
        e, f, g = z.coeffs
        rows[0][base + 3 * j] = e
        rows[1][base + 3 * j] = f
        rows[1][base + 3 * j + 1] = e
        rows[2][base + 3 * j] = g
        rows[2][base + 3 * j + 1] = f
        rows[2][base + 3 * j + 2] = e
    return rows


def span_closure(generators: Iterable[MixedWord],
                 profile: BlockProfile | None = None) -> AdditiveCode:
    """Smallest S-submodule containing the generators.

    The Z_p-span of each generator together with its u- and u^2-multiples;
    by linearity of the scalar action that span is S-closed.
    """
    gens = list(generators)
    if profile is None:
        if not gens:
            raise ProfileMismatch("empty generator list needs an explicit profile")
        profile = gens[0].profile
    rows = []
    for g in gens:
        if g.profile != profile:
            raise ProfileMismatch("generators with mixed profiles")
        rows.append(flatten(g))
        rows.append(flatten(mixed_scalar_mul((0, 1, 0), g)))
        rows.append(flatten(mixed_scalar_mul((0, 0, 1), g)))
    return AdditiveCode(profile, rows, _closed=True)


class FlatOps:
    """Shift and u-multiplication as maps on flattened coordinate vectors.

    Exactly ``constacyclic_shift`` and ``mixed_scalar_mul`` conjugated by
    ``flatten``; used by the span fixpoint to avoid per-word object churn.
    """

    def __init__(self, profile: BlockProfile, mu0: UnitLike = 1, mu1: UnitLike = 1,
                 mu2: UnitLike = 1):
        self.profile = profile
        p = profile.p
        self.m0 = as_unit(mu0, p, 1).coeffs[0] if profile.q else 1
        self.m1 = as_unit(mu1, p, 2).coeffs if profile.r else (1, 0)
        self.m2 = as_unit(mu2, p, 3).coeffs if profile.s else (1, 0, 0)

    def shift(self, v: np.ndarray) -> np.ndarray:
        pr = self.profile
        p, q, r, s = pr.p, pr.q, pr.r, pr.s
        out = v.copy()
        if q:
            out[:q] = np.roll(v[:q], 1)
            out[0] = out[0] * self.m0 % p
        if r:
            blk = np.roll(v[q:q + 2 * r].reshape(r, 2), 1, axis=0)
            a, b = int(blk[0, 0]), int(blk[0, 1])
            m0, m1 = self.m1
            blk[0] = (m0 * a % p, (m0 * b + m1 * a) % p)
            out[q:q + 2 * r] = blk.reshape(-1)
        if s:
            base = q + 2 * r
            blk = np.roll(v[base:].reshape(s, 3), 1, axis=0)
            e, f, g = (int(x) for x in blk[0])
            m0, m1, m2 = self.m2
            blk[0] = (m0 * e % p, (m0 * f + m1 * e) % p, (m0 * g + m1 * f + m2 * e) % p)
            out[base:] = blk.reshape(-1)
        return out

    def umul(self, v: np.ndarray) -> np.ndarray:
        pr = self.profile
        q, r, s = pr.q, pr.r, pr.s
        out = np.zeros_like(v)
        if r:
            blk = v[q:q + 2 * r].reshape(r, 2)
            ublk = np.zeros_like(blk)
            ublk[:, 1] = blk[:, 0]
            out[q:q + 2 * r] = ublk.reshape(-1)
        if s:
            base = q + 2 * r
            blk = v[base:].reshape(s, 3)
            ublk = np.zeros_like(blk)
            ublk[:, 1] = blk[:, 0]
            ublk[:, 2] = blk[:, 1]
            out[base:] = ublk.reshape(-1)
        return out


def shift_module_span(generators: Iterable[MixedWord],
                      mu0: UnitLike = 1, mu1: UnitLike = 1, mu2: UnitLike = 1,
                      profile: BlockProfile | None = None) -> AdditiveCode:
    """The S[x]-module span: closure under scalars *and* the constacyclic shift.

    The shift operator realizes multiplication by x on the polynomial side,
    so iterating shifts of the S-span up to a rank fixpoint yields the code
    generated by the given words.  The worklist enqueues the images of every
    word that enlarges the row space; linearity of the shift and of the
    scalar action makes that sufficient.
    """
    gens = list(generators)
    if profile is None:
        if not gens:
            raise ProfileMismatch("empty generator list needs an explicit profile")
        profile = gens[0].profile
    ops = FlatOps(profile, mu0, mu1, mu2)
    space = linalg.RowSpace(profile.n, profile.p)
    work = [flatten(w) for w in gens]
    while work:
        v = work.pop()
        if not space.add(v):
            continue
        work.append(ops.shift(v))
        u_v = ops.umul(v)
        work.append(u_v)
        work.append(ops.umul(u_v))
    return AdditiveCode(profile, space.basis, _closed=True)


def _as_block_poly(poly, p: int, k: int, default: Poly) -> Poly:
    if poly is None:
        return default
    if isinstance(poly, Poly):
        if poly.p != p:
            raise ProfileMismatch("polynomial modulus differs from the profile")
        return poly.lift(k) if poly.k < k else poly
    return Poly.make(list(poly), p, k)


def _layers(f: Poly) -> tuple[Poly, ...]:
    """Split an R- or S-polynomial into its Z_p coefficient layers (1, u, u^2)."""
    return tuple(Poly.make([c.coeffs[t] for c in f.coeffs], f.p) for t in range(f.k))


def _block_word(profile: BlockProfile, zp_poly: Poly | None,
                r_poly: Poly | None, s_poly: Poly | None) -> MixedWord:
    """Generator word whose blocks carry the given (already reduced) polynomials."""
    p = profile.p
    zp = [0] * profile.q
    if zp_poly is not None:
        for j, c in enumerate(zp_poly.coeffs):
            zp[j] = c.coeffs[0]
    rpart: list[ChainElement] = [ChainElement.zero(p, 2)] * profile.r
    if r_poly is not None:
        for j in range(min(len(r_poly.coeffs), profile.r)):
            rpart[j] = r_poly.coeffs[j]
        rpart = rpart[:profile.r]
    spart: list[ChainElement] = [ChainElement.zero(p, 3)] * profile.s
    if s_poly is not None:
        for j in range(min(len(s_poly.coeffs), profile.s)):
            spart[j] = s_poly.coeffs[j]
        spart = spart[:profile.s]
    return MixedWord(profile, tuple(zp), tuple(rpart), tuple(spart))


def _soft_check(ok: bool, message: str, policy: str) -> None:
    if ok:
        return
    if policy == "reject":
        raise DivisibilityViolation(message)
    if policy == "warn":
        warnings.warn(message, GeneratorHypothesisWarning, stacklevel=3)


def from_generator_polynomials(profile: BlockProfile,
                               mu: tuple[UnitLike, UnitLike, UnitLike] = (1, 1, 1),
                               *,
                               f0=None,
                               g: tuple | None = None,
                               h: tuple | None = None,
                               l: tuple | None = None,
                               hypotheses: str = "warn") -> AdditiveCode:
    """Build a constacyclic code from generator-polynomial data.

    The generator rows are, per block profile (absent blocks drop out):

        (f0, 0, 0),  (l1, g0 + u g1, 0),  (l2, l3, h0 + u h1 + u^2 h2)

    ``g`` is (g0, g1), ``h`` is (h0, h1, h2), ``l`` is (l1, l2, l3) with
    l1, l2 over Z_p and l3 over R.  Polynomials may be given as coefficient
    sequences (ints for Z_p, pairs/triples for R/S) or Poly values; an
    omitted polynomial defaults to the block modulus, which is zero in the
    quotient and contributes nothing.

    Hard preconditions (always enforced): gcd(p, block length) = 1 for each
    nonzero block, and every supplied polynomial divides its block modulus.
    The structure-theorem hypotheses -- the ord-congruences on the block
    lengths and the divisor chains g1 | g0 and h2 | h1 | h0 -- are *not*
    needed by the construction, which closes the span to a rank fixpoint
    directly; they are checked under ``hypotheses`` in {"warn", "reject",
    "ignore"} (default "warn").
    """
    pr = profile
    p = pr.p
    if hypotheses not in ("warn", "reject", "ignore"):
        raise ValueError("hypotheses must be 'warn', 'reject' or 'ignore'")
    for n_block, name in ((pr.q, "q"), (pr.r, "r"), (pr.s, "s")):
        if n_block and n_block % p == 0:
            raise GcdViolation(f"gcd(p, {name}) must be 1 (p={p}, {name}={n_block})")
    mu0 = as_unit(mu[0], p, 1) if pr.q else None
    mu1 = as_unit(mu[1], p, 2) if pr.r else None
    mu2 = as_unit(mu[2], p, 3) if pr.s else None

    if hypotheses != "ignore":
        for n_block, unit, name in ((pr.q, mu0, "q"), (pr.r, mu1, "r"), (pr.s, mu2, "s")):
            if n_block and unit is not None:
                t = unit_order(unit)
                _soft_check(n_block % t == 1 % t,
                            f"{name} = {n_block} violates {name} = 1 (mod ord(mu)) "
                            f"with ord(mu) = {t}", hypotheses)

    l = l or (None, None, None)
    l1, l2, l3 = (tuple(l) + (None,) * 3)[:3]
    words = []

    mod_q = x_pow_n_minus(mu0, pr.q, p, 1) if pr.q else None
    mod_r = x_pow_n_minus(mu1, pr.r, p, 2) if pr.r else None
    mod_s = x_pow_n_minus(mu2, pr.s, p, 3) if pr.s else None

    if pr.q:
        f0p = _as_block_poly(f0, p, 1, mod_q)
        if not divides(f0p, mod_q):
            raise DivisibilityViolation(f"f0 = {f0p} does not divide x^{pr.q} - {mu0}")
        words.append(_block_word(pr, poly_divmod(f0p, mod_q)[1], None, None))

    if pr.r:
        gs = g or (None, None)
        g0 = _as_block_poly(gs[0] if len(gs) > 0 else None, p, 2, mod_r)
        g1 = _as_block_poly(gs[1] if len(gs) > 1 else None, p, 2, mod_r)
        for poly, name in ((g0, "g0"), (g1, "g1")):
            if not divides(poly, mod_r):
                raise DivisibilityViolation(f"{name} = {poly} does not divide x^{pr.r} - {mu1}")
        if hypotheses != "ignore":
            _soft_check(divides(g1, g0), f"chain g1 | g0 fails for g1 = {g1}, g0 = {g0}",
                        hypotheses)
        l1p = poly_divmod(_as_block_poly(l1, p, 1, Poly.zero(p)), mod_q)[1] if pr.q else None
        u_r = Poly(p, 2, (ChainElement(p, 2, (0, 1)),))
        row_r = poly_divmod(g0 + u_r * g1, mod_r)[1]
        words.append(_block_word(pr, l1p, row_r, None))

    if pr.s:
        hs = h or (None, None, None)
        h0 = _as_block_poly(hs[0] if len(hs) > 0 else None, p, 3, mod_s)
        h1 = _as_block_poly(hs[1] if len(hs) > 1 else None, p, 3, mod_s)
        h2 = _as_block_poly(hs[2] if len(hs) > 2 else None, p, 3, mod_s)
        for poly, name in ((h0, "h0"), (h1, "h1"), (h2, "h2")):
            if not divides(poly, mod_s):
                raise DivisibilityViolation(f"{name} = {poly} does not divide x^{pr.s} - {mu2}")
        if hypotheses != "ignore":
            _soft_check(divides(h2, h1), f"chain h2 | h1 fails for h2 = {h2}, h1 = {h1}",
                        hypotheses)
            _soft_check(divides(h1, h0), f"chain h1 | h0 fails for h1 = {h1}, h0 = {h0}",
                        hypotheses)
        l2p = poly_divmod(_as_block_poly(l2, p, 1, Poly.zero(p)), mod_q)[1] if pr.q else None
        l3p = poly_divmod(_as_block_poly(l3, p, 2, Poly.zero(p, 2)), mod_r)[1] if pr.r else None
        u_s = Poly(p, 3, (ChainElement(p, 3, (0, 1, 0)),))
        row_s = poly_divmod(h0 + u_s * h1 + u_s * u_s * h2, mod_s)[1]
        words.append(_block_word(pr, l2p, l3p, row_s))

    return shift_module_span(words,
                             mu0 if pr.q else 1,
                             mu1 if pr.r else 1,
                             mu2 if pr.s else 1,
                             profile=pr)


def word_from_polynomials(profile: BlockProfile,
                          zp_poly=None, r_poly=None, s_poly=None) -> MixedWord:
    """Word whose blocks list the coefficients of the given polynomials.

    Degrees must fit inside their blocks; callers reduce mod the block
    modulus beforehand when starting from larger-degree data.
    """
    p = profile.p
    zp = _as_block_poly(zp_poly, p, 1, Poly.zero(p)) if zp_poly is not None else None
    rp = _as_block_poly(r_poly, p, 2, Poly.zero(p, 2)) if r_poly is not None else None
    sp = _as_block_poly(s_poly, p, 3, Poly.zero(p, 3)) if s_poly is not None else None
    for poly, n_block, name in ((zp, profile.q, "q"), (rp, profile.r, "r"),
                                (sp, profile.s, "s")):
        if poly is not None and poly.degree >= n_block:
            raise DivisibilityViolation(f"polynomial degree exceeds block length {name}")
    return _block_word(profile, zp, rp, sp)
