"""Exact integer arithmetic in a truncated exterior algebra and its tensor square.

The space being modelled is the product of a circle with the union of all
(r-1)-dimensional coordinate subtori inside an (n-1)-torus.  Its cohomology
is an exterior algebra on degree-one generators e0, e1, ..., e{n-1} subject
to one truncation rule: any monomial containing r or more generators drawn
from e1..e{n-1} vanishes.  The circle generator e0 is never truncated.

All coefficients are integers.  The nonvanishing certificates produced here
only ever need coefficients in {-1, +1}, and a nonzero integer combination
stays nonzero over every field of characteristic zero, so integer arithmetic
is enough to certify the topological lower bounds downstream.

Monomials are stored as bit sets (bit i set means generator e_i is present),
with product signs computed by counting inversions between the two bit sets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field


class InvalidSignature(ValueError):
    """Raised when (n, r) does not satisfy 1 <= r <= n."""


class CertificateFailure(RuntimeError):
    """Raised when a claimed nonvanishing certificate turns out to be zero."""


class InstanceTooLarge(ValueError):
    """Raised when a search is asked to run past its configured size cap."""


DEFAULT_BRUTE_FORCE_CAP = 4


@dataclass(frozen=True)
class AlgebraSignature:
    """Ambient parameters: n generators overall, subtorus dimension r-1.

    n counts the degree-one generators e0..e{n-1}; r-1 is the largest number
    of generators from e1..e{n-1} that a surviving monomial may contain.
    """

    n: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InvalidSignature(f"invalid signature (n={self.n}, r={self.r}): r must be at least 1")
        if self.n < self.r:
            raise InvalidSignature(f"invalid signature (n={self.n}, r={self.r}): r exceeds n")

    @property
    def truncation(self) -> int:
        """Largest allowed count of generators with index >= 1 in a monomial."""
        return self.r - 1

    def fits(self, bits: int) -> bool:
        """True when the bit-set monomial survives in this algebra."""
        return 0 <= bits < (1 << self.n) and (bits & ~1).bit_count() <= self.r - 1

    def basis_bits(self):
        """All surviving monomials as bit sets, grouped by positive part."""
        for k in range(self.r):
            for combo in itertools.combinations(range(1, self.n), k):
                m = 0
                for i in combo:
                    m |= 1 << i
                yield m
                yield m | 1

    def basis_size(self) -> int:
        return 2 * sum(math.comb(self.n - 1, k) for k in range(self.r))

    def top_degree(self) -> int:
        """Largest degree of a nonzero element: e0 together with r-1 others."""
        return self.r


@dataclass(frozen=True)
class ExteriorMonomial:
    """Square-free product of generators, stored as an index bit set."""

    bits: int = 0

    @classmethod
    def from_indices(cls, indices) -> "ExteriorMonomial":
        bits = 0
        for i in indices:
            if i < 0:
                raise ValueError(f"negative generator index {i}")
            if (bits >> i) & 1:
                raise ValueError(f"repeated generator index {i}")
            bits |= 1 << i
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_count()

    @property
    def indices(self) -> tuple[int, ...]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def __str__(self) -> str:
        if not self.bits:
            return "1"
        return "*".join(f"e{i}" for i in self.indices)


def _merge(a: int, b: int) -> tuple[int, int]:
    """Sign and union for the concatenation of two bit-set monomials.

    Returns (0, 0) when the sets share a generator.  The sign is the parity
    of the number of pairs (x in a, y in b) with x > y, which is exactly the
    number of transpositions needed to sort the concatenated index list.
    """
    if a & b:
        return 0, 0
    inv = 0
    rest = b
    while rest:
        low = rest & -rest
        inv += (a >> low.bit_length()).bit_count()
        rest ^= low
    return (-1 if inv & 1 else 1), a | b


def multiply_monomials(a: ExteriorMonomial, b: ExteriorMonomial, sig: AlgebraSignature):
    """Signed product of two monomials, or None when the product vanishes."""
    if not (sig.fits(a.bits) and sig.fits(b.bits)):
        raise ValueError("monomial does not belong to this algebra")
    sign, bits = _merge(a.bits, b.bits)
    if sign == 0 or not sig.fits(bits):
        return None
    return sign, ExteriorMonomial(bits)


def _as_bits(key) -> int:
    return key.bits if isinstance(key, ExteriorMonomial) else int(key)


class AlgebraElement:
    """Sparse integer combination of surviving monomials of one algebra.

    Terms whose monomial dies under the truncation rule are identically zero
    and are dropped on construction; an out-of-range generator index is an
    error rather than a zero.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: AlgebraSignature, terms=None):
        clean: dict[int, int] = {}
        for key, coeff in (terms or {}).items():
            bits = _as_bits(key)
            if bits < 0 or bits >= (1 << sig.n):
                raise ValueError(f"generator index out of range for n={sig.n}")
            if coeff and sig.fits(bits):
                clean[bits] = clean.get(bits, 0) + coeff
        self.sig = sig
        self._terms = {b: c for b, c in clean.items() if c}

    @classmethod
    def _raw(cls, sig, terms: dict[int, int]) -> "AlgebraElement":
        # internal fast path: terms must already be canonical for sig
        out = object.__new__(cls)
        out.sig = sig
        out._terms = terms
        return out

    @classmethod
    def zero(cls, sig) -> "AlgebraElement":
        return cls._raw(sig, {})

    @classmethod
    def one(cls, sig) -> "AlgebraElement":
        return cls._raw(sig, {0: 1})

    @classmethod
    def generator(cls, sig, i: int) -> "AlgebraElement":
        """e_i as an element; zero when the truncation kills it (r = 1, i >= 1)."""
        if not 0 <= i < sig.n:
            raise ValueError(f"generator index {i} out of range for n={sig.n}")
        return cls(sig, {1 << i: 1})

    @classmethod
    def monomial(cls, sig, indices, coeff: int = 1) -> "AlgebraElement":
        return cls(sig, {ExteriorMonomial.from_indices(indices): coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono) -> int:
        return self._terms.get(_as_bits(mono), 0)

    def terms(self):
        """Pairs (monomial, coefficient) sorted by degree then bit pattern."""
        for bits in sorted(self._terms, key=lambda b: (b.bit_count(), b)):
            yield ExteriorMonomial(bits), self._terms[bits]

    def homogeneous_part(self, degree: int) -> "AlgebraElement":
        return AlgebraElement._raw(
            self.sig, {b: c for b, c in self._terms.items() if b.bit_count() == degree}
        )

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({b.bit_count() for b in self._terms}))

    def _check_mate(self, other):
        if self.sig != other.sig:
            raise ValueError("elements live in different algebras")

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __add__(self, other) -> "AlgebraElement":
        self._check_mate(other)
        out = dict(self._terms)
        for b, c in other._terms.items():
            s = out.get(b, 0) + c
            if s:
                out[b] = s
            elif b in out:
                del out[b]
        return AlgebraElement._raw(self.sig, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._raw(self.sig, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, int):
            if other == 0:
                return AlgebraElement.zero(self.sig)
            return AlgebraElement._raw(self.sig, {b: other * c for b, c in self._terms.items()})
        self._check_mate(other)
        fits = self.sig.fits
        out: dict[int, int] = {}
        for ab, ac in self._terms.items():
            for bb, bc in other._terms.items():
                sign, bits = _merge(ab, bb)
                if sign == 0 or not fits(bits):
                    continue
                s = out.get(bits, 0) + sign * ac * bc
                if s:
                    out[bits] = s
                elif bits in out:
                    del out[bits]
        return AlgebraElement._raw(self.sig, out)

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            body = str(mono)
            if coeff == 1:
                parts.append(f"+ {body}")
            elif coeff == -1:
                parts.append(f"- {body}")
            elif coeff > 0:
                parts.append(f"+ {coeff}*{body}")
            else:
                parts.append(f"- {-coeff}*{body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


def multiply_elements(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


class TensorElement:
    """Sparse integer element of (algebra tensor algebra) for one signature.

    The product carries the crossing sign: moving the right leg of the first
    factor past the left leg of the second contributes (-1) raised to the
    product of their degrees.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: AlgebraSignature, terms=None):
        clean: dict[tuple[int, int], int] = {}
        for key, coeff in (terms or {}).items():
            a, b = key
            abits, bbits = _as_bits(a), _as_bits(b)
            for bits in (abits, bbits):
                if bits < 0 or bits >= (1 << sig.n):
                    raise ValueError(f"generator index out of range for n={sig.n}")
            if coeff and sig.fits(abits) and sig.fits(bbits):
                k = (abits, bbits)
                clean[k] = clean.get(k, 0) + coeff
        self.sig = sig
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, sig, terms) -> "TensorElement":
        out = object.__new__(cls)
        out.sig = sig
        out._terms = terms
        return out

    @classmethod
    def zero(cls, sig) -> "TensorElement":
        return cls._raw(sig, {})

    @classmethod
    def one(cls, sig) -> "TensorElement":
        return cls._raw(sig, {(0, 0): 1})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, left, right) -> int:
        return self._terms.get((_as_bits(left), _as_bits(right)), 0)

    def terms(self):
        """Triples (left, right, coefficient) in a stable sorted order."""
        def sort_key(key):
            a, b = key
            return (a.bit_count() + b.bit_count(), a.bit_count(), a, b)

        for a, b in sorted(self._terms, key=sort_key):
            yield ExteriorMonomial(a), ExteriorMonomial(b), self._terms[(a, b)]

    def bidegree_part(self, left_degree: int, right_degree: int) -> "TensorElement":
        return TensorElement._raw(
            self.sig,
            {
                (a, b): c
                for (a, b), c in self._terms.items()
                if a.bit_count() == left_degree and b.bit_count() == right_degree
            },
        )

    def total_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({a.bit_count() + b.bit_count() for a, b in self._terms}))

    def coefficients(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms.values()))

    def _check_mate(self, other):
        if self.sig != other.sig:
            raise ValueError("tensor elements live in different algebras")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __add__(self, other) -> "TensorElement":
        self._check_mate(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return TensorElement._raw(self.sig, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement._raw(self.sig, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "TensorElement":
        return self + (-other)

    def __mul__(self, other) -> "TensorElement":
        if isinstance(other, int):
            if other == 0:
                return TensorElement.zero(self.sig)
            return TensorElement._raw(self.sig, {k: other * c for k, c in self._terms.items()})
        self._check_mate(other)
        fits = self.sig.fits
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            b1_odd = b1.bit_count() & 1
            for (a2, b2), c2 in other._terms.items():
                s1, abits = _merge(a1, a2)
                if s1 == 0 or not fits(abits):
                    continue
                s2, bbits = _merge(b1, b2)
                if s2 == 0 or not fits(bbits):
                    continue
                coeff = s1 * s2 * c1 * c2
                if b1_odd and (a2.bit_count() & 1):
                    coeff = -coeff
                key = (abits, bbits)
                s = out.get(key, 0) + coeff
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return TensorElement._raw(self.sig, out)

    def __rmul__(self, other) -> "TensorElement":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for left, right, coeff in self.terms():
            body = f"{left} (x) {right}"
            if coeff == 1:
                parts.append(f"+ {body}")
            elif coeff == -1:
                parts.append(f"- {body}")
            elif coeff > 0:
                parts.append(f"+ {coeff}*{body}")
            else:
                parts.append(f"- {-coeff}*{body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    __repr__ = __str__


def multiply_tensor(x: TensorElement, y: TensorElement) -> TensorElement:
    return x * y


def tensor(x: AlgebraElement, y: AlgebraElement) -> TensorElement:
    """Form x (x) y from two elements of the same algebra."""
    if x.sig != y.sig:
        raise ValueError("tensor factors live in different algebras")
    out: dict[tuple[int, int], int] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            out[(a, b)] = ca * cb
    return TensorElement._raw(x.sig, out)


def zero_divisor(sig: AlgebraSignature, i: int) -> TensorElement:
    """1 (x) e_i - e_i (x) 1, the canonical zero-divisor of generator i.

    Zero as an element exactly when e_i itself dies (r = 1 and i >= 1).
    """
    if not 0 <= i < sig.n:
        raise ValueError(f"generator index {i} out of range for n={sig.n}")
    bits = 1 << i
    if not sig.fits(bits):
        return TensorElement.zero(sig)
    return TensorElement._raw(sig, {(0, bits): 1, (bits, 0): -1})


def apply_multiplication_map(x: TensorElement) -> AlgebraElement:
    """Multiply the two tensor legs together: a (x) b maps to a*b."""
    fits = x.sig.fits
    out: dict[int, int] = {}
    for (a, b), c in x._terms.items():
        sign, bits = _merge(a, b)
        if sign == 0 or not fits(bits):
            continue
        s = out.get(bits, 0) + sign * c
        if s:
            out[bits] = s
        elif bits in out:
            del out[bits]
    return AlgebraElement._raw(x.sig, out)


@dataclass(frozen=True)
class LowerBoundCertificate:
    """Witness that a product of factor_count zero-divisors is nonzero.

    The witness is checked in a single bidegree slice of the expanded
    product, where every surviving coefficient is +1 or -1 and the number
    of terms has a closed binomial form.
    """

    sig: AlgebraSignature
    k: int
    index_set: tuple[int, ...]
    factor_count: int
    product: TensorElement = field(repr=False)
    component: TensorElement = field(repr=False)
    component_bidegree: tuple[int, int]
    component_terms: int
    expected_terms: int
    sample_term: str


def lower_bound_certificate(sig: AlgebraSignature, index_set=None) -> LowerBoundCertificate:
    """Certify the longest guaranteed-nonzero product of generator zero-divisors.

    The product multiplies the circle zero-divisor by the zero-divisors of
    k = min(n-1, 2r-2) distinct positive generators.  Nonvanishing is read
    off the bidegree (r, k+1-r) slice, whose terms are indexed by the
    (r-1)-subsets of the chosen index set.  Raises CertificateFailure if the
    slice comes out zero, which would falsify the certified lower bound.
    """
    k = min(sig.n - 1, 2 * sig.r - 2)
    if index_set is None:
        indices = tuple(range(1, k + 1))
    else:
        indices = tuple(sorted(index_set))
        if len(set(indices)) != len(indices):
            raise ValueError("certificate index set has repeats")
        if any(not 1 <= i <= sig.n - 1 for i in indices):
            raise ValueError(f"certificate indices must lie in 1..{sig.n - 1}")
        if len(indices) != k:
            raise ValueError(f"certificate index set must have size {k} for this signature")

    prod = zero_divisor(sig, 0)
    for i in indices:
        prod = prod * zero_divisor(sig, i)

    bidegree = (sig.r, k + 1 - sig.r)
    component = prod.bidegree_part(*bidegree)
    if component.is_zero:
        raise CertificateFailure(
            f"zero-divisor product for n={sig.n}, r={sig.r} has empty "
            f"bidegree {bidegree} slice; certificate does not hold"
        )
    first = next(component.terms())
    sign = "+" if first[2] > 0 else "-"
    sample = f"{sign}{abs(first[2]) if abs(first[2]) != 1 else ''}{first[0]} (x) {first[1]}"
    return LowerBoundCertificate(
        sig=sig,
        k=k,
        index_set=indices,
        factor_count=k + 1,
        product=prod,
        component=component,
        component_bidegree=bidegree,
        component_terms=len(component),
        expected_terms=math.comb(k, sig.r - 1),
        sample_term=sample,
    )


def zdcl_degree_one(sig: AlgebraSignature, max_len: int | None = None) -> int:
    """Longest nonzero product of distinct generator zero-divisors.

    Exhaustive over subsets of {e0..e{n-1}}, pruned by the fact that every
    subset of a nonzero product is nonzero.  With max_len given, the search
    stops at that many factors and reports the best length found so far.
    """
    if max_len is not None and max_len < 1:
        raise ValueError("max_len must be at least 1")
    limit = sig.n if max_len is None else min(max_len, sig.n)
    gens = [zero_divisor(sig, i) for i in range(sig.n)]
    frontier = [(i, g) for i, g in enumerate(gens) if not g.is_zero]
    if not frontier:
        return 0
    length = 1
    while length < limit:
        grown = []
        for last, prod in frontier:
            for j in range(last + 1, sig.n):
                if gens[j].is_zero:
                    continue
                p2 = prod * gens[j]
                if not p2.is_zero:
                    grown.append((j, p2))
        if not grown:
            break
        frontier = grown
        length += 1
    return length


@dataclass(frozen=True)
class ZdclSearchReport:
    """Outcome of the brute-force zero-divisor cup-length search.

    searched_length is the longest nonzero product found over the full
    spanning family of basis zero-divisors with repetition allowed; it is a
    lower bound on the true cup-length, claimed exact only when it matches
    certified_minimum = min(n, 2r-1), the value the certificate guarantees.
    """

    sig: AlgebraSignature
    searched_length: int
    certified_minimum: int
    matches_certified: bool
    witness: tuple[str, ...]


def zdcl_brute_force(sig: AlgebraSignature, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> ZdclSearchReport:
    """Search products over the full spanning family of basis zero-divisors.

    Every zero-divisor of the tensor square is an algebra combination of
    a-bar = 1 (x) a - a (x) 1 for positive-degree basis monomials a, so the
    longest nonzero product over that family (repetition allowed; a-bar
    squares to -2 a (x) a for even-degree a, so repeats matter) is the true
    cup-length.  Factors commute up to sign, hence non-decreasing multisets
    suffice, and total degree is capped by 2r, the top of the tensor square.

    Cost grows quickly with n; instances with n > cap raise InstanceTooLarge.
    """
    if sig.n > cap:
        raise InstanceTooLarge(
            f"brute-force search capped at n <= {cap}; got n = {sig.n} "
            f"(raise the cap explicitly to proceed)"
        )
    one = AlgebraElement.one(sig)
    family = []
    for bits in sig.basis_bits():
        if bits == 0:
            continue
        a = AlgebraElement._raw(sig, {bits: 1})
        bar = tensor(one, a) - tensor(a, one)
        family.append((bits.bit_count(), str(ExteriorMonomial(bits)), bar))
    family.sort(key=lambda t: (t[0], str(t[1])))

    budget = 2 * sig.r
    best_len = 0
    best_witness: tuple[str, ...] = ()

    def descend(start: int, prod: TensorElement, length: int, used: int, stack: list[str]):
        nonlocal best_len, best_witness
        if length > best_len:
            best_len = length
            best_witness = tuple(stack)
        for idx in range(start, len(family)):
            deg, name, bar = family[idx]
            if used + deg > budget:
                break
            p2 = prod * bar
            if p2.is_zero:
                continue
            stack.append(name)
            descend(idx, p2, length + 1, used + deg, stack)
            stack.pop()

    descend(0, TensorElement.one(sig), 0, 0, [])
    certified = min(sig.n, 2 * sig.r - 1)
    return ZdclSearchReport(
        sig=sig,
        searched_length=best_len,
        certified_minimum=certified,
        matches_certified=best_len == certified,
        witness=best_witness,
    )
