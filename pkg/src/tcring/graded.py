"""Graded-commutative rings given by an explicit basis and multiplication table.

A ring is a finite free module over a coefficient ring with a homogeneous
basis ``b_0 = 1, b_1, ..., b_{n-1}`` and structure constants for every
product ``b_i * b_j``.  Only the entries with ``i <= j`` need to be given;
the others follow from the Koszul rule ``b_j b_i = (-1)^{|b_i||b_j|} b_i b_j``.
Every constructor validates the full set of ring axioms before returning.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from .scalars import CoefficientRing, MixedRingError, Scalar, ZZ

__all__ = [
    "GradedRing",
    "Element",
    "RingValidationError",
    "CommutativityViolation",
    "DegreeMismatch",
    "AssociativityViolation",
    "UnitViolation",
    "OddSquareViolation",
    "BasisSizeError",
    "DEFAULT_MAX_BASIS",
    "make_ring",
    "exterior_algebra",
    "sphere_ring",
    "sphere_product_ring",
    "tensor_product",
    "base_change",
    "connected_sum_ring",
    "validate",
    "format_terms",
    "koszul_sign",
]

DEFAULT_MAX_BASIS = 512


class RingValidationError(ValueError):
    """A ring presentation violates one of the graded-ring axioms."""


class CommutativityViolation(RingValidationError):
    pass


class DegreeMismatch(RingValidationError):
    pass


class AssociativityViolation(RingValidationError):
    pass


class UnitViolation(RingValidationError):
    pass


class OddSquareViolation(RingValidationError):
    pass


class BasisSizeError(RingValidationError):
    pass


def koszul_sign(a: int, b: int) -> int:
    return -1 if (a * b) % 2 else 1


def _clean(coeff: CoefficientRing, raw: Mapping[int, Any]) -> dict[int, Any]:
    out = {}
    for k, v in raw.items():
        v = coeff.normalize(v)
        if v != 0:
            out[k] = v
    return out


class GradedRing:
    """A validated graded-commutative ring.  Build with :func:`make_ring` or
    one of the family builders, not directly."""

    def __init__(self, name, coeff, labels, degrees, products, formal_dim):
        self.name: str = name
        self.coeff: CoefficientRing = coeff
        self.labels: tuple[str, ...] = tuple(labels)
        self.degrees: tuple[int, ...] = tuple(degrees)
        self.formal_dim: int | None = formal_dim
        # (i, j) -> {k: raw coefficient}, both orders, nonzero entries only
        self._products: dict[tuple[int, int], dict[int, Any]] = products
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    # basis ----------------------------------------------------------------

    def __len__(self):
        return len(self.labels)

    @property
    def basis(self) -> list[tuple[str, int]]:
        return list(zip(self.labels, self.degrees))

    def index(self, key: str | int) -> int:
        if isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < len(self.labels):
                raise IndexError(f"basis index {key} out of range for {self.name}")
            return key
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"unknown basis label {key!r} in ring {self.name}") from None

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    def dims(self) -> dict[int, int]:
        """Rank of each nonzero homogeneous component."""
        return dict(sorted(Counter(self.degrees).items()))

    def indices_of_degree(self, d: int) -> list[int]:
        return [i for i, e in enumerate(self.degrees) if e == d]

    # elements -------------------------------------------------------------

    def element(self, coords: Mapping[str | int, Any] | None = None) -> Element:
        raw: dict[int, Any] = {}
        for key, c in (coords or {}).items():
            i = self.index(key)
            raw[i] = raw.get(i, 0) + self.coeff.normalize(c)
        return Element(self, _clean(self.coeff, raw))

    def __getitem__(self, key: str | int) -> Element:
        return Element(self, {self.index(key): self.coeff.normalize(1)})

    def one(self) -> Element:
        return self[0]

    def zero(self) -> Element:
        return Element(self, {})

    def basis_elements(self) -> list[Element]:
        return [self[i] for i in range(len(self))]

    def product(self, i: str | int, j: str | int) -> Element:
        """The table entry ``b_i * b_j``."""
        return Element(self, dict(self._products.get((self.index(i), self.index(j)), {})))

    @property
    def table(self) -> dict[tuple[int, int], Element]:
        """Nonzero products ``b_i b_j`` with ``0 < i <= j``."""
        return {
            (i, j): Element(self, dict(v))
            for (i, j), v in sorted(self._products.items())
            if 0 < i <= j
        }

    def _mul_raw(self, a: Mapping[int, Any], b: Mapping[int, Any]) -> dict[int, Any]:
        out: dict[int, Any] = {}
        prods = self._products
        for i, ci in a.items():
            for j, cj in b.items():
                t = prods.get((i, j))
                if t:
                    c = ci * cj
                    for k, ck in t.items():
                        out[k] = out.get(k, 0) + c * ck
        return _clean(self.coeff, out)

    # comparison -----------------------------------------------------------

    def _key(self):
        return (
            self.name,
            self.coeff,
            self.labels,
            self.degrees,
            self.formal_dim,
            tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self._products.items())),
        )

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GradedRing):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return id(self)

    def same_structure(self, other: GradedRing) -> bool:
        """Equality ignoring the ring name."""
        return self._key()[1:] == other._key()[1:]

    def __repr__(self):
        return f"<GradedRing {self.name} over {self.coeff}, basis {len(self)}>"


class Element:
    """Sparse exact linear combination of basis elements of one ring.

    Coefficients are raw canonical values of ``ring.coeff``; no zero
    coefficient is ever stored.
    """

    __slots__ = ("ring", "_c")

    def __init__(self, ring: GradedRing, coords: dict[int, Any]):
        self.ring = ring
        self._c = coords

    @property
    def coords(self) -> dict[int, Scalar]:
        return {i: Scalar(self.ring.coeff, v) for i, v in sorted(self._c.items())}

    def coeff(self, key: str | int) -> Scalar:
        return Scalar(self.ring.coeff, self._c.get(self.ring.index(key), self.ring.coeff.normalize(0)))

    def terms(self) -> list[tuple[str, Scalar]]:
        return [(self.ring.labels[i], Scalar(self.ring.coeff, v)) for i, v in sorted(self._c.items())]

    def _check(self, other: Element):
        if other.ring is not self.ring and other.ring != self.ring:
            raise MixedRingError(f"elements of {self.ring.name} and {other.ring.name} cannot be combined")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return Element(self.ring, _clean(self.ring.coeff, out))

    def __neg__(self):
        return Element(self.ring, _clean(self.ring.coeff, {k: -v for k, v in self._c.items()}))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Any) -> Element:
        c = self.ring.coeff.normalize(c)
        return Element(self.ring, _clean(self.ring.coeff, {k: c * v for k, v in self._c.items()}))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.ring, self.ring._mul_raw(self._c, other._c))
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> Element:
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Element):
            return (other.ring is self.ring or other.ring == self.ring) and self._c == other._c
        if isinstance(other, int) and other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def support(self) -> list[int]:
        return sorted(self._c)

    def degree_components(self) -> dict[int, Element]:
        parts: dict[int, dict[int, Any]] = {}
        for i, v in self._c.items():
            parts.setdefault(self.ring.degrees[i], {})[i] = v
        return {d: Element(self.ring, parts[d]) for d in sorted(parts)}

    @property
    def degree(self) -> int | None:
        """Degree of a nonzero homogeneous element, else None."""
        degs = {self.ring.degrees[i] for i in self._c}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({self.ring.degrees[i] for i in self._c}) <= 1

    def __str__(self):
        return format_terms((self.ring.labels[i], v) for i, v in sorted(self._c.items()))

    def __repr__(self):
        return f"<{self.ring.name}: {self}>"


def format_terms(terms: Iterable[tuple[str, Any]]) -> str:
    """``2*a - 1*b`` style rendering with every coefficient explicit."""
    parts = []
    for lab, v in terms:
        if not parts:
            parts.append(f"{v}*{lab}")
        elif v < 0:
            parts.append(f" - {-v}*{lab}")
        else:
            parts.append(f" + {v}*{lab}")
    return "".join(parts) or "0"


# construction and validation ------------------------------------------------


def _normalize_basis(basis: Sequence[tuple[str, int]]) -> tuple[list[str], list[int]]:
    basis = [(str(lab), int(deg)) for lab, deg in basis]
    if not basis or basis[0][1] != 0:
        if any(lab == "1" for lab, _ in basis):
            raise UnitViolation("the unit '1' must be the first basis element")
        basis.insert(0, ("1", 0))
    labels = [lab for lab, _ in basis]
    degrees = [deg for _, deg in basis]
    dup = [lab for lab, c in Counter(labels).items() if c > 1]
    if dup:
        raise RingValidationError(f"duplicate basis labels: {', '.join(dup)}")
    for lab, deg in basis[1:]:
        if deg < 0:
            raise DegreeMismatch(f"basis element {lab} has negative degree {deg}")
        if deg == 0:
            raise UnitViolation(f"basis element {lab} has degree 0; only the unit may")
    return labels, degrees


def make_ring(
    coeff: CoefficientRing,
    basis: Sequence[tuple[str, int]],
    table: Mapping[tuple[str | int, str | int], Any] | None = None,
    formal_dim: int | None = None,
    name: str = "R",
    *,
    max_basis: int = DEFAULT_MAX_BASIS,
    check_associativity: bool = True,
) -> GradedRing:
    """Build and validate a graded-commutative ring.

    ``basis`` is a list of ``(label, degree)``; the unit ``("1", 0)`` is
    prepended when absent.  ``table`` maps pairs of labels (or indices) to
    the product, given as ``{label: coefficient}``, a single label, or ``0``.  Unspecified
    products are zero.  If both ``(a, b)`` and ``(b, a)`` are given they
    must agree up to the Koszul sign.
    """
    labels, degrees = _normalize_basis(basis)
    n = len(labels)
    if n > max_basis:
        raise BasisSizeError(f"basis size {n} exceeds the cap {max_basis}")
    if formal_dim is not None:
        over = [lab for lab, d in zip(labels, degrees) if d > formal_dim]
        if over:
            raise DegreeMismatch(f"basis elements above formal dimension {formal_dim}: {', '.join(over)}")
    index = {lab: i for i, lab in enumerate(labels)}

    def idx(key) -> int:
        if isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < n:
                raise RingValidationError(f"basis index {key} out of range")
            return key
        if key not in index:
            raise RingValidationError(f"unknown basis label {key!r}")
        return index[key]

    def show(i, j):
        return f"{labels[i]}*{labels[j]}"

    supplied: dict[tuple[int, int], dict[int, Any]] = {}
    for (a, b), value in (table or {}).items():
        i, j = idx(a), idx(b)
        if (i, j) in supplied:
            raise RingValidationError(f"product {show(i, j)} given twice")
        raw: dict[int, Any] = {}
        if isinstance(value, Element):
            value = {value.ring.labels[k]: v for k, v in value._c.items()}
        elif isinstance(value, str):
            value = {value: 1}
        if value:
            items = value.items() if isinstance(value, Mapping) else value
            for key, c in items:
                k = idx(key)
                raw[k] = raw.get(k, 0) + coeff.normalize(c)
        raw = _clean(coeff, raw)
        for k in raw:
            if degrees[k] != degrees[i] + degrees[j]:
                raise DegreeMismatch(
                    f"{show(i, j)} has degree {degrees[i] + degrees[j]} but contains "
                    f"{labels[k]} of degree {degrees[k]}"
                )
        supplied[(i, j)] = raw

    one = coeff.normalize(1)
    products: dict[tuple[int, int], dict[int, Any]] = {}
    for i in range(n):
        for j in range(i, n):
            if i == 0:
                expected = {j: one}
                for key in ((0, j), (j, 0)):
                    if key in supplied and supplied[key] != expected:
                        raise UnitViolation(f"{show(*key)} must equal {labels[j]}")
                products[(0, j)] = products[(j, 0)] = expected
                continue
            s = koszul_sign(degrees[i], degrees[j])
            fwd = supplied.get((i, j))
            rev = supplied.get((j, i))
            flipped = None if rev is None else _clean(coeff, {k: s * v for k, v in rev.items()})
            if i != j and fwd is not None and flipped is not None and fwd != flipped:
                raise CommutativityViolation(
                    f"{show(j, i)} must equal {'-' if s < 0 else ''}({show(i, j)}) by graded commutativity"
                )
            value = fwd if fwd is not None else (flipped or {})
            if i == j and s < 0 and value and coeff.characteristic != 2:
                raise OddSquareViolation(
                    f"{show(i, i)} must vanish: {labels[i]} has odd degree {degrees[i]} over {coeff}"
                )
            if value:
                products[(i, j)] = value
                if i != j:
                    products[(j, i)] = _clean(coeff, {k: s * v for k, v in value.items()})

    ring = GradedRing(name, coeff, labels, degrees, products, formal_dim)
    if check_associativity:
        _check_associativity(ring)
    return ring


def _check_associativity(ring: GradedRing) -> None:
    degrees = ring.degrees
    top = max(degrees)
    n = len(ring)
    prods = ring._products
    for i in range(1, n):
        for j in range(1, n):
            dij = degrees[i] + degrees[j]
            if dij > top:
                continue
            left_ij = prods.get((i, j), {})
            for k in range(1, n):
                if dij + degrees[k] > top:
                    continue
                left = ring._mul_raw(left_ij, {k: 1})
                right = ring._mul_raw({i: 1}, prods.get((j, k), {}))
                if left != right:
                    lab = ring.labels
                    raise AssociativityViolation(
                        f"({lab[i]}*{lab[j]})*{lab[k]} = {Element(ring, left)} but "
                        f"{lab[i]}*({lab[j]}*{lab[k]}) = {Element(ring, right)}"
                    )


def validate(ring: GradedRing) -> GradedRing:
    """Re-run every structural check on an existing ring."""
    return make_ring(
        ring.coeff,
        ring.basis,
        {k: v for k, v in ring._products.items() if k[0] <= k[1]},
        ring.formal_dim,
        ring.name,
        max_basis=max(len(ring), DEFAULT_MAX_BASIS),
    )


# builders ---------------------------------------------------------------------


def _generator_labels(degrees: Sequence[int]) -> list[str]:
    counts = Counter(degrees)
    seen: Counter = Counter()
    out = []
    for d in degrees:
        if counts[d] > 1:
            seen[d] += 1
            out.append(f"x{d}_{seen[d]}")
        else:
            out.append(f"x{d}")
    return out


def _square_free_algebra(coeff, degrees, gen_labels, name, formal_dim) -> GradedRing:
    g = len(degrees)
    monomials = [c for r in range(g + 1) for c in itertools.combinations(range(g), r)]
    mon_index = {m: i for i, m in enumerate(monomials)}
    basis = [("".join(gen_labels[t] for t in m) or "1", sum(degrees[t] for t in m)) for m in monomials]
    table = {}
    for a, ma in enumerate(monomials):
        if not ma:
            continue
        for b in range(a, len(monomials)):
            mb = monomials[b]
            if not mb or set(ma) & set(mb):
                continue
            sign = 1
            for x in ma:
                for y in mb:
                    if x > y:
                        sign *= koszul_sign(degrees[x], degrees[y])
            table[(a, b)] = {mon_index[tuple(sorted(ma + mb))]: sign}
    if formal_dim is None:
        formal_dim = sum(degrees)
    return make_ring(coeff, basis, table, formal_dim, name, check_associativity=False)


def _check_generators(degrees, labels):
    degrees = [int(d) for d in degrees]
    if any(d <= 0 for d in degrees):
        raise ValueError("generator degrees must be positive")
    gen_labels = list(labels) if labels is not None else _generator_labels(degrees)
    if len(gen_labels) != len(degrees):
        raise ValueError("one label per generator required")
    return degrees, gen_labels


def exterior_algebra(
    coeff: CoefficientRing,
    degrees: Sequence[int],
    labels: Sequence[str] | None = None,
    name: str | None = None,
    formal_dim: int | None = None,
) -> GradedRing:
    """Exterior algebra on homogeneous generators of the given degrees.

    The basis is every square-free monomial, ordered by length and then
    lexicographically in generator order; generators square to zero.  Over
    Z and Q all degrees must be odd.  Repeated degrees get suffixed labels
    (``x3_1``, ``x3_2``).  ``formal_dim`` defaults to the degree of the top
    monomial.

    >>> R = exterior_algebra(ZZ, [3, 5])
    >>> R.labels
    ('1', 'x3', 'x5', 'x3x5')
    >>> str(R["x5"] * R["x3"])
    '-1*x3x5'
    """
    degrees, gen_labels = _check_generators(degrees, labels)
    if coeff.kind in ("Z", "Q"):
        even = [d for d in degrees if d % 2 == 0]
        if even:
            raise ValueError(f"exterior algebra over {coeff} needs odd degrees, got {even}")
    if name is None:
        name = "Lambda(" + ",".join(gen_labels) + ")"
    return _square_free_algebra(coeff, degrees, gen_labels, name, formal_dim)


def sphere_product_ring(
    dims: Sequence[int],
    coeff: CoefficientRing = ZZ,
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> GradedRing:
    """Cohomology of ``S^{d_1} x ... x S^{d_r}``: like :func:`exterior_algebra`
    but even-dimensional spheres are allowed (their classes still square to
    zero, now for degree reasons rather than by commutativity)."""
    dims, gen_labels = _check_generators(dims, labels)
    if name is None:
        name = "x".join(f"S{d}" for d in dims)
    return _square_free_algebra(coeff, dims, gen_labels, name, None)


def sphere_ring(k: int, coeff: CoefficientRing = ZZ, label: str | None = None, name: str | None = None) -> GradedRing:
    """Cohomology of S^k: basis ``1, x_k`` with ``x_k^2 = 0``."""
    if k < 1:
        raise ValueError("sphere dimension must be positive")
    return sphere_product_ring([k], coeff, [label or f"x{k}"], name or f"S{k}")


def tensor_product(
    A: GradedRing,
    B: GradedRing,
    name: str | None = None,
    *,
    sep: str = "⊗",
    collapse_units: bool = False,
    max_basis: int = DEFAULT_MAX_BASIS,
) -> GradedRing:
    """Graded tensor product with the Koszul sign
    ``(a⊗b)(c⊗d) = (-1)^{|b||c|} (ac)⊗(bd)``.

    Basis order is row-major: ``a_i ⊗ b_j`` sits at ``i * len(B) + j``.
    With ``collapse_units`` the labels ``1⊗b`` and ``a⊗1`` shorten to ``b``
    and ``a`` (useful for products of spaces, not for the square ring).
    """
    if A.coeff != B.coeff:
        raise MixedRingError(f"cannot tensor rings over {A.coeff} and {B.coeff}")
    nA, nB = len(A), len(B)
    if nA * nB > max_basis:
        raise BasisSizeError(f"tensor basis size {nA * nB} exceeds the cap {max_basis}")

    def label(i, j):
        if collapse_units:
            if i == 0:
                return B.labels[j]
            if j == 0:
                return A.labels[i]
        return f"{A.labels[i]}{sep}{B.labels[j]}"

    basis = [(label(i, j), A.degrees[i] + B.degrees[j]) for i in range(nA) for j in range(nB)]

    table = {}
    pa, pb = A._products, B._products
    for x in range(1, nA * nB):
        i, j = divmod(x, nB)
        for y in range(x, nA * nB):
            k, l = divmod(y, nB)
            ac = pa.get((i, k))
            bd = pb.get((j, l))
            if not ac or not bd:
                continue
            s = koszul_sign(B.degrees[j], A.degrees[k])
            out = {}
            for p, cp in ac.items():
                for q, cq in bd.items():
                    out[p * nB + q] = s * cp * cq
            table[(x, y)] = out
    fd = A.formal_dim + B.formal_dim if A.formal_dim is not None and B.formal_dim is not None else None
    return make_ring(
        A.coeff, basis, table, fd, name or f"{A.name}{sep or 'x'}{B.name}", max_basis=max_basis
    )


def base_change(ring: GradedRing, target: CoefficientRing) -> GradedRing:
    """Reduce the structure constants of a Z-ring into Q or F_p."""
    if ring.coeff != ZZ:
        raise ValueError(f"base change starts from Z coefficients, got {ring.coeff}")
    if not target.is_field:
        raise ValueError(f"base change target must be Q or F_p, got {target}")
    table = {k: {i: target.normalize(c) for i, c in v.items()} for k, v in ring._products.items() if k[0] <= k[1]}
    return make_ring(
        target, ring.basis, table, ring.formal_dim, ring.name, max_basis=max(len(ring), DEFAULT_MAX_BASIS)
    )


def _top_class(R: GradedRing, m: int) -> int:
    top = R.indices_of_degree(m)
    if len(top) != 1:
        raise DegreeMismatch(f"{R.name}: degree {m} must be one-dimensional, found {len(top)} classes")
    if R.top_degree != m:
        raise DegreeMismatch(f"{R.name}: classes above degree {m}")
    return top[0]


def connected_sum_ring(A: GradedRing, B: GradedRing, m: int | None = None, name: str | None = None) -> GradedRing:
    """Cohomology ring of a connected sum of closed m-manifolds.

    Positive-degree classes below the top come from both summands, the two
    fundamental classes are identified, and products of classes from
    different summands vanish.  Labels are suffixed with ``1``/``2`` when
    the summands' labels clash; the top class keeps ``A``'s label.
    """
    if A.coeff != B.coeff:
        raise MixedRingError(f"cannot sum rings over {A.coeff} and {B.coeff}")
    m = A.formal_dim if m is None else m
    if m is None or A.formal_dim != m or B.formal_dim != m:
        raise DegreeMismatch(f"formal dimensions {A.formal_dim}, {B.formal_dim} do not match m = {m}")
    ga, gb = _top_class(A, m), _top_class(B, m)
    mid_a = [i for i in range(1, len(A)) if i != ga]
    mid_b = [i for i in range(1, len(B)) if i != gb]
    la = {A.labels[i] for i in mid_a}
    lb = {B.labels[i] for i in mid_b}
    clash = bool(la & lb) or A.labels[ga] in lb
    top_label = A.labels[ga]

    def lab(R, i, suffix):
        return R.labels[i] + (suffix if clash else "")

    basis = [(lab(A, i, "1"), A.degrees[i]) for i in mid_a]
    basis += [(lab(B, i, "2"), B.degrees[i]) for i in mid_b]
    basis.append((top_label, m))
    basis.sort(key=lambda t: t[1])  # stable: keeps summand order within a degree
    position = {name_: p + 1 for p, (name_, _) in enumerate(basis)}
    g = position[top_label]
    table: dict[tuple[int, int], dict[int, Any]] = {}
    for R, mid, top, suffix in ((A, mid_a, ga, "1"), (B, mid_b, gb, "2")):
        new = {i: position[lab(R, i, suffix)] for i in mid}
        new[top] = g
        for i in mid:
            for j in mid:
                v = R._products.get((i, j))
                if not v:
                    continue
                key = (new[i], new[j])
                if key[0] <= key[1]:
                    table[key] = {new[k]: c for k, c in v.items()}
    return make_ring(A.coeff, basis, table, m, name or f"{A.name}#{B.name}")
