"""Exact sparse multivariate polynomials over the integers.

Variables are matrix entries ``a[i,j]``, auxiliary ``u[k]`` and a single
``t``. A monomial is packed into one Python int: each variable owns a
fixed-width slot of bits holding its exponent, so multiplying monomials is
integer addition and divisibility is a couple of bit operations. Slots
are assigned on first use by a process-wide registry.

Coefficients are Python ints, hence unbounded.
"""
from __future__ import annotations

import threading
from itertools import permutations
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

TVAR, UVAR, ENTRY = 0, 1, 2

_WIDTH = 32
_MASK = (1 << _WIDTH) - 1
# top bit of each slot is kept clear, which makes the divisibility test borrow-free
MAX_DEGREE = 1 << (_WIDTH - 1)


class VarId(NamedTuple):
    """Ordered as t < u[1] < u[2] < ... < a[1,1] < a[1,2] < ..."""

    kind: int
    i: int = 0
    j: int = 0

    def __str__(self):
        if self.kind == TVAR:
            return "t"
        if self.kind == UVAR:
            return f"u[{self.i}]"
        return f"a[{self.i},{self.j}]"


def a(i: int, j: int) -> VarId:
    if i < 1 or j < 1:
        raise ValueError("matrix indices are 1-based")
    return VarId(ENTRY, i, j)


def u(k: int) -> VarId:
    if k < 1:
        raise ValueError("u indices are 1-based")
    return VarId(UVAR, k)


def t() -> VarId:
    return VarId(TVAR)


class _Registry:
    def __init__(self):
        self._slot: dict[VarId, int] = {}
        self._vars: list[VarId] = []
        self._lock = threading.Lock()

    def slot(self, v: VarId) -> int:
        s = self._slot.get(v)
        if s is None:
            with self._lock:
                s = self._slot.get(v)
                if s is None:
                    s = len(self._vars)
                    self._vars.append(v)
                    self._slot[v] = s
        return s

    def lookup(self, v: VarId) -> int | None:
        return self._slot.get(v)

    def var(self, s: int) -> VarId:
        return self._vars[s]

    def high_bits(self, key: int) -> int:
        nslots = max(1, (key.bit_length() + _WIDTH - 1) // _WIDTH)
        h = 1 << (_WIDTH - 1)
        out = 0
        for _ in range(nslots):
            out = (out << _WIDTH) | h
        return out


_registry = _Registry()
_END = (VarId(ENTRY + 1), 0)


def _unpack(key: int) -> list[tuple[VarId, int]]:
    out = []
    s = 0
    while key:
        e = key & _MASK
        if e:
            out.append((_registry.var(s), e))
        key >>= _WIDTH
        s += 1
    out.sort()
    return out


def _divides(d: int, m: int) -> bool:
    h = _registry.high_bits(max(d, m))
    diff = (m | h) - d
    return diff >= 0 and diff & h == h


def _total_degree(key: int) -> int:
    deg = 0
    while key:
        deg += key & _MASK
        key >>= _WIDTH
    return deg


class Monomial:
    """A product of variables with positive exponents, in canonical form."""

    __slots__ = ("key",)

    def __init__(self, exponents: Mapping[VarId, int] | Iterable[VarId] = ()):
        if isinstance(exponents, Mapping):
            items = exponents.items()
        else:
            items = [(v, 1) for v in exponents]
        key = 0
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e >= MAX_DEGREE:
                raise OverflowError("exponent too large")
            key += e << (_WIDTH * _registry.slot(v))
            if (key >> (_WIDTH * _registry.slot(v))) & _MASK >= MAX_DEGREE:
                raise OverflowError("exponent too large")
        self.key = key

    @classmethod
    def _from_key(cls, key: int) -> Monomial:
        m = cls.__new__(cls)
        m.key = key
        return m

    def items(self) -> list[tuple[VarId, int]]:
        """(variable, exponent) pairs in increasing variable order."""
        return _unpack(self.key)

    def exponent(self, v: VarId) -> int:
        s = _registry.lookup(v)
        return 0 if s is None else (self.key >> (_WIDTH * s)) & _MASK

    @property
    def degree(self) -> int:
        return _total_degree(self.key)

    def variables(self) -> list[VarId]:
        return [v for v, _ in self.items()]

    def divides(self, other: Monomial) -> bool:
        return _divides(self.key, other.key)

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial._from_key(self.key + other.key)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def sort_key(self):
        """Lex order with t > u[1] > ... > a[1,1] > a[1,2] > ...; sorts leading terms first."""
        return [(v, -e) for v, e in self.items()] + [_END]

    def __lt__(self, other: Monomial):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.key:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.items())

    def __repr__(self):
        return f"Monomial({self})"


Scalar = Union[int, "Polynomial", VarId]


class Polynomial:
    """Immutable sparse polynomial: packed monomial -> nonzero int.

    ``_deg`` is an upper bound on total degree, maintained in O(1) per
    operation so products can refuse to overflow an exponent slot.
    """

    __slots__ = ("_terms", "_deg", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        packed = {}
        deg = 0
        for m, c in (terms or {}).items():
            if not isinstance(m, Monomial):
                m = Monomial(m)
            c = int(c)
            if c:
                packed[m.key] = packed.get(m.key, 0) + c
                deg = max(deg, m.degree)
        self._terms = {k: c for k, c in packed.items() if c}
        self._deg = deg
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int], deg: int) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = terms
        p._deg = deg
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        c = int(c)
        return cls._raw({0: c} if c else {}, 0)

    @classmethod
    def variable(cls, v: VarId) -> Polynomial:
        return cls._raw({1 << (_WIDTH * _registry.slot(v)): 1}, 1)

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> Polynomial:
        return cls._raw({m.key: int(c)} if c else {}, m.degree)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return {Monomial._from_key(k): c for k, c in self._terms.items()}

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms sorted in monomial order."""
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((_total_degree(k) for k in self._terms), default=-1)

    def coeff(self, m: Monomial) -> int:
        return self._terms.get(m.key, 0)

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def variables(self) -> list[VarId]:
        vs = set()
        for k in self._terms:
            vs.update(v for v, _ in _unpack(k))
        return sorted(vs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other, self
        else:
            big, small = self, other
        terms = dict(big._terms)
        for k, c in small._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                del terms[k]
        return Polynomial._raw(terms, max(self._deg, other._deg))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({k: -c for k, c in self._terms.items()}, self._deg)

    def __sub__(self, other: Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Scalar) -> Polynomial:
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: Scalar, within: Monomial | None = None) -> Polynomial:
        """Product, optionally keeping only monomials that divide ``within``.

        Truncation is exact for any coefficient of a divisor of ``within``:
        a term of the full product divides ``within`` only if both of its
        factors do.
        """
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        deg = self._deg + other._deg
        if deg >= MAX_DEGREE:
            raise OverflowError("degree exceeds exponent slot width")
        out: dict[int, int] = {}
        get = out.get
        if within is None:
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    k = k1 + k2
                    out[k] = get(k, 0) + c1 * c2
        else:
            target = within.key
            h = _registry.high_bits(target)
            top = target | h
            left = {k: c for k, c in self._terms.items() if top >= k and (top - k) & h == h}
            right = {k: c for k, c in other._terms.items() if top >= k and (top - k) & h == h}
            for k1, c1 in left.items():
                for k2, c2 in right.items():
                    k = k1 + k2
                    if top >= k and (top - k) & h == h:
                        out[k] = get(k, 0) + c1 * c2
        return Polynomial._raw({k: c for k, c in out.items() if c}, deg)

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        if self._deg * e >= MAX_DEGREE:
            raise OverflowError("degree exceeds exponent slot width")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def truncate(self, within: Monomial) -> Polynomial:
        """Drop every term whose monomial does not divide ``within``."""
        target = within.key
        h = _registry.high_bits(target)
        top = target | h
        return Polynomial._raw(
            {k: c for k, c in self._terms.items() if top >= k and (top - k) & h == h},
            self._deg,
        )

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not m.key:
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self})"


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, VarId):
        return Polynomial.variable(x)
    if isinstance(x, int):
        return Polynomial.constant(x)
    return NotImplemented


def poly(x: Scalar) -> Polynomial:
    """Lift an int, a variable or a polynomial to a Polynomial."""
    p = _coerce(x)
    if p is NotImplemented:
        raise TypeError(f"cannot make a polynomial from {type(x).__name__}")
    return p


ZERO = Polynomial._raw({}, 0)
ONE = Polynomial._raw({0: 1}, 0)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return poly(p) + poly(q)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return poly(p) * poly(q)


def coeff_of(p: Polynomial, m: Monomial) -> int:
    return poly(p).coeff(m)


def multilinear_coeff(p: Polynomial, vars: Sequence[VarId]) -> Polynomial:
    """Coefficient of prod(vars), each to exactly the first power.

    The answer is a polynomial in whatever other variables ``p`` uses.
    """
    if len(set(vars)) != len(vars):
        raise ValueError("duplicate variables")
    slots = []
    for v in vars:
        s = _registry.lookup(v)
        if s is None:
            # never seen, so no term can contain it
            return ZERO
        slots.append(_WIDTH * s)
    strip = sum(1 << s for s in slots)
    p = poly(p)
    out = {}
    for k, c in p._terms.items():
        if all((k >> s) & _MASK == 1 for s in slots):
            out[k - strip] = c
    return Polynomial._raw(out, p._deg)


class GenericMatrix:
    """A square matrix of polynomials.

    ``offset`` records where the block sits when it is later placed on a
    diagonal: row/column r of the block is row/column r + offset of the
    ambient matrix. It does not change the entries.
    """

    def __init__(self, rows: Sequence[Sequence[Scalar]], offset: int = 0):
        entries = tuple(tuple(poly(x) for x in row) for row in rows)
        if any(len(row) != len(entries) for row in entries):
            raise ValueError("matrix must be square")
        self.entries = entries
        self.offset = offset

    @classmethod
    def generic(cls, m: int, offset: int = 0) -> GenericMatrix:
        """The matrix (a[i,j]) with labels offset+1..offset+m."""
        rng = range(offset + 1, offset + m + 1)
        return cls([[a(i, j) for j in rng] for i in rng], offset)

    @classmethod
    def identity(cls, m: int) -> GenericMatrix:
        return cls([[int(i == j) for j in range(m)] for i in range(m)])

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def principal(self, rows: Sequence[int]) -> GenericMatrix:
        """Principal submatrix on the given 0-based indices."""
        return GenericMatrix([[self.entries[i][j] for j in rows] for i in rows])

    def matmul(self, other: GenericMatrix, within: Monomial | None = None) -> GenericMatrix:
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    x, y = self.entries[i][k], other.entries[k][j]
                    if x._terms and y._terms:
                        acc = acc + x.mul(y, within)
                row.append(acc)
            rows.append(row)
        return GenericMatrix(rows, self.offset)

    def trace(self) -> Polynomial:
        acc = ZERO
        for i in range(self.size):
            acc = acc + self.entries[i][i]
        return acc

    def __eq__(self, other):
        return isinstance(other, GenericMatrix) and self.entries == other.entries

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)


def block_diag(*blocks: GenericMatrix) -> GenericMatrix:
    n = sum(b.size for b in blocks)
    rows = [[0] * n for _ in range(n)]
    at = 0
    for b in blocks:
        for i in range(b.size):
            for j in range(b.size):
                rows[at + i][at + j] = b.entries[i][j]
        at += b.size
    return GenericMatrix(rows)


def det(m: GenericMatrix, within: Monomial | None = None) -> Polynomial:
    """Determinant by first-row Laplace expansion, memoized on column subsets.

    The minor reached after expanding k rows is determined by which columns
    remain, so the cache key is that column bitmask alone. With ``within``,
    every product is truncated to divisors of that monomial.
    """
    n = m.size
    if n == 0:
        return ONE
    rows = m.entries
    memo: dict[int, Polynomial] = {}

    def minor(cols: int) -> Polynomial:
        hit = memo.get(cols)
        if hit is not None:
            return hit
        r = n - bin(cols).count("1")
        if r == n:
            return ONE
        acc = ZERO
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not cols & bit:
                continue
            entry = rows[r][j]
            if entry._terms:
                rest = minor(cols & ~bit)
                if rest._terms:
                    term = entry.mul(rest, within)
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[cols] = acc
        return acc

    return minor((1 << n) - 1)


def det_by_permutations(m: GenericMatrix) -> Polynomial:
    """Leibniz sum over all permutations; slow, kept as an independent check."""
    n = m.size
    acc = ZERO
    for perm in permutations(range(n)):
        inversions = sum(1 for x in range(n) for y in range(x + 1, n) if perm[x] > perm[y])
        term = ONE
        for i, j in enumerate(perm):
            term = term * m.entries[i][j]
            if not term._terms:
                break
        acc = acc - term if inversions % 2 else acc + term
    return acc


def collect(p: Polynomial, v: VarId) -> dict[int, Polynomial]:
    """Split ``p`` by powers of ``v``: {e: coefficient of v^e}."""
    p = poly(p)
    s = _registry.lookup(v)
    if s is None:
        return {0: p} if p._terms else {}
    shift = _WIDTH * s
    parts: dict[int, dict[int, int]] = {}
    for k, c in p._terms.items():
        e = (k >> shift) & _MASK
        parts.setdefault(e, {})[k - (e << shift)] = c
    return {e: Polynomial._raw(terms, p._deg) for e, terms in sorted(parts.items())}
