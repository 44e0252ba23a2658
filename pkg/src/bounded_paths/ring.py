"""Sparse multivariate polynomials with integer coefficients.

Every coefficient object in the package is an :class:`MPoly`.  A polynomial
stores a sorted tuple of the variable names it actually uses (``gens``) and a
dict mapping packed exponent vectors to nonzero Python integers.  Exponent
vectors are packed into a single integer, one 32-bit field per variable with
``gens[0]`` in the most significant field, so monomial multiplication is
integer addition and integer comparison is the lexicographic monomial order.

The canonical text form lists terms by ascending power of ``z``, then of
``u``, then by ascending total degree in the remaining (weight) variables,
ties broken lexicographically by variable name with larger exponents first::

    >>> str(parse("t^2*z^2 + 1 - z"))
    '1 - z + t^2*z^2'

Values are immutable; all operations return new polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import NonUnitConstantTerm, NotDivisible, ParseError

__all__ = [
    "MPoly",
    "TruncatedSeries",
    "RESERVED",
    "parse",
    "const",
    "var",
    "mp_arith",
    "mp_exact_div",
    "rational_series",
    "univariate_gcd_in",
    "reduce_fraction",
    "check_var_name",
]

RESERVED = ("z", "u")
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

_W = 32
_FIELD = (1 << _W) - 1
_MAX_EXP = (1 << (_W - 1)) - 1

Coercible = Union["MPoly", int]


def check_var_name(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ParseError(f"invalid variable name {name!r}")
    return name


def _guard(n: int) -> int:
    g = 0
    for i in range(n):
        g |= 1 << (_W * i + _W - 1)
    return g


def _pack(exps: Iterable[int]) -> int:
    m = 0
    for e in exps:
        if e < 0 or e > _MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        m = (m << _W) | e
    return m


def _unpack(m: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = m & _FIELD
        m >>= _W
    return tuple(out)


def _repack(terms: dict[int, int], old: tuple[str, ...], new: tuple[str, ...]) -> dict[int, int]:
    if old == new:
        return terms
    pos = {g: i for i, g in enumerate(new)}
    n_old, n_new = len(old), len(new)
    # variables absent from ``new`` must carry exponent 0; they are dropped
    shifts = [_W * (n_new - 1 - pos[g]) if g in pos else None for g in old]
    out = {}
    for m, c in terms.items():
        exps = _unpack(m, n_old)
        key = 0
        for e, s in zip(exps, shifts):
            if s is not None:
                key |= e << s
        out[key] = c
    return out


def _divides(small: int, big: int, guard: int) -> bool:
    """True when every exponent field of ``small`` is <= that of ``big``."""
    return ((big | guard) - small) & guard == guard


class MPoly:
    """Immutable sparse polynomial over the integers in named variables."""

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: tuple[str, ...] = (), terms: dict[int, int] | None = None):
        # Internal constructor; trusted input: sorted gens, no zero coefficients.
        terms = terms or {}
        if gens and terms:
            used = 0
            for m in terms:
                used |= m
            n = len(gens)
            keep = tuple(g for i, g in enumerate(gens) if (used >> (_W * (n - 1 - i))) & _FIELD)
            if keep != gens:
                terms = _repack_drop(terms, gens, keep)
                gens = keep
        elif not terms:
            gens = ()
        self.gens = gens
        self.terms = terms
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "MPoly":
        c = int(c)
        return cls((), {0: c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MPoly":
        check_var_name(name)
        return cls((name,), {_pack((exp,)): 1})

    @classmethod
    def from_dict(cls, data: Mapping[tuple[tuple[str, int], ...], int]) -> "MPoly":
        """Build from ``{((var, exp), ...): coeff}``; repeated keys are summed."""
        names = sorted({v for mono in data for v, e in mono if e})
        for v in names:
            check_var_name(v)
        gens = tuple(names)
        pos = {g: i for i, g in enumerate(gens)}
        terms: dict[int, int] = {}
        for mono, c in data.items():
            exps = [0] * len(gens)
            for v, e in mono:
                if e < 0:
                    raise ValueError("negative exponent")
                if e:
                    exps[pos[v]] += e
            key = _pack(exps)
            terms[key] = terms.get(key, 0) + int(c)
        return cls(gens, {m: c for m, c in terms.items() if c})

    @staticmethod
    def coerce(x: Coercible) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, int):
            return MPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MPoly")

    # -- inspection ---------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self.gens

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.gens

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> dict[tuple[tuple[str, int], ...], int]:
        n = len(self.gens)
        out = {}
        for m, c in self.terms.items():
            exps = _unpack(m, n)
            out[tuple((g, e) for g, e in zip(self.gens, exps) if e)] = c
        return out

    def degree(self, name: str | None = None) -> int:
        """Degree in ``name`` (total degree if None); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            n = len(self.gens)
            return max(sum(_unpack(m, n)) for m in self.terms)
        if name not in self.gens:
            return 0
        shift = _W * (len(self.gens) - 1 - self.gens.index(name))
        return max((m >> shift) & _FIELD for m in self.terms)

    def total_degree(self, exclude: Iterable[str] = ()) -> int:
        if not self.terms:
            return -1
        return max(self.homogeneous_components(exclude))

    def coeffs_in(self, name: str) -> dict[int, "MPoly"]:
        """View as a univariate polynomial in ``name``: ``{exp: coeff}``."""
        if name not in self.gens:
            return {0: self} if self.terms else {}
        i = self.gens.index(name)
        shift = _W * (len(self.gens) - 1 - i)
        mask = _FIELD << shift
        buckets: dict[int, dict[int, int]] = {}
        for m, c in self.terms.items():
            e = (m & mask) >> shift
            buckets.setdefault(e, {})[m & ~mask] = c
        return {e: MPoly(self.gens, t) for e, t in buckets.items()}

    @classmethod
    def from_coeffs_in(cls, name: str, coeffs: Mapping[int, "MPoly"]) -> "MPoly":
        x = cls.var(name)
        out = cls.const(0)
        for e, c in coeffs.items():
            if c:
                out = out + c * x**e
        return out

    def coeff(self, name: str, exp: int) -> "MPoly":
        return self.coeffs_in(name).get(exp, ZERO)

    def leading_coeff_in(self, name: str) -> "MPoly":
        cs = self.coeffs_in(name)
        return cs[max(cs)] if cs else ZERO

    def homogeneous_components(self, exclude: Iterable[str] = ()) -> dict[int, "MPoly"]:
        """Split by total degree in the variables not listed in ``exclude``."""
        ex = set(exclude)
        n = len(self.gens)
        counted = [i for i, g in enumerate(self.gens) if g not in ex]
        buckets: dict[int, dict[int, int]] = {}
        for m, c in self.terms.items():
            exps = _unpack(m, n)
            d = sum(exps[i] for i in counted)
            buckets.setdefault(d, {})[m] = c
        return {d: MPoly(self.gens, t) for d, t in buckets.items()}

    def leading_term(self) -> tuple[int, "MPoly"]:
        """Integer coefficient and monomial of the lex-largest term."""
        m = max(self.terms)
        return self.terms[m], MPoly(self.gens, {m: 1})

    # -- arithmetic ---------------------------------------------------------

    def _aligned(self, other: "MPoly") -> tuple[tuple[str, ...], dict[int, int], dict[int, int]]:
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = tuple(sorted(set(self.gens) | set(other.gens)))
        return gens, _repack(self.terms, self.gens, gens), _repack(other.terms, other.gens, gens)

    def __add__(self, other: Coercible) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        gens, a, b = self._aligned(other)
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return MPoly(gens, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.gens, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Coercible) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other: Coercible) -> "MPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return MPoly(self.gens, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        gens, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                k = m1 + m2
                out[k] = get(k, 0) + c1 * c2
        return MPoly(gens, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative power")
        if self.gens and e * self.degree() > _MAX_EXP:
            raise OverflowError("exponent overflow")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    def substitute(self, mapping: Mapping[str, Coercible]) -> "MPoly":
        """Replace variables by polynomials (or integers) simultaneously."""
        if not any(v in self.gens for v in mapping):
            return self
        n = len(self.gens)
        images = [MPoly.coerce(mapping[g]) if g in mapping else MPoly.var(g) for g in self.gens]
        cache: list[dict[int, MPoly]] = [{} for _ in range(n)]

        def power(i: int, e: int) -> MPoly:
            p = cache[i].get(e)
            if p is None:
                p = images[i] ** e
                cache[i][e] = p
            return p

        out = ZERO
        for m, c in self.terms.items():
            term = MPoly.const(c)
            for i, e in enumerate(_unpack(m, n)):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def content(self) -> int:
        """Nonnegative gcd of the integer coefficients."""
        from math import gcd

        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- printing -----------------------------------------------------------

    def _sort_key(self, m: int):
        exps = _unpack(m, len(self.gens))
        by = dict(zip(self.gens, exps))
        weights = [e for g, e in zip(self.gens, exps) if g not in RESERVED]
        return (by.get("z", 0), by.get("u", 0), sum(weights), tuple(-e for e in weights))

    def sorted_terms(self) -> list[tuple[int, tuple[tuple[str, int], ...]]]:
        n = len(self.gens)
        out = []
        for m in sorted(self.terms, key=self._sort_key):
            exps = _unpack(m, n)
            out.append((self.terms[m], tuple((g, e) for g, e in zip(self.gens, exps) if e)))
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (c, mono) in enumerate(self.sorted_terms()):
            body = "*".join(g if e == 1 else f"{g}^{e}" for g, e in mono)
            a = abs(c)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = f"{a}*{body}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append((" - " if c < 0 else " + ") + text)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"


def _repack_drop(terms: dict[int, int], old: tuple[str, ...], keep: tuple[str, ...]) -> dict[int, int]:
    return _repack(terms, old, keep) if keep else {0: terms[0]}


ZERO = MPoly()
ONE = MPoly.const(1)


def const(c: int) -> MPoly:
    return MPoly.const(c)


def var(name: str) -> MPoly:
    return MPoly.var(name)


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*^−]))")


def parse(text: str) -> MPoly:
    """Parse the canonical text form (``1 - z + t^2*z^2``).

    Whitespace is free; ``**`` is accepted for ``^`` and the Unicode minus
    sign for ``-``.  Parentheses are not part of the grammar.
    """
    if not isinstance(text, str):
        raise ParseError("polynomial text must be a string")
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN_RE.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at offset {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("var", name))
        else:
            tokens.append(("op", {"**": "^", "−": "-"}.get(op, op)))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial text")

    i = 0
    data: dict[tuple[tuple[str, int], ...], int] = {}

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    first = True
    while i < len(tokens):
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' in {text!r}")
        first = False
        coeff = 1
        mono: dict[str, int] = {}
        need_factor = True
        while need_factor:
            kind, val = peek()
            if kind == "num":
                coeff *= val
                i += 1
            elif kind == "var":
                name = val
                i += 1
                exp = 1
                if peek() == ("op", "^"):
                    i += 1
                    kind, val = peek()
                    if kind != "num":
                        raise ParseError(f"expected exponent after '^' in {text!r}")
                    exp = val
                    i += 1
                mono[name] = mono.get(name, 0) + exp
            else:
                raise ParseError(f"expected a factor in {text!r}")
            if peek() == ("op", "*"):
                i += 1
            else:
                need_factor = False
        key = tuple(sorted(mono.items()))
        data[key] = data.get(key, 0) + sign * coeff
    return MPoly.from_dict(data)


# -- ring operations --------------------------------------------------------


def mp_arith(op: str, p: Coercible, q: Coercible | None = None) -> MPoly:
    """Dispatch ``add``/``sub``/``mul``/``neg`` on polynomials."""
    p = MPoly.coerce(p)
    if op == "neg":
        return -p
    q = MPoly.coerce(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def mp_exact_div(p: Coercible, q: Coercible) -> MPoly:
    """Return ``r`` with ``p == q*r``; raise :class:`NotDivisible` otherwise.

    Division by leading terms in the lexicographic order, which coincides
    with recursive univariate division in the first variable with
    polynomial coefficients.
    """
    p, q = MPoly.coerce(p), MPoly.coerce(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return ZERO
    if q.is_constant():
        c = q.terms[0]
        if any(v % c for v in p.terms.values()):
            raise NotDivisible(f"{p} is not divisible by {c}")
        return MPoly(p.gens, {m: v // c for m, v in p.terms.items()})
    if not set(q.gens) <= set(p.gens):
        raise NotDivisible(f"{p} is not divisible by {q}")
    gens, rem, qt = p._aligned(q)
    rem = dict(rem)
    guard = _guard(len(gens))
    lq = max(qt)
    cq = qt[lq]
    quo: dict[int, int] = {}
    while rem:
        m = max(rem)
        c = rem[m]
        if not _divides(lq, m, guard) or c % cq:
            raise NotDivisible(f"{p} is not divisible by {q}")
        dm = m - lq
        dc = c // cq
        quo[dm] = dc
        for mq, c2 in qt.items():
            k = dm + mq
            v = rem.get(k, 0) - dc * c2
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return MPoly(gens, quo)


def divides(q: MPoly, p: MPoly) -> bool:
    try:
        mp_exact_div(p, q)
    except NotDivisible:
        return False
    return True


# -- truncated series -------------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients 0..order of a series.

    ``var`` names the graded variable; ``None`` means grading by total degree
    in the weight variables (everything except ``z`` and ``u``).
    """

    var: str | None
    order: int
    coeffs: tuple[MPoly, ...]

    def __getitem__(self, n: int) -> MPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_poly(self) -> MPoly:
        """Sum of the slices (multiplied back by powers of ``var``)."""
        out = ZERO
        x = MPoly.var(self.var) if self.var else None
        for n, c in enumerate(self.coeffs):
            out = out + (c * x**n if x is not None else c)
        return out


def _slices(p: MPoly, var: str | None, order: int) -> list[MPoly]:
    parts = p.coeffs_in(var) if var else p.homogeneous_components(RESERVED)
    return [parts.get(n, ZERO) for n in range(order + 1)]


def rational_series(num: Coercible, den: Coercible, order: int, var: str | None = "z") -> TruncatedSeries:
    """Expand ``num/den`` up to ``order`` in the chosen grading.

    With ``var`` set, coefficients are the slices by powers of that variable;
    with ``var=None`` they are the homogeneous components by total degree in
    the weight variables.  The degree-0 slice of ``den`` must be exactly 1.
    """
    num, den = MPoly.coerce(num), MPoly.coerce(den)
    if order < 0:
        raise ValueError("order must be >= 0")
    if var is not None:
        check_var_name(var)
    n_slices = _slices(num, var, order)
    d_parts = den.coeffs_in(var) if var else den.homogeneous_components(RESERVED)
    if d_parts.get(0, ZERO) != ONE:
        raise NonUnitConstantTerm(f"denominator {den} does not have constant term 1")
    d_items = sorted((e, c) for e, c in d_parts.items() if e > 0)
    coeffs: list[MPoly] = []
    for n in range(order + 1):
        acc = n_slices[n]
        for e, c in d_items:
            if e > n:
                break
            acc = acc - c * coeffs[n - e]
        coeffs.append(acc)
    return TruncatedSeries(var, order, tuple(coeffs))


# -- gcd --------------------------------------------------------------------


def _uni(p: MPoly, x: str) -> list[MPoly]:
    cs = p.coeffs_in(x)
    if not cs:
        return []
    return [cs.get(e, ZERO) for e in range(max(cs) + 1)]


def _from_uni(cs: list[MPoly], x: str) -> MPoly:
    return MPoly.from_coeffs_in(x, dict(enumerate(cs)))


def _trim(cs: list[MPoly]) -> list[MPoly]:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] = r[i + shift] - lr * c
        r.pop()
        _trim(r)
        e -= 1
    if e > 0 and r:
        f = lb**e
        r = [c * f for c in r]
    return r


def _poly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """Full gcd over Z[all variables], recursive on the first variable."""
    if not p:
        return _normalize_sign(q)
    if not q:
        return _normalize_sign(p)
    if p.is_constant() or q.is_constant():
        from math import gcd

        return MPoly.const(gcd(p.content(), q.content()))
    shared = sorted(set(p.gens) | set(q.gens))
    x = shared[0]
    cont_p, pp_p = _content_split(p, x)
    cont_q, pp_q = _content_split(q, x)
    g = _subresultant_pp(pp_p, pp_q, x)
    return _normalize_sign(_poly_gcd(cont_p, cont_q) * g)


def _content_split(p: MPoly, x: str) -> tuple[MPoly, MPoly]:
    """Content in ``x`` (gcd of coefficients) and the primitive part."""
    g = ZERO
    for c in p.coeffs_in(x).values():
        g = _poly_gcd(g, c)
        if g == ONE:
            break
    return g, mp_exact_div(p, g)


def _subresultant_pp(p: MPoly, q: MPoly, x: str) -> MPoly:
    """Primitive gcd in ``x`` of two polynomials primitive in ``x``."""
    a, b = _uni(p, x), _uni(q, x)
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return ONE
    g = h = ONE
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        if len(r) == 1:
            return ONE
        a = b
        div = g * h**delta
        b = [mp_exact_div(c, div) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = mp_exact_div(g**delta, h ** (delta - 1))
    return _content_split(_from_uni(b, x), x)[1]


def _normalize_sign(p: MPoly) -> MPoly:
    if not p:
        return p
    c, _ = p.leading_term()
    return -p if c < 0 else p


def univariate_gcd_in(p: Coercible, q: Coercible, x: str) -> MPoly:
    """Gcd of ``p`` and ``q`` as polynomials in ``x`` over the fraction field
    of the other variables.

    The result is primitive (no factor free of ``x``, integer content 1) with
    a positive leading integer coefficient, and divides both inputs exactly.
    Computed with the subresultant remainder sequence.
    """
    p, q = MPoly.coerce(p), MPoly.coerce(q)
    if not p or not q:
        raise ValueError("gcd inputs must be nonzero")
    _, pp_p = _content_split(p, x)
    _, pp_q = _content_split(q, x)
    if x not in pp_p.gens or x not in pp_q.gens:
        return ONE
    g = _normalize_sign(_subresultant_pp(pp_p, pp_q, x))
    c = g.content()
    if c > 1:
        g = mp_exact_div(g, MPoly.const(c))
    # the theory guarantees these; a failure here is a bug
    mp_exact_div(p, g)
    mp_exact_div(q, g)
    return g


def reduce_fraction(num: Coercible, den: Coercible) -> tuple[MPoly, MPoly]:
    """Cancel every common factor of ``num/den``.

    One gcd pass per variable removes all factors involving that variable;
    the remaining integer content is removed last.  The sign is chosen so the
    denominator's constant term is positive when it has one.
    """
    num, den = MPoly.coerce(num), MPoly.coerce(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return ZERO, ONE
    for x in sorted(set(num.gens) & set(den.gens)):
        if x not in num.gens or x not in den.gens:
            continue
        g = univariate_gcd_in(num, den, x)
        if g != ONE:
            num, den = mp_exact_div(num, g), mp_exact_div(den, g)
    from math import gcd

    c = gcd(num.content(), den.content())
    if c > 1:
        num, den = mp_exact_div(num, MPoly.const(c)), mp_exact_div(den, MPoly.const(c))
    lead = den.constant_term() or den.leading_term()[0]
    if lead < 0:
        num, den = -num, -den
    return num, den
