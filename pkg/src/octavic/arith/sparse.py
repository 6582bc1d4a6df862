"""Sparse multivariate polynomials over Q and their plain-text format.

A polynomial is a mapping from exponent tuples to nonzero coefficients.
Coefficients are Python ints where possible and :class:`fractions.Fraction`
otherwise; mixing the two is transparent.

The text format is a signed sum of terms ``c*a^i*b^j*...`` where the
coefficient may be an integer or ``p/q`` and may be omitted.  Whitespace
(including newlines) is ignored, so data files can hold one term per line;
``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from operator import add

__all__ = ["SparsePoly", "ParseError", "parse_terms", "normalize"]


class ParseError(ValueError):
    """Malformed polynomial text.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif column is not None:
            where = f" (column {column})"
        super().__init__(message + where)


def normalize(x):
    """Collapse integral Fractions to int; leave everything else alone."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _grlex_key(exps):
    return (sum(exps), exps)


class SparsePoly:
    """Immutable sparse polynomial in a fixed ordered list of variables."""

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {n}")
                clean[exps] = normalize(c)
        self._terms = clean
        self._hash = None

    # -- construction ---------------------------------------------------
    @classmethod
    def _raw(cls, variables, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, c, variables):
        variables = tuple(variables)
        if c == 0:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): normalize(c)})

    @classmethod
    def var(cls, name, variables):
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls._raw(variables, {exps: 1})

    @classmethod
    def gens(cls, variables):
        return tuple(cls.var(v, variables) for v in variables)

    @classmethod
    def monomial(cls, exps, variables, coeff=1):
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def from_text(cls, text, variables):
        terms = {}
        for _, exps, c in parse_terms(text, variables):
            terms[exps] = terms.get(exps, 0) + c
        return cls(variables, terms)

    # -- inspection -----------------------------------------------------
    @property
    def terms(self):
        """A copy of the exponent -> coefficient mapping."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        return self._terms.get((0,) * len(self.variables), 0)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms, key=_grlex_key)
        return exps, self._terms[exps]

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def degree(self, var):
        i = self.variables.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def weighted_degrees(self, weights):
        """Set of weighted degrees occurring among the terms."""
        return {sum(w * k for w, k in zip(weights, e)) for e in self._terms}

    def is_weighted_homogeneous(self, weights, degree=None):
        degs = self.weighted_degrees(weights)
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def is_integral(self):
        return all(type(c) is int for c in self._terms.values())

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.variables != self.variables:
                raise ValueError("polynomials live in different variable lists")
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, _RationalABC):
            return SparsePoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = normalize(s)
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            if other.variables != self.variables:
                raise ValueError("polynomials live in different variable lists")
            out = {}
            get = out.get
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = tuple(map(add, e1, e2))
                    out[e] = get(e, 0) + c1 * c2
            return SparsePoly(self.variables, out)
        if isinstance(other, (int, Fraction)) or isinstance(other, _RationalABC):
            if other == 0:
                return SparsePoly.zero(self.variables)
            return SparsePoly._raw(self.variables,
                                   {e: normalize(c * other) for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) or isinstance(other, _RationalABC):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            inv = Fraction(1) / Fraction(other)
            return self * inv
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = SparsePoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation -----------------------------------------------------
    def _values_tuple(self, values):
        if isinstance(values, dict):
            return tuple(values[v] for v in self.variables)
        values = tuple(values)
        if len(values) != len(self.variables):
            raise ValueError("wrong number of values")
        return values

    def evaluate(self, values):
        """Evaluate at a point given as a sequence or a name -> value dict."""
        vals = self._values_tuple(values)
        if not self._terms:
            return 0
        maxexp = [0] * len(vals)
        for e in self._terms:
            for i, k in enumerate(e):
                if k > maxexp[i]:
                    maxexp[i] = k
        powers = []
        for v, m in zip(vals, maxexp):
            row = [1]
            for _ in range(m):
                row.append(row[-1] * v)
            powers.append(row)
        total = 0
        for e, c in self._terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * powers[i][k]
            total = total + t
        return normalize(total)

    __call__ = evaluate

    def substitute(self, mapping):
        """Replace some variables by numbers; the variable list is kept."""
        idx = {self.variables.index(v): val for v, val in mapping.items()}
        out = {}
        for e, c in self._terms.items():
            t = c
            ne = list(e)
            for i, val in idx.items():
                if e[i]:
                    t = t * val ** e[i]
                    ne[i] = 0
            if t:
                key = tuple(ne)
                out[key] = out.get(key, 0) + t
        return SparsePoly(self.variables, out)

    def compose(self, images):
        """Substitute polynomials (or numbers) for every variable."""
        if isinstance(images, dict):
            images = [images[v] for v in self.variables]
        images = list(images)
        target = None
        for im in images:
            if isinstance(im, SparsePoly):
                target = im.variables
                break
        if target is None:
            return self.evaluate(images)
        result = SparsePoly.zero(target)
        cache = {}
        for e, c in self._terms.items():
            t = SparsePoly.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k if isinstance(images[i], SparsePoly) \
                            else SparsePoly.constant(images[i] ** k, target)
                    t = t * cache[key]
            result = result + t
        return result

    def map_coefficients(self, fn):
        return SparsePoly(self.variables, {e: fn(c) for e, c in self._terms.items()})

    # -- text -----------------------------------------------------------
    def _monomial_text(self, exps):
        parts = []
        for v, k in zip(self.variables, exps):
            if k == 1:
                parts.append(v)
            elif k:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def to_text(self, one_term_per_line=False):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = self._monomial_text(exps)
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append((sign, body))
        if one_term_per_line:
            return "\n".join(f"{s}{b}" for s, b in pieces) + "\n"
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, b in pieces[1:]:
            out += f" {s} {b}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SparsePoly({self.variables!r}, {self.to_text()!r})"


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^])
  | (?P<bad>.)
""", re.VERBOSE)


def _tokens(text):
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "comment":
            continue
        if kind == "ws":
            chunk = m.group()
            nl = chunk.count("\n")
            if nl:
                line += nl
                line_start = m.start() + chunk.rfind("\n") + 1
            continue
        yield kind, m.group(), line, col


def parse_terms(text, variables):
    """Parse polynomial text into ``(line, exponents, coefficient)`` triples.

    The line number is where the term starts, so callers can report a bad
    term against its source line.  Terms are not combined.
    """
    variables = tuple(variables)
    index = {v: i for i, v in enumerate(variables)}
    toks = list(_tokens(text))
    if not toks:
        raise ParseError("empty polynomial text")
    out = []
    pos = 0
    n = len(toks)

    def peek():
        return toks[pos] if pos < n else None

    first = True
    while pos < n:
        kind, val, line, col = toks[pos]
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {val!r}", line, col)
        first = False
        if pos >= n:
            raise ParseError("dangling sign at end of input", line, col)
        tline = toks[pos][2]
        coeff = Fraction(1)
        exps = [0] * len(variables)
        expect_factor = True
        seen_number = False
        while True:
            tok = peek()
            if tok is None:
                break
            kind, val, line, col = tok
            if not expect_factor:
                if kind == "op" and val == "*":
                    pos += 1
                    expect_factor = True
                    continue
                break
            if kind == "num":
                if seen_number:
                    raise ParseError(f"second numeric factor {val!r} in term", line, col)
                coeff *= Fraction(val)
                seen_number = True
                pos += 1
            elif kind == "name":
                if val not in index:
                    raise ParseError(f"unknown variable {val!r}", line, col)
                pos += 1
                power = 1
                nxt = peek()
                if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
                    pos += 1
                    num = peek()
                    if num is None or num[0] != "num" or "/" in num[1]:
                        raise ParseError("exponent must be a non-negative integer",
                                         nxt[2], nxt[3])
                    power = int(num[1])
                    pos += 1
                exps[index[val]] += power
            elif kind == "bad":
                raise ParseError(f"unexpected character {val!r}", line, col)
            else:
                raise ParseError(f"unexpected {val!r}", line, col)
            expect_factor = False
        if expect_factor:
            raise ParseError("term ends without a factor", line, col)
        out.append((tline, tuple(exps), normalize(sign * coeff)))
    return out
