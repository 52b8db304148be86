"""Multivariate polynomials over exact rationals.

Used as the coefficient ring for highest-weight evaluations: one variable
per Cartan coordinate.  Monomials are exponent tuples; printing follows
descending total degree, then lexicographic order.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        self.nvars = nvars
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                acc = data.get(mono, 0) + coeff
                if acc:
                    data[mono] = acc
                else:
                    del data[mono]
        self.terms = data

    @classmethod
    def constant(cls, nvars: int, value) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return Fraction(other) == 0
        const = self.terms.get((0,) * self.nvars)
        return len(self.terms) == 1 and const == Fraction(other)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        data = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = data.get(mono, 0) + coeff
            if acc:
                data[mono] = acc
            else:
                data.pop(mono, None)
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        data = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc = data.get(mono, 0) + c1 * c2
                if acc:
                    data[mono] = acc
                else:
                    del data[mono]
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out.terms = data
        return out

    __rmul__ = __mul__

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        return Poly.constant(self.nvars, other)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.nvars, {m: c for m, c in self.terms.items()
                                 if sum(m) == d})

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_value(self) -> Fraction:
        if self.terms and any(sum(m) for m in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def subs(self, values) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for e, val in zip(mono, values):
                term *= Fraction(val) ** e
            total += term
        return total

    def text(self, names=None) -> str:
        """Rendering like ``1/2*x^2 + x - 3``."""
        if not self.terms:
            return "0"
        if names is None:
            names = (
                ["λ"]
                if self.nvars == 1
                else ["λ%d" % (i + 1) for i in range(self.nvars)]
            )
        monos = sorted(self.terms, key=lambda m: (-sum(m), tuple(-e for e in m)))
        pieces = []
        for mono in monos:
            coeff = self.terms[mono]
            vars_txt = "*".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in zip(names, mono)
                if e
            )
            mag = abs(coeff)
            if not vars_txt:
                body = str(mag)
            elif mag == 1:
                body = vars_txt
            else:
                body = "%s*%s" % (mag, vars_txt)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "Poly(%s)" % self.text()
