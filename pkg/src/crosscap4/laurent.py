"""Sparse integer Laurent polynomials in one variable T.

A polynomial is a mapping {exponent: coefficient} with no stored zero
coefficients; the zero polynomial is the empty mapping.  Values behave as
immutable after construction: no operation mutates its operands.
"""

from .errors import InexactDivision, NotSymmetric


class LaurentPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[int(e)] = int(c)
        self._terms = t

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def one_minus_power(cls, k):
        """1 - T^k (the only denominators the Alexander quotient needs)."""
        return cls({0: 1, k: -1})

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, exponent):
        return self._terms.get(exponent, 0)

    def is_zero(self):
        return not self._terms

    def min_exp(self):
        return min(self._terms)

    def max_exp(self):
        return max(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        res = dict(self._terms)
        for e, c in other._terms.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = res
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        res = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = res.get(e, 0) + c1 * c2
                if s:
                    res[e] = s
                else:
                    res.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = res
        return out

    def shift(self, k):
        """Multiply by T^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {e + k: c for e, c in self._terms.items()}
        return out

    def exact_div(self, den):
        """Exact quotient self / den over the integers.

        Both operands are shifted to ordinary polynomials, long division runs
        from the top degree, and the result is shifted back.  A nonzero
        remainder raises InexactDivision.
        """
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        num_shift = self.min_exp()
        den_shift = den.min_exp()
        rem = {e - num_shift: c for e, c in self._terms.items()}
        dterms = [(e - den_shift, c) for e, c in den._terms.items()]
        ddeg = max(e for e, _ in dterms)
        dlead = dict(dterms)[ddeg]
        quot = {}
        while rem:
            e = max(rem)
            if e < ddeg:
                raise InexactDivision("nonzero remainder of degree %d" % e)
            c = rem[e]
            if c % dlead:
                raise InexactDivision(
                    "leading coefficient %d not divisible by %d" % (c, dlead))
            qc = c // dlead
            qe = e - ddeg
            quot[qe] = qc
            for de, dc in dterms:
                ke = qe + de
                s = rem.get(ke, 0) - qc * dc
                if s:
                    rem[ke] = s
                else:
                    rem.pop(ke, None)
        out = LaurentPoly(quot)
        return out.shift(num_shift - den_shift)

    def symmetric_coeffs(self):
        """Decompose a symmetric polynomial as a0 + sum a_j (T^j + T^-j).

        Returns (a0, [a_1, ..., a_d]) where d is the top exponent.  Raises
        NotSymmetric if any coefficient differs from its mirror.
        """
        for e, c in self._terms.items():
            if self._terms.get(-e, 0) != c:
                raise NotSymmetric(
                    "coefficient of T^%d is %d but of T^%d is %d"
                    % (e, c, -e, self._terms.get(-e, 0)))
        if self.is_zero():
            return 0, []
        d = max(self.max_exp(), 0)
        return self.coeff(0), [self.coeff(j) for j in range(1, d + 1)]

    def t0(self):
        """Torsion coefficient sum j*a_j of a symmetric polynomial."""
        _, a = self.symmetric_coeffs()
        return sum(j * aj for j, aj in enumerate(a, start=1))

    def eval_at_one(self):
        """Sum of all coefficients (the value at T = 1)."""
        return sum(self._terms.values())

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                var = "T" if e == 1 else "T^%d" % e
                body = mag + var
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%r)" % (self._terms,)
