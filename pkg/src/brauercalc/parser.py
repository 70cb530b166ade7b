"""Expression grammar for symbol classes, and the matching printer.

    Class := "0" | Term ("+" Term)*
    Term  := "(" Rat "," Rat ")"
    Rat   := Poly ("/" Poly)?
    Poly  := ["-"] Product (("+"|"-") Product)*
    Product := Factor (("*")? Factor)*    (implicit "*" only before t)
    Factor  := integer | "t" ("^" integer)?

Whitespace is insignificant.  The single "/" splits a Rat into its
numerator and denominator polynomials, so "t+2/2" reads as (t+2)/2 and
no parentheses occur inside a Rat.  Fractional coefficients are written
through that division: (3*t)/4 rather than a 3/4 coefficient.

The printer emits exactly this grammar back (clearing coefficient
denominators first), which is what makes the print/parse round trip
stable.  Coefficients outside the prime subfield of a nonprime F_q have
no literal syntax; printing such a class falls back to a bracketed
display form that the parser does not accept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .brauer import BrauerClass
from .errors import ParseError
from .poly import Poly, QQ, RationalFunction, poly_str, ratfunc_str


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch == "t":
            toks.append(("var", ch, i))
            i += 1
            continue
        if ch in "+-*/^(),":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(i, f"unexpected character {ch!r}")
    toks.append(("end", "", n))
    return toks


class _ClassParser:
    def __init__(self, text, field):
        self.toks = _tokenize(text)
        self.pos = 0
        self.field = field

    def peek(self):
        return self.toks[self.pos]

    def advance(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], f"expected {what}")
        return self.advance()

    def parse_class(self):
        tok = self.peek()
        if tok[0] == "end":
            return []
        if tok[0] == "int" and tok[1] == "0":
            nxt = self.toks[self.pos + 1]
            if nxt[0] != "end":
                raise ParseError(nxt[2], "nothing may follow the zero class")
            return []
        pairs = [self.term()]
        while self.peek()[0] == "+":
            self.advance()
            pairs.append(self.term())
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(tok[2], f"unexpected {tok[1]!r}")
        return pairs

    def term(self):
        self.expect("(", "'('")
        a = self.rat()
        self.expect(",", "','")
        b = self.rat()
        self.expect(")", "')'")
        return a, b

    def rat(self, allow_zero=False):
        start = self.peek()[2]
        num = self.poly()
        den = None
        if self.peek()[0] == "/":
            self.advance()
            dstart = self.peek()[2]
            den = self.poly()
            if den.is_zero:
                raise ParseError(dstart, "zero denominator")
        if num.is_zero and not allow_zero:
            raise ParseError(start, "zero entry in symbol")
        return RationalFunction(num, den) if den is not None else RationalFunction(num)

    def poly(self):
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        acc = self.product()
        if negate:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            nxt = self.product()
            acc = acc + nxt if op == "+" else acc - nxt
        return acc

    def product(self):
        acc = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.advance()
                acc = acc * self.factor()
            elif kind == "var":
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        kind, value, off = self.peek()
        if kind == "int":
            self.advance()
            return Poly.constant(self.field, self.field.from_int(int(value)))
        if kind == "var":
            self.advance()
            if self.peek()[0] == "^":
                self.advance()
                etok = self.expect("int", "an integer exponent")
                return Poly.gen(self.field) ** int(etok[1])
            return Poly.gen(self.field)
        raise ParseError(off, "expected a number or t")


@dataclass(frozen=True)
class ClassExpression:
    source: str
    cls: object
    base: object
    p: int

    def canonical(self):
        return class_text(self.cls)


def parse_class(text, base, p):
    """Parse an expression into a class over the given base and torsion."""
    pairs = _ClassParser(text, base.field).parse_class()
    cls = BrauerClass.make(base, p, pairs)
    return ClassExpression(text, cls, base, p)


def parse_ratfunc(text, field):
    """Parse a single Rat (used for witness files and flag values)."""
    parser = _ClassParser(text, field)
    r = parser.rat(allow_zero=True)
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(tok[2], f"unexpected {tok[1]!r}")
    return r


# ---------------------------------------------------------------------------
# printing

def _plain_int(field, c):
    """Whether the coefficient has an integer literal in the grammar."""
    if field is QQ:
        return c.denominator == 1
    rep = c.rep
    if isinstance(rep, int):
        return True
    # element of a nonprime field: a literal exists only in the prime subfield
    if all(x == field.base.zero for x in rep[1:]):
        return _plain_int(field.base, rep[0])
    return False


def _printable_poly(f):
    return all(_plain_int(f.field, c) for c in f.coeffs)


def ratfunc_text(r):
    """Grammar form of a rational function, or a display fallback.

    Over Q the coefficient denominators are cleared into the single
    division allowed by the grammar; the fallback (bracketed residue
    representations over nonprime fields) is not re-parseable.
    """
    if r.field is QQ:
        scale = lcm(
            *(c.denominator for c in r.num.coeffs),
            *(c.denominator for c in r.den.coeffs),
        )
        num = r.num * Fraction(scale)
        den = r.den * Fraction(scale)
    else:
        num, den = r.num, r.den
    if not (_printable_poly(num) and _printable_poly(den)):
        return ratfunc_str(r)
    num_s = poly_str(num)
    if den.degree == 0 and den.lc == r.field.one:
        return num_s
    return f"{num_s}/{poly_str(den)}"


def class_text(cls):
    """Canonical printed form; parses back to the identical symbol list."""
    if not cls.symbols:
        return "0"
    parts = [f"({ratfunc_text(s.a)}, {ratfunc_text(s.b)})" for s in cls.symbols]
    return " + ".join(parts)
