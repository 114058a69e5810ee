"""Text grammar for characters, segments, multisegments and representation expressions.

    halfint   := ['-'] digits ['/' '2']
    character := factor ('*' factor)*           e.g. chi*nu^{1/2}, nu^-1, 1
    factor    := 'nu' ['^' power] | ident ['^' int] | '1'
    segment   := [label] '[' halfint ['..' halfint] ']'
    multiseg  := '{' [segment (',' segment)*] '}'
    expr      := atom ('x' atom)*
    atom      := 'Z' multiseg | 'L' multiseg | 'char(' int ',' character ')'
               | 'St(' int ',' character ')' | '(' expr ')'
"""

from .core_arith import TRIVIAL, CharLabel, FormalCharacter, HalfInt, parse_halfint
from .reps import CharRep, LRep, Product, SteinbergRep, ZRep
from .segments import Multisegment, Segment


class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        self.text = text
        self.pos = pos
        self.offset = len(text[:pos].encode())
        super().__init__(f"{msg} at byte {self.offset}")


class _Parser:
    def __init__(self, text):
        self.s = text
        self.i = 0

    def err(self, msg):
        raise ParseError(msg, self.s, self.i)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self, lit):
        self.ws()
        return self.s.startswith(lit, self.i)

    def eat(self, lit):
        if self.peek(lit):
            self.i += len(lit)
            return True
        return False

    def expect(self, lit):
        if not self.eat(lit):
            self.err(f"expected {lit!r}")

    def done(self):
        self.ws()
        if self.i != len(self.s):
            self.err("unexpected trailing input")

    def ident(self):
        self.ws()
        j = self.i
        if j < len(self.s) and (self.s[j].isalpha() or self.s[j] == "_"):
            j += 1
            while j < len(self.s) and (self.s[j].isalnum() or self.s[j] == "_"):
                j += 1
        if j == self.i:
            self.err("expected a name")
        name = self.s[self.i:j]
        self.i = j
        return name

    def integer(self):
        self.ws()
        j = self.i
        if j < len(self.s) and self.s[j] in "+-":
            j += 1
        k = j
        while k < len(self.s) and self.s[k].isdigit():
            k += 1
        if k == j:
            self.err("expected an integer")
        v = int(self.s[self.i:k])
        self.i = k
        return v

    def halfint(self):
        start = self.i
        self.ws()
        start = self.i
        num = self.integer()
        if self.s.startswith("/", self.i):
            self.i += 1
            den = self.integer()
            if den == 0:
                self.i = start
                self.err("zero denominator")
            try:
                return parse_halfint(f"{num}/{den}")
            except ValueError:
                self.i = start
                self.err("not a half-integer")
        return HalfInt(2 * num)

    def power(self):
        if self.eat("{"):
            v = self.halfint()
            self.expect("}")
            return v
        if self.eat("("):
            v = self.halfint()
            self.expect(")")
            return v
        return self.halfint()

    def character(self):
        label = TRIVIAL
        exp = HalfInt(0)
        while True:
            self.ws()
            if self.s.startswith("1", self.i) and not self.s[self.i + 1:self.i + 2].isdigit():
                self.i += 1
            else:
                name = self.ident()
                if name == "nu":
                    exp = exp + (self.power() if self.eat("^") else HalfInt(2))
                else:
                    k = 1
                    if self.eat("^"):
                        if self.eat("{"):
                            k = self.integer()
                            self.expect("}")
                        else:
                            k = self.integer()
                    label = label * CharLabel.gen(name, k)
            if not self.eat("*"):
                break
        return FormalCharacter(label, exp)

    def label_prefix(self):
        self.ws()
        if self.peek("["):
            return TRIVIAL
        label = TRIVIAL
        while True:
            self.ws()
            if self.s.startswith("1", self.i):
                self.i += 1
            else:
                name = self.ident()
                k = 1
                if self.eat("^"):
                    k = self.integer()
                label = label * CharLabel.gen(name, k)
            if not self.eat("*"):
                break
        return label

    def segment(self):
        label = self.label_prefix()
        self.expect("[")
        here = self.i
        b = self.halfint()
        e = self.halfint() if self.eat("..") else b
        self.expect("]")
        try:
            return Segment(b, e, label)
        except ValueError as ex:
            self.i = here
            self.err(str(ex))

    def multisegment(self):
        self.expect("{")
        segs = []
        if not self.eat("}"):
            segs.append(self.segment())
            while self.eat(","):
                segs.append(self.segment())
            self.expect("}")
        return Multisegment(segs)

    def atom(self):
        self.ws()
        if self.eat("("):
            e = self.expr()
            self.expect(")")
            return e
        if self.eat("Z{") or self.eat("L{"):
            kind = self.s[self.i - 2]
            self.i -= 1
            here = self.i
            m = self.multisegment()
            if not m:
                self.i = here
                self.err("empty multisegment")
            return ZRep(m) if kind == "Z" else LRep(m)
        for kw, cls in (("char", CharRep), ("St", SteinbergRep)):
            if self.eat(kw):
                self.expect("(")
                r = self.integer()
                if r < 1:
                    self.err("rank must be positive")
                self.expect(",")
                c = self.character()
                self.expect(")")
                return cls(r, c)
        self.err("expected Z{...}, L{...}, char(...), St(...) or '('")

    def expr(self):
        parts = [self.atom()]
        while True:
            self.ws()
            # 'x' is the product only when followed by a separator
            if self.s.startswith("x", self.i) and (
                    self.i + 1 == len(self.s) or not (self.s[self.i + 1].isalnum() or self.s[self.i + 1] == "_")):
                self.i += 1
                parts.append(self.atom())
            else:
                break
        return parts[0] if len(parts) == 1 else Product(parts)


def _run(text, method):
    p = _Parser(text)
    out = getattr(p, method)()
    p.done()
    return out


def parse_expr(text):
    return _run(text, "expr")


def parse_multisegment(text):
    return _run(text, "multisegment")


def parse_segment(text):
    return _run(text, "segment")


def parse_character(text):
    return _run(text, "character")
