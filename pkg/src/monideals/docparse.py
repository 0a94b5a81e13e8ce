"""Parser for the ideal-description document format.

A document declares a ring and then binds names to ideals or graphs::

    ring x1..x7;
    I = ideal(x1*x3*x6, x1*x3*x7, x1*x4*x6);
    G = graph(1-2, 2-3);
    J = cover(G);
    L = edge(G);
    P = prime(x1, x2) * prime(x3);
    K = power(I, 2);
    M = colon(I, x1*x2);
    D = delete(I, x3);

Later statements may refer to earlier names only, so documents are DAGs by
construction.  `#` starts a comment.  The full grammar is spelled out in
the README.  Errors carry 1-based line and column positions.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .arith import (
    colon_monomial,
    contraction,
    deletion,
    ideal_product,
    ideal_sum,
    intersect,
    power,
)
from .core import DomainError, Monomial, MonomialIdeal, MonomialPrime, RingContext
from .structure import GraphSpec, cover_ideal, edge_ideal


class DocumentError(ValueError):
    """Parse or evaluation failure, with document position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, SYM, EOF
    text: str
    line: int
    col: int


_SYMBOLS = ("..", "(", ")", ",", ";", "=", "*", "+", "^", "-")


def _tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith("..", i):
            tokens.append(Token("SYM", "..", line, col))
            i += 2
            col += 2
            continue
        if ch in "(),;=*+^-":
            tokens.append(Token("SYM", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise DocumentError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


@dataclass
class IdealDocument:
    """A parsed document: the ring plus named ideal/graph bindings in order."""

    ring: RingContext
    bindings: dict  # name -> MonomialIdeal | GraphSpec
    digest: str

    def last_ideal_name(self) -> str:
        for name in reversed(list(self.bindings)):
            if isinstance(self.bindings[name], MonomialIdeal):
                return name
        raise DomainError("document binds no ideal")

    def ideal(self, name: str) -> MonomialIdeal:
        if name not in self.bindings:
            raise DomainError(f"no binding named {name!r}")
        value = self.bindings[name]
        if not isinstance(value, MonomialIdeal):
            raise DomainError(f"{name!r} is a graph, not an ideal")
        return value

    def to_text(self) -> str:
        """Normalized document text; reparsing it reproduces the bindings."""
        lines = ["ring " + ", ".join(self.ring.names) + ";"]
        for name, value in self.bindings.items():
            if isinstance(value, GraphSpec):
                edges = sorted(tuple(sorted(e, key=str)) for e in value.edges)
                body = "graph(" + ", ".join(f"{a}-{b}" for a, b in edges) + ")"
            elif value.is_zero:
                body = "ideal()"
            else:
                body = "ideal(" + ", ".join(str(g) for g in value.gens) + ")"
            lines.append(f"{name} = {body};")
        return "\n".join(lines) + "\n"


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring: RingContext | None = None
        self.bindings: dict = {}

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.next()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise DocumentError(f"expected {want!r}, found {tok.text or 'end of input'!r}", tok.line, tok.col)
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise DocumentError(message, tok.line, tok.col)

    def parse(self) -> tuple[RingContext, dict]:
        self.parse_ring()
        while self.peek().kind != "EOF":
            self.parse_statement()
        return self.ring, self.bindings

    def parse_ring(self) -> None:
        self.expect("NAME", "ring")
        tok = self.next()
        if tok.kind == "INT":
            names = [f"x{i}" for i in range(1, int(tok.text) + 1)]
            if not names:
                self.fail("ring needs at least one variable", tok)
        elif tok.kind == "NAME":
            if self.peek().kind == "SYM" and self.peek().text == "..":
                self.next()
                last = self.expect("NAME")
                names = self.expand_range(tok, last)
            else:
                names = [tok.text]
                while self.peek().text == ",":
                    self.next()
                    names.append(self.expect("NAME").text)
        else:
            self.fail("expected a variable count, range, or name list", tok)
        self.expect("SYM", ";")
        try:
            self.ring = RingContext(len(names), tuple(names))
        except DomainError as exc:
            self.fail(str(exc), tok)

    def expand_range(self, first: Token, last: Token) -> list[str]:
        def split(tok):
            text = tok.text
            head = text.rstrip("0123456789")
            if head == text or not head:
                self.fail("range endpoints need a trailing number", tok)
            return head, int(text[len(head):])

        p1, a = split(first)
        p2, b = split(last)
        if p1 != p2:
            self.fail(f"range endpoints {first.text!r} and {last.text!r} disagree", last)
        if b < a:
            self.fail("empty variable range", last)
        return [f"{p1}{k}" for k in range(a, b + 1)]

    def parse_statement(self) -> None:
        name_tok = self.expect("NAME")
        if name_tok.text in self.bindings:
            self.fail(f"{name_tok.text!r} is already bound", name_tok)
        self.expect("SYM", "=")
        value = self.parse_expr()
        self.expect("SYM", ";")
        self.bindings[name_tok.text] = value

    def parse_expr(self):
        value = self.parse_product()
        while self.peek().text == "+":
            op = self.next()
            rhs = self.parse_product()
            value = self.combine(op, value, rhs, ideal_sum, "sum")
        return value

    def parse_product(self):
        value = self.parse_term()
        while self.peek().text == "*":
            op = self.next()
            rhs = self.parse_term()
            value = self.combine(op, value, rhs, ideal_product, "product")
        return value

    def combine(self, op: Token, lhs, rhs, fn, what: str):
        if not isinstance(lhs, MonomialIdeal) or not isinstance(rhs, MonomialIdeal):
            self.fail(f"{what} needs ideal operands", op)
        return fn(lhs, rhs)

    def parse_term(self):
        tok = self.next()
        if tok.kind != "NAME":
            self.fail("expected a name or constructor", tok)
        keyword = tok.text
        if self.peek().text != "(":
            if keyword not in self.bindings:
                self.fail(f"unbound name {keyword!r}", tok)
            return self.bindings[keyword]
        if keyword == "ideal":
            return self.parse_ideal_literal()
        if keyword == "graph":
            return self.parse_graph_literal()
        if keyword == "prime":
            return self.parse_prime_literal()
        if keyword in ("cover", "edge"):
            self.expect("SYM", "(")
            inner_tok = self.peek()
            inner = self.parse_expr()
            self.expect("SYM", ")")
            if not isinstance(inner, GraphSpec):
                self.fail(f"{keyword} needs a graph argument", inner_tok)
            fn = cover_ideal if keyword == "cover" else edge_ideal
            try:
                return fn(inner, self.ring)
            except DomainError as exc:
                self.fail(str(exc), inner_tok)
        if keyword in ("power", "colon", "delete", "contract", "intersect", "sum", "product"):
            return self.parse_call(keyword, tok)
        self.fail(f"unknown constructor {keyword!r}", tok)

    def parse_call(self, keyword: str, tok: Token):
        self.expect("SYM", "(")
        first_tok = self.peek()
        first = self.parse_expr()
        if not isinstance(first, MonomialIdeal):
            self.fail(f"{keyword} needs an ideal first argument", first_tok)
        self.expect("SYM", ",")
        try:
            if keyword == "power":
                t = int(self.expect("INT").text)
                result = power(first, t)
            elif keyword == "colon":
                result = colon_monomial(first, self.parse_monomial())
            elif keyword in ("delete", "contract"):
                arg = self.next()
                if arg.kind == "INT":
                    index = int(arg.text)
                elif arg.kind == "NAME":
                    index = self.ring.index(arg.text)
                else:
                    self.fail("expected a variable", arg)
                fn = deletion if keyword == "delete" else contraction
                result = fn(first, index)
            else:
                second_tok = self.peek()
                second = self.parse_expr()
                if not isinstance(second, MonomialIdeal):
                    self.fail(f"{keyword} needs ideal arguments", second_tok)
                fn = {"intersect": intersect, "sum": ideal_sum, "product": ideal_product}[keyword]
                result = fn(first, second)
        except DomainError as exc:
            self.fail(str(exc), tok)
        self.expect("SYM", ")")
        return result

    def parse_ideal_literal(self) -> MonomialIdeal:
        open_tok = self.expect("SYM", "(")
        gens = []
        if self.peek().text != ")":
            gens.append(self.parse_monomial())
            while self.peek().text == ",":
                self.next()
                gens.append(self.parse_monomial())
        self.expect("SYM", ")")
        from .core import minimalize

        return minimalize(gens, ring=self.ring)

    def parse_monomial(self) -> Monomial:
        tok = self.peek()
        if tok.kind == "INT" and tok.text == "1":
            self.next()
            return self.ring.one()
        exps = [0] * self.ring.nvars
        while True:
            var_tok = self.expect("NAME")
            try:
                idx = self.ring.index(var_tok.text)
            except DomainError:
                self.fail(f"unknown variable {var_tok.text!r}", var_tok)
            e = 1
            if self.peek().text == "^":
                self.next()
                e = int(self.expect("INT").text)
                if e < 1:
                    self.fail("exponent must be positive", var_tok)
            exps[idx - 1] += e
            if self.peek().text == "*":
                nxt = self.tokens[self.pos + 1]
                if nxt.kind != "NAME":
                    break
                self.next()
                continue
            break
        return self.ring.monomial(exps)

    def parse_prime_literal(self) -> MonomialIdeal:
        self.expect("SYM", "(")
        vars_ = []
        while True:
            var_tok = self.expect("NAME")
            try:
                vars_.append(self.ring.index(var_tok.text))
            except DomainError:
                self.fail(f"unknown variable {var_tok.text!r}", var_tok)
            if self.peek().text == ",":
                self.next()
                continue
            break
        self.expect("SYM", ")")
        return MonomialPrime(self.ring, frozenset(vars_)).as_ideal()

    def parse_graph_literal(self) -> GraphSpec:
        open_tok = self.expect("SYM", "(")
        edges = []
        while True:
            a = self.parse_vertex()
            self.expect("SYM", "-")
            b = self.parse_vertex()
            if a == b:
                self.fail("loops are not allowed", open_tok)
            edges.append((a, b))
            if self.peek().text == ",":
                self.next()
                continue
            break
        self.expect("SYM", ")")
        try:
            return GraphSpec.from_edges(edges)
        except DomainError as exc:
            self.fail(str(exc), open_tok)

    def parse_vertex(self):
        tok = self.next()
        if tok.kind == "INT":
            return int(tok.text)
        if tok.kind == "NAME":
            return tok.text
        self.fail("expected a vertex label", tok)


def parse_ideal_document(text: str) -> IdealDocument:
    """Parse and evaluate a document; raises DocumentError with position."""
    parser = _Parser(text)
    ring, bindings = parser.parse()
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return IdealDocument(ring, bindings, digest)
