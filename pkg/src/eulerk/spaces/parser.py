"""Recursive-descent parser for the space DSL.

::

    expr := "empty" | "point" | "B(" groupspec ")"
          | "pushout(" expr ";" expr ";" expr ")"
          | "disjoint(" expr {"," expr} ")"
          | "susp(" expr ")" | "wedge(" expr "," expr ")"

Whitespace is insignificant; keywords are case-sensitive.
"""

from __future__ import annotations

from ..errors import ArityError, EulerKError, LimitError, ParseError, UnknownGroupError
from ..groups import build_catalog_group
from .expr import BG, EMPTY, POINT, Disjoint, Pushout, SpaceExpr, Susp, Wedge

_ARITY = {"pushout": (3, ";"), "wedge": (2, ","), "susp": (1, None), "disjoint": (None, ",")}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg, cls=ParseError, pos=None):
        return cls(msg, *self.where(pos))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def word(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos], start

    def group_spec(self):
        # raw text up to the matching ')', brackets allowed inside table literals
        self.skip()
        start, depth = self.pos, 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            elif ch == ")" and depth == 0:
                break
            self.pos += 1
        else:
            raise self.error("unterminated B(...)")
        raw = self.text[start:self.pos]
        try:
            group = build_catalog_group(raw)
        except LimitError as exc:
            line, col = self.where(start)
            raise LimitError(f"{exc} (line {line}, column {col})") from None
        except EulerKError as exc:
            raise self.error(f"unknown group spec {raw.strip()!r}: {exc}", UnknownGroupError, start) from None
        return group

    def expr(self) -> SpaceExpr:
        name, start = self.word()
        if not name:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected an expression, found {found}")
        if name == "empty":
            return EMPTY
        if name == "point":
            return POINT
        if name == "B":
            self.expect("(")
            group = self.group_spec()
            self.expect(")")
            return BG(group)
        if name not in _ARITY:
            raise self.error(f"unknown keyword {name!r}", pos=start)
        self.expect("(")
        args, seps = [self.expr()], []
        while self.peek() in (";", ","):
            seps.append((self.peek(), self.pos))
            self.pos += 1
            args.append(self.expr())
        self.expect(")")
        arity, sep = _ARITY[name]
        if arity is not None and len(args) != arity:
            raise self.error(f"{name} takes {arity} argument(s), got {len(args)}", ArityError, start)
        for ch, at in seps:
            if ch != sep:
                raise self.error(f"{name} arguments are separated by {sep!r}, not {ch!r}", pos=at)
        if name == "pushout":
            return Pushout(*args)
        if name == "wedge":
            return Wedge(*args)
        if name == "susp":
            return Susp(args[0])
        return Disjoint(tuple(args))


def parse(text: str) -> SpaceExpr:
    """Parse DSL text into a (possibly sugared) expression tree."""
    p = _Parser(text)
    out = p.expr()
    if p.peek():
        raise p.error(f"unexpected trailing input {p.text[p.pos:p.pos + 10]!r}")
    return out


def unparse(x: SpaceExpr) -> str:
    return str(x)
