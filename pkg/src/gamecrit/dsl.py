"""A small expression language naming graphs on the command line.

Grammar (case-sensitive, whitespace ignored)::

    expr := "P" n | "C" n | "K" n | "K" m "," n | "KmM" n
          | "cone(" expr ")" | "union(" expr "," expr ")" | "glue(" expr "," expr ")"
          | "C4plus" | "fig1"

``glue`` identifies the highest-indexed universal vertex of each operand.
"""
from __future__ import annotations

from . import graph as gr
from .graph import Graph, GraphError
from .graph6 import Graph6Error, parse_graph6


class DSLError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.s = "".join(text.split())
        self.i = 0

    def error(self, msg: str) -> DSLError:
        return DSLError(f"{msg} at position {self.i} in {self.s!r}")

    def peek(self, lit: str) -> bool:
        return self.s.startswith(lit, self.i)

    def eat(self, lit: str) -> None:
        if not self.peek(lit):
            raise self.error(f"expected {lit!r}")
        self.i += len(lit)

    def number(self) -> int:
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            raise self.error("expected a number")
        value = int(self.s[self.i:j])
        self.i = j
        return value

    def call(self, name: str, arity: int) -> list[Graph]:
        self.eat(name + "(")
        args = [self.expr()]
        for _ in range(arity - 1):
            self.eat(",")
            args.append(self.expr())
        self.eat(")")
        return args

    def expr(self) -> Graph:
        try:
            if self.peek("cone("):
                return gr.cone(*self.call("cone", 1))
            if self.peek("union("):
                return gr.disjoint_union(*self.call("union", 2))
            if self.peek("glue("):
                a, b = self.call("glue", 2)
                ua, ub = gr.universal_vertices(a), gr.universal_vertices(b)
                if not ua or not ub:
                    raise self.error("glue needs a universal vertex in both operands")
                return gr.identify_universal_pair(a, ua[-1], b, ub[-1])
            if self.peek("C4plus"):
                self.eat("C4plus")
                return gr.c4_plus()
            if self.peek("fig1"):
                self.eat("fig1")
                return gr.fig1_graph()
            if self.peek("KmM"):
                self.eat("KmM")
                return gr.complete_bipartite_minus_matching(self.number())
            if self.peek("P"):
                self.eat("P")
                return gr.path(self.number())
            if self.peek("C"):
                self.eat("C")
                return gr.cycle(self.number())
            if self.peek("K"):
                self.eat("K")
                m = self.number()
                if self.peek(",") and self.i + 1 < len(self.s) and self.s[self.i + 1].isdigit():
                    self.eat(",")
                    return gr.complete_bipartite(m, self.number())
                return gr.complete(m)
        except GraphError as exc:
            raise self.error(str(exc)) from exc
        raise self.error("unknown graph name")


def parse_dsl(text: str) -> Graph:
    p = _Parser(text)
    g = p.expr()
    if p.i != len(p.s):
        raise p.error("trailing input")
    return g


def parse_graph_spec(text: str) -> Graph:
    """A DSL expression, or failing that a graph6 record."""
    try:
        return parse_dsl(text)
    except DSLError as dsl_exc:
        try:
            return parse_graph6(text)
        except Graph6Error:
            raise dsl_exc from None
