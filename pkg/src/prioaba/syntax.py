"""Line-oriented text format for frameworks.

::

    # comment
    assumption p.
    contrary p : np, x.
    rule np <- q, r.
    rule fact <- .
    value p = v1.
    order v1 < v2.
    order v2 ~ v3.
    sentence unused.

``sentence`` declares a sentence that no other statement mentions.
Identifiers containing ``^``, ``!`` or ``&`` are read back as generated
sentences (value-tagged, negation contraries, conjunctions), so translated
frameworks survive a round trip.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .framework import (OMEGA, Conj, Framework, Neg, Valued, make_framework, render,
                        render_value, validate)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<arrow><-) | (?P<punct>[<~=:,.])
  | (?P<id>[A-Za-z0-9_^&!'{}]+)
""", re.VERBOSE)


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokens(text: str) -> List[_Tok]:
    out = []
    pos, line, start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(_Tok(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    return out


@dataclass
class Statement:
    keyword: str
    args: Tuple[_Tok, ...]
    line: int
    col: int


def _statements(text: str) -> List[Statement]:
    toks = _tokens(text)
    stmts, i = [], 0

    def need(kind, text=None):
        nonlocal i
        if i >= len(toks):
            last = toks[-1]
            raise ParseError("unexpected end of input", last.line, last.col + len(last.text))
        t = toks[i]
        if t.kind != kind or (text is not None and t.text != text):
            raise ParseError(f"expected {text or kind}, found {t.text!r}", t.line, t.col)
        i += 1
        return t

    def id_list():
        nonlocal i
        ids = [need("id")]
        while i < len(toks) and toks[i].text == ",":
            i += 1
            ids.append(need("id"))
        return ids

    while i < len(toks):
        kw = need("id")
        if kw.text in ("assumption", "sentence"):
            args = [need("id")]
        elif kw.text == "contrary":
            args = [need("id")]
            need("punct", ":")
            args += id_list()
        elif kw.text == "rule":
            args = [need("id")]
            need("arrow")
            if i < len(toks) and toks[i].kind == "id":
                args += id_list()
        elif kw.text == "value":
            args = [need("id")]
            need("punct", "=")
            args.append(need("id"))
        elif kw.text == "order":
            a = need("id")
            if i < len(toks) and toks[i].text in ("<", "~"):
                op = toks[i]
                i += 1
            else:
                t = toks[i] if i < len(toks) else kw
                raise ParseError("expected '<' or '~'", t.line, t.col)
            args = [a, op, need("id")]
        else:
            raise ParseError(f"unknown statement {kw.text!r}", kw.line, kw.col)
        need("punct", ".")
        stmts.append(Statement(kw.text, tuple(args), kw.line, kw.col))
    return stmts


def _sentence(name: str, assumptions) -> object:
    if "^" in name:
        base, _, v = name.rpartition("^")
        if base:
            return Valued(_sentence(base, assumptions), OMEGA if v == "omega" else v)
    if name.startswith("!") and len(name) > 1:
        return Neg(_sentence(name[1:], assumptions))
    if "&" in name:
        ps = name.split("&")
        if all(p in assumptions for p in ps):
            return Conj(tuple(ps))
    return name


def parse(text: str) -> Framework:
    """Build a framework from source text; raises :class:`ParseError`."""
    stmts = _statements(text)
    # pass 1: assumptions
    ab: Dict[object, Statement] = {}
    plain = set()
    for st in stmts:
        if st.keyword == "assumption":
            tok = st.args[0]
            s = _sentence(tok.text, plain)
            if s in ab:
                raise ParseError(f"duplicate assumption {tok.text!r}", tok.line, tok.col)
            ab[s] = st
            if isinstance(s, str):
                plain.add(s)
    if not ab:
        raise ParseError("assumptions must be nonempty")
    sent = lambda t: _sentence(t.text, plain)
    # pass 2: everything else
    rules, contraries, valuation, order, values, extra = [], {}, {}, [], {}, []
    for st in stmts:
        a = st.args
        if st.keyword == "sentence":
            extra.append(sent(a[0]))
        elif st.keyword == "contrary":
            target = sent(a[0])
            if target not in ab:
                raise ParseError(f"contrary for undeclared assumption {a[0].text!r}",
                                 a[0].line, a[0].col)
            contraries.setdefault(target, []).extend(sent(t) for t in a[1:])
        elif st.keyword == "rule":
            rules.append((sent(a[0]), tuple(sent(t) for t in a[1:])))
        elif st.keyword == "value":
            target = sent(a[0])
            if target not in ab or isinstance(target, Conj):
                raise ParseError(f"value for undeclared assumption {a[0].text!r}",
                                 a[0].line, a[0].col)
            if target in valuation:
                raise ParseError(f"duplicate value for {a[0].text!r}", a[0].line, a[0].col)
            valuation[target] = a[1].text
            values.setdefault(a[1].text, None)
        elif st.keyword == "order":
            lo, op, hi = a[0].text, a[1].text, a[2].text
            values.setdefault(lo, None)
            values.setdefault(hi, None)
            order.append((lo, hi))
            if op == "~":
                order.append((hi, lo))
    names = {render(s) for s in ab} | {render(s) for r in rules for s in (r[0], *r[1])}
    names |= {render(c) for cs in contraries.values() for c in cs} | {render(s) for s in extra}
    default = "_"
    while default in names or default in values:
        default += "_"
    missing = [s for s in ab if not isinstance(s, Conj) and s not in valuation]
    f = make_framework(list(ab), rules, contraries, valuation, order,
                       sentences=extra, values=list(values) + ([default] if missing else []),
                       default_value=default)
    problems = validate(f)
    if problems:
        first = stmts[0] if stmts else None
        raise ParseError(problems[0], first.line if first else 1, first.col if first else 1)
    return f


def serialize(f: Framework) -> str:
    """Source text that :func:`parse` maps back to an equal framework."""
    lines = [f"assumption {render(a)}." for a in f.assumptions]
    for a in f.assumptions:
        cs = f.contrary_list(a)
        if cs:
            lines.append(f"contrary {render(a)} : {', '.join(render(c) for c in cs)}.")
    for r in f.rules:
        body = ", ".join(render(b) for b in r.body)
        lines.append(f"rule {render(r.head)} <- {body}." if body else f"rule {render(r.head)} <- .")
    for a in f.assumptions:
        if a in f.valuation:
            lines.append(f"value {render(a)} = {render_value(f.valuation[a])}.")
    pos = {v: i for i, v in enumerate(f.values)}
    mentioned = set()
    pairs = []
    for x, y in sorted(f.leq, key=lambda p: (pos[p[0]], pos[p[1]])):
        if x == y:
            continue
        if (y, x) in f.leq:
            if pos[x] < pos[y]:
                pairs.append(f"order {render_value(x)} ~ {render_value(y)}.")
        else:
            pairs.append(f"order {render_value(x)} < {render_value(y)}.")
        mentioned |= {x, y}
    for v in f.values:
        if v not in mentioned:
            pairs.append(f"order {render_value(v)} ~ {render_value(v)}.")
    used = set(f.assumptions) | {c for a in f.assumptions for c in f.contrary_list(a)}
    used |= {s for r in f.rules for s in (r.head, *r.body)}
    lines += [f"sentence {render(s)}." for s in f.sentences if s not in used]
    return "\n".join(lines + pairs) + "\n"


def structure(f: Framework):
    """Order-insensitive view used to compare frameworks."""
    return (frozenset(f.sentences), frozenset(f.rules), f.assumptions,
            frozenset((a, frozenset(c)) for a, c in f.contraries.items() if c),
            frozenset(f.values), f.leq, frozenset(f.valuation.items()))
