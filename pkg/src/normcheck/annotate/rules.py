"""Pattern rules over token and annotation streams.

A rule file holds one phase::

    phase StandardReferences;
    // comments run to end of line
    rule IsoRef priority 10:
        ({Word=="ISO"} ("/" {orth==Upper})? {Number} ("-" {Number})?)#ref
        -> Reference{standard_ref=$ref, origin="rule"};

Left-hand side elements:

* ``{Word}``, ``{Number}``, ``{Punct}``: a token of that kind
* ``{Word=="ISO"}``, ``{Number!="0"}``, ``{Word=~"^(ISO|IEC)$"}``: kind plus
  a test on the surface (``=~`` is a regex search)
* ``{kind==Number}``, ``{orth==Upper}``, ``{surface=="-"}``: attribute tests,
  comma-separated inside one pair of braces
* ``"-"``: a token whose surface is exactly ``-``
* ``{ann:Mention}``, ``{ann:Mention, ontology_id=="isto"}``: an existing
  annotation starting at the current token, tested on its features
* ``(a b | c)`` groups with alternatives, quantifiers ``? * +`` and
  bindings ``(...)#name``

Right-hand side actions create annotations over the whole match, or over a
binding with ``Type@name{...}``. Feature values are literals or ``$name``,
the text covered by a binding. Space tokens are never part of the stream.
"""

from __future__ import annotations

import re
from collections import defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from normcheck.annotate.model import Annotation, AnnotationSet, rule_source
from normcheck.annotate.tokens import Orth, Token, TokenKind, content_tokens, tokenize
from normcheck.corpus import Document
from normcheck.errors import RuleError

LONGEST_MATCH = "LongestMatch"

_LEX = re.compile(
    r"""
    (?P<ws>\s+|//[^\n]*)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<int>-?\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_.\-]*)
  | (?P<op>==|!=|=~|->|[=:;,{}()|?*+\#@$])
    """,
    re.VERBOSE,
)

_TOKEN_KINDS = {kind.value: kind for kind in TokenKind}
_ORTHS = {orth.value: orth for orth in Orth}


# Pattern AST


@dataclass(frozen=True)
class TokenTest:
    constraints: tuple[tuple[str, str, str], ...]


@dataclass(frozen=True)
class AnnTest:
    ann_type: str
    constraints: tuple[tuple[str, str, str], ...] = ()


@dataclass(frozen=True)
class Seq:
    items: tuple[object, ...]


@dataclass(frozen=True)
class Alt:
    options: tuple[Seq, ...]


@dataclass(frozen=True)
class Repeat:
    node: object
    low: int
    high: int | None


@dataclass(frozen=True)
class Bind:
    node: object
    name: str


@dataclass(frozen=True)
class Action:
    ann_type: str
    features: tuple[tuple[str, str, bool], ...] = ()  # (name, value, value_is_binding)
    over: str | None = None


@dataclass(frozen=True)
class Rule:
    name: str
    priority: int
    lhs: Seq
    rhs: tuple[Action, ...]


@dataclass(frozen=True)
class Phase:
    name: str
    rules: tuple[Rule, ...] = ()
    control: str = LONGEST_MATCH

    def __post_init__(self) -> None:
        names = [rule.name for rule in self.rules]
        dup = {name for name in names if names.count(name) > 1}
        if dup:
            raise RuleError(f"phase {self.name}: duplicate rule name(s) {', '.join(sorted(dup))}")
        if self.control != LONGEST_MATCH:
            raise RuleError(f"phase {self.name}: unsupported control {self.control!r}")
        for rule in self.rules:
            _validate_rule(rule)


def _bindings(node: object) -> set[str]:
    if isinstance(node, Bind):
        return {node.name} | _bindings(node.node)
    if isinstance(node, Seq):
        return set().union(*(_bindings(item) for item in node.items)) if node.items else set()
    if isinstance(node, Alt):
        return set().union(*(_bindings(opt) for opt in node.options))
    if isinstance(node, Repeat):
        return _bindings(node.node)
    return set()


def _nullable(node: object) -> bool:
    if isinstance(node, (TokenTest, AnnTest)):
        return False
    if isinstance(node, Bind):
        return _nullable(node.node)
    if isinstance(node, Seq):
        return all(_nullable(item) for item in node.items)
    if isinstance(node, Alt):
        return any(_nullable(opt) for opt in node.options)
    if isinstance(node, Repeat):
        return node.low == 0 or _nullable(node.node)
    raise TypeError(node)


def _validate_rule(rule: Rule) -> None:
    if not rule.lhs.items:
        raise RuleError(f"rule {rule.name}: empty left-hand side")
    if _nullable(rule.lhs):
        raise RuleError(f"rule {rule.name}: left-hand side can match empty input")
    if not rule.rhs:
        raise RuleError(f"rule {rule.name}: no actions")
    bound = _bindings(rule.lhs)
    for action in rule.rhs:
        used = {value for _, value, is_ref in action.features if is_ref}
        if action.over is not None:
            used.add(action.over)
        missing = used - bound
        if missing:
            raise RuleError(f"rule {rule.name}: unbound label(s) {', '.join(sorted(missing))}")


# Parser


class _Parser:
    def __init__(self, text: str, where: str) -> None:
        self.where = where
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _LEX.match(text, pos)
            if m is None:
                raise RuleError(f"{where}: unexpected character {text[pos]!r} at line {self._line(text, pos)}")
            if m.lastgroup != "ws":
                self.toks.append((m.lastgroup, m.group(), self._line(text, pos)))
            pos = m.end()
        self.i = 0

    @staticmethod
    def _line(text: str, pos: int) -> int:
        return text.count("\n", 0, pos) + 1

    def peek(self, value: str | None = None) -> bool:
        if self.i >= len(self.toks):
            return False
        return value is None or self.toks[self.i][1] == value

    def error(self, message: str) -> RuleError:
        line = self.toks[self.i][2] if self.i < len(self.toks) else "EOF"
        return RuleError(f"{self.where}:{line}: {message}")

    def take(self, value: str | None = None, kind: str | None = None) -> str:
        if self.i >= len(self.toks):
            raise self.error(f"expected {value or kind}, got end of file")
        tkind, tval, _ = self.toks[self.i]
        if (value is not None and tval != value) or (kind is not None and tkind != kind):
            raise self.error(f"expected {value or kind}, got {tval!r}")
        self.i += 1
        return tval

    def string(self) -> str:
        raw = self.take(kind="string")[1:-1]
        return re.sub(r"\\(.)", r"\1", raw)

    def value(self) -> str:
        kind = self.toks[self.i][0] if self.i < len(self.toks) else None
        if kind == "string":
            return self.string()
        if kind in ("ident", "int"):
            return self.take()
        raise self.error("expected a value")

    def phase(self) -> Phase:
        self.take("phase")
        name = self.take(kind="ident")
        self.take(";")
        control = LONGEST_MATCH
        if self.peek("control"):
            self.take("control")
            control = self.take(kind="ident")
            self.take(";")
        rules = []
        while self.peek():
            rules.append(self.rule())
        return Phase(name, tuple(rules), control)

    def rule(self) -> Rule:
        self.take("rule")
        name = self.take(kind="ident")
        priority = 0
        if self.peek("priority"):
            self.take("priority")
            priority = int(self.take(kind="int"))
        self.take(":")
        lhs = self.sequence(stop=("->",))
        self.take("->")
        actions = [self.action()]
        while self.peek(","):
            self.take(",")
            actions.append(self.action())
        self.take(";")
        return Rule(name, priority, lhs, tuple(actions))

    def sequence(self, stop: Sequence[str]) -> Seq:
        items = []
        while self.peek() and not any(self.peek(s) for s in stop):
            items.append(self.element())
        return Seq(tuple(items))

    def element(self) -> object:
        node = self.atom()
        if self.peek("?") or self.peek("*") or self.peek("+"):
            low, high = {"?": (0, 1), "*": (0, None), "+": (1, None)}[self.take()]
            node = Repeat(node, low, high)
        if self.peek("#"):
            self.take("#")
            node = Bind(node, self.take(kind="ident"))
        return node

    def atom(self) -> object:
        if self.peek("("):
            self.take("(")
            options = [self.sequence(stop=("|", ")"))]
            while self.peek("|"):
                self.take("|")
                options.append(self.sequence(stop=("|", ")")))
            self.take(")")
            if any(not opt.items for opt in options):
                raise self.error("empty group alternative")
            return options[0] if len(options) == 1 else Alt(tuple(options))
        if self.peek("{"):
            return self.braces()
        if self.i < len(self.toks) and self.toks[self.i][0] == "string":
            return TokenTest((("surface", "==", self.string()),))
        raise self.error(f"unexpected {self.toks[self.i][1]!r}" if self.peek() else "unexpected end of file")

    def braces(self) -> object:
        self.take("{")
        if self.peek("ann"):
            self.take("ann")
            self.take(":")
            ann_type = self.take(kind="ident")
            constraints = []
            while self.peek(","):
                self.take(",")
                key = self.take(kind="ident")
                op = self.take(kind="op")
                if op not in ("==", "!=", "=~"):
                    raise self.error(f"bad operator {op!r}")
                constraints.append((key, op, self.value()))
            self.take("}")
            return AnnTest(ann_type, tuple(constraints))
        constraints = [*self.constraint()]
        while self.peek(","):
            self.take(",")
            constraints.extend(self.constraint())
        self.take("}")
        return TokenTest(tuple(constraints))

    def constraint(self) -> list[tuple[str, str, str]]:
        key = self.take(kind="ident")
        if key in _TOKEN_KINDS:
            out = [("kind", "==", key)]
            if self.peek("==") or self.peek("!=") or self.peek("=~"):
                op = self.take()
                out.append(("surface", op, self.value()))
            return out
        if key not in ("kind", "orth", "surface"):
            raise self.error(f"unknown token attribute {key!r}")
        op = self.take(kind="op")
        if op not in ("==", "!=", "=~"):
            raise self.error(f"bad operator {op!r}")
        value = self.value()
        if key == "kind" and op != "=~" and value not in _TOKEN_KINDS:
            raise self.error(f"unknown token kind {value!r}")
        if key == "orth" and op != "=~" and value not in _ORTHS:
            raise self.error(f"unknown orth value {value!r}")
        return [(key, op, value)]

    def action(self) -> Action:
        ann_type = self.take(kind="ident")
        over = None
        if self.peek("@"):
            self.take("@")
            over = self.take(kind="ident")
        features = []
        if self.peek("{"):
            self.take("{")
            while not self.peek("}"):
                name = self.take(kind="ident")
                self.take("=")
                if self.peek("$"):
                    self.take("$")
                    features.append((name, self.take(kind="ident"), True))
                else:
                    features.append((name, self.value(), False))
                if not self.peek("}"):
                    self.take(",")
            self.take("}")
        return Action(ann_type, tuple(features), over)


def parse_rules(text: str, where: str = "<rules>") -> Phase:
    parser = _Parser(text, where)
    if not parser.toks:
        raise RuleError(f"{where}: empty rule file")
    return parser.phase()


def load_rules(path: str | Path) -> Phase:
    path = Path(path)
    return parse_rules(path.read_text(encoding="utf-8"), str(path))


# Matcher

_Binds = tuple[tuple[str, int, int], ...]


def _test(op: str, actual: str, expected: str) -> bool:
    if op == "==":
        return actual == expected
    if op == "!=":
        return actual != expected
    return re.search(expected, actual) is not None


def _token_value(tok: Token, key: str) -> str:
    if key == "kind":
        return tok.kind.value
    if key == "orth":
        return tok.orth.value
    return tok.surface


@dataclass
class _Stream:
    toks: list[Token]
    starts: dict[int, list[Annotation]] = field(default_factory=dict)
    end_index: dict[int, int] = field(default_factory=dict)

    @classmethod
    def build(cls, toks: list[Token], existing: AnnotationSet) -> _Stream:
        starts: dict[int, list[Annotation]] = defaultdict(list)
        for ann in existing:
            starts[ann.start].append(ann)
        end_index = {tok.span[1]: i for i, tok in enumerate(toks)}
        return cls(toks, dict(starts), end_index)

    def match(self, node: object, pos: int, binds: _Binds) -> Iterator[tuple[int, _Binds]]:
        if isinstance(node, TokenTest):
            if pos < len(self.toks):
                tok = self.toks[pos]
                if all(_test(op, _token_value(tok, key), value) for key, op, value in node.constraints):
                    yield pos + 1, binds
        elif isinstance(node, Seq):
            yield from self._seq(node.items, 0, pos, binds)
        elif isinstance(node, Alt):
            for option in node.options:
                yield from self.match(option, pos, binds)
        elif isinstance(node, Repeat):
            yield from self._repeat(node, 0, pos, binds)
        elif isinstance(node, Bind):
            for end, inner in self.match(node.node, pos, binds):
                yield end, inner + ((node.name, pos, end),)
        elif isinstance(node, AnnTest):
            if pos < len(self.toks):
                for ann in self.starts.get(self.toks[pos].span[0], ()):
                    if ann.ann_type != node.ann_type or ann.end not in self.end_index:
                        continue
                    if all(_test(op, ann.features.get(key, ""), value) for key, op, value in node.constraints):
                        yield self.end_index[ann.end] + 1, binds
        else:
            raise TypeError(node)

    def _seq(self, items: tuple[object, ...], k: int, pos: int, binds: _Binds) -> Iterator[tuple[int, _Binds]]:
        if k == len(items):
            yield pos, binds
            return
        for end, inner in self.match(items[k], pos, binds):
            yield from self._seq(items, k + 1, end, inner)

    def _repeat(self, node: Repeat, count: int, pos: int, binds: _Binds) -> Iterator[tuple[int, _Binds]]:
        if node.high is None or count < node.high:
            for end, inner in self.match(node.node, pos, binds):
                if end > pos:
                    yield from self._repeat(node, count + 1, end, inner)
        if count >= node.low:
            yield pos, binds

    def longest(self, rule: Rule, pos: int) -> tuple[int, _Binds] | None:
        best = None
        for end, binds in self.match(rule.lhs, pos, ()):
            if end > pos and (best is None or end > best[0]):
                best = (end, binds)
        return best


def run_phase(
    phase: Phase,
    doc: Document,
    existing: AnnotationSet,
    tokens: list[Token] | None = None,
) -> AnnotationSet:
    """Apply ``phase`` left to right with longest-match control.

    At each position the longest match over all rules wins; ties go to the
    higher priority, then to the earlier rule. Scanning resumes after the
    matched tokens. Annotations created here are not visible to this phase.
    """
    toks = content_tokens(tokens if tokens is not None else tokenize(doc.text))
    stream = _Stream.build(toks, existing)
    new: list[Annotation] = []
    next_id = existing.next_id
    pos = 0
    while pos < len(toks):
        best = None
        for order, rule in enumerate(phase.rules):
            found = stream.longest(rule, pos)
            if found is None:
                continue
            key = (found[0], rule.priority, -order)
            if best is None or key > best[0]:
                best = (key, rule, found)
        if best is None:
            pos += 1
            continue
        _, rule, (end, binds) = best
        spans = {}
        for name, lo, hi in binds:
            if hi > lo:
                spans[name] = (toks[lo].span[0], toks[hi - 1].span[1])
        whole = (toks[pos].span[0], toks[end - 1].span[1])
        for action in rule.rhs:
            if action.over is not None and action.over not in spans:
                continue
            span = spans[action.over] if action.over is not None else whole
            features = {}
            for name, value, is_ref in action.features:
                features[name] = doc.slice(spans[value]) if is_ref and value in spans else ("" if is_ref else value)
            new.append(Annotation(next_id, span, action.ann_type, features, rule_source(rule.name)))
            next_id += 1
        pos = end
    return existing.extended(new)
