"""Formulas of the object language: AST, parser, printer, enumeration.

Grammar (ASCII)::

    formula := or ( ("->" | "~>") formula )?
    or      := and ( "|" and )*
    and     := unary ( "&" unary )*
    unary   := ("!" | "~" | "delta" | "nabla" | "box" | "dia" | "heart")* primary
    primary := ident | "bot" | "top" | "(" formula ")"

``!x`` is sugar for ``x -> bot``, ``~x`` for ``x ~> bot`` and ``top`` for
``bot -> bot``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


KEYWORDS = frozenset({"bot", "top", "delta", "nabla", "box", "dia", "heart"})


class Formula:
    """Base class of all formula nodes. Nodes are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return pretty(self)


_IDENT = re.compile(r"[a-z][a-z0-9_]*")


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not _IDENT.fullmatch(self.name) or self.name in KEYWORDS:
            raise ValueError(f"bad atom name {self.name!r}")
        object.__setattr__(self, "_hash", hash(("Atom", self.name)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"


@dataclass(frozen=True, repr=False)
class Bot(Formula):
    def __hash__(self) -> int:
        return 0x0B07

    def __repr__(self) -> str:
        return "Bot()"


@dataclass(frozen=True)
class Unary(Formula):
    body: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.body)))

    def __hash__(self) -> int:
        return self._hash


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash


class Delta(Unary):
    """Truth throughout the maximal neighborhood."""


class Nabla(Unary):
    """Truth somewhere in the maximal neighborhood."""


class Box(Unary):
    """Truth throughout the minimal neighborhood (classical systems only)."""


class Dia(Unary):
    """Every minimal-neighborhood world sees a witness in its maximal neighborhood."""


class Heart(Unary):
    """Some world whose minimal neighborhood contains this one sees a witness."""


class And(Binary):
    pass


class Or(Binary):
    pass


class Imp(Binary):
    """Implication over the minimal neighborhood (material in classical mode)."""


class MaxImp(Binary):
    """Implication over the maximal neighborhood."""


BOT = Bot()
TOP = Imp(BOT, BOT)


def neg(f: Formula) -> Formula:
    return Imp(f, BOT)


def max_neg(f: Formula) -> Formula:
    return MaxImp(f, BOT)


UNARY_KINDS: tuple[type[Unary], ...] = (Delta, Nabla, Box, Dia, Heart)
BINARY_KINDS: tuple[type[Binary], ...] = (And, Or, Imp, MaxImp)
ALL_KINDS: tuple[type[Formula], ...] = (Atom, Bot, *UNARY_KINDS, *BINARY_KINDS)

_KEYWORD = {Delta: "delta", Nabla: "nabla", Box: "box", Dia: "dia", Heart: "heart"}
_SYMBOL = {And: "&", Or: "|", Imp: "->", MaxImp: "~>"}


# -- fragments ---------------------------------------------------------------

@dataclass(frozen=True)
class Fragment:
    """A set of allowed node kinds."""

    kinds: frozenset

    def __init__(self, kinds: Iterable[type[Formula]]):
        kinds = frozenset(kinds)
        unknown = kinds - set(ALL_KINDS)
        if unknown:
            raise ValueError(f"not formula kinds: {sorted(k.__name__ for k in unknown)}")
        object.__setattr__(self, "kinds", kinds)

    def __contains__(self, kind: type[Formula]) -> bool:
        return kind in self.kinds

    def allows(self, f: Formula) -> bool:
        return all(type(g) in self.kinds for g in nodes(f))

    def first_violation(self, f: Formula) -> Formula | None:
        for g in nodes(f):
            if type(g) not in self.kinds:
                return g
        return None

    def __repr__(self) -> str:
        names = [k.__name__ for k in ALL_KINDS if k in self.kinds]
        return f"Fragment({', '.join(names)})"


#: propositional base plus the single modality of the mono-modal system
IML1_FRAGMENT = Fragment([Atom, Bot, And, Or, Imp, Delta])
#: the fragment over which degree-bounded agreement characterises n-bisimilarity
DEGREE_FRAGMENT = Fragment([Atom, Bot, And, Or, Imp, MaxImp, Delta])
INTUITIONISTIC_FRAGMENT = Fragment([Atom, Bot, And, Or, Imp, MaxImp, Delta, Nabla, Dia, Heart])
CLASSICAL_FRAGMENT = Fragment([Atom, Bot, And, Or, Imp, Box, Delta])
#: connectives whose truth persists along minimal neighborhoods on any IML1 frame
PERSISTENT_FRAGMENT = Fragment([Atom, Bot, And, Or, Imp, MaxImp, Delta, Dia, Heart])


# -- traversal ---------------------------------------------------------------

def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, Unary):
        return (f.body,)
    if isinstance(f, Binary):
        return (f.left, f.right)
    return ()


def nodes(f: Formula) -> Iterator[Formula]:
    """Pre-order walk over every node occurrence."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        stack.extend(reversed(children(g)))


def size(f: Formula) -> int:
    return sum(1 for _ in nodes(f))


def atoms(f: Formula) -> list[str]:
    """Atom names in order of first occurrence."""
    seen: dict[str, None] = {}
    for g in nodes(f):
        if isinstance(g, Atom):
            seen.setdefault(g.name)
    return list(seen)


def subformulas(f: Formula) -> list[Formula]:
    """Sub(f) in post-order, structurally deduplicated; ``f`` comes last."""
    out: dict[Formula, None] = {}

    def visit(g: Formula) -> None:
        if g in out:
            return
        for c in children(g):
            visit(c)
        out[g] = None

    visit(f)
    return list(out)


def degree(f: Formula) -> int:
    """Nesting depth of implications and modalities.

    Atoms and bot have degree 0, conjunction and disjunction take the max of
    their parts, both implications add one to the max, and every modality
    adds one to its argument.
    """
    match f:
        case Atom() | Bot():
            return 0
        case And(l, r) | Or(l, r):
            return max(degree(l), degree(r))
        case Imp(l, r) | MaxImp(l, r):
            return 1 + max(degree(l), degree(r))
        case Unary(body=b):
            return 1 + degree(b)
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, subst: Mapping[str, Formula]) -> Formula:
    match f:
        case Atom(name):
            return subst.get(name, f)
        case Bot():
            return f
        case Unary(body=b):
            return type(f)(substitute(b, subst))
        case Binary(left=l, right=r):
            return type(f)(substitute(l, subst), substitute(r, subst))
    raise TypeError(f"not a formula: {f!r}")


def instantiate_schema(schema: Formula | str, subst: Mapping[str, Formula | str]) -> Formula:
    """Replace every metavariable of ``schema`` (its atoms) by a formula.

    Raises ``KeyError`` if some metavariable has no binding.
    """
    if isinstance(schema, str):
        schema = parse(schema)
    bound = {k: parse(v) if isinstance(v, str) else v for k, v in subst.items()}
    missing = [a for a in atoms(schema) if a not in bound]
    if missing:
        raise KeyError(f"no binding for metavariable(s): {', '.join(missing)}")
    return substitute(schema, bound)


# -- parsing -----------------------------------------------------------------

_PREFIX = {"!", "~", "delta", "nabla", "box", "dia", "heart"}
_TOKEN = re.compile(r"\s*(?:(->|~>|[!~&|()])|([a-z][a-z0-9_]*))")


class FormulaSyntaxError(ValueError):
    """Raised on malformed input; carries the byte offset and what was expected."""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


def _tokenize(text: str) -> list[tuple[str, int]]:
    raw = text.encode()
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            start = len(text) - len(rest)
            offset = len(text[:start].encode())
            bad = re.match(r"[^\sa-z()]+|\S", rest).group(0)
            raise FormulaSyntaxError(f"unknown operator or character {bad!r}", offset)
        tok = m.group(1) or m.group(2)
        start = m.start(1) if m.group(1) else m.start(2)
        tokens.append((tok, len(text[:start].encode())))
        pos = m.end()
    tokens.append(("<end>", len(raw)))
    return tokens


_PRIMARY_START = {"<ident>", "bot", "top", "("}
_UNARY_START = _PRIMARY_START | _PREFIX


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def fail(self, expected: Iterable[str]) -> FormulaSyntaxError:
        tok, offset = self.tokens[self.i]
        what = "end of input" if tok == "<end>" else f"token {tok!r}"
        return FormulaSyntaxError(f"unexpected {what}", offset, expected)

    def formula(self) -> Formula:
        left = self.disjunction()
        tok = self.peek()
        if tok == "->":
            self.i += 1
            return Imp(left, self.formula())
        if tok == "~>":
            self.i += 1
            return MaxImp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.i += 1
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok in _PREFIX:
            self.i += 1
            body = self.unary()
            if tok == "!":
                return Imp(body, BOT)
            if tok == "~":
                return MaxImp(body, BOT)
            return _PREFIX_KIND[tok](body)
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok == "(":
            self.i += 1
            f = self.formula()
            if self.peek() != ")":
                raise self.fail({")", "->", "~>", "|", "&"})
            self.i += 1
            return f
        if tok == "bot":
            self.i += 1
            return BOT
        if tok == "top":
            self.i += 1
            return TOP
        if tok[:1].isalpha() and tok not in KEYWORDS:
            self.i += 1
            return Atom(tok)
        raise self.fail(_UNARY_START)


_PREFIX_KIND = {v: k for k, v in _KEYWORD.items()}


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek() != "<end>":
        raise p.fail({"<end>", "->", "~>", "|", "&"})
    return f


# -- printing ----------------------------------------------------------------

# binding strength: implications 0, or 1, and 2, prefix operators 3
def _prec(f: Formula) -> int:
    if isinstance(f, (Imp, MaxImp)) and not _is_prefix_sugar(f):
        return 0
    if isinstance(f, Or):
        return 1
    if isinstance(f, And):
        return 2
    return 3


def _is_prefix_sugar(f: Formula) -> bool:
    return isinstance(f, (Imp, MaxImp)) and isinstance(f.right, Bot)


def pretty(f: Formula) -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""

    def wrap(g: Formula, min_prec: int) -> str:
        s = pretty(g)
        return f"({s})" if _prec(g) < min_prec else s

    match f:
        case Atom(name):
            return name
        case Bot():
            return "bot"
        case Imp(Bot(), Bot()):
            return "top"
        case Imp(body, Bot()):
            return "!" + wrap(body, 3)
        case MaxImp(body, Bot()):
            return "~" + wrap(body, 3)
        case Imp(l, r) | MaxImp(l, r):
            return f"{wrap(l, 1)} {_SYMBOL[type(f)]} {wrap(r, 0)}"
        case Or(l, r):
            return f"{wrap(l, 1)} | {wrap(r, 2)}"
        case And(l, r):
            return f"{wrap(l, 2)} & {wrap(r, 3)}"
        case Unary(body=b):
            return f"{_KEYWORD[type(f)]} {wrap(b, 3)}"
    raise TypeError(f"not a formula: {f!r}")


# -- enumeration -------------------------------------------------------------

def enumerate_formulas(
    vars: Iterable[str],
    fragment: Fragment,
    max_degree: int,
    max_size: int,
) -> Iterator[Formula]:
    """Every formula over ``vars`` in ``fragment`` within both bounds, once each.

    Order is size-major. Within one size, formulas are ordered by node kind
    (atoms in the given order, bot, then delta, nabla, box, dia, heart, and,
    or, ->, ~>) and then by the enumeration positions of their children.
    """
    vars = list(dict.fromkeys(vars))
    if not vars:
        raise ValueError("need at least one variable")
    # by_size[s] holds (formula, degree) pairs of node count s
    by_size: list[list[tuple[Formula, int]]] = [[]]
    unary = [k for k in UNARY_KINDS if k in fragment]
    binary = [k for k in BINARY_KINDS if k in fragment]
    for s in range(1, max_size + 1):
        layer: list[tuple[Formula, int]] = []
        if s == 1:
            if Atom in fragment:
                layer += [(Atom(v), 0) for v in vars]
            if Bot in fragment:
                layer.append((BOT, 0))
        else:
            for kind in unary:
                for g, d in by_size[s - 1]:
                    if d + 1 <= max_degree:
                        layer.append((kind(g), d + 1))
            for kind in binary:
                bump = 1 if kind in (Imp, MaxImp) else 0
                for ls in range(1, s - 1):
                    rs = s - 1 - ls
                    for lf, ld in by_size[ls]:
                        for rf, rd in by_size[rs]:
                            d = max(ld, rd) + bump
                            if d <= max_degree:
                                layer.append((kind(lf, rf), d))
        by_size.append(layer)
        for f, _ in layer:
            yield f


def random_formula(
    rng: random.Random,
    vars: list[str],
    fragment: Fragment,
    max_size: int,
) -> Formula:
    """A seeded random formula with at most ``max_size`` nodes."""
    leaves = [Atom(v) for v in vars] if Atom in fragment else []
    if Bot in fragment:
        leaves.append(BOT)
    if not leaves:
        raise ValueError("fragment has no leaves")
    unary = [k for k in UNARY_KINDS if k in fragment]
    binary = [k for k in BINARY_KINDS if k in fragment]

    def build(budget: int) -> Formula:
        options = []
        if budget >= 2 and unary:
            options.append("u")
        if budget >= 3 and binary:
            options.append("b")
        if not options or rng.random() < 0.25:
            return rng.choice(leaves)
        if rng.choice(options) == "u":
            return rng.choice(unary)(build(budget - 1))
        left_budget = rng.randint(1, budget - 2)
        left = build(left_budget)
        return rng.choice(binary)(left, build(budget - 1 - size(left)))

    return build(max_size)
