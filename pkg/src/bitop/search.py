"""Exhaustive search over all bitopological spaces on a few points."""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .bsets import Carrier
from .catalog import CATALOG
from .separation import AXIOMS, audit_report, check, classify
from .sobriety import componentwise_criterion, is_b_sober, is_d_sober, is_join_sober
from .spaces import BSpace, canonical_form, is_homeomorphic
from .topology import FinTopology, enumerate_preorders

MAX_POINTS = 4
POINT_NAMES = "abcd"


def carrier_for(n: int) -> Carrier:
    if not 0 < n <= MAX_POINTS:
        raise ValueError(f"search supports 1 to {MAX_POINTS} points, got {n}")
    return Carrier(tuple(POINT_NAMES[:n]))


def topologies(n: int) -> list[FinTopology]:
    c = carrier_for(n)
    return [FinTopology.from_preorder(c, up) for up in enumerate_preorders(n)]


def all_spaces(n: int, first: int | None = None) -> Iterator[BSpace]:
    """Every pair of topologies on n points, optionally with a fixed first index."""
    tops = topologies(n)
    c = tops[0].carrier
    firsts = range(len(tops)) if first is None else (first,)
    for i in firsts:
        for j, b in enumerate(tops):
            yield BSpace(c, tops[i], b, f"S{n}_{i}_{j}")


# predicates ------------------------------------------------------------------


def _discrepancy(space: BSpace) -> bool:
    return componentwise_criterion(space)["criterion"] != is_b_sober(space)


EXTRA: dict[str, Callable[[BSpace], bool]] = {
    "b_sober": is_b_sober,
    "d_sober": is_d_sober,
    "join_sober": is_join_sober,
    "b_sober-discrepancy": _discrepancy,
}

PREDICATES: dict[str, Callable[[BSpace], bool]] = {**AXIOMS, **EXTRA}


class Facts:
    """Predicate values of one space, computed on first use."""

    def __init__(self, space: BSpace):
        self.space = space
        self._cache: dict[str, bool] = {}

    def __getitem__(self, name: str) -> bool:
        if name not in self._cache:
            self._cache[name] = PREDICATES[name](self.space)
        return self._cache[name]


class ExprError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_-]*)|(.))")


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        name, sym = m.groups()
        if sym is not None and sym not in "&|!()":
            raise ExprError(f"unexpected character {sym!r} at column {m.start(2) + 1}")
        out.append(name or sym)
        pos = m.end()
    return out


def parse_expr(text: str) -> Callable[[Facts], bool]:
    """Boolean formula over predicate names with &, |, ! and parentheses."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ExprError(f"expected {expected or 'a term'} in {text!r}")
        pos += 1
        return tok

    def disj():
        terms = [conj()]
        while peek() == "|":
            take()
            terms.append(conj())
        return terms[0] if len(terms) == 1 else (lambda f: any(t(f) for t in terms))

    def conj():
        terms = [unary()]
        while peek() == "&":
            take()
            terms.append(unary())
        return terms[0] if len(terms) == 1 else (lambda f: all(t(f) for t in terms))

    def unary():
        if peek() == "!":
            take()
            inner = unary()
            return lambda f: not inner(f)
        if peek() == "(":
            take()
            inner = disj()
            take(")")
            return inner
        name = take()
        if name not in PREDICATES:
            raise ExprError(f"unknown predicate {name!r}; known: {', '.join(PREDICATES)}")
        return lambda f: f[name]

    if not toks:
        raise ExprError("empty expression")
    expr = disj()
    if peek() is not None:
        raise ExprError(f"unexpected {peek()!r} in {text!r}")
    return expr


# implication audit -----------------------------------------------------------


@dataclass
class AuditResult:
    points: int
    spaces: int = 0
    violations: list[str] = field(default_factory=list)


def _audit_partition(args: tuple[int, int]) -> tuple[int, list[str]]:
    n, first = args
    count = 0
    found = []
    for s in all_spaces(n, first):
        count += 1
        found.extend(audit_report(classify(s)))
    return count, found


def audit_all(n: int, jobs: int = 1) -> AuditResult:
    """Classify every space on n points and collect implication failures."""
    parts = [(n, i) for i in range(len(topologies(n)))]
    result = AuditResult(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            outputs = list(ex.map(_audit_partition, parts))
    else:
        outputs = [_audit_partition(p) for p in parts]
    for count, found in outputs:
        result.spaces += count
        result.violations.extend(found)
    result.violations.sort()
    return result


# witness search ----------------------------------------------------------------


@dataclass
class Witnesses:
    expr: str
    points: int
    matches: int = 0
    classes: list[BSpace] = field(default_factory=list)

    def catalog_matches(self, space: BSpace) -> list[str]:
        return [
            name
            for name, e in CATALOG.items()
            if len(e.space) == len(space) and is_homeomorphic(e.space, space)
        ]


def _find_partition(args: tuple[int, int, str]) -> list[tuple[tuple, BSpace]]:
    n, first, text = args
    expr = parse_expr(text)
    return [(canonical_form(s), s) for s in all_spaces(n, first) if expr(Facts(s))]


def find(text: str, n: int, jobs: int = 1) -> Witnesses:
    """Spaces on exactly n points satisfying the formula, one per homeomorphism class."""
    parse_expr(text)
    parts = [(n, i, text) for i in range(len(topologies(n)))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            outputs = list(ex.map(_find_partition, parts))
    else:
        outputs = [_find_partition(p) for p in parts]
    w = Witnesses(text, n)
    seen: dict[tuple, BSpace] = {}
    for out in outputs:
        for key, s in out:
            w.matches += 1
            seen.setdefault(key, s)
    w.classes = [seen[k] for k in sorted(seen)]
    return w


def find_minimal(text: str, max_points: int, jobs: int = 1) -> list[Witnesses]:
    """Witness classes for 1, 2, ... points, stopping at the first size with any."""
    found = []
    for n in range(1, max_points + 1):
        w = find(text, n, jobs)
        found.append(w)
        if w.classes:
            break
    return found


def hausdorff_refinement_witness(n: int = 2) -> tuple[BSpace, BSpace] | None:
    """A Hausdorff space and a finer space (both components refined) that is not Hausdorff."""
    tops = topologies(n)
    c = tops[0].carrier
    for a in tops:
        for b in tops:
            s = BSpace(c, a, b)
            if not check(s, "Hausdorff"):
                continue
            for a2 in tops:
                if not a.opens <= a2.opens:
                    continue
                for b2 in tops:
                    if b.opens <= b2.opens and not check(BSpace(c, a2, b2), "Hausdorff"):
                        return s, BSpace(c, a2, b2)
    return None
