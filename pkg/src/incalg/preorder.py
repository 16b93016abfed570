"""Finite pre-ordered sets: closure, intervals, strict down/up sets, enumeration."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InputError


@dataclass(frozen=True)
class Preorder:
    """A finite reflexive and transitive relation on labelled elements.

    ``elements`` fixes an enumeration order used for deterministic output
    only; the mathematical order is ``leq``.  Use :func:`closure` to build
    one from arbitrary generating pairs.
    """

    elements: tuple[str, ...]
    leq: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "leq", frozenset(self.leq))
        if len(set(self.elements)) != len(self.elements):
            raise InputError(f"duplicate element labels in {self.elements}")
        known = set(self.elements)
        for x, y in self.leq:
            for label in (x, y):
                if label not in known:
                    raise InputError(f"unknown label {label!r} in relation ({x!r}, {y!r})")
        for x in self.elements:
            if (x, x) not in self.leq:
                raise InputError(f"relation is not reflexive at {x!r}")
        for x, y in self.leq:
            for z in self.up[y]:
                if (x, z) not in self.leq:
                    raise InputError(f"relation is not transitive: {x!r} <= {y!r} <= {z!r}")

    @cached_property
    def position(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def up(self) -> dict[str, tuple[str, ...]]:
        """``up[x]``: every ``y`` with ``x <= y``, in element order."""
        return {x: tuple(y for y in self.elements if (x, y) in self.leq) for x in self.elements}

    @cached_property
    def down(self) -> dict[str, tuple[str, ...]]:
        return {y: tuple(x for x in self.elements if (x, y) in self.leq) for y in self.elements}

    @cached_property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        """Comparable pairs ordered by the element enumeration."""
        return tuple((x, y) for x in self.elements for y in self.up[x])

    def __len__(self) -> int:
        return len(self.elements)

    def _check(self, *labels: str) -> None:
        for label in labels:
            if label not in self.position:
                raise InputError(f"unknown label {label!r}")

    def le(self, x: str, y: str) -> bool:
        self._check(x, y)
        return (x, y) in self.leq

    def equivalent(self, x: str, y: str) -> bool:
        return self.le(x, y) and self.le(y, x)

    def interval(self, x: str, y: str) -> list[str]:
        """All ``z`` with ``x <= z <= y``; empty when ``x`` is not below ``y``."""
        self._check(x, y)
        return [z for z in self.up[x] if (z, y) in self.leq]

    def strict_down_set(self, i: str) -> list[str]:
        """Elements strictly below ``i``; elements equivalent to ``i`` are excluded."""
        self._check(i)
        return [x for x in self.down[i] if (i, x) not in self.leq]

    def strict_up_set(self, j: str) -> list[str]:
        self._check(j)
        return [y for y in self.up[j] if (y, j) not in self.leq]

    def is_partial_order(self) -> bool:
        return all(x == y or (y, x) not in self.leq for x, y in self.leq)

    def relabel(self, mapping: dict[str, str]) -> Preorder:
        return Preorder(
            tuple(mapping[x] for x in self.elements),
            frozenset((mapping[x], mapping[y]) for x, y in self.leq),
        )

    def canonical_form(self) -> tuple:
        """Isomorphism invariant: lexicographically least relation matrix."""
        n = len(self.elements)
        best = None
        for perm in itertools.permutations(range(n)):
            at = {self.elements[p]: k for k, p in enumerate(perm)}
            key = tuple(sorted((at[x], at[y]) for x, y in self.leq))
            if best is None or key < best:
                best = key
        return (n, best)

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "relations": [[x, y] for x, y in self.pairs],
        }


def closure(elements: Iterable, generating_pairs: Iterable = ()) -> Preorder:
    """Smallest reflexive-transitive relation containing ``generating_pairs``."""
    elements = tuple(str(x) for x in elements)
    known = set(elements)
    succ: dict[str, set[str]] = {x: {x} for x in elements}
    for pair in generating_pairs:
        try:
            x, y = pair
        except (TypeError, ValueError):
            raise InputError(f"relation {pair!r} is not a pair") from None
        x, y = str(x), str(y)
        for label in (x, y):
            if label not in known:
                raise InputError(f"unknown label {label!r} in relation ({x!r}, {y!r})")
        succ[x].add(y)
    # Warshall-style fixpoint over intermediate elements.
    for z in elements:
        for x in elements:
            if z in succ[x]:
                succ[x] |= succ[z]
    leq = frozenset((x, y) for x in elements for y in succ[x])
    return Preorder(elements, leq)


def chain(n: int) -> Preorder:
    labels = [str(k) for k in range(1, n + 1)]
    return closure(labels, zip(labels, labels[1:]))


def antichain(n: int) -> Preorder:
    return closure([str(k) for k in range(1, n + 1)])


def enumerate_preorders(n: int) -> Iterator[Preorder]:
    """All preorders on ``n`` labelled points ``1..n``, one per isomorphism class.

    Brute force closure over every subset of off-diagonal pairs; each class
    is represented by its first closure in subset order.
    """
    labels = [str(k) for k in range(1, n + 1)]
    off = [(x, y) for x in labels for y in labels if x != y]
    seen = set()
    for mask in range(1 << len(off)):
        gens = [off[b] for b in range(len(off)) if mask >> b & 1]
        p = closure(labels, gens)
        key = p.canonical_form()
        if key in seen:
            continue
        seen.add(key)
        yield p


def curated_four() -> dict[str, Preorder]:
    """Named four-element cases used alongside the exhaustive small sweep."""
    e = ["1", "2", "3", "4"]
    return {
        "chain4": chain(4),
        "diamond4": closure(e, [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")]),
        "antichain4+edge": closure(e, [("1", "2")]),
        "cycle4": closure(e, [("1", "2"), ("2", "1"), ("2", "3"), ("3", "4")]),
    }


def sweep_posets(max_exhaustive: int = 3, curated: bool = True) -> list[tuple[str, Preorder]]:
    """The standard sweep: every preorder up to ``max_exhaustive`` points plus curated cases."""
    cases = []
    for n in range(1, max_exhaustive + 1):
        for k, p in enumerate(enumerate_preorders(n)):
            cases.append((f"n{n}-{k}", p))
    if curated:
        cases.extend(curated_four().items())
    return cases


def load_preorder(data: dict) -> Preorder:
    """Build a preorder from the JSON poset document; closure is always applied."""
    if not isinstance(data, dict) or "elements" not in data:
        raise InputError("poset document needs an 'elements' list")
    elements = data["elements"]
    if not isinstance(elements, list):
        raise InputError("'elements' must be a list")
    return closure(elements, data.get("relations", []))
