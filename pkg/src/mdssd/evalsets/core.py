from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class ParameterError(ValueError):
    """Construction parameters outside a theorem's hypotheses."""


@dataclass(frozen=True)
class Block:
    """One disjoint piece of an evaluation set with a closed-form vanishing polynomial.

    kind:
      ``"trace"``           fiber {x : Tr(x) = level}; pi(x) = Tr(x) - level
      ``"multiplicative"``  coset g<alpha> of size ``order``; pi(x) = x^order - shift
      ``"additive"``        coset b + H inside GF(r); pi evaluated directly
      ``"point"``           a single element
    """

    kind: str
    elements: tuple[int, ...]
    level: int | None = None
    order: int | None = None
    shift: int | None = None

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class EvalSet:
    """Ordered evaluation points plus the block structure they came from.

    ``combine == "union"``: the set is the disjoint union of ``blocks_a``.
    ``combine == "symdiff"``: the set is (union of ``blocks_a``) symmetric-difference
    (union of ``blocks_b``), listed as A minus B then B minus A.
    """

    elements: tuple[int, ...]
    provenance: str
    expected_character: int | None = None
    blocks_a: tuple[Block, ...] = ()
    blocks_b: tuple[Block, ...] = ()
    combine: str = "union"
    params: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ParameterError(f"{self.provenance}: evaluation points are not distinct")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._members

    @property
    def _members(self) -> frozenset[int]:
        cached = self.__dict__.get("_members_cache")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_members_cache", cached)
        return cached

    @property
    def set_a(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks_a for x in b.elements)

    @property
    def set_b(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks_b for x in b.elements)


def union_set(blocks, provenance: str, expected_character=None, **params) -> EvalSet:
    elements = tuple(x for b in blocks for x in b.elements)
    return EvalSet(elements, provenance, expected_character, tuple(blocks), (), "union", params)


def symdiff_set(blocks_a, blocks_b, provenance: str, expected_character=None, **params) -> EvalSet:
    a = [x for b in blocks_a for x in b.elements]
    bb = [x for b in blocks_b for x in b.elements]
    sa, sb = set(a), set(bb)
    if len(sa) != len(a) or len(sb) != len(bb):
        raise ParameterError(f"{provenance}: blocks overlap within one side")
    elements = tuple(x for x in a if x not in sb) + tuple(x for x in bb if x not in sa)
    return EvalSet(elements, provenance, expected_character, tuple(blocks_a), tuple(blocks_b),
                   "symdiff", params)
