"""
Tables of injective right-ideal morphisms and the group structure of G_{k,1}

A table is a finite bijection from a maximal prefix code domC onto a maximal
prefix code imC; it determines the morphism f(p·w) = f(p)·w. Group elements
are tables in canonical form: maximally extended, pairs in dictionary order
of the domain word. Multiplication is composition followed by maximum
extension.
"""

import random
from collections import defaultdict
from collections.abc import Iterable, Mapping

from pydantic import BaseModel, ConfigDict, model_validator

from .exceptions import AlphabetMismatch, InvalidTable, NotInDomainCode
from .logger import get_logger
from .words import (
    EPSILON,
    Alphabet,
    Word,
    format_word,
    is_prefix_code,
    kraft_sum,
    random_maximal_code,
)

logger = get_logger(__name__)


class Table(BaseModel):
    """Finite bijection between two finite maximal prefix codes over A_k"""

    model_config = ConfigDict(frozen=True)

    k: Alphabet
    pairs: tuple[tuple[Word, Word], ...]

    @model_validator(mode="after")
    def _check_letters(self) -> "Table":
        for p, q in self.pairs:
            for letter in p + q:
                if not 0 <= letter < self.k:
                    raise ValueError(
                        f"pair {format_word(p)} -> {format_word(q)} leaves the alphabet"
                    )
        return self

    @classmethod
    def from_pairs(
        cls, k: int, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]
    ) -> "Table":
        return cls(k=k, pairs=tuple((tuple(p), tuple(q)) for p, q in pairs))

    @classmethod
    def from_mapping(cls, k: int, mapping: Mapping[Word, Word]) -> "Table":
        """Table with pairs sorted by dictionary order of the domain word"""
        return cls(k=k, pairs=tuple(sorted(mapping.items())))

    def domain_code(self) -> list[Word]:
        return [p for p, _ in self.pairs]

    def image_code(self) -> list[Word]:
        return [q for _, q in self.pairs]

    def as_mapping(self) -> dict[Word, Word]:
        return dict(self.pairs)

    def max_length(self) -> int:
        return max((max(len(p), len(q)) for p, q in self.pairs), default=0)


class GroupElement(BaseModel):
    """An element of G_{k,1}: a maximally extended, dictionary-sorted table"""

    model_config = ConfigDict(frozen=True)

    table: Table

    @model_validator(mode="after")
    def _check_canonical(self) -> "GroupElement":
        domain = self.table.domain_code()
        if domain != sorted(domain):
            raise ValueError("pairs are not sorted by domain word")
        if _extension_candidates(self.table.as_mapping(), self.table.k):
            raise ValueError("table is not maximally extended")
        return self

    @property
    def k(self) -> int:
        return self.table.k

    @property
    def pairs(self) -> tuple[tuple[Word, Word], ...]:
        return self.table.pairs

    def __len__(self) -> int:
        return len(self.table.pairs)


def _table(obj: Table | GroupElement) -> Table:
    return obj.table if isinstance(obj, GroupElement) else obj


def diagnose(obj: Table | GroupElement) -> list[str]:
    """List every table invariant that fails (empty list for a valid table)"""
    table = _table(obj)
    domain = table.domain_code()
    image = table.image_code()
    problems: list[str] = []
    if not table.pairs:
        return ["table is empty"]
    if len(set(domain)) != len(domain) or not is_prefix_code(domain):
        problems.append("domC not a prefix code")
    elif kraft_sum(domain, table.k) != 1:
        problems.append("domC not maximal")
    if len(set(image)) != len(image):
        problems.append("not injective")
    elif not is_prefix_code(image):
        problems.append("imC not a prefix code")
    elif kraft_sum(image, table.k) != 1:
        problems.append("imC not maximal")
    return problems


def validate(obj: Table | GroupElement) -> bool:
    return not diagnose(obj)


def require_valid(table: Table) -> Table:
    problems = diagnose(table)
    if problems:
        raise InvalidTable(problems)
    return table


def apply_mapping(mapping: Mapping[Word, Word], x: Word) -> Word | None:
    """Right-ideal application of a table given as a dict"""
    for i in range(len(x) + 1):
        image = mapping.get(x[:i])
        if image is not None:
            return image + x[i:]
    return None


def apply(obj: Table | GroupElement, x: Word) -> Word | None:
    """f(x), or None when x lies outside Dom(f)"""
    return apply_mapping(_table(obj).as_mapping(), tuple(x))


def _extension_candidates(mapping: Mapping[Word, Word], k: int) -> list[Word]:
    children: dict[Word, int] = defaultdict(int)
    for p in mapping:
        if p:
            children[p[:-1]] += 1
    found = []
    for parent, count in children.items():
        if count != k:
            continue
        images = [mapping[parent + (a,)] for a in range(k)]
        if any(not q or q[-1] != a for a, q in enumerate(images)):
            continue
        if len({q[:-1] for q in images}) == 1:
            found.append(parent)
    return sorted(found)


def _merge(mapping: dict[Word, Word], k: int, parent: Word) -> None:
    image = mapping[parent + (0,)][:-1]
    for a in range(k):
        del mapping[parent + (a,)]
    mapping[parent] = image


def extension_candidates(obj: Table | GroupElement) -> list[Word]:
    """Words p at which an extension step applies, in dictionary order"""
    table = _table(obj)
    return _extension_candidates(table.as_mapping(), table.k)


def extend_at(table: Table, p: Word) -> Table:
    """Replace the k pairs (p·α, q·α) by (p, q)"""
    mapping = table.as_mapping()
    if p not in _extension_candidates(mapping, table.k):
        raise NotInDomainCode(f"no extension step applies at {format_word(p)}")
    _merge(mapping, table.k, p)
    return Table.from_mapping(table.k, mapping)


def extension_step(table: Table) -> Table | None:
    """One extension step at the dictionary-least candidate, or None"""
    candidates = extension_candidates(table)
    if not candidates:
        return None
    return extend_at(table, candidates[0])


def maximum_extension(
    obj: Table | GroupElement, rng: random.Random | None = None
) -> GroupElement:
    """Apply extension steps until none applies.

    With `rng` the step is drawn at random among the applicable ones; the
    result does not depend on the order.
    """
    table = require_valid(_table(obj))
    mapping = table.as_mapping()
    steps = 0
    while candidates := _extension_candidates(mapping, table.k):
        parent = rng.choice(candidates) if rng is not None else candidates[0]
        _merge(mapping, table.k, parent)
        steps += 1
    logger.debug("maximum_extension", k=table.k, steps=steps, pairs=len(mapping))
    return GroupElement(table=Table.from_mapping(table.k, mapping))


def restriction_step(obj: Table | GroupElement, p: Word) -> Table:
    """Replace (p, q) by the k pairs (p·α, q·α)"""
    table = _table(obj)
    mapping = table.as_mapping()
    if p not in mapping:
        raise NotInDomainCode(f"{format_word(p)} is not in the domain code")
    q = mapping.pop(p)
    mapping.update((p + (a,), q + (a,)) for a in range(table.k))
    return Table.from_mapping(table.k, mapping)


def refine_toward(obj: Table | GroupElement, code: Iterable[Word]) -> Table:
    """Restrict until every image word has a prefix in the maximal code"""
    table = _table(obj)
    targets = {tuple(w): tuple(w) for w in code}
    work = list(table.pairs)
    refined: dict[Word, Word] = {}
    while work:
        p, q = work.pop()
        if apply_mapping(targets, q) is not None:
            refined[p] = q
        else:
            work.extend((p + (a,), q + (a,)) for a in range(table.k))
    return Table.from_mapping(table.k, refined)


def compose(h: GroupElement, g: GroupElement) -> GroupElement:
    """h∘g (g applied first), maximally extended"""
    if h.k != g.k:
        raise AlphabetMismatch(f"cannot compose over {h.k} and {g.k} letters")
    h_map = h.table.as_mapping()
    refined = refine_toward(g, h_map)
    logger.debug("compose", k=g.k, refined_pairs=len(refined.pairs))
    composed: dict[Word, Word] = {}
    for p, q in refined.pairs:
        image = apply_mapping(h_map, q)
        assert image is not None
        composed[p] = image
    return maximum_extension(Table.from_mapping(g.k, composed))


def invert(g: GroupElement) -> GroupElement:
    return maximum_extension(Table.from_mapping(g.k, {q: p for p, q in g.pairs}))


def equals(f: GroupElement, g: GroupElement) -> bool:
    """Canonical-form equality"""
    return f.k == g.k and f.pairs == g.pairs


def identity(k: int) -> GroupElement:
    return GroupElement(table=Table(k=k, pairs=((EPSILON, EPSILON),)))


def random_table(k: int, leaves: int, rng: random.Random) -> Table:
    """Random bijection between two randomly grown maximal codes"""
    domain = random_maximal_code(k, leaves, rng).sorted()
    image = random_maximal_code(k, leaves, rng).sorted()
    rng.shuffle(image)
    return Table.from_pairs(k, zip(domain, image, strict=True))


def random_element(k: int, leaves: int, seed: int) -> GroupElement:
    """Seed-deterministic random element built from a `leaves`-pair table"""
    return maximum_extension(random_table(k, leaves, random.Random(seed)))
