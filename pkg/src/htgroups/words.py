"""
Words over ordered alphabets, prefix combinatorics and (maximal) prefix codes

A word over A_k = {a_0 < a_1 < ... < a_{k-1}} is a tuple of letter indices.
Python's tuple ordering is exactly the dictionary order (a prefix sorts
before its extensions, otherwise the first differing letter decides), so
`sorted` on words is dictionary sorting throughout the package.
"""

import random
from collections.abc import Iterable, Iterator
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .exceptions import (
    AlphabetMismatch,
    ImpossibleCodeSize,
    InvalidQuery,
    InvalidWord,
    NotAMember,
    NotMaximalBinaryCode,
)

MAX_ALPHABET = 10
EMPTY_WORD_TOKEN = "-"

Word = tuple[int, ...]
EPSILON: Word = ()
Alphabet = Annotated[int, Field(ge=2, le=MAX_ALPHABET)]


class Ordering(Enum):
    """Outcome of a dictionary-order comparison"""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def check_alphabet(k: int) -> int:
    """Return k if it is a supported alphabet size"""
    if not 2 <= k <= MAX_ALPHABET:
        raise AlphabetMismatch(f"alphabet size {k} outside 2..{MAX_ALPHABET}")
    return k


def check_word(w: Iterable[int], k: int) -> Word:
    """Return w as a Word, rejecting letters outside A_k"""
    word = tuple(w)
    for letter in word:
        if not 0 <= letter < k:
            raise InvalidWord(f"letter {letter} outside alphabet of size {k}")
    return word


def parse_word(text: str, k: int) -> Word:
    """Parse a digit string; "-" is the empty word"""
    if text == EMPTY_WORD_TOKEN:
        return EPSILON
    if not text or any(c not in "0123456789" for c in text):
        raise InvalidWord(f"malformed word {text!r}")
    return check_word((int(c) for c in text), k)


def format_word(w: Word) -> str:
    """Digit-string form of a word"""
    return "".join(str(letter) for letter in w) if w else EMPTY_WORD_TOKEN


class PrefixCode(BaseModel):
    """A finite, nonempty, prefix-free set of words over A_k"""

    model_config = ConfigDict(frozen=True)

    k: Alphabet
    members: frozenset[Word]

    @model_validator(mode="after")
    def _check_members(self) -> "PrefixCode":
        if not self.members:
            raise ValueError("a prefix code is nonempty")
        for w in self.members:
            if any(not 0 <= letter < self.k for letter in w):
                raise ValueError(f"word {format_word(w)} leaves the alphabet")
        if not is_prefix_code(self.members):
            raise ValueError("members are not prefix-free")
        return self

    @classmethod
    def of(cls, k: int, words: Iterable[Iterable[int]]) -> "PrefixCode":
        return cls(k=k, members=frozenset(tuple(w) for w in words))

    def sorted(self) -> list[Word]:
        """Members in dictionary order"""
        return sorted(self.members)

    def is_maximal(self) -> bool:
        return kraft_sum(self.members, self.k) == 1

    def max_length(self) -> int:
        return max(len(w) for w in self.members)

    def __contains__(self, w: object) -> bool:
        return w in self.members

    def __len__(self) -> int:
        return len(self.members)


def _members(code: PrefixCode | Iterable[Word]) -> frozenset[Word]:
    if isinstance(code, PrefixCode):
        return code.members
    return frozenset(tuple(w) for w in code)


def is_prefix(p: Word, x: Word) -> bool:
    """True iff x = p·u for some word u"""
    return len(p) <= len(x) and x[: len(p)] == p


def prefix_comparable(x: Word, y: Word) -> bool:
    return is_prefix(x, y) or is_prefix(y, x)


def is_prefix_code(words: Iterable[Word], k: int | None = None) -> bool:
    """True iff no two (distinct positions of) words are prefix-comparable.

    With `k`, words with letters outside A_k make the answer False.
    """
    ordered = sorted(tuple(w) for w in words)
    if k is not None and any(not 0 <= a < k for w in ordered for a in w):
        return False
    # In dictionary order every extension of p immediately follows p.
    return not any(is_prefix(a, b) for a, b in zip(ordered, ordered[1:], strict=False))


def kraft_sum(words: Iterable[Word], k: int) -> Fraction:
    """Exact Kraft sum of the words over a k-letter alphabet"""
    return sum((Fraction(1, k ** len(w)) for w in words), Fraction(0))


def is_maximal_prefix_code(words: Iterable[Word], k: int) -> bool:
    """Finite maximality by the Kraft equality"""
    code = [tuple(w) for w in words]
    if not code or any(not 0 <= a < k for w in code for a in w):
        return False
    return is_prefix_code(code) and kraft_sum(code, k) == 1


def has_unique_prefixes(words: Iterable[Word], k: int) -> bool:
    """Every word of length max|p| has exactly one prefix among the words.

    Bounded-depth form of the unique-prefix property of infinite words; an
    independent oracle for `is_maximal_prefix_code`.
    """
    code = frozenset(tuple(w) for w in words)
    if not code:
        return False
    depth = max(len(w) for w in code)
    for w in product(range(k), repeat=depth):
        if sum(1 for i in range(depth + 1) if w[:i] in code) != 1:
            return False
    return True


def spref(code: PrefixCode | Iterable[Word]) -> frozenset[Word]:
    """Strict prefixes of the members (interior vertices of the prefix tree)"""
    return frozenset(p[:i] for p in _members(code) for i in range(len(p)))


def dict_compare(u: Word, v: Word) -> Ordering:
    """Dictionary order by longest-common-prefix scan"""
    for a, b in zip(u, v, strict=False):
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER
    if len(u) == len(v):
        return Ordering.EQUAL
    return Ordering.LESS if len(u) < len(v) else Ordering.GREATER


def rank(code: PrefixCode, p: Word) -> int:
    """Number of members strictly below p in dictionary order"""
    if p not in code:
        raise NotAMember(f"{format_word(p)} is not a member of the code")
    return sum(1 for q in code.members if dict_compare(q, p) is Ordering.LESS)


def is_binary(w: Word) -> bool:
    """True iff w lies in {a_0, a_1}^*"""
    return all(letter < 2 for letter in w)


def check_binary_maximal(code: PrefixCode | Iterable[Word]) -> frozenset[Word]:
    members = _members(code)
    if not is_maximal_prefix_code(members, 2):
        raise NotMaximalBinaryCode(
            "expected a finite maximal prefix code over {a_0, a_1}"
        )
    return members


def extend_to_k(code: PrefixCode, k: int) -> PrefixCode:
    """P ∪ spref(P)·{a_2, ..., a_{k-1}} for a maximal binary code P"""
    members = check_binary_maximal(code)
    check_alphabet(k)
    if k < 3:
        raise AlphabetMismatch("extension targets an alphabet with k >= 3")
    tails = {x + (i,) for x in spref(members) for i in range(2, k)}
    return PrefixCode(k=k, members=members | tails)


def split_extended_code(code: PrefixCode) -> tuple[PrefixCode, frozenset[Word]]:
    """Recover (P, Q) from a maximal code P ∪ Q·{a_2, ..., a_{k-1}}"""
    if code.k < 3 or not code.is_maximal():
        raise NotMaximalBinaryCode("expected a maximal code over k >= 3 letters")
    binary = frozenset(w for w in code.members if is_binary(w))
    tails: dict[int, set[Word]] = {i: set() for i in range(2, code.k)}
    for w in code.members - binary:
        if not (w and is_binary(w[:-1])):
            raise NotMaximalBinaryCode(f"{format_word(w)} has more than one tail letter")
        tails[w[-1]].add(w[:-1])
    stems = {frozenset(s) for s in tails.values()}
    if len(stems) != 1:
        raise NotMaximalBinaryCode("tail sets differ between letters")
    return PrefixCode.of(2, binary), stems.pop()


def decompose(w: Word, code: PrefixCode | Iterable[Word]) -> tuple[list[Word], Word]:
    """Unique factorization w = c_1 ... c_m · r with c_j in P and r not in P·A*"""
    members = _members(code)
    if EPSILON in members:
        raise InvalidQuery("the trivial code {ε} has no finite factorization")
    longest = max(len(c) for c in members)
    factors: list[Word] = []
    pos = 0
    while True:
        for end in range(pos + 1, min(len(w), pos + longest) + 1):
            if w[pos:end] in members:
                factors.append(w[pos:end])
                pos = end
                break
        else:
            return factors, w[pos:]


def restrict_code(code: PrefixCode, p: Word) -> PrefixCode:
    """(P ∖ {p}) ∪ p·A_k"""
    if p not in code:
        raise NotAMember(f"{format_word(p)} is not a member of the code")
    children = {p + (a,) for a in range(code.k)}
    return PrefixCode(k=code.k, members=(code.members - {p}) | children)


def is_possible_code_size(n: int, k: int) -> bool:
    """Maximal prefix codes over A_k have exactly the sizes 1 + (k-1)·d"""
    return n >= 1 and (n - 1) % (k - 1) == 0


def random_maximal_code(k: int, leaves: int, rng: random.Random) -> PrefixCode:
    """Grow {ε} by splitting uniformly chosen leaves until `leaves` members"""
    if not is_possible_code_size(leaves, k):
        raise ImpossibleCodeSize(
            f"no maximal prefix code with {leaves} members over {k} letters"
        )
    members: set[Word] = {EPSILON}
    while len(members) < leaves:
        leaf = rng.choice(sorted(members))
        members.remove(leaf)
        members.update(leaf + (a,) for a in range(k))
    return PrefixCode.of(k, members)


def enumerate_maximal_codes(k: int, max_leaves: int) -> Iterator[PrefixCode]:
    """Every maximal prefix code over A_k with at most `max_leaves` members"""
    level: set[frozenset[Word]] = {frozenset({EPSILON})}
    while level and len(next(iter(level))) <= max_leaves:
        for members in sorted(level, key=sorted):
            yield PrefixCode(k=k, members=members)
        level = {
            (members - {leaf}) | {leaf + (a,) for a in range(k)}
            for members in level
            for leaf in members
        }
