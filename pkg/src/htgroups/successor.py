"""
The *a_i-successor of a member of a maximal binary prefix code

For a finite maximal prefix code P over {a_0, a_1} with |P| >= 2 and a
letter a_i (i >= 2), each member p outside a_0^* has a successor (p)'_i in
spref(P)·a_i: its nearest unassigned right-neighbour in the dictionary order
of {a_0 < a_1 < a_i}^*, assigned from the dictionary-largest member down.
The closed form is (u a_1 a_0^m)'_i = u a_i.
"""

from pydantic import BaseModel, ConfigDict

from .exceptions import InvalidQuery
from .words import (
    MAX_ALPHABET,
    Alphabet,
    PrefixCode,
    Word,
    format_word,
    is_maximal_prefix_code,
    spref,
)


class SuccessorQuery(BaseModel):
    """Successor of `member` in the binary code `code` for the letter a_`letter`"""

    model_config = ConfigDict(frozen=True)

    code: PrefixCode
    member: Word
    letter: int
    k: Alphabet | None = None

    def target_k(self) -> int:
        return self.k if self.k is not None else self.letter + 1


def check_successor_code(code: PrefixCode, letter: int, k: int | None = None) -> None:
    """Raise InvalidQuery unless (code, letter) admits successors"""
    if code.k != 2 or not is_maximal_prefix_code(code.members, 2):
        raise InvalidQuery("successors need a finite maximal code over {a_0, a_1}")
    if len(code) < 2:
        raise InvalidQuery("successors need a code with at least two members")
    limit = min(k, MAX_ALPHABET) if k is not None else MAX_ALPHABET
    if not 2 <= letter < limit:
        raise InvalidQuery(f"letter a_{letter} outside a_2..a_{limit - 1}")


def _check_query(query: SuccessorQuery) -> None:
    check_successor_code(query.code, query.letter, query.target_k())
    if query.member not in query.code:
        raise InvalidQuery(f"{format_word(query.member)} is not a member of the code")


def _three_letter_key(w: Word, letter: int) -> tuple[int, ...]:
    # a_0 < a_1 < a_i positionally, whatever the index i
    return tuple(2 if a == letter else a for a in w)


def iterative_successor_map(code: PrefixCode, letter: int) -> dict[Word, Word]:
    """Run the nearest-unassigned-right-neighbour recurrence over the whole code"""
    check_successor_code(code, letter)
    members = code.sorted()
    candidates = sorted(
        (x + (letter,) for x in spref(code)),
        key=lambda w: _three_letter_key(w, letter),
    )
    assigned: set[Word] = set()
    successors: dict[Word, Word] = {}
    for p in reversed(members[1:]):
        key = _three_letter_key(p, letter)
        for c in candidates:
            if c not in assigned and key < _three_letter_key(c, letter):
                successors[p] = c
                assigned.add(c)
                break
        else:
            raise InvalidQuery(f"no free successor left for {format_word(p)}")
    return successors


def succ_iterative(query: SuccessorQuery) -> Word | None:
    """(p)'_i by the defining recurrence; None for the a_0^* member"""
    _check_query(query)
    return iterative_successor_map(query.code, query.letter).get(query.member)


def successor_of(p: Word, letter: int) -> Word | None:
    """Closed form: u a_1 a_0^m ↦ u a_i, None on a_0^*"""
    for pos in range(len(p) - 1, -1, -1):
        if p[pos] == 1:
            return p[:pos] + (letter,)
    return None


def succ_formula(query: SuccessorQuery) -> Word | None:
    _check_query(query)
    return successor_of(query.member, query.letter)


def succ_all(code: PrefixCode, letter: int) -> dict[Word, Word]:
    """{p ↦ (p)'_i} over the members outside a_0^*, in dictionary order"""
    check_successor_code(code, letter)
    successors = {}
    for p in code.sorted():
        s = successor_of(p, letter)
        if s is not None:
            successors[p] = s
    return successors
