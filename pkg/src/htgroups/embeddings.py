"""
Embeddings between Higman-Thompson groups

- `iota`: G_{2,1} into G_{k,1}(0,1|2|...|k-1) for k >= 3, built from the
  isomorphic copy of G_{2,1} that fixes the a_0 subtree plus the
  *a_i-successors of its table entries.
- `higman_embed`: G_{K,1} into G_{k,1} by letterwise substitution of a
  maximal prefix code of size K = 1 + (k-1)·d.
- `embed_any`: G_{i,1} into G_{j,1} for every pair of alphabet sizes.
"""

from collections.abc import Sequence
from itertools import product
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from .exceptions import AlphabetMismatch, ImpossibleCodeSize, NotMaximalCode
from .logger import get_logger
from .successor import succ_all
from .tables import (
    GroupElement,
    Table,
    apply,
    maximum_extension,
    require_valid,
)
from .words import (
    MAX_ALPHABET,
    Alphabet,
    PrefixCode,
    Word,
    check_alphabet,
    check_word,
    is_binary,
    is_maximal_prefix_code,
    is_possible_code_size,
    prefix_comparable,
    spref,
)

logger = get_logger(__name__)

EmbedRoute = Literal["identity", "higman", "iota", "higman+iota"]

BINARY_BLOCK = 0


class CodeEncoding(BaseModel):
    """Letter a_j of A_K is encoded by code[j], a member of a maximal code over A_k"""

    model_config = ConfigDict(frozen=True)

    source_k: Alphabet
    target_k: Alphabet
    code: tuple[Word, ...]

    @model_validator(mode="after")
    def _check_code(self) -> "CodeEncoding":
        if len(self.code) != self.source_k:
            raise ValueError("code size differs from the source alphabet")
        if not is_maximal_prefix_code(self.code, self.target_k):
            raise ValueError("code is not a maximal prefix code")
        return self

    @classmethod
    def from_code(cls, words: Sequence[Sequence[int]], k: int) -> "CodeEncoding":
        """Encoding from a user-supplied code, checked with domain errors"""
        check_alphabet(k)
        code = tuple(check_word(w, k) for w in words)
        size = len(code)
        if size < 2 or not is_possible_code_size(size, k):
            raise ImpossibleCodeSize(
                f"{size} is not of the form 1 + {k - 1}·d with d >= 1"
            )
        if size > MAX_ALPHABET:
            raise AlphabetMismatch(f"source alphabet of size {size} is too large")
        if not is_maximal_prefix_code(code, k):
            raise NotMaximalCode("encoding words must form a maximal prefix code")
        return cls(source_k=size, target_k=k, code=code)

    @property
    def depth(self) -> int:
        """Number of interior vertices d of the code's prefix tree"""
        return (self.source_k - 1) // (self.target_k - 1)

    def encode(self, w: Word) -> Word:
        return tuple(a for letter in w for a in self.code[letter])


class FixatorSpec(BaseModel):
    """The right ideal w·A^*"""

    model_config = ConfigDict(frozen=True)

    w: Word


class MixedBlocks(BaseModel):
    """Block form of an element of G_{k,1}(0,1|2|...|k-1)"""

    model_config = ConfigDict(frozen=True)

    binary: tuple[tuple[Word, Word], ...]
    lettered: tuple[tuple[int, tuple[tuple[Word, Word], ...]], ...]


def _require_binary(g: Table | GroupElement) -> Table:
    table = g.table if isinstance(g, GroupElement) else g
    if table.k != 2:
        raise AlphabetMismatch(f"expected an element of G_2,1, got k={table.k}")
    return require_valid(table)


def iota_table(g: Table | GroupElement, k: int) -> Table:
    """Raw ι table: {(a_0,a_0)} ∪ {(a_1 p, a_1 q)} ∪ {((a_1 p)'_i, (a_1 q)'_i)}"""
    table = _require_binary(g)
    check_alphabet(k)
    if k < 3:
        raise AlphabetMismatch("ι targets an alphabet with k >= 3")
    lifted = [((1,) + p, (1,) + q) for p, q in table.pairs]
    domain = PrefixCode.of(2, [(0,)] + [p for p, _ in lifted])
    image = PrefixCode.of(2, [(0,)] + [q for _, q in lifted])
    mapping: dict[Word, Word] = {(0,): (0,)}
    mapping.update(lifted)
    for i in range(2, k):
        domain_succ = succ_all(domain, i)
        image_succ = succ_all(image, i)
        for p, q in lifted:
            mapping[domain_succ[p]] = image_succ[q]
    return Table.from_mapping(k, mapping)


def iota(g: GroupElement, k: int) -> GroupElement:
    """ι(g) in canonical form"""
    return maximum_extension(iota_table(g, k))


def _word_class(w: Word) -> int | None:
    """BINARY_BLOCK for {a_0,a_1}^*, i for {a_0,a_1}^*·a_i, None otherwise"""
    if is_binary(w):
        return BINARY_BLOCK
    if is_binary(w[:-1]):
        return w[-1]
    return None


def in_mixed_subgroup(f: GroupElement) -> bool:
    """Membership in G_{k,1}(0,1|2|...|k-1), checked pairwise on the table"""
    if f.k < 3:
        raise AlphabetMismatch("the mixed subgroup needs k >= 3")
    for p, q in f.pairs:
        block = _word_class(p)
        if block is None or block != _word_class(q):
            return False
    return True


def mixed_blocks(f: GroupElement) -> MixedBlocks | None:
    """Split the table into u_r -> v_r and p_s a_i -> q_s a_i blocks, or None"""
    if f.k < 3:
        raise AlphabetMismatch("the mixed subgroup needs k >= 3")
    binary: list[tuple[Word, Word]] = []
    lettered: dict[int, list[tuple[Word, Word]]] = {i: [] for i in range(2, f.k)}
    for p, q in f.pairs:
        block = _word_class(p)
        if block is None or block != _word_class(q):
            return None
        if block == BINARY_BLOCK:
            binary.append((p, q))
        else:
            lettered[block].append((p[:-1], q[:-1]))
    domain = [u for u, _ in binary]
    image = [v for _, v in binary]
    if not (is_maximal_prefix_code(domain, 2) and is_maximal_prefix_code(image, 2)):
        return None
    for stems in lettered.values():
        if {p for p, _ in stems} != spref(domain) or {q for _, q in stems} != spref(
            image
        ):
            return None
    return MixedBlocks(
        binary=tuple(binary),
        lettered=tuple((i, tuple(stems)) for i, stems in sorted(lettered.items())),
    )


def theta(g: GroupElement) -> GroupElement:
    """x -> y  becomes  {(a_0, a_0)} ∪ {(a_1 x, a_1 y)}"""
    table = _require_binary(g)
    mapping: dict[Word, Word] = {(0,): (0,)}
    mapping.update(((1,) + p, (1,) + q) for p, q in table.pairs)
    return maximum_extension(Table.from_mapping(2, mapping))


def in_pfix_form(f: GroupElement) -> bool:
    """Table shape of the fixator of a_0{a_0,a_1}^* in G_{2,1}"""
    if f.k != 2:
        raise AlphabetMismatch("the a_0-subtree fixator lives in G_2,1")
    if f.pairs == (((), ()),):
        return True
    rest = [pair for pair in f.pairs if pair != ((0,), (0,))]
    return len(rest) == len(f.pairs) - 1 and all(
        p[:1] == (1,) and q[:1] == (1,) for p, q in rest
    )


def _into_image(base: Word, image_code: Sequence[Word]) -> Word:
    for q in image_code:
        if q == base[: len(q)]:
            return base
    return min(q for q in image_code if q[: len(base)] == base)


def pfix_witness(f: GroupElement, spec: FixatorSpec) -> Word | None:
    """Some x in w·A^* ∩ Dom(f) ∩ Im(f) with f(x) != x, or None.

    f(p·v) = q·v equals p·v exactly when p = q, so a witness exists iff a
    table pair (p, q) with p != q has p prefix-comparable with w; extending
    the longer of p, w into Im(f) then gives the witness.
    """
    w = check_word(spec.w, f.k)
    image_code = f.table.image_code()
    for p, q in f.pairs:
        if p != q and prefix_comparable(p, w):
            return _into_image(p if len(p) >= len(w) else w, image_code)
    return None


def pfix_check(f: GroupElement, spec: FixatorSpec) -> bool:
    """True iff f partially fixes w·A^*"""
    return pfix_witness(f, spec) is None


def pfix_depth_bound(f: GroupElement, spec: FixatorSpec) -> int:
    return len(spec.w) + 2 * f.table.max_length() + 1


def pfix_check_bounded(
    f: GroupElement, spec: FixatorSpec, depth: int | None = None
) -> bool:
    """Literal check of f(x) = x over every x in w·A^* ∩ Dom ∩ Im with |x| <= depth"""
    w = check_word(spec.w, f.k)
    limit = pfix_depth_bound(f, spec) if depth is None else depth
    image_code = f.table.image_code()
    for n in range(limit - len(w) + 1):
        for v in product(range(f.k), repeat=n):
            x = w + v
            fx = apply(f, x)
            in_image = any(x[: len(q)] == q for q in image_code)
            if fx is not None and in_image and fx != x:
                return False
    return True


def canonical_code(size: int, k: int) -> CodeEncoding:
    """Right-comb code: split the dictionary-largest leaf until `size` members"""
    check_alphabet(k)
    if size < 2 or not is_possible_code_size(size, k):
        raise ImpossibleCodeSize(
            f"no maximal prefix code with {size} members over {k} letters"
        )
    if size > MAX_ALPHABET:
        raise AlphabetMismatch(f"source alphabet of size {size} is too large")
    code: list[Word] = [(a,) for a in range(k)]
    while len(code) < size:
        leaf = max(code)
        code.remove(leaf)
        code.extend(leaf + (a,) for a in range(k))
    return CodeEncoding(source_k=size, target_k=k, code=tuple(sorted(code)))


def higman_embed(g: GroupElement, encoding: CodeEncoding) -> GroupElement:
    """Substitute encoding.code[j] for every letter a_j, then canonicalise"""
    if g.k != encoding.source_k:
        raise AlphabetMismatch(
            f"element over {g.k} letters, encoding for {encoding.source_k}"
        )
    mapping = {encoding.encode(p): encoding.encode(q) for p, q in g.pairs}
    return maximum_extension(Table.from_mapping(encoding.target_k, mapping))


def embed_route(i: int, j: int) -> EmbedRoute:
    check_alphabet(i)
    check_alphabet(j)
    if i == j:
        return "identity"
    if j == 2:
        return "higman"
    if i == 2:
        return "iota"
    return "higman+iota"


def embed_any(g: GroupElement, j: int) -> GroupElement:
    """Embed G_{i,1} into G_{j,1}, routing cross-arity cases through G_{2,1}"""
    route = embed_route(g.k, j)
    logger.debug("embed_route", source_k=g.k, target_k=j, route=route)
    if route == "identity":
        return g
    if route == "iota":
        return iota(g, j)
    binary = higman_embed(g, canonical_code(g.k, 2))
    return binary if route == "higman" else iota(binary, j)


def dictionary_matching_table(g: Table | GroupElement, k: int) -> Table:
    """Naive extension of a binary table: spref(P)·a_i onto spref(Q)·a_i by rank.

    Injective on tables but not a map on the group: it does not commute
    with one-step restriction, so it is kept only as a negative example.
    """
    table = _require_binary(g)
    check_alphabet(k)
    if k < 3:
        raise AlphabetMismatch("the extension targets an alphabet with k >= 3")
    mapping = table.as_mapping()
    domain_stems = sorted(spref(table.domain_code()), key=lambda x: x + (2,))
    image_stems = sorted(spref(table.image_code()), key=lambda x: x + (2,))
    for i in range(2, k):
        mapping.update(
            (x + (i,), y + (i,))
            for x, y in zip(domain_stems, image_stems, strict=True)
        )
    return Table.from_mapping(k, mapping)
