"""
Hypothesis strategies for words, codes and group elements
"""

import random

from hypothesis import strategies as st

from src.htgroups.tables import GroupElement, random_element
from src.htgroups.words import PrefixCode, Word, is_possible_code_size, random_maximal_code

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def words(k: int, max_size: int = 6) -> st.SearchStrategy[Word]:
    return st.lists(st.integers(0, k - 1), max_size=max_size).map(tuple)


@st.composite
def maximal_codes(draw, k: int = 2, min_leaves: int = 2, max_leaves: int = 13) -> PrefixCode:
    sizes = [n for n in range(min_leaves, max_leaves + 1) if is_possible_code_size(n, k)]
    leaves = draw(st.sampled_from(sizes))
    return random_maximal_code(k, leaves, random.Random(draw(seeds)))


@st.composite
def elements(draw, k: int = 2, max_leaves: int = 9) -> GroupElement:
    sizes = [n for n in range(1, max_leaves + 1) if is_possible_code_size(n, k)]
    return random_element(k, draw(st.sampled_from(sizes)), draw(seeds))
