"""
Seeded verification harness

Each suite checks one family of properties: an exhaustive part over small
codes and elements that always runs, and a random part of `trials` trials.
Every trial draws its own seed from the suite's generator, so a failure can
be replayed from the seed recorded in the report.
"""

import random
import sys
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations, product

from tqdm import tqdm

from . import embeddings, successor, tables
from .config import get_settings
from .exceptions import HigmanThompsonError
from .logger import get_logger
from .models import SuiteResult, VerifyReport
from .serialization import dump_element, load_element
from .tables import GroupElement, Table
from .words import (
    PrefixCode,
    Word,
    enumerate_maximal_codes,
    format_word,
    is_possible_code_size,
    random_maximal_code,
    restrict_code,
    spref,
)

logger = get_logger(__name__)

SUCCESSOR_LETTERS = (2, 3)
IOTA_TARGETS = (3, 4, 5)
AXIOM_ALPHABETS = (2, 3, 4)
HIGMAN_PAIRS = ((3, 2), (4, 2), (5, 2), (5, 3))
EMBED_ALPHABETS = (2, 3, 4, 5)
FIXED_PREFIX_DEPTH = 5
CONJUGATION_TAIL_LENGTH = 3

SuiteCheck = Callable[[SuiteResult, int, random.Random], None]


def words_up_to(k: int, length: int) -> list[Word]:
    """All words over A_k of length at most `length`, shortest first"""
    return [w for n in range(length + 1) for w in product(range(k), repeat=n)]


def _fmt(g: GroupElement | Table | PrefixCode | Word) -> str:
    if isinstance(g, PrefixCode):
        return "{" + ",".join(format_word(w) for w in g.sorted()) + "}"
    if isinstance(g, GroupElement | Table):
        table = g.table if isinstance(g, GroupElement) else g
        pairs = ",".join(f"{format_word(p)}>{format_word(q)}" for p, q in table.pairs)
        return f"G{table.k}[{pairs}]"
    return format_word(g)


def _trial_seeds(rng: random.Random, trials: int) -> Iterator[int]:
    for _ in range(trials):
        yield rng.getrandbits(32)


def _random_leaves(k: int, rng: random.Random, low: int = 1) -> int:
    sizes = [
        n
        for n in range(low, get_settings().random_max_leaves + 1)
        if is_possible_code_size(n, k)
    ]
    return rng.choice(sizes)


def _random_element(k: int, rng: random.Random) -> GroupElement:
    return tables.random_element(k, _random_leaves(k, rng), rng.getrandbits(32))


def _small_binary_codes() -> list[PrefixCode]:
    return [code for code in enumerate_maximal_codes(2, 6) if len(code) >= 2]


def small_binary_elements(max_leaves: int = 3) -> list[GroupElement]:
    """Canonical elements of G_{2,1} of all tables with at most `max_leaves` pairs"""
    found: dict[tuple, GroupElement] = {}
    codes = list(enumerate_maximal_codes(2, max_leaves))
    for domain, image in product(codes, codes):
        if len(domain) != len(image):
            continue
        for images in permutations(image.sorted()):
            table = Table.from_pairs(2, zip(domain.sorted(), images, strict=True))
            g = tables.maximum_extension(table)
            found.setdefault(g.pairs, g)
    return [found[key] for key in sorted(found)]


def _random_restriction(table: Table, rng: random.Random, steps: int) -> Table:
    for _ in range(steps):
        table = tables.restriction_step(table, rng.choice(table.domain_code()))
    return table


def _successor_formula(result: SuiteResult, trials: int, rng: random.Random) -> None:
    def compare(code: PrefixCode, seed: int | None) -> None:
        for letter in SUCCESSOR_LETTERS:
            for p in code.sorted():
                query = successor.SuccessorQuery(code=code, member=p, letter=letter)
                expected = successor.succ_iterative(query)
                actual = successor.succ_formula(query)
                if actual != expected:
                    result.add_failure(
                        f"code={_fmt(code)} member={_fmt(p)} letter={letter}",
                        f"formula {actual} != recurrence {expected}",
                        seed,
                    )

    for code in _small_binary_codes():
        compare(code, None)
        result.exhaustive_cases += 1
    for seed in _trial_seeds(rng, trials * 5 // 2):
        trial = random.Random(seed)
        compare(random_maximal_code(2, trial.randint(2, 12), trial), seed)
        result.trials += 1


def _successor_image(result: SuiteResult, trials: int, rng: random.Random) -> None:
    def compare(code: PrefixCode, seed: int | None) -> None:
        for letter in SUCCESSOR_LETTERS:
            succ = successor.succ_all(code, letter)
            expected = {x + (letter,) for x in spref(code)}
            if set(succ.values()) != expected or len(succ) != len(code) - 1:
                result.add_failure(
                    f"code={_fmt(code)} letter={letter}",
                    "successor image differs from spref(P)·a_i",
                    seed,
                )

    for code in _small_binary_codes():
        compare(code, None)
        result.exhaustive_cases += 1
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        compare(random_maximal_code(2, trial.randint(2, 12), trial), seed)
        result.trials += 1


def _restriction_problems(code: PrefixCode, p: Word, letter: int) -> list[str]:
    before = successor.succ_all(code, letter)
    after = successor.succ_all(restrict_code(code, p), letter)
    left, right = p + (0,), p + (1,)
    problems = []
    if after.get(right) != p + (letter,):
        problems.append("(p·a_1)' != p·a_i")
    if after.get(left) != before.get(p):
        problems.append("(p·a_0)' != (p)'")
    for m in code.members - {p}:
        if after.get(m) != before.get(m):
            problems.append(f"successor of untouched {format_word(m)} changed")
    return problems


def _successor_restriction(result: SuiteResult, trials: int, rng: random.Random) -> None:
    def compare(code: PrefixCode, seed: int | None) -> None:
        for letter in SUCCESSOR_LETTERS:
            for p in code.sorted():
                for problem in _restriction_problems(code, p, letter):
                    result.add_failure(
                        f"code={_fmt(code)} member={_fmt(p)} letter={letter}",
                        problem,
                        seed,
                    )

    for code in _small_binary_codes():
        compare(code, None)
        result.exhaustive_cases += 1
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        compare(random_maximal_code(2, trial.randint(2, 12), trial), seed)
        result.trials += 1


def _iota_homomorphism(result: SuiteResult, trials: int, rng: random.Random) -> None:
    def compare(h: GroupElement, g: GroupElement, k: int, seed: int | None) -> None:
        lhs = embeddings.iota(tables.compose(h, g), k)
        rhs = tables.compose(embeddings.iota(h, k), embeddings.iota(g, k))
        if not tables.equals(lhs, rhs):
            result.add_failure(
                f"h={_fmt(h)} g={_fmt(g)} k={k}", "ι(h∘g) != ι(h)∘ι(g)", seed
            )

    small = small_binary_elements(3)
    for k in IOTA_TARGETS:
        for h, g in product(small, small):
            compare(h, g, k, None)
            result.exhaustive_cases += 1
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        for k in IOTA_TARGETS:
            compare(_random_element(2, trial), _random_element(2, trial), k, seed)
        result.trials += 1


def _iota_commutation(result: SuiteResult, trials: int, rng: random.Random) -> None:
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        for k in IOTA_TARGETS:
            table = _random_element(2, trial).table
            p = trial.choice(table.domain_code())
            lhs = embeddings.iota_table(tables.restriction_step(table, p), k)
            rhs = tables.restriction_step(embeddings.iota_table(table, k), (1,) + p)
            if set(lhs.pairs) != set(rhs.pairs):
                result.add_failure(
                    f"g={_fmt(table)} p={_fmt(p)} k={k}",
                    "ι(restr_p(g)) != restr_{a_1 p}(ι(g))",
                    seed,
                )
        result.trials += 1


def _iota_image(result: SuiteResult, trials: int, rng: random.Random) -> None:
    wanted = trials * 5 // 2
    elements: dict[tuple, tuple[GroupElement, int]] = {}
    for seed in _trial_seeds(rng, wanted * 10):
        if len(elements) >= wanted:
            break
        g = _random_element(2, random.Random(seed))
        elements.setdefault(g.pairs, (g, seed))
    for k in IOTA_TARGETS:
        seen: dict[tuple, GroupElement] = {}
        fixed_words = [(0,) + w for w in words_up_to(k, FIXED_PREFIX_DEPTH)]
        for g, seed in elements.values():
            image = embeddings.iota(g, k)
            other = seen.setdefault(image.pairs, g)
            inputs = f"g={_fmt(g)} k={k}"
            if other != g:
                result.add_failure(inputs, f"collides with {_fmt(other)}", seed)
            if not embeddings.in_mixed_subgroup(image):
                result.add_failure(inputs, "ι(g) outside the mixed subgroup", seed)
            if embeddings.mixed_blocks(image) is None:
                result.add_failure(inputs, "ι(g) has no block decomposition", seed)
            mapping = image.table.as_mapping()
            if any(tables.apply_mapping(mapping, x) != x for x in fixed_words):
                result.add_failure(inputs, "ι(g) moves a point of a_0·A^*", seed)
    result.trials += len(elements)


def _group_axioms(result: SuiteResult, trials: int, rng: random.Random) -> None:
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        for k in AXIOM_ALPHABETS:
            f, g, h = (_random_element(k, trial) for _ in range(3))
            one = tables.identity(k)
            inputs = f"f={_fmt(f)} g={_fmt(g)} h={_fmt(h)}"
            checks = {
                "associativity": tables.compose(tables.compose(h, g), f)
                == tables.compose(h, tables.compose(g, f)),
                "left identity": tables.compose(one, g) == g,
                "right identity": tables.compose(g, one) == g,
                "left inverse": tables.compose(tables.invert(g), g) == one,
                "right inverse": tables.compose(g, tables.invert(g)) == one,
            }
            restricted = _random_restriction(g.table, trial, trial.randint(1, 6))
            orders = (random.Random(trial.getrandbits(32)) for _ in range(2))
            first, second = (tables.maximum_extension(restricted, o) for o in orders)
            checks["confluence"] = first == second == g
            for law, holds in checks.items():
                if not holds:
                    result.add_failure(inputs, f"{law} fails over k={k}", seed)
        result.trials += 1


def _higman(result: SuiteResult, trials: int, rng: random.Random) -> None:
    encodings = {}
    for size, k in HIGMAN_PAIRS:
        encoding = embeddings.canonical_code(size, k)
        encodings[size, k] = encoding
        if size != 1 + (k - 1) * encoding.depth:
            result.add_failure(f"K={size} k={k}", "code size is not 1 + (k-1)·d")
        result.exhaustive_cases += 1
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        for (size, k), encoding in encodings.items():
            g, h = _random_element(size, trial), _random_element(size, trial)
            inputs = f"g={_fmt(g)} h={_fmt(h)} code={encoding.code}"
            image = embeddings.higman_embed(g, encoding).table.as_mapping()
            g_map = g.table.as_mapping()
            tails = words_up_to(size, CONJUGATION_TAIL_LENGTH)
            for p in g_map:
                for w in tails:
                    x = p + w
                    expected = encoding.encode(g_map[p] + w)
                    if tables.apply_mapping(image, encoding.encode(x)) != expected:
                        result.add_failure(inputs, f"conjugation fails at {_fmt(x)}", seed)
            lhs = embeddings.higman_embed(tables.compose(h, g), encoding)
            rhs = tables.compose(
                embeddings.higman_embed(h, encoding), embeddings.higman_embed(g, encoding)
            )
            if lhs != rhs:
                result.add_failure(inputs, "φ(h∘g) != φ(h)∘φ(g)", seed)
        result.trials += 1


def _embed_any(result: SuiteResult, trials: int, rng: random.Random) -> None:
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        for i, j in product(EMBED_ALPHABETS, EMBED_ALPHABETS):
            g, h = _random_element(i, trial), _random_element(i, trial)
            g_image, h_image = embeddings.embed_any(g, j), embeddings.embed_any(h, j)
            lhs = embeddings.embed_any(tables.compose(h, g), j)
            rhs = tables.compose(h_image, g_image)
            if lhs != rhs:
                result.add_failure(
                    f"g={_fmt(g)} h={_fmt(h)} j={j}",
                    f"embedding {i}->{j} is not a homomorphism",
                    seed,
                )
            if g != h and g_image == h_image:
                result.add_failure(
                    f"g={_fmt(g)} h={_fmt(h)} j={j}",
                    f"embedding {i}->{j} is not injective",
                    seed,
                )
        result.trials += 1


def _theta_pfix(result: SuiteResult, trials: int, rng: random.Random) -> None:
    a0 = embeddings.FixatorSpec(w=(0,))
    transposition = tables.maximum_extension(Table.from_pairs(2, [((0,), (1,)), ((1,), (0,))]))
    if embeddings.pfix_check(transposition, a0):
        result.add_failure(_fmt(transposition), "transposition accepted as fixing a_0·A^*")
    result.exhaustive_cases += 1
    prefixes = words_up_to(2, 2)
    for g in small_binary_elements(3):
        for w in prefixes:
            spec = embeddings.FixatorSpec(w=w)
            depth = embeddings.pfix_depth_bound(g, spec) + get_settings().pfix_extra_depth
            if embeddings.pfix_check(g, spec) != embeddings.pfix_check_bounded(
                g, spec, depth
            ):
                result.add_failure(
                    f"g={_fmt(g)} w={_fmt(w)}", "pfix check disagrees with deep oracle"
                )
            result.exhaustive_cases += 1
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        g, h = _random_element(2, trial), _random_element(2, trial)
        inputs = f"g={_fmt(g)} h={_fmt(h)}"
        image = embeddings.theta(g)
        if embeddings.theta(tables.compose(h, g)) != tables.compose(
            embeddings.theta(h), image
        ):
            result.add_failure(inputs, "θ(h∘g) != θ(h)∘θ(g)", seed)
        if g != h and image == embeddings.theta(h):
            result.add_failure(inputs, "θ is not injective", seed)
        if not (embeddings.pfix_check(image, a0) and embeddings.in_pfix_form(image)):
            result.add_failure(inputs, "θ(g) does not fix a_0·A^*", seed)
        result.trials += 1


def _serialization(result: SuiteResult, trials: int, rng: random.Random) -> None:
    for seed in _trial_seeds(rng, trials):
        trial = random.Random(seed)
        for k in EMBED_ALPHABETS:
            g = _random_element(k, trial)
            text = dump_element(g)
            parsed = load_element(text)
            if parsed != g or dump_element(parsed) != text:
                result.add_failure(_fmt(g), "element file round trip is not stable", seed)
        result.trials += 1


SUITES: dict[str, SuiteCheck] = {
    "successor-formula": _successor_formula,
    "successor-image": _successor_image,
    "successor-restriction": _successor_restriction,
    "iota-homomorphism": _iota_homomorphism,
    "iota-commutation": _iota_commutation,
    "iota-image": _iota_image,
    "group-axioms": _group_axioms,
    "higman": _higman,
    "embed-any": _embed_any,
    "theta-pfix": _theta_pfix,
    "serialization": _serialization,
}


def run_suite(name: str, trials: int, seed: int) -> SuiteResult:
    """Run one suite; exceptions count as failures"""
    result = SuiteResult(name=name)
    start_time = time.time()
    try:
        SUITES[name](result, trials, random.Random(f"{seed}:{name}"))
    except (HigmanThompsonError, ValueError, AssertionError) as e:
        logger.error("suite_crashed", suite=name, error=str(e))
        result.add_failure(f"suite {name}", f"{type(e).__name__}: {e}")
    result.wall_time = time.time() - start_time
    logger.info(
        "suite_finished",
        suite=name,
        exhaustive_cases=result.exhaustive_cases,
        trials=result.trials,
        failures=len(result.failures),
        seconds=round(result.wall_time, 3),
    )
    return result


def run_verify(
    trials: int,
    seed: int,
    suites: list[str] | None = None,
    workers: int = 1,
    progress: bool = False,
) -> VerifyReport:
    """Run the named suites (all by default); deterministic in (trials, seed)"""
    names = suites or list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    start_time = time.time()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_suite, name, trials, seed) for name in names]
            results = [
                future.result()
                for future in tqdm(futures, disable=not progress, file=sys.stderr)
            ]
    else:
        results = [
            run_suite(name, trials, seed)
            for name in tqdm(names, disable=not progress, file=sys.stderr)
        ]
    return VerifyReport(
        trials=trials, seed=seed, suites=results, wall_time=time.time() - start_time
    )


def render_report(report: VerifyReport) -> str:
    """Byte-stable text form of a report (timings are logged, not rendered)"""
    lines = [f"verify trials={report.trials} seed={report.seed}"]
    for suite in report.suites:
        lines.append(
            f"{suite.name}: {suite.status} "
            f"(exhaustive={suite.exhaustive_cases}, trials={suite.trials}, "
            f"failures={len(suite.failures)})"
        )
        for failure in suite.failures:
            seed = "exhaustive" if failure.seed is None else f"seed={failure.seed}"
            lines.append(f"  {seed} {failure.inputs}: {failure.message}")
    verdict = "passed" if report.passed else f"failed ({report.failure_count} failures)"
    lines.append(f"result: {verdict}")
    return "\n".join(lines) + "\n"
