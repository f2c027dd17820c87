import itertools
from functools import lru_cache

import pytest

from mvlab import build_root_system, generate, parse_root_system

# positive roots in simple-root coordinates, written out by hand
POSITIVE_ROOTS = {
    "A2": [(1, 0), (0, 1), (1, 1)],
    "A3": [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)],
    # node 2 is the trivalent one
    "D4": [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
           (1, 1, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1),
           (1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1),
           (1, 1, 1, 1), (1, 2, 1, 1)],
}


@lru_cache(maxsize=None)
def kostant_counts(name, max_height):
    """Multisets of positive roots, grouped by their sum, up to total height."""
    roots = POSITIVE_ROOTS[name]
    counts = {tuple(0 for _ in roots[0]): 1}
    for r in roots:
        new = dict(counts)
        for nu, c in counts.items():
            k = 1
            while sum(nu) + k * sum(r) <= max_height:
                key = tuple(a + k * b for a, b in zip(nu, r))
                new[key] = new.get(key, 0) + c
                k += 1
        counts = new
    return counts


@lru_cache(maxsize=None)
def corpus(name, depth):
    return tuple(generate(parse_root_system(name), depth))


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build_root_system("A", 3)


@pytest.fixture(scope="session")
def d4():
    return build_root_system("D", 4)


def all_reduced_words(rs):
    """Reduced words of w0 by brute force over words of the right length."""
    n = len(rs.longest_word())
    out = []
    for word in itertools.product(range(1, rs.rank + 1), repeat=n):
        if rs.word_index(word) == rs.w0 and rs.is_reduced(word):
            out.append(word)
    return out


ACCEPTANCE_LINES = []


def record(number, title, ok, detail=""):
    """Log one acceptance line; the terminal summary repeats them all."""
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
