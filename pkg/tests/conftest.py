import random

from hypothesis import settings
from hypothesis import strategies as st

from starcoh.formula import BOT, TOP, Conj, Disj, Letter, Neg

# seed-driven generators vary a lot in cost per example
settings.register_profile("starcoh", deadline=None)
settings.load_profile("starcoh")

letters_st = st.sampled_from("pqrs").map(Letter)


def formulas(max_leaves: int = 6, constants: bool = True, negation: bool = True):
    base = letters_st | st.sampled_from([TOP, BOT]) if constants else letters_st

    def extend(children):
        options = [st.builds(Conj, children, children), st.builds(Disj, children, children)]
        if negation:
            options.append(st.builds(Neg, children))
        return st.one_of(*options)

    return st.recursive(base, extend, max_leaves=max_leaves)


seeds = st.integers(min_value=0, max_value=2**32 - 1)


def rng_from(seed: int) -> random.Random:
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
