import itertools
import sys

import pytest
from hypothesis import strategies as st

binary_words = st.text(alphabet="ab", max_size=24)
nonempty_words = st.text(alphabet="ab", min_size=1, max_size=24)


def words_up_to(n, min_len=0):
    for k in range(min_len, n + 1):
        for t in itertools.product("ab", repeat=k):
            yield "".join(t)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines):
        terminalreporter.write_line(lines[key])


@pytest.fixture(scope="session")
def fibonacci():
    from sturm.sturmian import DirectiveSequence

    return DirectiveSequence((1,), (1,))
