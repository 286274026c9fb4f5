import sys
from pathlib import Path

import pytest

from extractsum.textproc import load_stopwords, load_suffixes, preprocess

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def bengali_lists():
    return load_stopwords(), load_suffixes()


@pytest.fixture(scope="session")
def article(bengali_lists):
    return preprocess((FIXTURES / "article_alfa.txt").read_bytes(), *bengali_lists, doc_id="article_alfa")


@pytest.fixture(scope="session")
def reference():
    return (FIXTURES / "reference_alfa.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def published_summary():
    return (FIXTURES / "published_system_alfa.txt").read_text(encoding="utf-8")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
