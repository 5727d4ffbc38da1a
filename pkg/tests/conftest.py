import os
import sys
from pathlib import Path

import pytest

SHIM = Path(__file__).parent / "solvers" / "pysat_dimacs.py"


def _have_pysat() -> bool:
    try:
        import pysat.solvers  # noqa: F401
    except ImportError:
        return False
    return True


HAVE_PYSAT = _have_pysat()
EXTENDED = os.environ.get("FIBRAMSEY_EXTENDED") == "1"


@pytest.fixture(scope="session")
def solver_cmd() -> str:
    if not HAVE_PYSAT:
        pytest.skip("python-sat is not installed")
    return f'"{sys.executable}" "{SHIM}" {{input}}'


# -- acceptance summary --------------------------------------------------------

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


class _Criterion:
    def __init__(self, key: str, title: str) -> None:
        self.key, self.title, self.notes = key, title, []

    def note(self, text: str) -> None:
        self.notes.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else ("SKIP" if issubclass(exc_type, pytest.skip.Exception) else "FAIL")
        detail = "; ".join(self.notes) if self.notes else ""
        if exc is not None and status == "FAIL":
            detail = (detail + "; " if detail else "") + f"{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        _ACCEPTANCE[self.key] = (status, f"{self.title}" + (f" [{detail}]" if detail else ""))
        line = f"ACCEPTANCE {self.key}: {status} {self.title}" + (f" [{detail}]" if detail else "")
        print("\n" + line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")

    def order(key: str):
        head = key.split()[0]
        return (0, int(head)) if head.isdigit() else (1, key)

    for key in sorted(_ACCEPTANCE, key=order):
        status, text = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{key:>10}  {status}  {text}")
