import pytest

_RESULTS: dict[str, tuple[bool, str]] = {}


class Criterion:
    def __init__(self, name: str):
        self.name = name

    def record(self, ok: bool, detail: str) -> None:
        _RESULTS[self.name] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'}  {self.name}: {detail}")
        assert ok, detail


@pytest.fixture
def criterion(request):
    return Criterion(request.node.name.removeprefix("test_"))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(_RESULTS.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
