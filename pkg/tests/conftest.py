import pytest

from scsdiscord import _pykernels

try:
    from scsdiscord import _ckernels
except ImportError:
    _ckernels = None

ACCEPTANCE_RESULTS = {}

KERNEL_BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    KERNEL_BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=KERNEL_BACKENDS)
def kernels(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {line}")
