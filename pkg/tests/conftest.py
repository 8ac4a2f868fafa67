import itertools

import numpy as np
import pytest

ACCEPTANCE_RESULTS = {}


def record(criterion: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS[criterion] = (passed, detail)


@pytest.fixture
def record_criterion():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")


def fock_spectrum(L, t, delta, mu):
    """Many-body spectrum of the open chain by Jordan-Wigner (2**L states).

    Independent of every single-particle builder; used as a baseline oracle.
    """
    dim = 2**L
    Z = np.diag([1.0, -1.0])
    I2 = np.eye(2)
    lower = np.array([[0.0, 1.0], [0.0, 0.0]])  # |1> -> |0>, basis (|0>, |1>)

    def kron_all(ops):
        out = np.eye(1)
        for op in ops:
            out = np.kron(out, op)
        return out

    # Z on occupied state must be -1: basis order (|0>, |1>) so Z = diag(1, -1)
    a = [kron_all([Z] * l + [lower] + [I2] * (L - l - 1)) for l in range(L)]
    ad = [op.T for op in a]
    H = np.zeros((dim, dim))
    for l in range(L - 1):
        hop = -t * ad[l] @ a[l + 1] - delta * a[l] @ a[l + 1]
        H += hop + hop.T
    for l in range(L):
        H += -mu * (ad[l] @ a[l] - 0.5 * np.eye(dim))
    return np.linalg.eigvalsh(H)


def subset_sums(energies):
    e = np.asarray(energies)
    return np.sort([sum(c) for r in range(len(e) + 1) for c in itertools.combinations(e, r)])
