import numpy as np
import pytest

from cqbounds import ConfusabilityGraph, PureStateChannel, classical_embed

from oracles import overlap_channel_vectors, umbrella_vectors

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return record


@pytest.fixture
def bsc():
    return classical_embed([[0.9, 0.1], [0.1, 0.9]])


@pytest.fixture
def overlap_half():
    return PureStateChannel(overlap_channel_vectors(0.5))


@pytest.fixture
def pentagon():
    return PureStateChannel(umbrella_vectors())


GRAPHS = {
    "C5": ConfusabilityGraph.cycle(5),
    "P4": ConfusabilityGraph.path(4),
    "E5": ConfusabilityGraph.empty(5),
    "K4": ConfusabilityGraph.complete(4),
}
