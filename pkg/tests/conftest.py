from hypothesis import strategies as st

from stcrit.graph import Graph

_ACCEPTANCE: list[tuple[str, str, float]] = []


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    """Random simple graphs; ``connected`` adds a random spanning tree first."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {p for p, keep in zip(pairs, chosen) if keep}
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def two_packings_reference(G: Graph, S: int) -> bool:
    vs = [v for v in range(G.n) if S >> v & 1]
    closed = [G.adj[v] | (1 << v) for v in vs]
    return all(not closed[i] & closed[j] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].split("[")[0]
    passed = report.passed
    if _ACCEPTANCE and _ACCEPTANCE[-1][0] == name:
        _, prev, dur = _ACCEPTANCE.pop()
        passed = passed and prev == "PASS"
        report_duration = dur + report.duration
    else:
        report_duration = report.duration
    _ACCEPTANCE.append((name, "PASS" if passed else "FAIL", report_duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name, verdict, dur in _ACCEPTANCE:
        tr.write_line(f"{verdict}  {name}  ({dur:.2f}s)")
