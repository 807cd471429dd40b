from collections import Counter

from hypothesis import strategies as st

from coreabacus.partitions import Partition


@st.composite
def partitions(draw, max_n=40):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition(())
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


# Box-level oracles, deliberately independent of the bead-set code paths.

def box_set(p):
    return {(r, c) for r, length in enumerate(p, start=1) for c in range(1, length + 1)}


def from_boxes(boxes):
    rows = Counter(r for r, _ in boxes)
    return Partition(tuple(rows[r] for r in sorted(rows)))


def brute_hooks(p):
    boxes = box_set(p)
    table = []
    for r, length in enumerate(p, start=1):
        row = []
        for c in range(1, length + 1):
            arm = sum(1 for cc in range(c + 1, length + 1) if (r, cc) in boxes)
            leg = sum(1 for (rr, col) in boxes if col == c and rr > r)
            row.append(arm + leg + 1)
        table.append(row)
    return table


def rim_remove(p, corner):
    """Strip the rim hook running from (r, p_r) down to (p*_c, c)."""
    r, c = corner
    comps = list(p)
    bottom = max(rr for rr, cc in box_set(p) if cc == c)
    new = comps[:]
    for i in range(r, bottom):
        new[i - 1] = comps[i] - 1
    new[bottom - 1] = c - 1
    return Partition(tuple(x for x in new if x > 0))


def brute_core(p, s):
    """Strip s-hooks box by box until none remain; returns (core, removals)."""
    steps = 0
    while True:
        table = brute_hooks(p)
        corner = next(
            ((r + 1, c + 1) for r, row in enumerate(table) for c, h in enumerate(row) if h == s), None
        )
        if corner is None:
            return p, steps
        p = rim_remove(p, corner)
        steps += 1


def beta_quotient(p, s):
    """s-quotient from beta-numbers p_i - i + N, N the least multiple of s >= len(p)."""
    n_beads = -(-len(p) // s) * s
    padded = list(p) + [0] * (n_beads - len(p))
    betas = [part - i + n_beads for i, part in enumerate(padded, start=1)]
    out = []
    for i in range(s):
        runner = sorted(b // s for b in betas if b % s == i)
        comps = sorted((j - idx for idx, j in enumerate(runner)), reverse=True)
        out.append(Partition(tuple(x for x in comps if x > 0)))
    return tuple(out)


def representable(z, s, t):
    return any((z - a * s) % t == 0 for a in range(z // s + 1))


# Acceptance lines, printed once at the end of the run.
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
