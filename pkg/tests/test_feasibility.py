import itertools

import numpy as np
import pytest

from leapertours import (
    LEAPERS,
    Closure,
    DomainError,
    GridSpec,
    LeaperSpec,
    Parity,
    SearchConfig,
    Status,
    Verdict,
    classify,
    enumerate_rules,
    find_tours,
    parity_class_sizes,
    rule_parity,
)
from leapertours.feasibility import KNOWN_TOURS


def reachable(n, k, moves):
    """Breadth-first closure of the origin under signed coordinate moves."""
    grid = GridSpec(n, k)
    coords = np.array([grid.decode(c) for c in range(grid.size)], dtype=np.int64)
    weights = n ** np.arange(k, dtype=np.int64)
    seen = np.zeros(grid.size, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while frontier.size:
        nxt = []
        for move in moves:
            target = coords[frontier] + move
            ok = np.all((target >= 0) & (target < n), axis=1)
            nxt.append(target[ok] @ weights)
        cand = np.unique(np.concatenate(nxt)) if nxt else np.array([], dtype=np.int64)
        cand = cand[~seen[cand]]
        seen[cand] = True
        frontier = cand
    return coords[seen]


def signed_moves(rule, k):
    out = set()
    deltas = rule.deltas
    for positions in itertools.permutations(range(k), len(deltas)):
        for signs in itertools.product((1, -1), repeat=len(deltas)):
            move = [0] * k
            for p, s, x in zip(positions, signs, deltas):
                move[p] = s * x
            out.add(tuple(move))
    return np.array(sorted(out), dtype=np.int64)


def test_rule_parity_examples():
    assert rule_parity((1, 2)) is Parity.ODD
    assert rule_parity((2, 2)) is Parity.EVEN
    assert rule_parity((1, 1, 1, 1, 1)) is Parity.ODD
    with pytest.raises(DomainError):
        rule_parity(())
    with pytest.raises(DomainError):
        rule_parity((0, 0))


def test_rule_parity_matches_parity_of_squares():
    for length in range(1, 14):
        for deltas in itertools.combinations_with_replacement(range(6), length):
            if any(deltas):
                assert rule_parity(deltas) is Parity.of(sum(x * x for x in deltas))


def test_parity_class_sizes():
    assert parity_class_sizes(2, 3) == (4, 4)
    assert parity_class_sizes(2, 1) == (1, 1)
    even = sum(1 for v in itertools.product(range(3), repeat=2) if sum(v) % 2 == 0)
    assert parity_class_sizes(3, 2) == (even, 9 - even) == (5, 4)
    for n in range(1, 5):
        for k in range(1, 6):
            e, o = parity_class_sizes(n, k)
            assert e + o == n**k


def test_classify_examples():
    assert classify(LEAPERS["threeleaper"], 9).status is Status.INFEASIBLE_TWO_CYCLE
    assert classify(LEAPERS["zebra"], 13).status is Status.INFEASIBLE_TWO_CYCLE
    for k in range(1, 25):
        assert classify(LEAPERS["alfil"], k).status is Status.INFEASIBLE_PARITY
    assert classify(LEAPERS["knight"], 4).status is Status.INFEASIBLE_NO_MOVE
    assert classify(LEAPERS["threeleaper"], 11).status is Status.KNOWN_TOUR
    assert classify(LEAPERS["wazir"], 1).status is Status.KNOWN_TOUR
    assert classify(LEAPERS["threeleaper"], 10).status is Status.SEARCHABLE
    assert classify(LEAPERS["zebra"], 14).status is Status.SEARCHABLE


def test_verdict_invariants():
    for a, b in itertools.product(range(5), repeat=2):
        if a == b == 0:
            continue
        leaper = LeaperSpec(a, b)
        for k in range(1, 30):
            v = classify(leaper, k)
            assert v.parity_class_sizes == (2 ** (k - 1), 2 ** (k - 1))
            if v.status is Status.INFEASIBLE_PARITY:
                assert (a + b) % 2 == 0
            if v.status is Status.INFEASIBLE_NO_MOVE:
                assert leaper.L > k
            if v.status is Status.INFEASIBLE_TWO_CYCLE:
                assert leaper.L == k and k > 1


def test_even_rules_stay_in_start_parity_class_general_grids():
    for n, k in [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2)]:
        for L in range(2, 3 * (n - 1) ** 2 + 1):
            found = enumerate_rules(L, n - 1, k)
            if not found or sum(found[0].deltas) % 2:
                continue
            moves = np.concatenate([signed_moves(r, k) for r in found])
            hit = reachable(n, k, moves)
            assert np.all(hit.sum(axis=1) % 2 == 0), (n, k, L)
            assert len(hit) <= parity_class_sizes(n, k)[0]


@pytest.mark.parametrize("k", range(1, 7))
def test_classify_never_searchable_when_search_refutes(k):
    for a, b in itertools.product(range(4), repeat=2):
        if a == b == 0:
            continue
        leaper = LeaperSpec(a, b)
        verdict = classify(leaper, k)
        outcome = find_tours(SearchConfig(k, leaper.L, node_limit=10**7))
        assert outcome.verdict is not Verdict.LIMIT_REACHED
        if outcome.verdict is Verdict.NO_TOUR_EXISTS:
            assert verdict.status.infeasible, (a, b, k)
        else:
            assert not verdict.status.infeasible, (a, b, k)


def test_known_tour_table_is_backed_by_search():
    # every table entry starts with a tour the engine can produce itself
    for L, k in KNOWN_TOURS.items():
        outcome = find_tours(SearchConfig(k, L))
        assert outcome.verdict is Verdict.FOUND, (L, k)
    # the knight bound is the smallest dimension with a closed tour
    assert find_tours(SearchConfig(5, 5)).verdict is Verdict.NO_TOUR_EXISTS
    assert classify(LEAPERS["knight"], 6).status is Status.KNOWN_TOUR


def test_open_mode_is_a_separate_question():
    # a parity-odd leaper with L < k may also have open tours; classify does not claim either way
    assert find_tours(SearchConfig(6, 5, mode=Closure.OPEN)).verdict is Verdict.FOUND
