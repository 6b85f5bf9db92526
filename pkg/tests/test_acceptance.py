"""Acceptance gate: one test per criterion, each with its runtime bound.

A pass/fail line per criterion is printed in the terminal summary.
"""

import json
import os
import re
import subprocess
import sys
import time

import pytest

from stcrit import census
from stcrit.coalescence import build_c4_power
from stcrit.domination import gamma
from stcrit.formats import parse_graph6
from stcrit.graph import circulant, cycle, harary, path
from stcrit.iso import is_isomorphic
from stcrit.partition import verify_partition
from stcrit.verify import (
    sweep_gamma_oracle, sweep_identification, sweep_structure, sweep_partition_merge,
    sweep_partition_structure, sweep_set_coalescence, sweep_vertex_coalescence_exhaustive,
    sweep_vertex_coalescence_random,
)


class Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def test_criterion_01_path_and_cycle_formulas():
    with Clock() as c:
        for n in range(1, 31):
            assert gamma(path(n)).gamma == -(-n // 3)
        for n in range(3, 31):
            assert gamma(cycle(n)).gamma == -(-n // 3)
    assert c.seconds < 1


def test_criterion_02_solver_matches_brute_force():
    with Clock() as c:
        rep = sweep_gamma_oracle(n_max=7, trials=200, seed=0, n_lo=8, n_hi=12)
    assert rep.counts == {"exhaustive": 996, "random": 200}
    assert rep.violations == []
    assert c.seconds < 120


def test_criterion_03_no_graph_splits_into_2_3_or_5_parts():
    with Clock() as c:
        census.clear_generation_cache()  # time generation too
        rep = census.check_l_nonexistence(7, {2, 3, 5})
    assert rep.examined == 996
    assert rep.verdict == "pass" and rep.hits == []
    assert c.seconds < 600


def test_criterion_04_c4_is_the_only_4_part_graph():
    with Clock() as c:
        census.clear_generation_cache()  # time generation too
        rep = census.check_c4_uniqueness(8)
    assert rep.examined == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117
    assert rep.verdict == "pass" and len(rep.hits) == 1
    assert is_isomorphic(parse_graph6(rep.hits[0]["g6"]), cycle(4))
    assert c.seconds < 1800


@pytest.mark.parametrize("l", [1, 4, 6, 7, 8, 9, 10, 11])
def test_criterion_05_family_constructions(l):
    with Clock() as c:
        rep = census.verify_family_sufficiency(l)
    finding = rep.hits[0]["finding"]
    assert rep.verdict == "pass" and finding["verified"] and len(finding["parts"]) == l
    G = parse_graph6(rep.hits[0]["g6"])
    assert verify_partition(G, [sum(1 << v for v in p) for p in finding["parts"]], oracle="brute")
    assert c.seconds < 300


def test_criterion_06_c6_members():
    with Clock() as c:
        rep = census.check_c6_members()
    assert rep.verdict == "pass"
    names = {h["finding"]["name"]: h["finding"] for h in rep.hits}
    for name, G in (("C4.C4", build_c4_power(2).graph), ("harary(4,6)", harary(4, 6)),
                    ("circulant(12,{1,5})", circulant(12, (1, 5)))):
        f = names[name]
        assert f["member"] and f["verified"] and len(f["parts"]) == 6
        assert sorted(v for p in f["parts"] for v in p) == list(range(G.n))
    assert c.seconds < 120


def test_criterion_07_structural_property_suites():
    with Clock() as c:
        rep = sweep_structure(n_max=6, trials=60, seed=0, spot_n=7)
    assert rep.violations == []
    assert rep.trials == 143 + 60
    for key in ("2-packing", "pendant-neighbour", "mds-avoids-neighbourhood", "deletion-lower-bound",
                "subset-closure", "disjoint-parts", "outside-neighbour", "path-degree", "single-hit", "trail-closes"):
        assert rep.counts.get(key, 0) > 0, key
    assert c.seconds < 600


def test_criterion_08_coalescence_results():
    with Clock() as c:
        reps = [
            sweep_vertex_coalescence_random(100, seed=0),
            sweep_set_coalescence(100, seed=0),
            sweep_vertex_coalescence_exhaustive(5),
            sweep_partition_merge(50, seed=0),
            sweep_identification(100, seed=0),
        ]
    for rep in reps:
        assert rep.violations == [], rep.check
    assert reps[2].counts["critical-both"] > 0
    assert any(k.endswith("-lhs") for k in reps[3].counts) and any(k.endswith("nolhs") for k in reps[3].counts)
    assert set(reps[4].counts) == {"equal", "drop"}
    assert c.seconds < 300


def test_criterion_09_part_counts_form_an_interval():
    with Clock() as c:
        rep = sweep_partition_structure(6)
    assert rep.trials == 143 and rep.violations == []
    assert c.seconds < 300


def test_criterion_10_comb_products():
    with Clock() as c:
        rep = census.check_vizing_comb(8, 6)
    assert rep.verdict == "pass" and rep.hits == [] and rep.examined > 0
    assert c.seconds < 600


def test_criterion_11_h48_candidates():
    with Clock() as c:
        census.clear_generation_cache()  # time generation too
        rep = census.reconstruct_h48()
    assert rep.hits, "no 8-vertex vertex-critical connected graph found"
    assert rep.verdict == "pass"
    std = census.standard_harary_48()
    assert not any(is_isomorphic(parse_graph6(h["g6"]), std) for h in rep.hits)
    assert all(h["g6"][0] == "G" for h in rep.hits)  # 8 vertices
    assert c.seconds < 600


SEEDED_COMMANDS = [
    ["gamma", "--spec", "circulant:12:1,5"],
    ["mds", "--spec", "cycle:6"],
    ["critical", "--spec", "cycle:7"],
    ["stcrit", "--spec", "c4-power:2"],
    ["partition", "--spec", "circulant:12:1,5", "--parts", "6"],
    ["sequences", "--spec", "c4-power:2"],
    ["coalesce", "--spec", "cycle:4", "--other-spec", "harary:4:6", "--at", "0:0"],
    ["identify", "--spec", "cycle:6", "--at", "0:3"],
    ["gen", "circulant:12:1,5", "--format", "json"],
    ["census", "--check", "l-nonexistence", "--ls", "2,3,5", "--max-n", "6", "--workers", "2"],
    ["census", "--check", "c6-members"],
    ["census", "--check", "family", "--l", "10"],
    ["census", "--check", "multi-sequence", "--max-n", "7"],
    ["verify", "gamma-oracle", "--trials", "20", "--max-n", "5", "--seed", "0"],
    ["verify", "structural-properties", "--trials", "5", "--max-n", "5", "--seed", "1"],
    ["verify", "coalescence-bounds", "--trials", "30", "--seed", "2"],
    ["verify", "coalescence-criticality", "--max-n", "4"],
    ["verify", "set-coalescence", "--trials", "30", "--seed", "3"],
    ["verify", "partition-merge", "--trials", "15", "--seed", "4"],
    ["verify", "identification", "--trials", "30", "--seed", "5"],
    ["verify", "partition-structure", "--max-n", "5"],
]


def _cli(argv, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    res = subprocess.run([sys.executable, "-m", "stcrit", *argv], capture_output=True, text=True, env=env)
    assert res.returncode == 0, (argv, res.stderr)
    json.loads(res.stdout)
    return re.sub(r'\n *"elapsed_ms": [^\n]*', "", res.stdout)


def test_criterion_12_seeded_commands_are_deterministic():
    for argv in SEEDED_COMMANDS:
        assert _cli(argv, 1) == _cli(argv, 2), argv
