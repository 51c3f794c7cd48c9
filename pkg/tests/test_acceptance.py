"""Acceptance suite.

One test per acceptance criterion; each prints a single
``[ACCEPTANCE] <name>: PASS|FAIL`` line (run with ``-s`` or ``-rA`` to
see them) and enforces the stated tolerances and time budgets.
"""

import collections
import json
import random
import threading
import time
import urllib.request
import xml.etree.ElementTree as ET

from pedvis.analytics import (
    isolated_burden,
    lowest_common_ancestors,
    suicide_lineages,
)
from pedvis.config import AppConfig
from pedvis.core import Person, Sex, VitalStatus, build_graph, DiagnosisRecord
from pedvis.glyphs import build_dotplots, sectors_for
from pedvis.ingest import parse_dataset, serialize_dataset
from pedvis.layout import compute_layout, layout_json_str, leaf_count
from pedvis.render import render_compare, render_family
from pedvis.service import make_server

from generators import (
    oracle_ancestor_sets,
    oracle_lca_given,
    random_dataset_text,
    random_family_tree,
    random_pedigree,
)


def report(name: str, failures: list, detail: str = "") -> None:
    ok = not failures
    line = f"[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line + "; first failure: " + str(failures[0] if failures else "")


def test_lca_oracle_equivalence():
    failures = []
    start = time.perf_counter()
    for seed in range(100):
        rng = random.Random(seed)
        graph = build_graph(random_pedigree(rng, max_persons=200, family_id="FAM"))
        anc = oracle_ancestor_sets(graph.persons)
        ids = sorted(graph.persons)
        for _ in range(50):
            a, b = rng.choice(ids), rng.choice(ids)
            got = lowest_common_ancestors(graph, a, b)
            want = oracle_lca_given(anc, a, b)
            if got != want:
                failures.append(f"seed {seed}: lca({a},{b}) {sorted(got)} != {sorted(want)}")
    elapsed = time.perf_counter() - start
    if elapsed >= 30.0:
        failures.append(f"runtime {elapsed:.2f}s exceeds 30s budget")
    report(
        "lca-oracle-equivalence",
        failures,
        f"100 pedigrees x 50 pairs in {elapsed:.2f}s",
    )


def test_layout_invariant_suite():
    failures = []
    start = time.perf_counter()
    for seed in range(100):
        rng = random.Random(seed)
        graph = build_graph(
            random_family_tree(rng, max_depth=10, max_branching=5, family_id="T")
        )
        layout = compute_layout(graph)
        nodes = {n.unit_id: n for n in layout.nodes}

        children = collections.defaultdict(list)
        for a, b in layout.links:
            children[a].append(nodes[b])
        for parent_id, kids in children.items():
            parent = nodes[parent_id]
            kids.sort(key=lambda n: n.span[0])
            if abs(kids[0].span[0] - parent.span[0]) > 1e-9 or abs(
                kids[-1].span[1] - parent.span[1]
            ) > 1e-9:
                failures.append(f"seed {seed}: span union != parent span")
            for left, right in zip(kids, kids[1:]):
                if abs(left.span[1] - right.span[0]) > 1e-9:
                    failures.append(f"seed {seed}: gap between sibling spans")
            total = sum(leaf_count(graph, k.unit_id) for k in kids)
            parent_width = parent.span[1] - parent.span[0]
            for k in kids:
                expected = parent_width * leaf_count(graph, k.unit_id) / total
                if abs((k.span[1] - k.span[0]) - expected) > 1e-9:
                    failures.append(f"seed {seed}: proportionality off on {k.unit_id}")

        by_gen = {}
        for n in layout.nodes:
            by_gen.setdefault(n.generation, set()).add(n.radius)
        radii = [by_gen[g] for g in sorted(by_gen)]
        if any(len(rs) != 1 for rs in radii):
            failures.append(f"seed {seed}: unequal radii within a generation")
        flat = [next(iter(rs)) for rs in radii]
        if any(a >= b for a, b in zip(flat, flat[1:])):
            failures.append(f"seed {seed}: radii not strictly monotone")

        if layout_json_str(layout) != layout_json_str(compute_layout(graph)):
            failures.append(f"seed {seed}: JSON not byte-identical across runs")
    elapsed = time.perf_counter() - start
    if elapsed >= 10.0:
        failures.append(f"runtime {elapsed:.2f}s exceeds 10s budget")
    report("layout-invariant-suite", failures, f"100 trees in {elapsed:.2f}s")


def test_sector_geometry():
    failures = []
    for d in (1, 2, 16, 17):
        sectors = sectors_for([], d)
        if sectors[0].angle_start != 0.0 or sectors[-1].angle_end != 360.0:
            failures.append(f"D={d}: endpoints not exact")
        for a, b in zip(sectors, sectors[1:]):
            if a.angle_end != b.angle_start:
                failures.append(f"D={d}: boundary mismatch at {a.disease_index}")
        for i, s in enumerate(sectors):
            if s.angle_start != (i * 360.0) / d:
                failures.append(f"D={d}: sector {i} start off")
    if any(s.angle_end - s.angle_start != 22.5 for s in sectors_for([], 16)):
        failures.append("D=16: sector width != 22.5 degrees")
    report("sector-geometry", failures, "D in {1,2,16,17}")


def test_fixture_27251_suicide_chains(nine):
    failures = []
    chains = suicide_lineages(nine.families["27251"])
    if len(chains) != 2:
        failures.append(f"expected 2 chains, got {len(chains)}")
    for c in chains:
        if len(c.persons) != 2:
            failures.append(f"chain {c.persons} not length 2")
        if 0 not in c.shared_diagnoses:
            failures.append(f"chain {c.persons} lacks depression")
    report("fixture-27251-chains", failures, "2 length-2 chains with depression")


def test_fixture_149_isolated_burden(nine):
    failures = []
    findings = isolated_burden(nine.families["149"], min_diagnoses=5)
    if len(findings) != 1:
        failures.append(f"expected 1 finding, got {len(findings)}")
    else:
        f = findings[0]
        if f.diagnosis_count != 5:
            failures.append(f"diagnosis_count {f.diagnosis_count} != 5")
        if f.peer_alive_fraction != 1.0:
            failures.append(f"peer_alive_fraction {f.peer_alive_fraction} != 1.0")
        if f.context_alive_fraction != 1.0:
            failures.append(f"context_alive_fraction {f.context_alive_fraction} != 1.0")
    report("fixture-149-isolated-burden", failures, "one (5, 1.0, 1.0) finding")


def test_nine_family_api(nine):
    failures = []
    server = make_server(nine, AppConfig(), port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        host, port = server.server_address[:2]
        base = f"http://{host}:{port}"

        def get(path):
            with urllib.request.urlopen(base + path) as resp:
                return json.loads(resp.read())

        families = get("/api/families")
        if len(families) != 9:
            failures.append(f"/api/families returned {len(families)} entries")
        ids = [f["family_id"] for f in families]
        for left in ids:
            for right in ids:
                if left >= right:
                    continue
                doc = get(f"/api/compare?left={left}&right={right}")
                if doc["left"]["family_id"] != left or doc["right"]["family_id"] != right:
                    failures.append(f"compare {left}/{right}: wrong sides")
                if len(doc["dotplots"]) != 16:
                    failures.append(f"compare {left}/{right}: series count")
        series = get("/api/dotplots")
        total_dots = sum(len(s["dots"]) for s in series)
        total_records = sum(
            len(p.diagnoses) for g in nine.families.values() for p in g.persons.values()
        )
        if total_dots != total_records:
            failures.append(f"dot conservation {total_dots} != {total_records}")
    finally:
        server.shutdown()
        thread.join(timeout=5)
    report("nine-family-api", failures, "9 families, 36 compare pairs, dots conserved")


def test_ingest_round_trip():
    failures = []
    for seed in range(50):
        rng = random.Random(1000 + seed)
        text = random_dataset_text(rng)
        ds1 = parse_dataset(text)
        ds2 = parse_dataset(serialize_dataset(ds1))
        if ds1 != ds2:
            failures.append(f"seed {seed}: parse∘serialize∘parse changed the dataset")
    for seed in range(20):
        rng = random.Random(2000 + seed)
        text = random_dataset_text(rng)
        header, *rows = text.rstrip("\n").split("\n")
        rng.shuffle(rows)
        shuffled = header + "\n" + "".join(r + "\n" for r in rows)
        if parse_dataset(text) != parse_dataset(shuffled):
            failures.append(f"seed {seed}: row permutation changed the dataset")
    report("ingest-round-trip", failures, "50 round trips, 20 permutations")


def test_render_determinism(nine, repo_csv_path):
    failures = []
    golden_dir = repo_csv_path.parent.parent / "tests" / "golden"
    for family_id, graph in sorted(nine.families.items()):
        layout = compute_layout(graph)
        svg = render_family(layout)
        try:
            ET.fromstring(svg)
        except ET.ParseError as exc:
            failures.append(f"{family_id}: not well-formed XML: {exc}")
        if svg != render_family(compute_layout(graph)):
            failures.append(f"{family_id}: repeated render differs")
    left = compute_layout(nine.families["27251"])
    right = compute_layout(nine.families["68939"])
    series = build_dotplots(nine)
    compare = render_compare(left, right, series)
    try:
        ET.fromstring(compare)
    except ET.ParseError as exc:
        failures.append(f"compare: not well-formed XML: {exc}")
    if compare != render_compare(left, right, series):
        failures.append("compare: repeated render differs")
    for name, text in (
        ("family_149.svg", render_family(compute_layout(nine.families["149"]))),
        ("compare_27251_68939.svg", compare),
    ):
        frozen = (golden_dir / name).read_text()
        if frozen != text:
            failures.append(f"golden {name} drifted")
    report("render-determinism", failures, "9 singles + compare + 2 goldens")


def _synthetic_pedigree(target: int) -> list[Person]:
    """A clean couple tree of exactly ``target`` persons (target even)."""
    persons = [
        Person("F00000", "BIG", Sex.MALE, None, None, 80, VitalStatus.DECEASED, ()),
        Person("M00000", "BIG", Sex.FEMALE, None, None, 78, VitalStatus.ALIVE, ()),
    ]
    queue = collections.deque([("F00000", "M00000")])
    i = 0
    while len(persons) < target:
        father, mother = queue.popleft()
        for _ in range(3):
            if len(persons) >= target:
                break
            i += 1
            child_id = f"C{i:05d}"
            spouse_id = f"S{i:05d}"
            vital = VitalStatus.SUICIDE if i % 7 == 0 else VitalStatus.ALIVE
            diagnoses = (
                (DiagnosisRecord(0, 20), DiagnosisRecord(3, 25))
                if vital is VitalStatus.SUICIDE
                else ()
            )
            persons.append(
                Person(child_id, "BIG", Sex.MALE, mother, father, 40, vital, diagnoses)
            )
            persons.append(
                Person(
                    spouse_id, "BIG", Sex.FEMALE, None, None, 39, VitalStatus.ALIVE, ()
                )
            )
            queue.append((child_id, spouse_id))
    return persons


def test_performance_desk_scale(nine_csv_path):
    failures = []
    persons = _synthetic_pedigree(10_000)
    graph = build_graph(persons)
    start = time.perf_counter()
    layout = compute_layout(graph)
    layout_elapsed = time.perf_counter() - start
    placed = sum(len(n.glyphs) for n in layout.nodes)
    if placed != 10_000:
        failures.append(f"layout placed {placed} glyphs, expected 10000")
    if layout_elapsed >= 1.0:
        failures.append(f"10k layout took {layout_elapsed:.3f}s (budget 1s)")

    import subprocess
    import sys

    start = time.perf_counter()
    proc = subprocess.Popen(
        [sys.executable, "-m", "pedvis", "serve", str(nine_csv_path), "--port", "0"],
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
    )
    try:
        banner = json.loads(proc.stdout.readline())
        cold_start = time.perf_counter() - start
        with urllib.request.urlopen(
            f"http://127.0.0.1:{banner['port']}/healthz"
        ) as resp:
            if resp.read() != b"ok":
                failures.append("healthz did not answer ok")
        if cold_start >= 0.5:
            failures.append(f"service cold start {cold_start:.3f}s (budget 0.5s)")
    finally:
        proc.terminate()
        proc.wait(timeout=10)
    report(
        "performance-desk-scale",
        failures,
        f"10k layout {layout_elapsed * 1000:.0f}ms, cold start {cold_start * 1000:.0f}ms",
    )
