"""Exhaustive enumeration of small connected regular multigraphs.

Labelled graphs are generated row by row over the upper triangle, with each
row required to sum to exactly k.  Two symmetry-breaking rules keep the
labelled count small without losing any isomorphism class:

* vertices after the current row that have identical columns in all earlier
  rows are interchangeable, so their entries in the current row must be
  non-increasing in label order;
* a vertex with no edge to earlier vertices when its row starts means the
  earlier vertices form a closed component, so the branch is pruned
  (vertex 0 is exempt).

Every labelled graph is then reduced to its canonical form and duplicates are
dropped.  The result is the set of connected k-regular multigraphs, one per
isomorphism class, in sorted canonical order.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .bounds import three_ev_bound
from .canon import canonical_listing, listing_to_matrix
from .errors import CapExceeded
from .multigraph import Multigraph, from_matrix, is_connected, regularity
from .spectral import (
    ConditionReport,
    ThreeEigCertificate,
    certify_three_eigenvalues,
    check_extremal_conditions,
)

log = logging.getLogger(__name__)

DEFAULT_N_CAP = 10
DEFAULT_K_CAP = 4
HARD_N_CAP = 12
HARD_K_CAP = 5


def n_cap_from_env() -> int:
    raw = os.environ.get("SPECTRA_CAP_N")
    return int(raw) if raw else DEFAULT_N_CAP


@dataclass(frozen=True)
class SearchSpec:
    k: int
    n_min: int = 1
    n_max: int = 8
    allow_loops: bool = False
    allow_multi: bool = False
    max_entry: int | None = None
    n_cap: int = field(default_factory=n_cap_from_env)
    k_cap: int = DEFAULT_K_CAP

    @property
    def entry_cap(self) -> int:
        cap = self.k if self.max_entry is None else min(self.max_entry, self.k)
        return cap if self.allow_multi else min(cap, 1)

    @property
    def loop_cap(self) -> int:
        if not self.allow_loops:
            return 0
        return self.k if self.max_entry is None else min(self.max_entry, self.k)

    def validate(self):
        if self.k < 1:
            raise CapExceeded("k must be >= 1")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise CapExceeded(f"bad order range {self.n_min}..{self.n_max}")
        if self.n_max > min(self.n_cap, HARD_N_CAP):
            raise CapExceeded(f"n_max {self.n_max} exceeds cap {min(self.n_cap, HARD_N_CAP)}")
        if self.k > min(self.k_cap, HARD_K_CAP):
            raise CapExceeded(f"k {self.k} exceeds cap {min(self.k_cap, HARD_K_CAP)}")

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "allow_loops": self.allow_loops,
            "allow_multi": self.allow_multi,
            "max_entry": self.max_entry,
        }


# ---------------------------------------------------------------------------
# labelled generation
# ---------------------------------------------------------------------------

def first_rows(spec: SearchSpec, n: int) -> list[tuple[int, ...]]:
    """All admissible first rows; each is an independent partition of the search tree."""
    return sorted({tuple(adj[0]) for adj in _generate(spec, n, stop_after_row=0)})


def generate_labelled(spec: SearchSpec, n: int, first_row: tuple[int, ...] | None = None):
    """Yield labelled adjacency matrices (lists of lists, shared: copy before keeping)."""
    return _generate(spec, n, first_row=first_row)


def _generate(spec: SearchSpec, n: int, first_row=None, stop_after_row: int | None = None):
    k = spec.k
    ecap = spec.entry_cap
    lcap = spec.loop_cap
    adj = [[0] * n for _ in range(n)]
    rowsum = [0] * n

    def feasible_after(i: int) -> bool:
        # loose necessary conditions on the deficits of the remaining rows
        deficits = [k - rowsum[j] for j in range(i + 1, n)]
        if not deficits:
            return True
        if lcap == 0 and sum(deficits) % 2:
            return False
        total = sum(min(ecap, d) for d in deficits)
        return all(d <= lcap + total - min(ecap, d) for d in deficits)

    def fill(i, j, rem, prev_same, suffix):
        if j == n:
            if rem == 0 and feasible_after(i):
                if stop_after_row == i:
                    yield adj
                else:
                    yield from row(i + 1)
            return
        cap = min(ecap, k - rowsum[j], rem)
        p = prev_same[j]
        if p >= 0:
            cap = min(cap, adj[i][p])
        if i == 0 and first_row is not None:
            choices = [first_row[j]] if first_row[j] <= cap else []
        else:
            choices = range(cap, -1, -1)
        for x in choices:
            if rem - x > suffix[j + 1]:
                break
            adj[i][j] = adj[j][i] = x
            rowsum[j] += x
            yield from fill(i, j + 1, rem - x, prev_same, suffix)
            rowsum[j] -= x
        adj[i][j] = adj[j][i] = 0

    def row(i):
        if i == n:
            yield adj
            return
        if i > 0 and rowsum[i] == 0:
            return
        rem0 = k - rowsum[i]
        prev_same = [-1] * n
        last_seen: dict[tuple, int] = {}
        for j in range(i + 1, n):
            key = tuple(adj[r][j] for r in range(i))
            prev_same[j] = last_seen.get(key, -1)
            last_seen[key] = j
        suffix = [0] * (n + 1)
        for j in range(n - 1, i, -1):
            suffix[j] = suffix[j + 1] + min(ecap, k - rowsum[j])
        if i == 0 and first_row is not None:
            loop_choices = [first_row[0]] if first_row[0] <= min(lcap, rem0) else []
        else:
            loop_choices = range(min(lcap, rem0), -1, -1)
        for loops in loop_choices:
            if rem0 - loops > suffix[i + 1]:
                break
            adj[i][i] = loops
            rowsum[i] += loops
            yield from fill(i, i + 1, rem0 - loops, prev_same, suffix)
            rowsum[i] -= loops
        adj[i][i] = 0

    yield from row(0)


# ---------------------------------------------------------------------------
# isomorphism classes
# ---------------------------------------------------------------------------

def _partition_forms(args) -> set:
    spec, n, first = args
    forms = set()
    for adj in generate_labelled(spec, n, first):
        forms.add(canonical_listing(adj))
    return forms


def canonical_forms(spec: SearchSpec, n: int, jobs: int = 1, done: dict | None = None,
                    on_partition=None) -> list[tuple[int, ...]]:
    """Sorted canonical listings of all connected k-regular multigraphs of order n."""
    parts = first_rows(spec, n)
    forms: set = set()
    todo = []
    for first in parts:
        key = json.dumps([n, list(first)])
        if done is not None and key in done:
            forms.update(tuple(f) for f in done[key])
        else:
            todo.append((key, first))
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_partition_forms, [(spec, n, f) for _, f in todo])
            for (key, _), part in zip(todo, results):
                forms |= part
                if on_partition:
                    on_partition(key, part)
    else:
        for key, first in todo:
            part = _partition_forms((spec, n, first))
            forms |= part
            if on_partition:
                on_partition(key, part)
    return sorted(forms)


def enumerate_graphs(spec: SearchSpec, jobs: int = 1) -> Iterator[Multigraph]:
    """Each connected k-regular multigraph in range exactly once, up to isomorphism."""
    spec.validate()
    for n in range(spec.n_min, spec.n_max + 1):
        for form in canonical_forms(spec, n, jobs):
            g = from_matrix(listing_to_matrix(n, form))
            _assert_emitted(spec, g)
            yield g


def _assert_emitted(spec: SearchSpec, g: Multigraph):
    if regularity(g).regular_k != spec.k or not is_connected(g):
        raise AssertionError(f"enumerator emitted a bad graph {g}")
    if max(max(r) for r in g.adj) > max(spec.entry_cap, spec.loop_cap):
        raise AssertionError(f"enumerator exceeded entry caps: {g}")


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass
class SearchHit:
    graph: Multigraph
    certificate: ThreeEigCertificate | None
    within_bound: bool
    extremal: ConditionReport | None

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def three_ev(self) -> bool:
        return self.certificate is not None

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "adj": [list(r) for r in self.graph.adj],
            "certificate": self.certificate.to_json() if self.certificate else None,
            "within_three_ev_bound": self.within_bound,
            "has_multi_edge": self.graph.has_multi_edge,
            "extremal_conditions": self.extremal.to_json() if self.extremal else None,
        }


@dataclass
class SearchResult:
    spec: SearchSpec
    graphs: list[SearchHit]

    @property
    def hits(self) -> list[SearchHit]:
        return [h for h in self.graphs if h.three_ev]

    def count_by_order(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for h in self.graphs:
            out[h.order] = out.get(h.order, 0) + 1
        return out


def annotate(g: Multigraph, k: int) -> SearchHit:
    cert = certify_three_eigenvalues(g)
    bound = three_ev_bound(k).value
    extremal = None
    q = k - 1
    if cert is not None and g.n == q * q + q + 1:
        extremal = check_extremal_conditions(g, cert)
    return SearchHit(g, cert, g.n <= bound, extremal)


def classify_three_ev(spec: SearchSpec, jobs: int = 1) -> SearchResult:
    return SearchResult(spec, [annotate(g, spec.k) for g in enumerate_graphs(spec, jobs)])


def no_multi_edge_at_extremal_order(result: SearchResult) -> bool:
    """No three-eigenvalue graph of order >= q^2+q+1 has a multiple edge."""
    q = result.spec.k - 1
    return not any(
        h.graph.has_multi_edge for h in result.hits if h.order >= q * q + q + 1
    )


verify_lemma32 = no_multi_edge_at_extremal_order  # name fixed by the public API


# ---------------------------------------------------------------------------
# result files
# ---------------------------------------------------------------------------

def run_search(spec: SearchSpec, output: Path, checkpoint: Path | None = None,
               jobs: int = 1, resume: bool = False) -> SearchResult:
    """Classify and write one JSON line per canonical graph.

    With a checkpoint file, the canonical forms of every finished first-row
    partition are recorded so an interrupted run can resume.
    """
    spec.validate()
    done: dict = {}
    if checkpoint is not None and resume and checkpoint.exists():
        done = json.loads(checkpoint.read_text()).get("partitions", {})

    def record(key, part):
        if checkpoint is None:
            return
        done[key] = sorted(list(f) for f in part)
        tmp = checkpoint.with_suffix(checkpoint.suffix + ".tmp")
        tmp.write_text(json.dumps({"spec": spec.to_json(), "partitions": done}))
        tmp.replace(checkpoint)

    hits = []
    for n in range(spec.n_min, spec.n_max + 1):
        for form in canonical_forms(spec, n, jobs, done, record):
            g = from_matrix(listing_to_matrix(n, form))
            _assert_emitted(spec, g)
            hits.append(annotate(g, spec.k))
        log.info("order %d done", n)
    with open(output, "w") as fh:
        for h in hits:
            fh.write(json.dumps(h.to_json(), sort_keys=True) + "\n")
    return SearchResult(spec, hits)
