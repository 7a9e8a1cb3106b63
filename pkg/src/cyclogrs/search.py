"""Searches over cyclotomic twist polynomials (alg1) and coset-punctured
evaluation sets (alg2), plus shorten/puncture derivation chains.

For every candidate the pipeline is C = GRS_k(S, v), D = trace(C),
E = dual(D) = C^perp ∩ F_p^n.  E inherits d >= k + 1 from the MDS code
C^perp.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .bkt import IMPROVES, TIES, BktTable, verdict
from .bound import mainbound, sfsc_dims_all_k
from .codes import INHERITED, GrsSpec, LinearCode, dual, grs, puncture, shorten, trace_code
from .cosets import coset_unions, union_elements
from .galois import FieldSpec, format_field, parse_field
from .ring import PolyR, format_poly_dense, zero_set

DESIGN_DUAL = "design (MDS dual)"
RECORDED = (IMPROVES, TIES)


@dataclass
class Step:
    op: str  # "shorten" | "puncture"
    coords: list[int]

    def __post_init__(self):
        if self.op not in ("shorten", "puncture"):
            raise ValueError(f"unknown derivation step {self.op!r}")
        self.coords = sorted({int(c) for c in self.coords}, reverse=True)

    def label(self) -> str:
        name = "ShortenCode" if self.op == "shorten" else "PunctureCode"
        return f"{name}({{{','.join(map(str, self.coords))}}})"


@dataclass
class SearchHit:
    field: str
    p: int
    m: int
    kind: str  # alg1 | alg2 | derived
    base: str  # alg1 | alg2: construction the chain starts from
    cosets: list[int]
    twist: str | None
    k: int
    n: int
    dim: int
    d_lb: int
    provenance: str
    best_known: int | None
    verdict: str
    bound: dict | None = None
    chain: list[Step] = dc_field(default_factory=list)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.n, self.dim, self.d_lb

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "SearchHit":
        d = dict(d)
        d["chain"] = [Step(s["op"], s["coords"]) for s in d.get("chain", [])]
        return cls(**d)


# --- candidate construction ------------------------------------------------

def candidate(field: FieldSpec, reps: Sequence[int], alg: str) -> tuple[GrsSpec, frozenset[int], PolyR | None]:
    """The length-n evaluation data (k left at 0), zero set, and twist polynomial."""
    support = union_elements(field, reps)
    if alg == "alg1":
        g = PolyR.from_support(field, support)
        return GrsSpec.from_twist(g, 0), zero_set(g), g
    if alg == "alg2":
        Z = frozenset(support)
        exps = tuple(j for j in range(field.N) if j not in Z)
        if not exps:
            raise ValueError("removing these cosets leaves no evaluation points")
        return GrsSpec(field, exps, (1,) * len(exps), 0), Z, None
    raise ValueError(f"unknown algorithm {alg!r}")


def base_code(field: FieldSpec, reps: Sequence[int], alg: str, k: int) -> LinearCode:
    """E = dual(trace(GRS_k(S, v))) with d_lb = k + 1."""
    spec, _, _ = candidate(field, reps, alg)
    spec = dataclasses.replace(spec, k=k)
    return dual(trace_code(grs(spec))).with_distance(k + 1, DESIGN_DUAL)


def apply_step(code: LinearCode, step: Step) -> LinearCode:
    return shorten(code, step.coords) if step.op == "shorten" else puncture(code, step.coords)


def rebuild(hit: SearchHit) -> LinearCode:
    """Reconstruct the code a hit describes from its recipe."""
    field = parse_field(hit.field)
    code = base_code(field, hit.cosets, hit.base, hit.k)
    for step in hit.chain:
        code = apply_step(code, step)
    return code


# --- searches ---------------------------------------------------------------

def _search_union(field: FieldSpec, reps: tuple[int, ...], alg: str,
                  k_range: tuple[int, int | None], table: BktTable,
                  record: tuple[str, ...]) -> list[SearchHit]:
    spec, Z, g = candidate(field, reps, alg)
    n = spec.n
    k_lo, k_hi = k_range
    k_hi = n if k_hi is None else min(k_hi, n)
    if k_hi < max(k_lo, 1):
        return []
    dims = sfsc_dims_all_k(field, spec, k_hi)
    twist = format_poly_dense(g) if g is not None else None
    hits = []
    for k in range(max(k_lo, 1), k_hi + 1):
        dim, d_lb = dims[k], k + 1
        v = verdict(table, n, dim, d_lb)
        if v not in record:
            continue
        rep = mainbound(field, Z, k, orientation="dual")
        rep = dataclasses.replace(rep, exact_dim=dim, kernel_dim=dim - n + field.m * k,
                                  strict=dim > rep.bound)
        hits.append(SearchHit(format_field(field), field.p, field.m, alg, alg, list(reps),
                              twist, k, n, dim, d_lb, DESIGN_DUAL, table.lookup(n, dim), v,
                              rep.to_dict()))
    return hits


def _search_star(args):
    return _search_union(*args)


def run_search(field: FieldSpec, alg: str, unions: Iterable[tuple[int, ...]],
               k_range: tuple[int, int | None], table: BktTable, jobs: int = 1,
               record: tuple[str, ...] = RECORDED) -> list[SearchHit]:
    """Evaluate every (union, k) work item; output order is canonical regardless of jobs."""
    if table.p != field.p:
        raise ValueError(f"table is over F_{table.p} but the field has characteristic {field.p}")
    work = [(field, tuple(u), alg, k_range, table, record) for u in unions]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_star, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        parts = [_search_star(w) for w in work]
    return [h for part in parts for h in part]


def alg1_search(field: FieldSpec, max_parts: int, k_range: tuple[int, int | None],
                table: BktTable, include_zero: bool = False, jobs: int = 1) -> list[SearchHit]:
    """Twist g = sum of x^i over a union of 1..max_parts cosets."""
    return run_search(field, "alg1", coset_unions(field, max_parts, include_zero), k_range, table, jobs)


def alg2_search(field: FieldSpec, max_parts: int, k_range: tuple[int, int | None],
                table: BktTable, include_zero: bool = False, jobs: int = 1) -> list[SearchHit]:
    """Evaluation set = nonzero points minus a union of cosets, twist all ones."""
    return run_search(field, "alg2", coset_unions(field, max_parts, include_zero), k_range, table, jobs)


def derive_chain(hit: SearchHit, steps: Sequence[Step], table: BktTable) -> list[SearchHit]:
    """The input hit followed by one hit per applied step.

    Dimensions are recomputed exactly at every stage; d_lb follows the
    puncture (d - |S|) and shorten (unchanged) rules.
    """
    out = [hit]
    if not steps:
        return out
    code = rebuild(hit)
    chain = list(hit.chain)
    for step in steps:
        code = apply_step(code, step)
        chain = chain + [Step(step.op, step.coords)]
        n, dim, d_lb = code.params
        out.append(dataclasses.replace(
            hit, kind="derived", n=n, dim=dim, d_lb=d_lb, provenance=INHERITED,
            best_known=table.lookup(n, dim), verdict=verdict(table, n, dim, d_lb),
            bound=None, chain=chain))
    return out


def parse_steps(text: str) -> list[Step]:
    """``S:240,239;P:238`` -> [shorten {240,239}, puncture {238}]."""
    steps = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        op, _, coords = part.partition(":")
        op = {"s": "shorten", "shorten": "shorten", "p": "puncture", "puncture": "puncture"}.get(op.strip().lower())
        if op is None or not coords.strip():
            raise ValueError(f"cannot parse derivation step {part!r}")
        steps.append(Step(op, [int(c) for c in coords.split(",")]))
    return steps


def hits_to_json(hits: Sequence[SearchHit]) -> str:
    import json

    return json.dumps([h.to_dict() for h in hits], indent=2) + "\n"


def generator_rows(code: LinearCode) -> np.ndarray:
    return code.basis
