"""Assembly of the JSON analysis report (schema version 1).

The report is deterministic by construction: keys are sorted at dump time,
vertex collections are sorted before emission, and timing values are only
filled in when explicitly requested, so repeated runs on the same input are
byte-identical.
"""

from __future__ import annotations

import importlib.resources
import json
import time
from typing import Any

from .complexes import SimplicialComplex, clique_complex, euler_characteristic, f_vector
from .coxeter import (
    Condition3Result,
    LemmaKeyReport,
    NerveSystem,
    PDVerdict,
    condition3_vanishing,
    is_finite_group,
    is_irreducible,
    is_virtual_pd,
    join_decomposition,
    lemma_key_crosscheck,
)
from .formats import emit_graph6
from .graphs import Graph
from .homology import AbelianGroup, GradedGroups, reduced_homology
from .manifolds import (
    ManifoldVerdict,
    SphereVerdict,
    detect_dimension,
    is_generalized_homology_sphere,
    is_homology_manifold,
)
from .reconstruction import (
    NO_CERTIFICATE_CAVEAT,
    VERDICT_NONE,
    Certificate,
    certify_reconstructible,
)

__all__ = ["SCHEMA_VERSION", "analysis_report", "report_json", "report_schema"]

SCHEMA_VERSION = 1


def report_schema() -> dict[str, Any]:
    """Load the JSON Schema that analysis_report output conforms to."""
    ref = importlib.resources.files("flagrecon").joinpath(
        f"data/report_schema_v{SCHEMA_VERSION}.json"
    )
    return json.loads(ref.read_text(encoding="utf-8"))

_THEOREM_PATHS = {
    "theorem_2": "flag complex is a homology manifold",
    "theorem_1": "group is a virtual Poincare duality group",
    "none": "no implemented criterion applies",
}


def _group_payload(g: AbelianGroup) -> dict[str, Any]:
    return {"rank": g.rank, "torsion": list(g.torsion)}


def _graded_payload(gg: GradedGroups, full_range: bool = False) -> list[dict[str, Any]]:
    if full_range:
        degrees = gg.degrees()
    else:
        degrees = sorted(gg.nontrivial())
    return [
        {"degree": d, "rank": gg.group(d).rank, "torsion": list(gg.group(d).torsion)}
        for d in degrees
    ]


def _manifold_payload(v: ManifoldVerdict | None) -> dict[str, Any] | None:
    if v is None:
        return None
    payload: dict[str, Any] = {"is_manifold": v.is_manifold, "dimension": v.dimension}
    if v.witnesses:
        w = v.witnesses[0]
        payload["witness"] = {
            "simplex": list(w.simplex),
            "local_homology": _graded_payload(w.local_homology),
            "detail": w.detail,
        }
    else:
        payload["witness"] = None
    payload["verified_simplices"] = (
        {str(k): c for k, c in sorted(v.verified.items())} if v.verified else None
    )
    return payload


def _sphere_payload(v: SphereVerdict | None) -> dict[str, Any] | None:
    if v is None:
        return None
    return {
        "is_sphere": v.is_sphere,
        "dimension": v.dimension,
        "detail": v.detail or None,
    }


def _pd_payload(v: PDVerdict) -> dict[str, Any]:
    return {
        "is_vpd": v.is_vpd,
        "dimension": v.dimension,
        "core": sorted(v.core),
        "spherical_factor": sorted(v.spherical_factor),
        "core_sphere": _sphere_payload(v.core_sphere),
        "degenerate": v.degenerate,
    }


def _condition3_payload(r: Condition3Result) -> dict[str, Any]:
    payload: dict[str, Any] = {"holds": r.holds, "subsets_checked": r.subsets_checked}
    if r.witness is not None:
        payload["witness"] = {
            "subset": list(r.witness.subset),
            "degree": r.witness.degree,
            "group": _group_payload(r.witness.group),
        }
    else:
        payload["witness"] = None
    return payload


def _lemma_key_payload(r: LemmaKeyReport | None, reason: str | None) -> dict[str, Any]:
    if r is None:
        return {"applicable": False, "reason": reason}
    return {
        "applicable": True,
        "statements": {
            "virtual_pd": r.virtual_pd.is_vpd,
            "homology_sphere": r.sphere.is_sphere,
            "cohomology_vanishing": r.vanishing.holds,
        },
        "consistent": r.consistent,
    }


def _certificate_payload(c: Certificate | None, note: str | None) -> dict[str, Any]:
    if c is None:
        return {
            "verdict": VERDICT_NONE,
            "dimension": None,
            "theorem_path": _THEOREM_PATHS[VERDICT_NONE],
            "caveat": f"{NO_CERTIFICATE_CAVEAT}; {note}" if note else NO_CERTIFICATE_CAVEAT,
        }
    return {
        "verdict": c.verdict,
        "dimension": c.dimension,
        "theorem_path": _THEOREM_PATHS[c.verdict],
        "caveat": c.caveat,
    }


def analysis_report(
    g: Graph,
    *,
    source_format: str,
    max_dim: int | None = None,
    with_timings: bool = False,
) -> dict[str, Any]:
    """Run the full pipeline on one graph and collect a schema-v1 report.

    Raises on malformed input (e.g. a clique past ``max_dim``); every
    analysis outcome short of that, including "no certificate", is data in
    the report rather than an error.
    """
    timings: dict[str, float] = {}

    def staged(name: str, fn):
        start = time.perf_counter()
        result = fn()
        timings[name] = round((time.perf_counter() - start) * 1000.0, 3)
        return result

    nerve = staged("clique_complex", lambda: clique_complex(g, max_dim))
    dim = detect_dimension(nerve)
    homology = staged("homology", lambda: reduced_homology(nerve))

    def manifold_section():
        if dim < 0:
            return None, None
        mv = is_homology_manifold(nerve, dim)
        sv = is_generalized_homology_sphere(nerve, dim)
        return mv, sv

    manifold, sphere = staged("manifold", manifold_section)

    def coxeter_section():
        if g.vertex_count == 0:
            return None
        ns = NerveSystem(g, nerve)
        finite = is_finite_group(ns)
        irreducible = is_irreducible(ns)
        t0, t1 = join_decomposition(ns)
        pd = is_virtual_pd(ns)
        cond3 = condition3_vanishing(ns)
        if irreducible and not finite:
            lemma, reason = lemma_key_crosscheck(ns), None
        elif not irreducible:
            lemma, reason = None, "system is reducible"
        else:
            lemma, reason = None, "group is finite"
        return {
            "is_finite": finite,
            "is_irreducible": irreducible,
            "join_decomposition": {"core": sorted(t0), "spherical_factor": sorted(t1)},
            "virtual_pd": _pd_payload(pd),
            "condition3": _condition3_payload(cond3),
            "lemma_key": _lemma_key_payload(lemma, reason),
        }

    coxeter = staged("coxeter", coxeter_section)

    def certificate_section():
        if g.vertex_count < 3:
            return _certificate_payload(None, "graphs below 3 vertices are not certified")
        return _certificate_payload(certify_reconstructible(g, max_dim), None)

    certificate = staged("certificate", certificate_section)

    return {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "format": source_format,
            "vertex_count": g.vertex_count,
            "edge_count": g.edge_count,
            "graph6": emit_graph6(g) if g.vertex_count <= 62 else None,
        },
        "flag_complex": {
            "dimension": dim,
            "f_vector": list(f_vector(nerve)),
            "euler_characteristic": euler_characteristic(nerve),
        },
        "homology": _graded_payload(homology, full_range=True),
        "manifold": _manifold_payload(manifold),
        "sphere": _sphere_payload(sphere),
        "coxeter": coxeter,
        "certificate": certificate,
        "timings": timings if with_timings else None,
    }


def report_json(report: dict[str, Any]) -> str:
    """Canonical serialisation: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
