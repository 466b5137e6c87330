"""JSON analysis report: every stage of the pipeline for one parameter point."""

from __future__ import annotations

import json
import math
from enum import Enum
from fractions import Fraction

import numpy as np

from pzfield import bifurcation, darboux, equilibria, galois, infinity
from pzfield.errors import LineOfEquilibria, RhoZero
from pzfield.expression import render
from pzfield.model import Family, LinearFamily, Params, reduce_to_linear, full_family

SCHEMA_VERSION = 1


def jsonable(value):
    """Finite floats, {"re", "im"} for complex, null for non-finite."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (Fraction, int, np.integer)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        if value.imag == 0:
            return jsonable(float(value.real))
        return {"re": jsonable(float(value.real)), "im": jsonable(float(value.imag))}
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot serialise {type(value).__name__}")


def dumps(report: dict) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2) + "\n"


def _exact_str(value) -> str:
    return str(value) if isinstance(value, Fraction) else repr(value)


def galois_summary(result: galois.GaloisResult) -> dict:
    return {
        "rho": complex(result.rho.rho),
        "zero_pattern": list(result.rho.zero_pattern),
        "group": result.group,
        "generator_matrix_form": result.generator_matrix_form,
        "rate": result.rate,
        "reduced_basis": [render(e) for e in result.reduced_basis],
        "lienard_basis": [render(e) for e in result.lienard_basis],
        "real_basis": [render(e) for e in result.real_basis()],
    }


def darboux_summary(rho, C=1) -> dict:
    try:
        ds = darboux.build_darboux_set(rho, C)
    except RhoZero:
        return {"skipped": "RhoZero"}
    grid = darboux.default_samples(ds)
    fld = ds.field
    residuals = {
        "cofactor": max(darboux.check_cofactor(fld, f, k, grid) for f, k in zip(ds.f, ds.K)),
        "exponential_factor": max(darboux.check_cofactor(fld, g, l, grid, quotient=True)
                                  for g, l in zip(ds.F, ds.L)),
        "integrating_factor": max(darboux.check_integrating_factor(r, fld, grid) for r in ds.R),
        "first_integral_grid": max(darboux.first_integral_grid_residual(i, fld, grid) for i in ds.I),
    }
    return {
        "rho": ds.rho,
        "C": ds.C,
        "divergence": render(fld.divergence),
        "expressions": {k: render(e) for k, e in ds.expressions().items()},
        "residuals": residuals,
    }


def equilibrium_summary(rep: equilibria.EquilibriumReport) -> dict:
    s = rep.spectrum
    return {
        "location": list(rep.location),
        "lambda1": s.lambda1,
        "lambda2": s.lambda2,
        "trace": s.trace,
        "det": s.det,
        "delta": s.delta,
        "repeated": s.repeated,
        "kind": rep.kind,
        "stability": rep.stability,
    }


def infinity_summary(pt: infinity.InfinityPoint) -> dict:
    return {
        "chart_y": pt.chart_y,
        "equator_point": list(pt.equator_point),
        "antipode": list(pt.antipode),
        "jacobian_diag": list(pt.jacobian_diag),
        "kind": pt.kind,
        "antipode_kind": pt.antipode_kind,
        "forward_kind": pt.forward_kind,
    }


def family_summary(fam: LinearFamily, C=1) -> dict:
    out = {
        "tag": fam.tag,
        "p": fam.p,
        "q": fam.q,
        "r": fam.r,
        "m": _exact_str(fam.m),
        "k": _exact_str(fam.k),
        "constraint": fam.constraint,
    }
    try:
        out["equilibria"] = [equilibrium_summary(e) for e in equilibria.finite_equilibria(fam)]
        out["line_of_equilibria"] = False
    except LineOfEquilibria:
        out["equilibria"] = []
        out["line_of_equilibria"] = True
    out["infinity"] = ([infinity_summary(p) for p in infinity.infinity_points(fam)]
                       if fam.is_homogeneous else None)
    out["corollary_bifurcation"] = (None if fam.tag is Family.F9
                                    else bifurcation.corollary_set(fam.tag, fam.source))
    form = galois.lienard_reduce(fam)
    result = galois.family_galois(fam)
    out["lienard"] = {"damping": form.damping, "stiffness": form.stiffness, "shift": form.shift}
    out["galois"] = galois_summary(result)
    out["lienard_residual"] = galois.lienard_residual(result, form, np.linspace(-1, 1, 21))
    out["darboux"] = darboux_summary(form.rho, C)
    return out


def analysis_report(params: Params, C=1) -> dict:
    """Full report for ``params``; raises AllZeroParams for a = b = c = 0."""
    families = reduce_to_linear(params)
    a, b, c = params.a, params.b, params.c
    full = full_family(a, b, c)
    region = bifurcation.classify_region(a, b, c)
    rho = galois.compute_rho(params)
    warnings = []
    if not params.is_exact:
        warnings.append("decimal inputs: boundary sets have measure zero in floating point; "
                        "use p/q literals to land on them")
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "a": _exact_str(a), "b": _exact_str(b), "c": _exact_str(c),
            "m": _exact_str(params.m), "k": _exact_str(params.k),
            "exact": params.is_exact,
        },
        "warnings": warnings,
        "region": {"tag": region.tag, "predicted_kind": region.predicted_kind},
        # the full-parameter form y' = 2(a+b) y - (a^2+b^2+c) x
        "kind": equilibria.classify_spectrum(equilibria.spectrum(full)),
        "infinity": [infinity_summary(p) for p in infinity.infinity_points(full)],
        "on_bifurcation_set_B": bifurcation.on_bifurcation_set(a, b, c),
        "rho_table": {
            "rho": rho.rho,
            "formula": render(galois.rho_formula(rho.zero_pattern)),
            "zero_pattern": list(rho.zero_pattern),
        },
        "galois": galois_summary(galois.params_galois(params)),
        "families": [family_summary(f, C) for f in families],
    }
