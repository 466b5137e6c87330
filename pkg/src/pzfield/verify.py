"""Every module's invariant checks, run for one parameter point."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pzfield import darboux, equilibria, galois, infinity
from pzfield.errors import LineOfEquilibria, PoleEncountered, RhoZero
from pzfield.model import PZField, Params, eval_linear, eval_pz_field, reduce_to_linear

TOLERANCES = {
    "reduction": 1e-12,
    "characteristic": 1e-10,
    "chart_roots": 1e-12,
    "lienard": 1e-8,
    "cofactor": 1e-10,
    "integrating_factor": 1e-9,
    "first_integral": 1e-6,
}


@dataclass(frozen=True)
class Check:
    name: str
    value: float | None
    tolerance: float | None
    passed: bool
    note: str = ""

    @property
    def skipped(self) -> bool:
        return self.value is None

    def line(self) -> str:
        if self.skipped:
            return f"SKIP {self.name}: {self.note}"
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.value:.3e} (tol {self.tolerance:g})"


def _measured(name, value, tol_key, note=""):
    tol = TOLERANCES[tol_key]
    return Check(name, float(value), tol, bool(value < tol), note)


def reduction_error(fam, rng, n=50) -> float:
    """Largest relative gap between the general field and the linear family, x > 0."""
    field = PZField(fam.pz_params)
    worst = 0.0
    for _ in range(n):
        x, y = rng.uniform(0.05, 4.0), rng.uniform(-4.0, 4.0)
        _, general = eval_pz_field(field, x, y)
        _, linear = eval_linear(fam, x, y)
        worst = max(worst, abs(float(general) - float(linear)) / max(1.0, abs(float(linear))))
    return worst


def _first_integral_starts(ds, horizon):
    candidates = [(0.0, 0.0), (0.0, 0.5), (0.0, -0.3), (0.0, 1.5)]
    return [c for c in candidates if all(abs(g(*c)) > 1e-2 for g in ds.pole_functions())]


def run_verification(params: Params, seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []
    for fam in reduce_to_linear(params):
        tag = fam.tag.value
        checks.append(_measured(f"{tag} reduction consistency", reduction_error(fam, rng), "reduction"))

        s = equilibria.spectrum(fam)
        scale = max(1.0, abs(float(s.trace)) ** 2, abs(float(s.det)))
        resid = max(abs(l * l - float(s.trace) * l + float(s.det)) for l in (s.lambda1, s.lambda2))
        checks.append(_measured(f"{tag} characteristic residual", resid / scale, "characteristic"))

        try:
            (eq,) = equilibria.finite_equilibria(fam)
        except (LineOfEquilibria, ValueError):
            checks.append(Check(f"{tag} classification oracle", None, None, True,
                                "no isolated equilibrium"))
        else:
            if equilibria.is_hyperbolic(fam) or eq.kind is equilibria.Kind.CENTER:
                oracle = equilibria.trajectory_oracle(fam)
                checks.append(Check(f"{tag} classification oracle", 0.0 if oracle == eq.kind else 1.0,
                                    0.5, oracle == eq.kind, f"{eq.kind.value} vs oracle {oracle.value}"))
            else:
                checks.append(Check(f"{tag} classification oracle", None, None, True,
                                    "too close to a bifurcation boundary for the trajectory oracle"))

        if fam.is_homogeneous and s.delta >= 0:
            roots = sorted(p.chart_y for p in infinity.infinity_points(fam))
            eig = sorted({s.lambda1.real, s.lambda2.real})
            gap = max(abs(r - e) / max(1.0, abs(e)) for r, e in zip(roots, eig))
            checks.append(_measured(f"{tag} chart roots = eigenvalues", gap, "chart_roots"))

        form = galois.lienard_reduce(fam)
        result = galois.family_galois(fam)
        ts = rng.uniform(-1.0, 1.0, 100)
        checks.append(_measured(f"{tag} Lienard basis substitution",
                                galois.lienard_residual(result, form, ts), "lienard"))

        try:
            ds = darboux.build_darboux_set(form.rho)
        except RhoZero:
            checks.append(Check(f"{tag} Darboux elements", None, None, True, "RhoZero: rho = 0"))
            continue
        fld = ds.field
        pts = darboux.random_samples(ds, rng)
        grid = darboux.default_samples(ds)
        # relative residuals: e^{+-2 s x} spans many decades when |rho| is large
        cof = max(darboux.check_cofactor(fld, f, k, pts, relative=True) for f, k in zip(ds.f, ds.K))
        expo = max(darboux.check_cofactor(fld, g, l, pts, quotient=True, relative=True)
                   for g, l in zip(ds.F, ds.L))
        integ = max(darboux.check_integrating_factor(r, fld, grid, relative=True) for r in ds.R)
        checks.append(_measured(f"{tag} curve cofactors", cof, "cofactor"))
        checks.append(_measured(f"{tag} exponential-factor cofactors", expo, "cofactor"))
        checks.append(_measured(f"{tag} integrating factors", integ, "integrating_factor"))

        # keep clear of the finite-time blow-up of v' = rho - v^2 when rho < 0
        horizon = min(1.0, round(1.0 / max(1.0, abs(complex(ds.sqrt_rho))), 3))
        try:
            drift = max(darboux.check_first_integral(i, fld, _first_integral_starts(ds, horizon),
                                                     t_end=horizon) for i in ds.I)
        except PoleEncountered as exc:
            checks.append(Check(f"{tag} first-integral drift", None, None, True, str(exc)))
        else:
            checks.append(_measured(f"{tag} first-integral drift", drift, "first_integral",
                                    f"t in [0, {horizon:g}]"))
    return checks
