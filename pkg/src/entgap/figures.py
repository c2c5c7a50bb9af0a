"""Figure data builders and file emitters.

Each figure is produced as a delimited table (CSV with a `#` metadata
header, plus a JSON mirror) and, alongside it, a rendered PNG.  The
tables are the primary artifact: column names are stable, floats are
written with shortest-roundtrip repr, and no timestamps enter the
output, so identical configurations give byte-identical files.

Figures:
  1             entanglement entropy vs correlation energy
  2             concurrence vs correlation energy
  distributions level occupations over the (dq, dp) plane, with the
                pair-model and Ohmic parametric curves as labeled series
  cum2          second energy cumulant, pair model vs Ohmic bath
  diff          slope-ratio discriminator R(chi)
  conc-compare  concurrence from energy moments, pair model vs Ohmic
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from ._parallel import parallel_map
from .entanglement import (
    UncertaintyPair,
    concurrence_from_correlation_energy,
    entropy_vs_correlation_energy,
    uncertainties,
)
from .energetics import (
    DEFAULT_CUTOFF_RATIO,
    DEFAULT_FIT_ORDER,
    beta_from_chi,
    cumulants,
    ohmic_uncertainties,
    purity_from_energy_moments,
    second_cumulant_sweep,
    slope_fit,
)
from .model import CORRELATION_ENERGY_SUP, params_from_chi, params_from_K
from .distributions import legendre_distribution

__all__ = ["SweepConfig", "FigureData", "FIGURE_IDS", "build_figure", "write_figure"]

FIGURE_IDS = ("1", "2", "distributions", "cum2", "diff", "conc-compare")

#: Default (dq, dp) window of the occupation maps; covers both model
#: curves and the factorized-gaussian boundary arc between them.
DIST_DOMAIN = (0.2, 2.5, 0.2, 2.5)
DIST_STEP = 0.05
DIST_LEVELS = 6

#: chi window for the slope-ratio figure: above ~0.95 the ln-cumulant
#: profile is no longer close to linear (all higher cumulants die as
#: chi -> 1) and the fitted pair slope crosses zero.
DIFF_CHI_HI = 0.95

_CHI_EPS = 0.02  # default sweep grid avoids both singular endpoints


@dataclass
class SweepConfig:
    """Sweep/emitter settings shared by all figure commands."""

    parameter: str = "chi"
    lo: float = _CHI_EPS
    hi: float = 0.999
    points: int = 200
    cutoff_ratio: float = DEFAULT_CUTOFF_RATIO
    cumulant_order: int = DEFAULT_FIT_ORDER
    truncation_tol: float = 1e-12
    output: str = "csv"
    path: str = "figure.csv"
    # occupation-map extras
    domain: tuple = DIST_DOMAIN
    mesh_step: float = DIST_STEP
    levels: int = DIST_LEVELS
    render: bool = True

    def __post_init__(self) -> None:
        if self.parameter not in ("K", "chi", "Ecorr", "concurrence"):
            raise ValueError(f"unknown sweep parameter {self.parameter!r}")
        if self.points < 2:
            raise ValueError("points must be at least 2")
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")
        if self.output not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output!r}")
        # clamp to the legal domain of each parameter
        if self.parameter == "K":
            self.lo = max(self.lo, 0.0)
            self.hi = min(self.hi, 0.5 - 1e-6)
        elif self.parameter == "chi":
            self.lo = max(self.lo, 1e-6)
            self.hi = min(self.hi, 1.0)
        elif self.parameter == "Ecorr":
            self.lo = max(self.lo, 0.0)
            self.hi = min(self.hi, CORRELATION_ENERGY_SUP - 1e-9)
        else:  # concurrence
            self.lo = max(self.lo, 0.0)
            self.hi = min(self.hi, 1.0 - 1e-9)

    def grid(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)

    def chi_of(self, value: float) -> float:
        """Map a sweep value to chi (identity for parameter='chi')."""
        from .entanglement import correlation_energy_from_concurrence
        from .model import chi_from_correlation_energy

        if self.parameter == "chi":
            return float(value)
        if self.parameter == "K":
            return params_from_K(float(value)).chi
        if self.parameter == "Ecorr":
            return chi_from_correlation_energy(float(value))
        return chi_from_correlation_energy(
            correlation_energy_from_concurrence(float(value), "exact-root")
        )

    def meta(self) -> dict:
        return {
            "tool": "entgap",
            "version": __version__,
            "parameter": self.parameter,
            "lo": self.lo,
            "hi": self.hi,
            "points": self.points,
            "cutoff_ratio": self.cutoff_ratio,
            "cumulant_order": self.cumulant_order,
            "truncation_tol": self.truncation_tol,
        }


@dataclass
class FigureData:
    figure: str
    columns: "list[str]"
    rows: "list[tuple]"
    meta: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _ecorr_default(cfg: SweepConfig) -> SweepConfig:
    if cfg.parameter == "chi" and cfg.lo == _CHI_EPS and cfg.hi == 0.999:
        # figures 1/2 sweep the correlation energy by default
        cfg.parameter = "Ecorr"
        cfg.lo, cfg.hi = 0.0, min(0.62, CORRELATION_ENERGY_SUP - 1e-9)
    return cfg


def _build_entropy_curve(cfg: SweepConfig) -> FigureData:
    cfg = _ecorr_default(cfg)
    if cfg.parameter != "Ecorr":
        raise ValueError("figure 1 sweeps the correlation energy")
    rows = parallel_map(
        lambda E: (float(E), entropy_vs_correlation_energy(float(E), "exact")),
        cfg.grid(),
    )
    return FigureData("1", ["Ecorr", "entropy_bits"], rows, cfg.meta())


def _build_concurrence_curve(cfg: SweepConfig) -> FigureData:
    cfg = _ecorr_default(cfg)
    if cfg.parameter != "Ecorr":
        raise ValueError("figure 2 sweeps the correlation energy")
    rows = parallel_map(
        lambda E: (float(E), concurrence_from_correlation_energy(float(E))),
        cfg.grid(),
    )
    return FigureData("2", ["Ecorr", "concurrence"], rows, cfg.meta())


def _build_distributions(cfg: SweepConfig) -> FigureData:
    dq_lo, dq_hi, dp_lo, dp_hi = cfg.domain
    step = cfg.mesh_step
    nq = int(round((dq_hi - dq_lo) / step)) + 1
    np_ = int(round((dp_hi - dp_lo) / step)) + 1
    levels = cfg.levels
    rows: "list[tuple]" = []

    def grid_rows(i: int) -> "list[tuple]":
        dq = dq_lo + i * step
        out = []
        for j in range(np_):
            dp = dp_lo + j * step
            if dq * dp < 0.5 - 1e-12:
                continue  # below the minimal-uncertainty hyperbola
            u = UncertaintyPair(dq2=dq * dq, dp2=dp * dp)
            dist = legendre_distribution(u, L=levels - 1)
            for l in range(levels):
                out.append(("grid", "", round(dq, 12), round(dp, 12), l,
                            float(dist.probs[l])))
        return out

    for chunk in parallel_map(grid_rows, list(range(nq))):
        rows.extend(chunk)

    # parametric model curves, each a labeled series over chi
    chis = np.linspace(max(cfg.lo, 0.05), min(cfg.hi, 0.999), cfg.points)
    for chi in chis:
        u = uncertainties(params_from_chi(float(chi)))
        dist = legendre_distribution(u, L=levels - 1)
        dq, dp = math.sqrt(u.dq2), math.sqrt(u.dp2)
        for l in range(levels):
            rows.append(("moshinsky", float(chi), dq, dp, l, float(dist.probs[l])))
    for chi in chis:
        u = ohmic_uncertainties(beta_from_chi(float(chi)), cfg.cutoff_ratio)
        dist = legendre_distribution(u, L=levels - 1)
        dq, dp = math.sqrt(u.dq2), math.sqrt(u.dp2)
        for l in range(levels):
            rows.append(("ohmic", float(chi), dq, dp, l, float(dist.probs[l])))

    meta = cfg.meta()
    meta.update({"domain": list(cfg.domain), "mesh_step": step, "levels": levels})
    return FigureData(
        "distributions",
        ["series", "param", "dq", "dp", "l", "probability"],
        rows,
        meta,
    )


def _build_cum2(cfg: SweepConfig) -> FigureData:
    if cfg.parameter != "chi":
        raise ValueError("figure cum2 sweeps chi")
    rows = second_cumulant_sweep(cfg.grid(), cfg.cutoff_ratio)
    return FigureData("cum2", ["chi", "cum2_moshinsky", "cum2_ohmic"], rows, cfg.meta())


def _build_diff(cfg: SweepConfig) -> FigureData:
    if cfg.parameter != "chi":
        raise ValueError("figure diff sweeps chi")
    if cfg.hi == 0.999:  # default grid: stop before the fit degenerates
        cfg.hi = DIFF_CHI_HI

    def row(chi: float):
        p = params_from_chi(float(chi))
        mosh, mres = slope_fit(cumulants(uncertainties(p), cfg.cumulant_order).values)
        ohm, ores = slope_fit(
            cumulants(
                ohmic_uncertainties(beta_from_chi(float(chi)), cfg.cutoff_ratio),
                cfg.cumulant_order,
            ).values
        )
        return (float(chi), 1.0 - ohm / mosh, mosh, ohm, mres, ores)

    rows = parallel_map(row, cfg.grid())
    return FigureData(
        "diff",
        ["chi", "R", "slope_moshinsky", "slope_ohmic",
         "fit_residual_moshinsky", "fit_residual_ohmic"],
        rows,
        cfg.meta(),
    )


def _build_conc_compare(cfg: SweepConfig) -> FigureData:
    if cfg.parameter != "chi":
        raise ValueError("figure conc-compare sweeps chi")

    def row(chi: float):
        p = params_from_chi(float(chi))
        km = cumulants(uncertainties(p), 2)
        ko = cumulants(ohmic_uncertainties(beta_from_chi(float(chi)), cfg.cutoff_ratio), 2)
        return (
            float(chi),
            1.0 - purity_from_energy_moments(km[1], km[2]),
            1.0 - purity_from_energy_moments(ko[1], ko[2]),
        )

    rows = parallel_map(row, cfg.grid())
    return FigureData(
        "conc-compare",
        ["chi", "concurrence_moshinsky", "concurrence_ohmic"],
        rows,
        cfg.meta(),
    )


_BUILDERS = {
    "1": _build_entropy_curve,
    "2": _build_concurrence_curve,
    "distributions": _build_distributions,
    "cum2": _build_cum2,
    "diff": _build_diff,
    "conc-compare": _build_conc_compare,
}


def build_figure(figure_id: str, cfg: SweepConfig) -> FigureData:
    if figure_id not in _BUILDERS:
        raise ValueError(f"unknown figure id {figure_id!r}; choose from {FIGURE_IDS}")
    return _BUILDERS[figure_id](cfg)


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv_text(data: FigureData) -> str:
    buf = io.StringIO()
    for key, val in sorted(data.meta.items()):
        buf.write(f"# {key} = {val}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(data.columns)
    for row in data.rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _json_text(data: FigureData) -> str:
    payload = {
        "figure": data.figure,
        "meta": data.meta,
        "columns": data.columns,
        "rows": [list(r) for r in data.rows],
    }
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def write_figure(data: FigureData, path: str, output: str = "csv",
                 render: bool = True) -> "list[Path]":
    """Write the table (CSV + JSON mirror, or JSON only) and the PNG."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    written = []
    if output == "csv":
        out.write_text(_csv_text(data), encoding="utf-8")
        written.append(out)
        mirror = out.with_suffix(".json")
        mirror.write_text(_json_text(data), encoding="utf-8")
        written.append(mirror)
    else:
        out.write_text(_json_text(data), encoding="utf-8")
        written.append(out)
    if render:
        png = out.with_suffix(".png")
        _render(data, png)
        written.append(png)
    return written


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _render(data: FigureData, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if data.figure == "distributions":
        _render_distributions(data, path, plt)
        return

    fig, ax = plt.subplots(figsize=(6.0, 3.8))
    cols = {name: i for i, name in enumerate(data.columns)}
    x = np.array([r[0] for r in data.rows], dtype=float)
    if data.figure == "1":
        ax.plot(x, [r[1] for r in data.rows], "k-")
        ax.set_xlabel(r"$E_\mathrm{corr}$")
        ax.set_ylabel(r"$S_\mathrm{vN}$ [bits]")
    elif data.figure == "2":
        ax.plot(x, [r[1] for r in data.rows], "k-")
        ax.set_xlabel(r"$E_\mathrm{corr}$")
        ax.set_ylabel(r"$\mathcal{C}$")
    elif data.figure == "cum2":
        ax.semilogy(x, [r[cols["cum2_moshinsky"]] for r in data.rows], "k-",
                    label="coupled pair")
        ax.semilogy(x, [r[cols["cum2_ohmic"]] for r in data.rows], "k--",
                    label="Ohmic bath")
        ax.set_xlabel(r"$\chi$")
        ax.set_ylabel(r"$\langle\langle H^2\rangle\rangle$")
        ax.legend()
    elif data.figure == "diff":
        ax.plot(x, [r[cols["R"]] for r in data.rows], "k-")
        ax.axhline(0.5, color="0.6", lw=0.8, ls=":")
        ax.set_xlabel(r"$\chi$")
        ax.set_ylabel(r"$R(\chi)$")
    elif data.figure == "conc-compare":
        ax.plot(x, [r[cols["concurrence_moshinsky"]] for r in data.rows], "k-",
                label="coupled pair")
        ax.plot(x, [r[cols["concurrence_ohmic"]] for r in data.rows], "k--",
                label="Ohmic bath")
        ax.set_xlabel(r"$\chi$")
        ax.set_ylabel(r"$\mathcal{C}$")
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_distributions(data: FigureData, path: Path, plt) -> None:
    levels = int(data.meta.get("levels", DIST_LEVELS))
    grid = [r for r in data.rows if r[0] == "grid"]
    dqs = sorted({r[2] for r in grid})
    dps = sorted({r[3] for r in grid})
    iq = {v: i for i, v in enumerate(dqs)}
    ip = {v: i for i, v in enumerate(dps)}
    maps = np.full((levels, len(dps), len(dqs)), np.nan)
    for _, _, dq, dp, l, prob in grid:
        maps[int(l), ip[dp], iq[dq]] = prob
    curves = {}
    for name in ("moshinsky", "ohmic"):
        pts = [(r[2], r[3]) for r in data.rows if r[0] == name and r[4] == 0]
        curves[name] = np.array(pts) if pts else np.empty((0, 2))

    ncols = 3
    nrows = (levels + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(3.2 * ncols, 3.0 * nrows),
                             squeeze=False)
    hyper_q = np.linspace(max(min(dqs), 0.51 / max(dps)), max(dqs), 200)
    for l in range(levels):
        ax = axes[l // ncols][l % ncols]
        m = maps[l]
        cs = ax.contourf(dqs, dps, m, levels=10, cmap="Greys")
        fig.colorbar(cs, ax=ax, shrink=0.85)
        if curves["moshinsky"].size:
            ax.plot(curves["moshinsky"][:, 0], curves["moshinsky"][:, 1], "k--", lw=1.6)
        if curves["ohmic"].size:
            ax.plot(curves["ohmic"][:, 0], curves["ohmic"][:, 1], "k-", lw=1.6)
        ax.plot(hyper_q, 0.5 / hyper_q, color="0.5", ls="-.", lw=1.0)
        ax.set_xlim(min(dqs), max(dqs))
        ax.set_ylim(min(dps), max(dps))
        ax.set_title(f"$l = {l}$", fontsize=9)
        ax.set_xlabel(r"$\Delta q$", fontsize=8)
        ax.set_ylabel(r"$\Delta p$", fontsize=8)
    for k in range(levels, nrows * ncols):
        axes[k // ncols][k % ncols].axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
