"""CSV/JSON output for data, reconstructions and experiment summaries.

Formats (documented here as the single source of truth):

* data CSV: header ``j,k,m,theta,re_u,im_u`` plus ``re_du,im_du`` when
  Neumann data are present; one row per (wavenumber j, angle m), j-major,
  both indices 1-based; floats are written with shortest-roundtrip repr, so
  a read-back is bit-exact.
* grid JSON sidecar: measurement geometry and wavenumber list.
* reconstruction CSV: header ``x1,f_exact,re_f_rec,im_f_rec``.
* summary JSON: config echo, one record per wavenumber, schema_version.

Every write is atomic (temp file + rename) and refuses non-finite values
(json is asked for strict finiteness; CSV rows are checked before writing),
so no NaN/Inf ever reaches disk.
"""

import json
import os

import numpy as np

from .forward import MeasurementGrid, NearFieldData

SCHEMA_VERSION = 1


def _fmt(x) -> str:
    x = float(x)
    if not np.isfinite(x):
        raise ValueError("refusing to write non-finite value")
    return repr(x)


def _atomic_write(path, text: str):
    tmp = str(path) + ".tmp"
    with open(tmp, "w") as f:
        f.write(text)
    os.replace(tmp, path)


def write_data_csv(path, data: NearFieldData):
    grid = data.grid
    theta = grid.angles
    has_du = data.neumann is not None
    lines = ["j,k,m,theta,re_u,im_u" + (",re_du,im_du" if has_du else "")]
    for j, k in enumerate(grid.wavenumbers):
        for m in range(grid.num_angles):
            u = data.dirichlet[m, j]
            row = [str(j + 1), _fmt(k), str(m + 1), _fmt(theta[m]), _fmt(u.real), _fmt(u.imag)]
            if has_du:
                du = data.neumann[m, j]
                row += [_fmt(du.real), _fmt(du.imag)]
            lines.append(",".join(row))
    _atomic_write(path, "\n".join(lines) + "\n")


def write_grid_json(path, grid: MeasurementGrid, has_neumann: bool):
    doc = {
        "schema_version": SCHEMA_VERSION,
        "center": [float(grid.center[0]), float(grid.center[1])],
        "radius": float(grid.radius),
        "num_angles": grid.num_angles,
        "wavenumbers": [float(k) for k in grid.wavenumbers],
        "has_neumann": has_neumann,
    }
    _atomic_write(path, json.dumps(doc, indent=2, sort_keys=True, allow_nan=False) + "\n")


def read_data_csv(csv_path, grid_json_path) -> NearFieldData:
    """Rebuild NearFieldData from a data CSV and its grid sidecar."""
    with open(grid_json_path) as f:
        meta = json.load(f)
    grid = MeasurementGrid(center=tuple(meta["center"]), radius=meta["radius"],
                           num_angles=meta["num_angles"],
                           wavenumbers=tuple(meta["wavenumbers"]))
    M, J = grid.num_angles, len(grid.wavenumbers)
    u = np.zeros((M, J), dtype=complex)
    du = np.zeros((M, J), dtype=complex) if meta["has_neumann"] else None
    with open(csv_path) as f:
        header = f.readline().strip().split(",")
        for line in f:
            cells = line.strip().split(",")
            j, m = int(cells[0]) - 1, int(cells[2]) - 1
            u[m, j] = float(cells[4]) + 1j * float(cells[5])
            if du is not None:
                du[m, j] = float(cells[6]) + 1j * float(cells[7])
    return NearFieldData(grid=grid, dirichlet=u, neumann=du)


def write_recon_csv(path, x1, exact, reconstruction):
    lines = ["x1,f_exact,re_f_rec,im_f_rec"]
    rec = np.asarray(reconstruction, dtype=complex)
    for i in range(len(x1)):
        lines.append(",".join([_fmt(x1[i]), _fmt(np.real(exact[i])),
                               _fmt(rec[i].real), _fmt(rec[i].imag)]))
    _atomic_write(path, "\n".join(lines) + "\n")


def write_summary_json(path, summary: dict):
    _atomic_write(path, json.dumps(summary, indent=2, sort_keys=True, allow_nan=False) + "\n")


def write_sweep_csv(path, rows):
    """rows: iterables of (delta, truncation, seed, error)."""
    lines = ["delta,truncation,seed,error"]
    for delta, trunc, seed, error in rows:
        lines.append(",".join([_fmt(delta), str(trunc), str(seed), _fmt(error)]))
    _atomic_write(path, "\n".join(lines) + "\n")
