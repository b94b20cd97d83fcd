"""K-space sampling trajectories and their acquisition timing.

Every trajectory emits an ordered sample list with a per-sample acquisition
time. All three kinds place their samples on one uniform time ramp
(t[j] = t_first + j * dwell with dwell = eesp / grid_n), a structural
guarantee the signal evaluation kernel relies on. The sample nearest the
k-space center is anchored to the echo time.
"""

import csv
from dataclasses import dataclass

import numpy as np

from kspacesim.constants import GAMMA_MHZ_PER_T

SEQUENCES = ("GRE", "SE", "IR")
TRAJECTORY_KINDS = ("cartesian", "radial", "spiral")


@dataclass(frozen=True)
class ScanParams:
    """Acquisition parameters, SI units (seconds, Tesla) internally."""

    sequence: str
    grid_n: int
    te_s: float
    tr_s: float
    eesp_s: float
    flip_deg: float = 90.0
    b0_t: float = 3.0
    ti_s: float | None = None
    accel: int = 1
    n_coils: int = 1
    include_delta_b: bool = True
    assume_te: bool = False

    def __post_init__(self):
        if self.sequence not in SEQUENCES:
            raise ValueError(f"sequence must be one of {SEQUENCES}")
        if self.grid_n < 2 or self.grid_n % 2 != 0:
            raise ValueError("grid_n must be an even integer >= 2")
        if self.b0_t <= 0:
            raise ValueError("b0_t must be positive")
        if self.te_s <= 0:
            raise ValueError("te_s must be positive")
        if self.tr_s <= 0:
            raise ValueError("tr_s must be positive")
        if self.te_s >= self.tr_s:
            raise ValueError("te_s must be smaller than tr_s")
        if self.eesp_s <= 0:
            raise ValueError("eesp_s must be positive")
        if not 0 < self.flip_deg <= 180:
            raise ValueError("flip_deg must be in (0, 180]")
        if int(self.accel) != self.accel or self.accel < 1:
            raise ValueError("accel must be a positive integer")
        if self.accel >= self.grid_n:
            raise ValueError("accel must be smaller than grid_n")
        if int(self.n_coils) != self.n_coils or self.n_coils < 1:
            raise ValueError("n_coils must be a positive integer")
        if self.sequence == "IR":
            if self.ti_s is None:
                raise ValueError("IR requires ti_s")
            if not 0 < self.ti_s < self.tr_s:
                raise ValueError("ti_s must lie in (0, tr_s)")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Ordered k-space samples with acquisition times.

    kx, ky are in grid units (integer values for Cartesian). Times satisfy
    t[j] = t_first + j * dwell exactly; constructors validate that every
    sample time is positive.
    """

    kind: str
    grid_n: int
    accel: int
    kx: np.ndarray
    ky: np.ndarray
    t_first: float
    dwell: float

    def __post_init__(self):
        if self.kind not in TRAJECTORY_KINDS:
            raise ValueError(f"unknown trajectory kind {self.kind!r}")
        if self.kx.shape != self.ky.shape or self.kx.ndim != 1:
            raise ValueError("kx and ky must be 1-D arrays of equal length")
        if self.dwell <= 0:
            raise ValueError("dwell must be positive")
        if self.t_first <= 0:
            raise ValueError(
                "first sample time is not positive; echo time too short "
                "for the readout duration implied by eesp_s and grid_n"
            )

    @property
    def n_samples(self) -> int:
        return self.kx.shape[0]

    @property
    def t(self) -> np.ndarray:
        return self.t_first + np.arange(self.n_samples) * self.dwell


def _accel_lines(grid_n: int, accel: int) -> np.ndarray:
    """Kept phase-encode offsets: every accel-th line from the bottom."""
    return np.arange(-grid_n // 2, grid_n // 2, accel)


def cartesian_trajectory(params: ScanParams) -> Trajectory:
    """Boustrophedon Cartesian readout, bottom row first.

    Rows are phase-encode lines (ky constant within a row) acquired
    bottom-to-top with alternating left/right traversal, one row per eesp_s.
    Acceleration keeps every accel-th line. Row direction parity is anchored
    so the row nearest ky = 0 runs left-to-right, which puts the sample at
    (kx, ky) = (0, nearest ky) exactly at the echo time.
    """
    n = params.grid_n
    lines = _accel_lines(n, params.accel)
    c0 = int(np.argmin(np.abs(lines)))
    dwell = params.eesp_s / n

    kx_row = np.arange(-n // 2, n // 2)
    kx = np.empty(lines.size * n)
    ky = np.empty(lines.size * n)
    for c, line in enumerate(lines):
        row = kx_row if (c - c0) % 2 == 0 else kx_row[::-1]
        kx[c * n : (c + 1) * n] = row
        ky[c * n : (c + 1) * n] = line

    t_first = params.te_s - (c0 * n + n // 2) * dwell
    return Trajectory(
        kind="cartesian",
        grid_n=n,
        accel=params.accel,
        kx=kx,
        ky=ky,
        t_first=t_first,
        dwell=dwell,
    )


def radial_trajectory(params: ScanParams) -> Trajectory:
    """Evenly rotated diameter spokes, one spoke per eesp_s.

    The full set is grid_n spokes at angles s * pi / grid_n; acceleration
    keeps every accel-th spoke. Each spoke holds grid_n samples crossing the
    origin, with the middle spoke's center crossing at the echo time.
    """
    n = params.grid_n
    kept = np.arange(0, n, params.accel)
    angles = kept * np.pi / n
    s_count = kept.size
    dwell = params.eesp_s / n

    radii = np.arange(-n // 2, n // 2).astype(np.float64)
    kx = np.concatenate([radii * np.cos(a) for a in angles])
    ky = np.concatenate([radii * np.sin(a) for a in angles])

    t_first = params.te_s - (s_count * n / 2 + n // 2) * dwell
    return Trajectory(
        kind="radial",
        grid_n=n,
        accel=params.accel,
        kx=kx,
        ky=ky,
        t_first=t_first,
        dwell=dwell,
    )


def spiral_trajectory(params: ScanParams, turns: float | None = None) -> Trajectory:
    """Single-shot Archimedean spiral growing from the origin.

    grid_n**2 samples uniform in angle over ``turns`` revolutions (default
    grid_n / 2, giving ring spacing of about one grid unit), radius linear
    in angle up to grid_n / 2. The readout is centered on the echo time.
    """
    n = params.grid_n
    if turns is None:
        turns = n / 2
    if turns <= 0:
        raise ValueError("turns must be positive")
    m = n * n
    theta_max = 2 * np.pi * turns
    theta = theta_max * np.arange(m) / (m - 1)
    r = (n / 2) * theta / theta_max
    dwell = params.eesp_s / n

    t_first = params.te_s - m * dwell / 2
    return Trajectory(
        kind="spiral",
        grid_n=n,
        accel=params.accel,
        kx=r * np.cos(theta),
        ky=r * np.sin(theta),
        t_first=t_first,
        dwell=dwell,
    )


def build_trajectory(kind: str, params: ScanParams) -> Trajectory:
    if kind == "cartesian":
        return cartesian_trajectory(params)
    if kind == "radial":
        return radial_trajectory(params)
    if kind == "spiral":
        return spiral_trajectory(params)
    raise ValueError(f"unknown trajectory kind {kind!r}")


def larmor_frequency_mhz(b0_t: float) -> float:
    """Precession frequency in MHz for a field strength in Tesla."""
    if b0_t <= 0:
        raise ValueError("b0_t must be positive")
    return GAMMA_MHZ_PER_T * b0_t


def export_csv(traj: Trajectory, path) -> None:
    """Write samples as kx,ky,t rows for external plotting."""
    t = traj.t
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["kx", "ky", "t"])
        for j in range(traj.n_samples):
            writer.writerow([repr(traj.kx[j]), repr(traj.ky[j]), repr(t[j])])
