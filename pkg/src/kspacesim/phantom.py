"""Digital tissue phantoms.

A phantom is a cubic voxel grid carrying five aligned maps: equilibrium
magnetization M0, longitudinal relaxation time T1, effective transverse
relaxation time T2*, a static field offset dB, and a binary activation map.
Geometry is an axis-aligned ellipsoid composition (outer head assigned gray
matter, an inner white-matter ellipsoid, two ventricles of cerebrospinal
fluid) evaluated in normalized coordinates so the same anatomy appears at
every grid size. The ellipsoid constants are documented here and are not
part of any file or interface contract.
"""

import struct
from dataclasses import dataclass, field

import numpy as np

from kspacesim.constants import GAMMA_HZ_PER_T, T2_CLAMP_S
from kspacesim.errors import FileFormatError

SUPPORTED_SIZES = (64, 96, 128)

PHANTOM_MAGIC = b"SHKPH1"

# Per-tissue (m0, t1_s, t2star_s) at 3 T. Overridable per run; values feed
# the maps but are not contractual.
@dataclass(frozen=True)
class TissueParams:
    m0: float
    t1: float
    t2star: float


DEFAULT_TISSUES = {
    "gm": TissueParams(m0=0.85, t1=1.33, t2star=0.052),
    "wm": TissueParams(m0=0.70, t1=0.83, t2star=0.045),
    "csf": TissueParams(m0=1.00, t1=3.70, t2star=0.500),
}

# (tissue, center, semi-axes) in normalized [-1, 1] coordinates, applied in
# order: later entries overwrite earlier ones where they overlap.
ELLIPSOIDS = (
    ("gm", (0.00, 0.00, 0.00), (0.70, 0.85, 0.75)),
    ("wm", (0.00, 0.02, -0.05), (0.52, 0.65, 0.55)),
    ("csf", (-0.16, 0.10, 0.05), (0.10, 0.24, 0.14)),
    ("csf", (0.16, 0.10, 0.05), (0.10, 0.24, 0.14)),
)

# Planar field-offset gradient strength, Tesla per normalized unit.
DEFAULT_DB_GRADIENT_T = 3e-8

# Default activation sphere: a gray-matter patch lateral to the white-matter
# ellipsoid at mid-height, so the default axial slice intersects it.
DEFAULT_ACT_CENTER_FRAC = (0.22, 0.42, 0.50)
DEFAULT_ACT_RADIUS_FRAC = 1.0 / 16.0

PLANES = ("axial", "sagittal", "coronal")


@dataclass(frozen=True, eq=False)
class PhantomVolume:
    """Cubic voxel grid of tissue maps, indexed [z, y, x] (x fastest)."""

    m0: np.ndarray
    t1: np.ndarray
    t2star: np.ndarray
    delta_b: np.ndarray
    act_map: np.ndarray

    def __post_init__(self):
        shape = self.m0.shape
        if len(shape) != 3 or len(set(shape)) != 1:
            raise ValueError("phantom maps must be cubic 3-D grids")
        for name in ("t1", "t2star", "delta_b", "act_map"):
            if getattr(self, name).shape != shape:
                raise ValueError(
                    f"dimension mismatch: {name} has shape "
                    f"{getattr(self, name).shape}, m0 has {shape}"
                )
        if np.any(self.m0 < 0):
            raise ValueError("m0 must be non-negative")
        brain = self.m0 > 0
        if np.any(self.t1[brain] <= 0) or np.any(self.t2star[brain] <= 0):
            raise ValueError("t1 and t2star must be positive wherever m0 > 0")
        act = self.act_map
        if not np.all((act == 0) | (act == 1)):
            raise ValueError("act_map must be binary")
        if np.any(act[~brain] != 0):
            raise ValueError("act_map must be zero where m0 = 0")

    @property
    def size(self) -> int:
        return self.m0.shape[0]


@dataclass(frozen=True, eq=False)
class SliceMaps:
    """One 2-D plane of a phantom, rows indexing the slower axis.

    Axial slices are [y, x], coronal [z, x], sagittal [z, y]. ``m0`` may be
    complex downstream of activation scaling; straight from a phantom it is
    real.
    """

    m0: np.ndarray
    t1: np.ndarray
    t2star: np.ndarray
    delta_b: np.ndarray
    act_map: np.ndarray
    plane: str = "axial"
    index: int = 0

    @property
    def grid_n(self) -> int:
        return self.m0.shape[0]


def _normalized_coords(size: int) -> np.ndarray:
    """Voxel-center coordinates mapped to (-1, 1)."""
    return (np.arange(size) + 0.5 - size / 2) / (size / 2)


def generate_phantom(
    size: int,
    tissues: dict | None = None,
    db_gradient_t: float = DEFAULT_DB_GRADIENT_T,
    act_center: tuple | None = None,
    act_radius: float | None = None,
) -> PhantomVolume:
    """Build the default ellipsoid phantom at a supported grid size.

    Parameters
    ----------
    size : one of 64, 96, 128.
    tissues : optional mapping with keys "gm", "wm", "csf" to TissueParams,
        overriding the 3 T defaults.
    db_gradient_t : planar field-offset gradient, Tesla per normalized unit.
    act_center, act_radius : optional activation sphere override, voxel
        coordinates (x, y, z) and voxel radius. Defaults place a sphere in
        left gray matter at mid-height.
    """
    if size not in SUPPORTED_SIZES:
        raise ValueError(f"size must be one of {SUPPORTED_SIZES}, got {size}")
    tissues = dict(DEFAULT_TISSUES) if tissues is None else tissues
    for key in ("gm", "wm", "csf"):
        if key not in tissues:
            raise ValueError(f"missing tissue parameters for {key!r}")
        tp = tissues[key]
        if tp.m0 <= 0 or tp.t1 <= 0 or tp.t2star <= 0:
            raise ValueError(f"tissue {key!r} values must be positive")

    u = _normalized_coords(size)
    zz, yy, xx = np.meshgrid(u, u, u, indexing="ij")

    label = np.zeros((size, size, size), dtype=np.uint8)
    codes = {"gm": 1, "wm": 2, "csf": 3}
    for tissue, center, semi in ELLIPSOIDS:
        inside = (
            ((xx - center[0]) / semi[0]) ** 2
            + ((yy - center[1]) / semi[1]) ** 2
            + ((zz - center[2]) / semi[2]) ** 2
        ) <= 1.0
        label[inside] = codes[tissue]

    m0 = np.zeros(label.shape)
    t1 = np.zeros(label.shape)
    t2star = np.zeros(label.shape)
    for tissue, code in codes.items():
        mask = label == code
        tp = tissues[tissue]
        m0[mask] = tp.m0
        t1[mask] = tp.t1
        t2star[mask] = tp.t2star

    # Field offset: planar gradient over voxel indices plus a small
    # tissue-linked component from the normalized T2* map (brain only).
    iz, iy, ix = np.meshgrid(
        np.arange(size), np.arange(size), np.arange(size), indexing="ij"
    )
    delta_b = db_gradient_t * (ix + iy + iz) / size
    brain = label > 0
    spread = t2star[brain].std()
    if spread > 0:
        detail = (t2star - t2star[brain].mean()) / spread
        delta_b = delta_b + np.where(brain, 0.1 * db_gradient_t * detail, 0.0)

    volume = PhantomVolume(
        m0=m0,
        t1=t1,
        t2star=t2star,
        delta_b=delta_b,
        act_map=np.zeros(label.shape),
    )
    if act_center is None:
        act_center = tuple(round(f * size) for f in DEFAULT_ACT_CENTER_FRAC)
    if act_radius is None:
        act_radius = max(2.0, size * DEFAULT_ACT_RADIUS_FRAC)
    act = generate_activation_map(volume, act_center, act_radius)
    return PhantomVolume(
        m0=m0, t1=t1, t2star=t2star, delta_b=delta_b, act_map=act
    )


def generate_activation_map(
    volume: PhantomVolume, center: tuple, radius: float
) -> np.ndarray:
    """Binary sphere of active voxels, restricted to tissue (m0 > 0).

    ``center`` is (x, y, z) in voxel indices; ``radius`` in voxels.
    Radius 0 marks the single center voxel. A sphere that misses tissue
    entirely is an error.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    size = volume.size
    cx, cy, cz = center
    if not (0 <= cx < size and 0 <= cy < size and 0 <= cz < size):
        raise ValueError(f"activation center {center} outside the grid")
    iz, iy, ix = np.ogrid[0:size, 0:size, 0:size]
    dist2 = (ix - cx) ** 2 + (iy - cy) ** 2 + (iz - cz) ** 2
    act = (dist2 <= radius**2) & (volume.m0 > 0)
    if not act.any():
        raise ValueError(
            "activation sphere does not intersect any tissue voxel"
        )
    return act.astype(np.float64)


def extract_slice(volume: PhantomVolume, plane: str, index: int) -> SliceMaps:
    """Cut one plane from the volume. ``index`` is 1-based."""
    if plane not in PLANES:
        raise ValueError(f"plane must be one of {PLANES}, got {plane!r}")
    size = volume.size
    if not 1 <= index <= size:
        raise ValueError(f"slice index must be in [1, {size}], got {index}")
    i = index - 1
    if plane == "axial":
        sel = (i, slice(None), slice(None))
    elif plane == "coronal":
        sel = (slice(None), i, slice(None))
    else:
        sel = (slice(None), slice(None), i)
    return SliceMaps(
        m0=volume.m0[sel].copy(),
        t1=volume.t1[sel].copy(),
        t2star=volume.t2star[sel].copy(),
        delta_b=volume.delta_b[sel].copy(),
        act_map=volume.act_map[sel].copy(),
        plane=plane,
        index=index,
    )


def derive_t2(t2star, delta_b, gamma: float = GAMMA_HZ_PER_T):
    """T2 from T2* and the field offset: 1/T2 = 1/T2* - gamma*|dB|.

    Where the offset rate cancels or exceeds the T2* rate the result is
    clamped to T2_CLAMP_S. Non-tissue entries (t2star <= 0) map to 0.
    Accepts scalars or arrays.
    """
    t2star = np.asarray(t2star, dtype=np.float64)
    delta_b = np.asarray(delta_b, dtype=np.float64)
    scalar = t2star.ndim == 0 and delta_b.ndim == 0
    t2star, delta_b = np.broadcast_arrays(t2star, delta_b)
    t2 = np.zeros(t2star.shape)
    tissue = t2star > 0
    with np.errstate(divide="ignore"):
        rate = np.where(tissue, 1.0 / np.where(tissue, t2star, 1.0), 0.0)
    rate = rate - gamma * np.abs(delta_b)
    floor = 1.0 / T2_CLAMP_S
    clamped = np.maximum(rate, floor)
    t2[tissue] = 1.0 / clamped[tissue]
    return float(t2[()]) if scalar else t2


def save_phantom(volume: PhantomVolume, path) -> None:
    """Write magic, u32 size, then five float64 grids in x-fastest order."""
    size = volume.size
    with open(path, "wb") as fh:
        fh.write(PHANTOM_MAGIC)
        fh.write(struct.pack("<I", size))
        for grid in (
            volume.m0,
            volume.t1,
            volume.t2star,
            volume.delta_b,
            volume.act_map,
        ):
            fh.write(np.ascontiguousarray(grid, dtype="<f8").tobytes())


def _read_header(raw: bytes, path) -> int:
    if len(raw) < len(PHANTOM_MAGIC) + 4:
        raise FileFormatError(f"{path}: truncated header")
    if raw[: len(PHANTOM_MAGIC)] != PHANTOM_MAGIC:
        raise FileFormatError(f"{path}: bad magic, not a phantom file")
    (size,) = struct.unpack_from("<I", raw, len(PHANTOM_MAGIC))
    if size == 0 or size > 4096:
        raise FileFormatError(f"{path}: implausible grid size {size}")
    return size


def load_phantom(path) -> PhantomVolume:
    with open(path, "rb") as fh:
        raw = fh.read()
    size = _read_header(raw, path)
    grid_bytes = size**3 * 8
    offset = len(PHANTOM_MAGIC) + 4
    if len(raw) != offset + 5 * grid_bytes:
        raise FileFormatError(
            f"{path}: expected five size-{size} grids, file length is off"
        )
    grids = []
    for _ in range(5):
        arr = np.frombuffer(raw, dtype="<f8", count=size**3, offset=offset)
        grids.append(arr.reshape(size, size, size).copy())
        offset += grid_bytes
    return PhantomVolume(*grids)


def load_activation_map(path) -> np.ndarray:
    """Read an activation-only file: same header, one float64 grid."""
    with open(path, "rb") as fh:
        raw = fh.read()
    size = _read_header(raw, path)
    offset = len(PHANTOM_MAGIC) + 4
    if len(raw) != offset + size**3 * 8:
        raise FileFormatError(
            f"{path}: expected one size-{size} grid, file length is off"
        )
    arr = np.frombuffer(raw, dtype="<f8", count=size**3, offset=offset)
    act = arr.reshape(size, size, size).copy()
    if not np.all((act == 0) | (act == 1)):
        raise FileFormatError(f"{path}: activation map must be binary")
    return act


def save_activation_map(act: np.ndarray, path) -> None:
    size = act.shape[0]
    if act.shape != (size, size, size):
        raise ValueError("activation map must be cubic")
    with open(path, "wb") as fh:
        fh.write(PHANTOM_MAGIC)
        fh.write(struct.pack("<I", size))
        fh.write(np.ascontiguousarray(act, dtype="<f8").tobytes())
