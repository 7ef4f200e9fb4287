"""Image curves ``F(r e^{it})`` of the extremal functions, as CSV or SVG."""
from __future__ import annotations

import io

import numpy as np

from .errors import RadiusOutOfRange
from .family import FamilyParams


def extremal_value(params: FamilyParams, function: str, z):
    """Closed-form ``k(z) = z (1 - alpha z)^-gamma`` or ``g(z) = (1 - alpha z)^gamma``.

    Principal branch; ``Re(1 - alpha z) > 0`` on the open disk.
    """
    z = np.asarray(z, dtype=np.complex128)
    base = 1.0 - params.alpha * z
    with np.errstate(divide="ignore", invalid="ignore"):
        if function == "k":
            return z * base ** (-params.gamma)
        if function == "g":
            return base**params.gamma
    raise ValueError(f"function must be 'k' or 'g', got {function!r}")


def boundary_curve(params: FamilyParams, function: str, radius: float, n_points: int = 512,
                   rotation: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """``n_points`` samples of the image of ``|z| = radius``, first point repeated last.

    ``rotation`` applies the class symmetry ``k -> e^{-i phi} k(e^{i phi} z)``
    (equivalently ``g -> g(e^{i phi} z)``) before sampling.
    """
    if not 0.0 < radius <= 1.0:
        raise RadiusOutOfRange(f"radius must lie in (0, 1], got {radius}")
    if n_points < 2:
        raise ValueError("need at least two points")
    theta = 2 * np.pi * np.arange(n_points) / (n_points - 1)
    z = radius * np.exp(1j * (theta + rotation))
    w = extremal_value(params, function, z)
    if function == "k":
        w = w * np.exp(-1j * rotation)
    w[-1] = w[0]
    if not np.all(np.isfinite(w)):
        raise ValueError("image curve is unbounded at this radius (pole of k on |z| = 1)")
    return theta, w


def curve_to_csv(theta: np.ndarray, w: np.ndarray) -> str:
    buf = io.StringIO()
    buf.write("theta,re,im\n")
    for t, v in zip(theta.tolist(), w.tolist()):
        buf.write(f"{t!r},{v.real!r},{v.imag!r}\n")
    return buf.getvalue()


def curve_to_svg(w: np.ndarray, stroke: str = "black") -> str:
    """Single-path SVG; the y axis is flipped so the picture matches the complex plane."""
    x, y = w.real, -w.imag
    xmin, xmax, ymin, ymax = x.min(), x.max(), y.min(), y.max()
    pad_x = 0.05 * (xmax - xmin or 1.0)
    pad_y = 0.05 * (ymax - ymin or 1.0)
    vb = (xmin - pad_x, ymin - pad_y, xmax - xmin + 2 * pad_x, ymax - ymin + 2 * pad_y)
    stroke_width = 0.002 * max(vb[2], vb[3])
    d = "M " + " L ".join(f"{a:.9g},{b:.9g}" for a, b in zip(x, y)) + " Z"
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{vb[0]:.9g} {vb[1]:.9g} {vb[2]:.9g} {vb[3]:.9g}">\n'
        f'  <path d="{d}" fill="none" stroke="{stroke}" stroke-width="{stroke_width:.6g}"/>\n'
        "</svg>\n"
    )
