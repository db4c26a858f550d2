"""Local flows of the three transported vector fields.

In the complex coordinate z = l + i nu eta the fields Y(E), Y(H), Y(F)
generate the ODEs

    E:  dz/dt = 1,    H:  dz/dt = 2z,    F:  dz/dt = -z^2,

the generating flows of translations, dilations and the inversion family
of conformal maps of the upper half plane.  Integration is adaptive
(RK45) with blow-up detection for the F flow near its poles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

GENERATORS = ("E", "H", "F")
_BLOWUP = 1e8


def flow_field(generator: str, z: complex) -> complex:
    if generator == "E":
        return 1.0 + 0.0j
    if generator == "H":
        return 2.0 * z
    if generator == "F":
        return -z * z
    raise ValueError(f"unknown generator {generator!r}")


def exact_flow(generator: str, z0: complex, t):
    """Closed-form solutions, used as test oracles."""
    t = np.asarray(t, dtype=float)
    if generator == "E":
        return z0 + t
    if generator == "H":
        return z0 * np.exp(2.0 * t)
    if generator == "F":
        return z0 / (1.0 + t * z0)
    raise ValueError(f"unknown generator {generator!r}")


@dataclass
class Trajectory:
    generator: str
    times: np.ndarray
    points: np.ndarray
    status: str = "ok"  # "ok" or "blowup"
    rows: list = field(default_factory=list)


def flow_trajectory(generator: str, z0: complex, t_max: float, dt: float) -> Trajectory:
    """Integrate the generator flow from z0, sampled every dt."""
    if generator not in GENERATORS:
        raise ValueError(f"unknown generator {generator!r}")

    def rhs(t, y):
        dz = flow_field(generator, complex(y[0], y[1]))
        return [dz.real, dz.imag]

    def blowup(t, y):
        return np.hypot(y[0], y[1]) - _BLOWUP

    blowup.terminal = True
    blowup.direction = 1.0

    t_eval = np.arange(0.0, t_max + dt / 2, dt)
    sol = solve_ivp(
        rhs,
        (0.0, t_max),
        [z0.real, z0.imag],
        t_eval=t_eval,
        rtol=1e-10,
        atol=1e-12,
        events=blowup,
        method="RK45",
    )
    pts = sol.y[0] + 1j * sol.y[1]
    status = "blowup" if sol.status == 1 else "ok"
    return Trajectory(generator, sol.t, pts, status)
