from typing import Protocol

import numpy as np
import numpy.typing as npt

from ..models.clock_grid import ClockGrid


class ClockModel(Protocol):
    """Source of the characteristic functions c^{n0}(u) on the window.

    Only the k = 0 column is evaluated; every other index pair follows from the
    shift identity c^{mn}(u) = c^{m-n,0}(u).
    """

    @property
    def name(self) -> str:
        ...

    @property
    def grid(self) -> ClockGrid:
        ...

    @property
    def support_radius(self) -> int | None:
        """R with c^{n0} = 0 for |n| > R, or None for full support"""
        ...

    @property
    def kinked(self) -> bool:
        ...

    @property
    def exact(self) -> bool:
        """True when the model evolves by an exactly unitary group"""
        ...

    def c0(self, n: int, u: float) -> complex:
        ...

    def c0_column(self, offsets: npt.NDArray[np.int64], u: float) -> npt.NDArray[np.complex128]:
        ...

    def cdot0(self, n: int) -> complex | None:
        """Analytic derivative of c^{n0} at u = 0, when the model knows it"""
        ...
