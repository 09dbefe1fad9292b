"""quiverdt: quivers with potential on small toric Calabi-Yau threefolds.

Path-algebra arithmetic with exact rational coefficients, a catalog of
geometries and framed examples, monad-complex certification, torus
fixed-point enumerators, truncated multivariate q-series, and W-algebra
vacuum characters from shift matrices.
"""

__version__ = "0.1.0"

from .ncalg import Arrow, NCPoly, Path, Potential, Quiver  # noqa: F401
from .qseries import QSeries  # noqa: F401
