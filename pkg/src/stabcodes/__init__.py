"""Stabilizer code construction and analysis over GF(2).

Vectors and matrix rows are packed into Python ints with bit ``j`` holding
column ``j``.  A check-matrix row ``(u, v)`` packs as ``u | (v << n)``.
"""

from .bounds import *  # noqa: F403
from .constructions import *  # noqa: F403
from .cyclic import *  # noqa: F403
from .distance import *  # noqa: F403
from .gf2 import *  # noqa: F403
from .reed_muller import *  # noqa: F403
from .symplectic import *  # noqa: F403
from .formats import package_version
from . import bounds, constructions, cyclic, distance, gf2, reed_muller, symplectic

__all__ = [
    *bounds.__all__,
    *constructions.__all__,
    *cyclic.__all__,
    *distance.__all__,
    *gf2.__all__,
    *reed_muller.__all__,
    *symplectic.__all__,
]
__version__ = package_version()
