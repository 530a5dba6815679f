"""bianchiq: exact and numeric verification kernel for the Bianchi elliptic
quintic, its 2- and 5-torsion, and the modular function fields of level 10.

The package has six layers:

* :mod:`bianchiq.exact` - rationals, polynomials over Q, truncated Puiseux
  series with per-series precision tracking;
* :mod:`bianchiq.theta` - binary64 evaluation of the level-5 theta family;
* :mod:`bianchiq.modular` - exact q-expansions of the named functions
  (phi, g1..g3, delta, j5, j10, j, eta);
* :mod:`bianchiq.curve` - the quintic in P^4: quadrics, group law, torsion,
  plane models, the Weierstrass transformation;
* :mod:`bianchiq.identities` - every named identity as an executable check;
* :mod:`bianchiq.congruence` - SL2(Z/N) images, indices, cusps, genus.
"""

from .exact import PuiseuxSeries, QPoly, pochhammer_product
from .identities import Report, VerifyConfig, run_all, run_identity
from .modular import named_series
from .theta import phi_numeric, theta_k, theta_vector

__version__ = "0.1.0"

__all__ = [
    "PuiseuxSeries",
    "QPoly",
    "Report",
    "VerifyConfig",
    "named_series",
    "phi_numeric",
    "pochhammer_product",
    "run_all",
    "run_identity",
    "theta_k",
    "theta_vector",
    "__version__",
]
