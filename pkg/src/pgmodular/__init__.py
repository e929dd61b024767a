"""Exact modular arithmetic for strongly regular designs and partial geometries.

Subpackages and modules:

* :mod:`pgmodular.exactla` - linear algebra over GF(p) and Q.
* :mod:`pgmodular.incidence` - incidence structures, SRD checking, generators.
* :mod:`pgmodular.pgtheory` - closed-form arithmetic of pg(s,t,alpha).
* :mod:`pgmodular.ccalgebra` - coherent configurations and their modular algebras.
"""

__version__ = "0.1.0"
