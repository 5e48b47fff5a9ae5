"""
hyperorb package initialization.

Exact enumeration of the twisted sectors of the inertia stacks of H_g and
[M_(0,n)/S_n], their ages, and the orbifold Poincare and stringy Chow
polynomials assembled from them. The command line lives in ``hyperorb.cli``.
"""

__version__ = "0.1.0"
