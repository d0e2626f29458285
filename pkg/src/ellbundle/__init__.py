"""Exact calculus for semistable bundles on Weierstrass cubics and elliptic fibrations."""
