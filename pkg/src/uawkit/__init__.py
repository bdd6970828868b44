"""Exact computations in U_q(sl2), the universal Askey-Wilson algebra and
the homomorphism between them."""

__version__ = "0.1.0"
