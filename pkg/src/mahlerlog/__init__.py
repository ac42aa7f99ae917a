"""High-precision log-sine integrals, multiple polylogarithms and Mahler measures."""
