"""
Configuration - numerical thresholds, quadrature and lattice settings, logging.
"""
