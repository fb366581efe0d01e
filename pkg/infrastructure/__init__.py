"""
Infrastructure shared by every service: configuration, logging and convergence retries.
"""
