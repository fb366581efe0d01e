"""
Monitoring - structured logging, operation timing and error tracking.
"""
