"""
Test suite for baker-quant
"""
