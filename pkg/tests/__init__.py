"""Tests of windschitl.
"""
