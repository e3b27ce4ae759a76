"""Package data of windschitl (settings).
"""
