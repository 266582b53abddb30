"""
Generalized Satake Diagram Toolkit
"""
