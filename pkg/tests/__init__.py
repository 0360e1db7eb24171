"""
catalanff tests package.
"""
