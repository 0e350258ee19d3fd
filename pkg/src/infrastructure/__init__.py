"""
인프라 계층
"""




