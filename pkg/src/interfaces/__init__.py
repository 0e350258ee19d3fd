"""
인터페이스 계층
"""
