"""
도메인 계층
"""




