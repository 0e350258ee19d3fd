"""
애플리케이션 계층
"""




