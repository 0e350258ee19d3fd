"""
PTE 트리와 U-다항식 계산 도구
"""
