"""
애플리케이션 서비스
"""
from .encode_verification import EncodeVerifier, VerificationReport
from .subtree_experiment import SubtreeComparison, SubtreeExperiment

__all__ = [
    "EncodeVerifier",
    "VerificationReport",
    "SubtreeComparison",
    "SubtreeExperiment",
]
