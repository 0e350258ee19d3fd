"""
공용 픽스처
"""
import random

import pytest

from src.config.env_config import DEFAULT_SEED
from src.domain.models import PteShape, Tree
from src.domain.services import TreeBuilder


@pytest.fixture
def rng() -> random.Random:
    return random.Random(DEFAULT_SEED)


@pytest.fixture
def t_211() -> Tree:
    """T_2(1 1)"""
    return TreeBuilder.build_pte_tree(PteShape(alpha=2, p=(1, 1)))


@pytest.fixture
def t_220() -> Tree:
    """T_2(2 0)"""
    return TreeBuilder.build_pte_tree(PteShape(alpha=2, p=(2, 0)))
