"""
로깅 설정 테스트
"""
import logging

import structlog

from src.config.logging import handlers, renderer_for


def test_renderer_for():
    assert isinstance(renderer_for("json"), structlog.processors.JSONRenderer)
    assert isinstance(renderer_for("JSON"), structlog.processors.JSONRenderer)
    assert isinstance(renderer_for("console"), structlog.dev.ConsoleRenderer)


def test_handlers_are_typed_logging_handlers():
    assert handlers
    assert all(isinstance(h, logging.Handler) for h in handlers)
    assert isinstance(handlers[0], logging.StreamHandler)
