"""
로깅 설정
"""
import logging
import sys
from pathlib import Path
from typing import Any, List

import structlog
from structlog.stdlib import LoggerFactory

from .env_config import LOG_DIR, LOG_FORMAT, LOG_LEVEL


def renderer_for(log_format: str) -> Any:
    """LOG_FORMAT 값에 맞는 마지막 processor"""
    if log_format.lower() == "json":
        return structlog.processors.JSONRenderer(ensure_ascii=False)
    return structlog.dev.ConsoleRenderer()


# Structlog 설정
structlog.configure(
    processors=[
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        renderer_for(LOG_FORMAT),
    ],
    context_class=dict,
    logger_factory=LoggerFactory(),
    wrapper_class=structlog.stdlib.BoundLogger,
    cache_logger_on_first_use=True,
)

# stdout은 명령 출력 전용
handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]

if LOG_DIR:
    log_dir = Path(LOG_DIR)
    log_dir.mkdir(exist_ok=True, parents=True)
    file_handler = logging.FileHandler(log_dir / "utree.log", encoding="utf-8")
    file_handler.setLevel(getattr(logging, LOG_LEVEL.upper(), logging.INFO))
    file_handler.setFormatter(logging.Formatter("%(message)s"))
    handlers.append(file_handler)

# 표준 로깅 설정
logging.basicConfig(
    format="%(message)s",
    handlers=handlers,
    level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
)

logger = structlog.get_logger("utree")
