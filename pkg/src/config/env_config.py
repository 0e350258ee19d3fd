"""
환경 변수 설정
.env 파일이 있으면 우선 사용, 없으면 기본값 사용
"""
import os
from pathlib import Path
from typing import Optional

# .env 파일 경로
ENV_FILE = Path(__file__).parent.parent.parent / ".env"

# .env 파일이 있으면 로드
if ENV_FILE.exists():
    try:
        from dotenv import load_dotenv
        load_dotenv(ENV_FILE)
    except ImportError:
        pass  # python-dotenv가 없어도 동작

# 애플리케이션 설정
APP_NAME: str = os.getenv("APP_NAME", "utree")
APP_VERSION: str = os.getenv("APP_VERSION", "0.1.0")
DEBUG: bool = os.getenv("DEBUG", "False").lower() == "true"
LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
LOG_DIR: Optional[str] = os.getenv("LOG_DIR")
LOG_FORMAT: str = os.getenv("LOG_FORMAT", "console")  # console 또는 json

# 열거 예산 설정
ENUMERATION_BUDGET: int = int(os.getenv("UTREE_BUDGET", "30"))  # 2^|E| 전수 열거 허용 최대 간선 수
SEARCH_NODE_BUDGET: int = int(os.getenv("UTREE_SEARCH_BUDGET", "2000000"))  # search_pte 방문 멀티셋 수
CENSUS_BUDGET: int = int(os.getenv("UTREE_CENSUS_BUDGET", "1000000"))  # 부분트리 오라클 구성 수
PROUHET_MAX_K: int = int(os.getenv("UTREE_PROUHET_MAX_K", "20"))  # Thue-Morse 구성 최대 차수

# 실행 설정
THREADS: int = int(os.getenv("UTREE_THREADS", "1"))  # U_k 열거 워커 수
DEFAULT_SEED: int = int(os.getenv("UTREE_SEED", "2016"))  # 랜덤 테스트/CLI 기본 시드
