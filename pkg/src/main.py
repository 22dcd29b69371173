import sys

from src.cli.app import run
from src.common.config import settings
from src.common.log import get_logger

logger = get_logger(__name__)


def main():
    logger.debug("GRADINV_MAX_N = %s", settings.MAX_N)
    logger.debug("GRADINV_CENSUS_DIR = %s", settings.CENSUS_DIR)
    return run(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
