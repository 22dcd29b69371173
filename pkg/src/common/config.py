# Loading environment variables needs to respect the project root, not the package directory.
from dotenv import load_dotenv, find_dotenv
import os

dotenv_path = find_dotenv(usecwd=True)
if dotenv_path:
    load_dotenv(dotenv_path=dotenv_path)
else:
    load_dotenv()


def _flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


class Settings:
    # Matrix size cap for constructors, builder and enumerator
    MAX_N: int = int(os.getenv("GRADINV_MAX_N", "16"))

    # Census output
    CENSUS_DIR: str = os.getenv("GRADINV_CENSUS_DIR", "data/census")

    # Logging / rendering
    LOG_LEVEL: str = os.getenv("GRADINV_LOG_LEVEL", "WARNING")
    SYMBOLIC: bool = _flag("GRADINV_SYMBOLIC")
    PROGRESS: bool = _flag("GRADINV_PROGRESS")

    # Prefect
    PREFECT_API_URL: str = os.getenv("PREFECT_API_URL", "")

settings = Settings()
