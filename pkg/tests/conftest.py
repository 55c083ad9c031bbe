import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"

try:
    import newstead  # noqa: F401
except ImportError:
    sys.path.insert(0, str(SRC))
