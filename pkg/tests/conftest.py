import pathlib
import sys

try:
    import ash  # noqa: F401
except ImportError:
    # Allow running the suite from a clean checkout without installing.
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
