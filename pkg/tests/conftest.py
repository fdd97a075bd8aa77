import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hypothesis import settings

settings.register_profile("suite", max_examples=100, deadline=None, derandomize=True)
settings.load_profile("suite")

FIXTURES = Path(__file__).resolve().parent / "fixtures"
