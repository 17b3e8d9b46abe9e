import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# make tests/reference.py importable regardless of invocation directory
sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")
