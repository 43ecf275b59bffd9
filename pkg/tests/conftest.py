import sys
from pathlib import Path

from hypothesis import settings

# exact-arithmetic examples vary wildly in per-case cost; wall-clock
# deadlines only add flakiness here
settings.register_profile("surftop", deadline=None)
settings.load_profile("surftop")

sys.path.insert(0, str(Path(__file__).parent))
