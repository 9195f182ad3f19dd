# Shared pytest configuration for the threeshare unit tests: a deterministic
# hypothesis profile, so property tests draw the same examples on every run.

import os

from hypothesis import settings, HealthCheck

settings.register_profile("threeshare", max_examples=60, deadline=None, derandomize=True,
                            suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("THREESHARE_HYPOTHESIS_PROFILE", "threeshare"))
