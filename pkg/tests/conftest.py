"""Common test configuration."""

import os

from hypothesis import settings

# profiles selected with HYPOTHESIS_PROFILE; "dev" keeps local runs short
settings.register_profile("ci", deadline=None, print_blob=True)
settings.register_profile("dev", max_examples=20, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))
