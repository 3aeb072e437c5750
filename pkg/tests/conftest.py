import os
import sys

import hypothesis

sys.path.insert(0, os.path.dirname(__file__))  # for `oracles`

hypothesis.settings.register_profile(
    "default", max_examples=60, deadline=None,
)
hypothesis.settings.register_profile(
    "thorough", max_examples=400, deadline=None,
)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))
