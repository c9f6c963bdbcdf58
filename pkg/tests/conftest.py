from hypothesis import settings

# Deterministic property tests: no wall-clock deadlines, derandomized draws.
settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")
