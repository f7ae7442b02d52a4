from hypothesis import HealthCheck, settings

# derandomized so every run draws the same examples
settings.register_profile(
    "repo",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")
