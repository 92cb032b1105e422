import hypothesis

# exact-arithmetic examples can be individually slow, and a reproducible
# suite matters more here than fresh fuzz on every run
hypothesis.settings.register_profile(
    "flagrecon", deadline=None, derandomize=True, max_examples=60
)
hypothesis.settings.load_profile("flagrecon")
