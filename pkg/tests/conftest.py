import hypothesis

hypothesis.settings.register_profile(
    "signedgrids", deadline=None, max_examples=60, derandomize=True
)
hypothesis.settings.load_profile("signedgrids")
