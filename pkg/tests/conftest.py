from hypothesis import settings

settings.register_profile("msv", deadline=None, max_examples=60)
settings.load_profile("msv")
