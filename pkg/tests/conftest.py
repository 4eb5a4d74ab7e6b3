import os
import random

import pytest
from dotenv import load_dotenv
from hypothesis import settings

load_dotenv()

PROPERTY_EXAMPLES = int(os.environ.get('SNAILCALC_PROPERTY_EXAMPLES', 200))

settings.register_profile('snailcalc', max_examples=PROPERTY_EXAMPLES, deadline=None)
settings.register_profile('snailcalc-large', max_examples=max(PROPERTY_EXAMPLES, 10000), deadline=None)
settings.load_profile('snailcalc')


@pytest.fixture
def property_examples():
    return PROPERTY_EXAMPLES


@pytest.fixture
def rng():
    return random.Random(20180213)
