import random
from fractions import Fraction

import pytest

from polyheight import Field, FieldElement, SplitPoly, quadratic_field, rationals

ALL_FIELDS = {
    "Q": rationals(),
    "Q(i)": quadratic_field(-1),
    "Q(sqrt-3)": quadratic_field(-3),
    "Q(sqrt5)": quadratic_field(5),
    "Q(sqrt-2)": quadratic_field(-2),
}


@pytest.fixture(params=list(ALL_FIELDS), ids=list(ALL_FIELDS))
def field(request) -> Field:
    return ALL_FIELDS[request.param]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240731)


def random_fraction(rng: random.Random, num: int = 3, den: int = 2) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_element(rng: random.Random, field: Field, nonzero: bool = True,
                   num: int = 3, den: int = 2) -> FieldElement:
    while True:
        a = random_fraction(rng, num, den)
        b = random_fraction(rng, num, den) if field.degree == 2 else Fraction(0)
        x = field.element(a, b)
        if not (nonzero and x.is_zero()):
            return x


def random_split_poly(rng: random.Random, field: Field, max_distinct: int = 8,
                      max_mult: int = 3, max_degree: int = 24) -> SplitPoly:
    roots = []
    for _ in range(rng.randint(1, max_distinct)):
        r = random_element(rng, field, nonzero=True, num=2, den=2)
        mult = rng.randint(1, max_mult)
        roots.extend([r] * mult)
        if len(roots) >= max_degree:
            roots = roots[:max_degree]
            break
    lead = random_element(rng, field, nonzero=True, num=2, den=1)
    return SplitPoly(lead, roots, field)
