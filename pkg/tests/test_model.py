import math

import numpy as np
import pytest

from energypile.model import (
    CaseDefinition,
    Grid,
    LoadCase,
    PileMaterial,
    PileSection,
    RestraintSet,
    Tip,
    ValidationError,
    build_circular_section,
    build_uniform_grid,
    validate_case,
)
from energypile.study import canonical_case


def _case(**over):
    parts = dict(
        section=build_circular_section(1.0, 26.0),
        material=PileMaterial(29.2e9, 1e-5),
        restraints=RestraintSet(0.0167e9, 0.0, Tip.END_BEARING),
        load=LoadCase(-1e6, -10.0),
        grid=build_uniform_grid(26.0, 101),
    )
    parts.update(over)
    return CaseDefinition(**parts)


def test_circular_section_reference_pile():
    s = build_circular_section(1.0, 26.0)
    assert s.perimeter == pytest.approx(3.14159, abs=5e-6)
    assert s.area == pytest.approx(0.785398, abs=5e-7)
    assert s.perimeter == math.pi and s.area == math.pi / 4
    assert PileSection.circular(1.0, 26.0) == s


def test_circular_area_scales_quadratically():
    assert build_circular_section(2.0, 26.0).area == 4 * build_circular_section(1.0, 26.0).area


@pytest.mark.parametrize("d", [0.0, -1.0, float("nan")])
def test_circular_section_rejects_bad_diameter(d):
    with pytest.raises(ValidationError) as err:
        build_circular_section(d, 26.0)
    assert err.value.violations[0].field == "diameter"


@pytest.mark.parametrize("d", [0.3, 1.0, 2.5, 17.0])
def test_perimeter_area_round_trip(d):
    s = build_circular_section(d, 10.0)
    assert s.perimeter**2 / (4 * math.pi * s.area) == pytest.approx(1.0, rel=1e-12)


def test_uniform_grid():
    assert build_uniform_grid(26.0, 3).x.tolist() == [0.0, 13.0, 26.0]
    g = build_uniform_grid(26.0, 1001)
    np.testing.assert_allclose(np.diff(g.x), 0.026, rtol=1e-12)
    assert g.x[0] == 0.0 and g.x[-1] == 26.0
    assert not g.x.flags.writeable
    with pytest.raises(ValidationError):
        build_uniform_grid(26.0, 1)


def test_canonical_case_is_valid():
    c = canonical_case(Tip.END_BEARING)
    assert validate_case(c) is c


def test_validate_is_idempotent():
    c = _case()
    once = validate_case(c)
    assert validate_case(once) == once == c


def test_zero_shear_stiffness_is_psi_out_of_range():
    with pytest.raises(ValidationError) as err:
        validate_case(_case(restraints=RestraintSet(0.0, 0.0, Tip.END_BEARING)))
    assert "PsiOutOfRange" in err.value.codes


def test_grid_not_starting_at_tip():
    x = np.linspace(0.1, 26.0, 11)
    with pytest.raises(ValidationError) as err:
        validate_case(_case(grid=Grid(x)))
    assert err.value.codes == {"GridMalformed"}


def test_all_violations_are_listed():
    bad = _case(
        section=PileSection(26.0, -1.0, 0.5),
        material=PileMaterial(0.0, 1e-5),
        restraints=RestraintSet(1e7, -5.0, Tip.FULLY_FLOATING),
    )
    with pytest.raises(ValidationError) as err:
        validate_case(bad)
    fields = {v.field for v in err.value.violations}
    assert {"perimeter", "elastic_modulus", "head_stiffness"} <= fields


def test_psi_upper_bound():
    # psi L ~ 1000
    with pytest.raises(ValidationError) as err:
        validate_case(_case(restraints=RestraintSet(0.0167e9 * (1000 / 1.2436) ** 2, 0.0, Tip.END_BEARING)))
    assert "PsiOutOfRange" in err.value.codes


def test_grid_equality_and_hash():
    a, b = build_uniform_grid(26.0, 11), build_uniform_grid(26.0, 11)
    assert a == b and hash(a) == hash(b)
    assert a != build_uniform_grid(26.0, 13)
