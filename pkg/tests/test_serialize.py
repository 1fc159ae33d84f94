"""JSON schemas: round trips, strictness, hashing, input sniffing."""

import json

import pytest

from riskcheck.hazard import (
    Constant,
    ExponentialGrowth,
    HazardSegment,
    HazardTrajectory,
    Linear,
    MaintenanceEpoch,
    Power,
)
from riskcheck.scenarios import build_trajectory, scenario_catalog
from riskcheck.serialize import (
    SchemaError,
    load_input,
    scenario_from_dict,
    scenario_to_dict,
    trajectory_from_dict,
    trajectory_hash,
    trajectory_to_dict,
)

MIXED = HazardTrajectory(
    (
        HazardSegment(0.0, Linear(0.1, 0.05)),
        HazardSegment(10.0, Power(0.35, 0.02, 2.0)),
        HazardSegment(17.5, ExponentialGrowth(0.4, 0.1)),
        HazardSegment(25.0, Constant(0.9)),
    ),
    (MaintenanceEpoch(10.0, 0.35), MaintenanceEpoch(17.5, 0.4)),
)


class TestTrajectoryRoundTrip:
    def test_identity(self):
        assert trajectory_from_dict(trajectory_to_dict(MIXED)) == MIXED

    def test_hash_stable_across_round_trips(self):
        once = trajectory_from_dict(trajectory_to_dict(MIXED))
        twice = trajectory_from_dict(trajectory_to_dict(once))
        assert trajectory_hash(MIXED) == trajectory_hash(once) == trajectory_hash(twice)

    def test_json_serializable(self):
        text = json.dumps(trajectory_to_dict(MIXED))
        assert trajectory_from_dict(json.loads(text)) == MIXED

    def test_hash_sensitive_to_values(self):
        other = HazardTrajectory((HazardSegment(0.0, Constant(0.5)),))
        assert trajectory_hash(other) != trajectory_hash(MIXED)


class TestScenarioRoundTrip:
    @pytest.mark.parametrize("scenario", scenario_catalog(), ids=lambda s: s.label)
    def test_identity_and_build_hash(self, scenario):
        rebuilt = scenario_from_dict(scenario_to_dict(scenario))
        assert rebuilt == scenario
        assert trajectory_hash(build_trajectory(rebuilt)) == trajectory_hash(
            build_trajectory(scenario)
        )


class TestSchemaStrictness:
    def base(self):
        return trajectory_to_dict(MIXED)

    def test_wrong_schema_version(self):
        d = self.base()
        d["schema_version"] = 2
        with pytest.raises(SchemaError, match="schema_version"):
            trajectory_from_dict(d)

    def test_unknown_form(self):
        d = self.base()
        d["segments"][0]["form"] = "sinusoid"
        with pytest.raises(SchemaError, match="form"):
            trajectory_from_dict(d)

    def test_missing_param(self):
        d = self.base()
        del d["segments"][0]["params"]["slope"]
        with pytest.raises(SchemaError, match="params"):
            trajectory_from_dict(d)

    def test_extra_param(self):
        d = self.base()
        d["segments"][0]["params"]["bias"] = 1.0
        with pytest.raises(SchemaError, match="params"):
            trajectory_from_dict(d)

    def test_non_numeric_value(self):
        d = self.base()
        d["segments"][0]["start"] = "zero"
        with pytest.raises(SchemaError, match="number"):
            trajectory_from_dict(d)

    def test_boolean_is_not_a_number(self):
        d = self.base()
        d["maintenance_epochs"][0]["time"] = True
        with pytest.raises(SchemaError, match="number"):
            trajectory_from_dict(d)

    def test_empty_segments(self):
        d = self.base()
        d["segments"] = []
        with pytest.raises(SchemaError, match="segments"):
            trajectory_from_dict(d)

    def test_scenario_bad_policy(self):
        d = scenario_to_dict(scenario_catalog()[0])
        d["policy"]["kind"] = "heroic"
        with pytest.raises(SchemaError, match="kind"):
            scenario_from_dict(d)

    def test_scenario_missing_label(self):
        d = scenario_to_dict(scenario_catalog()[0])
        del d["label"]
        with pytest.raises(SchemaError, match="label"):
            scenario_from_dict(d)


class TestLoadInput:
    def test_sniffs_trajectory(self, tmp_path):
        path = tmp_path / "traj.json"
        path.write_text(json.dumps(trajectory_to_dict(MIXED)))
        kind, obj = load_input(path)
        assert kind == "trajectory" and obj == MIXED

    def test_sniffs_scenario(self, tmp_path):
        scenario = scenario_catalog()[2]
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(scenario_to_dict(scenario)))
        kind, obj = load_input(path)
        assert kind == "scenario" and obj == scenario

    def test_unrecognized_shape(self, tmp_path):
        path = tmp_path / "other.json"
        path.write_text('{"something": 1}')
        with pytest.raises(SchemaError, match="neither"):
            load_input(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(SchemaError, match="JSON"):
            load_input(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError, match="cannot read"):
            load_input(tmp_path / "absent.json")
