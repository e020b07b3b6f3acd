"""Feature catalog: names, groups, directions, reference semantics, actionability.

Every downstream stage (ingestion, modeling, business rules, recommendations)
reads feature semantics from here instead of hard-coding lists. The built-in
default catalog covers the telematics schema this pipeline was designed for;
a deployment can replace it with its own delimiter-separated file.

Feature semantics:
  group           Index | Categorical | VehicleParameters | DrivingBehaviour |
                  EnvironmentParameters | Target
  direction       Positive (higher value means more fuel), Negative (less), None
  zero_reference  counterfactual reference for recommendations is 0 rather than
                  the inlier median (e.g. harsh-brake counts)
  actionable      a driver/operator can act on it; excluded: trip distance and
                  odometer, which describe the mission, not the behaviour
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import DataError


class Group(str, Enum):
    INDEX = "Index"
    CATEGORICAL = "Categorical"
    VEHICLE = "VehicleParameters"
    DRIVING = "DrivingBehaviour"
    ENVIRONMENT = "EnvironmentParameters"
    TARGET = "Target"


class Direction(str, Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    NONE = "None"


EXPLAINABLE_GROUPS = (Group.VEHICLE, Group.DRIVING, Group.ENVIRONMENT)

# Explainable features that are observable but not actionable by a driver.
NON_ACTIONABLE = ("trip_kms", "total_odometer")


@dataclass(frozen=True)
class FeatureSpec:
    name: str
    group: Group
    direction: Direction
    zero_reference: bool
    actionable: bool
    units: str


class FeatureRegistry:
    """Validated, ordered collection of :class:`FeatureSpec`."""

    def __init__(self, specs: Iterable[FeatureSpec]):
        self.specs: list[FeatureSpec] = list(specs)
        self._by_name = {s.name: s for s in self.specs}
        self._validate()

    def _validate(self) -> None:
        names = [s.name for s in self.specs]
        if len(names) != len(set(names)):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise DataError(f"duplicate feature names in registry: {dupes}")
        targets = [s for s in self.specs if s.group is Group.TARGET]
        if len(targets) != 1:
            raise DataError(f"registry must define exactly one Target feature, found {len(targets)}")
        for s in self.specs:
            if s.group in (Group.INDEX, Group.CATEGORICAL):
                if s.direction is not Direction.NONE or s.actionable:
                    raise DataError(
                        f"{s.name}: Index/Categorical features must have direction None "
                        "and actionable=false"
                    )
            if s.zero_reference and s.direction is Direction.NONE:
                raise DataError(f"{s.name}: zero_reference requires direction Positive or Negative")

    def __len__(self) -> int:
        return len(self.specs)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def get(self, name: str) -> FeatureSpec:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"feature {name!r} not in registry") from None

    @property
    def target(self) -> str:
        return next(s.name for s in self.specs if s.group is Group.TARGET)

    def categorical(self) -> list[str]:
        return [s.name for s in self.specs if s.group is Group.CATEGORICAL]

    def explainable_numeric(self) -> list[str]:
        return [s.name for s in self.specs if s.group in EXPLAINABLE_GROUPS]

    def actionable(self) -> list[str]:
        return [s.name for s in self.specs if s.actionable]

    def zero_reference(self) -> list[str]:
        return [s.name for s in self.specs if s.zero_reference]

    def by_group(self, group: Group) -> list[str]:
        return [s.name for s in self.specs if s.group is group]

    def direction_of(self, name: str) -> Direction:
        return self.get(name).direction

    def with_direction_overrides(self, overrides: dict[str, str]) -> "FeatureRegistry":
        """Return a copy with per-deployment direction overrides applied."""
        specs = []
        for s in self.specs:
            if s.name in overrides:
                d = Direction(overrides[s.name])
                specs.append(FeatureSpec(s.name, s.group, d, s.zero_reference, s.actionable, s.units))
            else:
                specs.append(s)
        return FeatureRegistry(specs)

    # -- serialization ----------------------------------------------------

    HEADER = ["name", "group", "direction", "zero_reference", "actionable", "units"]

    def to_csv(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv_text(), encoding="utf-8")

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.HEADER)
        for s in self.specs:
            w.writerow([
                s.name, s.group.value, s.direction.value,
                "true" if s.zero_reference else "false",
                "true" if s.actionable else "false",
                s.units,
            ])
        return buf.getvalue()

    def content_hash(self) -> str:
        """Stable hash of the catalog, stored in model files for compatibility checks."""
        return hashlib.sha256(self.to_csv_text().encode("utf-8")).hexdigest()[:16]


def _parse_bool(token: str, field: str, line: int) -> bool:
    t = token.strip().lower()
    if t == "true":
        return True
    if t == "false":
        return False
    raise DataError(f"registry line {line}: {field} must be true/false, got {token!r}")


def load_registry(source: str | Path | None = None) -> FeatureRegistry:
    """Load a registry from a CSV file, or return the built-in default.

    The file must carry the header ``name,group,direction,zero_reference,
    actionable,units``. Unknown group or direction tokens, duplicate names,
    and a missing or non-unique Target feature are rejected.
    """
    if source is None:
        return default_registry()
    path = Path(source)
    if not path.exists():
        raise DataError(f"registry file not found: {path}")
    specs: list[FeatureSpec] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(line for line in fh if not line.startswith("#"))
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"registry file {path} is empty") from None
        if [h.strip() for h in header] != FeatureRegistry.HEADER:
            raise DataError(f"registry file {path}: expected header {FeatureRegistry.HEADER}")
        for i, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 6:
                raise DataError(f"registry line {i}: expected 6 fields, got {len(row)}")
            name, group, direction, zref, actionable, units = [c.strip() for c in row]
            try:
                g = Group(group)
            except ValueError:
                raise DataError(f"registry line {i}: unknown group {group!r}") from None
            try:
                d = Direction(direction)
            except ValueError:
                raise DataError(f"registry line {i}: unknown direction {direction!r}") from None
            specs.append(FeatureSpec(
                name=name, group=g, direction=d,
                zero_reference=_parse_bool(zref, "zero_reference", i),
                actionable=_parse_bool(actionable, "actionable", i),
                units=units,
            ))
    return FeatureRegistry(specs)


# ---------------------------------------------------------------------------
# Built-in default catalog.
#
# Tuple layout: (name, group, direction, zero_reference, units).
# Actionability is derived: explainable features are actionable except
# NON_ACTIONABLE; Index/Categorical/Target are never actionable.
#
# Notes kept from the source schema review:
#   - trip_kms is recorded with units km (the upstream sheet said hours,
#     an evident typo for a distance).
#   - vehicle_class is a textual label (e.g. "Large SUV"), so it is kept
#     as Categorical even though it describes the vehicle.
#   - tyre-pressure means carry direction Positive as delivered; deployments
#     can override direction via configuration.
_I, _C, _V, _D, _E, _T = Group.INDEX, Group.CATEGORICAL, Group.VEHICLE, Group.DRIVING, Group.ENVIRONMENT, Group.TARGET
_P, _N, _0 = Direction.POSITIVE, Direction.NEGATIVE, Direction.NONE

_DEFAULT_ROWS = [
    ("vehicle_id", _I, _0, False, ""),
    ("date_tx", _I, _0, False, ""),
    ("vehicle_group", _C, _0, False, ""),
    ("make", _C, _0, False, ""),
    ("model", _C, _0, False, ""),
    ("year", _C, _0, False, ""),
    ("vin", _C, _0, False, ""),
    ("route_type", _C, _0, False, ""),
    ("vehicle_class", _C, _0, False, ""),
    ("diesel_detected", _C, _0, False, ""),
    ("duration_air_conditioner_on", _V, _P, True, "h"),
    ("duration_lights_left_on", _V, _P, True, "min"),
    ("duration_abs_on", _V, _P, True, "h"),
    ("duration_change_fuel_filter_light_on", _V, _P, True, "h"),
    ("cranking_events_below_10v", _V, _N, True, "count"),
    ("duration_diesel_particulate_filter_on", _V, _P, True, "h"),
    ("duration_pto", _V, _P, True, "h"),
    ("harsh_brakes_events", _D, _P, True, "count"),
    ("harsh_turns_events", _D, _P, True, "count"),
    ("jackrabbit_events", _D, _P, True, "count"),
    ("mean_braking_acc", _D, _P, False, "m/s2"),
    ("mean_forward_acc", _D, _P, False, "m/s2"),
    ("mean_up_down_acc", _D, _P, False, "m/s2"),
    ("mean_side_to_side_acc", _D, _P, False, "m/s2"),
    ("mean_speed_city", _D, _P, False, "km/h"),
    ("mean_speed_hwy", _D, _P, False, "km/h"),
    ("rpm_high", _D, _P, True, "count"),
    ("rpm_red", _D, _P, True, "count"),
    ("rpm_orange", _D, _P, True, "count"),
    ("rpm_yellow", _D, _P, True, "count"),
    ("speed_events_over_120", _D, _P, True, "count"),
    ("speed_events_over_90", _D, _P, True, "count"),
    ("duration_ecomode_on", _D, _N, False, "h"),
    ("ignition_events", _D, _P, False, "count"),
    ("duration_speed_control", _D, _N, False, "h"),
    ("count_neutral", _D, _P, True, "count"),
    ("count_reverse", _D, _P, True, "count"),
    ("duration_extra_passenger", _D, _P, True, "h"),
    ("height", _E, _N, False, "m"),
    ("duration_driving_uphill", _E, _P, True, "h"),
    ("duration_idle_drive", _D, _P, True, "h"),
    ("trip_kms", _E, _N, False, "km"),
    ("per_time_city", _E, _P, False, "fraction"),
    ("duration_hazard_lights_on", _V, _P, True, "h"),
    ("duration_oil_low_light_on", _V, _P, True, "h"),
    ("duration_oil_change_light_on", _V, _P, True, "h"),
    ("duration_oil_change_due_light_on", _V, _P, True, "h"),
    ("mean_engine_oil_temperature", _V, _P, False, "degC"),
    ("mean_transmission_oil_temperature", _V, _P, False, "degC"),
    ("variation_engine_oil_life", _V, _P, False, "fraction"),
    ("mean_oil_pressure", _V, _P, False, "Pa"),
    ("mean_engine_cool_temperature", _V, _P, False, "degC"),
    ("variation_coolant_level", _V, _P, False, "fraction"),
    ("duration_water_in_fuel_light_on", _V, _P, True, "h"),
    ("duration_engine_hot_light_on", _V, _P, True, "h"),
    ("hours_clean_exhaust_filter_light_on", _V, _P, True, "h"),
    ("variation_fuel_exhaust_fluid", _V, _P, True, "fraction"),
    ("variation_fuel_filter_life", _V, _P, True, "fraction"),
    ("distance_mil_on", _V, _P, True, "m"),
    ("total_odometer", _V, _P, False, "m"),
    ("mean_tyre_pressure_front_left", _V, _P, False, "Pa"),
    ("mean_tyre_pressure_front_right", _V, _P, False, "Pa"),
    ("mean_tyre_pressure_rear_left", _V, _P, False, "Pa"),
    ("mean_tyre_pressure_rear_right", _V, _P, False, "Pa"),
    ("mean_exterior_temperature", _V, _N, False, "degC"),
    ("duration_driving_temp_0_20", _E, _P, True, "h"),
    ("duration_driving_temp_minus20_0", _E, _P, True, "h"),
    ("duration_driving_temp_below_minus20", _E, _P, True, "h"),
    ("duration_raining", _E, _P, True, "h"),
    ("fuel_consumption", _T, _0, False, "L/100km"),
]


def default_registry() -> FeatureRegistry:
    specs = []
    for name, group, direction, zref, units in _DEFAULT_ROWS:
        actionable = group in EXPLAINABLE_GROUPS and name not in NON_ACTIONABLE
        specs.append(FeatureSpec(name, group, direction, zref, actionable, units))
    return FeatureRegistry(specs)
