# pyright: reportAny=false
# pyright: reportExplicitAny=false

import inspect
import json
import logging
from collections.abc import Mapping, Sequence
from pathlib import Path
from types import UnionType
from typing import Any, Literal, Union, cast, get_args, get_origin, is_typeddict

import novikov_groebner.json_schemas as json_schemas
from novikov_groebner.catalog import read_manifest, verify_catalog


def value_matches_type(data: Any, typeddict_class: Any) -> bool:
    """
    Recursively validates that the given data conforms to the structure defined by the TypedDict class.

    Required keys (those declared outside `total=False`) must be present; unknown keys are rejected.

    Args:
        data: The data to validate (typically parsed from JSON)
        typeddict_class: A TypedDict class, or any annotation appearing inside one

    Returns:
        bool: True if the data matches the TypedDict schema, False otherwise
    """  # noqa: E501

    type_origin = get_origin(typeddict_class)
    type_args: tuple[Any, ...] = get_args(typeddict_class)

    if typeddict_class is Any:
        return True

    if typeddict_class is None or typeddict_class is type(None):
        return data is None

    if type_origin is UnionType or type_origin is Union:
        return any(value_matches_type(data, type_arg) for type_arg in type_args)

    if type_origin is Literal:
        return data in type_args

    if is_typeddict(typeddict_class):
        if not isinstance(data, Mapping):
            return False

        annotations = typeddict_class.__annotations__
        missing = set(typeddict_class.__required_keys__) - set(data)

        if missing:
            return False

        for key, value in cast(Mapping[str, object], data).items():
            if key not in annotations:
                return False

            if not value_matches_type(value, annotations[key]):
                return False

        return True

    if isinstance(type_origin, type) and issubclass(type_origin, Mapping):
        if not isinstance(data, Mapping):
            return False

        if len(type_args) != 2:
            return True

        key_type, value_type = type_args

        for key, value in cast(Mapping[object, object], data).items():
            if not value_matches_type(key, key_type):
                return False

            if not value_matches_type(value, value_type):
                return False

        return True

    if isinstance(type_origin, type) and issubclass(type_origin, Sequence):
        if not isinstance(data, Sequence) or isinstance(data, str):
            return False

        if len(type_args) == 0:
            return True

        sequence_type = type_args[0]

        return all(value_matches_type(item, sequence_type) for item in data)

    if typeddict_class is bool:
        return isinstance(data, bool)

    if typeddict_class is int:
        return isinstance(data, int) and not isinstance(data, bool)

    if inspect.isclass(typeddict_class):
        return isinstance(data, typeddict_class)

    return False  # Unknown annotation


def validate_test(
    logger: logging.Logger,
    sample_path: str | Path,
    schema: type,
):
    logger.info(f"Validating {sample_path}")

    with open(sample_path, encoding="utf-8") as f:
        document = json.load(f)

    assert value_matches_type(document, schema)

    logger.info(f"{sample_path} is valid.")


def test_shipped_manifest_matches_schema():
    assert value_matches_type(read_manifest(), json_schemas.ManifestJSON)


def test_schema_rejects_malformed_records():
    record = {"name": "g3", "dim": 3, "field": "R", "brackets": ["[e1, e2] = e3"]}

    assert value_matches_type(record, json_schemas.LieRecordJSON)
    assert not value_matches_type({**record, "field": "Q"}, json_schemas.LieRecordJSON)
    assert not value_matches_type({**record, "dim": "3"}, json_schemas.LieRecordJSON)
    assert not value_matches_type({**record, "colour": "red"}, json_schemas.LieRecordJSON)
    assert not value_matches_type(
        {k: v for k, v in record.items() if k != "brackets"}, json_schemas.LieRecordJSON
    )


def test_catalog_report_matches_schema():
    report = verify_catalog("examples")

    assert value_matches_type(report.as_dict(), json_schemas.CatalogReportJSON)


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/validate_json.log")
    manifest_path = Path(__file__).parent.parent / "novikov_groebner" / "data" / "manifest.json"

    validate_test(logger, manifest_path, json_schemas.ManifestJSON)
    test_schema_rejects_malformed_records()
    test_catalog_report_matches_schema()
    logger.info("JSON schema checks passed.")
