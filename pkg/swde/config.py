import json
import os
from typing import Optional

from swde.errors import InvalidTruncation
from swde.utils import project_absolute_path, update_nested_dict

TRUNCATION_ENV = "SCHWARZIAN_TRUNC"
MIN_TRUNCATION = 4


def parse_truncation(raw: str, source: str = TRUNCATION_ENV) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise InvalidTruncation(raw, source, MIN_TRUNCATION)
    if value < MIN_TRUNCATION:
        raise InvalidTruncation(raw, source, MIN_TRUNCATION)
    return value


class SWDEConfig:
    def __init__(self, overrides: Optional[dict] = None):
        with open(project_absolute_path("config", "analysis.json"), "r") as cfg:
            self._analysis_config = json.load(cfg)

        # environment overrides the file, explicit overrides win over both
        env_trunc = os.environ.get(TRUNCATION_ENV)
        if env_trunc:
            truncation = parse_truncation(env_trunc)
            update_nested_dict(self._analysis_config, ["series", "truncation"], truncation)
        for keys, value in (overrides or {}).items():
            update_nested_dict(self._analysis_config, keys.split("."), value)

    def truncation(self) -> int:
        return int(self._analysis_config["series"]["truncation"])

    def max_shift(self) -> int:
        return int(self._analysis_config["normalization"]["max_shift"])

    def batch_workers(self) -> int:
        return int(self._analysis_config["batch"]["workers"])

    def json_indent(self) -> int:
        return int(self._analysis_config["output"]["json_indent"])

    def serialize(self) -> dict:
        return self._analysis_config
