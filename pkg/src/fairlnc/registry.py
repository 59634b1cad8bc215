"""Bundled dataset registry (OpenML ids, reference characterizations, configs)."""
from functools import lru_cache
from importlib import resources

import yaml

from .dataset import DatasetConfig, DatasetSummary
from .errors import ConfigError


@lru_cache(maxsize=None)
def entries():
    text = resources.files("fairlnc").joinpath("data/registry.yaml").read_text()
    return yaml.safe_load(text)


def names():
    return sorted(entries())


def dataset_config(name):
    try:
        entry = entries()[name]
    except KeyError:
        raise ConfigError(f"unknown dataset {name!r}; registry has {names()}") from None
    if "config" not in entry:
        raise ConfigError(f"dataset {name!r} has no configuration in the registry yet")
    return DatasetConfig.from_dict({"name": name, "openml_id": entry["openml_id"],
                                    **entry["config"]})


def reference_summary(name):
    """The published characterization of ``name`` as a DatasetSummary (fractions)."""
    t = entries()[name]["table1"]
    return DatasetSummary(
        n_instances=t["instances"],
        n_features=t["features"],
        frac_positive=t["positive"] / 100,
        frac_protected=t["protected"] / 100,
        frac_positive_protected=t["positive_protected"] / 100,
        frac_positive_unprotected=t["positive_unprotected"] / 100,
    )
