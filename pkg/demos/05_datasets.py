"""
Loading, summarizing and splitting datasets
===========================================

A dataset is a delimited or ARFF file plus a small config naming the
sensitive column, the protected value and the positive class.
"""
import tempfile
from pathlib import Path

import numpy as np

from fairlnc.dataset import DatasetConfig, load_local, split, summarize
from fairlnc.registry import dataset_config, names, reference_summary

tmp = Path(tempfile.mkdtemp())
(tmp / "applicants.csv").write_text(
    "age,sex,degree,hired\n"
    "31,F,bsc,yes\n45,M,msc,no\n27,F,phd,yes\n52,M,bsc,yes\n"
    "38,F,msc,no\n29,M,phd,no\n41,F,bsc,no\n33,M,msc,yes\n"
)
config = DatasetConfig(name="applicants", path=str(tmp / "applicants.csv"), sensitive="sex",
                       protected="F", target="hired", positive="yes",
                       encoding={"degree": "onehot"})
d = load_local(config.path, config)
print(d.feature_names)
print(summarize(d).as_row())

# 50/50 stratified split: each (label, group) cell is halved
train, test = split(d, test_fraction=0.5, seed=0)
print("train", train.n, "test", test.n, "test groups", np.bincount(test.group))

# the registry keeps reference characteristics and configs for OpenML data
print(names())
print(reference_summary("credit").as_row())
print(dataset_config("credit").to_dict())
