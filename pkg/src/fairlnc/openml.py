"""Download OpenML datasets by id into a local, id-keyed cache.

Cache layout: ``<cache_dir>/<id>/data.arff``. Cached files are reused
without touching the network and are never invalidated automatically.
"""
import json
import os
import urllib.error
import urllib.request
from pathlib import Path

from filelock import FileLock

from .errors import FetchError, ValidationError

API_URL = "https://www.openml.org/api/v1/json/data/{id}"


def default_cache_dir():
    return Path(os.environ.get("FAIRLNC_CACHE", Path.home() / ".cache" / "fairlnc" / "openml"))


def cached_path(dataset_id, cache_dir):
    return Path(cache_dir) / str(dataset_id) / "data.arff"


def _get(url, timeout):
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read()
    except urllib.error.HTTPError as exc:
        raise FetchError(f"GET {url} failed", status=exc.code) from exc
    except (urllib.error.URLError, OSError) as exc:
        raise FetchError(f"GET {url} failed: {getattr(exc, 'reason', exc)}") from exc


def fetch_openml(dataset_id, cache_dir, timeout=60):
    """Return the local path of OpenML dataset ``dataset_id``, downloading if needed."""
    if isinstance(dataset_id, bool) or not isinstance(dataset_id, int) or dataset_id <= 0:
        raise ValidationError(f"OpenML ids are positive integers, got {dataset_id!r}")
    target = cached_path(dataset_id, cache_dir)
    if target.exists():
        return target
    target.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(target.parent / ".lock")):
        if target.exists():
            return target
        raw = _get(API_URL.format(id=dataset_id), timeout)
        try:
            url = json.loads(raw)["data_set_description"]["url"]
        except (ValueError, KeyError) as exc:
            raise FetchError(f"unexpected description for dataset {dataset_id}") from exc
        body = _get(url, timeout)
        tmp = target.with_suffix(".part")
        tmp.write_bytes(body)
        os.replace(tmp, target)
    return target
