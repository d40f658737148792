# -*- coding:utf-8 -*-

"""
Config module.

Date:   2026/10/19
"""

import os
import json

from hnrkit import const
from hnrkit.error import ConfigError


class Configure:
    """Configure module will load a json file like `config.json` and parse the content to json object.
        1. Configure content must be key-value pair, and `key` will be set as Config module's attributes;
        2. Invoking Config module's attributes cat get those values;
        3. Some `key` name is upper case are the build-in, and all `key` will be set to lower case:
            LOG: Logger print config.
            HEARTBEAT: Progress heartbeat config, default is {}.
            QUADRATURE: Quadrature defaults `{"tol": 1e-10, "max_depth": 60}`.
            TOLERANCES: Geometric tolerances, `contact_tol` / `angle_tol_deg` / `conv_tol` / `slab_tol`.
            WORKERS: Grid fan-out executor, `{"executor": "thread", "max_workers": null}`.
        4. Environment variable `HNR_TOL` overrides `QUADRATURE.tol`; it is read by `loads`, the
           import-time instance holds the built-in defaults.
    """

    def __init__(self):
        self.log = {}
        self.heartbeat = {}
        self.quadrature = {}
        self.tolerances = {}
        self.workers = {}
        self._update({}, use_env=False)

    def loads(self, config_file=None) -> None:
        """Load config file.

        Args:
            config_file: config json file.

        Raises:
            ConfigError: File unreadable, not JSON, or values out of range.
        """
        configures = {}
        if config_file:
            try:
                with open(config_file) as f:
                    configures = json.loads(f.read())
            except (OSError, ValueError) as e:
                raise ConfigError("config file {} error: {}".format(config_file, e))
            if not isinstance(configures, dict):
                raise ConfigError("config json file error! top level must be an object")
        self._update(configures)

    @property
    def tol(self):
        return self.quadrature["tol"]

    @property
    def max_depth(self):
        return self.quadrature["max_depth"]

    @property
    def contact_tol(self):
        return self.tolerances["contact_tol"]

    @property
    def angle_tol_deg(self):
        return self.tolerances["angle_tol_deg"]

    @property
    def conv_tol(self):
        return self.tolerances["conv_tol"]

    @property
    def slab_tol(self):
        return self.tolerances["slab_tol"]

    def _update(self, update_fields, use_env=True) -> None:
        """Update config attributes.

        Args:
            update_fields: Update fields.
            use_env: Apply the `HNR_TOL` override.
        """
        for section in ("LOG", "HEARTBEAT", "QUADRATURE", "TOLERANCES", "WORKERS"):
            if not isinstance(update_fields.get(section, {}), dict):
                raise ConfigError("config section {} must be an object".format(section))
        self.log = update_fields.get("LOG", {})
        self.heartbeat = update_fields.get("HEARTBEAT", {})

        quadrature = {"tol": const.DEFAULT_TOL, "max_depth": const.DEFAULT_MAX_DEPTH}
        quadrature.update(update_fields.get("QUADRATURE", {}))
        env_tol = os.environ.get("HNR_TOL") if use_env else None
        if env_tol:
            try:
                quadrature["tol"] = float(env_tol)
            except ValueError:
                raise ConfigError("HNR_TOL must be a float, got {!r}".format(env_tol))
        self.quadrature = quadrature

        tolerances = {
            "contact_tol": const.DEFAULT_CONTACT_TOL,
            "angle_tol_deg": const.DEFAULT_ANGLE_TOL_DEG,
            "conv_tol": const.DEFAULT_CONV_TOL,
            "slab_tol": const.DEFAULT_SLAB_TOL,
        }
        tolerances.update(update_fields.get("TOLERANCES", {}))
        self.tolerances = tolerances

        workers = {"executor": "thread", "max_workers": None}
        workers.update(update_fields.get("WORKERS", {}))
        self.workers = workers

        for k, v in update_fields.items():
            setattr(self, k.lower(), v)
        self.quadrature = quadrature
        self.tolerances = tolerances
        self.workers = workers
        self._validate()

    def _validate(self):
        try:
            self.quadrature["tol"] = float(self.quadrature["tol"])
            self.quadrature["max_depth"] = int(self.quadrature["max_depth"])
            for k, v in self.tolerances.items():
                self.tolerances[k] = float(v)
        except (TypeError, ValueError, OverflowError) as e:
            raise ConfigError("QUADRATURE and TOLERANCES values must be numbers: {}".format(e))
        if not self.quadrature["tol"] > 0:
            raise ConfigError("QUADRATURE.tol must be positive, got {}".format(self.quadrature["tol"]))
        if self.quadrature["max_depth"] < const.MIN_MAX_DEPTH:
            raise ConfigError("QUADRATURE.max_depth must be >= {}".format(const.MIN_MAX_DEPTH))
        for k, v in self.tolerances.items():
            if not v > 0:
                raise ConfigError("TOLERANCES.{} must be positive, got {}".format(k, v))
        if self.workers["executor"] not in ("thread", "process", "none"):
            raise ConfigError("WORKERS.executor must be thread / process / none")


config = Configure()
