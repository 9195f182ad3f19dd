#!/usr/bin/env python
# Licensed under a 3-clause BSD style license - see LICENSE.rst

# Package metadata, requirements and the console entry point all live in
# setup.cfg.

from setuptools import setup

setup()
