# Licensed under a 3-clause BSD style license - see LICENSE.rst

__all__ = ['__version__', 'test']

import os

try:
	from importlib.metadata import version as _metadata_version, PackageNotFoundError
	try:
		__version__ = _metadata_version(__package__)
	except PackageNotFoundError:
		__version__ = '0.1.dev'
except ImportError:
	__version__ = '0.1.dev'

# set up the test command; the unit tests live next to setup.py
from astropy.tests.runner import TestRunner
test = TestRunner.make_test_runner_in(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
