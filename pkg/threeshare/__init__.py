# Licensed under a 3-clause BSD style license - see LICENSE.rst

"""
Tools for three-secret sharing: secret domains and their 21 symmetry
families, distribution schemes with exact correctness and privacy
verification, information-theoretic lower bounds on randomness complexity
built from residual information, and a combinatorial certifier for the
remaining lower bounds.
"""

from ._astropy_init import *

from astropy import config as _config


class Conf(_config.ConfigNamespace):
	"""
	Configuration parameters for `threeshare`.
	"""
	eps_schedule = _config.ConfigItem(
		"1e-2,1e-3,1e-4,1e-5,1e-6",
		"Comma-separated, strictly decreasing perturbation values used by epsilon sweeps.")
	node_budget = _config.ConfigItem(
		20000000,
		"Maximum number of search nodes expanded by one support-structure search.")
	k_max = _config.ConfigItem(
		8,
		"Largest randomness-support size tried by combinatorial certification.")
	optimizer_restarts = _config.ConfigItem(
		8,
		"Number of random restarts of the bound optimizer.")
	optimizer_steps = _config.ConfigItem(
		300,
		"Number of local moves per optimizer restart.")
	optimizer_seed = _config.ConfigItem(
		0,
		"Seed of the bound optimizer's random number generator.")
	warm_start_epsilon = _config.ConfigItem(
		1e-4,
		"Perturbation used when a preset family warm-starts the optimizer.")
	float_support_threshold = _config.ConfigItem(
		1e-12,
		"Masses at or below this value are outside the support of a float pmf.")
	entropy_tolerance = _config.ConfigItem(
		1e-9,
		"Tolerance for zero tests on floating-point information measures.")

conf = Conf()

del _config


from . import datautils, domains, infotheory, schemes, bounds, certifier
from .domains import Domain, Transform, ClassifyAll, FamilyOf
from .infotheory import JointPmf
from .schemes import Scheme, CanonicalScheme, ReducedScheme, Verify
from .bounds import EvaluateBound, PresetFamily, StarTripleFamily
from .certifier import SupportStructure, Search, CertifiedLowerBound
