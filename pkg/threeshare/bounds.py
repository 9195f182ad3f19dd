# Information-theoretic lower bounds on randomness complexity.
#
# A bound instance takes a triple of secret distributions (p, p', p'') on a
# domain. With roles (r1, r2, r3) = a permutation of (X1, X2, X3):
#
#   LB2 = H(r1',r2'|r3') + RI(r2';r3') + H(r1'',r3''|r2'') + RI(r1'';r2'') - H(r1)
#         with p' matching p on the r2 margin and p'' matching p on r1
#   LB1 = H(r1',r2'|r3') + RI(r1';r3') + H(r1'',r3''|r2'') + RI(r1'';r2'') - H(r1)
#         with both p' and p'' matching p on the r1 margin
#
# Any triple meeting the margin constraints gives a valid lower bound on
# log2 |R| for every scheme on the domain; the true bound is a supremum
# over triples, approached here by epsilon-families of full-support
# triples and by a hill-climbing optimizer.

# Licensed under a 3-clause BSD style license - see LICENSE.rst

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from astropy import log

from . import conf
from .datautils import (MarginConstraintError, EpsilonRangeError, DomainError,
						ParseError, ToFraction, SymbolicValue, ListDataFrame)
from .domains import (Domain, ApplyTransform, GetFamily, FamilyOf, ALL_TRANSFORMS,
						N_COORDS)
from .infotheory import (JointPmf, Entropy, ConditionalEntropy, ConditionalMutualInformation,
						ResidualInformation)
from .schemes import SECRET_AXES, SHARE_AXES, PARTY_VIEW_AXES


VARIANTS = ("LB1", "LB2")
COMBINATORIAL = "combinatorial"



@dataclass(frozen=True)
class BoundSpec(object):
	"""Bound variant plus role assignment: role j (r1, r2, r3) is played by
	coordinate permutation[j] (0-based)."""
	variant: str = "LB2"
	permutation: tuple = (0, 1, 2)

	def __post_init__(self):
		if self.variant not in VARIANTS:
			msg = "bound variant must be LB1 or LB2 (got %s)" % self.variant
			raise ValueError(msg)
		permutation = tuple(int(p) for p in self.permutation)
		if sorted(permutation) != [0, 1, 2]:
			msg = "invalid role permutation %s" % (self.permutation,)
			raise ValueError(msg)
		object.__setattr__(self, "permutation", permutation)

	@property
	def roles( self ):
		"""Axis names of (r1, r2, r3)."""
		return tuple(SECRET_AXES[i] for i in self.permutation)

	@property
	def primeConstraint( self ):
		"""Axis on which p' must match p."""
		r1, r2, r3 = self.roles
		return r2 if self.variant == "LB2" else r1

	@property
	def doubleConstraint( self ):
		return self.roles[0]

	def __str__( self ):
		return "%s:%s" % (self.variant, "".join(str(i + 1) for i in self.permutation))


ALL_BOUND_SPECS = tuple(BoundSpec(variant, permutation) for variant in VARIANTS
						for permutation in itertools.permutations(range(N_COORDS)))
DEFAULT_SPEC = BoundSpec("LB2", (0, 1, 2))


def ParseBoundSpec( text ):
	"""Parses "LB2:123" style specifications; the digits give the
	coordinates playing roles r1, r2, r3."""
	pieces = text.strip().split(":")
	variant = pieces[0].upper()
	digits = pieces[1] if len(pieces) == 2 else "123"
	if (len(pieces) > 2 or variant not in VARIANTS or len(digits) != 3
			or sorted(digits) != ["1", "2", "3"]):
		msg = "cannot read bound spec \"%s\" (expected e.g. LB2:123)" % text
		raise ParseError(msg)
	return BoundSpec(variant, tuple(int(ch) - 1 for ch in digits))



def SecretPmf( domain, weights, exact=None ):
	"""JointPmf over (X1, X2, X3) from a dict keyed by secret tuples or, for
	binary domains, bitstrings. All mass must lie on the domain."""
	converted = {}
	for key, w in weights.items():
		x = tuple(int(ch) for ch in key) if isinstance(key, str) else tuple(key)
		if x not in domain:
			msg = "secret %s is not in domain %s" % (key, domain)
			raise DomainError(msg)
		converted[x] = converted.get(x, 0) + w
	return JointPmf(SECRET_AXES, converted, alphabets=domain.alphabets)


@dataclass(frozen=True)
class DistributionTriple(object):
	"""The outer distribution p and the two inner distributions p' and p''
	of a bound instance, all over (X1, X2, X3)."""
	p: JointPmf
	pPrime: JointPmf
	pDouble: JointPmf

	def IsExact( self ):
		return self.p.IsExact() and self.pPrime.IsExact() and self.pDouble.IsExact()


@dataclass(frozen=True)
class BoundEvaluation(object):
	"""Bound value with its four terms and H(r1) of the outer distribution:
	value = sum(terms) - hX1."""
	value: float
	terms: tuple
	hX1: float
	spec: BoundSpec
	triple: DistributionTriple = None

	def Row( self ):
		return [self.value] + list(self.terms) + [self.hX1]


def _CheckMargin( outer, inner, axis, innerName, spec ):
	m1 = outer.Marginal(axis)
	m2 = inner.Marginal(axis)
	keys = set(m1) | set(m2)
	if outer.IsExact() and inner.IsExact():
		bad = [k for k in keys if m1.get(k, 0) != m2.get(k, 0)]
	else:
		bad = [k for k in keys if abs(float(m1.get(k, 0)) - float(m2.get(k, 0))) > conf.entropy_tolerance]
	if bad:
		def Show( m ):
			return "{" + ", ".join("%s: %s" % (k[0], m[k]) for k in sorted(m, key=str)) + "}"
		msg = ("%s: margin of %s under %s is %s, but under p it is %s" %
				(spec, axis, innerName, Show(m2), Show(m1)))
		raise MarginConstraintError(msg)


def CheckMarginConstraints( spec, triple ):
	_CheckMargin(triple.p, triple.pPrime, spec.primeConstraint, "p'", spec)
	_CheckMargin(triple.p, triple.pDouble, spec.doubleConstraint, "p''", spec)


def EvaluateBound( spec, triple ):
	"""Evaluates one LB1/LB2 instance on a distribution triple.

	Parameters
	----------
	spec : BoundSpec
	triple : DistributionTriple

	Returns
	-------
	evaluation : BoundEvaluation

	Raises MarginConstraintError when the inner distributions do not match
	the outer one on the constrained margins (exactly for rational triples,
	within conf.entropy_tolerance for float triples).
	"""
	CheckMarginConstraints(spec, triple)
	r1, r2, r3 = spec.roles
	term1 = ConditionalEntropy(triple.pPrime, (r1, r2), r3)
	if spec.variant == "LB2":
		term2 = ResidualInformation(triple.pPrime, r2, r3)
	else:
		term2 = ResidualInformation(triple.pPrime, r1, r3)
	term3 = ConditionalEntropy(triple.pDouble, (r1, r3), r2)
	term4 = ResidualInformation(triple.pDouble, r1, r2)
	hX1 = Entropy(triple.p, r1)
	terms = (term1, term2, term3, term4)
	return BoundEvaluation(sum(terms) - hX1, terms, hX1, spec, triple)



@dataclass(frozen=True)
class EpsilonFamily(object):
	"""A one-parameter family of triples on `domain`, valid for
	0 < eps <= epsMax, whose bound values approach `limitLabel` (bits, in
	symbolic form) as eps -> 0. Triples have full support unless the family
	is derived."""
	domain: Domain
	builder: object
	epsMax: Fraction
	familyId: int = None
	limitLabel: str = None
	derived: bool = False
	name: str = ""

	@property
	def limitValue( self ):
		return SymbolicValue(self.limitLabel)

	def Triple( self, eps ):
		eps = ToFraction(eps)
		if not 0 < eps <= self.epsMax:
			msg = "epsilon %s outside (0, %s] for %s" % (eps, self.epsMax, self.name)
			raise EpsilonRangeError(msg)
		return self.builder(eps)


def _Bits( weights ):
	return {tuple(int(ch) for ch in key): Fraction(w) for key, w in weights.items()}


def _MixedPmf( domain, limit, eps ):
	n = len(domain)
	weights = {x: eps / n for x in domain.members}
	for x, w in limit.items():
		weights[x] += (1 - eps) * w
	return JointPmf(SECRET_AXES, weights, alphabets=domain.alphabets)


def _Thirds( *keys ):
	return {k: Fraction(1, 3) for k in keys}

def _Halves( *keys ):
	return {k: Fraction(1, 2) for k in keys}

def _Quarters( *keys ):
	return {k: Fraction(1, 4) for k in keys}

def _Point( key ):
	return {key: Fraction(1)}


# Limiting triples (p, p', p'') of the preset families. Each entry:
# (preset domain, p, p', p'', limit label, derived).
_D11 = ["000", "001", "010", "100"]
_LIMIT_17 = (_Halves("000", "010"), _Quarters("001", "010", "101", "110"), _Halves("000", "001"))
_LIMIT_15 = (_Halves("000", "010"), _Quarters("000", "100", "010", "110"), _Halves("000", "001"))
_LIMIT_11 = (_Thirds("000", "001", "010"), _Thirds("000", "010", "100"), _Halves("000", "001"))
_LIMIT_9 = (_Halves("000", "001"), _Halves("000", "100"), _Halves("000", "001"))
_LIMIT_7 = (_Halves("000", "011"),) * 3
_LIMIT_4 = (_Halves("000", "001"),) * 3
_LIMIT_0 = (_Point("000"),) * 3

PRESET_LIMITS = {
	1: (["000"], _LIMIT_0, "0", True),
	2: (["000", "011"], _LIMIT_0, "0", True),
	3: (["000", "111"], _LIMIT_0, "0", True),
	4: (["000", "001"], _LIMIT_4, "1", False),
	5: (["000", "001", "110"], _LIMIT_4, "1", False),
	6: (["000", "001", "110", "111"], _LIMIT_4, "1", False),
	7: (["000", "011", "101"], _LIMIT_7, "1", False),
	8: (["000", "011", "101", "110"], _LIMIT_7, "1", False),
	9: (["000", "001", "100"], _LIMIT_9, "2", False),
	10: (["000", "001", "100", "101"], _LIMIT_9, "2", False),
	11: (_D11, _LIMIT_11, "log2(6)", False),
	12: (_D11 + ["111"], _LIMIT_11, "log2(6)", False),
	15: (["000", "001", "010", "100", "110"], _LIMIT_15, "3", False),
	16: (["000", "001", "010", "011", "100", "110"], _LIMIT_15, "3", False),
	17: (["000", "001", "010", "101", "110"], _LIMIT_17, "3", False),
	18: (["000", "001", "010", "011", "101", "110"], _LIMIT_17, "3", False),
	19: (["000", "001", "010", "101", "110", "111"], _LIMIT_17, "3", False),
	20: (["000", "001", "010", "011", "100", "101", "110"], _LIMIT_17, "3", False),
	21: (["000", "001", "010", "011", "100", "101", "110", "111"], _LIMIT_17, "3", False),
}


def PresetFamily( familyId ):
	"""Epsilon family reaching the published bound of a domain family.

	The presets of families 4-21 mix a limiting triple with the uniform
	distribution on the preset domain, (1 - eps) limit + eps uniform, for
	0 < eps <= 1/2. The preset domain is a member of the family. Families 13
	and 14 have no information-theoretic preset and return COMBINATORIAL.
	Families 1-3 are derived: every eps gives the same point mass on 000, so
	the bound is exactly 0 along the whole sweep.
	"""
	GetFamily(familyId)
	if familyId not in PRESET_LIMITS:
		return COMBINATORIAL
	bits, limits, label, derived = PRESET_LIMITS[familyId]
	domain = Domain.FromBitstrings(bits)
	pLimit, pPrimeLimit, pDoubleLimit = (_Bits(limit) for limit in limits)

	def Build( eps ):
		return DistributionTriple(_MixedPmf(domain, pLimit, eps), _MixedPmf(domain, pPrimeLimit, eps),
									_MixedPmf(domain, pDoubleLimit, eps))

	def BuildPoint( eps ):
		return DistributionTriple(*(JointPmf(SECRET_AXES, w, alphabets=domain.alphabets)
									for w in (pLimit, pPrimeLimit, pDoubleLimit)))

	return EpsilonFamily(domain, BuildPoint if derived else Build, Fraction(1, 2), familyId=familyId,
						limitLabel=label, derived=derived, name="family %d preset" % familyId)


def StarTripleFamily():
	"""Skewed family on {000,001,010,100} whose bound is exactly
	h(1/3 - eps) + (2/3 - 2 eps) + (1 - 4 eps), rising to log2(6) as
	eps -> 0 (valid for 0 < eps <= 1/12)."""
	domain = Domain.FromBitstrings(_D11)
	third = Fraction(1, 3)
	half = Fraction(1, 2)

	def Build( eps ):
		p = SecretPmf(domain, {"000": third - eps, "001": third - eps, "010": third - eps, "100": 3*eps})
		pPrime = SecretPmf(domain, {"000": third - eps, "010": third - eps, "100": third - eps, "001": 3*eps})
		pDouble = SecretPmf(domain, {"000": half - 2*eps, "001": half - 2*eps, "010": eps, "100": 3*eps})
		return DistributionTriple(p, pPrime, pDouble)

	return EpsilonFamily(domain, Build, Fraction(1, 12), familyId=11, limitLabel="log2(6)",
						derived=False, name="star triple family")



def ParseEpsSchedule( text ):
	try:
		schedule = [float(s) for s in text.split(",") if s.strip() != ""]
	except ValueError:
		msg = "cannot read epsilon schedule \"%s\"" % text
		raise ParseError(msg)
	if len(schedule) == 0:
		msg = "empty epsilon schedule \"%s\"" % text
		raise ParseError(msg)
	return schedule


@dataclass(frozen=True)
class SweepRow(object):
	epsilon: float
	evaluation: BoundEvaluation


@dataclass(frozen=True)
class SweepResult(object):
	"""Bound values along a decreasing epsilon schedule; limitEstimate is the
	value at the smallest epsilon."""
	family: EpsilonFamily
	spec: BoundSpec
	rows: tuple
	limitEstimate: float
	monotone: bool


def EpsilonSweep( family, spec=DEFAULT_SPEC, schedule=None ):
	"""Evaluates the bound of an epsilon family along a strictly decreasing
	schedule (conf.eps_schedule by default) and records whether the values
	are non-decreasing as epsilon shrinks."""
	if schedule is None:
		schedule = ParseEpsSchedule(conf.eps_schedule)
	schedule = list(schedule)
	for a, b in zip(schedule[:-1], schedule[1:]):
		if not b < a:
			msg = "epsilon schedule %s is not strictly decreasing" % schedule
			raise EpsilonRangeError(msg)
	rows = []
	for eps in schedule:
		evaluation = EvaluateBound(spec, family.Triple(eps))
		log.debug("%s, eps = %g: %.9f" % (family.name, eps, evaluation.value))
		rows.append(SweepRow(float(eps), evaluation))
	values = [row.evaluation.value for row in rows]
	monotone = all(b >= a - conf.entropy_tolerance for a, b in zip(values[:-1], values[1:]))
	if not monotone:
		log.warning("%s: bound values are not monotone along the schedule" % family.name)
	log.info("%s, %s: limit estimate %.6f" % (family.name, spec, values[-1]))
	return SweepResult(family, spec, tuple(rows), values[-1], monotone)


def SweepDataFrame( result ):
	"""Sweep rows as a report table: family, epsilon, value, the four terms
	and H(X1)."""
	columnNames = ["family", "epsilon", "value", "term1", "term2", "term3", "term4", "H(X1)"]
	formats = {"epsilon": "%.3g"}
	for name in columnNames[2:]:
		formats[name] = "%.6f"
	frame = ListDataFrame.Empty(columnNames, formats=formats)
	label = result.family.familyId if result.family.familyId is not None else "-"
	for row in result.rows:
		frame.AddRow([label, row.epsilon] + row.evaluation.Row())
	return frame



def TensorSquare( triple ):
	"""Two independent copies of a triple, as a triple over pair-valued
	coordinates ((a1, b1), (a2, b2), (a3, b3))."""
	def Square( p ):
		weights = {}
		for a, wa in p.weights.items():
			for b, wb in p.weights.items():
				weights[tuple(zip(a, b))] = wa * wb
		alphabets = [tuple(itertools.product(alphabet, alphabet)) for alphabet in p.alphabets]
		return JointPmf(p.axes, weights, alphabets=alphabets)
	return DistributionTriple(Square(triple.p), Square(triple.pPrime), Square(triple.pDouble))



# Optimizer

def _TransportTriple( triple, t ):
	def Move( p ):
		weights = {t.Apply(x): w for x, w in p.weights.items()}
		return JointPmf(SECRET_AXES, weights)
	return DistributionTriple(Move(triple.p), Move(triple.pPrime), Move(triple.pDouble))


def _WarmStart( domain, spec ):
	"""Best preset triple (by limit) that some transform with the spec's role
	permutation maps into `domain`, at conf.warm_start_epsilon."""
	if spec.variant != "LB2" or not domain.IsBinary():
		return None
	best = None
	for familyId in sorted(PRESET_LIMITS):
		family = PresetFamily(familyId)
		for t in ALL_TRANSFORMS:
			if t.permutation != spec.permutation:
				continue
			if ApplyTransform(family.domain, t).IsSubsetOf(domain):
				if best is None or family.limitValue > best[0].limitValue:
					best = (family, t)
				break
	if best is None:
		return None
	family, t = best
	log.debug("warm start from %s via %s" % (family.name, t))
	return _TransportTriple(family.Triple(conf.warm_start_epsilon), t)


class _TripleParameters(object):
	"""Free parameters of a triple meeting the margin constraints: p on the
	simplex over the domain, and p', p'' as conditional distributions on the
	fibers of their constrained coordinates, scaled by p's margin."""

	def __init__(self, domain, spec):
		self.members = list(domain.members)
		self.primeAxis = SECRET_AXES.index(spec.primeConstraint)
		self.doubleAxis = SECRET_AXES.index(spec.doubleConstraint)
		self.primeFibers = self._Fibers(self.primeAxis)
		self.doubleFibers = self._Fibers(self.doubleAxis)
		self.alphabets = domain.alphabets

	def _Fibers( self, axis ):
		fibers = {}
		for k, x in enumerate(self.members):
			fibers.setdefault(x[axis], []).append(k)
		return [np.array(indices) for value, indices in sorted(fibers.items(), key=lambda kv: str(kv[0]))]

	def Blocks( self, state ):
		"""Simplex blocks that moves act on: (array, indices) pairs."""
		p, qPrime, qDouble = state
		blocks = [(p, np.arange(len(self.members)))]
		blocks.extend((qPrime, fiber) for fiber in self.primeFibers if len(fiber) > 1)
		blocks.extend((qDouble, fiber) for fiber in self.doubleFibers if len(fiber) > 1)
		return blocks

	def _Inner( self, p, q, fibers ):
		inner = np.zeros(len(self.members))
		for fiber in fibers:
			inner[fiber] = p[fiber].sum() * q[fiber]
		return inner

	def Triple( self, state ):
		p, qPrime, qDouble = state
		def Pmf( w ):
			w = w / w.sum()
			return JointPmf(SECRET_AXES, {x: float(w[k]) for k, x in enumerate(self.members)},
							alphabets=self.alphabets)
		return DistributionTriple(Pmf(p), Pmf(self._Inner(p, qPrime, self.primeFibers)),
									Pmf(self._Inner(p, qDouble, self.doubleFibers)))

	def _Conditional( self, w, fibers ):
		q = np.zeros(len(self.members))
		for fiber in fibers:
			mass = w[fiber].sum()
			q[fiber] = w[fiber] / mass if mass > 0 else 1.0 / len(fiber)
		return q

	def FromTriple( self, triple, mixing ):
		"""Parameters of a given triple, mixed with the uniform distribution
		so that every member has positive mass."""
		def Vector( pmf ):
			w = np.array([float(pmf[x]) for x in self.members])
			return (1 - mixing) * w / w.sum() + mixing / len(self.members)
		p = Vector(triple.p)
		return (p, self._Conditional(Vector(triple.pPrime), self.primeFibers),
				self._Conditional(Vector(triple.pDouble), self.doubleFibers))

	def Random( self, rng ):
		n = len(self.members)
		p = rng.dirichlet(np.ones(n))
		qPrime = np.zeros(n)
		qDouble = np.zeros(n)
		for fiber in self.primeFibers:
			qPrime[fiber] = rng.dirichlet(np.ones(len(fiber)))
		for fiber in self.doubleFibers:
			qDouble[fiber] = rng.dirichlet(np.ones(len(fiber)))
		return (p, qPrime, qDouble)


def OptimizeBound( domain, spec=DEFAULT_SPEC, restarts=None, steps=None, seed=None ):
	"""Multi-start hill climb over margin-respecting triples on a domain.

	Each move transfers a random fraction of one point's mass to another
	point in the same simplex block (p, or one fiber of p' or p''), with the
	move size shrinking over the run; only improvements are kept. The first
	restart is warm-started from the best preset that fits the domain.
	Restarts are seeded by (seed, restart index), so results are
	deterministic.

	Returns
	-------
	evaluation : BoundEvaluation
		The best instance found; a valid lower bound, not a certified
		supremum.
	"""
	if restarts is None:
		restarts = conf.optimizer_restarts
	if steps is None:
		steps = conf.optimizer_steps
	if seed is None:
		seed = conf.optimizer_seed
	if len(domain) == 1:
		point = SecretPmf(domain, {domain.members[0]: Fraction(1)})
		return EvaluateBound(spec, DistributionTriple(point, point, point))
	params = _TripleParameters(domain, spec)
	warm = _WarmStart(domain, spec)
	best = None
	for restart in range(restarts):
		rng = np.random.default_rng([seed, restart])
		if restart == 0 and warm is not None:
			state = params.FromTriple(warm, conf.warm_start_epsilon)
		else:
			state = params.Random(rng)
		current = EvaluateBound(spec, params.Triple(state))
		for step in range(steps):
			scale = 0.5 * (1.0 - step / steps) + 0.01
			blocks = params.Blocks(state)
			array, indices = blocks[rng.integers(len(blocks))]
			i, j = rng.choice(indices, size=2, replace=False)
			delta = rng.uniform(0.0, scale) * array[i]
			trial = tuple(a.copy() for a in state)
			which = next(k for k in range(3) if state[k] is array)
			trial[which][i] -= delta
			trial[which][j] += delta
			candidate = EvaluateBound(spec, params.Triple(trial))
			if candidate.value > current.value:
				state = trial
				current = candidate
		log.debug("restart %d: %.6f" % (restart, current.value))
		if best is None or current.value > best.value:
			best = current
	log.info("optimized %s on %s: best %.6f over %d restarts" % (spec, domain, best.value, restarts))
	return best



@functools.lru_cache(maxsize=None)
def PresetLimitEstimate( familyId ):
	"""Sweep limit estimate of a family's preset under the default spec and
	schedule; None for combinatorial families."""
	family = PresetFamily(familyId)
	if family == COMBINATORIAL:
		return None
	return EpsilonSweep(family).limitEstimate


def BestBoundOverSupersets( domain ):
	"""Largest preset limit over all non-empty subsets of a binary domain: a
	bound for a subset is a bound for the domain."""
	if not domain.IsBinary():
		msg = "BestBoundOverSupersets needs a binary domain (got %s)" % domain
		raise DomainError(msg)
	mask = domain.binaryMask
	best = 0.0
	bestFamily = None
	sub = mask
	while sub > 0:
		familyId = FamilyOf(Domain.FromMask(sub)).familyId
		value = PresetLimitEstimate(familyId)
		if value is not None and value > best:
			best = value
			bestFamily = familyId
		sub = (sub - 1) & mask
	log.info("best preset bound for %s: %.6f (family %s)" % (domain, best, bestFamily))
	return best



# Share-level inequalities on an induced joint (X1, X2, X3, W12, W23, W31)

def ShareEntropyBound( joint, variant="LB2" ):
	"""H(W12|W23) + H(W31|W12) - H(X1) (LB2 form) or
	H(W12|W31) + H(W31|W12) - H(X1) (LB1 form); at most log2 |R| for any
	valid scheme."""
	if variant == "LB2":
		first = ConditionalEntropy(joint, "W12", "W23")
	elif variant == "LB1":
		first = ConditionalEntropy(joint, "W12", "W31")
	else:
		msg = "bound variant must be LB1 or LB2 (got %s)" % variant
		raise ValueError(msg)
	return first + ConditionalEntropy(joint, "W31", "W12") - Entropy(joint, "X1")


def ResidualProcessingGaps( joint ):
	"""I(W12;W23|W31) - RI(X1;X3), I(W31;W23|W12) - RI(X1;X2) and
	I(W12;W31|W23) - RI(X2;X3); non-negative for valid schemes."""
	return (ConditionalMutualInformation(joint, "W12", "W23", "W31") - ResidualInformation(joint, "X1", "X3"),
			ConditionalMutualInformation(joint, "W31", "W23", "W12") - ResidualInformation(joint, "X1", "X2"),
			ConditionalMutualInformation(joint, "W12", "W31", "W23") - ResidualInformation(joint, "X2", "X3"))


def OppositeShareGaps( joint ):
	"""For each party i: H(share opposite i | party i's view) minus
	H(other secrets | X_i); non-negative for valid schemes."""
	gaps = []
	for i in range(N_COORDS):
		opposite = SHARE_AXES[(i + 1) % N_COORDS]
		others = tuple(a for a in SECRET_AXES if a != SECRET_AXES[i])
		gaps.append(ConditionalEntropy(joint, opposite, PARTY_VIEW_AXES[i])
					- ConditionalEntropy(joint, others, SECRET_AXES[i]))
	return tuple(gaps)
