# Finite joint probability mass functions over named axes, and the
# information measures computed on them: entropies, (conditional) mutual
# information, Gacs-Korner common information via the characteristic
# bipartite graph, and residual information.
#
# Probabilities are either exact (every weight a Fraction or int) or floating
# point. Measures are always returned as floats in bits; the exact predicates
# IsFunctionOf and IsConditionallyIndependent work in rational arithmetic.

# Licensed under a 3-clause BSD style license - see LICENSE.rst

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph
from scipy.special import entr
from scipy.stats import entropy as scipy_entropy

from . import conf
from .datautils import (PmfError, ParseError, DataLinesFromText,
						ParseSymbol, ParseProbability)


FLOAT_SUM_TOLERANCE = 1e-12


def _IsExactNumber( value ):
	return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


class JointPmf(object):
	"""Joint probability mass function over a labeled product space.

	Parameters
	----------
	axes : sequence of str
		Axis (random variable) names, in outcome-tuple order.
	weights : dict
		Maps outcome tuples to probabilities. Zero weights are dropped.
	alphabets : sequence of sequences, optional
		Declared alphabet for each axis; by default the symbols observed in
		the support, in first-appearance order.

	Weights must be non-negative and sum to 1: exactly when every weight is
	a Fraction or int, within 1e-12 otherwise.
	"""

	def __init__(self, axes, weights, alphabets=None):
		self.axes = tuple(axes)
		if len(set(self.axes)) != len(self.axes):
			msg = "duplicate axis names in %s" % (self.axes,)
			raise PmfError(msg)
		nAxes = len(self.axes)
		exact = all(_IsExactNumber(w) for w in weights.values())
		cleaned = {}
		for outcome, w in weights.items():
			outcome = tuple(outcome)
			if len(outcome) != nAxes:
				msg = "outcome %s does not match axes %s" % (outcome, self.axes)
				raise PmfError(msg)
			w = Fraction(w) if exact else float(w)
			if w < 0:
				msg = "negative probability %s for outcome %s" % (w, outcome)
				raise PmfError(msg)
			if w == 0:
				continue
			cleaned[outcome] = cleaned.get(outcome, 0) + w
		total = sum(cleaned.values())
		if exact:
			if total != 1:
				msg = "probabilities sum to %s, not 1" % total
				raise PmfError(msg)
		elif abs(total - 1.0) > FLOAT_SUM_TOLERANCE:
			msg = "probabilities sum to %.15g, not 1" % total
			raise PmfError(msg)
		self.weights = cleaned
		self.exact = exact
		if alphabets is None:
			alphabets = []
			for i in range(nAxes):
				seen = []
				for outcome in cleaned:
					if outcome[i] not in seen:
						seen.append(outcome[i])
				alphabets.append(tuple(seen))
		else:
			alphabets = [tuple(a) for a in alphabets]
			if len(alphabets) != nAxes:
				msg = "%d alphabets given for %d axes" % (len(alphabets), nAxes)
				raise PmfError(msg)
			for outcome in cleaned:
				for i in range(nAxes):
					if outcome[i] not in alphabets[i]:
						msg = "symbol %s of outcome %s is not in the alphabet of axis %s" % (outcome[i], outcome, self.axes[i])
						raise PmfError(msg)
		self.alphabets = tuple(alphabets)

	def IsExact( self ):
		return self.exact

	def AxisIndices( self, axes ):
		"""Positions of the named axes; a single name may be given as a str."""
		if isinstance(axes, str):
			axes = [axes]
		indices = []
		for name in axes:
			if name not in self.axes:
				msg = "no axis named \"%s\" (axes are %s)" % (name, ", ".join(self.axes))
				raise PmfError(msg)
			indices.append(self.axes.index(name))
		return tuple(indices)

	def Marginal( self, axes ):
		"""Dict mapping outcome tuples over `axes` to their total mass."""
		indices = self.AxisIndices(axes)
		marginal = {}
		for outcome, w in self.weights.items():
			key = tuple(outcome[i] for i in indices)
			marginal[key] = marginal.get(key, 0) + w
		return marginal

	def MarginalPmf( self, axes ):
		indices = self.AxisIndices(axes)
		return JointPmf([self.axes[i] for i in indices], self.Marginal(axes),
						alphabets=[self.alphabets[i] for i in indices])

	def Support( self, threshold=None ):
		"""Outcomes with mass above the support threshold: > 0 for exact pmfs,
		> conf.float_support_threshold (or `threshold`) for float pmfs."""
		if self.exact:
			limit = 0 if threshold is None else threshold
		else:
			limit = conf.float_support_threshold if threshold is None else threshold
		return [outcome for outcome, w in self.weights.items() if w > limit]

	def Probabilities( self ):
		return np.array([float(w) for w in self.weights.values()])

	def __getitem__( self, outcome ):
		return self.weights.get(tuple(outcome), 0)

	def __len__( self ):
		return len(self.weights)

	def __eq__( self, other ):
		if not isinstance(other, JointPmf):
			return NotImplemented
		return self.axes == other.axes and self.weights == other.weights

	def __repr__( self ):
		return "JointPmf(axes=%s, %d outcomes, %s)" % (list(self.axes), len(self.weights),
													"exact" if self.exact else "float")


def UniformPmf( axes, outcomes, alphabets=None ):
	outcomes = [tuple(o) for o in outcomes]
	if len(outcomes) == 0:
		raise PmfError("a uniform pmf needs at least one outcome")
	w = Fraction(1, len(outcomes))
	return JointPmf(axes, {o: w for o in outcomes}, alphabets=alphabets)


def _AxisSet( p, axes ):
	if axes is None:
		return p.axes
	if isinstance(axes, str):
		return (axes,)
	return tuple(axes)


def _RequireDisjoint( *axisGroups ):
	seen = set()
	for group in axisGroups:
		overlap = seen & set(group)
		if overlap:
			msg = "axis sets overlap in %s" % ", ".join(sorted(overlap))
			raise PmfError(msg)
		seen |= set(group)


def _ClipSmall( value ):
	"""Clamps round-off negatives of quantities that are >= 0 in exact
	arithmetic."""
	if value < 0 and value > -conf.entropy_tolerance:
		return 0.0
	return value



def Entropy( p, axes=None ):
	"""Shannon entropy (bits) of the marginal of p on `axes` (all axes by
	default)."""
	axes = _AxisSet(p, axes)
	if len(axes) == 0:
		return 0.0
	masses = np.array([float(w) for w in p.Marginal(axes).values()])
	return float(scipy_entropy(masses, base=2))


def ConditionalEntropy( p, target, given=() ):
	"""H(target | given) = H(target, given) - H(given)."""
	target = _AxisSet(p, target)
	given = _AxisSet(p, given)
	_RequireDisjoint(target, given)
	return _ClipSmall(Entropy(p, target + given) - Entropy(p, given))


def MutualInformation( p, axesA, axesB ):
	"""I(A;B) = H(A) + H(B) - H(A,B)."""
	axesA = _AxisSet(p, axesA)
	axesB = _AxisSet(p, axesB)
	_RequireDisjoint(axesA, axesB)
	return _ClipSmall(Entropy(p, axesA) + Entropy(p, axesB) - Entropy(p, axesA + axesB))


def ConditionalMutualInformation( p, axesA, axesB, axesC=() ):
	"""I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C)."""
	axesA = _AxisSet(p, axesA)
	axesB = _AxisSet(p, axesB)
	axesC = _AxisSet(p, axesC)
	_RequireDisjoint(axesA, axesB, axesC)
	value = (Entropy(p, axesA + axesC) + Entropy(p, axesB + axesC)
				- Entropy(p, axesA + axesB + axesC) - Entropy(p, axesC))
	return _ClipSmall(value)


def IsFunctionOf( p, target, given ):
	"""True when every value of `given` with positive mass occurs with exactly
	one value of `target`, i.e. H(target | given) = 0 exactly."""
	target = _AxisSet(p, target)
	given = _AxisSet(p, given)
	_RequireDisjoint(target, given)
	iTarget = p.AxisIndices(target)
	iGiven = p.AxisIndices(given)
	images = {}
	for outcome in p.Support():
		key = tuple(outcome[i] for i in iGiven)
		value = tuple(outcome[i] for i in iTarget)
		if images.setdefault(key, value) != value:
			return False
	return True


def IsConditionallyIndependent( p, axesA, axesB, axesC=() ):
	"""True when I(A;B|C) = 0 exactly: p(a,b,c) p(c) = p(a,c) p(b,c) for
	every a, b, c in the marginal supports."""
	axesA = _AxisSet(p, axesA)
	axesB = _AxisSet(p, axesB)
	axesC = _AxisSet(p, axesC)
	_RequireDisjoint(axesA, axesB, axesC)
	pABC = p.Marginal(axesA + axesB + axesC)
	pAC = p.Marginal(axesA + axesC)
	pBC = p.Marginal(axesB + axesC)
	pC = p.Marginal(axesC) if len(axesC) > 0 else {(): 1}
	nA = len(axesA)
	nB = len(axesB)
	aByC = {}
	bByC = {}
	for key in pAC:
		aByC.setdefault(key[nA:], []).append(key[:nA])
	for key in pBC:
		bByC.setdefault(key[nB:], []).append(key[:nB])
	for c, massC in pC.items():
		for a in aByC.get(c, []):
			for b in bByC.get(c, []):
				lhs = pABC.get(a + b + c, 0) * massC
				rhs = pAC[a + c] * pBC[b + c]
				if p.exact:
					if lhs != rhs:
						return False
				elif abs(lhs - rhs) > conf.entropy_tolerance:
					return False
	return True



@dataclass(frozen=True)
class CharacteristicGraph(object):
	"""Bipartite graph between the positive-mass values of two axis groups,
	with an edge wherever the joint mass is positive. `components` lists,
	for each connected component, its (left values, right values) pair;
	`leftComponent` maps each left value to its component index."""
	left: tuple
	right: tuple
	edges: frozenset
	components: tuple
	leftComponent: dict

	@property
	def nComponents( self ):
		return len(self.components)


def CharacteristicComponents( p, axesA, axesB ):
	"""Builds the characteristic bipartite graph of the (A, B) marginal of p
	and labels its connected components (scipy.sparse.csgraph)."""
	axesA = _AxisSet(p, axesA)
	axesB = _AxisSet(p, axesB)
	_RequireDisjoint(axesA, axesB)
	nA = len(axesA)
	joint = p.MarginalPmf(axesA + axesB)
	edges = [(outcome[:nA], outcome[nA:]) for outcome in joint.Support()]
	left = []
	right = []
	for a, b in edges:
		if a not in left:
			left.append(a)
		if b not in right:
			right.append(b)
	leftIndex = {a: k for k, a in enumerate(left)}
	rightIndex = {b: len(left) + k for k, b in enumerate(right)}
	nVertices = len(left) + len(right)
	rows = [leftIndex[a] for a, b in edges]
	cols = [rightIndex[b] for a, b in edges]
	adjacency = sparse.coo_matrix((np.ones(len(edges)), (rows, cols)), shape=(nVertices, nVertices))
	nComponents, labels = csgraph.connected_components(adjacency, directed=False)
	# renumber components in order of first appearance of their left vertices
	order = []
	for k in range(len(left)):
		if labels[k] not in order:
			order.append(labels[k])
	renumber = {label: i for i, label in enumerate(order)}
	components = []
	for i, label in enumerate(order):
		leftValues = frozenset(a for a in left if labels[leftIndex[a]] == label)
		rightValues = frozenset(b for b in right if labels[rightIndex[b]] == label)
		components.append((leftValues, rightValues))
	leftComponent = {a: renumber[labels[leftIndex[a]]] for a in left}
	return CharacteristicGraph(tuple(left), tuple(right), frozenset(edges),
								tuple(components), leftComponent)


def GKCommonInformation( p, axesA, axesB ):
	"""Gacs-Korner common information: entropy of the index of the connected
	component of the characteristic graph containing (A, B)."""
	graph = CharacteristicComponents(p, axesA, axesB)
	marginalA = p.Marginal(_AxisSet(p, axesA))
	masses = np.zeros(graph.nComponents)
	for a, k in graph.leftComponent.items():
		masses[k] += float(marginalA[a])
	return float(scipy_entropy(masses, base=2))


def ResidualInformation( p, axesA, axesB ):
	"""Residual information I(A;B) - CI_GK(A;B), clamped to [0, I(A;B)]."""
	mi = MutualInformation(p, axesA, axesB)
	ci = GKCommonInformation(p, axesA, axesB)
	return min(max(mi - ci, 0.0), mi)



def Product( p, q ):
	"""Independent product of two pmfs over concatenated axes. Axis names of
	q that clash with names of p get a "_2" suffix (repeated until unique)."""
	names = list(p.axes)
	for name in q.axes:
		newName = name
		while newName in names:
			newName = newName + "_2"
		names.append(newName)
	weights = {}
	for a, wa in p.weights.items():
		for b, wb in q.weights.items():
			weights[a + b] = wa * wb
	return JointPmf(names, weights, alphabets=p.alphabets + q.alphabets)


def BinaryEntropy( x ):
	"""h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
	x = float(x)
	if not 0.0 <= x <= 1.0:
		msg = "binary entropy argument %g outside [0, 1]" % x
		raise PmfError(msg)
	return float((entr(x) + entr(1.0 - x)) / math.log(2))



# Pmf text format

def ParsePmfLines( textLines, sourceName="<text>" ):
	"""Builds a JointPmf from text lines.

	The first data line is "axes NAME NAME ..."; optional "alphabet NAME s s ..."
	lines declare axis alphabets; every other line is an outcome followed by
	its probability ("p/q" or decimal), separated by whitespace.
	"""
	axes = None
	declared = {}
	weights = {}
	for lineNumber, text in DataLinesFromText(textLines):
		pieces = text.split()
		if pieces[0] == "axes":
			axes = pieces[1:]
			continue
		if pieces[0] == "alphabet":
			if len(pieces) < 3:
				msg = "%s, line %d: alphabet line needs an axis name and symbols" % (sourceName, lineNumber)
				raise ParseError(msg)
			declared[pieces[1]] = tuple(ParseSymbol(s) for s in pieces[2:])
			continue
		if axes is None:
			msg = "%s, line %d: outcome line before the \"axes\" header" % (sourceName, lineNumber)
			raise ParseError(msg)
		if len(pieces) != len(axes) + 1:
			msg = "%s, line %d: expected %d symbols and a probability" % (sourceName, lineNumber, len(axes))
			raise ParseError(msg)
		outcome = tuple(ParseSymbol(s) for s in pieces[:-1])
		if outcome in weights:
			msg = "%s, line %d: repeated outcome %s" % (sourceName, lineNumber, " ".join(pieces[:-1]))
			raise ParseError(msg)
		weights[outcome] = ParseProbability(pieces[-1], sourceName, lineNumber)
	if axes is None:
		msg = "%s: missing \"axes\" header" % sourceName
		raise ParseError(msg)
	alphabets = None
	if declared:
		missing = [a for a in axes if a not in declared]
		if missing:
			msg = "%s: no alphabet declared for axes %s" % (sourceName, ", ".join(missing))
			raise ParseError(msg)
		alphabets = [declared[a] for a in axes]
	try:
		return JointPmf(axes, weights, alphabets=alphabets)
	except PmfError as e:
		raise ParseError("%s: %s" % (sourceName, e))


def ReadPmfFile( fileName ):
	with open(fileName) as theFile:
		lines = theFile.readlines()
	return ParsePmfLines(lines, sourceName=fileName)


def FormatPmf( p, declareAlphabets=False ):
	outputLines = ["axes " + " ".join(p.axes)]
	if declareAlphabets:
		for name, alphabet in zip(p.axes, p.alphabets):
			outputLines.append("alphabet %s %s" % (name, " ".join(str(s) for s in alphabet)))
	for outcome, w in p.weights.items():
		outputLines.append(" ".join(str(s) for s in outcome) + " " + str(w))
	return "\n".join(outputLines) + "\n"
