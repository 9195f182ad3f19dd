# Combinatorial lower bounds on randomness complexity.
#
# A support structure assigns each secret x a set M_x of share triples
# (a, b, c) over abstract alphabets. Every verified scheme yields one (M_x is
# the set of share triples psi(x, r)), with |M_x| <= |R|, and it satisfies
#   separation: a party's projections of M_x and M_x' are disjoint when
#               x and x' differ in that party's coordinate;
#   privacy:    they are equal when x and x' agree there.
# So if no structure with all |M_x| <= k exists, every scheme needs
# |R| >= k + 1. Search decides existence exhaustively.
#
# Symmetry is broken only by numbering symbols in first-use order. The
# search does not prune with the automorphisms of the domain (transforms
# mapping it onto itself).

# Licensed under a 3-clause BSD style license - see LICENSE.rst

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from astropy import log

from . import conf
from .datautils import BudgetExceededError, SchemeError, DomainError, FormatSymbols
from .domains import BitString, FamilyOf, N_COORDS
from .schemes import Verify


FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNDECIDED = "undecided"
COORD_NAMES = ("A", "B", "C")



def ProjectTriple( t, party ):
	"""Party's view of a share triple (a, b, c) = (w12, w23, w31):
	party 0 sees (a, c), party 1 sees (b, a), party 2 sees (c, b)."""
	return (t[party], t[(party - 1) % N_COORDS])


# coordinate not seen by each party, and the triple rebuilt from a
# party's pair plus a symbol for that coordinate
FREE_COORD = (1, 2, 0)

def _TripleFromPair( pair, party, s ):
	if party == 0:
		return (pair[0], s, pair[1])
	if party == 1:
		return (pair[1], pair[0], s)
	return (s, pair[1], pair[0])



@dataclass(frozen=True)
class SupportStructure(object):
	"""Per-secret sets of share triples, aligned with domain.members, with
	the size cap they are meant to respect."""
	domain: object
	sets: tuple
	cap: int

	def __post_init__(self):
		sets = tuple(frozenset(tuple(t) for t in M) for M in self.sets)
		if len(sets) != len(self.domain):
			msg = "%d triple sets given for a domain of %d secrets" % (len(sets), len(self.domain))
			raise DomainError(msg)
		object.__setattr__(self, "sets", sets)

	def SetOf( self, x ):
		return self.sets[self.domain.members.index(tuple(x))]

	def Projections( self, party ):
		return [frozenset(ProjectTriple(t, party) for t in M) for M in self.sets]


@dataclass(frozen=True)
class StructureCheck(object):
	passed: bool
	violation: str = None


def CheckStructure( s ):
	"""Checks the size cap, separation and privacy conditions exactly."""
	members = s.domain.members
	for x, M in zip(members, s.sets):
		if len(M) == 0:
			return StructureCheck(False, "M_%s is empty" % _SecretLabel(x))
		if len(M) > s.cap:
			return StructureCheck(False, "|M_%s| = %d exceeds the cap %d" % (_SecretLabel(x), len(M), s.cap))
	for party in range(N_COORDS):
		projections = s.Projections(party)
		for i in range(len(members)):
			for j in range(i + 1, len(members)):
				x = members[i]
				y = members[j]
				if x[party] == y[party] and projections[i] != projections[j]:
					msg = ("privacy: party %d sees different pairs under %s and %s" %
							(party + 1, _SecretLabel(x), _SecretLabel(y)))
					return StructureCheck(False, msg)
				if x[party] != y[party] and projections[i] & projections[j]:
					msg = ("separation: party %d sees a common pair under %s and %s" %
							(party + 1, _SecretLabel(x), _SecretLabel(y)))
					return StructureCheck(False, msg)
	return StructureCheck(True)


def ExtractStructure( scheme ):
	"""Support structure of a verified scheme: M_x is the set of share
	triples psi(x, r), and the cap is |R|."""
	report = Verify(scheme)
	if not report.passed:
		msg = "cannot extract a support structure from an unverified scheme: %s" % report.counterexample
		raise SchemeError(msg)
	sets = [set(scheme.encoder[(x, r)] for r in scheme.randomnessSymbols) for x in scheme.domain.members]
	return SupportStructure(scheme.domain, sets, len(scheme.randomness))


def _SecretLabel( x ):
	if all(v in (0, 1) for v in x):
		return BitString(x)
	return "(" + FormatSymbols(x) + ")"


def FormatWitness( s ):
	"""One line per secret, "x : (A0,B0,C0) (A1,B0,C1) ...", with symbols
	renamed A0.., B0.., C0.. in order of first use."""
	names = [{}, {}, {}]
	outputLines = []
	for x, M in zip(s.domain.members, s.sets):
		pieces = []
		for t in sorted(M, key=lambda t: tuple(str(v) for v in t)):
			named = []
			for c in range(N_COORDS):
				if t[c] not in names[c]:
					names[c][t[c]] = "%s%d" % (COORD_NAMES[c], len(names[c]))
				named.append(names[c][t[c]])
			pieces.append("(" + ",".join(named) + ")")
		outputLines.append("%s : %s" % (_SecretLabel(x), " ".join(pieces)))
	return "\n".join(outputLines) + "\n"



class _BudgetExhausted(Exception):
	pass


class _SupportSearch(object):
	"""Depth-first search for a support structure with |M_x| <= k.

	Triples are only ever added to satisfy a demand (a pair that some secret
	with the same coordinate value already projects to, but this secret does
	not yet) or to seed a secret whose set is still empty; demands with the
	fewest compatible triples are branched on first, and demands with one
	option are applied without branching. Symbols of each coordinate are
	numbered in order of first use, so a candidate triple may use any
	existing symbol or the next unused one. Domain automorphisms are not
	used for pruning.
	"""

	def __init__(self, domain, k, budget):
		self.members = list(domain.members)
		self.n = len(self.members)
		self.k = k
		self.budget = budget
		self.symbolCap = self.n * k
		self.nodes = 0
		self.sets = [[] for x in self.members]
		self.setMembers = [set() for x in self.members]
		self.nSymbols = [0, 0, 0]
		# label[party][pair] = [coordinate value owning the pair, reference count]
		self.label = [{}, {}, {}]
		self.pairsByValue = [{}, {}, {}]
		# proj[x][party][pair] = number of triples of M_x projecting to pair
		self.proj = [[{}, {}, {}] for x in self.members]
		self.trail = []

	def Add( self, xi, t ):
		x = self.members[xi]
		for party in range(N_COORDS):
			pair = ProjectTriple(t, party)
			entry = self.label[party].get(pair)
			if entry is None:
				self.label[party][pair] = [x[party], 1]
				self.pairsByValue[party].setdefault(x[party], set()).add(pair)
			else:
				entry[1] += 1
			counts = self.proj[xi][party]
			counts[pair] = counts.get(pair, 0) + 1
		fresh = []
		for c in range(N_COORDS):
			if t[c] == self.nSymbols[c]:
				self.nSymbols[c] += 1
				fresh.append(c)
		self.sets[xi].append(t)
		self.setMembers[xi].add(t)
		self.trail.append((xi, t, fresh))

	def Remove( self ):
		xi, t, fresh = self.trail.pop()
		x = self.members[xi]
		self.sets[xi].pop()
		self.setMembers[xi].discard(t)
		for c in fresh:
			self.nSymbols[c] -= 1
		for party in range(N_COORDS):
			pair = ProjectTriple(t, party)
			counts = self.proj[xi][party]
			counts[pair] -= 1
			if counts[pair] == 0:
				del counts[pair]
			entry = self.label[party][pair]
			entry[1] -= 1
			if entry[1] == 0:
				del self.label[party][pair]
				self.pairsByValue[party][x[party]].discard(pair)

	def UndoTo( self, mark ):
		while len(self.trail) > mark:
			self.Remove()

	def _Compatible( self, xi, t ):
		if len(self.sets[xi]) >= self.k or t in self.setMembers[xi]:
			return False
		x = self.members[xi]
		for party in range(N_COORDS):
			entry = self.label[party].get(ProjectTriple(t, party))
			if entry is not None and entry[0] != x[party]:
				return False
		return True

	def _SymbolChoices( self, c ):
		top = min(self.nSymbols[c] + 1, self.symbolCap)
		return range(top)

	def DemandOptions( self, xi, party, pair ):
		options = []
		for s in self._SymbolChoices(FREE_COORD[party]):
			t = _TripleFromPair(pair, party, s)
			if self._Compatible(xi, t):
				options.append(t)
		return options

	def SeedOptions( self, xi ):
		options = []
		for a in self._SymbolChoices(0):
			for b in self._SymbolChoices(1):
				for c in self._SymbolChoices(2):
					t = (a, b, c)
					if self._Compatible(xi, t):
						options.append(t)
		return options

	def Demands( self ):
		for xi, x in enumerate(self.members):
			for party in range(N_COORDS):
				required = self.pairsByValue[party].get(x[party])
				if not required:
					continue
				have = self.proj[xi][party]
				for pair in sorted(required):
					if pair not in have:
						yield (xi, party, pair)

	def SizeLowerBound( self, xi ):
		"""Lower bound on the final |M_x|: for each coordinate, every symbol
		needs as many triples as the most required pairs through it in
		either party that sees the coordinate, and at least the triples
		already using it."""
		x = self.members[xi]
		best = len(self.sets[xi])
		for c in range(N_COORDS):
			# parties whose pair contains coordinate c, and its position there
			first = (c, 0)
			second = ((c + 1) % N_COORDS, 1)
			perSymbol = {}
			for party, position in (first, second):
				counts = {}
				for pair in self.pairsByValue[party].get(x[party], ()):
					counts[pair[position]] = counts.get(pair[position], 0) + 1
				for symbol, count in counts.items():
					perSymbol[symbol] = max(perSymbol.get(symbol, 0), count)
			current = {}
			for t in self.sets[xi]:
				current[t[c]] = current.get(t[c], 0) + 1
			for symbol, count in current.items():
				perSymbol[symbol] = max(perSymbol.get(symbol, 0), count)
			best = max(best, sum(perSymbol.values()))
		return best

	def _Tick( self ):
		self.nodes += 1
		if self.nodes > self.budget:
			raise _BudgetExhausted()

	def Decide( self ):
		"""Applies forced triples; returns ("dead", None), ("done", None) or
		("branch", options) with options a list of (secret index, triple)."""
		while True:
			self._Tick()
			for xi in range(self.n):
				if self.SizeLowerBound(xi) > self.k:
					return "dead", None
			best = None
			forced = None
			for xi, party, pair in self.Demands():
				options = self.DemandOptions(xi, party, pair)
				if len(options) == 0:
					return "dead", None
				if len(options) == 1:
					forced = (xi, options[0])
					break
				if best is None or len(options) < len(best[1]):
					best = (xi, options)
			if forced is not None:
				self.Add(*forced)
				continue
			if best is not None:
				xi, options = best
				return "branch", [(xi, t) for t in options]
			empty = [xi for xi in range(self.n) if len(self.sets[xi]) == 0]
			if len(empty) == 0:
				return "done", None
			options = self.SeedOptions(empty[0])
			if len(options) == 0:
				return "dead", None
			if len(options) == 1:
				self.Add(empty[0], options[0])
				continue
			return "branch", [(empty[0], t) for t in options]

	def Explore( self ):
		mark = len(self.trail)
		kind, options = self.Decide()
		if kind == "done":
			return True
		if kind == "branch":
			for xi, t in options:
				self.Add(xi, t)
				if self.Explore():
					return True
				self.Remove()
		self.UndoTo(mark)
		return False

	def Run( self ):
		"""Returns FEASIBLE, INFEASIBLE or UNDECIDED (budget exhausted)."""
		try:
			return FEASIBLE if self.Explore() else INFEASIBLE
		except _BudgetExhausted:
			return UNDECIDED

	def Witness( self, domain ):
		return SupportStructure(domain, [list(M) for M in self.sets], self.k)



@dataclass(frozen=True)
class FeasibilityVerdict(object):
	status: str
	witness: SupportStructure
	nodesExplored: int
	cap: int
	workers: int = 1

	@property
	def feasible( self ):
		return self.status == FEASIBLE

	@property
	def decided( self ):
		return self.status != UNDECIDED


def _SearchSubtree( domain, k, budget, prefix ):
	"""Worker entry point: replays `prefix` (secret index, triple) steps and
	searches the remaining subtree."""
	engine = _SupportSearch(domain, k, budget)
	for xi, t in prefix:
		engine.Add(xi, t)
	status = engine.Run()
	sets = [list(M) for M in engine.sets] if status == FEASIBLE else None
	return status, sets, engine.nodes


def Search( domain, k, budget=None, workers=1 ):
	"""Decides whether a support structure with |M_x| <= k exists.

	Parameters
	----------
	domain : Domain
	k : int
		Size cap (k >= 1). Alphabets are bounded by |domain| * k symbols per
		coordinate, the most a structure with this cap can use.
	budget : int, optional
		Node limit (conf.node_budget by default); when it runs out the verdict
		is UNDECIDED.
	workers : int, optional
		With more than one worker, the subtrees below the first branching
		node are searched in a process pool and combined in option order.

	Returns
	-------
	verdict : FeasibilityVerdict
	"""
	if k < 1:
		msg = "size cap must be at least 1 (got %s)" % k
		raise ValueError(msg)
	if budget is None:
		budget = conf.node_budget
	engine = _SupportSearch(domain, k, budget)
	if workers <= 1:
		status = engine.Run()
		witness = engine.Witness(domain) if status == FEASIBLE else None
		verdict = FeasibilityVerdict(status, witness, engine.nodes, k)
	else:
		verdict = _ParallelSearch(engine, domain, k, budget, workers)
	log.info("support search on %s, cap %d: %s after %d nodes" % (domain, k, verdict.status, verdict.nodesExplored))
	return verdict


def _ParallelSearch( engine, domain, k, budget, workers ):
	try:
		kind, options = engine.Decide()
	except _BudgetExhausted:
		return FeasibilityVerdict(UNDECIDED, None, engine.nodes, k, workers)
	if kind == "done":
		return FeasibilityVerdict(FEASIBLE, engine.Witness(domain), engine.nodes, k, workers)
	if kind == "dead":
		return FeasibilityVerdict(INFEASIBLE, None, engine.nodes, k, workers)
	prefix = [(xi, t) for xi, t, fresh in engine.trail]
	log.debug("fanning out %d subtrees to %d workers" % (len(options), workers))
	with ProcessPoolExecutor(max_workers=workers) as executor:
		futures = [executor.submit(_SearchSubtree, domain, k, budget, prefix + [option])
					for option in options]
		results = [f.result() for f in futures]
	nodes = engine.nodes + sum(r[2] for r in results)
	for status, sets, subtreeNodes in results:
		if status == FEASIBLE:
			return FeasibilityVerdict(FEASIBLE, SupportStructure(domain, sets, k), nodes, k, workers)
	if any(status == UNDECIDED for status, sets, subtreeNodes in results):
		return FeasibilityVerdict(UNDECIDED, None, nodes, k, workers)
	return FeasibilityVerdict(INFEASIBLE, None, nodes, k, workers)



@dataclass(frozen=True)
class CertificationRecord(object):
	familyId: int
	cap: int
	status: str
	nodes: int


def CertifiedLowerBound( domain, kMax=None, budget=None, workers=1, records=None ):
	"""Combinatorial lower bound on randomness complexity, in bits.

	Tries caps k = 1 .. kMax: the first feasible cap k gives log2(k) (every
	smaller cap was proven infeasible); if all are infeasible the result is
	log2(kMax + 1). Raises BudgetExceededError when a cap stays undecided.
	When `records` is a list, one CertificationRecord per cap is appended.
	"""
	if kMax is None:
		kMax = conf.k_max
	familyId = FamilyOf(domain).familyId if domain.IsBinary() else None
	for k in range(1, kMax + 1):
		verdict = Search(domain, k, budget=budget, workers=workers)
		if records is not None:
			records.append(CertificationRecord(familyId, k, verdict.status, verdict.nodesExplored))
		if verdict.status == UNDECIDED:
			msg = ("support search on %s at cap %d ran out of its node budget after %d nodes" %
					(domain, k, verdict.nodesExplored))
			raise BudgetExceededError(msg)
		if verdict.feasible:
			return math.log2(k)
	return math.log2(kMax + 1)
