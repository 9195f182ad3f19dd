# Distribution schemes for three-secret sharing.
#
# A scheme is a finite randomness pmf P_R plus a total encoder table
# psi(x, r) -> (w12, w23, w31). Party i holds secret x_i and sees the two
# shares on its edges:
#    party 1: (w12, w31)    party 2: (w23, w12)    party 3: (w31, w23)
# Correctness and privacy are checked exactly, with rational probabilities.
#
# Canonical schemes, cleartext/additive "reduced" schemes, transport of a
# scheme along a domain transform, and the frozen scheme-to-family table are
# also here.

# Licensed under a 3-clause BSD style license - see LICENSE.rst

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from astropy import log

from . import conf
from .datautils import (SchemeError, ParseError, DataLinesFromText, ParseSymbol,
						ParseProbability, FormatSymbols, SymbolicLog2)
from .domains import (Domain, ApplyTransform, InverseTransform, TransformWitness,
						GetFamily, ALL_TRANSFORMS, BINARY_ALPHABETS, N_COORDS,
						FAMILY_REPRESENTATIVES)
from .infotheory import (JointPmf, ConditionalEntropy, ConditionalMutualInformation,
						IsFunctionOf, IsConditionallyIndependent)


SECRET_AXES = ("X1", "X2", "X3")
SHARE_AXES = ("W12", "W23", "W31")
EDGE_NAMES = ("12", "23", "31")
# party i sees (share[i], share[i-1])
PARTY_VIEW_AXES = (("W12", "W31"), ("W23", "W12"), ("W31", "W23"))
EMPTY_SHARE = "-"
NO_RANDOMNESS = "*"



def PartyView( shares, party ):
	"""The pair of shares seen by `party` (0-based)."""
	return (shares[party], shares[(party - 1) % N_COORDS])


def EdgeOfParties( a, b ):
	"""Index of the edge joining parties a and b (0-based); edge k joins
	parties k and k+1."""
	missing = ({0, 1, 2} - {a, b})
	if a == b or len(missing) != 1:
		msg = "parties %s and %s do not form an edge" % (a, b)
		raise SchemeError(msg)
	return (missing.pop() + 1) % N_COORDS


def EdgesOfCoordinate( coord ):
	"""Names of the two edges seen by the holder of 1-based coordinate
	`coord`."""
	party = coord - 1
	return (EDGE_NAMES[party], EDGE_NAMES[(party - 1) % N_COORDS])



@dataclass(frozen=True)
class Scheme(object):
	"""A distribution scheme (P_R, psi) for a domain.

	Parameters
	----------
	domain : Domain
	randomness : sequence of (symbol, probability)
		Probabilities must be exact, strictly positive and sum to 1.
	encoder : dict
		Maps (secret tuple, randomness symbol) to a share triple
		(w12, w23, w31); must be defined for every secret and symbol.
	shareAlphabets : sequence of 3 sequences, optional
		Defaults to the sorted symbols occurring on each edge.
	"""
	domain: Domain
	randomness: tuple
	encoder: dict
	shareAlphabets: tuple = None
	name: str = field(default="", compare=False)

	def __post_init__(self):
		randomness = tuple((r, Fraction(p)) for r, p in self.randomness)
		if len(randomness) == 0:
			raise SchemeError("a scheme needs at least one randomness symbol")
		symbols = [r for r, p in randomness]
		if len(set(symbols)) != len(symbols):
			msg = "duplicate randomness symbols in %s" % symbols
			raise SchemeError(msg)
		for r, p in randomness:
			if p <= 0:
				msg = "randomness symbol %s has non-positive probability %s" % (r, p)
				raise SchemeError(msg)
		total = sum(p for r, p in randomness)
		if total != 1:
			msg = "randomness probabilities sum to %s, not 1" % total
			raise SchemeError(msg)
		encoder = {}
		for (x, r), shares in self.encoder.items():
			shares = tuple(shares)
			if len(shares) != N_COORDS:
				msg = "encoder output %s for (%s, %s) is not a share triple" % (shares, x, r)
				raise SchemeError(msg)
			encoder[(tuple(x), r)] = shares
		for x in self.domain.members:
			for r in symbols:
				if (x, r) not in encoder:
					msg = "encoder undefined for secret %s and randomness %s" % (FormatSymbols(x), r)
					raise SchemeError(msg)
		if len(encoder) != len(self.domain) * len(symbols):
			extra = [key for key in encoder if key[0] not in self.domain or key[1] not in symbols]
			msg = "encoder has entries outside the domain or randomness: %s" % extra[:3]
			raise SchemeError(msg)
		if self.shareAlphabets is None:
			shareAlphabets = tuple(tuple(sorted(set(w[k] for w in encoder.values()), key=str))
									for k in range(N_COORDS))
		else:
			shareAlphabets = tuple(tuple(a) for a in self.shareAlphabets)
			for (x, r), shares in encoder.items():
				for k in range(N_COORDS):
					if shares[k] not in shareAlphabets[k]:
						msg = "share %s on edge %s is outside its alphabet" % (shares[k], EDGE_NAMES[k])
						raise SchemeError(msg)
		object.__setattr__(self, "randomness", randomness)
		object.__setattr__(self, "encoder", encoder)
		object.__setattr__(self, "shareAlphabets", shareAlphabets)

	@property
	def randomnessSymbols( self ):
		return [r for r, p in self.randomness]

	def Encode( self, x, r ):
		return self.encoder[(tuple(x), r)]

	def ViewDistribution( self, x, party ):
		"""Exact distribution of the party's share pair given secret x."""
		dist = {}
		for r, p in self.randomness:
			view = PartyView(self.encoder[(x, r)], party)
			dist[view] = dist.get(view, 0) + p
		return dist

	def __str__( self ):
		label = self.name if self.name else "scheme"
		return "%s on %s, |R| = %d" % (label, self.domain, len(self.randomness))


def RandomnessComplexity( s ):
	"""log2 |R| in bits: the size of the randomness alphabet, not its
	entropy."""
	return math.log2(len(s.randomness))



@dataclass(frozen=True)
class Counterexample(object):
	"""A violated correctness or privacy condition for one party (1-based)."""
	party: int
	condition: str
	secret: tuple
	otherSecret: tuple
	view: tuple

	def __str__( self ):
		if self.condition == "correctness":
			how = "cannot tell %s from %s" % (FormatSymbols(self.secret, ""), FormatSymbols(self.otherSecret, ""))
		else:
			how = "view distinguishes %s from %s" % (FormatSymbols(self.secret, ""), FormatSymbols(self.otherSecret, ""))
		return "party %d %s failure: %s (view %s)" % (self.party, self.condition, how,
														FormatSymbols(self.view, " "))


@dataclass(frozen=True)
class VerificationReport(object):
	"""Per-party correctness and privacy verdicts; None for a condition that
	was not checked. A failing report carries a counterexample."""
	correct: tuple = None
	private: tuple = None
	counterexample: Counterexample = None

	@property
	def passed( self ):
		checks = [v for v in (self.correct, self.private) if v is not None]
		return len(checks) > 0 and all(all(v) for v in checks)


@dataclass(frozen=True)
class ReconstructionTriple(object):
	"""For each party (0-based), the map from its share pair to its secret
	symbol, defined on the views that occur."""
	maps: tuple

	def Reconstruct( self, party, view ):
		return self.maps[party][tuple(view)]

	def Decode( self, shares ):
		return tuple(self.Reconstruct(i, PartyView(shares, i)) for i in range(N_COORDS))


def VerifyCorrectness( s ):
	"""Checks that each party's share pair determines its secret.

	Returns
	-------
	(report, reconstruction) : (VerificationReport, ReconstructionTriple or None)
		reconstruction is None when some party fails.
	"""
	correct = []
	maps = []
	counterexample = None
	for party in range(N_COORDS):
		seen = {}
		ok = True
		for x in s.domain.members:
			for r in s.randomnessSymbols:
				view = PartyView(s.encoder[(x, r)], party)
				previous = seen.setdefault(view, x)
				if previous[party] != x[party]:
					ok = False
					if counterexample is None:
						counterexample = Counterexample(party + 1, "correctness", previous, x, view)
					break
			if not ok:
				break
		correct.append(ok)
		maps.append({view: x[party] for view, x in seen.items()} if ok else None)
	report = VerificationReport(correct=tuple(correct), counterexample=counterexample)
	reconstruction = ReconstructionTriple(tuple(maps)) if all(correct) else None
	return report, reconstruction


def VerifyPrivacy( s ):
	"""Checks that each party's view has the same exact distribution for all
	secrets agreeing on that party's coordinate."""
	private = []
	counterexample = None
	for party in range(N_COORDS):
		ok = True
		reference = {}
		for x in s.domain.members:
			dist = s.ViewDistribution(x, party)
			if x[party] not in reference:
				reference[x[party]] = (x, dist)
				continue
			x0, dist0 = reference[x[party]]
			if dist != dist0:
				ok = False
				if counterexample is None:
					views = sorted(set(dist) | set(dist0), key=str)
					view = next(v for v in views if dist.get(v, 0) != dist0.get(v, 0))
					counterexample = Counterexample(party + 1, "privacy", x0, x, view)
				break
		private.append(ok)
	return VerificationReport(private=tuple(private), counterexample=counterexample)


def Verify( s ):
	"""Both verifiers; the counterexample is the first correctness failure,
	else the first privacy failure."""
	correctness, reconstruction = VerifyCorrectness(s)
	privacy = VerifyPrivacy(s)
	counterexample = correctness.counterexample
	if counterexample is None:
		counterexample = privacy.counterexample
	return VerificationReport(correctness.correct, privacy.private, counterexample)



def InducedJoint( s, p ):
	"""Joint pmf of (X1, X2, X3, W12, W23, W31) for secret pmf p:
	P(x, w) = P_X(x) P_R({r : psi(x, r) = w}).

	p is a three-axis JointPmf whose support lies inside s.domain; the result
	is exact when p is.
	"""
	if len(p.axes) != N_COORDS:
		msg = "secret pmf must have 3 axes (got %s)" % (p.axes,)
		raise SchemeError(msg)
	weights = {}
	for x, px in p.weights.items():
		if x not in s.domain:
			msg = "secret pmf puts mass %s on %s, outside the scheme domain %s" % (px, FormatSymbols(x, ""), s.domain)
			raise SchemeError(msg)
		for r, pr in s.randomness:
			key = x + s.encoder[(x, r)]
			w = px * pr if p.IsExact() else px * float(pr)
			weights[key] = weights.get(key, 0) + w
	return JointPmf(SECRET_AXES + SHARE_AXES, weights,
					alphabets=s.domain.alphabets + s.shareAlphabets)


@dataclass(frozen=True)
class EntropyConditionReport(object):
	"""Entropy form of correctness and privacy for one secret pmf:
	conditionalEntropies[i] = H(X_i | V_i) and leakages[i] = I(V_i; other
	secrets | X_i), with the per-party verdicts."""
	correct: tuple
	private: tuple
	conditionalEntropies: tuple
	leakages: tuple

	@property
	def passed( self ):
		return all(self.correct) and all(self.private)


def CheckEntropyConditions( s, p, exact=None ):
	"""Evaluates H(X_i|V_i) = 0 and I(V_i; X_others | X_i) = 0 on the joint
	induced by p. With exact=True (the default for rational p) the zero
	tests are exact; otherwise values below conf.entropy_tolerance count as
	zero."""
	joint = InducedJoint(s, p)
	if exact is None:
		exact = joint.IsExact()
	correct = []
	private = []
	entropies = []
	leakages = []
	for i in range(N_COORDS):
		view = PARTY_VIEW_AXES[i]
		others = tuple(a for a in SECRET_AXES if a != SECRET_AXES[i])
		h = ConditionalEntropy(joint, SECRET_AXES[i], view)
		leak = ConditionalMutualInformation(joint, view, others, SECRET_AXES[i])
		entropies.append(h)
		leakages.append(leak)
		if exact:
			correct.append(IsFunctionOf(joint, SECRET_AXES[i], view))
			private.append(IsConditionallyIndependent(joint, view, others, SECRET_AXES[i]))
		else:
			correct.append(abs(h) < conf.entropy_tolerance)
			private.append(abs(leak) < conf.entropy_tolerance)
	return EntropyConditionReport(tuple(correct), tuple(private), tuple(entropies), tuple(leakages))



def RestrictScheme( s, subdomain ):
	"""The same scheme with its encoder restricted to a subdomain."""
	if subdomain.alphabets != s.domain.alphabets or not subdomain.IsSubsetOf(s.domain):
		msg = "%s is not a subdomain of %s" % (subdomain, s.domain)
		raise SchemeError(msg)
	encoder = {(x, r): w for (x, r), w in s.encoder.items() if x in subdomain}
	return Scheme(subdomain, s.randomness, encoder, s.shareAlphabets, name=s.name)


def TransportScheme( s, t ):
	"""Scheme for ApplyTransform(s.domain, t) with the same randomness.

	Party i of the old scheme becomes party t.permutation[i], so the share on
	old edge k (parties k, k+1) moves to the edge joining their images.
	"""
	if t.IsIdentity():
		return s
	newDomain = ApplyTransform(s.domain, t)
	perm = t.permutation
	destination = [EdgeOfParties(perm[k], perm[(k + 1) % N_COORDS]) for k in range(N_COORDS)]
	encoder = {}
	for (x, r), shares in s.encoder.items():
		moved = [None] * N_COORDS
		for k in range(N_COORDS):
			moved[destination[k]] = shares[k]
		encoder[(t.Apply(x), r)] = tuple(moved)
	shareAlphabets = [None] * N_COORDS
	for k in range(N_COORDS):
		shareAlphabets[destination[k]] = s.shareAlphabets[k]
	name = s.name if s.name else "scheme"
	return Scheme(newDomain, s.randomness, encoder, tuple(shareAlphabets), name="%s transported" % name)



# Canonical schemes

FULL_CUBE = Domain.FromMask(255)
VALIDITY_DOMAINS = {
	1: FULL_CUBE,
	2: Domain.FromBitstrings(["000", "001", "010", "011"]),
	3: Domain.FromBitstrings(["000", "011", "101", "110"]),
	4: Domain.FromBitstrings(["000", "001", "110", "111"]),
	5: Domain.FromBitstrings(["000", "001", "010", "100", "111"]),
}
CANONICAL_RHO = {1: "3", 2: "2", 3: "1", 4: "2", 5: "log2(6)"}


def _Bits( *values ):
	return "".join(str(v) for v in values)


def _Scheme1( x, r ):
	# additive pair per coordinate: x_i ^ r_i on edge i, r_i on edge i-1
	r1, r2, r3 = (int(ch) for ch in r)
	x1, x2, x3 = x
	return (_Bits(x1 ^ r1, r2), _Bits(x2 ^ r2, r3), _Bits(x3 ^ r3, r1))

def _Scheme2( x, r ):
	# x1 is constant on the face; shares x2 and x3 additively
	r2, r3 = (int(ch) for ch in r)
	x1, x2, x3 = x
	return (_Bits(x2 ^ r2), _Bits(r2, r3), _Bits(x3 ^ r3))

def _Scheme3( x, r ):
	# W_ij = R ^ x_i ^ x_j
	R = int(r)
	x1, x2, x3 = x
	return (_Bits(R ^ x1 ^ x2), _Bits(R ^ x2 ^ x3), _Bits(R ^ x3 ^ x1))

def _Scheme4( x, r ):
	R, R2 = (int(ch) for ch in r)
	x1, x2, x3 = x
	return (_Bits(x1 ^ R), _Bits(R, x3 ^ R2), _Bits(R, R2))

def _Scheme5( x, r ):
	alpha, beta, gamma = r
	if x == (0, 0, 0):
		return (alpha, beta, gamma)
	if x == (1, 1, 1):
		return (alpha, alpha, alpha)
	if x == (1, 0, 0):
		return (alpha, beta, alpha)
	if x == (0, 1, 0):
		return (alpha, alpha, beta)
	if x == (0, 0, 1):
		return (beta, alpha, alpha)
	msg = "secret %s is outside the domain of scheme 5" % (x,)
	raise SchemeError(msg)


_CANONICAL_ENCODERS = {1: _Scheme1, 2: _Scheme2, 3: _Scheme3, 4: _Scheme4, 5: _Scheme5}

def _CanonicalRandomness( schemeId ):
	if schemeId == 1:
		symbols = ["".join(bits) for bits in itertools.product("01", repeat=3)]
	elif schemeId in (2, 4):
		symbols = ["".join(bits) for bits in itertools.product("01", repeat=2)]
	elif schemeId == 3:
		symbols = ["0", "1"]
	else:
		symbols = ["".join(perm) for perm in itertools.permutations("012")]
	p = Fraction(1, len(symbols))
	return [(r, p) for r in symbols]


def CanonicalScheme( schemeId, domain=None, strict=True ):
	"""One of the five published schemes, on its validity domain or on a
	subset of it.

	Parameters
	----------
	schemeId : int
		1 (full cube), 2 (x1 = 0 face), 3 (even-parity set), 4 (x1 = x2 set)
		or 5 ({000,001,010,100,111}).
	domain : Domain, optional
		Binary domain to build on; defaults to the validity domain.
	strict : bool, optional
		When False, schemes 1-4 are built on any binary domain (their
		encoders are defined everywhere) without a validity guarantee.
	"""
	if schemeId not in _CANONICAL_ENCODERS:
		msg = "canonical scheme id must be 1..5 (got %s)" % schemeId
		raise SchemeError(msg)
	validity = VALIDITY_DOMAINS[schemeId]
	if domain is None:
		domain = validity
	if not domain.IsBinary():
		msg = "canonical schemes need a binary domain (got %s)" % domain
		raise SchemeError(msg)
	if (strict or schemeId == 5) and not domain.IsSubsetOf(validity):
		msg = "domain %s is not contained in the validity domain %s of scheme %d" % (domain, validity, schemeId)
		raise SchemeError(msg)
	encode = _CANONICAL_ENCODERS[schemeId]
	randomness = _CanonicalRandomness(schemeId)
	encoder = {(x, r): encode(x, r) for x in domain.members for r, p in randomness}
	return Scheme(domain, randomness, encoder, name="scheme %d" % schemeId)



def _NormalizePlan( clearPlan, additiveSet ):
	plan = {}
	for coord, edges in (clearPlan or {}).items():
		if coord not in (1, 2, 3):
			msg = "clear plan names coordinate %s; coordinates are 1, 2, 3" % (coord,)
			raise SchemeError(msg)
		if isinstance(edges, str):
			edges = [edges]
		edges = set(edges)
		for edge in edges:
			if edge not in EDGE_NAMES:
				msg = "clear plan puts x%d on unknown edge \"%s\"" % (coord, edge)
				raise SchemeError(msg)
		if len(edges) > 0:
			plan[coord] = edges
	additive = set(additiveSet or ())
	for coord in additive:
		if coord not in (1, 2, 3):
			msg = "additive set names coordinate %s; coordinates are 1, 2, 3" % (coord,)
			raise SchemeError(msg)
	overlap = additive & set(plan)
	if overlap:
		msg = "coordinates %s are both clear and additive" % sorted(overlap)
		raise SchemeError(msg)
	return plan, sorted(additive)


def DescribePlan( clearPlan, additiveSet ):
	plan, additive = _NormalizePlan(clearPlan, additiveSet)
	pieces = ["x%d@%s" % (coord, "+".join(e for e in EDGE_NAMES if e in plan[coord]))
				for coord in sorted(plan)]
	if additive:
		pieces.append("additive " + ",".join("x%d" % c for c in additive))
	return "reduced(" + " ".join(pieces) + ")"


def ReducedScheme( domain, clearPlan=None, additiveSet=() ):
	"""Cleartext/additive scheme on a binary domain.

	Each coordinate in `additiveSet` gets a fresh uniform bit R_i, placed on
	the edge named by party i and its successor, with x_i ^ R_i on the edge
	of party i and its predecessor; each coordinate in `clearPlan` (a dict
	from 1-based coordinate to edge names "12", "23", "31") is copied
	verbatim onto the listed edges. Components are written in coordinate
	order; an empty share is "-".

	The result is not verified.
	"""
	if not domain.IsBinary():
		msg = "reduced schemes need a binary domain (got %s)" % domain
		raise SchemeError(msg)
	plan, additive = _NormalizePlan(clearPlan, additiveSet)
	if additive:
		symbols = ["".join(bits) for bits in itertools.product("01", repeat=len(additive))]
	else:
		symbols = [NO_RANDOMNESS]
	p = Fraction(1, len(symbols))
	encoder = {}
	for x in domain.members:
		for r in symbols:
			bits = {} if r == NO_RANDOMNESS else {coord: int(ch) for coord, ch in zip(additive, r)}
			shares = []
			for k in range(N_COORDS):
				components = []
				for coord in (1, 2, 3):
					ci = coord - 1
					if coord in bits:
						if ci == k:
							components.append(str(bits[coord]))
						elif (ci - 1) % N_COORDS == k:
							components.append(str(x[ci] ^ bits[coord]))
					elif coord in plan and EDGE_NAMES[k] in plan[coord]:
						components.append(str(x[ci]))
				shares.append("".join(components) if components else EMPTY_SHARE)
			encoder[(x, r)] = tuple(shares)
	return Scheme(domain, [(r, p) for r in symbols], encoder, name=DescribePlan(plan, additive))


def AllReducedPlans():
	"""Every plan in which each coordinate is unused, additive, or clear on a
	non-empty set of the two edges its holder sees: 5**3 plans."""
	options = []
	for coord in (1, 2, 3):
		a, b = EdgesOfCoordinate(coord)
		options.append([None, "additive", (a,), (b,), (a, b)])
	plans = []
	for choice in itertools.product(*options):
		clearPlan = {}
		additive = []
		for coord, option in zip((1, 2, 3), choice):
			if option == "additive":
				additive.append(coord)
			elif option is not None:
				clearPlan[coord] = set(option)
		plans.append((clearPlan, tuple(additive)))
	return plans



# Scheme text format

def _ParseAlphabetGroups( text, sourceName, lineNumber, parse ):
	groups = text.split("|")
	if len(groups) != N_COORDS:
		msg = "%s, line %d: expected 3 alphabet groups separated by \"|\"" % (sourceName, lineNumber)
		raise ParseError(msg)
	return tuple(tuple(parse(s) for s in g.split(",") if s.strip() != "") for g in groups)


def ParseSchemeLines( textLines, sourceName="<text>" ):
	"""Builds a Scheme from text lines.

	Header lines: "alphabets s,s | s,s | s,s" (secret alphabets, optional for
	binary domains), "shares s,s | s,s | s,s" (share alphabets, optional) and
	one "randomness SYMBOL p/q" line per randomness symbol. Every other line is
	an encoder row "x1,x2,x3 | r | w12 w23 w31". Share and randomness symbols
	are kept as strings.
	"""
	secretAlphabets = None
	shareAlphabets = None
	randomness = []
	rows = {}
	secrets = []
	for lineNumber, text in DataLinesFromText(textLines):
		keyword = text.split(None, 1)[0]
		rest = text[len(keyword):].strip()
		if keyword == "alphabets":
			secretAlphabets = _ParseAlphabetGroups(rest, sourceName, lineNumber, ParseSymbol)
			continue
		if keyword == "shares":
			shareAlphabets = _ParseAlphabetGroups(rest, sourceName, lineNumber, lambda s: s.strip())
			continue
		if keyword == "randomness":
			pieces = rest.split()
			if len(pieces) != 2:
				msg = "%s, line %d: expected \"randomness SYMBOL PROBABILITY\"" % (sourceName, lineNumber)
				raise ParseError(msg)
			randomness.append((pieces[0], ParseProbability(pieces[1], sourceName, lineNumber)))
			continue
		fields = text.split("|")
		if len(fields) != 3:
			msg = "%s, line %d: expected \"x1,x2,x3 | r | w12 w23 w31\"" % (sourceName, lineNumber)
			raise ParseError(msg)
		x = tuple(ParseSymbol(s) for s in fields[0].split(","))
		r = fields[1].strip()
		shares = tuple(fields[2].split())
		if len(x) != N_COORDS or len(shares) != N_COORDS:
			msg = "%s, line %d: encoder row needs 3 secret symbols and 3 shares" % (sourceName, lineNumber)
			raise ParseError(msg)
		if (x, r) in rows:
			msg = "%s, line %d: repeated encoder row for %s, %s" % (sourceName, lineNumber, FormatSymbols(x), r)
			raise ParseError(msg)
		rows[(x, r)] = shares
		if x not in secrets:
			secrets.append(x)
	if len(randomness) == 0:
		msg = "%s: no randomness lines" % sourceName
		raise ParseError(msg)
	if len(rows) == 0:
		msg = "%s: no encoder rows" % sourceName
		raise ParseError(msg)
	if secretAlphabets is None:
		secretAlphabets = BINARY_ALPHABETS
	try:
		domain = Domain(secretAlphabets, secrets)
		return Scheme(domain, randomness, rows, shareAlphabets)
	except (SchemeError, ValueError) as e:
		raise ParseError("%s: %s" % (sourceName, e))


def ReadSchemeFile( fileName ):
	with open(fileName) as theFile:
		lines = theFile.readlines()
	return ParseSchemeLines(lines, sourceName=fileName)


def FormatScheme( s ):
	outputLines = []
	if s.name:
		outputLines.append("# %s" % s.name)
	outputLines.append("alphabets " + " | ".join(FormatSymbols(a) for a in s.domain.alphabets))
	outputLines.append("shares " + " | ".join(FormatSymbols(a) for a in s.shareAlphabets))
	for r, p in s.randomness:
		outputLines.append("randomness %s %s" % (r, p))
	for x in s.domain.members:
		for r in s.randomnessSymbols:
			outputLines.append("%s | %s | %s" % (FormatSymbols(x), r, " ".join(s.encoder[(x, r)])))
	return "\n".join(outputLines) + "\n"



# Scheme-to-family assignment

@dataclass(frozen=True)
class AssignmentEntry(object):
	"""How to build the optimal scheme of one family: a canonical scheme or a
	reduced plan, on the family's published representative."""
	familyId: int
	kind: str
	schemeId: int = None
	clearPlan: tuple = ()
	additiveSet: tuple = ()

	@property
	def sourceDomain( self ):
		return Domain.FromBitstrings(FAMILY_REPRESENTATIVES[self.familyId])

	def Build( self ):
		if self.kind == "canonical":
			return CanonicalScheme(self.schemeId, self.sourceDomain)
		return ReducedScheme(self.sourceDomain, dict(self.clearPlan), self.additiveSet)

	def Describe( self ):
		if self.kind == "canonical":
			return "scheme %d" % self.schemeId
		return DescribePlan(dict(self.clearPlan), self.additiveSet)


def _Canonical( familyId, schemeId ):
	return AssignmentEntry(familyId, "canonical", schemeId=schemeId)

def _Reduced( familyId, clearPlan=(), additiveSet=() ):
	return AssignmentEntry(familyId, "reduced", clearPlan=clearPlan, additiveSet=additiveSet)


SCHEME_ASSIGNMENT_VERSION = 1
SCHEME_ASSIGNMENT = {
	1: _Reduced(1),
	2: _Reduced(2, clearPlan=((2, ("23",)),)),
	3: _Reduced(3, clearPlan=((1, ("12",)), (3, ("31",)))),
	4: _Reduced(4, additiveSet=(3,)),
	5: _Reduced(5, clearPlan=((1, ("12",)),), additiveSet=(3,)),
	6: _Reduced(6, clearPlan=((1, ("12",)),), additiveSet=(3,)),
	7: _Canonical(7, 3),
	8: _Canonical(8, 3),
	9: _Reduced(9, additiveSet=(1, 2)),
	10: _Canonical(10, 2),
	11: _Canonical(11, 5),
	12: _Canonical(12, 5),
	13: _Canonical(13, 5),
}
for _familyId in range(14, 22):
	SCHEME_ASSIGNMENT[_familyId] = _Canonical(_familyId, 1)


def AssignedScheme( familyId ):
	"""Builds the assigned scheme of a family, transports it onto the
	family's canonical representative, and verifies it."""
	record = GetFamily(familyId)
	entry = SCHEME_ASSIGNMENT[familyId]
	source = entry.Build()
	t = TransformWitness(source.domain, record.representative)
	scheme = TransportScheme(source, t)
	scheme = Scheme(scheme.domain, scheme.randomness, scheme.encoder, scheme.shareAlphabets,
					name="family %d: %s" % (familyId, entry.Describe()))
	report = Verify(scheme)
	if not report.passed:
		msg = "assigned scheme for family %d fails verification: %s" % (familyId, report.counterexample)
		raise SchemeError(msg)
	return scheme


@dataclass(frozen=True)
class AssignmentResult(object):
	familyId: int
	scheme: Scheme
	description: str
	nCandidates: int

	@property
	def rhoBits( self ):
		return RandomnessComplexity(self.scheme)

	@property
	def rhoLabel( self ):
		return SymbolicLog2(len(self.scheme.randomness))


def _AssignmentCandidates( target ):
	"""(|R|, description, builder) for every candidate scheme on `target`."""
	candidates = []
	images = {}
	for t in ALL_TRANSFORMS:
		images.setdefault(ApplyTransform(target, t), t)
	for image, t in images.items():
		back = InverseTransform(t)
		for clearPlan, additive in AllReducedPlans():
			def builder( image=image, back=back, clearPlan=clearPlan, additive=additive ):
				return TransportScheme(ReducedScheme(image, clearPlan, additive), back)
			candidates.append((2**len(additive), "%s via %s" % (DescribePlan(clearPlan, additive), back), builder))
	for schemeId in sorted(_CANONICAL_ENCODERS):
		size = len(_CanonicalRandomness(schemeId))
		for t in ALL_TRANSFORMS:
			if target.IsSubsetOf(ApplyTransform(VALIDITY_DOMAINS[schemeId], t)):
				def builder( schemeId=schemeId, t=t ):
					return RestrictScheme(TransportScheme(CanonicalScheme(schemeId), t), target)
				candidates.append((size, "scheme %d via %s" % (schemeId, t), builder))
	candidates.sort(key=lambda c: c[0])
	return candidates


def SearchSchemeAssignment( familyId ):
	"""Bounded search for a verified scheme of minimal |R| on a family's
	canonical representative: every reduced plan (built on every image of
	the representative and transported back) and every canonical scheme
	transported by the 48 transforms and restricted. Candidates are tried in
	increasing |R|; the first that verifies is returned."""
	record = GetFamily(familyId)
	target = record.representative
	candidates = _AssignmentCandidates(target)
	for n, (size, description, builder) in enumerate(candidates):
		scheme = builder()
		if Verify(scheme).passed:
			log.info("family %d: %s verifies with |R| = %d after %d candidates" % (familyId, description, size, n + 1))
			return AssignmentResult(familyId, scheme, description, n + 1)
	msg = "no candidate scheme verifies on family %d" % familyId
	raise SchemeError(msg)
