# Secret domains for three-secret sharing: sets of secret triples over
# per-coordinate alphabets, the group of 48 coordinate negations and swaps
# acting on binary domains, and the classification of all 255 non-empty
# binary domains into 21 symmetry families.

# Licensed under a 3-clause BSD style license - see LICENSE.rst

import functools
import itertools
from dataclasses import dataclass

from astropy import log

from .datautils import (DomainError, ParseError, DataLinesFromText,
						ParseSymbol, FormatSymbols, SymbolicValue)


N_COORDS = 3
BINARY_ALPHABET = (0, 1)
BINARY_ALPHABETS = (BINARY_ALPHABET,) * N_COORDS
FULL_MASK = 255

# Published representative of each family, by family id. Family ids follow the
# published table; the canonical representative (minimal mask) of each family
# is computed by ClassifyAll.
FAMILY_REPRESENTATIVES = {
	1: ["000"],
	2: ["000", "011"],
	3: ["000", "111"],
	4: ["000", "001"],
	5: ["000", "001", "110"],
	6: ["000", "001", "110", "111"],
	7: ["000", "011", "101"],
	8: ["000", "011", "101", "110"],
	9: ["000", "100", "110"],
	10: ["000", "001", "010", "011"],
	11: ["000", "001", "010", "100"],
	12: ["000", "001", "010", "100", "111"],
	13: ["000", "001", "010", "111"],
	14: ["000", "001", "010", "101"],
	15: ["000", "001", "010", "011", "100"],
	16: ["000", "001", "010", "011", "100", "101"],
	17: ["000", "001", "010", "101", "110"],
	18: ["000", "001", "010", "011", "100", "111"],
	19: ["000", "001", "010", "101", "110", "111"],
	20: ["000", "001", "010", "011", "100", "101", "110"],
	21: ["000", "001", "010", "011", "100", "101", "110", "111"],
}
N_FAMILIES = len(FAMILY_REPRESENTATIVES)

# randomness complexity of each family, in bits (symbolic form)
FAMILY_RHO = {1: "0", 2: "0", 3: "0", 4: "1", 5: "1", 6: "1", 7: "1", 8: "1",
				9: "2", 10: "2", 11: "log2(6)", 12: "log2(6)", 13: "log2(6)",
				14: "3", 15: "3", 16: "3", 17: "3", 18: "3", 19: "3", 20: "3", 21: "3"}



def PointIndex( x ):
	"""Bit index of a binary secret: 4*x1 + 2*x2 + x3."""
	return 4*x[0] + 2*x[1] + x[2]

def PointFromIndex( b ):
	return ((b >> 2) & 1, (b >> 1) & 1, b & 1)

def BitString( x ):
	return "".join(str(v) for v in x)

def ParseBitString( text ):
	text = text.strip()
	if len(text) != N_COORDS or any(ch not in "01" for ch in text):
		msg = "\"%s\" is not a 3-bit secret" % text
		raise DomainError(msg)
	return tuple(int(ch) for ch in text)



@dataclass(frozen=True, eq=False)
class Domain(object):
	"""A set of secret triples over declared per-coordinate alphabets.

	Members of binary domains are kept sorted by bit value, so two binary
	domains with the same member set are identical objects field by field;
	non-binary domains keep their given order. Equality ignores member order.
	"""
	alphabets: tuple
	members: tuple

	def __post_init__(self):
		alphabets = tuple(tuple(alphabet) for alphabet in self.alphabets)
		if len(alphabets) != N_COORDS:
			msg = "a domain needs exactly 3 alphabets (got %d)" % len(alphabets)
			raise DomainError(msg)
		for i, alphabet in enumerate(alphabets):
			if len(alphabet) == 0 or len(set(alphabet)) != len(alphabet):
				msg = "alphabet of coordinate %d must be non-empty and duplicate-free" % (i + 1)
				raise DomainError(msg)
		members = tuple(tuple(x) for x in self.members)
		if len(members) == 0:
			raise DomainError("a domain must have at least one member")
		if len(set(members)) != len(members):
			msg = "duplicate secrets in domain: %s" % (members,)
			raise DomainError(msg)
		for x in members:
			if len(x) != N_COORDS:
				msg = "secret %s does not have 3 coordinates" % (x,)
				raise DomainError(msg)
			for i in range(N_COORDS):
				if x[i] not in alphabets[i]:
					msg = "symbol %s of secret %s is not in the alphabet of coordinate %d" % (x[i], x, i + 1)
					raise DomainError(msg)
		if alphabets == BINARY_ALPHABETS:
			members = tuple(sorted(members))
		object.__setattr__(self, "alphabets", alphabets)
		object.__setattr__(self, "members", members)

	@classmethod
	def FromMask( cls, mask ):
		if not 1 <= mask <= FULL_MASK:
			msg = "mask %d is not a non-empty 8-bit mask" % mask
			raise DomainError(msg)
		members = [PointFromIndex(b) for b in range(8) if (mask >> b) & 1]
		return cls(BINARY_ALPHABETS, members)

	@classmethod
	def FromBitstrings( cls, strings ):
		return cls(BINARY_ALPHABETS, [ParseBitString(s) for s in strings])

	def IsBinary( self ):
		return self.alphabets == BINARY_ALPHABETS

	@property
	def binaryMask( self ):
		"""8-bit mask of a binary domain (bit b set iff the secret with value b
		is a member); None for non-binary domains."""
		if not self.IsBinary():
			return None
		mask = 0
		for x in self.members:
			mask |= 1 << PointIndex(x)
		return mask

	def IsSubsetOf( self, other ):
		return set(self.members) <= set(other.members)

	def Bitstrings( self ):
		return [BitString(x) for x in self.members]

	def __len__( self ):
		return len(self.members)

	def __iter__( self ):
		return iter(self.members)

	def __contains__( self, x ):
		return tuple(x) in set(self.members)

	def __eq__( self, other ):
		if not isinstance(other, Domain):
			return NotImplemented
		return self.alphabets == other.alphabets and set(self.members) == set(other.members)

	def __hash__( self ):
		return hash((self.alphabets, frozenset(self.members)))

	def __str__( self ):
		if self.IsBinary():
			return "{" + ",".join(self.Bitstrings()) + "}"
		return "{" + " ".join(FormatSymbols(x) for x in self.members) + "}"



@dataclass(frozen=True)
class Transform(object):
	"""Negate some coordinates, then move coordinates.

	negations[i] flips source coordinate i; permutation[i] is the destination
	index of source coordinate i. So y[permutation[i]] = x[i] XOR negations[i].
	"""
	negations: tuple = (0, 0, 0)
	permutation: tuple = (0, 1, 2)

	def __post_init__(self):
		negations = tuple(int(bool(n)) for n in self.negations)
		permutation = tuple(int(p) for p in self.permutation)
		if len(negations) != N_COORDS or sorted(permutation) != [0, 1, 2]:
			msg = "invalid transform: negations %s, permutation %s" % (self.negations, self.permutation)
			raise DomainError(msg)
		object.__setattr__(self, "negations", negations)
		object.__setattr__(self, "permutation", permutation)

	def Apply( self, x ):
		y = [None] * N_COORDS
		for i in range(N_COORDS):
			y[self.permutation[i]] = (x[i] ^ 1) if self.negations[i] else x[i]
		return tuple(y)

	def IsIdentity( self ):
		return self.negations == (0, 0, 0) and self.permutation == (0, 1, 2)

	def HasNegation( self ):
		return any(self.negations)

	def __str__( self ):
		flips = "".join(str(n) for n in self.negations)
		moves = " ".join("%d->%d" % (i + 1, self.permutation[i] + 1) for i in range(N_COORDS))
		return "negate %s, move %s" % (flips, moves)


IDENTITY = Transform()
ALL_TRANSFORMS = tuple(Transform(negations, permutation)
						for negations in itertools.product((0, 1), repeat=N_COORDS)
						for permutation in itertools.permutations(range(N_COORDS)))


def ComposeTransforms( s, t ):
	"""Returns s o t (apply t first, then s)."""
	permutation = tuple(s.permutation[t.permutation[i]] for i in range(N_COORDS))
	negations = tuple(t.negations[i] ^ s.negations[t.permutation[i]] for i in range(N_COORDS))
	return Transform(negations, permutation)


def InverseTransform( t ):
	inverse = [0] * N_COORDS
	for i in range(N_COORDS):
		inverse[t.permutation[i]] = i
	negations = tuple(t.negations[inverse[j]] for j in range(N_COORDS))
	return Transform(negations, tuple(inverse))


def ApplyTransform( domain, t ):
	"""Image of a domain under a transform.

	Parameters
	----------
	domain : Domain
	t : Transform

	Returns
	-------
	image : Domain

	Raises DomainError if a negation is requested on a non-binary domain, or a
	non-identity permutation on a domain whose alphabets differ.
	"""
	if t.HasNegation() and not domain.IsBinary():
		msg = "cannot negate coordinates of a non-binary domain %s" % domain
		raise DomainError(msg)
	if t.permutation != (0, 1, 2) and len(set(domain.alphabets)) != 1:
		msg = "cannot permute coordinates of domain %s with unequal alphabets" % domain
		raise DomainError(msg)
	alphabets = [None] * N_COORDS
	for i in range(N_COORDS):
		alphabets[t.permutation[i]] = domain.alphabets[i]
	return Domain(tuple(alphabets), [t.Apply(x) for x in domain.members])


# each transform as a permutation of the 8 cube points, for mask-level work
_POINT_MAPS = {t: tuple(PointIndex(t.Apply(PointFromIndex(b))) for b in range(8))
				for t in ALL_TRANSFORMS}

def TransformMask( mask, t ):
	pointMap = _POINT_MAPS[t]
	image = 0
	for b in range(8):
		if (mask >> b) & 1:
			image |= 1 << pointMap[b]
	return image


def _RequireBinary( domain, opName ):
	if not domain.IsBinary():
		msg = "%s needs a binary domain (got %s)" % (opName, domain)
		raise DomainError(msg)


def Canonicalize( domain ):
	"""Minimal 8-bit mask over the 48 images of a binary domain; the same for
	every member of an orbit."""
	_RequireBinary(domain, "Canonicalize")
	return _CanonicalMask(domain.binaryMask)


@functools.lru_cache(maxsize=None)
def _CanonicalMask( mask ):
	return min(TransformMask(mask, t) for t in ALL_TRANSFORMS)


def Orbit( domain ):
	"""Masks of all images of a binary domain."""
	_RequireBinary(domain, "Orbit")
	return frozenset(TransformMask(domain.binaryMask, t) for t in ALL_TRANSFORMS)


def Automorphisms( domain ):
	"""Transforms mapping a binary domain onto itself."""
	_RequireBinary(domain, "Automorphisms")
	mask = domain.binaryMask
	return [t for t in ALL_TRANSFORMS if TransformMask(mask, t) == mask]


def TransformWitness( a, b ):
	"""Returns the first transform (in ALL_TRANSFORMS order) mapping domain a
	onto domain b, or None when the two lie in different orbits."""
	_RequireBinary(a, "TransformWitness")
	_RequireBinary(b, "TransformWitness")
	maskA = a.binaryMask
	maskB = b.binaryMask
	for t in ALL_TRANSFORMS:
		if TransformMask(maskA, t) == maskB:
			return t
	return None



@dataclass(frozen=True)
class FamilyRecord(object):
	familyId: int
	representative: Domain
	memberMasks: frozenset
	rhoBits: float

	@property
	def canonicalMask( self ):
		return self.representative.binaryMask

	def __len__( self ):
		return len(self.memberMasks)


@functools.lru_cache(maxsize=None)
def _FamilyIdsByCanonicalMask():
	ids = {}
	for familyId, bitstrings in FAMILY_REPRESENTATIVES.items():
		ids[_CanonicalMask(Domain.FromBitstrings(bitstrings).binaryMask)] = familyId
	return ids


@functools.lru_cache(maxsize=None)
def _ClassifyAll():
	orbits = {}
	for mask in range(1, FULL_MASK + 1):
		orbits.setdefault(_CanonicalMask(mask), set()).add(mask)
	canonicalMasks = sorted(orbits, key=lambda m: (bin(m).count("1"), m))
	familyIds = _FamilyIdsByCanonicalMask()
	if set(familyIds) != set(canonicalMasks):
		msg = "published family representatives do not match the orbits of the cube"
		raise DomainError(msg)
	records = [FamilyRecord(familyIds[m], Domain.FromMask(m), frozenset(orbits[m]),
								SymbolicValue(FAMILY_RHO[familyIds[m]]))
				for m in canonicalMasks]
	log.debug("classified 255 binary domains into %d families" % len(records))
	return tuple(sorted(records, key=lambda r: r.familyId))


def ClassifyAll():
	"""The 21 families of non-empty binary domains, in family-id order.

	Each record carries the canonical (minimal-mask) representative and the
	masks of all family members, plus the family's randomness complexity
	in bits (rhoBits).
	"""
	return list(_ClassifyAll())


def FamilyOf( domain ):
	"""FamilyRecord of the family containing a binary domain."""
	canonical = Canonicalize(domain)
	for record in _ClassifyAll():
		if record.canonicalMask == canonical:
			return record
	msg = "no family for domain %s" % domain
	raise DomainError(msg)


def GetFamily( familyId ):
	if familyId not in FAMILY_REPRESENTATIVES:
		msg = "family id must be in 1..%d (got %s)" % (N_FAMILIES, familyId)
		raise DomainError(msg)
	return _ClassifyAll()[familyId - 1]



# Domain text format

def ParseDomainLines( textLines, sourceName="<text>" ):
	"""Builds a Domain from text lines: one secret per line, either a bare
	bitstring ("010") or comma-separated symbols ("0,2,a"). An optional header
	line "alphabets s,s | s,s | s,s" declares the coordinate alphabets;
	otherwise they are binary when every symbol is 0 or 1, and the sorted
	observed symbols per coordinate when not.
	"""
	declared = None
	members = []
	for lineNumber, text in DataLinesFromText(textLines):
		if text.startswith("alphabets"):
			parts = text[len("alphabets"):].split("|")
			if len(parts) != N_COORDS:
				msg = "%s, line %d: alphabets header needs 3 groups" % (sourceName, lineNumber)
				raise ParseError(msg)
			declared = tuple(tuple(ParseSymbol(s) for s in part.split(",") if s.strip() != "")
							for part in parts)
			continue
		if "," in text:
			x = tuple(ParseSymbol(s) for s in text.split(","))
		elif len(text) == N_COORDS and all(ch in "01" for ch in text):
			x = tuple(int(ch) for ch in text)
		else:
			x = None
		if x is None or len(x) != N_COORDS:
			msg = "%s, line %d: cannot read secret \"%s\"" % (sourceName, lineNumber, text)
			raise ParseError(msg)
		members.append(x)
	if len(members) == 0:
		msg = "%s: no secrets found" % sourceName
		raise ParseError(msg)
	if declared is None:
		observed = [set(x[i] for x in members) for i in range(N_COORDS)]
		if all(symbols <= set(BINARY_ALPHABET) for symbols in observed):
			declared = BINARY_ALPHABETS
		else:
			declared = tuple(tuple(sorted(symbols, key=str)) for symbols in observed)
	try:
		return Domain(declared, members)
	except DomainError as e:
		raise ParseError("%s: %s" % (sourceName, e))


def ReadDomainFile( fileName ):
	with open(fileName) as theFile:
		lines = theFile.readlines()
	return ParseDomainLines(lines, sourceName=fileName)


def FormatDomain( domain ):
	outputLines = []
	if domain.IsBinary():
		outputLines.extend(domain.Bitstrings())
	else:
		outputLines.append("alphabets " + " | ".join(FormatSymbols(a) for a in domain.alphabets))
		outputLines.extend(FormatSymbols(x) for x in domain.members)
	return "\n".join(outputLines) + "\n"
