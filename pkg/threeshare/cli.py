# Command-line driver for threeshare: batch commands printing text tables
# (or TSV with --tsv) for domain classification, scheme verification,
# bound evaluation and sweeps, support-structure certification, and the
# full randomness-complexity table.
#
# Exit codes: 0 success, 1 unreadable input or bad arguments, 2 failed
# verification or non-tight table row, 3 search budget exhausted.

# Licensed under a 3-clause BSD style license - see LICENSE.rst

import argparse
import math
import sys

from astropy import log

from . import conf
from .datautils import (ParseError, DomainError, PmfError, SchemeError, MarginConstraintError,
						EpsilonRangeError, BudgetExceededError, ListDataFrame, SymbolicLog2,
						SymbolicValue)
from .domains import (ReadDomainFile, FamilyOf, ClassifyAll, TransformWitness, FAMILY_RHO,
						N_FAMILIES)
from .infotheory import ReadPmfFile, Entropy, ConditionalEntropy, ResidualInformation
from .schemes import (ReadSchemeFile, Verify, RandomnessComplexity, AssignedScheme,
						SCHEME_ASSIGNMENT)
from .bounds import (PresetFamily, StarTripleFamily, EpsilonSweep, EvaluateBound, OptimizeBound,
						SweepDataFrame, ParseBoundSpec, ParseEpsSchedule, DEFAULT_SPEC,
						COMBINATORIAL)
from .certifier import Search, CertifiedLowerBound, FormatWitness, CheckStructure, INFEASIBLE, UNDECIDED


EXIT_OK = 0
EXIT_PARSE = 1
EXIT_FAILED = 2
EXIT_BUDGET = 3
TIGHT_TOLERANCE = 1e-3

BITS_FORMAT = "%.6f"



class _ArgumentParser(argparse.ArgumentParser):
	"""Reports argument errors as ParseError instead of exiting."""

	def error( self, message ):
		raise ParseError(message)


def BitsLabel( label ):
	""""log2(6) (2.584963)" for irrational values, the plain label otherwise."""
	if label.startswith("log2("):
		return "%s (%s)" % (label, BITS_FORMAT % SymbolicValue(label))
	return label



def DoClassify( args, outStream ):
	domain = ReadDomainFile(args.domainFile)
	record = FamilyOf(domain)
	t = TransformWitness(domain, record.representative)
	frame = ListDataFrame.Empty(["domain", "family", "representative", "rho", "transform"])
	frame.AddRow([str(domain), record.familyId, str(record.representative),
					FAMILY_RHO[record.familyId], str(t)])
	frame.Write(outStream, tsv=args.tsv)
	return EXIT_OK


def DoFamilies( args, outStream ):
	frame = ListDataFrame.Empty(["family", "representative", "canonical_mask", "members", "rho"])
	for record in ClassifyAll():
		frame.AddRow([record.familyId, str(record.representative), record.canonicalMask,
						len(record), FAMILY_RHO[record.familyId]])
	frame.Write(outStream, tsv=args.tsv)
	return EXIT_OK


def DoVerify( args, outStream ):
	scheme = ReadSchemeFile(args.schemeFile)
	report = Verify(scheme)
	frame = ListDataFrame.Empty(["party", "correct", "private"])
	for i in range(3):
		frame.AddRow([i + 1, "yes" if report.correct[i] else "no", "yes" if report.private[i] else "no"])
	frame.Write(outStream, tsv=args.tsv)
	if not args.tsv:
		outStream.write("domain: %s\n" % scheme.domain)
		outStream.write("randomness: |R| = %d, rho = %s\n" % (len(scheme.randomness),
						BitsLabel(SymbolicLog2(len(scheme.randomness)))))
		if report.passed:
			outStream.write("verdict: pass\n")
		else:
			outStream.write("verdict: FAIL\n")
			outStream.write("counterexample: %s\n" % report.counterexample)
	return EXIT_OK if report.passed else EXIT_FAILED


def _LowerFromPreset( familyId, schedule ):
	family = PresetFamily(familyId)
	result = EpsilonSweep(family, DEFAULT_SPEC, schedule)
	source = "derived" if family.derived else "preset"
	close = abs(result.limitEstimate - family.limitValue) <= TIGHT_TOLERANCE
	return source, family.limitLabel, result.limitEstimate, close


def DoRhoTable( args, outStream ):
	schedule = ParseEpsSchedule(args.eps_schedule) if args.eps_schedule else None
	columnNames = ["family", "scheme", "upper", "upper_bits", "source", "lower", "lower_bits", "tight"]
	frame = ListDataFrame.Empty(columnNames, formats={"upper_bits": BITS_FORMAT})
	allTight = True
	for familyId in range(1, N_FAMILIES + 1):
		scheme = AssignedScheme(familyId)
		nRandomness = len(scheme.randomness)
		upperLabel = SymbolicLog2(nRandomness)
		upperBits = RandomnessComplexity(scheme)
		if PresetFamily(familyId) == COMBINATORIAL:
			source = "combinatorial"
			if args.no_certify:
				frame.AddRow([familyId, SCHEME_ASSIGNMENT[familyId].Describe(), upperLabel, upperBits,
								source, "-", "-", "skipped"])
				continue
			record = FamilyOf(scheme.domain)
			lowerBits = CertifiedLowerBound(record.representative, kMax=nRandomness - 1,
											budget=args.budget, workers=args.workers)
			lowerLabel = SymbolicLog2(round(2**lowerBits))
			close = True
		else:
			source, lowerLabel, lowerBits, close = _LowerFromPreset(familyId, schedule)
		tight = close and lowerLabel == upperLabel
		allTight = allTight and tight
		frame.AddRow([familyId, SCHEME_ASSIGNMENT[familyId].Describe(), upperLabel, upperBits,
						source, lowerLabel, BITS_FORMAT % lowerBits, "yes" if tight else "no"])
	frame.Write(outStream, tsv=args.tsv)
	return EXIT_OK if allTight else EXIT_FAILED


def _EvaluationFrame( label, epsilon, evaluation ):
	columnNames = ["family", "epsilon", "value", "term1", "term2", "term3", "term4", "H(X1)"]
	formats = {name: BITS_FORMAT for name in columnNames[2:]}
	frame = ListDataFrame.Empty(columnNames, formats=formats)
	frame.AddRow([label, epsilon] + evaluation.Row())
	return frame


def _SelectFamily( args ):
	if args.star:
		return StarTripleFamily()
	if args.family is None:
		raise ParseError("choose a family with --family N or --star")
	family = PresetFamily(args.family)
	if family == COMBINATORIAL:
		msg = "family %d has no information-theoretic preset (combinatorial bound)" % args.family
		raise ParseError(msg)
	return family


def DoBound( args, outStream ):
	spec = ParseBoundSpec(args.spec) if args.spec else DEFAULT_SPEC
	if args.optimize:
		if args.domainFile is None:
			raise ParseError("--optimize needs a domain file")
		domain = ReadDomainFile(args.domainFile)
		evaluation = OptimizeBound(domain, spec, seed=args.seed)
		label = FamilyOf(domain).familyId if domain.IsBinary() else "-"
		frame = _EvaluationFrame(label, "-", evaluation)
	else:
		family = _SelectFamily(args)
		epsilon = args.epsilon if args.epsilon is not None else float(conf.warm_start_epsilon)
		evaluation = EvaluateBound(spec, family.Triple(epsilon))
		frame = _EvaluationFrame(family.familyId, "%.3g" % epsilon, evaluation)
	frame.Write(outStream, tsv=args.tsv)
	return EXIT_OK


def DoSweep( args, outStream ):
	spec = ParseBoundSpec(args.spec) if args.spec else DEFAULT_SPEC
	family = _SelectFamily(args)
	schedule = ParseEpsSchedule(args.eps_schedule) if args.eps_schedule else None
	result = EpsilonSweep(family, spec, schedule)
	SweepDataFrame(result).Write(outStream, tsv=args.tsv)
	if not args.tsv:
		outStream.write("%s, %s: limit estimate %s, published limit %s, %s\n" %
						(family.name, spec, BITS_FORMAT % result.limitEstimate, BitsLabel(family.limitLabel),
						"monotone" if result.monotone else "NOT monotone"))
	return EXIT_OK


def _CertifyUpTo( domain, args, outStream ):
	records = []
	kMax = args.k_max if args.k_max is not None else conf.k_max
	lowerBits = CertifiedLowerBound(domain, kMax=kMax, budget=args.budget, workers=args.workers, records=records)
	frame = ListDataFrame.Empty(["cap", "verdict", "nodes"])
	for record in records:
		frame.AddRow([record.cap, record.status, record.nodes])
	frame.Write(outStream, tsv=args.tsv)
	if not args.tsv:
		outStream.write("rho >= %s\n" % BitsLabel(SymbolicLog2(round(2**lowerBits))))
	return EXIT_OK


def DoCertify( args, outStream ):
	domain = ReadDomainFile(args.domainFile)
	if args.cap is None:
		return _CertifyUpTo(domain, args, outStream)
	verdict = Search(domain, args.cap, budget=args.budget, workers=args.workers)
	if verdict.status == UNDECIDED:
		outStream.write("cap %d: undecided after %d nodes (budget exhausted)\n" % (args.cap, verdict.nodesExplored))
		return EXIT_BUDGET
	if verdict.status == INFEASIBLE:
		label = SymbolicLog2(args.cap + 1)
		outStream.write("cap %d: infeasible => rho >= %s (%s) [%d nodes]\n" %
						(args.cap, label, BITS_FORMAT % math.log2(args.cap + 1), verdict.nodesExplored))
		return EXIT_OK
	check = CheckStructure(verdict.witness)
	outStream.write("cap %d: feasible [%d nodes]; witness %s\n" %
					(args.cap, verdict.nodesExplored, "checks" if check.passed else "FAILS: %s" % check.violation))
	outStream.write(FormatWitness(verdict.witness))
	return EXIT_OK if check.passed else EXIT_FAILED


def _AxisGroup( text ):
	return tuple(name for name in text.split(",") if name != "")


def DoRi( args, outStream ):
	pmf = ReadPmfFile(args.pmfFile)
	if len(args.axes) != 2:
		raise ParseError("ri needs exactly two axis groups, e.g. --axes X Y")
	a, b = (_AxisGroup(group) for group in args.axes)
	outStream.write(BITS_FORMAT % ResidualInformation(pmf, a, b) + "\n")
	return EXIT_OK


def DoEntropy( args, outStream ):
	pmf = ReadPmfFile(args.pmfFile)
	target = _AxisGroup(args.axes) if args.axes else pmf.axes
	if args.given:
		value = ConditionalEntropy(pmf, target, _AxisGroup(args.given))
	else:
		value = Entropy(pmf, target)
	outStream.write(BITS_FORMAT % value + "\n")
	return EXIT_OK


COMMANDS = {"classify": DoClassify, "families": DoFamilies, "verify": DoVerify,
			"rho-table": DoRhoTable, "bound": DoBound, "sweep": DoSweep,
			"certify": DoCertify, "ri": DoRi, "entropy": DoEntropy}



def MakeParser():
	common = _ArgumentParser(add_help=False)
	common.add_argument("--tsv", action="store_true", help="write tab-separated values instead of a text table")
	common.add_argument("--budget", type=int, default=None, help="support-search node budget")
	common.add_argument("--workers", type=int, default=1, help="worker processes for support search")
	common.add_argument("--seed", type=int, default=None, help="bound-optimizer seed")
	common.add_argument("--eps-schedule", default=None, help="comma-separated decreasing epsilon values")
	common.add_argument("--spec", default=None, help="bound variant and roles, e.g. LB2:123")
	common.add_argument("--k-max", type=int, default=None, help="largest cap tried by certification")
	common.add_argument("--verbose", action="store_true", help="log progress (INFO)")
	common.add_argument("--debug", action="store_true", help="log search and optimizer detail (DEBUG)")

	parser = _ArgumentParser(prog="threeshare", description="Randomness complexity of three-secret sharing")
	subparsers = parser.add_subparsers(dest="command")
	subparsers.required = True

	p = subparsers.add_parser("classify", parents=[common], help="family of a binary domain")
	p.add_argument("domainFile")
	subparsers.add_parser("families", parents=[common], help="list the 21 domain families")
	p = subparsers.add_parser("verify", parents=[common], help="verify a scheme file")
	p.add_argument("schemeFile")
	p = subparsers.add_parser("rho-table", parents=[common], help="randomness complexity of every family")
	p.add_argument("--no-certify", action="store_true", help="skip combinatorial certification")
	p = subparsers.add_parser("bound", parents=[common], help="evaluate or optimize a lower bound")
	p.add_argument("domainFile", nargs="?", default=None)
	p.add_argument("--family", type=int, default=None)
	p.add_argument("--star", action="store_true", help="use the skewed star-triple family")
	p.add_argument("--epsilon", type=float, default=None)
	p.add_argument("--optimize", action="store_true", help="hill-climb over triples on the domain file")
	p = subparsers.add_parser("sweep", parents=[common], help="epsilon sweep of a preset family")
	p.add_argument("--family", type=int, default=None)
	p.add_argument("--star", action="store_true", help="use the skewed star-triple family")
	p = subparsers.add_parser("certify", parents=[common], help="support-structure search at one cap")
	p.add_argument("domainFile")
	p.add_argument("--cap", type=int, default=None, help="size cap; without it, caps 1..k-max are tried")
	p = subparsers.add_parser("ri", parents=[common], help="residual information of a pmf file")
	p.add_argument("pmfFile")
	p.add_argument("--axes", nargs="+", required=True, help="two axis groups (comma-separated names)")
	p = subparsers.add_parser("entropy", parents=[common], help="entropy of a pmf file")
	p.add_argument("pmfFile")
	p.add_argument("--axes", default=None, help="comma-separated axes (default: all)")
	p.add_argument("--given", default=None, help="comma-separated conditioning axes")
	return parser


def Run( argv=None, outStream=None ):
	"""Runs one command and returns its exit code."""
	if outStream is None:
		outStream = sys.stdout
	try:
		args = MakeParser().parse_args(argv)
	except ParseError as e:
		sys.stderr.write("threeshare: %s\n" % e)
		return EXIT_PARSE
	if args.debug:
		log.setLevel("DEBUG")
	elif args.verbose:
		log.setLevel("INFO")
	else:
		log.setLevel("WARNING")
	try:
		return COMMANDS[args.command](args, outStream)
	except (ParseError, DomainError, PmfError, SchemeError, MarginConstraintError, EpsilonRangeError, OSError) as e:
		sys.stderr.write("threeshare %s: %s\n" % (args.command, e))
		return EXIT_PARSE
	except BudgetExceededError as e:
		sys.stderr.write("threeshare %s: %s\n" % (args.command, e))
		return EXIT_BUDGET


def main():
	sys.exit(Run())


if __name__ == "__main__":
	main()
