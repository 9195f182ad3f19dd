#!/usr/bin/env python3

"""Unit tests for threeshare/bounds.py"""

import math
import unittest
from fractions import Fraction

import numpy as np

from threeshare import bounds, domains, infotheory, schemes
from threeshare.datautils import (MarginConstraintError, EpsilonRangeError, DomainError,
                                    ParseError, SymbolicValue)


log2of6 = math.log2(6)
starBits = ["000", "001", "010", "100"]


def Bits( *strings ):
    return domains.Domain.FromBitstrings(strings)

def StarValue( eps ):
    return infotheory.BinaryEntropy(1.0/3.0 - eps) + (2.0/3.0 - 2*eps) + (1.0 - 4*eps)

def RandomTriples( domain, spec, n, seed ):
    params = bounds._TripleParameters(domain, spec)
    rng = np.random.default_rng(seed)
    return [params.Triple(params.Random(rng)) for i in range(n)]

def SecretPmfs( domain ):
    """Uniform, skewed and near-degenerate exact pmfs on a domain."""
    members = domain.members
    n = len(members)
    uniform = infotheory.UniformPmf(schemes.SECRET_AXES, members)
    total = n * (n + 1) // 2
    skewed = infotheory.JointPmf(schemes.SECRET_AXES, {x: Fraction(k + 1, total) for k, x in enumerate(members)})
    weights = {x: Fraction(1, 1000) for x in members}
    weights[members[0]] = 1 - Fraction(n - 1, 1000)
    nearPoint = infotheory.JointPmf(schemes.SECRET_AXES, weights)
    return [uniform, skewed, nearPoint]



class BoundSpecCheck( unittest.TestCase ):
    def testAllSpecs( self ):
        self.assertEqual(12, len(bounds.ALL_BOUND_SPECS))
        self.assertEqual(12, len(set(bounds.ALL_BOUND_SPECS)))
        self.assertEqual("LB2:123", str(bounds.DEFAULT_SPEC))

    def testRoles( self ):
        spec = bounds.ParseBoundSpec("lb2:312")
        self.assertEqual(("X3", "X1", "X2"), spec.roles)
        self.assertEqual("X1", spec.primeConstraint)
        self.assertEqual("X3", spec.doubleConstraint)
        lb1 = bounds.ParseBoundSpec("LB1:312")
        self.assertEqual("X3", lb1.primeConstraint)
        self.assertEqual(bounds.DEFAULT_SPEC, bounds.ParseBoundSpec("LB2"))

    def testBadSpecs( self ):
        for text in ["LB3:123", "LB2:112", "LB2:1234", "LB2:1:2"]:
            self.assertRaises(ParseError, bounds.ParseBoundSpec, text)
        self.assertRaises(ValueError, bounds.BoundSpec, "LB2", (0, 0, 1))


class EvaluateBoundCheck( unittest.TestCase ):
    def testFamily4( self ):
        d = Bits("000", "001")
        p = bounds.SecretPmf(d, {"000": Fraction(1, 2), "001": Fraction(1, 2)})
        evaluation = bounds.EvaluateBound(bounds.DEFAULT_SPEC, bounds.DistributionTriple(p, p, p))
        self.assertAlmostEqual(1.0, evaluation.value, places=12)
        self.assertAlmostEqual(evaluation.value, sum(evaluation.terms) - evaluation.hX1, places=12)
        self.assertEqual(6, len(evaluation.Row()))

    def testSingleton( self ):
        p = bounds.SecretPmf(Bits("000"), {"000": Fraction(1)})
        evaluation = bounds.EvaluateBound(bounds.DEFAULT_SPEC, bounds.DistributionTriple(p, p, p))
        self.assertEqual(0.0, evaluation.value)

    def testStarTriple( self ):
        triple = bounds.StarTripleFamily().Triple(Fraction(1, 100))
        evaluation = bounds.EvaluateBound(bounds.DEFAULT_SPEC, triple)
        self.assertAlmostEqual(StarValue(0.01), evaluation.value, places=9)

    def testMarginViolation( self ):
        d = Bits(*starBits)
        p = infotheory.UniformPmf(schemes.SECRET_AXES, d.members)
        point = bounds.SecretPmf(d, {"000": Fraction(1)})
        with self.assertRaises(MarginConstraintError) as context:
            bounds.EvaluateBound(bounds.DEFAULT_SPEC, bounds.DistributionTriple(p, point, p))
        self.assertIn("X2", str(context.exception))
        self.assertIn("p'", str(context.exception))
        # LB1 constrains p' on X1 instead
        self.assertRaises(MarginConstraintError, bounds.EvaluateBound, bounds.BoundSpec("LB1"),
                            bounds.DistributionTriple(p, point, p))

    def testSecretPmf( self ):
        d = Bits("000", "011")
        p = bounds.SecretPmf(d, {"000": Fraction(1, 4), (0, 1, 1): Fraction(3, 4)})
        self.assertEqual(Fraction(3, 4), p[(0, 1, 1)])
        self.assertRaises(DomainError, bounds.SecretPmf, d, {"111": Fraction(1)})


class EpsilonFamilyCheck( unittest.TestCase ):
    def testStarSweep( self ):
        family = bounds.StarTripleFamily()
        result = bounds.EpsilonSweep(family)
        self.assertEqual(5, len(result.rows))
        self.assertTrue(result.monotone)
        self.assertLess(abs(result.limitEstimate - log2of6), 1e-3)
        self.assertAlmostEqual(log2of6, family.limitValue, places=12)
        for row in result.rows:
            self.assertAlmostEqual(StarValue(row.epsilon), row.evaluation.value, places=9)

    def testStarRange( self ):
        family = bounds.StarTripleFamily()
        self.assertRaises(EpsilonRangeError, family.Triple, 0)
        self.assertRaises(EpsilonRangeError, family.Triple, Fraction(1, 6))
        family.Triple(Fraction(1, 12))

    def testStarMargins( self ):
        family = bounds.StarTripleFamily()
        for eps in [Fraction(1, 12), Fraction(1, 1000)]:
            triple = family.Triple(eps)
            bounds.CheckMarginConstraints(bounds.DEFAULT_SPEC, triple)
            for pmf in (triple.p, triple.pPrime, triple.pDouble):
                self.assertEqual(4, len(pmf.Support()))

    def testSchedules( self ):
        self.assertEqual([0.01, 0.001], bounds.ParseEpsSchedule("1e-2, 1e-3"))
        self.assertRaises(ParseError, bounds.ParseEpsSchedule, "a,b")
        self.assertRaises(ParseError, bounds.ParseEpsSchedule, "")
        family = bounds.StarTripleFamily()
        self.assertRaises(EpsilonRangeError, bounds.EpsilonSweep, family, bounds.DEFAULT_SPEC, [1e-3, 1e-2])
        self.assertRaises(EpsilonRangeError, bounds.EpsilonSweep, family, bounds.DEFAULT_SPEC, [0.5, 0.1])

    def testSweepFrame( self ):
        result = bounds.EpsilonSweep(bounds.StarTripleFamily(), schedule=[1e-2, 1e-4])
        frame = bounds.SweepDataFrame(result)
        self.assertEqual(2, len(frame))
        self.assertEqual(["family", "epsilon", "value", "term1", "term2", "term3", "term4", "H(X1)"], frame.colNames)
        self.assertEqual([11, 11], frame["family"])


class PresetCheck( unittest.TestCase ):
    def testCombinatorialFamilies( self ):
        self.assertEqual(bounds.COMBINATORIAL, bounds.PresetFamily(13))
        self.assertEqual(bounds.COMBINATORIAL, bounds.PresetFamily(14))
        self.assertRaises(DomainError, bounds.PresetFamily, 0)

    def testDerivedFamilies( self ):
        for familyId in (1, 2, 3):
            family = bounds.PresetFamily(familyId)
            self.assertTrue(family.derived)
            self.assertEqual("0", family.limitLabel)
            result = bounds.EpsilonSweep(family)
            for row in result.rows:
                self.assertEqual([(0, 0, 0)], row.evaluation.triple.p.Support())
                self.assertAlmostEqual(0.0, row.evaluation.value, places=12)
            self.assertTrue(result.monotone)

    def testPresetDomains( self ):
        for familyId in bounds.PRESET_LIMITS:
            family = bounds.PresetFamily(familyId)
            self.assertEqual(familyId, domains.FamilyOf(family.domain).familyId)
            self.assertEqual(domains.FAMILY_RHO[familyId], family.limitLabel)

    def testFullSupport( self ):
        for familyId in bounds.PRESET_LIMITS:
            family = bounds.PresetFamily(familyId)
            triple = family.Triple(Fraction(1, 10))
            bounds.CheckMarginConstraints(bounds.DEFAULT_SPEC, triple)
            expected = 1 if family.derived else len(family.domain)
            self.assertEqual(expected, len(triple.p.Support()))

    def testSweepsNonNegative( self ):
        families = [bounds.PresetFamily(familyId) for familyId in bounds.PRESET_LIMITS]
        families.append(bounds.StarTripleFamily())
        for family in families:
            result = bounds.EpsilonSweep(family)
            for row in result.rows:
                self.assertGreaterEqual(row.evaluation.value, -1e-12, "%s at eps %g" % (family.name, row.epsilon))
            self.assertLess(abs(result.limitEstimate - family.limitValue), 1e-3)

    def testFamily4Constant( self ):
        result = bounds.EpsilonSweep(bounds.PresetFamily(4))
        for row in result.rows:
            self.assertAlmostEqual(1.0, row.evaluation.value, places=12)

    def testLimits( self ):
        for familyId in bounds.PRESET_LIMITS:
            family = bounds.PresetFamily(familyId)
            result = bounds.EpsilonSweep(family)
            self.assertLess(abs(result.limitEstimate - family.limitValue), 1e-3)
            self.assertLessEqual(result.limitEstimate, SymbolicValue(domains.FAMILY_RHO[familyId]) + 1e-9)

    def testCubeLimit( self ):
        self.assertLess(abs(bounds.PresetLimitEstimate(21) - 3.0), 1e-3)
        self.assertIsNone(bounds.PresetLimitEstimate(13))


class TensorizationCheck( unittest.TestCase ):
    def testBoundDoubles( self ):
        triple = bounds.PresetFamily(11).Triple(Fraction(1, 100))
        single = bounds.EvaluateBound(bounds.DEFAULT_SPEC, triple)
        double = bounds.EvaluateBound(bounds.DEFAULT_SPEC, bounds.TensorSquare(triple))
        self.assertAlmostEqual(2 * single.value, double.value, places=9)
        for a, b in zip(single.terms, double.terms):
            self.assertAlmostEqual(2 * a, b, places=9)


class OptimizerCheck( unittest.TestCase ):
    def testSingleton( self ):
        self.assertEqual(0.0, bounds.OptimizeBound(Bits("000")).value)

    def testStarDomain( self ):
        evaluation = bounds.OptimizeBound(Bits(*starBits), restarts=2, steps=40)
        self.assertGreaterEqual(evaluation.value, 2.58)
        self.assertLessEqual(evaluation.value, log2of6 + 1e-9)

    def testFullCube( self ):
        evaluation = bounds.OptimizeBound(domains.Domain.FromMask(domains.FULL_MASK), restarts=1, steps=20)
        self.assertGreaterEqual(evaluation.value, 3.0 - 1e-2)

    def testDeterministic( self ):
        d = Bits("000", "011", "101")
        a = bounds.OptimizeBound(d, bounds.BoundSpec("LB1", (1, 2, 0)), restarts=2, steps=30, seed=7)
        b = bounds.OptimizeBound(d, bounds.BoundSpec("LB1", (1, 2, 0)), restarts=2, steps=30, seed=7)
        self.assertEqual(a.value, b.value)
        self.assertLessEqual(a.value, 1.0 + 1e-9)

    def testSupersets( self ):
        self.assertAlmostEqual(3.0, bounds.BestBoundOverSupersets(domains.Domain.FromMask(domains.FULL_MASK)), places=3)
        self.assertEqual(0.0, bounds.BestBoundOverSupersets(Bits("000")))
        superset = Bits(*(starBits + ["011"]))
        self.assertGreaterEqual(bounds.BestBoundOverSupersets(superset), log2of6 - 1e-3)
        nonBinary = domains.Domain(((0, 1, 2), (0, 1), (0, 1)), [(2, 0, 0)])
        self.assertRaises(DomainError, bounds.BestBoundOverSupersets, nonBinary)


class SoundnessCheck( unittest.TestCase ):
    def testRandomTriplesBelowSchemes( self ):
        for familyId in range(1, domains.N_FAMILIES + 1):
            scheme = schemes.AssignedScheme(familyId)
            rho = schemes.RandomnessComplexity(scheme)
            spec = bounds.ALL_BOUND_SPECS[familyId % len(bounds.ALL_BOUND_SPECS)]
            for s in (bounds.DEFAULT_SPEC, spec):
                for triple in RandomTriples(scheme.domain, s, 25, seed=familyId):
                    self.assertLessEqual(bounds.EvaluateBound(s, triple).value, rho + 1e-9)


class ShareInequalityCheck( unittest.TestCase ):
    def testShareEntropyBound( self ):
        for schemeId in range(1, 6):
            s = schemes.CanonicalScheme(schemeId)
            rho = schemes.RandomnessComplexity(s)
            for p in SecretPmfs(s.domain):
                joint = schemes.InducedJoint(s, p)
                for variant in bounds.VARIANTS:
                    self.assertLessEqual(bounds.ShareEntropyBound(joint, variant), rho + 1e-9)
        self.assertRaises(ValueError, bounds.ShareEntropyBound, joint, "LB3")

    def testResidualProcessing( self ):
        for schemeId in range(1, 6):
            s = schemes.CanonicalScheme(schemeId)
            for p in SecretPmfs(s.domain):
                joint = schemes.InducedJoint(s, p)
                for gap in bounds.ResidualProcessingGaps(joint):
                    self.assertGreaterEqual(gap, -1e-9)
                for gap in bounds.OppositeShareGaps(joint):
                    self.assertGreaterEqual(gap, -1e-9)

    def testViewMarginUnchanged( self ):
        # P(W12, W31) depends on the secret pmf only through the X1 margin
        for schemeId in range(1, 6):
            s = schemes.CanonicalScheme(schemeId)
            members = s.domain.members
            uniform = infotheory.UniformPmf(schemes.SECRET_AXES, members)
            margin = uniform.Marginal("X1")
            weights = {}
            for (x1,), mass in margin.items():
                fiber = [x for x in members if x[0] == x1]
                total = len(fiber) * (len(fiber) + 1) // 2
                for k, x in enumerate(fiber):
                    weights[x] = mass * Fraction(k + 1, total)
            skewed = infotheory.JointPmf(schemes.SECRET_AXES, weights)
            a = schemes.InducedJoint(s, uniform).Marginal(("W12", "W31"))
            b = schemes.InducedJoint(s, skewed).Marginal(("W12", "W31"))
            self.assertEqual(a, b)



if __name__ == "__main__":
    unittest.main()
