#!/usr/bin/env python3

"""Unit tests for threeshare/schemes.py"""

import math
import os
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import threeshare
from threeshare import domains, infotheory, schemes
from threeshare.datautils import SchemeError, ParseError, SymbolicLog2


dataDir = os.path.join(os.path.dirname(threeshare.__file__), "data")

masks = st.integers(min_value=1, max_value=domains.FULL_MASK)
transforms = st.sampled_from(domains.ALL_TRANSFORMS)
schemeIds = st.sampled_from([1, 2, 3, 4, 5])

canonicalRho = {1: 3.0, 2: 2.0, 3: 1.0, 4: 2.0, 5: math.log2(6)}


def Bits( *strings ):
    return domains.Domain.FromBitstrings(strings)

def ConstantScheme():
    return schemes.Scheme(Bits("000"), [("*", 1)], {((0, 0, 0), "*"): ("-", "-", "-")})

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



class SchemeTypeCheck( unittest.TestCase ):
    def testConstantScheme( self ):
        s = ConstantScheme()
        self.assertEqual(0.0, schemes.RandomnessComplexity(s))
        self.assertTrue(schemes.Verify(s).passed)
        report, recon = schemes.VerifyCorrectness(s)
        self.assertEqual((0, 0, 0), recon.Decode(("-", "-", "-")))

    def testInvalidTables( self ):
        d = Bits("000", "001")
        good = {((0, 0, 0), "0"): ("a", "b", "c"), ((0, 0, 1), "0"): ("a", "b", "d")}
        self.assertRaises(SchemeError, schemes.Scheme, d, [("0", Fraction(1, 2))], good)
        self.assertRaises(SchemeError, schemes.Scheme, d, [("0", 1), ("1", 0)], good)
        self.assertRaises(SchemeError, schemes.Scheme, d, [("0", 1)], {((0, 0, 0), "0"): ("a", "b", "c")})
        self.assertRaises(SchemeError, schemes.Scheme, d, [("0", 1)], good, shareAlphabets=(("a",), ("b",), ("c",)))
        self.assertRaises(SchemeError, schemes.Scheme, d, [], good)

    def testPartyViews( self ):
        shares = ("w12", "w23", "w31")
        self.assertEqual(("w12", "w31"), schemes.PartyView(shares, 0))
        self.assertEqual(("w23", "w12"), schemes.PartyView(shares, 1))
        self.assertEqual(("w31", "w23"), schemes.PartyView(shares, 2))
        self.assertEqual(0, schemes.EdgeOfParties(1, 0))
        self.assertEqual(2, schemes.EdgeOfParties(0, 2))
        self.assertRaises(SchemeError, schemes.EdgeOfParties, 1, 1)


class CanonicalSchemeCheck( unittest.TestCase ):
    def testValidityDomains( self ):
        for schemeId in range(1, 6):
            s = schemes.CanonicalScheme(schemeId)
            self.assertTrue(schemes.Verify(s).passed)
            self.assertAlmostEqual(canonicalRho[schemeId], schemes.RandomnessComplexity(s), places=12)
            self.assertEqual(schemes.CANONICAL_RHO[schemeId], SymbolicLog2(len(s.randomness)))

    def testShareAlphabets( self ):
        s5 = schemes.CanonicalScheme(5)
        self.assertEqual(6, len(s5.randomness))
        self.assertEqual((("0", "1", "2"),) * 3, s5.shareAlphabets)
        s3 = schemes.CanonicalScheme(3)
        self.assertEqual(2, len(s3.randomness))
        self.assertEqual((("0", "1"),) * 3, s3.shareAlphabets)

    def testSubsets( self ):
        self.assertTrue(schemes.Verify(schemes.CanonicalScheme(1, Bits("000"))).passed)
        self.assertRaises(SchemeError, schemes.CanonicalScheme, 3, Bits("000", "100"))
        self.assertRaises(SchemeError, schemes.CanonicalScheme, 5, Bits("000", "011"), strict=False)
        self.assertRaises(SchemeError, schemes.CanonicalScheme, 6)

    def testOffParityCorrectness( self ):
        s = schemes.CanonicalScheme(3, Bits("000", "100"), strict=False)
        report, recon = schemes.VerifyCorrectness(s)
        self.assertIsNone(recon)
        self.assertFalse(report.correct[0])
        c = report.counterexample
        self.assertEqual(1, c.party)
        self.assertEqual("correctness", c.condition)
        self.assertEqual(((0, 0, 0), (1, 0, 0)), (c.secret, c.otherSecret))
        self.assertEqual("party 1 correctness failure: cannot tell 000 from 100 (view 1 1)", str(c))
        self.assertFalse(schemes.Verify(s).passed)

    def testOffParityPrivacy( self ):
        s = schemes.CanonicalScheme(3, Bits("000", "010"), strict=False)
        report = schemes.VerifyPrivacy(s)
        self.assertFalse(report.passed)
        self.assertFalse(report.private[0])
        c = report.counterexample
        self.assertEqual(1, c.party)
        self.assertEqual("privacy", c.condition)
        self.assertEqual(((0, 0, 0), (0, 1, 0)), (c.secret, c.otherSecret))

    def testReconstruction( self ):
        s = schemes.CanonicalScheme(5)
        report, recon = schemes.VerifyCorrectness(s)
        self.assertTrue(all(report.correct))
        for x in s.domain:
            for r in s.randomnessSymbols:
                self.assertEqual(x, recon.Decode(s.Encode(x, r)))

    @given(masks)
    def testSubsetClosure( self, mask ):
        subdomain = domains.Domain.FromMask(mask)
        s = schemes.RestrictScheme(schemes.CanonicalScheme(1), subdomain)
        self.assertTrue(schemes.Verify(s).passed)
        self.assertEqual(8, len(s.randomness))

    def testRestrictOutside( self ):
        s = schemes.CanonicalScheme(3)
        self.assertRaises(SchemeError, schemes.RestrictScheme, s, Bits("000", "111"))


class ReducedSchemeCheck( unittest.TestCase ):
    def testAdditive( self ):
        s = schemes.ReducedScheme(Bits("000", "001"), additiveSet=(3,))
        self.assertTrue(schemes.Verify(s).passed)
        self.assertEqual(1.0, schemes.RandomnessComplexity(s))

    def testClear( self ):
        s = schemes.ReducedScheme(Bits("000", "111"), {1: "12", 3: "31"})
        self.assertTrue(schemes.Verify(s).passed)
        self.assertEqual(0.0, schemes.RandomnessComplexity(s))
        self.assertEqual(("1", schemes.EMPTY_SHARE, "1"), s.Encode((1, 1, 1), schemes.NO_RANDOMNESS))
        s = schemes.ReducedScheme(Bits("000", "011"), {2: ["23"]})
        self.assertTrue(schemes.Verify(s).passed)

    def testClearLeaks( self ):
        # x3 in clear on the edge of parties 1 and 2
        s = schemes.ReducedScheme(Bits("000", "001"), {3: "12"})
        report = schemes.VerifyPrivacy(s)
        self.assertFalse(report.private[0])
        self.assertFalse(schemes.Verify(s).passed)

    def testDescribe( self ):
        self.assertEqual("reduced(x1@12 x3@31)", schemes.DescribePlan({3: "31", 1: ["12"]}, ()))
        self.assertEqual("reduced(additive x1,x2)", schemes.DescribePlan({}, (2, 1)))
        self.assertEqual("reduced(x1@12+31 additive x3)", schemes.DescribePlan({1: {"31", "12"}}, (3,)))

    def testBadPlans( self ):
        d = Bits("000", "001")
        self.assertRaises(SchemeError, schemes.ReducedScheme, d, {4: "12"})
        self.assertRaises(SchemeError, schemes.ReducedScheme, d, {1: "13"})
        self.assertRaises(SchemeError, schemes.ReducedScheme, d, {3: "31"}, (3,))
        self.assertRaises(SchemeError, schemes.ReducedScheme, d, None, (0,))
        nonBinary = domains.Domain(((0, 1, 2), (0, 1), (0, 1)), [(2, 0, 0)])
        self.assertRaises(SchemeError, schemes.ReducedScheme, nonBinary)

    def testAllPlans( self ):
        plans = schemes.AllReducedPlans()
        self.assertEqual(125, len(plans))
        self.assertEqual(({}, ()), plans[0])

    def testEntropyConditionsAgree( self ):
        d = Bits("000", "001", "110")
        for clearPlan, additive in schemes.AllReducedPlans():
            s = schemes.ReducedScheme(d, clearPlan, additive)
            p = infotheory.UniformPmf(schemes.SECRET_AXES, d.members)
            self.assertEqual(schemes.Verify(s).passed, schemes.CheckEntropyConditions(s, p).passed)


class TransportCheck( unittest.TestCase ):
    def testIdentity( self ):
        s = schemes.CanonicalScheme(2)
        self.assertIs(s, schemes.TransportScheme(s, domains.IDENTITY))

    def testNegateFace( self ):
        s = schemes.TransportScheme(schemes.CanonicalScheme(2), domains.Transform((1, 0, 0), (0, 1, 2)))
        self.assertEqual(Bits("100", "101", "110", "111"), s.domain)
        self.assertTrue(schemes.Verify(s).passed)

    def testSwapScheme4( self ):
        s = schemes.TransportScheme(schemes.CanonicalScheme(4), domains.Transform((0, 0, 0), (2, 1, 0)))
        self.assertEqual(Bits("000", "100", "011", "111"), s.domain)
        self.assertTrue(schemes.Verify(s).passed)
        self.assertEqual(2.0, schemes.RandomnessComplexity(s))

    @given(schemeIds, transforms)
    def testInvariance( self, schemeId, t ):
        s = schemes.CanonicalScheme(schemeId)
        moved = schemes.TransportScheme(s, t)
        self.assertEqual(domains.ApplyTransform(s.domain, t), moved.domain)
        self.assertEqual(len(s.randomness), len(moved.randomness))
        self.assertTrue(schemes.Verify(moved).passed)

    @given(transforms)
    def testFailureTransports( self, t ):
        s = schemes.CanonicalScheme(3, Bits("000", "100"), strict=False)
        self.assertFalse(schemes.Verify(schemes.TransportScheme(s, t)).passed)


class InducedJointCheck( unittest.TestCase ):
    def testScheme3Share( self ):
        s = schemes.CanonicalScheme(3)
        p = infotheory.UniformPmf(schemes.SECRET_AXES, s.domain.members)
        joint = schemes.InducedJoint(s, p)
        self.assertTrue(joint.IsExact())
        self.assertEqual(Fraction(1, 2), joint.Marginal("W12")[("0",)])
        self.assertEqual(p.weights, joint.Marginal(schemes.SECRET_AXES))

    def testScheme1Independence( self ):
        s = schemes.CanonicalScheme(1)
        p = infotheory.UniformPmf(schemes.SECRET_AXES, s.domain.members)
        joint = schemes.InducedJoint(s, p)
        self.assertTrue(infotheory.IsConditionallyIndependent(joint, "W12", ("W23", "W31")))
        self.assertTrue(infotheory.IsConditionallyIndependent(joint, "W23", "W31"))
        for axis in schemes.SHARE_AXES:
            self.assertAlmostEqual(2.0, infotheory.Entropy(joint, axis), places=12)

    def testPointMass( self ):
        s = schemes.CanonicalScheme(4)
        p = infotheory.UniformPmf(schemes.SECRET_AXES, [(1, 1, 0)])
        joint = schemes.InducedJoint(s, p)
        for r in s.randomnessSymbols:
            self.assertEqual(Fraction(1, 4), joint[(1, 1, 0) + s.Encode((1, 1, 0), r)])

    def testMassOutsideDomain( self ):
        s = schemes.CanonicalScheme(3)
        p = infotheory.UniformPmf(schemes.SECRET_AXES, [(0, 0, 0), (1, 1, 1)])
        self.assertRaises(SchemeError, schemes.InducedJoint, s, p)

    def testEntropyConditions( self ):
        for schemeId in range(1, 6):
            s = schemes.CanonicalScheme(schemeId)
            for p in SecretPmfs(s.domain):
                report = schemes.CheckEntropyConditions(s, p)
                self.assertTrue(report.passed)
                for h, leak in zip(report.conditionalEntropies, report.leakages):
                    self.assertLess(abs(h), 1e-9)
                    self.assertLess(abs(leak), 1e-9)

    def testEntropyConditionsFloat( self ):
        s = schemes.CanonicalScheme(5)
        members = s.domain.members
        p = infotheory.JointPmf(schemes.SECRET_AXES, {x: 0.2 for x in members})
        self.assertTrue(schemes.CheckEntropyConditions(s, p).passed)
        bad = schemes.CanonicalScheme(3, Bits("000", "100"), strict=False)
        q = infotheory.JointPmf(schemes.SECRET_AXES, {(0, 0, 0): 0.5, (1, 0, 0): 0.5})
        report = schemes.CheckEntropyConditions(bad, q)
        self.assertFalse(report.correct[0])
        self.assertAlmostEqual(1.0, report.conditionalEntropies[0], places=9)


class SchemeTextCheck( unittest.TestCase ):
    def testReadScheme5( self ):
        s = schemes.ReadSchemeFile(os.path.join(dataDir, "scheme5.scheme"))
        self.assertEqual(schemes.CanonicalScheme(5), s)

    def testReadFailingScheme( self ):
        s = schemes.ReadSchemeFile(os.path.join(dataDir, "scheme3_offparity.scheme"))
        report = schemes.Verify(s)
        self.assertFalse(report.passed)
        self.assertEqual(1, report.counterexample.party)

    def testRoundTrip( self ):
        for s in [schemes.CanonicalScheme(1), schemes.CanonicalScheme(4),
                    schemes.ReducedScheme(Bits("000", "111"), {1: "12", 3: "31"})]:
            text = schemes.FormatScheme(s)
            self.assertEqual(s, schemes.ParseSchemeLines(text.splitlines()))

    def testErrors( self ):
        rows = ["0,0,0 | a | 0 0 0"]
        self.assertRaises(ParseError, schemes.ParseSchemeLines, rows)
        self.assertRaises(ParseError, schemes.ParseSchemeLines, ["randomness a 1"])
        self.assertRaises(ParseError, schemes.ParseSchemeLines, ["randomness a 1", "0,0,0 | a"])
        self.assertRaises(ParseError, schemes.ParseSchemeLines, ["randomness a 1/2", "0,0,0 | a | 0 0 0"])
        self.assertRaises(ParseError, schemes.ParseSchemeLines,
                            ["randomness a 1/2", "randomness b 1/2", "0,0,0 | a | 0 0 0"])


class AssignmentCheck( unittest.TestCase ):
    def testAssignedSchemes( self ):
        for familyId in range(1, domains.N_FAMILIES + 1):
            s = schemes.AssignedScheme(familyId)
            self.assertTrue(schemes.Verify(s).passed)
            self.assertEqual(domains.GetFamily(familyId).representative, s.domain)
            self.assertEqual(domains.FAMILY_RHO[familyId], SymbolicLog2(len(s.randomness)))

    def testTableVersion( self ):
        self.assertEqual(1, schemes.SCHEME_ASSIGNMENT_VERSION)
        self.assertEqual(set(range(1, 22)), set(schemes.SCHEME_ASSIGNMENT))
        self.assertEqual("scheme 5", schemes.SCHEME_ASSIGNMENT[13].Describe())

    def testSearchSmallFamilies( self ):
        for familyId in (1, 3, 4, 9, 11):
            result = schemes.SearchSchemeAssignment(familyId)
            self.assertEqual(domains.FAMILY_RHO[familyId], result.rhoLabel)
            self.assertTrue(schemes.Verify(result.scheme).passed)

    @pytest.mark.slow
    def testSearchAllFamilies( self ):
        for familyId in range(1, domains.N_FAMILIES + 1):
            result = schemes.SearchSchemeAssignment(familyId)
            self.assertEqual(domains.FAMILY_RHO[familyId], result.rhoLabel)



if __name__ == "__main__":
    unittest.main()
