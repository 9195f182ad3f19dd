#!/usr/bin/env python3

"""Unit tests for threeshare/domains.py"""

import math
import unittest

from hypothesis import given, strategies as st

from threeshare import domains
from threeshare.datautils import DomainError, ParseError


masks = st.integers(min_value=1, max_value=domains.FULL_MASK)
transforms = st.sampled_from(domains.ALL_TRANSFORMS)

# family sizes, by family id, from brute-force orbit enumeration
familySizes = {1: 8, 2: 12, 3: 4, 4: 12, 5: 24, 6: 6, 7: 8, 8: 2, 9: 24, 10: 6,
                11: 8, 12: 8, 13: 24, 14: 24, 15: 24, 16: 12, 17: 24, 18: 12,
                19: 4, 20: 8, 21: 1}



class DomainCheck( unittest.TestCase ):
    def testFromBitstringsSorts( self ):
        d = domains.Domain.FromBitstrings(["111", "000"])
        self.assertEqual(((0, 0, 0), (1, 1, 1)), d.members)
        self.assertEqual("{000,111}", str(d))
        self.assertEqual(1 + 128, d.binaryMask)

    def testFromMask( self ):
        d = domains.Domain.FromMask(domains.FULL_MASK)
        self.assertEqual(8, len(d))
        self.assertEqual(domains.FULL_MASK, d.binaryMask)
        self.assertRaises(DomainError, domains.Domain.FromMask, 0)
        self.assertRaises(DomainError, domains.Domain.FromMask, 256)

    def testEqualityIgnoresOrder( self ):
        alphabets = ((0, 1, 2), (0, 1), (0, 1))
        a = domains.Domain(alphabets, [(2, 0, 1), (0, 1, 0)])
        b = domains.Domain(alphabets, [(0, 1, 0), (2, 0, 1)])
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertFalse(a.IsBinary())
        self.assertIsNone(a.binaryMask)

    def testBadDomains( self ):
        self.assertRaises(DomainError, domains.Domain, domains.BINARY_ALPHABETS, [])
        self.assertRaises(DomainError, domains.Domain, domains.BINARY_ALPHABETS, [(0, 0, 0), (0, 0, 0)])
        self.assertRaises(DomainError, domains.Domain, domains.BINARY_ALPHABETS, [(0, 0, 2)])
        self.assertRaises(DomainError, domains.Domain, ((0, 1), (0, 1)), [(0, 0)])
        self.assertRaises(DomainError, domains.ParseBitString, "0101")

    def testSubsetAndMembership( self ):
        small = domains.Domain.FromBitstrings(["000", "011"])
        big = domains.Domain.FromBitstrings(["000", "011", "101"])
        self.assertTrue(small.IsSubsetOf(big))
        self.assertFalse(big.IsSubsetOf(small))
        self.assertTrue((1, 0, 1) in big)
        self.assertFalse((1, 1, 1) in big)


class TransformCheck( unittest.TestCase ):
    def testGroupSize( self ):
        self.assertEqual(48, len(domains.ALL_TRANSFORMS))
        self.assertEqual(48, len(set(domains.ALL_TRANSFORMS)))
        self.assertTrue(domains.ALL_TRANSFORMS[0].IsIdentity())
        self.assertEqual("negate 000, move 1->1 2->2 3->3", str(domains.IDENTITY))

    def testApply( self ):
        # negate coordinate 1, then move 1->2, 2->3, 3->1
        t = domains.Transform((1, 0, 0), (1, 2, 0))
        self.assertEqual((1, 1, 0), t.Apply((0, 0, 1)))
        self.assertEqual((0, 0, 1), domains.InverseTransform(t).Apply((1, 1, 0)))

    def testSwapOnFace( self ):
        face = domains.Domain.FromBitstrings(["000", "001", "010", "011"])
        swap13 = domains.Transform((0, 0, 0), (2, 1, 0))
        image = domains.ApplyTransform(face, swap13)
        self.assertEqual(domains.Domain.FromBitstrings(["000", "100", "010", "110"]), image)

    def testNonBinaryDomains( self ):
        d = domains.Domain(((0, 1, 2), (0, 1), (0, 1)), [(2, 0, 1), (0, 1, 0)])
        negate = domains.Transform((1, 0, 0), (0, 1, 2))
        swap = domains.Transform((0, 0, 0), (1, 0, 2))
        self.assertRaises(DomainError, domains.ApplyTransform, d, negate)
        self.assertRaises(DomainError, domains.ApplyTransform, d, swap)
        self.assertEqual(d, domains.ApplyTransform(d, domains.IDENTITY))
        self.assertRaises(DomainError, domains.Canonicalize, d)
        self.assertRaises(DomainError, domains.FamilyOf, d)

    def testBadTransform( self ):
        self.assertRaises(DomainError, domains.Transform, (0, 0, 0), (0, 0, 1))

    @given(masks, transforms)
    def testMaskMatchesDomainImage( self, mask, t ):
        d = domains.Domain.FromMask(mask)
        self.assertEqual(domains.TransformMask(mask, t), domains.ApplyTransform(d, t).binaryMask)

    @given(masks, transforms, transforms)
    def testComposition( self, mask, s, t ):
        d = domains.Domain.FromMask(mask)
        twice = domains.ApplyTransform(domains.ApplyTransform(d, t), s)
        self.assertEqual(twice, domains.ApplyTransform(d, domains.ComposeTransforms(s, t)))

    @given(transforms)
    def testInverse( self, t ):
        self.assertTrue(domains.ComposeTransforms(t, domains.InverseTransform(t)).IsIdentity())
        self.assertTrue(domains.ComposeTransforms(domains.InverseTransform(t), t).IsIdentity())


class CanonicalizeCheck( unittest.TestCase ):
    def testPairAtDistanceTwo( self ):
        # {001,010} is in the orbit of {000,011} and has the smallest mask
        for strings in (["000", "011"], ["100", "111"], ["001", "010"]):
            d = domains.Domain.FromBitstrings(strings)
            self.assertEqual(min(domains.Orbit(d)), domains.Canonicalize(d))
            self.assertEqual(6, domains.Canonicalize(d))

    def testInvarianceOverAllMasks( self ):
        for mask in range(1, domains.FULL_MASK + 1):
            d = domains.Domain.FromMask(mask)
            c = domains.Canonicalize(d)
            for t in domains.ALL_TRANSFORMS:
                self.assertEqual(c, domains.Canonicalize(domains.ApplyTransform(d, t)))
            # idempotent on representatives
            self.assertEqual(c, domains.Canonicalize(domains.Domain.FromMask(c)))

    def testOrbitSizes( self ):
        self.assertEqual(8, len(domains.Orbit(domains.Domain.FromBitstrings(["000"]))))
        self.assertEqual(1, len(domains.Orbit(domains.Domain.FromMask(domains.FULL_MASK))))

    @given(masks)
    def testOrbitStabilizer( self, mask ):
        d = domains.Domain.FromMask(mask)
        self.assertEqual(48, len(domains.Orbit(d)) * len(domains.Automorphisms(d)))

    @given(masks, transforms)
    def testWitness( self, mask, t ):
        a = domains.Domain.FromMask(mask)
        b = domains.ApplyTransform(a, t)
        w = domains.TransformWitness(a, b)
        self.assertIsNotNone(w)
        self.assertEqual(b, domains.ApplyTransform(a, w))

    def testWitnessAcrossFamilies( self ):
        a = domains.Domain.FromBitstrings(["000", "011"])
        b = domains.Domain.FromBitstrings(["000", "111"])
        self.assertIsNone(domains.TransformWitness(a, b))
        self.assertTrue(domains.TransformWitness(a, a).IsIdentity())


class ClassifyCheck( unittest.TestCase ):
    def testTwentyOneFamilies( self ):
        records = domains.ClassifyAll()
        self.assertEqual(21, len(records))
        self.assertEqual(list(range(1, 22)), [r.familyId for r in records])
        allMasks = set()
        for r in records:
            self.assertFalse(allMasks & r.memberMasks)
            allMasks |= r.memberMasks
        self.assertEqual(set(range(1, 256)), allMasks)

    def testFamilySizes( self ):
        for r in domains.ClassifyAll():
            self.assertEqual(familySizes[r.familyId], len(r))

    def testRepresentatives( self ):
        for r in domains.ClassifyAll():
            self.assertEqual(min(r.memberMasks), r.canonicalMask)
            published = domains.Domain.FromBitstrings(domains.FAMILY_REPRESENTATIVES[r.familyId])
            self.assertEqual(r.familyId, domains.FamilyOf(published).familyId)

    def testGetFamily( self ):
        self.assertEqual(11, domains.GetFamily(11).familyId)
        self.assertRaises(DomainError, domains.GetFamily, 0)
        self.assertRaises(DomainError, domains.GetFamily, 22)

    def testFamilyRho( self ):
        self.assertEqual(set(range(1, 22)), set(domains.FAMILY_RHO))
        self.assertEqual("log2(6)", domains.FAMILY_RHO[13])
        self.assertEqual("3", domains.FAMILY_RHO[14])
        self.assertAlmostEqual(math.log2(6), domains.GetFamily(13).rhoBits, places=12)
        self.assertEqual(3.0, domains.GetFamily(14).rhoBits)
        self.assertEqual(0.0, domains.FamilyOf(domains.Domain.FromBitstrings(["000", "111"])).rhoBits)


class DomainTextCheck( unittest.TestCase ):
    def testBitstrings( self ):
        lines = ["# a comment", "000", "", "011   # trailing comment"]
        d = domains.ParseDomainLines(lines)
        self.assertEqual(domains.Domain.FromBitstrings(["000", "011"]), d)

    def testNonBinary( self ):
        d = domains.ParseDomainLines(["0,2,1", "1,0,0"])
        self.assertEqual(((0, 1), (0, 2), (0, 1)), d.alphabets)
        declared = domains.ParseDomainLines(["alphabets 0,1,2 | 0,1 | 0,1", "2,0,1"])
        self.assertEqual(((0, 1, 2), (0, 1), (0, 1)), declared.alphabets)

    def testErrors( self ):
        self.assertRaises(ParseError, domains.ParseDomainLines, ["012x"])
        self.assertRaises(ParseError, domains.ParseDomainLines, ["# nothing"])
        self.assertRaises(ParseError, domains.ParseDomainLines, ["000", "000"])
        self.assertRaises(ParseError, domains.ParseDomainLines, ["alphabets 0,1 | 0,1", "000"])

    def testFormat( self ):
        d = domains.Domain.FromBitstrings(["000", "101"])
        self.assertEqual("000\n101\n", domains.FormatDomain(d))
        self.assertEqual(d, domains.ParseDomainLines(domains.FormatDomain(d).splitlines()))
        nb = domains.Domain(((0, 1, 2), (0, 1), (0, 1)), [(2, 0, 1)])
        self.assertEqual(nb, domains.ParseDomainLines(domains.FormatDomain(nb).splitlines()))



if __name__ == "__main__":
    unittest.main()
