#!/usr/bin/env python3

"""Unit tests for threeshare/infotheory.py"""

import math
import os
import unittest
from fractions import Fraction

from hypothesis import given, assume, strategies as st

import threeshare
from threeshare import infotheory
from threeshare.datautils import PmfError, ParseError


dataDir = os.path.join(os.path.dirname(threeshare.__file__), "data")

third = Fraction(1, 3)
sixth = Fraction(1, 6)
# log2(3) - 4/3
triangleMI = math.log2(3) - 4.0/3.0


def TrianglePmf():
    return infotheory.UniformPmf(["X", "Y"], [(0, 0), (0, 1), (1, 0)])

def XorPmf():
    return infotheory.UniformPmf(["X", "Y", "Z"], [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)])

def BlockPmf():
    # X = (A, B), Y = (A, C) with A a uniform bit and (B, C) the triangle
    weights = {}
    for a in (0, 1):
        for b, c in [(0, 0), (0, 1), (1, 0)]:
            weights[((a, b), (a, c))] = sixth
    return infotheory.JointPmf(["X", "Y"], weights)


# small exact pmfs on a 2x3 table
tables = st.lists(st.integers(min_value=0, max_value=4), min_size=6, max_size=6)

def TablePmf( counts, names=("X", "Y") ):
    total = sum(counts)
    weights = {(i // 3, i % 3): Fraction(n, total) for i, n in enumerate(counts)}
    return infotheory.JointPmf(names, weights)



class JointPmfCheck( unittest.TestCase ):
    def testExactAndFloat( self ):
        self.assertTrue(TrianglePmf().IsExact())
        p = infotheory.JointPmf(["X"], {(0,): 0.5, (1,): 0.5})
        self.assertFalse(p.IsExact())
        self.assertEqual(0.5, p[(1,)])
        self.assertEqual(0, p[(2,)])

    def testZeroWeightsDropped( self ):
        p = infotheory.JointPmf(["X"], {(0,): Fraction(1), (1,): Fraction(0)})
        self.assertEqual(1, len(p))
        self.assertEqual(((0,),), p.alphabets)

    def testBadWeights( self ):
        self.assertRaises(PmfError, infotheory.JointPmf, ["X"], {(0,): third, (1,): third})
        self.assertRaises(PmfError, infotheory.JointPmf, ["X"], {(0,): 0.5, (1,): 0.4})
        self.assertRaises(PmfError, infotheory.JointPmf, ["X"], {(0,): Fraction(3, 2), (1,): Fraction(-1, 2)})
        self.assertRaises(PmfError, infotheory.JointPmf, ["X", "X"], {(0, 0): 1})
        self.assertRaises(PmfError, infotheory.JointPmf, ["X"], {(0, 0): 1})
        self.assertRaises(PmfError, infotheory.JointPmf, ["X"], {(2,): 1}, alphabets=[(0, 1)])

    def testMarginal( self ):
        m = TrianglePmf().Marginal("X")
        self.assertEqual({(0,): Fraction(2, 3), (1,): third}, m)
        self.assertEqual(TrianglePmf(), TrianglePmf().MarginalPmf(["X", "Y"]))
        self.assertRaises(PmfError, TrianglePmf().Marginal, "Z")

    def testFloatSupport( self ):
        p = infotheory.JointPmf(["X"], {(0,): 1 - 1e-13, (1,): 1e-13})
        self.assertEqual([(0,)], p.Support())
        self.assertEqual(2, len(p.Support(threshold=0.0)))


class EntropyCheck( unittest.TestCase ):
    def testSimpleValues( self ):
        bit = infotheory.UniformPmf(["X"], [(0,), (1,)])
        point = infotheory.UniformPmf(["X"], [(0,)])
        self.assertAlmostEqual(1.0, infotheory.Entropy(bit), places=12)
        self.assertEqual(0.0, infotheory.Entropy(point))
        self.assertAlmostEqual(math.log2(3), infotheory.Entropy(TrianglePmf()), places=12)
        self.assertEqual(0.0, infotheory.Entropy(TrianglePmf(), ()))

    def testConditional( self ):
        p = TrianglePmf()
        self.assertAlmostEqual(2.0/3.0, infotheory.ConditionalEntropy(p, "X", "Y"), places=12)
        self.assertAlmostEqual(infotheory.Entropy(p, "X"), infotheory.ConditionalEntropy(p, "X"), places=12)
        self.assertRaises(PmfError, infotheory.ConditionalEntropy, p, "X", "X")

    def testMutualInformation( self ):
        self.assertAlmostEqual(triangleMI, infotheory.MutualInformation(TrianglePmf(), "X", "Y"), places=9)
        self.assertAlmostEqual(0.251629, infotheory.MutualInformation(TrianglePmf(), "X", "Y"), places=6)
        p = XorPmf()
        self.assertAlmostEqual(0.0, infotheory.MutualInformation(p, "X", "Y"), places=12)
        self.assertAlmostEqual(1.0, infotheory.ConditionalMutualInformation(p, "X", "Y", "Z"), places=12)

    def testExactPredicates( self ):
        p = XorPmf()
        self.assertTrue(infotheory.IsFunctionOf(p, "Z", ("X", "Y")))
        self.assertFalse(infotheory.IsFunctionOf(p, "X", "Z"))
        self.assertTrue(infotheory.IsConditionallyIndependent(p, "X", "Y"))
        self.assertFalse(infotheory.IsConditionallyIndependent(p, "X", "Y", "Z"))
        self.assertFalse(infotheory.IsConditionallyIndependent(TrianglePmf(), "X", "Y"))

    def testBinaryEntropy( self ):
        self.assertAlmostEqual(1.0, infotheory.BinaryEntropy(0.5), places=12)
        self.assertEqual(0.0, infotheory.BinaryEntropy(0))
        self.assertEqual(0.0, infotheory.BinaryEntropy(1))
        self.assertAlmostEqual(math.log2(3) - 2.0/3.0, infotheory.BinaryEntropy(third), places=12)
        self.assertRaises(PmfError, infotheory.BinaryEntropy, 1.5)

    @given(tables)
    def testChainRule( self, counts ):
        assume(sum(counts) > 0)
        p = TablePmf(counts)
        joint = infotheory.Entropy(p)
        self.assertAlmostEqual(joint, infotheory.Entropy(p, "Y") + infotheory.ConditionalEntropy(p, "X", "Y"), places=9)
        self.assertGreaterEqual(infotheory.MutualInformation(p, "X", "Y"), 0.0)


class CommonInformationCheck( unittest.TestCase ):
    def testTriangleConnected( self ):
        p = TrianglePmf()
        graph = infotheory.CharacteristicComponents(p, "X", "Y")
        self.assertEqual(1, graph.nComponents)
        self.assertEqual(3, len(graph.edges))
        self.assertEqual(0.0, infotheory.GKCommonInformation(p, "X", "Y"))
        self.assertAlmostEqual(triangleMI, infotheory.ResidualInformation(p, "X", "Y"), places=9)

    def testCopy( self ):
        p = infotheory.UniformPmf(["X", "Y"], [(0, 0), (1, 1)])
        self.assertEqual(2, infotheory.CharacteristicComponents(p, "X", "Y").nComponents)
        self.assertAlmostEqual(1.0, infotheory.GKCommonInformation(p, "X", "Y"), places=12)
        self.assertAlmostEqual(0.0, infotheory.ResidualInformation(p, "X", "Y"), places=12)

    def testIndependent( self ):
        p = infotheory.UniformPmf(["X", "Y"], [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(0.0, infotheory.GKCommonInformation(p, "X", "Y"))
        self.assertAlmostEqual(0.0, infotheory.ResidualInformation(p, "X", "Y"), places=12)

    def testBlocks( self ):
        p = BlockPmf()
        graph = infotheory.CharacteristicComponents(p, "X", "Y")
        self.assertEqual(2, graph.nComponents)
        self.assertEqual(0, graph.leftComponent[((0, 0),)])
        self.assertAlmostEqual(1.0, infotheory.GKCommonInformation(p, "X", "Y"), places=12)
        self.assertAlmostEqual(1.0 + triangleMI, infotheory.MutualInformation(p, "X", "Y"), places=9)
        self.assertAlmostEqual(triangleMI, infotheory.ResidualInformation(p, "X", "Y"), places=9)

    @given(tables)
    def testResidualBounds( self, counts ):
        assume(sum(counts) > 0)
        p = TablePmf(counts)
        mi = infotheory.MutualInformation(p, "X", "Y")
        ri = infotheory.ResidualInformation(p, "X", "Y")
        self.assertGreaterEqual(ri, 0.0)
        self.assertLessEqual(ri, mi)


class TensorizationCheck( unittest.TestCase ):
    def testAxisNames( self ):
        q = infotheory.Product(TrianglePmf(), TrianglePmf())
        self.assertEqual(("X", "Y", "X_2", "Y_2"), q.axes)
        self.assertTrue(q.IsExact())

    @given(tables, tables)
    def testAdditivity( self, countsA, countsB ):
        assume(sum(countsA) > 0 and sum(countsB) > 0)
        p = TablePmf(countsA)
        q = TablePmf(countsB)
        pq = infotheory.Product(p, q)
        both = (("X", "X_2"), ("Y", "Y_2"))
        self.assertAlmostEqual(infotheory.ResidualInformation(p, "X", "Y") + infotheory.ResidualInformation(q, "X", "Y"),
                                infotheory.ResidualInformation(pq, *both), places=9)
        self.assertAlmostEqual(infotheory.ConditionalEntropy(p, "X", "Y") + infotheory.ConditionalEntropy(q, "X", "Y"),
                                infotheory.ConditionalEntropy(pq, both[0], both[1]), places=9)


class PmfTextCheck( unittest.TestCase ):
    def testReadFile( self ):
        p = infotheory.ReadPmfFile(os.path.join(dataDir, "triangle.pmf"))
        self.assertEqual(TrianglePmf(), p)
        self.assertEqual(((0, 1), (0, 1)), p.alphabets)

    def testRoundTrip( self ):
        p = TrianglePmf()
        text = infotheory.FormatPmf(p, declareAlphabets=True)
        self.assertEqual(p, infotheory.ParsePmfLines(text.splitlines()))

    def testErrors( self ):
        self.assertRaises(ParseError, infotheory.ParsePmfLines, ["0 0 1"])
        self.assertRaises(ParseError, infotheory.ParsePmfLines, ["axes X Y", "0 1"])
        self.assertRaises(ParseError, infotheory.ParsePmfLines, ["axes X", "0 1/2"])
        self.assertRaises(ParseError, infotheory.ParsePmfLines, ["axes X", "0 1/2", "0 1/2"])
        self.assertRaises(ParseError, infotheory.ParsePmfLines, ["axes X Y", "alphabet X 0 1", "0 0 1"])



if __name__ == "__main__":
    unittest.main()
