#!/usr/bin/env python3

"""Unit tests for threeshare/certifier.py"""

import math
import unittest

import pytest
from hypothesis import given, strategies as st

from threeshare import certifier, domains, schemes
from threeshare.datautils import BudgetExceededError, SchemeError, DomainError


triples = st.tuples(*(st.integers(min_value=0, max_value=5),) * 3)
parties = st.integers(min_value=0, max_value=2)
transforms = st.sampled_from(domains.ALL_TRANSFORMS)


def Bits( *strings ):
    return domains.Domain.FromBitstrings(strings)

parity = Bits("000", "011", "101", "110")
family13 = Bits("000", "001", "010", "111")
family14 = Bits("000", "010", "100", "101")



class ProjectionCheck( unittest.TestCase ):
    def testViews( self ):
        t = ("a", "b", "c")
        self.assertEqual(("a", "c"), certifier.ProjectTriple(t, 0))
        self.assertEqual(("b", "a"), certifier.ProjectTriple(t, 1))
        self.assertEqual(("c", "b"), certifier.ProjectTriple(t, 2))

    @given(triples, parties)
    def testRebuild( self, t, party ):
        pair = certifier.ProjectTriple(t, party)
        free = t[certifier.FREE_COORD[party]]
        self.assertEqual(t, certifier._TripleFromPair(pair, party, free))


class StructureCheck( unittest.TestCase ):
    def testCanonicalSchemes( self ):
        for schemeId in range(1, 6):
            scheme = schemes.CanonicalScheme(schemeId)
            structure = certifier.ExtractStructure(scheme)
            self.assertEqual(len(scheme.randomness), structure.cap)
            self.assertTrue(certifier.CheckStructure(structure).passed)
            # symbols per coordinate stay within the search's alphabet cap
            for c in range(3):
                symbols = set(t[c] for M in structure.sets for t in M)
                self.assertLessEqual(len(symbols), len(scheme.domain) * structure.cap)

    def testAssignedSchemes( self ):
        for familyId in range(1, domains.N_FAMILIES + 1):
            structure = certifier.ExtractStructure(schemes.AssignedScheme(familyId))
            self.assertTrue(certifier.CheckStructure(structure).passed)

    def testUnverifiedScheme( self ):
        bad = schemes.CanonicalScheme(3, Bits("000", "100"), strict=False)
        self.assertRaises(SchemeError, certifier.ExtractStructure, bad)

    def testViolations( self ):
        d = Bits("000")
        check = certifier.CheckStructure(certifier.SupportStructure(d, [set()], 1))
        self.assertFalse(check.passed)
        self.assertEqual("M_000 is empty", check.violation)
        check = certifier.CheckStructure(certifier.SupportStructure(d, [{(0, 0, 0), (1, 1, 1)}], 1))
        self.assertIn("exceeds the cap", check.violation)
        check = certifier.CheckStructure(certifier.SupportStructure(Bits("000", "011"), [{(0, 0, 0)}, {(1, 1, 1)}], 1))
        self.assertTrue(check.violation.startswith("privacy"))
        check = certifier.CheckStructure(certifier.SupportStructure(Bits("000", "100"), [{(0, 0, 0)}, {(0, 0, 0)}], 1))
        self.assertTrue(check.violation.startswith("separation"))

    def testSetOf( self ):
        s = certifier.SupportStructure(Bits("000", "011"), [{(0, 0, 0)}, {(0, 1, 0)}], 1)
        self.assertEqual(frozenset([(0, 1, 0)]), s.SetOf((0, 1, 1)))
        self.assertRaises(DomainError, certifier.SupportStructure, Bits("000", "011"), [{(0, 0, 0)}], 1)


class SearchCheck( unittest.TestCase ):
    def testSingleton( self ):
        verdict = certifier.Search(Bits("000"), 1)
        self.assertTrue(verdict.feasible)
        self.assertTrue(certifier.CheckStructure(verdict.witness).passed)

    def testParity( self ):
        verdict = certifier.Search(parity, 1)
        self.assertEqual(certifier.INFEASIBLE, verdict.status)
        self.assertIsNone(verdict.witness)
        verdict = certifier.Search(parity, 2)
        self.assertTrue(verdict.feasible)
        self.assertEqual(2, verdict.cap)
        self.assertTrue(certifier.CheckStructure(verdict.witness).passed)
        self.assertTrue(all(len(M) <= 2 for M in verdict.witness.sets))

    def testSmallFamilies( self ):
        edge = Bits("000", "001")
        self.assertFalse(certifier.Search(edge, 1).feasible)
        self.assertTrue(certifier.Search(edge, 2).feasible)
        path = Bits("000", "001", "010")
        self.assertEqual(certifier.INFEASIBLE, certifier.Search(path, 3).status)
        verdict = certifier.Search(path, 4)
        self.assertTrue(verdict.feasible)
        self.assertTrue(certifier.CheckStructure(verdict.witness).passed)

    def testBadCap( self ):
        self.assertRaises(ValueError, certifier.Search, parity, 0)

    def testSymbolCap( self ):
        engine = certifier._SupportSearch(family13, 5, 100)
        self.assertEqual(20, engine.symbolCap)

    @given(transforms)
    def testSymmetryInvariance( self, t ):
        image = domains.ApplyTransform(parity, t)
        self.assertEqual(certifier.INFEASIBLE, certifier.Search(image, 1).status)
        self.assertEqual(certifier.FEASIBLE, certifier.Search(image, 2).status)

    def testBudget( self ):
        verdict = certifier.Search(family13, 5, budget=10)
        self.assertEqual(certifier.UNDECIDED, verdict.status)
        self.assertFalse(verdict.decided)
        self.assertRaises(BudgetExceededError, certifier.CertifiedLowerBound, family13, 6, 10)

    def testWorkers( self ):
        verdict = certifier.Search(parity, 2, workers=2)
        self.assertTrue(verdict.feasible)
        self.assertEqual(2, verdict.workers)
        self.assertTrue(certifier.CheckStructure(verdict.witness).passed)
        self.assertEqual(certifier.INFEASIBLE, certifier.Search(parity, 1, workers=2).status)

    def testWitnessFormat( self ):
        verdict = certifier.Search(parity, 2)
        lines = certifier.FormatWitness(verdict.witness).splitlines()
        self.assertEqual(4, len(lines))
        self.assertTrue(lines[0].startswith("000 : (A0,B0,C0)"))
        self.assertTrue(lines[3].startswith("110 : "))

    @pytest.mark.slow
    def testFamily13( self ):
        self.assertEqual(certifier.INFEASIBLE, certifier.Search(family13, 5).status)
        verdict = certifier.Search(family13, 6)
        self.assertTrue(verdict.feasible)
        self.assertTrue(certifier.CheckStructure(verdict.witness).passed)

    @pytest.mark.slow
    def testFamily14( self ):
        self.assertEqual(certifier.INFEASIBLE, certifier.Search(family14, 7).status)
        verdict = certifier.Search(family14, 8)
        self.assertTrue(verdict.feasible)
        self.assertTrue(certifier.CheckStructure(verdict.witness).passed)


class CertifiedLowerBoundCheck( unittest.TestCase ):
    def testParity( self ):
        records = []
        self.assertEqual(1.0, certifier.CertifiedLowerBound(parity, kMax=4, records=records))
        self.assertEqual([(1, certifier.INFEASIBLE), (2, certifier.FEASIBLE)],
                            [(r.cap, r.status) for r in records])
        self.assertEqual(8, records[0].familyId)

    def testAllInfeasible( self ):
        self.assertAlmostEqual(math.log2(2), certifier.CertifiedLowerBound(parity, kMax=1), places=12)

    @pytest.mark.slow
    def testBelowSchemes( self ):
        for familyId in range(1, domains.N_FAMILIES + 1):
            scheme = schemes.AssignedScheme(familyId)
            lower = certifier.CertifiedLowerBound(scheme.domain, kMax=2)
            self.assertLessEqual(lower, schemes.RandomnessComplexity(scheme) + 1e-12)



if __name__ == "__main__":
    unittest.main()
