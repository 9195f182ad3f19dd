#!/usr/bin/env python3

"""Unit tests for threeshare/datautils.py"""

import io
import math
import unittest
from fractions import Fraction

from threeshare import datautils
from threeshare.datautils import ParseError


class DataLinesCheck( unittest.TestCase ):
    def testSkipsCommentsAndBlanks( self ):
        lines = ["# header\n", "\n", "000  # first\n", "  011\n"]
        self.assertEqual([(3, "000"), (4, "011")], datautils.DataLinesFromText(lines))


class ParseNumbersCheck( unittest.TestCase ):
    def testParseSymbol( self ):
        self.assertEqual(2, datautils.ParseSymbol(" 2 "))
        self.assertEqual("a", datautils.ParseSymbol("a"))

    def testParseProbability( self ):
        self.assertEqual(Fraction(1, 3), datautils.ParseProbability("1/3"))
        self.assertEqual(Fraction(1, 4), datautils.ParseProbability("0.25"))
        self.assertEqual(Fraction(1), datautils.ParseProbability("1"))
        self.assertRaises(ParseError, datautils.ParseProbability, "x")
        self.assertRaises(ParseError, datautils.ParseProbability, "1/0")
        self.assertRaises(ParseError, datautils.ParseProbability, "3/2")
        self.assertRaises(ParseError, datautils.ParseProbability, "-1/2")

    def testToFraction( self ):
        self.assertEqual(Fraction(1, 1000000), datautils.ToFraction(1e-6))
        self.assertEqual(Fraction(1, 12), datautils.ToFraction(Fraction(1, 12)))
        self.assertEqual(Fraction(3), datautils.ToFraction(3))


class SymbolicCheck( unittest.TestCase ):
    def testSymbolicLog2( self ):
        self.assertEqual("0", datautils.SymbolicLog2(1))
        self.assertEqual("1", datautils.SymbolicLog2(2))
        self.assertEqual("3", datautils.SymbolicLog2(8))
        self.assertEqual("log2(6)", datautils.SymbolicLog2(6))
        self.assertRaises(ValueError, datautils.SymbolicLog2, 0)

    def testSymbolicValue( self ):
        self.assertEqual(3.0, datautils.SymbolicValue("3"))
        self.assertAlmostEqual(math.log2(6), datautils.SymbolicValue("log2(6)"), places=12)
        self.assertAlmostEqual(2.584963, datautils.SymbolicValue("log2(6)"), places=6)


class ListDataFrameCheck( unittest.TestCase ):
    def setUp( self ):
        self.frame = datautils.ListDataFrame.Empty(["family", "value"], formats={"value": "%.3f"})
        self.frame.AddRow([11, math.log2(6)])
        self.frame.AddRow([14, 3.0])

    def testColumns( self ):
        self.assertEqual(2, len(self.frame))
        self.assertEqual([11, 14], self.frame["family"])
        self.assertEqual([11, 14], self.frame[0])

    def testAddRowLength( self ):
        self.assertRaises(TypeError, self.frame.AddRow, [1])

    def testBadInput( self ):
        self.assertRaises(TypeError, datautils.ListDataFrame, "not a list")
        self.assertRaises(TypeError, datautils.ListDataFrame, ["not", "columns"])

    def testWriteTsv( self ):
        out = io.StringIO()
        self.frame.Write(out, tsv=True)
        lines = out.getvalue().splitlines()
        self.assertEqual("family\tvalue", lines[0])
        self.assertEqual("11\t2.585", lines[1])
        self.assertEqual("14\t3.000", lines[2])

    def testWriteText( self ):
        out = io.StringIO()
        self.frame.Write(out)
        text = out.getvalue()
        self.assertIn("family", text)
        self.assertIn("2.585", text)



if __name__ == "__main__":
    unittest.main()
