#!/usr/bin/env python3

"""Unit tests for threeshare/cli.py"""

import io
import os
import unittest

import pytest

import threeshare
from threeshare import cli


dataDir = os.path.join(os.path.dirname(threeshare.__file__), "data")


def DataFile( name ):
    return os.path.join(dataDir, name)

def RunCommand( *argv ):
    out = io.StringIO()
    code = cli.Run(list(argv), out)
    return code, out.getvalue()



class DomainCommandsCheck( unittest.TestCase ):
    def testFamilies( self ):
        code, text = RunCommand("families", "--tsv")
        self.assertEqual(cli.EXIT_OK, code)
        lines = text.splitlines()
        self.assertEqual(22, len(lines))
        self.assertTrue(lines[0].startswith("family\trepresentative"))
        self.assertTrue(lines[21].startswith("21\t"))

    def testClassify( self ):
        code, text = RunCommand("classify", DataFile("star.dom"), "--tsv")
        self.assertEqual(cli.EXIT_OK, code)
        fields = text.splitlines()[1].split("\t")
        self.assertEqual("11", fields[1])
        self.assertEqual("log2(6)", fields[3])


class VerifyCommandCheck( unittest.TestCase ):
    def testPass( self ):
        code, text = RunCommand("verify", DataFile("scheme5.scheme"))
        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn("randomness: |R| = 6, rho = log2(6) (2.584963)", text)
        self.assertIn("verdict: pass", text)

    def testFail( self ):
        code, text = RunCommand("verify", DataFile("scheme3_offparity.scheme"))
        self.assertEqual(cli.EXIT_FAILED, code)
        self.assertIn("verdict: FAIL", text)
        self.assertIn("counterexample: ", text)


class InformationCommandsCheck( unittest.TestCase ):
    def testResidualInformation( self ):
        code, text = RunCommand("ri", DataFile("triangle.pmf"), "--axes", "X", "Y")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual("0.251629", text.strip())

    def testResidualInformationAxes( self ):
        code, text = RunCommand("ri", DataFile("triangle.pmf"), "--axes", "X")
        self.assertEqual(cli.EXIT_PARSE, code)

    def testEntropy( self ):
        self.assertEqual("1.584963", RunCommand("entropy", DataFile("triangle.pmf"))[1].strip())
        self.assertEqual("0.918296", RunCommand("entropy", DataFile("triangle.pmf"), "--axes", "X")[1].strip())
        code, text = RunCommand("entropy", DataFile("triangle.pmf"), "--axes", "X", "--given", "Y")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual("0.666667", text.strip())


class BoundCommandsCheck( unittest.TestCase ):
    def testBound( self ):
        code, text = RunCommand("bound", "--family", "4", "--epsilon", "0.01", "--tsv")
        self.assertEqual(cli.EXIT_OK, code)
        lines = text.splitlines()
        self.assertEqual(2, len(lines))
        self.assertTrue(lines[1].startswith("4\t0.01\t"))

    def testCombinatorialFamily( self ):
        code, text = RunCommand("bound", "--family", "13")
        self.assertEqual(cli.EXIT_PARSE, code)
        code, text = RunCommand("sweep")
        self.assertEqual(cli.EXIT_PARSE, code)

    def testStarSweep( self ):
        code, text = RunCommand("sweep", "--star", "--eps-schedule", "0.01,0.001,0.0001")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn("published limit log2(6) (2.584963)", text)
        self.assertIn(", monotone", text)

    def testRhoTable( self ):
        code, text = RunCommand("rho-table", "--no-certify", "--tsv")
        lines = text.splitlines()
        self.assertEqual(22, len(lines))
        for familyId in (13, 14):
            fields = lines[familyId].split("\t")
            self.assertEqual(str(familyId), fields[0])
            self.assertEqual("combinatorial", fields[4])
            self.assertEqual("skipped", fields[-1])
        fields = lines[11].split("\t")
        self.assertEqual("log2(6)", fields[2])
        self.assertEqual("log2(6)", fields[5])


class CertifyCommandCheck( unittest.TestCase ):
    def testInfeasibleCap( self ):
        code, text = RunCommand("certify", DataFile("parity.dom"), "--cap", "1")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertTrue(text.startswith("cap 1: infeasible => rho >= 1 (1.000000) ["))

    def testFeasibleCap( self ):
        code, text = RunCommand("certify", DataFile("parity.dom"), "--cap", "2")
        self.assertEqual(cli.EXIT_OK, code)
        lines = text.splitlines()
        self.assertTrue(lines[0].startswith("cap 2: feasible ["))
        self.assertTrue(lines[0].endswith("witness checks"))
        self.assertEqual(5, len(lines))

    def testCapSequence( self ):
        code, text = RunCommand("certify", DataFile("parity.dom"), "--k-max", "3")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn("rho >= 1\n", text)

    def testBudget( self ):
        code, text = RunCommand("certify", DataFile("family13.dom"), "--cap", "5", "--budget", "10")
        self.assertEqual(cli.EXIT_BUDGET, code)
        self.assertIn("undecided", text)
        code, text = RunCommand("certify", DataFile("family13.dom"), "--budget", "10")
        self.assertEqual(cli.EXIT_BUDGET, code)

    @pytest.mark.slow
    def testFamily13( self ):
        code, text = RunCommand("certify", DataFile("family13.dom"), "--cap", "5")
        self.assertEqual(cli.EXIT_OK, code)
        self.assertTrue(text.startswith("cap 5: infeasible => rho >= log2(6) (2.584963) ["))


class ErrorsCheck( unittest.TestCase ):
    def testBadCommand( self ):
        self.assertEqual(cli.EXIT_PARSE, RunCommand("frobnicate")[0])
        self.assertEqual(cli.EXIT_PARSE, RunCommand()[0])

    def testMissingFile( self ):
        self.assertEqual(cli.EXIT_PARSE, RunCommand("classify", DataFile("no_such.dom"))[0])

    def testWrongFileKind( self ):
        self.assertEqual(cli.EXIT_PARSE, RunCommand("classify", DataFile("triangle.pmf"))[0])



if __name__ == "__main__":
    unittest.main()
