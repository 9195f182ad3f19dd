# Shared helpers for threeshare: exception classes, reading of the line-based
# text formats (domains, schemes, pmfs), exact number parsing, and a small
# column-oriented report class that renders through astropy.table.

# Licensed under a 3-clause BSD style license - see LICENSE.rst

import math
from fractions import Fraction

import numpy as np
from astropy.table import Table


error1 = "Input to ListDataFrame should be a list of lists or list of numpy arrays"
error2 = "Row has %d values but ListDataFrame has %d columns"


class ParseError(ValueError):
	"""Malformed domain, scheme or pmf text."""
	pass

class DomainError(ValueError):
	"""Invalid domain, or a transform that cannot act on a domain."""
	pass

class PmfError(ValueError):
	"""Invalid probability mass function or information-measure argument."""
	pass

class SchemeError(ValueError):
	"""Invalid scheme table or scheme-construction request."""
	pass

class MarginConstraintError(ValueError):
	"""A distribution triple violates the margin constraints of a bound."""
	pass

class EpsilonRangeError(ValueError):
	"""Perturbation parameter outside an epsilon family's validity range."""
	pass

class BudgetExceededError(RuntimeError):
	"""Support search ran out of nodes before reaching a verdict."""
	pass



def DataLinesFromText( textLines, skip="#" ):
	dataLines = []
	for i, line in enumerate(textLines):
		text = line.strip()
		if len(text) == 0 or text[0] in skip:
			continue
		for commentChar in skip:
			if commentChar in text:
				text = text.split(commentChar)[0].strip()
		dataLines.append((i + 1, text))
	return dataLines


def ParseSymbol( text ):
	"""Symbols made only of decimal digits become ints; anything else stays
	a string."""
	text = text.strip()
	if text.isdigit():
		return int(text)
	return text


def ParseProbability( text, sourceName="<text>", lineNumber=0 ):
	"""Parses "p/q", an integer, or a decimal string into an exact Fraction."""
	try:
		value = Fraction(text.strip())
	except (ValueError, ZeroDivisionError):
		msg = "%s, line %d: cannot parse probability \"%s\"" % (sourceName, lineNumber, text)
		raise ParseError(msg)
	if value < 0 or value > 1:
		msg = "%s, line %d: probability %s outside [0, 1]" % (sourceName, lineNumber, text)
		raise ParseError(msg)
	return value


def ToFraction( value ):
	"""Exact conversion used for epsilon values: floats go through their
	shortest decimal representation, so 1e-06 becomes 1/1000000."""
	if isinstance(value, Fraction):
		return value
	if isinstance(value, (int, np.integer)):
		return Fraction(int(value))
	return Fraction(repr(float(value)))


def SymbolicLog2( n ):
	"""Label for log2(n) bits: an integer string when n is a power of two,
	otherwise "log2(n)"."""
	n = int(n)
	if n < 1:
		msg = "log2 of %d is undefined" % n
		raise ValueError(msg)
	if n & (n - 1) == 0:
		return "%d" % (n.bit_length() - 1)
	return "log2(%d)" % n


def SymbolicValue( label ):
	"""Numeric value of a label produced by SymbolicLog2."""
	if label.startswith("log2(") and label.endswith(")"):
		return math.log2(int(label[5:-1]))
	return float(label)


def FormatSymbols( symbols, separator="," ):
	return separator.join(str(s) for s in symbols)



class ListDataFrame(object):
	"""A class designed to hold a 2D list array (a list of lists, each of the
	latter being "columns" and all having the same length), corresponding
	to a report table. Individual columns should have a single data type,
	but different columns can have different data types (e.g., one column can
	be strings, another integers, and a third floating point numbers).

	When indexed with one of the column names (e.g., obj["family"]), it acts
	like a dictionary and returns the corresponding column. When indexed
	with an integer or a slice, it acts like the underlying list of lists.

	Rows are appended with AddRow; the finished table is rendered through
	astropy.table, either as a fixed-width text table or as tab-separated
	values.
	"""

	def __init__(self, dataList, columnNames=None, formats=None):
		if type(dataList) != list:
			raise TypeError(error1)
		if len(dataList) > 0 and type(dataList[0]) not in [list, np.ndarray]:
			raise TypeError(error1)
		self.data = dataList
		self.colNames = columnNames
		self.formats = formats if formats is not None else {}
		self.dict = {}

		self.nCols = len(dataList)
		if self.colNames is not None:
			self.SetColumns(columnNames)

	@classmethod
	def Empty( cls, columnNames, formats=None ):
		return cls([[] for name in columnNames], columnNames, formats=formats)

	def __getitem__(self, key):
		"""Indexing with strings accesses the column-name dictionary;
		indexing with anything else is passed on to the data array.
		"""
		if type(key) is str:
			return self.dict[key]
		else:
			return self.data[key]

	def __len__(self):
		if self.nCols == 0:
			return 0
		return len(self.data[0])

	def __str__(self):
		return "\n".join(self.ToTable().pformat(max_lines=-1, max_width=-1))

	def SetColumns(self, columnNames):
		"""Define the column names (dictionary keys pointing to columns
		within the data frame). Erases previous column-name definitions.
		"""
		self.dict = {}
		for i in range(self.nCols):
			try:
				self.dict[columnNames[i]] = self.data[i]
			except IndexError:
				pass
		self.colNames = list(columnNames)

	def AddRow(self, rowValues):
		if len(rowValues) != self.nCols:
			raise TypeError(error2 % (len(rowValues), self.nCols))
		for i in range(self.nCols):
			self.data[i].append(rowValues[i])

	def ToTable(self):
		"""Returns the frame as an astropy Table, with per-column formats
		applied."""
		names = self.colNames
		if names is None:
			names = ["col%d" % i for i in range(self.nCols)]
		theTable = Table([list(column) for column in self.data], names=names)
		for colName, fmt in self.formats.items():
			if colName in theTable.colnames:
				theTable[colName].format = fmt
		return theTable

	def Write(self, outStream, tsv=False):
		"""Writes the table to an open text stream: tab-separated values with
		a header line if tsv is True, otherwise a fixed-width text table."""
		theTable = self.ToTable()
		if tsv:
			theTable.write(outStream, format="ascii.tab")
		else:
			theTable.write(outStream, format="ascii.fixed_width_two_line")
