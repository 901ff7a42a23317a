# Third Party Library
import sybil
import sybil.parsers.codeblock
import sybil.parsers.doctest

pytest_collect_file = sybil.Sybil(
    parsers=[
        sybil.parsers.doctest.DocTestParser(),
        sybil.parsers.codeblock.PythonCodeBlockParser(),
    ],
    pattern="*.rst",
    fixtures=[],
).pytest()
