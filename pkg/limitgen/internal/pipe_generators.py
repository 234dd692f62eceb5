"""
Built-in generators behind the pipe protocol.

    python -m limitgen.internal.pipe_generators fresh-column [--offset N]
    python -m limitgen.internal.pipe_generators closure --collection FILE --noise I

Each request line ``history (c,k) ...`` is answered with one ``(c,k)`` line.
"""

import argparse
import sys
from typing import List, Optional, TextIO

from limitgen.internal.synthetic import FreshColumnGenerator
from limitgen.pkg.core.protocols import GeneratorProtocol
from limitgen.pkg.generators import ClosureGenerator
from limitgen.pkg.universe import parse_elements, read_collection


def serve(generator: GeneratorProtocol, stdin: TextIO, stdout: TextIO) -> int:
    """Answer requests until end of input; returns the number answered."""
    answered = 0
    for line in stdin:
        head, _, rest = line.strip().partition(" ")
        if head != "history":
            print(f"malformed request: {line.strip()!r}", file=sys.stderr)
            return answered
        answer = generator.query(parse_elements(rest))
        stdout.write(f"{answer}\n")
        stdout.flush()
        answered += 1
    return answered


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Serve a built-in generator over stdin/stdout")
    subparsers = parser.add_subparsers(dest="kind", required=True)

    fresh_parser = subparsers.add_parser("fresh-column", help="Fresh column per history length")
    fresh_parser.add_argument("--offset", type=int, default=100)

    closure_parser = subparsers.add_parser("closure", help="Closure generator over a collection file")
    closure_parser.add_argument("--collection", required=True)
    closure_parser.add_argument("--noise", type=int, required=True)

    args = parser.parse_args(argv)
    if args.kind == "fresh-column":
        generator = FreshColumnGenerator(args.offset)
    else:
        generator = ClosureGenerator(read_collection(args.collection), args.noise)
    serve(generator, sys.stdin, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
