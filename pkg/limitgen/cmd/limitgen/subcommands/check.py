"""
Check subcommand - run the randomized property suites.
"""

from limitgen.cmd.limitgen.subcommands import EXIT_OK, EXIT_PROPERTY_FAILURE
from limitgen.cmd.limitgen.subcommands.common import build_config
from limitgen.internal.checks import SuiteRunner


def cmd_check(args) -> int:
    """Run one suite (or all of them) and print the tallies."""
    runner = SuiteRunner(build_config())
    if args.list:
        for name in runner.list_suites():
            print(f"  - {name}")
        return EXIT_OK

    report = runner.run_suite(args.suite, args.trials, args.seed)
    for line in report.to_lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_PROPERTY_FAILURE
