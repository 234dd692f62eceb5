"""
Dim subcommand - closure dimension with witness.
"""

from limitgen.cmd.limitgen.subcommands import EXIT_OK
from limitgen.cmd.limitgen.subcommands.common import build_config
from limitgen.pkg.closure import dimension_for
from limitgen.pkg.universe import read_collection


def cmd_dim(args) -> int:
    config = build_config(max_size=args.max_size, pool_depth=args.pool_depth)
    collection = read_collection(args.collection)
    if args.noise < 0:
        raise ValueError(f"noise level must be nonnegative: {args.noise}")
    report = dimension_for(collection, args.noise, config.max_size, config.pool_depth_for(args.noise))
    for line in report.to_lines():
        print(line)
    return EXIT_OK
