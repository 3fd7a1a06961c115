import sys
from typing import List, Optional

from commands import build_parser
from middleware import AuditMiddleware
from models import CommandModel
from utils.exceptions import HodgeException

# argparse bookkeeping that is not a command option
RESERVED_ARGUMENTS = ("subcommand", "output_format", "handler")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one CLI command

    Returns:
        0 on success, 1 when a verification fails, 2 on usage or domain errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 2

    command = CommandModel(
        subcommand=args.subcommand,
        output_format=args.output_format,
        options={k: v for k, v in vars(args).items() if k not in RESERVED_ARGUMENTS},
    )
    handler = AuditMiddleware(args.handler)
    try:
        return handler(command)
    except HodgeException as e:
        sys.stderr.write(f"error: {e.detail}\n")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
