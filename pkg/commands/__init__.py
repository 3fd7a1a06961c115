import argparse

from commands import curve_commands, hodge_commands, jet_commands, verify_commands


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodge-degree-zero",
        description="Exact Hodge integrals, W_g functions and degree-zero GW free energies of curves",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for module in (jet_commands, hodge_commands, curve_commands, verify_commands):
        module.register(subparsers)
    return parser


__all__ = ["build_parser"]
