"""Subcommands of the command-line tool, one module per command."""
