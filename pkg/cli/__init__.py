"""Command-line front end: script language, JSON documents, subcommands and verify-paper checks."""
